import os
import tempfile
import unittest

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from cases import TableTestCase
from usgt.graph import Graph
from usgt.graph import analysis
from usgt.graph import builtin
from usgt.graph import edgelist

random_graphs = st.builds(builtin.erdos_renyi,
                          st.integers(min_value=0, max_value=25),
                          st.sampled_from([0.0, 0.05, 0.1, 0.3, 0.7, 1.0]),
                          st.integers(min_value=0, max_value=10 ** 6))

# Small graphs get exhaustive oracles
small_graphs = st.builds(builtin.erdos_renyi,
                         st.integers(min_value=0, max_value=7),
                         st.sampled_from([0.2, 0.4, 0.6, 0.8]),
                         st.integers(min_value=0, max_value=10 ** 6))


def _adjacency(g):
    a = np.zeros((g.n_vertices, g.n_vertices), dtype=np.int64)
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1
    return a


def _reachability(g):
    # Row v marks the vertices reachable from v
    n = g.n_vertices
    r = (_adjacency(g) + np.eye(n, dtype=np.int64)) > 0
    for _ in range(max(n, 1).bit_length()):
        r = (r.astype(np.int64) @ r.astype(np.int64)) > 0
    return r


def _walk_distances(g, source):
    # The shortest path length is the shortest walk length
    n = g.n_vertices
    a = _adjacency(g)
    dist = [-1] * n
    dist[source] = 0
    walks = np.eye(n, dtype=np.int64)[source]
    for k in range(1, n):
        walks = (walks @ a > 0).astype(np.int64)
        for v in np.flatnonzero(walks):
            if dist[v] < 0:
                dist[v] = k
    return dist


def _has_odd_cycle(g):
    # A shortest odd closed walk is an odd cycle, of length <= N
    a = _adjacency(g)
    walks = np.eye(g.n_vertices, dtype=np.int64)
    for k in range(1, g.n_vertices + 1):
        walks = ((walks @ a) > 0).astype(np.int64)
        if k % 2 == 1 and np.trace(walks) > 0:
            return True
    return False


class GraphTestCase(TableTestCase):

    def test_graph__init__(self):

        g = Graph(4, [(1, 0), (2, 3)])
        self.assertEqual(g.n_vertices, 4)
        self.assertEqual(g.n_edges, 2)
        self.assertEqual(g.edges, ((0, 1), (2, 3)))
        self.assertEqual(g.adjacency, ((1,), (0,), (3,), (2,)))
        self.assertEqual(g.degrees, (1, 1, 1, 1))
        self.assertEqual(len(g), 4)
        self.assertEqual(repr(g), "Graph(N=4, E=2)")
        self.assertEqual(Graph(0).n_vertices, 0)
        self.assertEqual(g, Graph(4, [(2, 3), (0, 1)]))
        self.assertEqual(hash(g), hash(Graph(4, [(3, 2), (1, 0)])))
        self.assertNotEqual(g, Graph(5, [(0, 1), (2, 3)]))

    def test_graph_invalid(self):

        test_data = {
            "Negative order": {
                "args": [-1],
                "expect": ValueError
            },
            "Float order": {
                "args": [2.0],
                "expect": ValueError
            },
            "Self-loop": {
                "args": [3, [(1, 1)]],
                "expect": ValueError
            },
            "Duplicate": {
                "args": [3, [(0, 1), (1, 0)]],
                "expect": ValueError
            },
            "Out of range": {
                "args": [3, [(0, 3)]],
                "expect": ValueError
            },
            "Negative endpoint": {
                "args": [3, [(-1, 2)]],
                "expect": ValueError
            },
            "Not a pair": {
                "args": [3, [(0, 1, 2)]],
                "expect": ValueError
            },
            "Float endpoint": {
                "args": [3, [(0, 1.0)]],
                "expect": ValueError
            }
        }
        self._run_cases(Graph, test_data)

    def test_graph_queries(self):

        g = builtin.star(3)
        self.assertEqual(g.degree(0), 3)
        self.assertEqual(g.neighbors(0), (1, 2, 3))
        self.assertTrue(g.has_edge(0, 2))
        self.assertTrue(g.has_edge(2, 0))
        self.assertFalse(g.has_edge(1, 2))
        self.assertFalse(g.has_edge(0, 9))


class BuiltinTestCase(TableTestCase):

    def test_generators(self):

        def counts(g):
            return g.n_vertices, g.n_edges

        test_data = {
            "Empty": {
                "args": [builtin.empty(5)],
                "expect": (5, 0)
            },
            "K1": {
                "args": [builtin.complete(1)],
                "expect": (1, 0)
            },
            "K5": {
                "args": [builtin.complete(5)],
                "expect": (5, 10)
            },
            "K3,4": {
                "args": [builtin.complete_bipartite(3, 4)],
                "expect": (7, 12)
            },
            "Star": {
                "args": [builtin.star(6)],
                "expect": (7, 6)
            },
            "P1": {
                "args": [builtin.path(1)],
                "expect": (1, 0)
            },
            "P4": {
                "args": [builtin.path(4)],
                "expect": (4, 3)
            },
            "C5": {
                "args": [builtin.cycle(5)],
                "expect": (5, 5)
            },
            "2K3 + K1": {
                "args": [builtin.theorem3_extremal_graph(3, 3, 1)],
                "expect": (7, 6)
            },
            "Union": {
                "args": [builtin.disjoint_union([builtin.path(3),
                                                 builtin.complete(3)])],
                "expect": (6, 5)
            },
            "Isolated": {
                "args": [builtin.add_isolated(builtin.complete(2), 2)],
                "expect": (4, 1)
            },
            "Added edge": {
                "args": [builtin.add_edge(builtin.empty(3), 0, 2)],
                "expect": (3, 1)
            }
        }
        self._run_cases(counts, test_data)

    def test_generators_invalid(self):

        for make, args in ((builtin.complete, (0,)),
                           (builtin.complete_bipartite, (0, 3)),
                           (builtin.path, (0,)),
                           (builtin.cycle, (2,)),
                           (builtin.empty, (-1,)),
                           (builtin.theorem3_extremal_graph, (1, 2, 0)),
                           (builtin.theorem3_extremal_graph, (3, 1, 2)),
                           (builtin.erdos_renyi, (5, 1.5, 0)),
                           (builtin.erdos_renyi, (5, 0.5, "x")),
                           (builtin.add_edge, (builtin.path(3), 0, 1))):
            with self.assertRaises(ValueError, msg=make.__name__):
                make(*args)

    def test_from_edge_list(self):

        test_data = {
            "P3": {
                "args": [3, [(1, 0), (1, 2)]],
                "expect": builtin.path(3)
            },
            "Isolated": {
                "args": [3, []],
                "expect": builtin.empty(3)
            },
            "Self-loop": {
                "args": [2, [(1, 1)]],
                "expect": ValueError
            },
            "Duplicate": {
                "args": [2, [(0, 1), (1, 0)]],
                "expect": ValueError
            },
            "Out of range": {
                "args": [2, [(0, 2)]],
                "expect": ValueError
            }
        }
        self._run_cases(builtin.from_edge_list, test_data)

    def test_labelings(self):

        self.assertEqual(builtin.complete_bipartite(1, 2).edges,
                         ((0, 1), (0, 2)))
        self.assertEqual(builtin.cycle(3).edges, ((0, 1), (0, 2), (1, 2)))
        self.assertEqual(builtin.theorem3_extremal_graph(2, 3, 1).edges,
                         ((0, 1), (2, 3)))

    def test_erdos_renyi(self):

        a = builtin.erdos_renyi(20, 0.3, 42)
        self.assertEqual(a, builtin.erdos_renyi(20, 0.3, 42))
        self.assertEqual(builtin.erdos_renyi(10, 0.0, 0).n_edges, 0)
        self.assertEqual(builtin.erdos_renyi(10, 1.0, 0),
                         builtin.complete(10))
        self.assertEqual(builtin.erdos_renyi(0, 0.5, 1).n_vertices, 0)
        self.assertNotEqual(a, builtin.erdos_renyi(20, 0.3, 43))


class AnalysisTestCase(TableTestCase):

    def test_component_stats(self):

        g = builtin.disjoint_union([builtin.path(3), builtin.empty(2),
                                    builtin.complete(2)])
        s = analysis.component_stats(g)
        self.assertEqual(s.c, 4)
        self.assertEqual(s.r, 2)
        self.assertEqual(s.sizes, (3, 1, 1, 2))
        self.assertEqual(s.component_id, (0, 0, 0, 1, 2, 3, 3))
        self.assertEqual(analysis.component_stats(Graph(0)).c, 0)
        self.assertTrue(analysis.is_connected(builtin.complete(1)))
        self.assertFalse(analysis.is_connected(builtin.empty(2)))

    def test_degree_stats(self):

        test_data = {
            "Empty order": {
                "args": [Graph(0)],
                "expect": (0, 0, ())
            },
            "Star": {
                "args": [builtin.star(3)],
                "expect": (3, 1, (3, 1, 1, 1))
            },
            "Isolated": {
                "args": [builtin.add_isolated(builtin.path(3))],
                "expect": (2, 0, (2, 1, 1, 0))
            }
        }
        self._run_cases(lambda g: tuple(analysis.degree_stats(g)),
                        test_data)

    def test_bipartite(self):

        test_data = {
            "Even cycle": {
                "args": [builtin.cycle(6)],
                "expect": True
            },
            "Odd cycle": {
                "args": [builtin.cycle(5)],
                "expect": False
            },
            "Edgeless": {
                "args": [builtin.empty(3)],
                "expect": True
            },
            "K3,3": {
                "args": [builtin.complete_bipartite(3, 3)],
                "expect": True
            },
            "Union with triangle": {
                "args": [builtin.disjoint_union([builtin.path(2),
                                                 builtin.complete(3)])],
                "expect": False
            }
        }
        self._run_cases(analysis.is_bipartite, test_data)
        ok, coloring = analysis.is_bipartite(builtin.path(4), witness=True)
        self.assertTrue(ok)
        self.assertEqual(coloring, (0, 1, 0, 1))
        self.assertEqual(analysis.is_bipartite(builtin.complete(3), True),
                         (False, None))

    def test_bfs_distances(self):

        g = builtin.add_isolated(builtin.path(5))
        self.assertEqual(analysis.bfs_distances(g, 0), [0, 1, 2, 3, 4, -1])
        self.assertEqual(analysis.bfs_distances(g, [0, 4]),
                         [0, 1, 2, 1, 0, -1])

    def test_detect_theorem3_extremal(self):

        test_data = {
            "2K3 + K1": {
                "args": [builtin.theorem3_extremal_graph(3, 3, 1)],
                "expect": 3
            },
            "K4": {
                "args": [builtin.complete(4)],
                "expect": 4
            },
            "K2 + K3": {
                "args": [builtin.disjoint_union([builtin.complete(2),
                                                 builtin.complete(3)])],
                "expect": None
            },
            "P4": {
                "args": [builtin.path(4)],
                "expect": None
            },
            "Edgeless": {
                "args": [builtin.empty(4)],
                "expect": None
            }
        }
        self._run_cases(analysis.detect_theorem3_extremal, test_data)

    @settings(max_examples=60, deadline=None)
    @given(random_graphs)
    def test_structure_oracle(self, g):

        n = g.n_vertices
        s = analysis.component_stats(g)
        reach = _reachability(g)
        self.assertEqual(s.c, len({tuple(row) for row in reach}))
        self.assertEqual(s.r, sum(1 for v in range(n) if g.degree(v) == 0))
        self.assertEqual(analysis.is_connected(g), s.c == 1)
        if n:
            self.assertEqual(analysis.bfs_distances(g, 0),
                             _walk_distances(g, 0))
        h = analysis.to_networkx(g)
        self.assertEqual((h.number_of_nodes(), h.number_of_edges()),
                         (n, g.n_edges))

    @settings(max_examples=150, deadline=None)
    @given(small_graphs)
    def test_bipartite_oracle(self, g):

        expect = not _has_odd_cycle(g)
        self.assertEqual(analysis.is_bipartite(g), expect)
        ok, coloring = analysis.is_bipartite(g, witness=True)
        self.assertEqual(ok, expect)
        if ok:
            self.assertTrue(all(coloring[u] != coloring[v]
                                for u, v in g.edges))
        else:
            self.assertIsNone(coloring)

    @settings(max_examples=40, deadline=None)
    @given(random_graphs, st.data())
    def test_component_monotonicity(self, g, data):

        # Adding an edge never increases the number of components
        missing = [(u, v) for u in range(g.n_vertices)
                   for v in range(u + 1, g.n_vertices)
                   if not g.has_edge(u, v)]
        if not missing:
            return
        u, v = data.draw(st.sampled_from(missing))
        # nor the number of isolated vertices
        before = analysis.component_stats(g)
        after = analysis.component_stats(builtin.add_edge(g, u, v))
        self.assertIn(before.c - after.c, (0, 1))
        self.assertIn(before.r - after.r, (0, 1, 2))


class EdgeListTestCase(TableTestCase):

    def test_parse(self):

        text = "# a comment\n\nN 4\n0 1\n# inner\n3 2\n"
        g, comments = edgelist.parse_edge_list(text)
        self.assertEqual(g, Graph(4, [(0, 1), (2, 3)]))
        self.assertEqual(comments, ["a comment", "inner"])

    def test_parse_errors(self):

        test_data = {
            "Missing header": {
                "args": ["0 1\n"],
                "expect": edgelist.EdgeListError
            },
            "Empty": {
                "args": [""],
                "expect": edgelist.EdgeListError
            },
            "Bad count": {
                "args": ["N four\n"],
                "expect": edgelist.EdgeListError
            },
            "Three fields": {
                "args": ["N 3\n0 1 2\n"],
                "expect": edgelist.EdgeListError
            },
            "Negative": {
                "args": ["N 3\n0 -1\n"],
                "expect": edgelist.EdgeListError
            },
            "Out of range": {
                "args": ["N 3\n0 3\n"],
                "expect": edgelist.EdgeListError
            },
            "Duplicate": {
                "args": ["N 3\n0 1\n1 0\n"],
                "expect": edgelist.EdgeListError
            },
            "Self-loop": {
                "args": ["N 3\n2 2\n"],
                "expect": edgelist.EdgeListError
            },
            "Plus sign": {
                "args": ["N 3\n+0 1\n"],
                "expect": edgelist.EdgeListError
            },
            "Signed count": {
                "args": ["N +3\n0 1\n"],
                "expect": edgelist.EdgeListError
            },
            "Underscore": {
                "args": ["N 30\n1_0 2\n"],
                "expect": edgelist.EdgeListError
            },
            "Non-ASCII digit": {
                "args": ["N 3\n0 \u0661\n"],
                "expect": edgelist.EdgeListError
            },
            "Leading zeros": {
                "args": ["N 03\n00 2\n"],
                "expect": Graph(3, [(0, 2)]),
                "assert": lambda r, e, msg=None: self.assertEqual(r[0], e,
                                                                  msg=msg)
            }
        }
        self._run_cases(edgelist.parse_edge_list, test_data)
        self.assertTrue(issubclass(edgelist.EdgeListError, ValueError))

    def test_format(self):

        g = builtin.path(3)
        self.assertEqual(edgelist.format_edge_list(g, ["P3"]),
                         "# P3\nN 3\n0 1\n1 2\n")
        self.assertEqual(edgelist.format_edge_list(Graph(2)), "N 2\n")

    def test_files(self):

        g = builtin.theorem3_extremal_graph(3, 2, 1)
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "g.txt")
            edgelist.write_edge_list(g, path, ["K3 + K1"])
            self.assertEqual(edgelist.read_edge_list(path), g)
            with open(path) as f:
                self.assertEqual(f.readline(), "# K3 + K1\n")
            with self.assertRaises(OSError):
                edgelist.read_edge_list(os.path.join(tmp, "missing.txt"))


if __name__ == "__main__":
    unittest.main()
