"""
Graphs' base class and the structural summary records.

"""

import bisect as _bisect
import collections as _coll
import numbers as _num


ComponentStats = _coll.namedtuple(
    "ComponentStats", ["c", "r", "component_id", "sizes"])
ComponentStats.__doc__ = """
Connected components summary

Attributes
----------
c: int
    The number of connected components
r: int
    The number of isolated vertices (components of size 1)
component_id: tuple[int]
    The component label of each vertex, labels numbered 0..c-1 in
    order of their smallest vertex
sizes: tuple[int]
    The order of each component, indexed by label

"""

DegreeStats = _coll.namedtuple(
    "DegreeStats", ["max_degree", "min_degree", "degree_sequence"])
DegreeStats.__doc__ = """
Degree summary

Attributes
----------
max_degree: int
    The maximum degree (0 for graphs without vertices)
min_degree: int
    The minimum degree (0 for graphs without vertices)
degree_sequence: tuple[int]
    All the degrees sorted in descending order

"""


class Graph(object):
    """
    Simple undirected graph

    Vertices are the dense integer indices 0..N-1. A graph is immutable
    once created: all the operations of the library return new graphs.

    Attributes
    ----------
    _n: int
        The number of vertices
    _edges: tuple[tuple]
        The edges as 2-tuples (u, v) with u < v, in lexicographic order
    _adj: tuple[tuple]
        The sorted neighbor list of each vertex

    Properties
    ----------
    n_vertices: int
        (read-only)
        The number of vertices N
    n_edges: int
        (read-only)
        The number of edges E
    edges: tuple[tuple]
        (read-only)
        The edge set, lexicographically sorted
    adjacency: tuple[tuple]
        (read-only)
        The per-vertex sorted neighbor lists
    degrees: tuple[int]
        (read-only)
        The degree of each vertex

    """
    def __init__(self, n_vertices, edges=()):
        """
        Creates a graph from a vertex count and an edge list

        Parameters
        ----------
        n_vertices: int
            The number of vertices N >= 0
        edges: iterable
            Pairs (u, v) of vertex indices in [0, N). Self-loops and
            duplicate edges (in either orientation) are rejected.

        """
        super().__init__()

        if isinstance(n_vertices, bool) or not isinstance(n_vertices, int):
            raise ValueError("Invalid vertex count. Must be an integer")
        if n_vertices < 0:
            raise ValueError("Invalid vertex count. Must be >= 0")

        seen = set()
        adj = [[] for _ in range(n_vertices)]
        for e in edges:
            try:
                u, v = e
            except (TypeError, ValueError):
                raise ValueError("Invalid edge {!r}. Must be a pair"
                                 .format(e))
            if not (isinstance(u, _num.Integral) and
                    isinstance(v, _num.Integral)):
                raise ValueError("Invalid edge {!r}. Endpoints must be "
                                 "integers".format(e))
            u, v = int(u), int(v)
            if not (0 <= u < n_vertices and 0 <= v < n_vertices):
                raise ValueError("Invalid edge ({}, {}). Endpoint out of "
                                 "range [0, {})".format(u, v, n_vertices))
            if u == v:
                raise ValueError("Invalid edge ({}, {}). Self-loops are "
                                 "not allowed".format(u, v))
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError("Duplicate edge ({}, {})".format(*key))
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)

        self._n = n_vertices
        self._edges = tuple(sorted(seen))
        self._adj = tuple(tuple(sorted(nb)) for nb in adj)

    # ---------------------------------------------------------
    #                       Operators
    # ---------------------------------------------------------

    def __len__(self):
        return self._n

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self):
        return hash((self._n, self._edges))

    def __repr__(self):
        return "Graph(N={}, E={})".format(self._n, len(self._edges))

    # ---------------------------------------------------------
    #                      Properties
    # ---------------------------------------------------------

    @property
    def n_vertices(self):
        return self._n

    @property
    def n_edges(self):
        return len(self._edges)

    @property
    def edges(self):
        return self._edges

    @property
    def adjacency(self):
        return self._adj

    @property
    def degrees(self):
        return tuple(len(nb) for nb in self._adj)

    # ---------------------------------------------------------
    #                       Public API
    # ---------------------------------------------------------

    def degree(self, v):
        return len(self._adj[v])

    def neighbors(self, v):
        return self._adj[v]

    def has_edge(self, u, v):
        if not (0 <= u < self._n and 0 <= v < self._n):
            return False
        nb = self._adj[u]
        i = _bisect.bisect_left(nb, v)
        return i < len(nb) and nb[i] == v
