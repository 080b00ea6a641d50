"""
Built-in graphs and graph generators

Every generator documents its vertex labeling, so that the graphs (and
the files written from them) are reproducible.

"""

import itertools as _itools
import numbers as _num

from .base import Graph
from ..core import stat as _stat


def _check_count(name, value, minimum):
    if isinstance(value, bool) or not isinstance(value, _num.Integral):
        raise ValueError("Invalid {}. Must be an integer".format(name))
    if value < minimum:
        raise ValueError("Invalid {}. Must be >= {}".format(name, minimum))
    return int(value)


def from_edge_list(n_vertices, pairs):
    """
    Creates a graph from an explicit edge list

    Parameters
    ----------
    n_vertices: int
        The number of vertices
    pairs: list[tuple]
        The edges as pairs of distinct vertex indices in [0, N)

    Returns
    -------
    Graph

    Raises
    ------
    ValueError
        On self-loops, duplicate edges or endpoints out of range

    """
    return Graph(n_vertices, pairs)


def empty(n):
    """Edgeless graph on n vertices"""
    return Graph(_check_count("order", n, 0))


def complete(s):
    """
    Complete graph K_s on the vertices 0..s-1

    Parameters
    ----------
    s: int
        The order, s >= 1

    Returns
    -------
    Graph

    """
    s = _check_count("order", s, 1)
    return Graph(s, _itools.combinations(range(s), 2))


def complete_bipartite(a, b):
    """
    Complete bipartite graph K_{a,b}

    The parts are {0..a-1} and {a..a+b-1}.

    Parameters
    ----------
    a: int
        The size of the first part, a >= 1
    b: int
        The size of the second part, b >= 1

    Returns
    -------
    Graph

    """
    a = _check_count("part size", a, 1)
    b = _check_count("part size", b, 1)
    return Graph(a + b, ((u, v) for u in range(a)
                         for v in range(a, a + b)))


def star(k):
    """Star K_{1,k} with center 0 and leaves 1..k"""
    return complete_bipartite(1, k)


def path(n):
    """Path P_n with edges (i, i+1), n >= 1"""
    n = _check_count("order", n, 1)
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n):
    """Cycle C_n with edges (i, i+1 mod n), n >= 3"""
    n = _check_count("order", n, 3)
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def disjoint_union(parts):
    """
    Disjoint union of graphs

    The vertices of each part are shifted by the total order of the
    parts before it.

    Parameters
    ----------
    parts: list[Graph]

    Returns
    -------
    Graph

    """
    edges = []
    offset = 0
    for g in parts:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n_vertices
    return Graph(offset, edges)


def add_isolated(g, k=1):
    """Appends k isolated vertices to a graph"""
    k = _check_count("vertex count", k, 0)
    return Graph(g.n_vertices + k, g.edges)


def add_edge(g, u, v):
    """Returns a new graph with the edge (u, v) added"""
    return Graph(g.n_vertices, g.edges + ((u, v),))


def erdos_renyi(n, p, seed):
    """
    Erdos-Renyi random graph G(n, p)

    The C(n,2) vertex pairs are visited in lexicographic order and each
    is included when a Bernoulli(p) draw succeeds. Draws come from a
    private Mersenne Twister seeded with 'seed', so the graph depends
    on (n, p, seed) only.

    Parameters
    ----------
    n: int
        The number of vertices
    p: float
        The edge probability in [0, 1]
    seed: int
        The seed

    Returns
    -------
    Graph

    """
    n = _check_count("order", n, 0)
    if not 0 <= p <= 1:
        raise ValueError("Invalid probability. Must be in [0, 1]")

    gen = _stat.rng(seed)
    pairs = list(_itools.combinations(range(n), 2))
    draws = _stat.bernoulli_trials(gen, p, len(pairs))
    return Graph(n, _itools.compress(pairs, draws))


def theorem3_extremal_graph(s, c, r):
    """
    The graph (c-r) K_s + r K_1

    This is the family of graphs attaining the lower bound of NEE for
    graphs with c components, r of which are isolated vertices.

    Parameters
    ----------
    s: int
        The order of the complete components, s >= 2
    c: int
        The number of components, c >= 1
    r: int
        The number of isolated vertices, 0 <= r <= c

    Returns
    -------
    Graph

    """
    s = _check_count("clique order", s, 2)
    c = _check_count("component count", c, 1)
    r = _check_count("isolated count", r, 0)
    if r > c:
        raise ValueError("Invalid isolated count. Must be <= c")
    parts = [complete(s)] * (c - r) + [complete(1)] * r
    return disjoint_union(parts)
