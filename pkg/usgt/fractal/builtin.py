"""
Constructions of the treelike fractals G_n(m)

G_0(m) is a single edge. G_n(m) is obtained from G_{n-1}(m) by
replacing every edge (u, v) with a path u - w - v through a new middle
vertex w, and attaching m new leaves to w. Equivalently, G_n(m) is made
of m+2 copies of G_{n-1}(m) glued together at one outmost vertex of
each copy. m = 1 gives the T-fractal and m = 2 the Peano basin fractal.

Both constructions are implemented: build_fractal() grows the graph by
edge replacement, build_fractal_merged() glues copies. They label the
vertices differently but build the same graph up to relabeling.

"""

import logging
import numbers as _num

from .base import FractalGraph, ITERATIVE, MERGED
from ..core import const as _K
from ..graph import analysis as _ana
from ..graph.base import Graph

_log = logging.getLogger(__name__)

# Largest count that fits a signed 64-bit index
_INDEX_MAX = 2 ** 63 - 1


def _check_params(m, n, min_n=0):
    for name, value, low in (("m", m, 1), ("n", n, min_n)):
        if isinstance(value, bool) or not isinstance(value, _num.Integral):
            raise ValueError("Invalid {}. Must be an integer".format(name))
        if value < low:
            raise ValueError("Invalid {}. Must be >= {}".format(name, low))


def fractal_counts(m, n):
    """
    Order and size of G_n(m)

    Parameters
    ----------
    m: int
        The branching parameter, m >= 1
    n: int
        The generation, n >= 0

    Returns
    -------
    tuple
        A 2-tuple (N, E) = ((m+2)^n + 1, (m+2)^n)

    Raises
    ------
    OverflowError
        If N does not fit a signed 64-bit integer

    """
    _check_params(m, n)
    e = (m + 2) ** n
    if e + 1 > _INDEX_MAX:
        raise OverflowError("G_{}({}) has more than 2^63 - 1 vertices"
                            .format(n, m))
    return e + 1, e


def check_size(m, n, cap=_K.FRACTAL_SIZE_CAP):
    """Raises ValueError when G_n(m) has more than 'cap' vertices"""
    size, _ = fractal_counts(m, n)
    if size > cap:
        raise ValueError("G_{}({}) has {} vertices, above the cap of {}"
                         .format(n, m, size, cap))
    return size


def build_fractal(m, n, cap=_K.FRACTAL_SIZE_CAP):
    """
    Builds G_n(m) by repeated edge replacement

    G_0 is the edge (0, 1). At every step the current edges are visited
    in ascending (u, v) order; each one is replaced by a new middle
    vertex w joined to u and v, followed by m new leaves joined to w.
    Vertex ids are appended, so the ids of a generation are kept by all
    the following ones.

    Parameters
    ----------
    m: int
        The branching parameter, m >= 1
    n: int
        The generation, n >= 0
    cap: int
        The largest order allowed

    Returns
    -------
    FractalGraph

    """
    _check_params(m, n)
    check_size(m, n, cap)

    edges = [(0, 1)]
    birth = [0, 0]
    for gen in range(1, n + 1):
        grown = []
        nxt = len(birth)
        for u, v in edges:
            w = nxt
            grown.append((u, w))
            grown.append((v, w))
            grown.extend((w, w + j) for j in range(1, m + 1))
            nxt += m + 1
        birth.extend([gen] * (nxt - len(birth)))
        grown.sort()
        edges = grown
        _log.debug("G_%d(%d): %d vertices", gen, m, len(birth))

    graph = Graph(len(birth), edges)
    inmost, outmost = _locate_center(graph, n)
    return FractalGraph(graph, m, n, inmost, outmost, birth, ITERATIVE)


def build_fractal_merged(m, n, cap=_K.FRACTAL_SIZE_CAP):
    """
    Builds G_n(m) by gluing m+2 copies of G_{n-1}(m)

    Every copy has a designated hook vertex: vertex 0 for G_0, and for
    larger generations the smallest outmost vertex. The m+2 hooks are
    merged into the new vertex 0, which is the inmost vertex of the
    result; the other vertices of copy k follow in order after those
    of copy k-1.

    Parameters
    ----------
    m: int
        The branching parameter, m >= 1
    n: int
        The generation, n >= 1
    cap: int
        The largest order allowed

    Returns
    -------
    FractalGraph

    """
    _check_params(m, n, min_n=1)
    check_size(m, n, cap)

    size, edges, hook = 2, [(0, 1)], 0
    birth = [0, 0]
    for gen in range(1, n + 1):

        def relabel(v, k):
            if v == hook:
                return 0
            return 1 + k * (size - 1) + (v if v < hook else v - 1)

        merged = []
        for k in range(m + 2):
            merged.extend((relabel(u, k), relabel(v, k)) for u, v in edges)
        rest = birth[:hook] + birth[hook + 1:]
        birth = [gen] + rest * (m + 2)
        size = 1 + (m + 2) * (size - 1)
        edges = merged

        graph = Graph(size, edges)
        dist = _ana.bfs_distances(graph, 0)
        far = max(dist)
        outmost = [v for v, d in enumerate(dist) if d == far]
        hook = outmost[0]

    return FractalGraph(graph, m, n, 0, outmost, birth, MERGED)


def _locate_center(graph, n):
    """
    Finds the inmost and outmost vertices of an edge-replacement fractal

    The original endpoints 0 and 1 span a diameter of length 2^n; the
    inmost vertex is the midpoint of the path between them, and the
    outmost vertices are those at the largest distance from it.

    Returns
    -------
    tuple
        A 2-tuple (inmost, outmost)

    """
    if n == 0:
        return None, (0, 1)

    d0 = _ana.bfs_distances(graph, 0)
    d1 = _ana.bfs_distances(graph, 1)
    half = d0[1] // 2
    mid = [v for v in range(graph.n_vertices) if d0[v] == d1[v] == half]
    if len(mid) != 1:
        raise RuntimeError("Bug: {} midpoints found".format(len(mid)))
    inmost = mid[0]

    dist = _ana.bfs_distances(graph, inmost)
    far = max(dist)
    return inmost, [v for v, d in enumerate(dist) if d == far]


def t_fractal(n, **kwargs):
    """The T-fractal, G_n(1)"""
    return build_fractal(1, n, **kwargs)


def peano_basin(n, **kwargs):
    """The Peano basin fractal, G_n(2)"""
    return build_fractal(2, n, **kwargs)
