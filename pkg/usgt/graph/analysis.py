"""
Structural analysis of graphs: components, degrees, bipartiteness,
distances and detection of the complete-union extremal family.

The traversals are delegated to networkx on a view of the graph built by
to_networkx().

"""

import networkx as _nx

from .base import ComponentStats, DegreeStats


def to_networkx(g):
    """
    Converts a graph to a networkx.Graph on the nodes 0..N-1

    Parameters
    ----------
    g: Graph

    Returns
    -------
    networkx.Graph

    """
    h = _nx.Graph()
    h.add_nodes_from(range(g.n_vertices))
    h.add_edges_from(g.edges)
    return h


def component_stats(g):
    """
    Labels the connected components of a graph

    Parameters
    ----------
    g: Graph

    Returns
    -------
    ComponentStats

    """
    comps = sorted((sorted(c) for c in
                    _nx.connected_components(to_networkx(g))),
                   key=lambda c: c[0])
    label = [-1] * g.n_vertices
    for k, comp in enumerate(comps):
        for v in comp:
            label[v] = k
    sizes = tuple(len(c) for c in comps)
    r = sum(1 for s in sizes if s == 1)
    return ComponentStats(c=len(sizes), r=r,
                          component_id=tuple(label), sizes=sizes)


def is_connected(g):
    """True for graphs with exactly one component (K_1 included)"""
    return g.n_vertices > 0 and _nx.is_connected(to_networkx(g))


def is_tree(g):
    return g.n_vertices > 0 and _nx.is_tree(to_networkx(g))


def degree_stats(g):
    """
    Computes the degree summary of a graph

    Parameters
    ----------
    g: Graph

    Returns
    -------
    DegreeStats

    """
    seq = tuple(sorted(g.degrees, reverse=True))
    if not seq:
        return DegreeStats(0, 0, seq)
    return DegreeStats(max_degree=seq[0], min_degree=seq[-1],
                       degree_sequence=seq)


def two_coloring(g):
    """
    Finds a proper 2-coloring of a graph

    Parameters
    ----------
    g: Graph

    Returns
    -------
    tuple[int], None
        The color (0 or 1) of each vertex, or None if the graph has an
        odd cycle. The smallest vertex of every component gets color 0.

    """
    h = to_networkx(g)
    try:
        color = _nx.bipartite.color(h)
    except _nx.NetworkXError:
        return None
    out = [0] * g.n_vertices
    for comp in _nx.connected_components(h):
        flip = color[min(comp)]
        for v in comp:
            out[v] = color[v] ^ flip
    return tuple(out)


def is_bipartite(g, witness=False):
    """
    Checks whether every component of a graph is 2-colorable

    Parameters
    ----------
    g: Graph
    witness: bool
        If True, return the coloring along with the answer

    Returns
    -------
    bool, tuple
        The answer, or a 2-tuple (answer, coloring) when witness is
        True (coloring is None for non-bipartite graphs)

    """
    if not witness:
        return _nx.is_bipartite(to_networkx(g))
    coloring = two_coloring(g)
    return coloring is not None, coloring


def bfs_distances(g, sources):
    """
    Computes breadth-first distances from a set of sources

    Parameters
    ----------
    g: Graph
    sources: int, iterable
        A vertex or the vertices at distance 0

    Returns
    -------
    list[int]
        The distance of every vertex from the nearest source, -1 for
        vertices that cannot be reached

    """
    if isinstance(sources, int):
        sources = [sources]
    sources = set(sources)
    dist = [-1] * g.n_vertices
    if not sources:
        return dist
    reached = _nx.multi_source_dijkstra_path_length(to_networkx(g), sources)
    for v, d in reached.items():
        dist[v] = int(d)
    return dist


def detect_theorem3_extremal(g):
    """
    Detects the graphs made of equal complete graphs and isolated vertices

    The check is structural: a component of order k is complete when
    it has k(k-1)/2 edges.

    Parameters
    ----------
    g: Graph

    Returns
    -------
    int, None
        The common order s >= 2 of the non-singleton components when
        every component is complete and all of them but the isolated
        vertices have the same order; None otherwise (in particular for
        graphs with no edges)

    """
    stats = component_stats(g)
    inner = [0] * stats.c
    for u, _ in g.edges:
        inner[stats.component_id[u]] += 1

    orders = set()
    for k, e in zip(stats.sizes, inner):
        if k == 1:
            continue
        if e != k * (k - 1) // 2:
            return None
        orders.add(k)

    if len(orders) != 1:
        return None
    return orders.pop()
