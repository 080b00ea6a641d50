"""
Treelike fractal graph container

"""

from ..graph import analysis as _ana
from ..graph import edgelist as _el

ITERATIVE = "iterative"
MERGED = "merged"
CONSTRUCTIONS = (ITERATIVE, MERGED)


class FractalGraph(object):
    """
    The fractal G_n(m) with its construction metadata

    Attributes
    ----------
    graph: Graph
        The fractal itself
    m: int
        The branching parameter (number of pendant leaves per new
        middle vertex), m >= 1
    n: int
        The generation, n >= 0
    inmost: int, None
        The center vertex (None for n = 0)
    outmost: tuple[int]
        The vertices farthest from the center, sorted (both endpoints
        for n = 0)
    birth_generation: tuple[int]
        The step at which each vertex was created
    construction: {"iterative", "merged"}
        How the graph was built

    """
    def __init__(self, graph, m, n, inmost, outmost, birth_generation,
                 construction=ITERATIVE):

        super().__init__()

        self.graph = graph
        self.m = m
        self.n = n
        self.inmost = inmost
        self.outmost = tuple(sorted(outmost))
        self.birth_generation = tuple(birth_generation)
        self.construction = construction

    def __len__(self):
        return self.graph.n_vertices

    def __repr__(self):
        return "FractalGraph(m={}, n={}, N={}, {})".format(
            self.m, self.n, self.graph.n_vertices, self.construction)

    @property
    def n_vertices(self):
        return self.graph.n_vertices

    @property
    def n_edges(self):
        return self.graph.n_edges

    def header(self):
        """The comment lines recording the construction metadata"""
        inmost = "none" if self.inmost is None else str(self.inmost)
        return ["G_n(m) treelike fractal, {} construction"
                .format(self.construction),
                "m {}".format(self.m),
                "n {}".format(self.n),
                "inmost {}".format(inmost),
                "outmost {}".format(" ".join(map(str, self.outmost)))]

    def to_edge_list(self):
        """The graph in edge-list format with the metadata header"""
        return _el.format_edge_list(self.graph, self.header())

    def check(self):
        """
        Checks the structural invariants of G_n(m)

        Returns
        -------
        list[str]
            The violated invariants (empty if all hold)

        """
        g, m, n = self.graph, self.m, self.n
        errors = []
        if g.n_vertices != (m + 2) ** n + 1:
            errors.append("N = {}, expected {}"
                          .format(g.n_vertices, (m + 2) ** n + 1))
        if g.n_edges != (m + 2) ** n:
            errors.append("E = {}, expected {}"
                          .format(g.n_edges, (m + 2) ** n))
        if not _ana.is_connected(g):
            errors.append("not connected")
        if not _ana.is_tree(g):
            errors.append("not a tree")
        if not _ana.is_bipartite(g):
            errors.append("not bipartite")
        if n >= 1:
            deg = _ana.degree_stats(g)
            if deg.max_degree != m + 2 or deg.min_degree != 1:
                errors.append("degree range [{}, {}], expected [1, {}]"
                              .format(deg.min_degree, deg.max_degree, m + 2))
            if self.inmost is None or g.degree(self.inmost) != m + 2:
                errors.append("inmost vertex {} does not have degree {}"
                              .format(self.inmost, m + 2))
        return errors
