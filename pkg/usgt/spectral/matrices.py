"""
Graph matrices: adjacency, Laplacian and normalized Laplacian.

All three are built directly in symmetric form. The normalized
Laplacian follows the convention d^-1 = 0 for isolated vertices, whose
rows and columns are all zero.

"""

import math as _math

import numpy as _np

from ..core.mtx import SymmetricMatrix

ADJACENCY = "adjacency"
LAPLACIAN = "laplacian"
NORMALIZED_LAPLACIAN = "normalized_laplacian"

SOURCES = (ADJACENCY, LAPLACIAN, NORMALIZED_LAPLACIAN)


def _edge_index(g):
    if not g.n_edges:
        return _np.zeros(0, dtype=int), _np.zeros(0, dtype=int)
    e = _np.array(g.edges, dtype=int)
    return e[:, 0], e[:, 1]


def adjacency_matrix(g):
    """
    Builds the 0/1 adjacency matrix A

    Parameters
    ----------
    g: Graph

    Returns
    -------
    SymmetricMatrix

    """
    n = g.n_vertices
    a = _np.zeros((n, n))
    u, v = _edge_index(g)
    a[u, v] = 1
    a[v, u] = 1
    return SymmetricMatrix(a)


def laplacian_matrix(g):
    """
    Builds the Laplacian L = D - A

    Parameters
    ----------
    g: Graph

    Returns
    -------
    SymmetricMatrix

    """
    n = g.n_vertices
    a = _np.zeros((n, n))
    u, v = _edge_index(g)
    a[u, v] = -1
    a[v, u] = -1
    a[_np.diag_indices(n)] = g.degrees
    return SymmetricMatrix(a)


def normalized_laplacian_matrix(g):
    """
    Builds the normalized Laplacian D^-1/2 L D^-1/2

    Entry (i,i) is 1 when d_i > 0 and 0 otherwise; entry (i,j) of an
    edge is -1/sqrt(d_i d_j). Each off-diagonal value is computed once
    and written to both (i,j) and (j,i), so the result is exactly
    symmetric.

    Parameters
    ----------
    g: Graph

    Returns
    -------
    SymmetricMatrix

    """
    n = g.n_vertices
    deg = g.degrees
    a = _np.zeros((n, n))
    for i, j in g.edges:
        w = -1 / _math.sqrt(deg[i] * deg[j])
        a[i, j] = w
        a[j, i] = w
    a[_np.diag_indices(n)] = [1.0 if d > 0 else 0.0 for d in deg]
    return SymmetricMatrix(a)


def graph_matrix(g, source):
    """Builds the matrix named by 'source' (one of SOURCES)"""
    try:
        build = _BUILDERS[source]
    except KeyError:
        raise ValueError("Invalid matrix type: %s" % source)
    return build(g)


_BUILDERS = {
    ADJACENCY: adjacency_matrix,
    LAPLACIAN: laplacian_matrix,
    NORMALIZED_LAPLACIAN: normalized_laplacian_matrix,
}
