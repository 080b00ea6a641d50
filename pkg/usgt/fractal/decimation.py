"""
Spectral decimation for the fractals G_n(m)

The normalized Laplacian spectrum of G_{n+1}(m) follows from that of
G_n(m) without any diagonalization:

    0 and 2 are single eigenvalues,
    1 has multiplicity m(m+2)^n + 1,
    every eigenvalue v of G_n(m) other than 0 and 2 has two children
    1 - sqrt(1 - v/(m+2)) and 1 + sqrt(1 - v/(m+2)), each inheriting
    the multiplicity of v.

Values are handled as offsets d = v - 1, so a child pair is the exact
pair -x, +x with x = sqrt((m + 1 - d) / (m + 2)).

"""

import logging

import numpy as _np

from .builtin import check_size, fractal_counts
from ..core import const as _K
from ..spectral import indices as _idx
from ..spectral.bounds import theorem2_bounds
from ..spectral.spectrums import SpectrumMultiset

_log = logging.getLogger(__name__)


def decimation_spectrum(m, n, cap=_K.FRACTAL_SIZE_CAP):
    """
    Exact normalized Laplacian spectrum of G_n(m)

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
    SpectrumMultiset
        The multiset with its m, n set. Close values from different
        parents are never merged.

    """
    check_size(m, n, cap)

    # The endpoints 0 and 2 always sit at positions 0 and 1
    offsets = _np.array([-1.0, 1.0])
    counts = _np.array([1, 1], dtype=_np.int64)
    total = 2

    for k in range(n):
        parents = offsets[2:]
        x = _np.sqrt((m + 1 - parents) / (m + 2))
        if x.size and not (_np.all(x > 0) and _np.all(x < 1)):
            raise RuntimeError("Bug: decimation child outside (0, 2) "
                               "at m={}, step {}".format(m, k + 1))

        ones = m * (m + 2) ** k + 1
        offsets = _np.concatenate(([-1.0, 1.0, 0.0], -x, x))
        counts = _np.concatenate(([1, 1, ones], counts[2:], counts[2:]))

        total = 2 + ones + 2 * (total - 2)
        if total != (m + 2) ** (k + 1) + 1:
            raise RuntimeError("Bug: decimation total {} at m={}, step {}"
                               .format(total, m, k + 1))
        _log.debug("decimation m=%d step %d: %d pairs, total %d",
                   m, k + 1, offsets.size, total)

    if int(counts.sum()) != total:
        raise RuntimeError("Bug")
    return SpectrumMultiset(offsets, counts, m=m, n=n)


def decimation_nee(m, n, cap=_K.FRACTAL_SIZE_CAP):
    """NEE of G_n(m) from its decimation spectrum"""
    return _idx.nee_from_multiset(decimation_spectrum(m, n, cap))


def _check_generation(n):
    if n < 1:
        raise ValueError("Invalid n. The eigenvalue 1 only appears for "
                         "n >= 1")


def multiplicity_of_one(m, n):
    """
    Multiplicity of the eigenvalue 1 in the spectrum of G_n(m)

    Parameters
    ----------
    m: int
        The branching parameter, m >= 1
    n: int
        The generation, n >= 1

    Returns
    -------
    int
        m (m+2)^(n-1) + 1

    """
    fractal_counts(m, n)
    _check_generation(n)
    return m * (m + 2) ** (n - 1) + 1


def predicted_rank(m, n):
    """
    Rank of L - I for G_n(m), where L is the normalized Laplacian

    Returns
    -------
    int
        2 (m+2)^(n-1), which is N_n minus the multiplicity of 1

    """
    fractal_counts(m, n)
    _check_generation(n)
    return 2 * (m + 2) ** (n - 1)


def per_vertex_nee(m, n, cap=_K.FRACTAL_SIZE_CAP):
    """NEE(G_n(m)) / N_n"""
    size, _ = fractal_counts(m, n)
    return decimation_nee(m, n, cap) / size


def scaling_fit(rows):
    """
    Fits log NEE against log N by least squares

    A slope near 1 means NEE grows linearly with the order.

    Parameters
    ----------
    rows: iterable[tuple]
        (N, NEE) points, at least two with distinct N

    Returns
    -------
    tuple
        A 2-tuple (slope, intercept)

    """
    pts = _np.array([(n, v) for n, v in rows], dtype=float)
    if pts.ndim != 2 or len(pts) < 2 or len(set(pts[:, 0])) < 2:
        raise ValueError("Invalid rows. Need at least two distinct orders")
    if _np.any(pts <= 0):
        raise ValueError("Invalid rows. N and NEE must be positive")
    slope, intercept = _np.polyfit(_np.log(pts[:, 0]), _np.log(pts[:, 1]), 1)
    return float(slope), float(intercept)


def sandwich_gap(m, n, nee=None):
    """
    Distances of NEE(G_n(m)) from the connected bipartite bounds

    Returns
    -------
    tuple
        A 2-tuple (NEE - lower, upper - NEE); both are positive when the
        sandwich holds strictly

    """
    size, _ = fractal_counts(m, n)
    _check_generation(n)
    if nee is None:
        nee = decimation_nee(m, n)
    lower, upper = theorem2_bounds(size, m + 2, 1)
    return nee - lower, upper - nee
