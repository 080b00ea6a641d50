"""
Estrada-type spectral indices

    EE  = sum of e^lambda over the adjacency eigenvalues
    LEE = sum of e^(lambda - 2E/N) over the Laplacian eigenvalues
          (shifted), or of e^lambda (plain)
    NEE = sum of e^(lambda - 1) over the normalized Laplacian eigenvalues

All the sums are compensated.

"""

import math as _math

from . import matrices as _mat
from .spectrums import (Spectrum, SpectrumMultiset, graph_spectrum,
                        theorem3_extremal_spectrum,
                        normalized_laplacian_spectrum)
from ..core import utils as _utl

LEE_SHIFTED = "shifted"
LEE_PLAIN = "plain"
LEE_VARIANTS = (LEE_SHIFTED, LEE_PLAIN)


def _exp_sum(values, shift=0.0):
    return _utl.csum(_math.exp(v - shift) for v in values)


def estrada_index(g, **kwargs):
    """
    Computes the Estrada index EE

    Parameters
    ----------
    g: Graph
    kwargs:
        Solver options (see spectrums.graph_spectrum)

    Returns
    -------
    float

    """
    s = graph_spectrum(g, _mat.ADJACENCY, **kwargs)
    return _exp_sum(s.values)


def laplacian_estrada_index(g, variant=LEE_SHIFTED, **kwargs):
    """
    Computes the Laplacian Estrada index LEE

    Parameters
    ----------
    g: Graph
        A graph with N >= 1
    variant: {"shifted", "plain"}
        "shifted" subtracts the average degree 2E/N from every
        eigenvalue; "plain" does not. shifted = plain * e^(-2E/N).
    kwargs:
        Solver options (see spectrums.graph_spectrum)

    Returns
    -------
    float

    """
    if variant not in LEE_VARIANTS:
        raise ValueError("Invalid LEE variant: %s" % variant)
    if g.n_vertices == 0:
        raise ValueError("LEE is undefined for the graph with no vertices")

    s = graph_spectrum(g, _mat.LAPLACIAN, **kwargs)
    shift = 2 * g.n_edges / g.n_vertices if variant == LEE_SHIFTED else 0.0
    return _exp_sum(s.values, shift)


def normalized_estrada_index(g, spectrum=None, **kwargs):
    """
    Computes the normalized Laplacian Estrada index NEE

    Parameters
    ----------
    g: Graph
    spectrum: Spectrum, optional
        The normalized Laplacian spectrum of g, if already known
    kwargs:
        Solver options (see spectrums.graph_spectrum)

    Returns
    -------
    float

    """
    if spectrum is None:
        spectrum = normalized_laplacian_spectrum(g, **kwargs)
    elif spectrum.source != _mat.NORMALIZED_LAPLACIAN:
        raise ValueError("NEE needs the normalized Laplacian spectrum")
    return _exp_sum(spectrum.values, 1.0)


def nee_from_spectrum(spectrum):
    """NEE of an already computed normalized Laplacian Spectrum"""
    if not isinstance(spectrum, Spectrum):
        spectrum = Spectrum(spectrum)
    return _exp_sum(spectrum.values, 1.0)


def nee_from_multiset(ms):
    """
    Computes NEE from an exact eigenvalue multiset

    Parameters
    ----------
    ms: SpectrumMultiset, iterable[tuple]
        A multiset or its (value, multiplicity) pairs

    Returns
    -------
    float
        The sum of multiplicity * e^(value - 1)

    """
    if not isinstance(ms, SpectrumMultiset):
        ms = SpectrumMultiset.from_pairs(ms)
    return _utl.csum(k * _math.exp(d) for d, k in zip(ms.offsets, ms.counts))


def nee_extremal(s, c, r):
    """
    NEE of (c-r) K_s + r K_1 from its closed-form spectrum

    Parameters
    ----------
    s, c, r: int
        See spectrums.theorem3_extremal_spectrum

    Returns
    -------
    float

    """
    return nee_from_multiset(theorem3_extremal_spectrum(s, c, r))
