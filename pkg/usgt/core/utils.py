"""
Miscellaneous utility functions used throughout the library.

"""

import math as _math

from . import const as _K


class CompensatedSum(object):
    """
    Running sum with error compensation

    Keeps a correction term alongside the running total so that a long
    series of floats can be accumulated without the error growth of
    repeated +=. This is Neumaier's variant of Kahan's algorithm, which
    also handles terms larger than the running total.

    Attributes
    ----------
    total: float
        The uncorrected running sum
    carry: float
        The accumulated rounding error

    """
    def __init__(self, start=0.0):
        self.total = float(start)
        self.carry = 0.0

    def add(self, value):
        """
        Adds a term to the sum

        Parameters
        ----------
        value: float

        Returns
        -------
        CompensatedSum
            This accumulator

        """
        t = self.total + value
        if abs(self.total) >= abs(value):
            self.carry += (self.total - t) + value
        else:
            self.carry += (value - t) + self.total
        self.total = t
        return self

    def extend(self, values):
        for v in values:
            self.add(v)
        return self

    @property
    def value(self):
        return self.total + self.carry

    def __float__(self):
        return self.value


def csum(values):
    """
    Computes the compensated sum of an iterable of floats

    Parameters
    ----------
    values: iterable

    Returns
    -------
    float

    """
    return CompensatedSum().extend(values).value


def cluster_sorted(values, gap=_K.MULTIPLICITY_GAP):
    """
    Groups sorted values into clusters of near-equal values

    Two consecutive values belong to the same cluster when they differ
    by less than 'gap'. Clusters are chained, so a run of values each
    within 'gap' of the next forms a single cluster.

    Parameters
    ----------
    values: list[float]
        Values sorted in either direction
    gap: float
        The clustering threshold

    Returns
    -------
    list[tuple]
        A list of 2-tuples (mean value, count), in the input order

    """
    clusters = []
    run = []
    for v in values:
        if run and abs(v - run[-1]) >= gap:
            clusters.append((csum(run) / len(run), len(run)))
            run = []
        run.append(v)
    if run:
        clusters.append((csum(run) / len(run), len(run)))
    return clusters


def fmt_spectral(x, error=0.0):
    """
    Formats an eigenvalue for text output (15 significant digits)

    Parameters
    ----------
    x: float
    error: float
        A known absolute error on x. The decimals below it are dropped
        first, so that 1 - 1e-15 with an error of 1e-14 prints as 1.

    Returns
    -------
    str

    """
    if error > 0:
        x = round(x, int(_math.floor(-_math.log10(error))))
    return _K.SPECTRUM_FMT.format(_clean_zero(x))


def fmt_value(x):
    """Formats an index or bound value (12 significant digits)"""
    return _K.VALUE_FMT.format(_clean_zero(x))


def _clean_zero(x):
    # -0.0 would print as "-0"
    return 0.0 if x == 0 else x

