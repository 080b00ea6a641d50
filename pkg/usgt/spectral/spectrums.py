"""
Graph spectra

A Spectrum is the sorted list of eigenvalues of one of the graph
matrices, as produced by the dense solver. A SpectrumMultiset is an
exact list of (value, multiplicity) pairs, as produced by closed forms
and by spectral decimation.

"""

import collections as _coll
import logging

from . import matrices as _mat
from ..core import const as _K
from ..core import mtx as _mtx
from ..core import utils as _utl
from ..graph import analysis as _ana

_log = logging.getLogger(__name__)


class Spectrum(object):
    """
    Eigenvalues of a graph matrix

    Attributes
    ----------
    _values: tuple[float]
        The eigenvalues in descending order
    _source: str
        The matrix the eigenvalues belong to (see matrices.SOURCES)
    _error: float
        An absolute error bound on every eigenvalue (0 if exact)

    Properties
    ----------
    values: tuple[float]
        (read-only)
    source: str
        (read-only)
    graph_order: int
        (read-only)
        The order N of the graph (the number of eigenvalues)
    error: float
        (read-only)

    """
    def __init__(self, values, source=_mat.NORMALIZED_LAPLACIAN, error=0.0):

        super().__init__()

        if source not in _mat.SOURCES:
            raise ValueError("Invalid spectrum source: %s" % source)
        self._values = tuple(sorted((float(v) for v in values),
                                    reverse=True))
        self._source = source
        self._error = float(error)

    def __len__(self):
        return len(self._values)

    def __iter__(self):
        return iter(self._values)

    def __getitem__(self, i):
        return self._values[i]

    def __repr__(self):
        return "Spectrum(source={}, N={})".format(self._source,
                                                  len(self._values))

    @property
    def values(self):
        return self._values

    @property
    def source(self):
        return self._source

    @property
    def graph_order(self):
        return len(self._values)

    @property
    def error(self):
        return self._error

    def multiplicities(self, gap=_K.MULTIPLICITY_GAP):
        """
        Groups the eigenvalues into clusters of (numerically) equal values

        Parameters
        ----------
        gap: float
            Consecutive eigenvalues closer than this are the same value

        Returns
        -------
        list[tuple]
            2-tuples (value, multiplicity) in descending value order

        """
        return _utl.cluster_sorted(self._values, gap)

    def count_near(self, value, tol):
        """Counts the eigenvalues within tol of a value"""
        return sum(1 for v in self._values if abs(v - value) < tol)

    def check(self, isolated=0, eps=_K.SPECTRUM_EPS,
              sum_eps=_K.SPECTRUM_SUM_EPS):
        """
        Checks the invariants of a normalized Laplacian spectrum

        Parameters
        ----------
        isolated: int
            The number r of isolated vertices of the graph
        eps: float
            The slack on the range [0, 2] and on the zero eigenvalue
        sum_eps: float
            The per-vertex slack on the trace identity

        Returns
        -------
        list[str]
            The violated invariants (empty if all hold)

        """
        if self._source != _mat.NORMALIZED_LAPLACIAN:
            return []
        n = len(self._values)
        if n == 0:
            return []

        errors = []
        if self._values[0] > 2 + eps or self._values[-1] < -eps:
            errors.append("eigenvalues outside [0, 2]: [{}, {}]"
                          .format(self._values[-1], self._values[0]))
        if abs(self._values[-1]) > eps:
            errors.append("smallest eigenvalue {} is not 0"
                          .format(self._values[-1]))
        total = _utl.csum(self._values)
        if abs(total - (n - isolated)) > sum_eps * n:
            errors.append("eigenvalue sum {} differs from N - r = {}"
                          .format(total, n - isolated))
        return errors

    def to_text(self):
        """One eigenvalue per line, descending, 15 significant digits"""
        return "".join(_utl.fmt_spectral(v, self._error) + "\n"
                       for v in self._values)


class SpectrumMultiset(object):
    """
    Exact multiset of eigenvalues

    Each value is stored as its signed offset d = value - 1, so that the
    reflection value -> 2 - value is the exact negation d -> -d, and
    e^(value - 1) is computed as e^d without cancellation.

    Attributes
    ----------
    _offsets: tuple[float]
        The offsets from 1 of the distinct entries
    _counts: tuple[int]
        The multiplicity of each entry
    m: int, None
        The branching parameter of the fractal it belongs to, if any
    n: int, None
        The generation of the fractal it belongs to, if any

    """
    def __init__(self, offsets, counts, m=None, n=None):

        super().__init__()

        offsets = tuple(float(d) for d in offsets)
        counts = tuple(int(k) for k in counts)
        if len(offsets) != len(counts):
            raise ValueError("Offsets and multiplicities differ in length")
        if any(k < 1 for k in counts):
            raise ValueError("Invalid multiplicity. Must be >= 1")
        self._offsets = offsets
        self._counts = counts
        self.m = m
        self.n = n

    @classmethod
    def from_pairs(cls, pairs, m=None, n=None):
        """
        Creates a multiset from (value, multiplicity) pairs

        Parameters
        ----------
        pairs: iterable[tuple]

        Returns
        -------
        SpectrumMultiset

        """
        pairs = list(pairs)
        return cls([v - 1 for v, _ in pairs], [k for _, k in pairs],
                   m=m, n=n)

    def __len__(self):
        return len(self._counts)

    def __repr__(self):
        return "SpectrumMultiset(entries={}, total={})".format(
            len(self._counts), self.total())

    @property
    def offsets(self):
        return self._offsets

    @property
    def counts(self):
        return self._counts

    @property
    def pairs(self):
        """The (value, multiplicity) pairs in ascending value order"""
        return sorted(((1 + d, k) for d, k in
                       zip(self._offsets, self._counts)),
                      key=lambda p: p[0])

    def total(self):
        """The total multiplicity (the order of the graph)"""
        return sum(self._counts)

    def multiplicity(self, value):
        """The multiplicity of an exact value (0 if absent)"""
        d = value - 1
        return sum(k for o, k in zip(self._offsets, self._counts) if o == d)

    def flatten(self):
        """All the values with repetition, in descending order"""
        values = []
        for v, k in reversed(self.pairs):
            values.extend([v] * k)
        return values

    def check(self):
        """
        Checks the multiset invariants

        The range [0, 2] is checked for every multiset. When the fractal
        parameters m, n are set the total, the single eigenvalues 0 and 2,
        the multiplicity of 1 and the symmetry under value -> 2 - value
        are checked too.

        Returns
        -------
        list[str]
            The violated invariants (empty if all hold)

        """
        errors = []
        if any(not -1 <= d <= 1 for d in self._offsets):
            errors.append("values outside [0, 2]")

        if self.m is None or self.n is None:
            return errors

        entries = _coll.Counter(zip(self._offsets, self._counts))
        mirrored = _coll.Counter(zip((-d for d in self._offsets),
                                     self._counts))
        if entries != mirrored:
            errors.append("not symmetric under value -> 2 - value")

        m, n = self.m, self.n
        if self.total() != (m + 2) ** n + 1:
            errors.append("total multiplicity {} != (m+2)^n + 1 = {}"
                          .format(self.total(), (m + 2) ** n + 1))
        for end in (-1.0, 1.0):
            found = [k for d, k in zip(self._offsets, self._counts)
                     if d == end]
            if found != [1]:
                errors.append("eigenvalue {} is not single: {}"
                              .format(1 + end, found))
        ones = [k for d, k in zip(self._offsets, self._counts) if d == 0]
        expect = [m * (m + 2) ** (n - 1) + 1] if n >= 1 else []
        if ones != expect:
            errors.append("multiplicity of 1 is {}, expected {}"
                          .format(ones, expect))
        return errors

    def to_text(self):
        """Lines 'value multiplicity', ascending, 15 significant digits"""
        return "".join("{} {}\n".format(_utl.fmt_spectral(v), k)
                       for v, k in self.pairs)


def graph_spectrum(g, source=_mat.NORMALIZED_LAPLACIAN,
                   tol=_K.EIG_TOL,
                   max_sweeps=_K.EIG_MAX_SWEEPS,
                   method=_K.EIG_JACOBI):
    """
    Computes the spectrum of one of the graph matrices

    Parameters
    ----------
    g: Graph
    source: {"adjacency", "laplacian", "normalized_laplacian"}
    tol, max_sweeps, method:
        Passed to the dense solver

    Returns
    -------
    Spectrum

    """
    m = _mat.graph_matrix(g, source)
    values, error = _mtx.sym_eigenvalues(m, tol=tol, max_sweeps=max_sweeps,
                                         method=method, with_error=True)
    return Spectrum(values, source, error)


def normalized_laplacian_spectrum(g, **kwargs):
    """
    Computes and validates the normalized Laplacian spectrum

    Parameters
    ----------
    g: Graph
    kwargs:
        Solver options (see graph_spectrum)

    Returns
    -------
    Spectrum

    Raises
    ------
    ConvergenceError
        If the solver fails or its output breaks the range, zero
        eigenvalue or trace invariants

    """
    s = graph_spectrum(g, _mat.NORMALIZED_LAPLACIAN, **kwargs)
    errors = s.check(isolated=_ana.component_stats(g).r)
    if errors:
        _log.warning("normalized Laplacian spectrum of %r: %s",
                     g, "; ".join(errors))
        raise _mtx.ConvergenceError("invalid spectrum: " + "; ".join(errors))
    return s


def theorem3_extremal_spectrum(s, c, r):
    """
    Normalized Laplacian spectrum of (c-r) K_s + r K_1

    Every component contributes a 0, and every K_s contributes s/(s-1)
    with multiplicity s-1.

    Parameters
    ----------
    s: int
        The clique order, s >= 2
    c: int
        The number of components
    r: int
        The number of isolated vertices, 0 <= r <= c

    Returns
    -------
    SpectrumMultiset

    """
    if s < 2 or c < 1 or not 0 <= r <= c:
        raise ValueError("Invalid parameters. Need s >= 2 and 0 <= r <= c")
    pairs = [(0.0, c)]
    if c > r:
        pairs.append((s / (s - 1), (c - r) * (s - 1)))
    return SpectrumMultiset.from_pairs(pairs)


Clause = _coll.namedtuple("Clause", ["name", "passed", "detail"])


class Lemma1Report(object):
    """
    Outcome of the normalized Laplacian spectral property checks

    Attributes
    ----------
    clauses: list[Clause]
        One entry per checked property; passed is None when the
        property does not apply to the graph

    """
    def __init__(self, clauses):
        self.clauses = list(clauses)

    @property
    def passed(self):
        return all(c.passed is not False for c in self.clauses)

    def failures(self):
        return [c for c in self.clauses if c.passed is False]

    def __str__(self):
        tag = {True: "pass", False: "FAIL", None: "n/a"}
        return "".join("{:<28} {:<5} {}\n".format(c.name, tag[c.passed],
                                                  c.detail)
                       for c in self.clauses)


def lemma1_report(g, spectrum=None, tol=_K.SPECTRUM_EPS,
                  sum_tol=_K.SPECTRUM_SUM_EPS):
    """
    Checks the basic properties of the normalized Laplacian spectrum

    (i)   the eigenvalues sum to N - r (N for connected graphs),
    (ii)  they lie in [0, 2] with smallest eigenvalue 0, and for
          connected graphs the second smallest is positive,
    (iii) for connected bipartite graphs the largest eigenvalue is 2
          and the second largest is below 2.

    Parameters
    ----------
    g: Graph
    spectrum: Spectrum, optional
        The normalized Laplacian spectrum of g (computed if not given)
    tol: float
        The slack on eigenvalue comparisons
    sum_tol: float
        The per-vertex slack on the eigenvalue sum

    Returns
    -------
    Lemma1Report

    """
    s = spectrum
    if s is None:
        s = graph_spectrum(g, _mat.NORMALIZED_LAPLACIAN)
    if s.source != _mat.NORMALIZED_LAPLACIAN:
        raise ValueError("Lemma 1 applies to normalized Laplacian spectra")
    lam = s.values
    n = len(lam)
    stats = _ana.component_stats(g)
    clauses = []

    total = _utl.csum(lam)
    clauses.append(Clause(
        "(i) sum = N - r",
        abs(total - (n - stats.r)) <= sum_tol * max(n, 1),
        "sum={:.12g} N-r={}".format(total, n - stats.r)))

    if n:
        in_range = lam[0] <= 2 + tol and lam[-1] >= -tol
        clauses.append(Clause(
            "(ii) range [0, 2]",
            in_range and abs(lam[-1]) <= tol,
            "min={:.3e} max={:.12g}".format(lam[-1], lam[0])))
    else:
        clauses.append(Clause("(ii) range [0, 2]", None, "empty graph"))

    connected = stats.c == 1
    if connected and n >= 2:
        clauses.append(Clause(
            "(ii) second smallest > 0",
            lam[-2] > tol,
            "lambda_(N-1)={:.12g}".format(lam[-2])))
    else:
        clauses.append(Clause("(ii) second smallest > 0", None,
                              "needs connected, N >= 2"))

    if connected and n >= 2 and _ana.is_bipartite(g):
        clauses.append(Clause(
            "(iii) bipartite top = 2",
            abs(lam[0] - 2) <= tol and lam[1] < 2 - tol,
            "lambda_1={:.12g} lambda_2={:.12g}".format(lam[0], lam[1])))
    else:
        clauses.append(Clause("(iii) bipartite top = 2", None,
                              "needs connected bipartite, N >= 2"))

    return Lemma1Report(clauses)
