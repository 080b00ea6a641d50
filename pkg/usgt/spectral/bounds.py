"""
Bounds on the normalized Laplacian Estrada index

The bound functions take scalar summaries (order, components, degrees)
rather than graphs, so they can be evaluated on parameter grids. The
graph-level entry point is evaluate_bounds(), which computes NEE once
and checks it against every applicable bound:

    connected graphs (N >= 2):
        NEE >= (N-1) e^(1/(N-1)) + e^-1, equality iff G = K_N
    connected bipartite graphs with degrees in [delta, Delta]:
        e^-1 + e + sqrt((N-2)^2 + 2(N-2 Delta)/Delta)
            <= NEE <=
        e^-1 + e + (N-3) - sqrt((N-2 delta)/delta) + e^sqrt((N-2 delta)/delta)
        equality in both iff G is complete bipartite regular
    any graph with c components, r of them isolated vertices:
        NEE >= (N-c) e^((c-r)/(N-c)) + c e^-1
        equality iff G = (c-r) K_s + r K_1

"""

import logging
import math as _math
import sys as _sys

from .indices import normalized_estrada_index
from .spectrums import normalized_laplacian_spectrum
from ..core import const as _K
from ..core import utils as _utl
from ..graph import analysis as _ana

_log = logging.getLogger(__name__)

_E = _math.e
_INV_E = _math.exp(-1)
# Largest argument of exp() with a finite result
_EXP_MAX = _math.log(_sys.float_info.max)

THM1 = "thm1"
THM2_LOWER = "thm2_lower"
THM2_UPPER = "thm2_upper"
THM3 = "thm3"
BOUNDS = (THM1, THM2_LOWER, THM2_UPPER, THM3)


class BoundDomainError(ValueError):
    """
    Raised when a bound formula is evaluated outside its domain

    """
    pass


def theorem1_lower(n):
    """
    Lower bound of NEE for connected graphs of order n

    Parameters
    ----------
    n: int
        The order, n >= 2

    Returns
    -------
    float

    """
    if n < 2:
        raise ValueError("Invalid order. The connected-graph bound needs "
                         "N >= 2")
    return (n - 1) * _math.exp(1 / (n - 1)) + _INV_E


def theorem2_bounds(n, max_deg, min_deg):
    """
    Lower and upper bounds of NEE for connected bipartite graphs

    Parameters
    ----------
    n: int
        The order, n >= 2
    max_deg: int
        The maximum degree
    min_deg: int
        The minimum degree, 1 <= min_deg <= max_deg

    Returns
    -------
    tuple
        A 2-tuple (lower, upper). The upper bound saturates to inf
        once e^sqrt((N-2 delta)/delta) is beyond the float range (N
        above about 5e5 for delta = 1).

    Raises
    ------
    BoundDomainError
        If N < 2 delta, or if the radicand of the lower bound is negative

    """
    if n < 2:
        raise ValueError("Invalid order. Must be >= 2")
    if min_deg < 1 or max_deg < min_deg:
        raise ValueError("Invalid degrees. Need 1 <= min_deg <= max_deg")
    if n < 2 * min_deg:
        raise BoundDomainError("N = {} < 2 delta = {}"
                               .format(n, 2 * min_deg))

    low_rad = (n - 2) ** 2 + 2 * (n - 2 * max_deg) / max_deg
    if low_rad < 0:
        raise BoundDomainError(
            "negative lower-bound radicand {} (N={}, Delta={})"
            .format(low_rad, n, max_deg))
    up_root = _math.sqrt((n - 2 * min_deg) / min_deg)

    lower = _INV_E + _E + _math.sqrt(low_rad)
    if up_root > _EXP_MAX:
        upper = _math.inf
    else:
        upper = _INV_E + _E + (n - 3) - up_root + _math.exp(up_root)
    return lower, upper


def theorem3_lower(n, c, r):
    """
    Lower bound of NEE for graphs with c components, r of them isolated

    When N = c every component is an isolated vertex, the first term
    (formally 0 e^(0/0)) is taken as 0 and the bound is N e^-1, which is
    exactly NEE of the edgeless graph.

    Parameters
    ----------
    n: int
        The order, n >= 1
    c: int
        The number of components, 1 <= c <= n
    r: int
        The number of isolated vertices, 0 <= r <= c

    Returns
    -------
    float

    """
    if n < 1:
        raise ValueError("Invalid order. Must be >= 1")
    if not 1 <= c <= n:
        raise ValueError("Invalid component count. Need 1 <= c <= N")
    if not 0 <= r <= c:
        raise ValueError("Invalid isolated count. Need 0 <= r <= c")
    # Components that are not isolated vertices have >= 2 vertices
    if n - r < 2 * (c - r):
        raise ValueError("Inconsistent counts: N={}, c={}, r={}"
                         .format(n, c, r))
    if n == c:
        return n * _INV_E
    return (n - c) * _math.exp((c - r) / (n - c)) + c * _INV_E


class BoundReport(object):
    """
    NEE of a graph along with every applicable bound

    Attributes
    ----------
    n_vertices, n_edges: int
        The order and the size of the graph
    c, r: int
        The number of components and of isolated vertices
    max_degree, min_degree: int
        The degree range
    connected, bipartite: bool
        The applicability flags
    nee: float
        The normalized Laplacian Estrada index
    bounds: dict
        Bound name -> value, for the bounds that apply
    reasons: dict
        Bound name -> why it is absent, for the bounds that do not apply
    equality: dict
        Bound name -> bool, |NEE - bound| < tol
    tol: float
        The equality tolerance
    extremal_s: int, None
        The clique order found by the structural extremal detector
    detector_agrees: bool
        Whether the Theorem 3 equality flag matches the detector (the
        edgeless graphs count as members of the equality family)
    violations: list[str]
        Bounds broken by more than tol, and detector disagreements

    """

    CSV_HEADER = ("N", "E", "c", "r", "connected", "bipartite", "NEE",
                  "thm1_lower", "thm2_lower", "thm2_upper", "thm3_lower",
                  "thm1_equality", "thm2_lower_equality",
                  "thm2_upper_equality", "thm3_equality",
                  "extremal_s", "detector_agrees")

    def __init__(self):
        self.n_vertices = 0
        self.n_edges = 0
        self.c = 0
        self.r = 0
        self.max_degree = 0
        self.min_degree = 0
        self.connected = False
        self.bipartite = False
        self.nee = None
        self.bounds = {}
        self.reasons = {}
        self.equality = {}
        self.tol = _K.BOUND_TOL
        self.extremal_s = None
        self.detector_agrees = True
        self.violations = []

    @property
    def thm1_lower(self):
        return self.bounds.get(THM1)

    @property
    def thm2_lower(self):
        return self.bounds.get(THM2_LOWER)

    @property
    def thm2_upper(self):
        return self.bounds.get(THM2_UPPER)

    @property
    def thm3_lower(self):
        return self.bounds.get(THM3)

    @property
    def sound(self):
        return not self.violations

    def gap(self, name):
        """NEE minus a bound (negated for the upper bound), or None"""
        b = self.bounds.get(name)
        if b is None:
            return None
        return b - self.nee if name == THM2_UPPER else self.nee - b

    def to_text(self):
        """
        Formats the report as a flat block of key=value lines

        Returns
        -------
        str

        """
        lines = [
            ("N", self.n_vertices),
            ("E", self.n_edges),
            ("c", self.c),
            ("r", self.r),
            ("max_degree", self.max_degree),
            ("min_degree", self.min_degree),
            ("connected", _flag(self.connected)),
            ("bipartite", _flag(self.bipartite)),
            ("NEE", _utl.fmt_value(self.nee)),
        ]
        for name in BOUNDS:
            key = name if name != THM1 and name != THM3 else name + "_lower"
            if name in self.bounds:
                lines.append((key, _utl.fmt_value(self.bounds[name])))
                lines.append((name + "_equality",
                              _flag(self.equality[name])))
            else:
                lines.append((key, "absent ({})".format(self.reasons[name])))
        lines.append(("extremal_s", _opt(self.extremal_s)))
        lines.append(("detector_agrees", _flag(self.detector_agrees)))
        lines.append(("tol", "{:g}".format(self.tol)))
        lines.append(("violations", len(self.violations)))
        text = "".join("{}={}\n".format(k, v) for k, v in lines)
        return text + "".join("violation: {}\n".format(v)
                              for v in self.violations)

    def __str__(self):
        return self.to_text()

    def to_csv_row(self):
        """The report as a list of CSV cells matching CSV_HEADER"""
        def val(name):
            b = self.bounds.get(name)
            return "" if b is None else _utl.fmt_value(b)

        def eq(name):
            return _flag(self.equality[name]) if name in self.equality else ""

        return [str(self.n_vertices), str(self.n_edges), str(self.c),
                str(self.r), _flag(self.connected), _flag(self.bipartite),
                _utl.fmt_value(self.nee),
                val(THM1), val(THM2_LOWER), val(THM2_UPPER), val(THM3),
                eq(THM1), eq(THM2_LOWER), eq(THM2_UPPER), eq(THM3),
                _opt(self.extremal_s, ""), _flag(self.detector_agrees)]


def _flag(b):
    return "true" if b else "false"


def _opt(x, absent="none"):
    return absent if x is None else str(x)


def evaluate_bounds(g, tol=_K.BOUND_TOL, spectrum=None, **kwargs):
    """
    Evaluates NEE of a graph against every applicable bound

    Parameters
    ----------
    g: Graph
        A graph with N >= 1
    tol: float
        The equality (and violation) tolerance
    spectrum: Spectrum, optional
        The normalized Laplacian spectrum of g, if already known
    kwargs:
        Solver options (see spectrums.graph_spectrum)

    Returns
    -------
    BoundReport

    """
    if g.n_vertices == 0:
        raise ValueError("Bounds are undefined for the graph with no "
                         "vertices")
    if tol <= 0:
        raise ValueError("Invalid tolerance. Must be > 0")

    rep = BoundReport()
    rep.tol = tol
    stats = _ana.component_stats(g)
    degs = _ana.degree_stats(g)
    n = g.n_vertices

    rep.n_vertices, rep.n_edges = n, g.n_edges
    rep.c, rep.r = stats.c, stats.r
    rep.max_degree, rep.min_degree = degs.max_degree, degs.min_degree
    rep.connected = stats.c == 1
    rep.bipartite = _ana.is_bipartite(g)

    if spectrum is None:
        spectrum = normalized_laplacian_spectrum(g, **kwargs)
    rep.nee = normalized_estrada_index(g, spectrum=spectrum)

    if not rep.connected:
        rep.reasons[THM1] = "not connected"
    elif n < 2:
        rep.reasons[THM1] = "N < 2"
    else:
        rep.bounds[THM1] = theorem1_lower(n)

    if not (rep.connected and rep.bipartite):
        why = "not connected bipartite"
        rep.reasons[THM2_LOWER] = rep.reasons[THM2_UPPER] = why
    elif n < 2:
        rep.reasons[THM2_LOWER] = rep.reasons[THM2_UPPER] = "N < 2"
    else:
        try:
            lo, up = theorem2_bounds(n, degs.max_degree, degs.min_degree)
        except BoundDomainError as exc:
            _log.warning("Theorem 2 bounds undefined for %r "
                         "(Delta=%d, delta=%d): %s",
                         g, degs.max_degree, degs.min_degree, exc)
            rep.reasons[THM2_LOWER] = rep.reasons[THM2_UPPER] = \
                "domain error: {}".format(exc)
        else:
            rep.bounds[THM2_LOWER] = lo
            rep.bounds[THM2_UPPER] = up

    rep.bounds[THM3] = theorem3_lower(n, stats.c, stats.r)

    for name, b in rep.bounds.items():
        rep.equality[name] = abs(rep.nee - b) < tol
        if rep.gap(name) < -tol:
            rep.violations.append("{} = {!r} violated by NEE = {!r}"
                                  .format(name, b, rep.nee))

    rep.extremal_s = _ana.detect_theorem3_extremal(g)
    in_family = rep.extremal_s is not None or g.n_edges == 0
    rep.detector_agrees = rep.equality[THM3] == in_family
    if not rep.detector_agrees:
        rep.violations.append(
            "thm3 equality is {} but the structural detector says {}"
            .format(rep.equality[THM3], in_family))

    for v in rep.violations:
        _log.warning("%r: %s", g, v)
    return rep
