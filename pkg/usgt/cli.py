"""
Command line front end

    usgt index PATH [--which nee|ee|lee-shifted|lee-plain]
    usgt spectrum PATH [--matrix adjacency|laplacian|normalized]
    usgt bounds PATH [--csv]
    usgt fractal M N [--mode emit-graph|nee|spectrum]
                     [--method decimation|dense]
    usgt verify M N_MAX [--jobs J]
    usgt scaling [--m 1 2 3 4 5] [--n-max 7] [--output CSV] [--jobs J]
    usgt random N P SEED [--output PATH]

Exit status: 0 success, 1 input error, 2 numerical failure,
3 verification failure.

"""

import argparse
import csv
import io as _io
import logging
import multiprocessing as _mp
import sys

from . import __version__
from .core import const as _K
from .core import mtx as _mtx
from .core import utils as _utl
from .fractal import base as _fb
from .fractal import builtin as _fr
from .fractal import decimation as _dec
from .graph import analysis as _ana
from .graph import builtin as _gb
from .graph import edgelist as _el
from .spectral import bounds as _bnd
from .spectral import indices as _idx
from .spectral import matrices as _mat
from .spectral import spectrums as _spc

_log = logging.getLogger(__name__)

INDICES = ("nee", "ee", "lee-shifted", "lee-plain")
MATRICES = {"adjacency": _mat.ADJACENCY,
            "laplacian": _mat.LAPLACIAN,
            "normalized": _mat.NORMALIZED_LAPLACIAN}
MODES = ("emit-graph", "nee", "spectrum")
DECIMATION = "decimation"
DENSE = "dense"

# Agreement required between decimation and the dense solve
VERIFY_TOL = 1e-8

VERIFY_HEADER = ("n", "N", "max_abs_diff", "nee_rel_diff", "mult1",
                 "mult1_expected", "rank", "rank_expected", "status")


class VerificationError(RuntimeError):
    """
    Raised when a computed result breaks an invariant or disagrees
    with its oracle

    """
    pass


def _solver_kwargs(args):
    return {"tol": args.tol, "max_sweeps": args.max_sweeps,
            "method": args.solver}


def _check_dense(n_vertices):
    if n_vertices > _K.DENSE_CAP:
        raise ValueError("Dense solves are limited to N <= {} (got N = {})"
                         .format(_K.DENSE_CAP, n_vertices))


def _emit(text, path=None):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="ascii", newline="\n") as f:
            f.write(text)


# ----- Commands -----

def cmd_index(args):
    g = _el.read_edge_list(args.path)
    _check_dense(g.n_vertices)
    kw = _solver_kwargs(args)
    if args.which == "nee":
        value = _idx.normalized_estrada_index(g, **kw)
    elif args.which == "ee":
        value = _idx.estrada_index(g, **kw)
    elif args.which == "lee-shifted":
        value = _idx.laplacian_estrada_index(g, _idx.LEE_SHIFTED, **kw)
    else:
        value = _idx.laplacian_estrada_index(g, _idx.LEE_PLAIN, **kw)
    _emit(_utl.fmt_value(value) + "\n")


def cmd_spectrum(args):
    g = _el.read_edge_list(args.path)
    _check_dense(g.n_vertices)
    source = MATRICES[args.matrix]
    if source == _mat.NORMALIZED_LAPLACIAN:
        s = _spc.normalized_laplacian_spectrum(g, **_solver_kwargs(args))
    else:
        s = _spc.graph_spectrum(g, source, **_solver_kwargs(args))
    if args.multiplicities:
        _emit("".join("{} {}\n".format(_utl.fmt_spectral(v, s.error), k)
                      for v, k in s.multiplicities()))
    else:
        _emit(s.to_text())


def cmd_bounds(args):
    g = _el.read_edge_list(args.path)
    _check_dense(g.n_vertices)
    rep = _bnd.evaluate_bounds(g, **_solver_kwargs(args))
    if args.csv:
        buf = _io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(rep.CSV_HEADER)
        w.writerow(rep.to_csv_row())
        _emit(buf.getvalue())
    else:
        _emit(rep.to_text())


def _build(m, n, construction):
    if construction == _fb.MERGED and n >= 1:
        return _fr.build_fractal_merged(m, n)
    return _fr.build_fractal(m, n)


def cmd_fractal(args):
    m, n = args.m, args.n
    size, _ = _fr.fractal_counts(m, n)
    if args.method == DENSE:
        _check_dense(size)
    else:
        _fr.check_size(m, n)

    if args.mode == "emit-graph":
        _emit(_build(m, n, args.construction).to_edge_list(), args.output)
        return

    if args.method == DECIMATION:
        ms = _dec.decimation_spectrum(m, n)
        errors = ms.check()
        if errors:
            raise VerificationError("decimation spectrum of G_{}({}): {}"
                                    .format(n, m, "; ".join(errors)))
        if args.mode == "nee":
            text = _utl.fmt_value(_idx.nee_from_multiset(ms)) + "\n"
        else:
            text = ms.to_text()
    else:
        fg = _build(m, n, args.construction)
        s = _spc.normalized_laplacian_spectrum(fg.graph,
                                               **_solver_kwargs(args))
        if args.mode == "nee":
            text = _utl.fmt_value(_idx.nee_from_spectrum(s)) + "\n"
        else:
            text = s.to_text()

    print("G_{}({}): N = {}".format(n, m, size), file=sys.stderr)
    _emit(text, args.output)


def verify_row(m, n, tol=_K.EIG_TOL, max_sweeps=_K.EIG_MAX_SWEEPS,
               method=_K.EIG_JACOBI):
    """
    Compares the decimation results for G_n(m) with a dense solve

    Returns
    -------
    tuple
        The cells of one verification row (see VERIFY_HEADER), the
        last one being True when every check passes

    """
    fg = _fr.build_fractal(m, n)
    _check_dense(fg.n_vertices)
    dense = _spc.normalized_laplacian_spectrum(
        fg.graph, tol=tol, max_sweeps=max_sweeps, method=method)
    ms = _dec.decimation_spectrum(m, n)
    exact = ms.flatten()

    diff = max(abs(a - b) for a, b in zip(exact, dense.values))
    nee_exact = _idx.nee_from_multiset(ms)
    nee_dense = _idx.nee_from_spectrum(dense)
    nee_diff = abs(nee_exact - nee_dense) / nee_exact

    mult = sum(k for v, k in dense.multiplicities()
               if abs(v - 1) < _K.MULTIPLICITY_GAP)
    mult_expected = _dec.multiplicity_of_one(m, n)
    shifted = _mat.normalized_laplacian_matrix(fg.graph).shifted(-1.0)
    rank = _mtx.numerical_rank(shifted, _K.RANK_TOL)
    rank_expected = _dec.predicted_rank(m, n)

    passed = (len(exact) == len(dense)
              and diff <= VERIFY_TOL and nee_diff <= VERIFY_TOL
              and mult == mult_expected
              and ms.multiplicity(1.0) == mult_expected
              and rank == rank_expected
              and not ms.check())
    return (n, fg.n_vertices, diff, nee_diff, mult, mult_expected,
            rank, rank_expected, passed)


def _verify_task(task):
    return verify_row(*task)


def _run_grid(worker, tasks, jobs):
    if jobs > 1 and len(tasks) > 1:
        with _mp.get_context("spawn").Pool(min(jobs, len(tasks))) as pool:
            return pool.map(worker, tasks)
    return [worker(t) for t in tasks]


def cmd_verify(args):
    if args.n_max < 0:
        raise ValueError("Invalid n_max. Must be >= 0")
    _check_dense(_fr.fractal_counts(args.m, args.n_max)[0])

    tasks = [(args.m, n, args.tol, args.max_sweeps, args.solver)
             for n in range(1, args.n_max + 1)]
    rows = _run_grid(_verify_task, tasks, args.jobs)

    lines = [" ".join(VERIFY_HEADER)]
    failed = []
    for n, size, diff, nee_diff, mult, mult_e, rank, rank_e, ok in rows:
        lines.append("{} {} {:.3e} {:.3e} {} {} {} {} {}".format(
            n, size, diff, nee_diff, mult, mult_e, rank, rank_e,
            "pass" if ok else "FAIL"))
        if not ok:
            failed.append(n)
    _emit("\n".join(lines) + "\n")
    if failed:
        raise VerificationError("G_n({}) failed for n = {}".format(
            args.m, ", ".join(map(str, failed))))


def scaling_row(m, n):
    """
    One row of the NEE scaling table, as (m, n, N, NEE, lower, upper,
    thm3_lower)

    """
    size, _ = _fr.fractal_counts(m, n)
    nee = _dec.decimation_nee(m, n)
    lower, upper = _bnd.theorem2_bounds(size, m + 2, 1)
    return m, n, size, nee, lower, upper, _bnd.theorem3_lower(size, 1, 0)


def _scaling_task(task):
    return scaling_row(*task)


def cmd_scaling(args):
    if args.n_max < 1:
        raise ValueError("Invalid n_max. Must be >= 1")
    for m in args.m:
        _fr.check_size(m, args.n_max)

    tasks = [(m, n) for m in args.m for n in range(1, args.n_max + 1)]
    rows = _run_grid(_scaling_task, tasks, args.jobs)

    for m, n, _, nee, lower, upper, _ in rows:
        if not lower < nee < upper:
            raise VerificationError(
                "NEE(G_{}({})) = {!r} outside ({!r}, {!r})"
                .format(n, m, nee, lower, upper))

    buf = _io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(_K.SCALING_HEADER)
    for m, n, size, *values in rows:
        w.writerow([m, n, size] + [_utl.fmt_value(v) for v in values])
    _emit(buf.getvalue(), args.output)

    for m in args.m:
        points = [(r[2], r[3]) for r in rows if r[0] == m]
        if len(points) >= 2:
            slope, _ = _dec.scaling_fit(points)
            print("m={} log-log slope {:.6f}".format(m, slope),
                  file=sys.stderr)


def cmd_random(args):
    g = _gb.erdos_renyi(args.n, args.p, args.seed)
    _check_dense(g.n_vertices)
    if args.output is not None:
        _el.write_edge_list(g, args.output, [
            "G(n, p) random graph", "n {}".format(args.n),
            "p {!r}".format(args.p), "seed {}".format(args.seed)])
    rep = _bnd.evaluate_bounds(g, **_solver_kwargs(args))
    stats = _ana.component_stats(g)
    summary = "seed={}\np={!r}\nsizes={}\nthm3_gap={}\n".format(
        args.seed, args.p, " ".join(map(str, sorted(stats.sizes))),
        _utl.fmt_value(rep.gap(_bnd.THM3)))
    _emit(summary + rep.to_text())


# ----- Parser -----

def make_parser():
    """Builds the argument parser"""
    ap = argparse.ArgumentParser(
        prog="usgt", description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--version", action="version", version=__version__)
    verb = ap.add_mutually_exclusive_group()
    verb.add_argument("-v", "--verbose", action="store_true",
                      help="log debug messages to stderr")
    verb.add_argument("-q", "--quiet", action="store_true",
                      help="log errors only")

    solver = argparse.ArgumentParser(add_help=False)
    solver.add_argument("--tol", type=float, default=_K.EIG_TOL,
                        help="relative off-diagonal tolerance")
    solver.add_argument("--max-sweeps", type=int, default=_K.EIG_MAX_SWEEPS)
    solver.add_argument("--solver", choices=_K.EIG_METHODS,
                        default=_K.EIG_JACOBI)

    sub = ap.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("index", parents=[solver],
                       help="print a spectral index of a graph file")
    p.add_argument("path")
    p.add_argument("--which", choices=INDICES, default="nee")
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("spectrum", parents=[solver],
                       help="print the spectrum of a graph matrix")
    p.add_argument("path")
    p.add_argument("--matrix", choices=sorted(MATRICES),
                   default="normalized")
    p.add_argument("--multiplicities", action="store_true",
                   help="print 'value multiplicity' clusters")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("bounds", parents=[solver],
                       help="check NEE of a graph file against its bounds")
    p.add_argument("path")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("fractal", parents=[solver],
                       help="build G_n(m) or compute its spectrum or NEE")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--mode", choices=MODES, default="nee")
    p.add_argument("--method", choices=(DECIMATION, DENSE),
                   default=DECIMATION)
    p.add_argument("--construction", choices=_fb.CONSTRUCTIONS,
                   default=_fb.ITERATIVE)
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_fractal)

    p = sub.add_parser("verify", parents=[solver],
                       help="compare decimation with dense solves")
    p.add_argument("m", type=int)
    p.add_argument("n_max", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scaling", help="write the NEE scaling CSV")
    p.add_argument("--m", type=int, nargs="+", default=[1, 2, 3, 4, 5])
    p.add_argument("--n-max", type=int, default=7)
    p.add_argument("--output", default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_scaling)

    p = sub.add_parser("random", parents=[solver],
                       help="check the bounds on a seeded random graph")
    p.add_argument("n", type=int)
    p.add_argument("p", type=float)
    p.add_argument("seed", type=int)
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_random)

    return ap


def main(argv=None):
    """
    Runs the command line

    Returns
    -------
    int
        The exit status

    """
    args = make_parser().parse_args(argv)

    level = logging.WARNING
    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.ERROR
    logging.basicConfig(level=level, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")

    if getattr(args, "jobs", 1) < 1:
        _log.error("--jobs must be >= 1")
        return _K.EXIT_INPUT

    try:
        args.func(args)
    except VerificationError as exc:
        _log.error("verification failed: %s", exc)
        return _K.EXIT_VERIFY
    except _mtx.ConvergenceError as exc:
        _log.error("numerical failure: %s", exc)
        return _K.EXIT_NUMERICAL
    except (ValueError, OSError, OverflowError) as exc:
        _log.error("%s", exc)
        return _K.EXIT_INPUT
    return _K.EXIT_OK
