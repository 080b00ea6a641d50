"""
This module defines the dense symmetric matrix type and the dense
linear algebra used as the brute-force oracle of the library: a
Jacobi eigenvalue solver and a numerical rank.

Matrices are implemented on top of numpy arrays. A SymmetricMatrix is
constructed symmetric and stays immutable afterwards (the underlying
array is flagged read-only), so the solvers always work on private
copies.

The Jacobi solver uses a block ordering. The indices are cut into
blocks of EIG_BLOCK consecutive indices, and a sweep pairs the blocks
round-robin. Each block pair gets one parallel (round-robin) Jacobi
sweep over its principal submatrix, with the rotations of disjoint
index pairs applied as one vectorized two-sided update. The rotations
are accumulated in a small orthogonal factor and applied to the rest
of the matrix as matrix products. The result is a cyclic Jacobi sweep
in which every index pair is visited at least once. A sweep costs
O(N^3) operations.

"""

import logging
import warnings

import numpy as _np

from . import const as _K

_log = logging.getLogger(__name__)


class ConvergenceError(RuntimeError):
    """
    Raised when the eigensolver does not converge within its sweep limit

    """
    pass


class SymmetricMatrix(object):
    """
    Dense real symmetric matrix

    Attributes
    ----------
    _a: numpy.ndarray
        The N x N entries (read-only)

    Properties
    ----------
    order: int
        (read-only)
        The order N of the matrix
    entries: numpy.ndarray
        (read-only)
        A read-only view of the entries

    """
    def __init__(self, entries):

        super().__init__()

        a = _np.array(entries, dtype=float)
        if a.size == 0:
            a = a.reshape(0, 0)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("Invalid matrix. Must be square")
        if not _np.all(_np.isfinite(a)):
            raise ValueError("Invalid matrix. All entries must be finite")
        if not _np.array_equal(a, a.T):
            raise ValueError("Invalid matrix. Must be exactly symmetric")
        a.flags.writeable = False
        self._a = a

    def __len__(self):
        return self.order

    def __repr__(self):
        return "SymmetricMatrix(order={})".format(self.order)

    @property
    def order(self):
        return self._a.shape[0]

    @property
    def entries(self):
        return self._a

    def shifted(self, alpha):
        """
        Returns M + alpha * I

        Parameters
        ----------
        alpha: float

        Returns
        -------
        SymmetricMatrix

        """
        a = self._a.copy()
        a[_np.diag_indices_from(a)] += alpha
        return SymmetricMatrix(a)

    def trace(self):
        return float(_np.trace(self._a))

    def frobenius_norm(self):
        return float(_np.linalg.norm(self._a))

    def tolist(self):
        return self._a.tolist()


def sym_eigenvalues(m,
                    tol=_K.EIG_TOL,
                    max_sweeps=_K.EIG_MAX_SWEEPS,
                    method=_K.EIG_JACOBI,
                    with_error=False):
    """
    Computes the eigenvalues of a symmetric matrix

    Parameters
    ----------
    m: SymmetricMatrix
        The matrix
    tol: float
        The relative tolerance. Iterations stop when the Frobenius norm
        of the off-diagonal part falls below tol times the Frobenius
        norm of the matrix. The final off-diagonal norm bounds the
        error on each eigenvalue.
    max_sweeps: int
        The maximum number of Jacobi sweeps
    method: {"jacobi", "lapack"}
        The solver. "lapack" delegates to numpy.linalg.eigvalsh and
        ignores tol and max_sweeps.
    with_error: bool
        If True, an absolute error bound on the eigenvalues is returned
        too: the final off-diagonal norm, but no less than the rounding
        allowance EIG_ROUNDOFF * N * eps * ||M||_F

    Returns
    -------
    list[float], tuple
        The N eigenvalues in descending order, or the 2-tuple
        (eigenvalues, error) if with_error is True

    Raises
    ------
    ConvergenceError
        If the Jacobi iterations do not converge within max_sweeps

    """
    if not isinstance(m, SymmetricMatrix):
        m = SymmetricMatrix(m)
    if tol <= 0:
        raise ValueError("Invalid tolerance. Must be > 0")
    if max_sweeps < 1:
        raise ValueError("Invalid sweep limit. Must be >= 1")
    if method not in _K.EIG_METHODS:
        raise ValueError("Invalid method: %s" % method)

    n = m.order
    if n == 0:
        return ([], 0.0) if with_error else []

    off = 0.0
    if method == _K.EIG_LAPACK:
        values = _np.linalg.eigvalsh(m.entries)[::-1].tolist()
    else:
        if n > _K.DENSE_CAP:
            warnings.warn("Jacobi solve of order {} (above {}) will be slow"
                          .format(n, _K.DENSE_CAP), RuntimeWarning)
        d, off = _jacobi(m.entries.copy(), tol, max_sweeps)
        values = sorted(d.tolist(), reverse=True)

    if not with_error:
        return values
    roundoff = (_K.EIG_ROUNDOFF * n * _np.finfo(float).eps
                * m.frobenius_norm())
    return values, max(off, roundoff)


def _jacobi(a, tol, max_sweeps, block=_K.EIG_BLOCK):
    """
    Diagonalizes a symmetric array by block-ordered Jacobi sweeps

    The indices are cut into blocks of 'block' consecutive indices and
    the blocks are paired round-robin. In every round each block pair
    gets one parallel Jacobi sweep over its principal submatrix, the
    rotations being accumulated in a small orthogonal factor V. The
    factors of a round act on disjoint index sets and are applied to
    the whole array at once, a <- V^T a V, as matrix products.

    Parameters
    ----------
    a: numpy.ndarray
        A writable copy of the matrix (overwritten)
    tol: float
    max_sweeps: int
    block: int

    Returns
    -------
    tuple
        A 2-tuple (diagonal, off) with the diagonal after convergence
        and the final off-diagonal Frobenius norm

    """
    n = a.shape[0]
    norm = _np.linalg.norm(a)
    if norm == 0:
        return _np.zeros(n), 0.0

    target = tol * norm
    # Entries this small are left alone. If every off-diagonal entry
    # is below it the off-diagonal norm is below target.
    skip = target / n
    rounds = _block_rounds(n, block)
    width = max(len(idx) for groups in rounds for idx in groups)
    inner = _round_robin(width)

    off = _off_norm(a)
    sweeps = 0
    while off >= target:
        if sweeps == max_sweeps:
            raise ConvergenceError(
                "Jacobi did not converge in {} sweeps "
                "(off-diagonal norm {:.3e}, target {:.3e})"
                .format(max_sweeps, off, target))
        for groups in rounds:
            a = _block_round(a, groups, inner, width, skip)
        sweeps += 1
        off = _off_norm(a)

    _log.debug("jacobi: order %d converged in %d sweeps (off=%.3e)",
               n, sweeps, off)
    return _np.diag(a).copy(), off


def _block_rounds(n, block):
    """
    Builds the round-robin pairing of the index blocks

    Parameters
    ----------
    n: int
    block: int

    Returns
    -------
    list[list]
        The rounds, each a list of disjoint index arrays (the union of
        two blocks, or the only block when there is one)

    """
    blocks = [_np.arange(i, min(i + block, n)) for i in range(0, n, block)]
    if len(blocks) == 1:
        return [blocks]
    return [[_np.concatenate((blocks[i], blocks[j])) for i, j in zip(p, q)]
            for p, q in _round_robin(len(blocks))]


def _block_round(a, groups, inner, width, skip):
    """
    Applies one round of the block ordering

    Parameters
    ----------
    a: numpy.ndarray
    groups: list[numpy.ndarray]
        Disjoint index sets
    inner: list[tuple]
        The round-robin pairing of range(width)
    width: int
        The size of the largest index set
    skip: float

    Returns
    -------
    numpy.ndarray
        The updated array (a new array when any rotation was applied)

    """
    k = len(groups)
    # Submatrices are zero-padded to a common width. Padded pairs have
    # a zero off-diagonal entry and are never rotated.
    s = _np.zeros((k, width, width))
    for i, idx in enumerate(groups):
        s[i, :len(idx), :len(idx)] = a[_np.ix_(idx, idx)]
    v = _np.broadcast_to(_np.eye(width), s.shape).copy()

    touched = _np.zeros(k, dtype=bool)
    for p, q in inner:
        touched |= _rotate(s, v, p, q, skip)
    if not touched.any():
        return a

    factors = [(groups[i], v[i, :len(groups[i]), :len(groups[i])])
               for i in _np.flatnonzero(touched)]
    # V^T a, then V^T (V^T a)^T = V^T a V
    for idx, w in factors:
        a[idx] = w.T @ a[idx]
    a = _np.ascontiguousarray(a.T)
    for idx, w in factors:
        a[idx] = w.T @ a[idx]
    return a


def _rotate(s, v, p, q, skip):
    """
    Applies one round of disjoint rotations to a stack of submatrices

    s <- J^T s J and v <- v J for every submatrix of the stack.

    Parameters
    ----------
    s: numpy.ndarray
        The (k, w, w) stack of symmetric submatrices
    v: numpy.ndarray
        The (k, w, w) stack of accumulated rotations
    p, q: numpy.ndarray
        The disjoint index pairs of the round
    skip: float
        Pairs with |s[p, q]| <= skip are not rotated

    Returns
    -------
    numpy.ndarray
        A boolean per submatrix, True if any of its pairs was rotated

    """
    apq = s[:, p, q]
    live = _np.abs(apq) > skip
    if not live.any():
        return live.any(axis=1)

    tau = (s[:, q, q] - s[:, p, p]) / _np.where(live, 2 * apq, 1.0)
    t = _np.where(tau >= 0, 1.0, -1.0) / (_np.abs(tau) + _np.hypot(1.0, tau))
    t = _np.where(live, t, 0.0)
    c = 1 / _np.hypot(1.0, t)
    sn = t * c

    # Rows
    rp, rq = s[:, p, :], s[:, q, :]
    cc, ss = c[:, :, None], sn[:, :, None]
    s[:, p, :] = cc * rp - ss * rq
    s[:, q, :] = ss * rp + cc * rq

    # Columns
    cc, ss = c[:, None, :], sn[:, None, :]
    for w in (s, v):
        kp, kq = w[:, :, p], w[:, :, q]
        w[:, :, p] = kp * cc - kq * ss
        w[:, :, q] = kp * ss + kq * cc

    s[:, p, q] = _np.where(live, 0.0, s[:, p, q])
    s[:, q, p] = _np.where(live, 0.0, s[:, q, p])
    return live.any(axis=1)


def _round_robin(n):
    """
    Builds the round-robin pairing of the indices 0..n-1

    Parameters
    ----------
    n: int

    Returns
    -------
    list[tuple]
        n-1 rounds (n rounded up to even) of 2-tuples of index arrays
        (p, q), each round pairing every index at most once

    """
    size = n + (n % 2)
    players = list(range(size))
    rounds = []
    for _ in range(size - 1):
        pairs = [(players[i], players[size - 1 - i])
                 for i in range(size // 2)]
        pairs = [(min(u, v), max(u, v)) for u, v in pairs
                 if u < n and v < n]
        if pairs:
            p, q = zip(*pairs)
            rounds.append((_np.array(p), _np.array(q)))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def _off_norm(a):
    d = _np.diag(a)
    off2 = _np.sum(a * a) - _np.sum(d * d)
    if off2 > 1e-8 * _np.sum(d * d):
        return float(_np.sqrt(off2))
    # Too close to the diagonal norm for the difference to be reliable
    b = a.copy()
    _np.fill_diagonal(b, 0)
    return float(_np.linalg.norm(b))


def numerical_rank(m, tol=_K.RANK_TOL):
    """
    Computes the numerical rank of a symmetric matrix

    The matrix is reduced to row echelon form with partial pivoting.
    A pivot counts as zero when its magnitude is below tol times the
    largest absolute entry of the input.

    Parameters
    ----------
    m: SymmetricMatrix
        The matrix
    tol: float
        The relative pivot threshold

    Returns
    -------
    int
        The number of nonzero pivots

    """
    if not isinstance(m, SymmetricMatrix):
        m = SymmetricMatrix(m)
    if tol <= 0:
        raise ValueError("Invalid tolerance. Must be > 0")

    a = m.entries.copy()
    n = a.shape[0]
    if n == 0:
        return 0
    scale = _np.max(_np.abs(a))
    if scale == 0:
        return 0
    thresh = tol * scale

    r = 0
    for col in range(n):
        if r == n:
            break
        k = r + int(_np.argmax(_np.abs(a[r:, col])))
        if abs(a[k, col]) < thresh:
            continue
        if k != r:
            a[[r, k], col:] = a[[k, r], col:]
        f = a[r + 1:, col] / a[r, col]
        a[r + 1:, col:] -= _np.outer(f, a[r, col:])
        r += 1
    return r
