"""Dense symmetric eigensolver and rank computation.

The eigensolver is a cyclic Jacobi iteration: within each sweep every
off-diagonal position is annihilated once, and sweeps repeat until the
off-diagonal Frobenius norm drops below 1e-11 times the (rotation-invariant)
Frobenius norm of the matrix.  Matrices here are small (skeleton sizes are
capped), so the simplicity and robustness of Jacobi beat anything fancier.

Ranks come in two flavors: fraction-free (Bareiss) elimination over Python
ints for exact integer matrices such as coboundary operators, and an SVD
threshold rank for real matrices.
"""

from __future__ import annotations

import math

import numpy as np

_SWEEP_LIMIT = 100
_OFFDIAG_TOL = 1e-11


def symmetric_eigenvalues(matrix) -> np.ndarray:
    """All eigenvalues of a symmetric matrix, ascending.

    The input must be exactly symmetric entrywise (operators in this package
    are assembled symmetrically in integer arithmetic, so no tolerance is
    needed or granted).
    """
    a = np.asarray(matrix)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if a.shape[0] < 1:
        raise ValueError("matrix must have dimension >= 1")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix is not symmetric")
    work = np.array(a, dtype=np.float64, copy=True)
    values = _jacobi_eigenvalues(work)
    values.sort()
    return values


def _jacobi_eigenvalues(a: np.ndarray) -> np.ndarray:
    n = a.shape[0]
    if n == 1:
        return a.diagonal().copy()
    frob = math.sqrt(float((a * a).sum()))
    if frob == 0.0:
        return np.zeros(n)
    threshold2 = (_OFFDIAG_TOL * frob) ** 2
    for _ in range(_SWEEP_LIMIT):
        # sum only the off-diagonal squares; subtracting the diagonal part
        # from the total cancels catastrophically near convergence
        off = a.copy()
        np.fill_diagonal(off, 0.0)
        off2 = float((off * off).sum())
        if off2 <= threshold2:
            return a.diagonal().copy()
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                diff = a[q, q] - a[p, p]
                if abs(apq) <= 1e-200 * abs(diff):
                    # rotation angle below resolution; annihilating directly
                    # perturbs the spectrum by at most |apq|
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    continue
                theta = diff / (2.0 * apq)
                # hypot keeps the tangent finite when theta^2 would overflow
                t = 1.0 / (abs(theta) + math.hypot(theta, 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
    raise RuntimeError(f"eigensolver failed to converge within {_SWEEP_LIMIT} sweeps")


def integer_rank(matrix) -> int:
    """Exact rank of an integer matrix via fraction-free (Bareiss) elimination.

    Works over arbitrary-precision Python ints, so the result is exact for
    any integer input, in particular for coboundary matrices.
    """
    a = np.asarray(matrix)
    if a.size == 0:
        return 0
    if not np.issubdtype(a.dtype, np.integer):
        raise ValueError("integer_rank needs an integer matrix")
    rows = [[int(x) for x in row] for row in a]
    n_rows, n_cols = len(rows), len(rows[0])
    rank = 0
    prev = 1
    r = 0
    for col in range(n_cols):
        pivot_row = next((i for i in range(r, n_rows) if rows[i][col] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        piv = rows[r][col]
        for i in range(r + 1, n_rows):
            fac = rows[i][col]
            row_i = rows[i]
            row_r = rows[r]
            for j in range(col + 1, n_cols):
                row_i[j] = (piv * row_i[j] - fac * row_r[j]) // prev
            row_i[col] = 0
        prev = piv
        rank += 1
        r += 1
        if r == n_rows:
            break
    return rank


def numerical_rank(matrix) -> int:
    """Singular values above 1e-8 * max(rows, cols) * max|entry|."""
    a = np.asarray(matrix, dtype=np.float64)
    if a.size == 0:
        return 0
    scale = float(np.abs(a).max())
    if scale == 0.0:
        return 0
    tau = 1e-8 * max(a.shape) * scale
    singulars = np.linalg.svd(a, compute_uv=False)
    return int((singulars > tau).sum())


def matrix_rank(matrix) -> int:
    """Rank of a dense matrix: exact for integer dtype, SVD-thresholded otherwise."""
    a = np.asarray(matrix)
    if np.issubdtype(a.dtype, np.integer):
        return integer_rank(a)
    return numerical_rank(a)
