"""Small dense linear programs with primal-dual certification.

Problems arrive in covering form (minimize c.x subject to A x >= b, x >= 0)
or packing form (maximize c.x subject to A x <= b, x >= 0).  Both run through
one two-phase primal simplex on a dense tableau with Bland's entering rule,
which the frequently degenerate Gram-matrix instances need for termination.
Optimal solutions always carry a dual vector, and feasibility of both sides
plus the duality gap are checked before a solution is returned.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

FEAS_TOL = 1e-9
CERT_TOL = 1e-8
GAP_TOL = 1e-7


@dataclass(frozen=True, eq=False)
class LinearProgram:
    """Objective, constraint matrix, and right-hand side; x >= 0 implicit.

    The same data serves both orientations: covering reads it as
    min c.x st A x >= b, packing as max c.x st A x <= b.
    """

    objective: np.ndarray
    matrix: np.ndarray
    rhs: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.objective, dtype=np.float64)
        a = np.asarray(self.matrix, dtype=np.float64)
        b = np.asarray(self.rhs, dtype=np.float64)
        if a.ndim != 2:
            a = a.reshape((len(b), len(c))) if a.size else np.zeros((len(b), len(c)))
        if a.shape != (len(b), len(c)):
            raise ValueError(f"inconsistent LP dimensions: A is {a.shape}, c has {len(c)}, b has {len(b)}")
        object.__setattr__(self, "objective", c)
        object.__setattr__(self, "matrix", a)
        object.__setattr__(self, "rhs", b)

    @property
    def num_vars(self) -> int:
        return len(self.objective)

    @property
    def num_constraints(self) -> int:
        return len(self.rhs)


@dataclass(frozen=True, eq=False)
class LPSolution:
    status: str  # "optimal" | "infeasible" | "unbounded"
    x: np.ndarray | None = None
    y: np.ndarray | None = None
    value: float | None = None
    notes: str = ""

    @property
    def optimal(self) -> bool:
        return self.status == "optimal"


def _pivot(tab: np.ndarray, basis: list[int], row: int, col: int) -> None:
    tab[row] /= tab[row, col]
    for i in range(tab.shape[0]):
        if i != row and tab[i, col] != 0.0:
            tab[i] -= tab[i, col] * tab[row]
    basis[row] = col


def _run(tab, basis, allowed, artificial_from, cap, iters):
    """Minimize the objective row over allowed entering columns.

    Returns (status, iters).  Rows holding a basic artificial at zero are
    kicked out first whenever the entering column touches them, so artificial
    variables can never climb back above zero.
    """
    n_rows = tab.shape[0] - 1
    while True:
        col = -1
        for j in allowed:
            if tab[n_rows, j] < -FEAS_TOL:
                col = j
                break
        if col < 0:
            return "optimal", iters
        row = -1
        # Prefer evicting a zero-valued basic artificial touched by this column.
        for i in range(n_rows):
            if basis[i] >= artificial_from and abs(tab[i, col]) > FEAS_TOL and tab[i, -1] <= FEAS_TOL:
                if row < 0 or basis[i] < basis[row]:
                    row = i
        if row < 0:
            best = None
            for i in range(n_rows):
                a = tab[i, col]
                if a > FEAS_TOL:
                    ratio = tab[i, -1] / a
                    if best is None or ratio < best - 1e-12 or (abs(ratio - best) <= 1e-12 and basis[i] < basis[row]):
                        best = ratio
                        row = i
            if row < 0:
                return "unbounded", iters
        _pivot(tab, basis, row, col)
        iters += 1
        if iters > cap:
            raise RuntimeError("simplex stalled")


def _solve(c, a, b, senses, cap):
    """Two-phase simplex for min c.x st rows of (a, senses, b), x >= 0.

    senses entries are '>=' or '<='.  Returns (status, x, y) with y the dual
    vector of the rows as given (positive for binding covering rows).
    """
    n_vars = len(c)
    n_rows = len(b)
    a = a.copy()
    b = b.copy()
    flips = np.ones(n_rows)
    senses = list(senses)
    for i in range(n_rows):
        if b[i] < 0.0:
            a[i] = -a[i]
            b[i] = -b[i]
            flips[i] = -1.0
            senses[i] = ">=" if senses[i] == "<=" else "<="

    # columns: x | one slack or surplus per row | artificials for >= rows
    art_rows = [i for i in range(n_rows) if senses[i] == ">="]
    n_cols = n_vars + n_rows + len(art_rows)
    artificial_from = n_vars + n_rows
    std = np.zeros((n_rows, n_cols))
    std[:, :n_vars] = a
    basis = [0] * n_rows
    art_pos = artificial_from
    for i in range(n_rows):
        if senses[i] == "<=":
            std[i, n_vars + i] = 1.0
            basis[i] = n_vars + i
        else:
            std[i, n_vars + i] = -1.0
            std[i, art_pos] = 1.0
            basis[i] = art_pos
            art_pos += 1

    tab = np.zeros((n_rows + 1, n_cols + 1))
    tab[:n_rows, :n_cols] = std
    tab[:n_rows, -1] = b

    allowed = list(range(artificial_from))
    if art_rows:
        cost1 = np.zeros(n_cols + 1)
        cost1[artificial_from:n_cols] = 1.0
        tab[n_rows] = cost1
        for i in range(n_rows):
            if cost1[basis[i]] != 0.0:
                tab[n_rows] -= cost1[basis[i]] * tab[i]
        status, iters = _run(tab, basis, allowed, artificial_from, cap, 0)
        if status != "optimal":
            return "infeasible", None, None
        if -tab[n_rows, -1] > FEAS_TOL * (1.0 + float(np.abs(b).sum())):
            return "infeasible", None, None
    else:
        iters = 0

    cost2 = np.zeros(n_cols + 1)
    cost2[:n_vars] = c
    tab[n_rows] = cost2
    for i in range(n_rows):
        if cost2[basis[i]] != 0.0:
            tab[n_rows] -= cost2[basis[i]] * tab[i]
    status, _ = _run(tab, basis, allowed, artificial_from, cap, iters)
    if status != "optimal":
        return status, None, None

    x = np.zeros(n_vars)
    for i, bv in enumerate(basis):
        if bv < n_vars:
            x[bv] = tab[i, -1]
    np.clip(x, 0.0, None, out=x)

    # Dual from the basis: solve B^T y = c_B against the standardized matrix.
    cost_full = np.zeros(n_cols)
    cost_full[:n_vars] = c
    basis_matrix = std[:, basis] if n_rows else np.zeros((0, 0))
    if n_rows:
        y_internal = np.linalg.solve(basis_matrix.T, cost_full[basis])
    else:
        y_internal = np.zeros(0)
    y = flips * y_internal
    return "optimal", x, y


def _certify(status, x, y, c, a, b, covering, notes):
    if status != "optimal":
        return LPSolution(status=status, notes=notes)
    value = float(c @ x)
    residual = a @ x - b
    if covering:
        primal_ok = bool((residual >= -CERT_TOL * (1.0 + np.abs(b))).all()) if len(b) else True
        dual_res = c - a.T @ y if len(b) else c
        dual_ok = bool((dual_res >= -CERT_TOL * (1.0 + np.abs(c))).all())
    else:
        primal_ok = bool((residual <= CERT_TOL * (1.0 + np.abs(b))).all()) if len(b) else True
        dual_res = a.T @ y - c if len(b) else -c
        dual_ok = bool((dual_res >= -CERT_TOL * (1.0 + np.abs(c))).all())
    sign_ok = bool((x >= -CERT_TOL).all()) and bool((y >= -CERT_TOL).all())
    gap = abs(value - float(b @ y)) if len(b) else abs(value)
    gap_ok = gap <= GAP_TOL * (1.0 + abs(value))
    if not (primal_ok and dual_ok and sign_ok and gap_ok):
        raise RuntimeError(
            "LP certificate check failed "
            f"(primal {primal_ok}, dual {dual_ok}, signs {sign_ok}, gap {gap:.3e})"
        )
    return LPSolution(status="optimal", x=x, y=y, value=value, notes=notes)


def _drop_zero_rows(a, b, covering):
    """Presolve: remove all-zero rows, failing fast when one is unsatisfiable."""
    keep = []
    dropped = []
    for i in range(len(b)):
        if np.any(a[i]):
            keep.append(i)
            continue
        violated = b[i] > FEAS_TOL if covering else b[i] < -FEAS_TOL
        if violated:
            return None, None, None, i
        dropped.append(i)
    return a[keep], b[keep], (keep, dropped), None


def solve_covering_lp(lp: LinearProgram, iteration_cap: int | None = None) -> LPSolution:
    """min c.x subject to A x >= b, x >= 0, with a certifying dual (max b.y, A^T y <= c, y >= 0)."""
    c, a, b = lp.objective, lp.matrix, lp.rhs
    if iteration_cap is None:
        iteration_cap = 10 * (lp.num_vars + lp.num_constraints) ** 2 + 100
    a2, b2, kept, bad = _drop_zero_rows(a, b, covering=True)
    if bad is not None:
        return LPSolution(status="infeasible", notes=f"zero row {bad} requires {b[bad]:g} > 0")
    keep, dropped = kept
    notes = f"dropped zero rows {dropped}" if dropped else ""
    status, x, y_kept = _solve(c, a2, b2, [">="] * len(b2), iteration_cap)
    y = None
    if y_kept is not None:
        y = np.zeros(len(b))
        y[keep] = y_kept
    return _certify(status, x, y, c, a, b, covering=True, notes=notes)


def solve_packing_dual(lp: LinearProgram, iteration_cap: int | None = None) -> LPSolution:
    """max c.x subject to A x <= b, x >= 0, with a certifying dual (min b.y, A^T y >= c, y >= 0)."""
    c, a, b = lp.objective, lp.matrix, lp.rhs
    if iteration_cap is None:
        iteration_cap = 10 * (lp.num_vars + lp.num_constraints) ** 2 + 100
    a2, b2, kept, bad = _drop_zero_rows(a, b, covering=False)
    if bad is not None:
        return LPSolution(status="infeasible", notes=f"zero row {bad} requires 0 <= {b[bad]:g}")
    keep, dropped = kept
    notes = f"dropped zero rows {dropped}" if dropped else ""
    status, x, y_kept = _solve(-c, a2, b2, ["<="] * len(b2), iteration_cap)
    if status != "optimal":
        return LPSolution(status=status, notes=notes)
    y = np.zeros(len(b))
    y[keep] = -y_kept
    return _certify(status, x, y, c, a, b, covering=False, notes=notes)
