"""Inertia triples (n_plus, n_minus, n_zero) by two independent routes.

The floating route counts eigenvalues against a zero-classification
tolerance.  The exact route never touches eigenvalues: it runs a recursive
congruence elimination with Schur complements over the quadratic field,
relying on the invariance of inertia under congruence.  Having both routes
lets every verdict be cross-checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import FieldMismatchError
from .hermitian import (
    HermitianMatrix,
    eigenvalues,
    frobenius_norm,
    pencil_shift,
    shift,
)
from .scalars import FIELD_COMPLEX


@dataclass(frozen=True)
class Inertia:
    n_plus: int
    n_minus: int
    n_zero: int

    @property
    def n(self) -> int:
        return self.n_plus + self.n_minus + self.n_zero

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.n_plus, self.n_minus, self.n_zero)

    def to_json(self) -> dict:
        return {"n_plus": self.n_plus, "n_minus": self.n_minus, "n_zero": self.n_zero}


def default_tolerance(a: HermitianMatrix) -> float:
    """Zero-classification tolerance: relative to the Frobenius norm.

    The max(1, .) keeps the tolerance well above the 1e-12 absolute floor for
    every representable matrix, so graph operators of very different scales
    classify consistently.
    """
    return 1e-9 * max(1.0, frobenius_norm(a))


def inertia_float(a: HermitianMatrix, tol: float | None = None) -> Inertia:
    """Count eigenvalues above tol, below -tol, and within [-tol, tol]."""
    if tol is None:
        tol = default_tolerance(a)
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    plus = minus = zero = 0
    for v in eigenvalues(a):
        if v > tol:
            plus += 1
        elif v < -tol:
            minus += 1
        else:
            zero += 1
    return Inertia(plus, minus, zero)


def inertia_exact(a: HermitianMatrix) -> Inertia:
    """Exact inertia of a quadratic-field matrix via congruence elimination.

    Repeatedly pivots on the real diagonal entry of largest magnitude (ties
    to the lowest index) and forms the Schur complement of the pivot.  When
    the whole diagonal is zero but some off-diagonal x survives, the 2x2
    block [[0, x], [conj(x), 0]] has eigenvalues +-|x| and is eliminated in
    one step, contributing (1, 1, 0).  A zero matrix sends the remaining
    dimension to n_zero.
    """
    if a.field == FIELD_COMPLEX:
        raise FieldMismatchError("exact inertia requires a quadratic-field matrix")
    m = [list(row) for row in a.rows()]
    active = list(range(a.n))
    plus = minus = zero = 0
    while active:
        pivot = None
        best = Fraction(0)
        for idx in active:
            val = m[idx][idx].a  # diagonal is real, so the value is .a
            if val != 0 and abs(val) > best:
                best = abs(val)
                pivot = idx
        if pivot is not None:
            p = m[pivot][pivot].a
            if p > 0:
                plus += 1
            else:
                minus += 1
            rest = [i for i in active if i != pivot]
            col = {i: m[i][pivot] for i in rest}
            for i in rest:
                ci = col[i]
                row_i = m[i]
                for j in rest:
                    row_i[j] = row_i[j] - ci * col[j].conjugate() / p
            active = rest
            continue
        off = None
        for ai, i in enumerate(active):
            for j in active[ai + 1 :]:
                if m[i][j]:
                    off = (i, j)
                    break
            if off:
                break
        if off is None:
            zero += len(active)
            break
        i, j = off
        x = m[i][j]
        xbar = x.conjugate()
        plus += 1
        minus += 1
        rest = [k for k in active if k != i and k != j]
        col_i = {r: m[r][i] for r in rest}
        col_j = {r: m[r][j] for r in rest}
        for r in rest:
            ri, rj = col_i[r], col_j[r]
            row_r = m[r]
            for s in rest:
                row_r[s] = (
                    row_r[s]
                    - ri * col_j[s].conjugate() / xbar
                    - rj * col_i[s].conjugate() / x
                )
        active = rest
    return Inertia(plus, minus, zero)


def shifted_inertia(
    a: HermitianMatrix, r, mode: str = "float", tol: float | None = None
) -> Inertia:
    """Inertia of A - r*I by the selected route."""
    shifted = shift(a, r)
    if mode == "float":
        return inertia_float(shifted, tol)
    if mode == "exact":
        return inertia_exact(shifted)
    raise ValueError(f"unknown inertia mode {mode!r}")


def pencil_inertia(
    a: HermitianMatrix,
    p: HermitianMatrix,
    r,
    mode: str = "float",
    tol: float | None = None,
) -> Inertia:
    """Inertia of A - r*P (P Hermitian, not necessarily definite)."""
    shifted = pencil_shift(a, p, r)
    if mode == "float":
        return inertia_float(shifted, tol)
    if mode == "exact":
        return inertia_exact(shifted)
    raise ValueError(f"unknown inertia mode {mode!r}")
