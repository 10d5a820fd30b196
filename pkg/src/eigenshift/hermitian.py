"""Hermitian matrices over floating or exact scalar fields.

Matrices are immutable.  Construction goes through the upper triangle plus a
real diagonal, so conjugate symmetry holds by construction rather than by
post-hoc checking.  Exact matrices (quadratic-field entries) embed to complex
floats for eigenvalue work; exact code paths only ever need inertia, which the
inertia module computes without eigenvalues.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    ConvergenceFailureError,
    DimensionMismatchError,
    EmptySelectionError,
    FieldMismatchError,
    FormatError,
    MixedFieldError,
    NonRealDiagonalError,
    NotPositiveDefiniteError,
)
from .scalars import (
    EXACT_FIELDS,
    FIELD_COMPLEX,
    FIELDS,
    QuadExt,
    conjugate,
    d_for_field,
    field_for_d,
    format_scalar,
    parse_scalar,
)

_HERMITIAN_TOL = 1e-12  # permitted conjugate-symmetry discrepancy for float input


@dataclass(frozen=True)
class Spectrum:
    """Real eigenvalues sorted in nonincreasing order."""

    values: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        for x, y in zip(self.values, self.values[1:]):
            if x < y:
                raise ValueError("spectrum must be sorted nonincreasing")

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]


class HermitianMatrix:
    """Immutable square self-adjoint matrix over one scalar field."""

    __slots__ = ("n", "field", "_rows")

    def __init__(self, n: int, field: str, rows: tuple):
        # Internal constructor; use make_hermitian / from_entries.
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "_rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("HermitianMatrix is immutable")

    @property
    def is_exact(self) -> bool:
        return self.field in EXACT_FIELDS

    def rows(self) -> tuple:
        return self._rows

    def entry(self, i: int, j: int):
        return self._rows[i][j]

    def diagonal(self) -> tuple:
        return tuple(self._rows[i][i] for i in range(self.n))

    def to_numpy(self) -> np.ndarray:
        return np.array(
            [[complex(e) for e in row] for row in self._rows], dtype=complex
        )

    def __eq__(self, other):
        if not isinstance(other, HermitianMatrix):
            return NotImplemented
        return (
            self.n == other.n
            and self.field == other.field
            and self._rows == other._rows
        )

    def __hash__(self):
        return hash((self.n, self.field, self._rows))

    def __repr__(self):
        return f"HermitianMatrix(n={self.n}, field={self.field!r})"


# -- construction -------------------------------------------------------------


_DEFAULT_EXACT_FIELD = EXACT_FIELDS[0]  # pure-rational input defaults to q(-1)


def _infer_field(entries: Iterable) -> str:
    field = None
    has_float = False
    for e in entries:
        if isinstance(e, QuadExt):
            if e.b != 0:
                f = field_for_d(e.d)
                if field is not None and field != f:
                    raise MixedFieldError("entries from different quadratic fields")
                field = f
        elif isinstance(e, (float, complex)):
            has_float = True
        elif not isinstance(e, (int, Fraction)):
            raise TypeError(f"unsupported scalar type {type(e).__name__}")
    if field is not None:
        if has_float:
            raise MixedFieldError("cannot mix floating entries with exact field entries")
        return field
    return FIELD_COMPLEX if has_float else _DEFAULT_EXACT_FIELD


def _normalize_entry(e, field: str):
    if field == FIELD_COMPLEX:
        return complex(e)
    d = d_for_field(field)
    if isinstance(e, QuadExt):
        if e.b != 0 and e.d != d:
            raise MixedFieldError("entry from a different quadratic field")
        return QuadExt(e.a, e.b, d)
    if isinstance(e, (int, Fraction)):
        return QuadExt(e, 0, d)
    raise MixedFieldError("floating entry in an exact-field matrix")


def _check_real_diagonal(value, field: str, index: int):
    if field == FIELD_COMPLEX:
        if complex(value).imag != 0:
            raise NonRealDiagonalError(f"diagonal entry {index} has imaginary part")
        return complex(complex(value).real, 0.0)
    v = _normalize_entry(value, field)
    if v.b != 0:
        raise NonRealDiagonalError(f"diagonal entry {index} has irrational part")
    return v


def make_hermitian(n: int, upper: Sequence[Sequence], field: str | None = None) -> HermitianMatrix:
    """Build an n x n Hermitian matrix from its upper triangle.

    ``upper[i]`` holds the entries of row i from the diagonal rightward, so it
    must have length n - i and start with a real value.  The lower triangle is
    filled with conjugates.  The field is inferred from the entries when not
    given: any float/complex entry forces the floating field, quadratic-field
    entries force their field, and pure rationals default to q(-1).
    """
    if n < 1:
        raise DimensionMismatchError("dimension must be at least 1")
    if len(upper) != n:
        raise DimensionMismatchError(f"expected {n} upper rows, got {len(upper)}")
    for i, row in enumerate(upper):
        if len(row) != n - i:
            raise DimensionMismatchError(f"upper row {i} must have {n - i} entries")
    if field is None:
        field = _infer_field(e for row in upper for e in row)
    if field not in FIELDS:
        raise ValueError(f"unknown field {field!r}")
    grid = [[None] * n for _ in range(n)]
    for i in range(n):
        grid[i][i] = _check_real_diagonal(upper[i][0], field, i)
        for k, e in enumerate(upper[i][1:], start=i + 1):
            v = _normalize_entry(e, field)
            grid[i][k] = v
            grid[k][i] = conjugate(v)
    return HermitianMatrix(n, field, tuple(tuple(r) for r in grid))


def from_entries(rows: Sequence[Sequence], field: str | None = None) -> HermitianMatrix:
    """Build a matrix from a full entry grid, verifying conjugate symmetry.

    Exact fields require exact symmetry; floating input may deviate by at most
    1e-12 per entry and is then canonicalized from the upper triangle.
    """
    n = len(rows)
    if n < 1 or any(len(r) != n for r in rows):
        raise DimensionMismatchError("entry grid must be square and nonempty")
    if field is None:
        field = _infer_field(e for row in rows for e in row)
    if field == FIELD_COMPLEX:
        grid = [[complex(e) for e in row] for row in rows]
        for i in range(n):
            if abs(grid[i][i].imag) > _HERMITIAN_TOL:
                raise NonRealDiagonalError(f"diagonal entry {i} has imaginary part")
            for j in range(i + 1, n):
                if abs(grid[i][j] - grid[j][i].conjugate()) > _HERMITIAN_TOL:
                    _raise_not_hermitian(i, j)
    else:
        grid = [[_normalize_entry(e, field) for e in row] for row in rows]
        for i in range(n):
            if grid[i][i].b != 0:
                raise NonRealDiagonalError(f"diagonal entry {i} has irrational part")
            for j in range(i + 1, n):
                if grid[i][j] != grid[j][i].conjugate():
                    _raise_not_hermitian(i, j)
    upper = [[grid[i][j] for j in range(i, n)] for i in range(n)]
    return make_hermitian(n, upper, field)


def _raise_not_hermitian(i: int, j: int):
    raise DimensionMismatchError(
        f"entries ({i},{j}) and ({j},{i}) are not conjugate-symmetric"
    )


def from_numpy(arr: np.ndarray) -> HermitianMatrix:
    """Wrap a numerically Hermitian complex array (upper triangle wins)."""
    arr = np.asarray(arr, dtype=complex)
    n = arr.shape[0]
    upper = [[arr[i, i].real] + [arr[i, j] for j in range(i + 1, n)] for i in range(n)]
    return make_hermitian(n, upper, FIELD_COMPLEX)


def identity(n: int, field: str = FIELD_COMPLEX) -> HermitianMatrix:
    one = 1.0 if field == FIELD_COMPLEX else Fraction(1)
    zero = 0.0 if field == FIELD_COMPLEX else Fraction(0)
    return make_hermitian(
        n, [[one] + [zero] * (n - i - 1) for i in range(n)], field
    )


def diagonal(values: Sequence, field: str | None = None) -> HermitianMatrix:
    n = len(values)
    return make_hermitian(
        n,
        [[values[i]] + [0] * (n - i - 1) for i in range(n)],
        field,
    )


# -- structural operations -----------------------------------------------------


def principal_submatrix(a: HermitianMatrix, keep: Iterable[int]) -> HermitianMatrix:
    """Restrict rows and columns to ``keep`` (original order preserved)."""
    idx = sorted(set(keep))
    if not idx:
        raise EmptySelectionError("principal submatrix needs at least one index")
    if idx[0] < 0 or idx[-1] >= a.n:
        raise DimensionMismatchError("submatrix index out of range")
    rows = tuple(tuple(a.entry(i, j) for j in idx) for i in idx)
    return HermitianMatrix(len(idx), a.field, rows)


def _as_field_real(r, field: str):
    if field == FIELD_COMPLEX:
        if isinstance(r, (int, float, Fraction)):
            return float(r)
        raise FieldMismatchError("shift must be a real number")
    if isinstance(r, (int, Fraction)):
        return QuadExt(r, 0, d_for_field(field))
    if isinstance(r, QuadExt) and r.b == 0:
        return QuadExt(r.a, 0, d_for_field(field))
    raise FieldMismatchError("exact matrices require a rational shift")


def shift(a: HermitianMatrix, r) -> HermitianMatrix:
    """A - r*I."""
    rv = _as_field_real(r, a.field)
    rows = list(list(row) for row in a.rows())
    for i in range(a.n):
        rows[i][i] = rows[i][i] - rv
    return HermitianMatrix(a.n, a.field, tuple(tuple(row) for row in rows))


def pencil_shift(a: HermitianMatrix, p: HermitianMatrix, r) -> HermitianMatrix:
    """A - r*P, entrywise."""
    if a.n != p.n:
        raise DimensionMismatchError("pencil operands must have equal dimension")
    if a.field != p.field:
        raise FieldMismatchError("pencil operands must share a field")
    rv = _as_field_real(r, a.field)
    rows = tuple(
        tuple(a.entry(i, j) - rv * p.entry(i, j) for j in range(a.n))
        for i in range(a.n)
    )
    return HermitianMatrix(a.n, a.field, rows)


def matrix_sum(a: HermitianMatrix, b: HermitianMatrix) -> HermitianMatrix:
    if a.n != b.n:
        raise DimensionMismatchError("sum operands must have equal dimension")
    if a.field != b.field:
        raise FieldMismatchError("sum operands must share a field")
    rows = tuple(
        tuple(a.entry(i, j) + b.entry(i, j) for j in range(a.n)) for i in range(a.n)
    )
    return HermitianMatrix(a.n, a.field, rows)


def scale(a: HermitianMatrix, c) -> HermitianMatrix:
    """c * A for real c (keeps the matrix Hermitian)."""
    cv = _as_field_real(c, a.field)
    rows = tuple(
        tuple(cv * a.entry(i, j) for j in range(a.n)) for i in range(a.n)
    )
    return HermitianMatrix(a.n, a.field, rows)


def diagonal_part(a: HermitianMatrix) -> HermitianMatrix:
    """The diagonal of A as a matrix (off-diagonal zeroed)."""
    zero = 0.0 if a.field == FIELD_COMPLEX else QuadExt(0, 0, d_for_field(a.field))
    rows = tuple(
        tuple(a.entry(i, j) if i == j else zero for j in range(a.n))
        for i in range(a.n)
    )
    return HermitianMatrix(a.n, a.field, rows)


def frobenius_norm(a: HermitianMatrix) -> float:
    return float(np.linalg.norm(a.to_numpy(), "fro"))


# -- spectra -------------------------------------------------------------------


def eigenvalues(a: HermitianMatrix) -> Spectrum:
    """All eigenvalues, nonincreasing.

    Exact matrices are embedded into complex floats first.  Delegates to an
    established dense Hermitian solver (tridiagonal reduction + implicit
    shifts underneath), which meets the backward-stability contract.
    """
    try:
        vals = np.linalg.eigvalsh(a.to_numpy())
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailureError(str(exc)) from exc
    return Spectrum(tuple(float(v) for v in vals[::-1]))


def cholesky(p: HermitianMatrix, tol: float | None = None) -> np.ndarray:
    """Lower-triangular L with P = L L*.

    Pivots must exceed ``tol`` (default 1e-12 * max(1, ||P||_F)); the first
    failing pivot index is reported otherwise.
    """
    m = p.to_numpy()
    n = p.n
    if tol is None:
        tol = 1e-12 * max(1.0, float(np.linalg.norm(m, "fro")))
    low = np.zeros((n, n), dtype=complex)
    for j in range(n):
        pivot = m[j, j].real - float(np.sum(np.abs(low[j, :j]) ** 2))
        if pivot <= tol:
            raise NotPositiveDefiniteError(j)
        low[j, j] = math.sqrt(pivot)
        for i in range(j + 1, n):
            s = m[i, j] - np.sum(low[i, :j] * np.conj(low[j, :j]))
            low[i, j] = s / low[j, j]
    return low


def pencil_reduce(p: HermitianMatrix, a: HermitianMatrix) -> HermitianMatrix:
    """B = L^{-1} A L^{-*} for P = L L*: spec(B) = roots of det(lambda*P - A)."""
    if a.n != p.n:
        raise DimensionMismatchError("pencil operands must have equal dimension")
    low = cholesky(p)
    am = a.to_numpy()
    y = np.linalg.solve(low, am)
    b = np.linalg.solve(low, y.conj().T).conj().T
    b = (b + b.conj().T) / 2.0
    return from_numpy(b)


# -- .hmat text format ----------------------------------------------------------


def parse_hmat(text: str, source: str = "<hmat>") -> HermitianMatrix:
    """Parse the .hmat matrix format.

    Line 1: ``hmat v1``; line 2: ``field complex|q(-1)|q(-3)``; line 3:
    ``n <dim>``; then n rows of n whitespace-separated scalar tokens.  The
    full matrix is given; conjugate symmetry and the real diagonal are
    verified on load.
    """
    lines = text.splitlines()
    if not lines or lines[0].strip() != "hmat v1":
        raise FormatError(source, 1, lines[0].strip() if lines else "", "expected 'hmat v1' header")
    if len(lines) < 3:
        raise FormatError(source, len(lines), "", "truncated header")
    field_line = lines[1].split()
    if len(field_line) != 2 or field_line[0] != "field" or field_line[1] not in FIELDS:
        raise FormatError(source, 2, lines[1].strip(), "expected 'field complex|q(-1)|q(-3)'")
    field = field_line[1]
    dim_line = lines[2].split()
    if len(dim_line) != 2 or dim_line[0] != "n" or not dim_line[1].isdigit():
        raise FormatError(source, 3, lines[2].strip(), "expected 'n <dim>'")
    n = int(dim_line[1])
    if n < 1:
        raise FormatError(source, 3, dim_line[1], "dimension must be positive")
    body = [ln for ln in lines[3:] if ln.strip()]
    if len(body) != n:
        raise FormatError(source, len(lines), "", f"expected {n} matrix rows, found {len(body)}")
    grid = []
    for k, line in enumerate(body):
        tokens = line.split()
        if len(tokens) != n:
            raise FormatError(source, 4 + k, line.strip(), f"expected {n} entries")
        row = []
        for tok in tokens:
            try:
                row.append(parse_scalar(tok, field))
            except FormatError:
                raise FormatError(source, 4 + k, tok, "malformed scalar") from None
        grid.append(row)
    try:
        return from_entries(grid, field)
    except (NonRealDiagonalError, DimensionMismatchError, MixedFieldError) as exc:
        raise FormatError(source, 4, "", str(exc)) from exc


def load_hmat(path) -> HermitianMatrix:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_hmat(fh.read(), source=str(path))


def dump_hmat(a: HermitianMatrix) -> str:
    lines = ["hmat v1", f"field {a.field}", f"n {a.n}"]
    for row in a.rows():
        lines.append(" ".join(format_scalar(e, a.field) for e in row))
    return "\n".join(lines) + "\n"


def save_hmat(a: HermitianMatrix, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_hmat(a))
