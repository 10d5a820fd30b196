"""Graph data model and the operator constructors.

One record list covers all four graph flavors: undirected edges carry an
optional sign and weight, digraphs are stored as arcs and digons (a digon is
one record, deleted as one unit).  Operators are built with exact rational /
quadratic-field entries whenever possible; only the normalized kinds, which
need square roots, are floating.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Iterable

from .errors import (
    FormatError,
    IncompatibleOperatorError,
    NotGeneralizedLaplacianError,
    UnexpectedDifferenceShapeError,
)
from .hermitian import (
    HermitianMatrix,
    diagonal,
    make_hermitian,
)
from .inertia import default_tolerance
from .scalars import (
    FIELD_COMPLEX,
    FIELD_GAUSS,
    FIELD_OMEGA,
    OMEGA,
    QuadExt,
    abs_squared,
    conjugate,
    d_for_field,
)

EDGE = "edge"
ARC = "arc"
DIGON = "digon"
RECORD_KINDS = (EDGE, ARC, DIGON)


def _as_weight(w) -> Fraction:
    wf = Fraction(w)
    if wf <= 0:
        raise ValueError("record weight must be positive")
    return wf


@dataclass(frozen=True)
class EdgeRecord:
    """One typed incidence record: an undirected edge, an arc, or a digon."""

    kind: str
    u: int
    v: int
    weight: Fraction = Fraction(1)
    sign: int = 1

    def __post_init__(self):
        if self.kind not in RECORD_KINDS:
            raise ValueError(f"unknown record kind {self.kind!r}")
        object.__setattr__(self, "weight", _as_weight(self.weight))
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.kind != EDGE:
            if self.u == self.v:
                raise ValueError(f"{self.kind} records cannot be loops")
            if self.sign != 1:
                raise ValueError("signs are meaningful for edges only")
        elif self.u == self.v and self.sign != 1:
            raise ValueError("loops cannot be negatively signed")

    @property
    def pair(self) -> tuple[int, int]:
        return (self.u, self.v) if self.u <= self.v else (self.v, self.u)


@dataclass(frozen=True)
class GraphSpec:
    """A vertex count plus records; immutable, at most one record per pair."""

    n: int
    records: tuple[EdgeRecord, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "records", tuple(self.records))
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen = set()
        for rec in self.records:
            if not (0 <= rec.u < self.n and 0 <= rec.v < self.n):
                raise ValueError(f"record {rec} references a vertex out of range")
            if rec.pair in seen:
                raise ValueError(f"duplicate record for vertex pair {rec.pair}")
            seen.add(rec.pair)


class OperatorKind:
    """Names of the matrices buildable from a graph."""

    ADJACENCY = "adjacency"
    LAPLACIAN = "laplacian"
    NORMALIZED_LAPLACIAN = "normalized_laplacian"
    HERM_ADJACENCY_I = "herm_adjacency_i"
    HERM_LAPLACIAN_I = "herm_laplacian_i"
    HERM_NORMALIZED_I = "herm_normalized_i"
    HERM_ADJACENCY_OMEGA = "herm_adjacency_omega"
    HERM_LAPLACIAN_OMEGA = "herm_laplacian_omega"
    HERM_NORMALIZED_OMEGA = "herm_normalized_omega"

    ALL = (
        ADJACENCY,
        LAPLACIAN,
        NORMALIZED_LAPLACIAN,
        HERM_ADJACENCY_I,
        HERM_LAPLACIAN_I,
        HERM_NORMALIZED_I,
        HERM_ADJACENCY_OMEGA,
        HERM_LAPLACIAN_OMEGA,
        HERM_NORMALIZED_OMEGA,
    )

    UNDIRECTED = (ADJACENCY, LAPLACIAN, NORMALIZED_LAPLACIAN)
    DIRECTED = tuple(k for k in ALL if k.startswith("herm_"))
    LAPLACIAN_FAMILY = (LAPLACIAN, HERM_LAPLACIAN_I, HERM_LAPLACIAN_OMEGA)
    NORMALIZED = (NORMALIZED_LAPLACIAN, HERM_NORMALIZED_I, HERM_NORMALIZED_OMEGA)

    #: Unnormalized Laplacian kind backing each normalized kind.
    BASE_OF = {
        NORMALIZED_LAPLACIAN: LAPLACIAN,
        HERM_NORMALIZED_I: HERM_LAPLACIAN_I,
        HERM_NORMALIZED_OMEGA: HERM_LAPLACIAN_OMEGA,
    }
    NORMALIZED_OF = {v: k for k, v in BASE_OF.items()}


_KIND_FIELD = {
    OperatorKind.ADJACENCY: FIELD_GAUSS,
    OperatorKind.LAPLACIAN: FIELD_GAUSS,
    OperatorKind.HERM_ADJACENCY_I: FIELD_GAUSS,
    OperatorKind.HERM_LAPLACIAN_I: FIELD_GAUSS,
    OperatorKind.HERM_ADJACENCY_OMEGA: FIELD_OMEGA,
    OperatorKind.HERM_LAPLACIAN_OMEGA: FIELD_OMEGA,
}


def _check_kind_records(g: GraphSpec, kind: str) -> None:
    if kind not in OperatorKind.ALL:
        raise IncompatibleOperatorError(f"unknown operator kind {kind!r}")
    directed = kind in OperatorKind.DIRECTED
    laplacian_family = kind in OperatorKind.LAPLACIAN_FAMILY or kind in OperatorKind.NORMALIZED
    for rec in g.records:
        if directed and rec.kind == EDGE:
            raise IncompatibleOperatorError(
                f"{kind} requires arc/digon records, found an edge {rec.pair}"
            )
        if not directed and rec.kind != EDGE:
            raise IncompatibleOperatorError(
                f"{kind} requires edge records, found {rec.kind} {rec.pair}"
            )
        if rec.sign != 1 and not laplacian_family:
            raise IncompatibleOperatorError(
                f"signed edges are only meaningful for Laplacian kinds, not {kind}"
            )


def degree_matrix(g: GraphSpec, field: str = FIELD_GAUSS) -> HermitianMatrix:
    """Diagonal of underlying-undirected degrees (signs ignored, loops once)."""
    degs = [Fraction(0)] * g.n
    for rec in g.records:
        degs[rec.u] += rec.weight
        if rec.v != rec.u:
            degs[rec.v] += rec.weight
    if field == FIELD_COMPLEX:
        return diagonal([float(d) for d in degs], FIELD_COMPLEX)
    return diagonal(degs, field)


def _entry_grid(g: GraphSpec, kind: str, as_float: bool):
    """Adjacency entries for the requested kind, as a dict keyed by (i, j)."""
    field = _KIND_FIELD[kind]
    d = d_for_field(field)
    unit_i = QuadExt(0, 1, -1)
    entries: dict[tuple[int, int], object] = {}

    def put(i, j, value):
        entries[(i, j)] = value

    for rec in g.records:
        w = rec.weight
        if kind in (OperatorKind.ADJACENCY, OperatorKind.LAPLACIAN):
            val = QuadExt(rec.sign * w, 0, d)
            put(rec.u, rec.v, val)
            if rec.u != rec.v:
                put(rec.v, rec.u, val)
        elif rec.kind == DIGON:
            val = QuadExt(w, 0, d)
            put(rec.u, rec.v, val)
            put(rec.v, rec.u, val)
        else:  # single arc u -> v
            unit = unit_i if kind in (OperatorKind.HERM_ADJACENCY_I, OperatorKind.HERM_LAPLACIAN_I) else OMEGA
            val = QuadExt(w, 0, d) * unit
            put(rec.u, rec.v, val)
            put(rec.v, rec.u, val.conjugate())
    if as_float:
        entries = {k: complex(v) for k, v in entries.items()}
    return entries, field


def build_operator(g: GraphSpec, kind: str, as_float: bool = False) -> HermitianMatrix:
    """Build the requested operator matrix.

    Adjacency and Laplacian kinds come out exact (weights are rationals by
    the data model; arcs put the unit i or the sixth root of unity on the
    off-diagonal).  Normalized kinds need square roots, so they are always
    floating; pass as_float=True to force floating entries elsewhere too.
    """
    _check_kind_records(g, kind)
    if kind in OperatorKind.NORMALIZED:
        base = build_operator(g, OperatorKind.BASE_OF[kind], as_float=True)
        return normalizer(base)
    entries, field = _entry_grid(g, kind, as_float)
    out_field = FIELD_COMPLEX if as_float else field
    zero = 0.0 if as_float else QuadExt(0, 0, d_for_field(field))

    adjacency_like = kind in (
        OperatorKind.ADJACENCY,
        OperatorKind.HERM_ADJACENCY_I,
        OperatorKind.HERM_ADJACENCY_OMEGA,
    )
    if adjacency_like:
        upper = [
            [entries.get((i, j), zero) for j in range(i, g.n)] for i in range(g.n)
        ]
        return make_hermitian(g.n, upper, out_field)

    degs = degree_matrix(g, FIELD_GAUSS).diagonal()
    upper = []
    for i in range(g.n):
        deg = float(degs[i].a) if as_float else QuadExt(degs[i].a, 0, d_for_field(field))
        diag = deg - entries.get((i, i), zero)
        row = [diag]
        for j in range(i + 1, g.n):
            row.append(zero - entries.get((i, j), zero))
        upper.append(row)
    return make_hermitian(g.n, upper, out_field)


# -- generalized Laplacians and the normalizer ----------------------------------


def _sqrt_bounds(x: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    """Rational lower/upper bounds on sqrt(x) tight to about 2^-bits."""
    if x < 0:
        raise ValueError("negative radicand")
    scale = 1 << bits
    num = x.numerator * x.denominator * scale * scale
    root = math.isqrt(num)
    lo = Fraction(root, x.denominator * scale)
    hi = Fraction(root + 1, x.denominator * scale)
    return lo, hi


def _exact_abs_is_square(sq: Fraction) -> Fraction | None:
    """The exact rational sqrt of sq, or None if it is irrational."""
    num = math.isqrt(sq.numerator)
    den = math.isqrt(sq.denominator)
    if num * num == sq.numerator and den * den == sq.denominator:
        return Fraction(num, den)
    return None


def _row_dominance_exact(diag: Fraction, offdiag_sq: list[Fraction]) -> bool:
    """Decide diag >= sum(sqrt(q) for q in offdiag_sq) exactly.

    Perfect squares are summed exactly; irrational magnitudes are bracketed
    by rational bounds that are refined until the comparison is decided (a
    sum of square roots of rationals is never exactly rational unless every
    term is, so the refinement terminates).
    """
    exact_sum = Fraction(0)
    irrational = []
    for q in offdiag_sq:
        root = _exact_abs_is_square(q)
        if root is None:
            irrational.append(q)
        else:
            exact_sum += root
    if not irrational:
        return diag >= exact_sum
    bits = 32
    while bits <= 4096:
        lo = exact_sum + sum(_sqrt_bounds(q, bits)[0] for q in irrational)
        hi = exact_sum + sum(_sqrt_bounds(q, bits)[1] for q in irrational)
        if hi <= diag:
            return True
        if lo > diag:
            return False
        bits *= 2
    raise ArithmeticError("could not decide diagonal dominance")


class LaplacianCheck(tuple):
    """(ok, first violating row or None) with attribute access."""

    __slots__ = ()

    def __new__(cls, ok: bool, row: int | None):
        return super().__new__(cls, (ok, row))

    @property
    def ok(self) -> bool:
        return self[0]

    @property
    def row(self) -> int | None:
        return self[1]

    def __bool__(self):
        return self[0]


def is_generalized_laplacian(L: HermitianMatrix, tol: float | None = None) -> LaplacianCheck:
    """Row diagonal dominance: each diagonal entry bounds its off-row magnitudes.

    Exact matrices are decided exactly; floating matrices get a tolerance
    (default: the zero-classification tolerance of L).
    """
    if L.field == FIELD_COMPLEX:
        if tol is None:
            tol = default_tolerance(L)
        for i in range(L.n):
            diag = L.entry(i, i).real
            total = sum(abs(L.entry(i, j)) for j in range(L.n) if j != i)
            if diag < total - tol:
                return LaplacianCheck(False, i)
        return LaplacianCheck(True, None)
    for i in range(L.n):
        diag_entry = L.entry(i, i)
        if diag_entry.a < 0:
            return LaplacianCheck(False, i)
        offdiag_sq = [
            abs_squared(L.entry(i, j)) for j in range(L.n) if j != i and L.entry(i, j)
        ]
        if not _row_dominance_exact(diag_entry.a, offdiag_sq):
            return LaplacianCheck(False, i)
    return LaplacianCheck(True, None)


def normalizer(L: HermitianMatrix, tol: float | None = None) -> HermitianMatrix:
    """Symmetrically scale a generalized Laplacian by its diagonal.

    Rows with a zero diagonal entry stay all-zero (they already are, by
    dominance); every other diagonal entry becomes exactly 1.  The result is
    floating because of the square roots.
    """
    check = is_generalized_laplacian(L, tol)
    if not check.ok:
        raise NotGeneralizedLaplacianError(check.row)
    m = L.to_numpy()
    n = L.n
    diag = [m[i, i].real for i in range(n)]
    inv_sqrt = [0.0 if d == 0 else 1.0 / math.sqrt(d) for d in diag]
    upper = []
    for i in range(n):
        row = [1.0 if diag[i] != 0 else 0.0]
        for j in range(i + 1, n):
            row.append(m[i, j] * inv_sqrt[i] * inv_sqrt[j])
        upper.append(row)
    return make_hermitian(n, upper, FIELD_COMPLEX)


# -- record surgery ---------------------------------------------------------------


def delete_record(g: GraphSpec, which: int) -> GraphSpec:
    """Remove one record; the vertex count is unchanged (isolation allowed)."""
    if not (0 <= which < len(g.records)):
        raise IndexError(f"record index {which} out of range")
    recs = g.records[:which] + g.records[which + 1 :]
    return GraphSpec(g.n, recs)


def reduce_weight(g: GraphSpec, which: int, amount) -> GraphSpec:
    """Lower one record's weight by a positive amount; removing it at zero."""
    if not (0 <= which < len(g.records)):
        raise IndexError(f"record index {which} out of range")
    amt = Fraction(amount)
    rec = g.records[which]
    if not (0 < amt <= rec.weight):
        raise ValueError("reduction must be positive and at most the record weight")
    if amt == rec.weight:
        return delete_record(g, which)
    new_rec = EdgeRecord(rec.kind, rec.u, rec.v, rec.weight - amt, rec.sign)
    recs = g.records[:which] + (new_rec,) + g.records[which + 1 :]
    return GraphSpec(g.n, recs)


@dataclass(frozen=True)
class DifferenceSummary:
    """The rank-2 block left by deleting one record from a Laplacian."""

    weight: Fraction
    coeff: object  # unit-modulus scalar c with the block w * [[1, c], [conj(c), 1]]
    position: tuple[int, int]


def laplacian_difference(g: GraphSpec, which: int, kind: str) -> DifferenceSummary:
    """Extract (w, c) from L(G) - L(G - record), verifying the rank-2 shape.

    The block must be supported on the record's endpoints with equal real
    diagonal w > 0 and a unit-modulus off-diagonal ratio c; anything else
    means a builder bug and raises UnexpectedDifferenceShapeError.
    """
    if kind not in OperatorKind.LAPLACIAN_FAMILY:
        raise IncompatibleOperatorError(
            f"difference extraction needs an unnormalized Laplacian kind, not {kind}"
        )
    if not (0 <= which < len(g.records)):
        raise IndexError(f"record index {which} out of range")
    rec = g.records[which]
    if rec.u == rec.v:
        raise UnexpectedDifferenceShapeError("loop records leave no rank-2 difference")
    before = build_operator(g, kind)
    after = build_operator(delete_record(g, which), kind)
    u, v = rec.u, rec.v
    diff = [
        [before.entry(i, j) - after.entry(i, j) for j in range(g.n)]
        for i in range(g.n)
    ]
    for i in range(g.n):
        for j in range(g.n):
            if i in (u, v) and j in (u, v):
                continue
            if diff[i][j]:
                raise UnexpectedDifferenceShapeError(
                    f"difference has support outside the record endpoints at ({i},{j})"
                )
    w_uu, w_vv = diff[u][u], diff[v][v]
    if w_uu != w_vv or not w_uu.is_real or w_uu.a <= 0:
        raise UnexpectedDifferenceShapeError("difference diagonal is not a positive weight")
    w = w_uu.a
    c = diff[u][v] / w
    if diff[v][u] != c.conjugate() * w:
        raise UnexpectedDifferenceShapeError("difference block is not conjugate-symmetric")
    if abs_squared(c) != 1:
        raise UnexpectedDifferenceShapeError("off-diagonal ratio is not unit-modulus")
    return DifferenceSummary(w, c, (u, v))


# -- .graph text format ------------------------------------------------------------


def parse_graph(text: str, source: str = "<graph>") -> GraphSpec:
    """Parse the .graph edge-list format.

    Line 1: ``graph v1 n=<count>``; then one record per line:
    ``edge U V [weight=W] [sign=+|-]``, ``arc U V [weight=W]``,
    ``digon U V [weight=W]``.  Vertices are 0-indexed; weights are rationals
    (``p/q``) or decimals; duplicate unordered pairs are rejected.
    """
    lines = text.splitlines()
    if not lines:
        raise FormatError(source, 1, "", "empty graph file")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "graph" or head[1] != "v1" or not head[2].startswith("n="):
        raise FormatError(source, 1, lines[0].strip(), "expected 'graph v1 n=<count>'")
    try:
        n = int(head[2][2:])
    except ValueError:
        raise FormatError(source, 1, head[2], "malformed vertex count") from None
    records = []
    for lineno, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        kind = tokens[0]
        if kind not in RECORD_KINDS:
            raise FormatError(source, lineno, kind, "unknown record kind")
        if len(tokens) < 3:
            raise FormatError(source, lineno, line, "record needs two vertex indices")
        try:
            u, v = int(tokens[1]), int(tokens[2])
        except ValueError:
            raise FormatError(source, lineno, f"{tokens[1]} {tokens[2]}", "malformed vertex index") from None
        weight = Fraction(1)
        sign = 1
        for tok in tokens[3:]:
            if tok.startswith("weight="):
                try:
                    weight = Fraction(tok[len("weight=") :])
                except (ValueError, ZeroDivisionError):
                    raise FormatError(source, lineno, tok, "malformed weight") from None
            elif tok.startswith("sign="):
                if kind != EDGE:
                    raise FormatError(source, lineno, tok, "sign applies to edges only")
                val = tok[len("sign=") :]
                if val not in ("+", "-"):
                    raise FormatError(source, lineno, tok, "sign must be + or -")
                sign = 1 if val == "+" else -1
            else:
                raise FormatError(source, lineno, tok, "unknown record option")
        try:
            records.append(EdgeRecord(kind, u, v, weight, sign))
        except ValueError as exc:
            raise FormatError(source, lineno, line, str(exc)) from None
    try:
        return GraphSpec(n, tuple(records))
    except ValueError as exc:
        raise FormatError(source, 1, "", str(exc)) from None


def load_graph(path) -> GraphSpec:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read(), source=str(path))


def dump_graph(g: GraphSpec) -> str:
    lines = [f"graph v1 n={g.n}"]
    for rec in g.records:
        parts = [rec.kind, str(rec.u), str(rec.v)]
        if rec.weight != 1:
            parts.append(f"weight={rec.weight}")
        if rec.sign != 1:
            parts.append("sign=-")
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"


def save_graph(g: GraphSpec, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_graph(g))
