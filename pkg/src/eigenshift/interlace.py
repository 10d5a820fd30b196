"""Root-multiset relations: shift dominance, interlacing, compatibility.

Each relation is implemented twice: once by direct sorted-index comparison
and once through the root-counting criterion (the number of roots above a
shift point).  The counting route only needs to be evaluated on a finite
sample set because the count difference is a right-continuous staircase in
the shift, constant between consecutive breakpoints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import MethodDisagreementError
from .hermitian import HermitianMatrix, Spectrum, eigenvalues
from .inertia import default_tolerance, shifted_inertia
from .scalars import FIELD_COMPLEX

#: Multiple of the zero-classification tolerance below which a comparison
#: margin cannot certify a strict verdict.
GAP_FACTOR = 10.0


@dataclass(frozen=True)
class Witness:
    """Where a relation failed: an index or a shift, with the compared values."""

    kind: str
    at: object
    lhs: object
    rhs: object

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "at": _jsonable(self.at),
            "lhs": _jsonable(self.lhs),
            "rhs": _jsonable(self.rhs),
        }


def _jsonable(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, float) and math.isinf(v):
        return "inf" if v > 0 else "-inf"
    return v


@dataclass(frozen=True)
class RelationReport:
    """Outcome of a relation check.

    ``witness`` is present exactly when the relation fails.  ``margin`` is
    the smallest signed comparison gap seen by a spectral-route check
    (positive when the verdict holds); callers grade |margin| against their
    tolerance to flag verdicts that floating noise could flip as
    ``indeterminate``.
    """

    holds: bool
    witness: Witness | None = None
    indeterminate: bool = False
    margin: float | None = None

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "indeterminate": self.indeterminate,
            "margin": _jsonable(self.margin),
            "witness": self.witness.to_json() if self.witness else None,
        }


def graded(report: RelationReport, gap_tol: float) -> RelationReport:
    """Flag an apparent violation as indeterminate when its margin is inside
    gap_tol: certifying a violation needs a strict inequality, which floating
    spectra cannot support near a tie.  Holding verdicts are left alone (a
    non-strict claim is satisfied at a tie)."""
    if report.margin is None:
        return report
    fragile = (not report.holds) and abs(report.margin) <= gap_tol
    if fragile == report.indeterminate:
        return report
    return RelationReport(report.holds, report.witness, fragile, report.margin)


def combine(labeled: Sequence[tuple[str, RelationReport]]) -> RelationReport:
    """Conjunction of sub-reports; the witness names the failing part."""
    margins = [r.margin for _, r in labeled if r.margin is not None]
    margin = min(margins) if margins else None
    for label, rep in labeled:
        if not rep.holds and not rep.indeterminate:
            return RelationReport(False, _prefixed(label, rep.witness), False, margin)
    for label, rep in labeled:
        if not rep.holds:
            return RelationReport(False, _prefixed(label, rep.witness), True, margin)
    indet = any(rep.indeterminate for _, rep in labeled)
    return RelationReport(True, None, indet, margin)


def _prefixed(label: str, witness: Witness | None) -> Witness | None:
    if witness is None:
        return None
    return Witness(f"{label}:{witness.kind}", witness.at, witness.lhs, witness.rhs)


class RealRootedPoly:
    """A real-rooted polynomial, represented by its root multiset.

    Roots are kept sorted nonincreasing; the degree is the number of roots.
    Spectra convert losslessly.
    """

    __slots__ = ("roots",)

    def __init__(self, roots: Iterable):
        rs = sorted(roots, reverse=True)
        for r in rs:
            if isinstance(r, float) and not math.isfinite(r):
                raise ValueError("roots must be finite real numbers")
        object.__setattr__(self, "roots", tuple(rs))

    def __setattr__(self, name, value):
        raise AttributeError("RealRootedPoly is immutable")

    @property
    def degree(self) -> int:
        return len(self.roots)

    def __eq__(self, other):
        if isinstance(other, RealRootedPoly):
            return self.roots == other.roots
        return NotImplemented

    def __hash__(self):
        return hash(self.roots)

    def __repr__(self):
        return f"RealRootedPoly({list(self.roots)})"


def as_poly(f) -> RealRootedPoly:
    if isinstance(f, RealRootedPoly):
        return f
    if isinstance(f, Spectrum):
        return RealRootedPoly(f.values)
    return RealRootedPoly(f)


def extended_root(f, i: int):
    """The i-th largest root (1-indexed); +inf below index 1, -inf past the degree."""
    f = as_poly(f)
    if i < 1:
        return math.inf
    if i > f.degree:
        return -math.inf
    return f.roots[i - 1]


def nu(f, r) -> int:
    """Number of roots strictly greater than r."""
    f = as_poly(f)
    return sum(1 for root in f.roots if root > r)


def _min_margin(current: float | None, gap) -> float | None:
    if isinstance(gap, float) and math.isnan(gap):
        return current
    g = float(gap)
    if current is None or g < current:
        return g
    return current


def shift_dominates_spectral(f, g, m: int) -> RelationReport:
    """Index route for: the (i+m)-th root of g never exceeds the i-th root of f."""
    f, g = as_poly(f), as_poly(g)
    margin: float | None = None
    top = max(f.degree, g.degree - m, 0)
    for i in range(1, top + 1):
        lhs = extended_root(g, i + m)
        rhs = extended_root(f, i)
        if lhs == -math.inf or rhs == math.inf:
            continue
        gap = rhs - lhs if not (lhs == math.inf and rhs == -math.inf) else -math.inf
        margin = _min_margin(margin, gap)
        if lhs > rhs:
            return RelationReport(
                False, Witness("index", i, lhs, rhs), margin=margin if margin is not None else -math.inf
            )
    return RelationReport(True, None, margin=margin if margin is not None else math.inf)


def _sample_points(f: RealRootedPoly, g: RealRootedPoly):
    # All distinct roots, descending, plus one point below everything.  The
    # count difference is constant on [root_k, root_{k-1}), so this finite
    # set decides the universally quantified shift.
    pts = sorted(set(f.roots) | set(g.roots), reverse=True)
    bottom = (min(pts) if pts else 0) - 1
    return pts + [bottom]


def shift_dominates_nu(f, g, m: int) -> RelationReport:
    """Counting route for the same relation, sampled at the root breakpoints."""
    f, g = as_poly(f), as_poly(g)
    for r in _sample_points(f, g):
        diff = nu(g, r) - nu(f, r)
        if diff > m:
            return RelationReport(False, Witness("shift", r, diff, m))
    return RelationReport(True, None)


def _dual_route(f, g, m: int) -> RelationReport:
    spectral = shift_dominates_spectral(f, g, m)
    counting = shift_dominates_nu(f, g, m)
    if spectral.holds != counting.holds:
        raise MethodDisagreementError(spectral, counting)
    return spectral


def interlaces(f, g) -> RelationReport:
    """f interlaces g: deg f <= deg g <= deg f + 1 and the roots alternate.

    Both the index route and the counting route are evaluated; they must
    agree (a disagreement would be an implementation bug, not data).
    """
    f, g = as_poly(f), as_poly(g)
    n, m = f.degree, g.degree
    if not (n <= m <= n + 1):
        return RelationReport(False, Witness("degree", 0, n, m), margin=-math.inf)
    upper = _dual_route(g, f, 0)  # roots of f never exceed the same-index root of g
    lower = _dual_route(f, g, 1)  # roots of g, shifted one index, never exceed f's
    return combine([("upper", upper), ("lower", lower)])


def compatible(f, g) -> RelationReport:
    """f and g are compatible: degrees within 1 and one-index-offset bounds both ways.

    A symmetric, weaker relation than interlacing; equals shift dominance
    with offset 1 in both directions.
    """
    f, g = as_poly(f), as_poly(g)
    n, m = f.degree, g.degree
    if abs(m - n) > 1:
        return RelationReport(False, Witness("degree", 0, n, m), margin=-math.inf)
    forward = _dual_route(f, g, 1)
    backward = _dual_route(g, f, 1)
    return combine([("forward", forward), ("backward", backward)])


# -- matrix-level dominance ------------------------------------------------------


def _merge_close(values: Sequence[float], tol: float) -> list[float]:
    merged: list[float] = []
    for v in sorted(values, reverse=True):
        if not merged or merged[-1] - v > tol:
            merged.append(v)
    return merged


def matrix_shift_dominates(
    a: HermitianMatrix,
    b: HermitianMatrix,
    m: int,
    method: str = "both",
    tol: float | None = None,
    shifts: Sequence | None = None,
) -> RelationReport:
    """Check that eigenvalue i+m of B never exceeds eigenvalue i of A.

    ``spectral`` compares the computed eigenvalue lists directly.
    ``inertia`` checks the positive-count difference n_plus(B - rI) -
    n_plus(A - rI) <= m on a finite sample set: the merged computed spectra
    (plus a bottom point) in float mode, or a caller-supplied list of
    rational shifts for exact matrices.  ``both`` requires agreement and
    raises MethodDisagreementError otherwise, unless the deciding margins
    sit inside the tolerance band, in which case the verdict is flagged
    indeterminate.
    """
    if method not in ("spectral", "inertia", "both"):
        raise ValueError(f"unknown method {method!r}")
    exact_mode = shifts is not None and a.field != FIELD_COMPLEX and b.field != FIELD_COMPLEX
    if tol is None:
        tol = max(default_tolerance(a), default_tolerance(b))
    gap_tol = GAP_FACTOR * tol

    spec_a = eigenvalues(a).values
    spec_b = eigenvalues(b).values
    spectral = graded(shift_dominates_spectral(spec_a, spec_b, m), gap_tol)
    if method == "spectral":
        return spectral

    if exact_mode:
        sample = list(shifts)
        mode = "exact"
    else:
        sample = _merge_close(list(spec_a) + list(spec_b), tol)
        bottom = (min(sample) if sample else 0.0) - 1.0
        sample = sample + [bottom]
        mode = "float"
    counting = RelationReport(True, None)
    for r in sample:
        diff = (
            shifted_inertia(b, r, mode, tol).n_plus
            - shifted_inertia(a, r, mode, tol).n_plus
        )
        if diff > m:
            counting = RelationReport(False, Witness("shift", r, diff, m))
            break
    if method == "inertia":
        return counting

    if spectral.holds == counting.holds:
        return RelationReport(spectral.holds, spectral.witness or counting.witness,
                              spectral.indeterminate, spectral.margin)
    min_cross = min(
        (abs(x - y) for x in spec_a for y in spec_b),
        default=math.inf,
    )
    if spectral.indeterminate or min_cross <= gap_tol:
        return RelationReport(spectral.holds, spectral.witness or counting.witness,
                              True, spectral.margin)
    raise MethodDisagreementError(spectral, counting)
