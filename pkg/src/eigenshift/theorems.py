"""Executable verifiers for the named eigenvalue inequalities, plus a
seeded fuzz harness.

Each verifier takes inputs that already satisfy the statement's hypotheses
(the generators are responsible for that) and tests only the conclusion,
assembling it from the lower modules.  Verdicts whose deciding margin falls
inside the tolerance band are reported as indeterminate rather than as
failures: floating eigenvalues near ties cannot certify strict inequalities.

Every generator is deterministic in its seed, and fuzz trial i derives its
seed by hashing (master_seed, i), so reports are reproducible byte for byte
and independent of execution order.
"""

from __future__ import annotations

import hashlib
import json
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (
    GapUnreachableError,
    NotPositiveDefiniteError,
    ShapeMismatchError,
    UnexpectedDifferenceShapeError,
)
from .graphs import (
    ARC,
    DIGON,
    EDGE,
    EdgeRecord,
    GraphSpec,
    OperatorKind,
    build_operator,
    delete_record,
    dump_graph,
    laplacian_difference,
    normalizer,
    reduce_weight,
)
from .hermitian import (
    HermitianMatrix,
    diagonal_part,
    dump_hmat,
    eigenvalues,
    from_numpy,
    make_hermitian,
    matrix_sum,
    pencil_reduce,
    pencil_shift,
    principal_submatrix,
    shift,
)
from .inertia import default_tolerance, inertia_float, pencil_inertia, shifted_inertia
from .interlace import (
    GAP_FACTOR,
    RealRootedPoly,
    RelationReport,
    Witness,
    combine,
    compatible,
    extended_root,
    graded,
    interlaces,
    shift_dominates_nu,
    shift_dominates_spectral,
)
from .scalars import FIELD_COMPLEX, FIELD_GAUSS, FIELD_OMEGA, QuadExt


class TheoremId:
    """Identifiers of the verifiable statements."""

    INCLUSION_PRINCIPLE = "inclusion_principle"
    CAUCHY = "cauchy"
    INERTIA_SUBADDITIVE = "inertia_subadditive"
    SHIFT_BOUNDS = "shift_bounds"
    MONOTONICITY = "monotonicity"
    WEYL_PAIRWISE = "weyl_pairwise"
    WEYL_INDEXED = "weyl_indexed"
    RANK_ONE_INTERLACE = "rank_one_interlace"
    INDEFINITE_COMPATIBLE = "indefinite_compatible"
    PENCIL = "pencil"
    LEMMA_BOUNDS = "lemma_bounds"
    LEMMA_PENCIL_IDENTITY = "lemma_pencil_identity"
    LAPLACIAN_DELETION = "laplacian_deletion"
    MOHAR_DELETION = "mohar_deletion"
    NU_CRITERION = "nu_criterion"

    ALL = (
        INCLUSION_PRINCIPLE,
        CAUCHY,
        INERTIA_SUBADDITIVE,
        SHIFT_BOUNDS,
        MONOTONICITY,
        WEYL_PAIRWISE,
        WEYL_INDEXED,
        RANK_ONE_INTERLACE,
        INDEFINITE_COMPATIBLE,
        PENCIL,
        LEMMA_BOUNDS,
        LEMMA_PENCIL_IDENTITY,
        LAPLACIAN_DELETION,
        MOHAR_DELETION,
        NU_CRITERION,
    )


NORMALIZED_BOUND_TOL = 1e-9  # slack on the [0, 2] normalized-spectrum window


# -- random input generators ----------------------------------------------------


def random_hermitian(
    n: int,
    field: str = FIELD_COMPLEX,
    seed: int = 0,
    spec_gap: float | None = None,
) -> HermitianMatrix:
    """Deterministic random Hermitian matrix with entries bounded by 10.

    With spec_gap set, redraws until all consecutive eigenvalue gaps of the
    float embedding reach the bound (at most 100 attempts).
    """
    if n < 1:
        raise ValueError("dimension must be at least 1")
    rng = random.Random(seed)
    for _ in range(100):
        if field == FIELD_COMPLEX:
            upper = []
            for i in range(n):
                row = [rng.uniform(-10, 10)]
                row += [
                    complex(rng.uniform(-7, 7), rng.uniform(-7, 7))
                    for _ in range(n - i - 1)
                ]
                upper.append(row)
        else:
            upper = []
            for i in range(n):
                row = [Fraction(rng.randint(-40, 40), 4)]
                for _ in range(n - i - 1):
                    a = Fraction(rng.randint(-20, 20), 4)
                    b = Fraction(rng.randint(-8, 8), 4)
                    row.append(QuadExt(a, b, -1 if field == FIELD_GAUSS else -3))
                upper.append(row)
        m = make_hermitian(n, upper, field)
        if spec_gap is None:
            return m
        vals = eigenvalues(m).values
        if all(x - y >= spec_gap for x, y in zip(vals, vals[1:])):
            return m
    raise GapUnreachableError(f"no spectral gap >= {spec_gap} after 100 draws")


_WEIGHT_CHOICES = (Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2))
GRAPH_FLAVORS = ("simple", "signed", "weighted", "digraph")


def random_graph(n: int, flavor: str, density: float, seed: int = 0) -> GraphSpec:
    """Deterministic random graph: each unordered pair appears with the given
    probability; the flavor fixes the record kinds."""
    if flavor not in GRAPH_FLAVORS:
        raise ValueError(f"unknown graph flavor {flavor!r}")
    if not 0 <= density <= 1:
        raise ValueError("density must lie in [0, 1]")
    rng = random.Random(seed)
    records = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() >= density:
                continue
            if flavor == "simple":
                records.append(EdgeRecord(EDGE, u, v))
            elif flavor == "signed":
                records.append(EdgeRecord(EDGE, u, v, sign=rng.choice((1, -1))))
            elif flavor == "weighted":
                records.append(EdgeRecord(EDGE, u, v, weight=rng.choice(_WEIGHT_CHOICES)))
            else:
                shape = rng.choice((ARC, ARC, DIGON))
                if shape == DIGON:
                    records.append(EdgeRecord(DIGON, u, v))
                elif rng.random() < 0.5:
                    records.append(EdgeRecord(ARC, u, v))
                else:
                    records.append(EdgeRecord(ARC, v, u))
    return GraphSpec(n, tuple(records))


def _rng_seed(rng: random.Random) -> int:
    return rng.getrandbits(63)


def _random_vector(rng: random.Random, n: int) -> list[complex]:
    return [complex(rng.uniform(-3, 3), rng.uniform(-3, 3)) for _ in range(n)]


def _hermitian_away_from_zero(rng, n, gap):
    # Redraw until no eigenvalue sits near zero, so inertia counts are stable.
    for _ in range(100):
        m = random_hermitian(n, FIELD_COMPLEX, _rng_seed(rng), spec_gap=gap)
        if min(abs(v) for v in eigenvalues(m)) > gap:
            return m
    raise GapUnreachableError("could not draw a matrix with eigenvalues away from zero")


def _random_generalized_laplacian(rng: random.Random, size_bound: int) -> HermitianMatrix:
    """Float generalized Laplacian, sometimes with zero-diagonal rows."""
    n = rng.randint(1, max(1, size_bound))
    if rng.random() < 0.5:
        flavor = rng.choice(GRAPH_FLAVORS)
        g = random_graph(n, flavor, rng.uniform(0.0, 1.0), _rng_seed(rng))
        kind = (
            OperatorKind.HERM_LAPLACIAN_OMEGA
            if flavor == "digraph" and rng.random() < 0.5
            else OperatorKind.HERM_LAPLACIAN_I
            if flavor == "digraph"
            else OperatorKind.LAPLACIAN
        )
        return build_operator(g, kind, as_float=True)
    zero_rows = {i for i in range(n) if rng.random() < 0.25}
    entries = [[0j] * n for _ in range(n)]
    for i in range(n):
        if i in zero_rows:
            continue
        for j in range(i + 1, n):
            if j in zero_rows or rng.random() < 0.4:
                continue
            entries[i][j] = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
            entries[j][i] = entries[i][j].conjugate()
    upper = []
    for i in range(n):
        slack = 0.0 if i in zero_rows else rng.uniform(0, 2) * rng.choice((0, 1))
        diag = sum(abs(entries[i][j]) for j in range(n) if j != i) + slack
        upper.append([diag] + [entries[i][j] for j in range(i + 1, n)])
    return make_hermitian(n, upper, FIELD_COMPLEX)


def _graph_with_records(rng: random.Random, size_bound: int, flavor: str) -> GraphSpec:
    for _ in range(100):
        n = rng.randint(2, max(2, size_bound))
        g = random_graph(n, flavor, rng.uniform(0.15, 0.95), _rng_seed(rng))
        if g.records:
            return g
    raise GapUnreachableError("could not draw a graph with at least one record")


_MATRIX_GAP = 1e-6  # spectral-gap enforcement for the matrix generators


def generate_inputs(theorem: str, seed: int, size_bound: int) -> dict:
    """Inputs satisfying the theorem's hypotheses, deterministic in the seed."""
    rng = random.Random(seed)
    n = rng.randint(2, max(2, size_bound))

    def herm(dim=None):
        return random_hermitian(dim or n, FIELD_COMPLEX, _rng_seed(rng), spec_gap=_MATRIX_GAP)

    if theorem == TheoremId.INCLUSION_PRINCIPLE:
        return {"matrix": herm(), "k": rng.randint(1, n)}
    if theorem == TheoremId.CAUCHY:
        return {"matrix": herm()}
    if theorem == TheoremId.INERTIA_SUBADDITIVE:
        a = _hermitian_away_from_zero(rng, n, _MATRIX_GAP)
        for _ in range(100):
            b = _hermitian_away_from_zero(rng, n, _MATRIX_GAP)
            ab = matrix_sum(a, b)
            if min(abs(v) for v in eigenvalues(ab)) > _MATRIX_GAP:
                return {"a": a, "b": b}
        raise GapUnreachableError("sum kept an eigenvalue near zero")
    if theorem == TheoremId.SHIFT_BOUNDS:
        a = herm()
        b = _hermitian_away_from_zero(rng, n, _MATRIX_GAP)
        return {"a": a, "b": b, "m": inertia_float(b).n_plus}
    if theorem == TheoremId.MONOTONICITY:
        a = herm()
        rank = rng.randint(1, n)
        cols = np.array([_random_vector(rng, n) for _ in range(rank)])
        b = from_numpy(cols.conj().T @ cols)
        return {"a": a, "b": b}
    if theorem == TheoremId.WEYL_PAIRWISE:
        a = herm()
        b = _hermitian_away_from_zero(rng, n, _MATRIX_GAP)
        ib = inertia_float(b)
        return {"a": a, "b": b, "p": ib.n_plus, "q": ib.n_minus}
    if theorem == TheoremId.WEYL_INDEXED:
        return {"a": herm(), "b": herm()}
    if theorem == TheoremId.RANK_ONE_INTERLACE:
        return {"matrix": herm(), "vector": _random_vector(rng, n)}
    if theorem == TheoremId.INDEFINITE_COMPATIBLE:
        a = herm()
        for _ in range(100):
            alpha = np.array(_random_vector(rng, n))
            beta = np.array(_random_vector(rng, n))
            b = from_numpy(np.outer(alpha, alpha.conj()) - np.outer(beta, beta.conj()))
            if inertia_float(b).as_tuple() == (1, 1, n - 2):
                return {"a": a, "b": b}
        raise GapUnreachableError("could not draw an indefinite rank-two perturbation")
    if theorem == TheoremId.PENCIL:
        a = herm()
        c = np.array([[complex(rng.uniform(-2, 2), rng.uniform(-2, 2)) for _ in range(n)] for _ in range(n)])
        p = from_numpy(c @ c.conj().T + 0.5 * np.eye(n))
        return {"p": p, "a": a}
    if theorem == TheoremId.LEMMA_BOUNDS:
        return {"laplacian": _random_generalized_laplacian(rng, size_bound)}
    if theorem == TheoremId.LEMMA_PENCIL_IDENTITY:
        return {
            "laplacian": _random_generalized_laplacian(rng, size_bound),
            "shifts": (0.0, 0.3, 1.0, 1.7, 2.0),
        }
    if theorem == TheoremId.LAPLACIAN_DELETION:
        flavor = rng.choice(("simple", "signed", "weighted", "digraph"))
        g = _graph_with_records(rng, size_bound, flavor)
        kind = OperatorKind.HERM_LAPLACIAN_I if flavor == "digraph" else OperatorKind.LAPLACIAN
        which = rng.randrange(len(g.records))
        reduce_by = None
        if flavor == "weighted" and rng.random() < 0.3:
            w = g.records[which].weight
            reduce_by = w * Fraction(rng.randint(1, 2), 2)  # half or all of it
            if reduce_by == w:
                reduce_by = None
        return {"graph": g, "record": which, "kind": kind, "reduce_by": reduce_by}
    if theorem == TheoremId.MOHAR_DELETION:
        g = _graph_with_records(rng, size_bound, "digraph")
        return {"graph": g, "record": rng.randrange(len(g.records))}
    if theorem == TheoremId.NU_CRITERION:
        deg_f = rng.randint(0, max(2, size_bound))
        deg_g = rng.randint(0, max(2, size_bound))
        pool = [rng.uniform(-10, 10) for _ in range(max(deg_f, deg_g, 1))]
        draw = lambda: rng.choice(pool) if rng.random() < 0.3 else rng.uniform(-10, 10)
        f = RealRootedPoly([draw() for _ in range(deg_f)])
        g = RealRootedPoly([draw() for _ in range(deg_g)])
        return {"f": f, "g": g, "m": rng.randint(-2, 2)}
    raise ValueError(f"unknown theorem id {theorem!r}")


# -- verifiers ---------------------------------------------------------------------


def _gap_tol(*mats: HermitianMatrix) -> float:
    return GAP_FACTOR * max(default_tolerance(m) for m in mats)


def _fragile_counts(tol: float, *mats: HermitianMatrix) -> bool:
    # An inertia count is fragile when some eigenvalue magnitude falls in the
    # band around the zero-classification threshold.
    for m in mats:
        for v in eigenvalues(m):
            if tol / GAP_FACTOR**2 <= abs(v) <= tol:
                return True
    return False


def _verify_inclusion_principle(inputs) -> RelationReport:
    a, k = inputs["matrix"], inputs["k"]
    if not (1 <= k <= a.n):
        raise ShapeMismatchError("leading block size out of range")
    b = principal_submatrix(a, range(k))
    sa, sb = eigenvalues(a), eigenvalues(b)
    gap = _gap_tol(a)
    upper = graded(shift_dominates_spectral(sa, sb, 0), gap)
    lower = graded(shift_dominates_spectral(sb, sa, a.n - k), gap)
    return combine([("upper", upper), ("lower", lower)])


def _verify_cauchy(inputs) -> RelationReport:
    a = inputs["matrix"]
    if a.n < 2:
        raise ShapeMismatchError("bordered matrix needs dimension at least 2")
    b = principal_submatrix(a, range(a.n - 1))
    return graded(interlaces(eigenvalues(b), eigenvalues(a)), _gap_tol(a))


def _verify_inertia_subadditive(inputs) -> RelationReport:
    a, b = inputs["a"], inputs["b"]
    ab = matrix_sum(a, b)
    lhs = inertia_float(ab).n_plus
    rhs = inertia_float(a).n_plus + inertia_float(b).n_plus
    holds = lhs <= rhs
    fragile = _fragile_counts(_gap_tol(a, b, ab), a, b, ab)
    witness = None if holds else Witness("count", "n_plus", lhs, rhs)
    return RelationReport(holds, witness, indeterminate=fragile and not holds)


def _verify_shift_bounds(inputs) -> RelationReport:
    a, b, m = inputs["a"], inputs["b"], inputs["m"]
    if inertia_float(b).n_plus > m:
        raise ShapeMismatchError("offset must be at least the positive count of the perturbation")
    ab = matrix_sum(a, b)
    return graded(shift_dominates_spectral(eigenvalues(a), eigenvalues(ab), m), _gap_tol(a, b))


def _verify_monotonicity(inputs) -> RelationReport:
    a, b = inputs["a"], inputs["b"]
    gap = _gap_tol(a, b)
    if eigenvalues(b).values[-1] < -gap:
        raise ShapeMismatchError("perturbation must be positive semi-definite")
    ab = matrix_sum(a, b)
    return graded(shift_dominates_spectral(eigenvalues(ab), eigenvalues(a), 0), gap)


def _verify_weyl_pairwise(inputs) -> RelationReport:
    a, b, p, q = inputs["a"], inputs["b"], inputs["p"], inputs["q"]
    ib = inertia_float(b)
    if ib.n_plus > p or ib.n_minus > q:
        raise ShapeMismatchError("inertia bounds of the perturbation exceed (p, q)")
    ab = matrix_sum(a, b)
    sa, sab = eigenvalues(a), eigenvalues(ab)
    gap = _gap_tol(a, b)
    left = graded(shift_dominates_spectral(sab, sa, q), gap)
    right = graded(shift_dominates_spectral(sa, sab, p), gap)
    return combine([("left", left), ("right", right)])


def _weyl_indexed_check(sa, sb, sab, offset: int, i_min: int = 1) -> RelationReport:
    n = max(len(sa), len(sb))
    margin = None
    for i in range(i_min, n + 1):
        for j in range(1, n + 1):
            lhs = extended_root(sab, i + j + offset)
            rhs_a, rhs_b = extended_root(sa, i), extended_root(sb, j)
            if lhs == -float("inf") or rhs_a == float("inf") or rhs_b == float("inf"):
                continue
            gap = (rhs_a + rhs_b) - lhs
            if margin is None or gap < margin:
                margin = gap
            if lhs > rhs_a + rhs_b:
                return RelationReport(
                    False, Witness("index-pair", (i, j), lhs, rhs_a + rhs_b), margin=margin
                )
    return RelationReport(True, None, margin=margin if margin is not None else float("inf"))


def _verify_weyl_indexed(inputs) -> RelationReport:
    a, b = inputs["a"], inputs["b"]
    ab = matrix_sum(a, b)
    rep = _weyl_indexed_check(eigenvalues(a), eigenvalues(b), eigenvalues(ab), -1)
    return graded(rep, _gap_tol(a, b))


def _verify_rank_one_interlace(inputs) -> RelationReport:
    a, vec = inputs["matrix"], inputs["vector"]
    v = np.array(vec, dtype=complex)
    bumped = from_numpy(a.to_numpy() + np.outer(v, v.conj()))
    return graded(interlaces(eigenvalues(a), eigenvalues(bumped)), _gap_tol(a))


def _verify_indefinite_compatible(inputs) -> RelationReport:
    a, b = inputs["a"], inputs["b"]
    ib = inertia_float(b)
    if not (ib.n_plus == 1 and ib.n_minus == 1):
        raise ShapeMismatchError("perturbation must have exactly one positive and one negative eigenvalue")
    ab = matrix_sum(a, b)
    return graded(compatible(eigenvalues(a), eigenvalues(ab)), _gap_tol(a, b))


def _verify_pencil(inputs) -> RelationReport:
    p, a = inputs["p"], inputs["a"]
    try:
        reduced = pencil_reduce(p, a)
    except NotPositiveDefiniteError as exc:
        raise ShapeMismatchError("pencil base must be positive definite") from exc
    gap = _gap_tol(p, a)
    ia, ir = inertia_float(a), inertia_float(reduced)
    same = ia.as_tuple() == ir.as_tuple()
    inertia_rep = RelationReport(
        same,
        None if same else Witness("inertia", "triple", ir.as_tuple(), ia.as_tuple()),
        indeterminate=(not same) and _fragile_counts(gap, a, reduced),
    )
    parts = [("inertia", inertia_rep)]
    if a.n >= 2:
        sub = range(a.n - 1)
        reduced_sub = pencil_reduce(principal_submatrix(p, sub), principal_submatrix(a, sub))
        border = graded(interlaces(eigenvalues(reduced_sub), eigenvalues(reduced)), gap)
        parts.append(("border", border))
    return combine(parts)


def _verify_lemma_bounds(inputs) -> RelationReport:
    lap = inputs["laplacian"]
    spec = eigenvalues(normalizer(lap))
    for v in spec:
        if not (-NORMALIZED_BOUND_TOL <= v <= 2 + NORMALIZED_BOUND_TOL):
            return RelationReport(False, Witness("eigenvalue", v, v, (0.0, 2.0)))
    return RelationReport(True, None)


def _verify_lemma_pencil_identity(inputs) -> RelationReport:
    lap = inputs["laplacian"]
    shifts = inputs.get("shifts", (0.0, 0.3, 1.0, 1.7, 2.0))
    d = diagonal_part(lap)
    norm = normalizer(lap)
    for r in shifts:
        lhs = shifted_inertia(norm, r).n_plus
        rhs = pencil_inertia(lap, d, r).n_plus
        if lhs != rhs:
            shifted_n = shift(norm, r)
            shifted_l = pencil_shift(lap, d, r)
            bad = _fragile_counts(_gap_tol(shifted_n), shifted_n) or _fragile_counts(
                _gap_tol(shifted_l), shifted_l
            )
            return RelationReport(False, Witness("shift", r, lhs, rhs), indeterminate=bad)
    return RelationReport(True, None)


def _rational_inside(lo: float, hi: float) -> Fraction:
    """A small-denominator rational strictly between two floats."""
    mid = (lo + hi) / 2.0
    for dmax in (10**6, 10**12):
        q = Fraction(mid).limit_denominator(dmax)
        if lo < q < hi:
            return q
    return (Fraction(lo) + Fraction(hi)) / 2


def _interval_samples(breakpoints) -> list[Fraction]:
    """One rational sample inside every constancy interval of the staircase
    whose jumps sit at the given (float-computed) breakpoints."""
    pts = sorted(set(float(b) for b in breakpoints))
    if not pts:
        return [Fraction(0)]
    samples = [Fraction(int(np.floor(pts[0])) - 1)]
    for lo, hi in zip(pts, pts[1:]):
        samples.append(_rational_inside(lo, hi))
    samples.append(_rational_inside(pts[-1], pts[-1] + 2.0))
    return samples


def _screened_diff_bounded(
    a: HermitianMatrix,
    b: HermitianMatrix,
    pa: HermitianMatrix | None,
    pb: HermitianMatrix | None,
    samples,
    low: int,
    high: int,
) -> RelationReport:
    """n_plus(A - r*Pa) - n_plus(B - r*Pb) stays in [low, high] at every
    sample (Pa/Pb = identity when None).

    Floating counts decide a sample when every eigenvalue of both shifted
    matrices clears the tolerance band (backward stability then guarantees
    the counts); fragile or violating samples escalate to the exact inertia
    route, so failures are always definitive.
    """
    a_np, b_np = a.to_numpy(), b.to_numpy()
    eye = np.eye(a.n)
    pa_np = eye if pa is None else pa.to_numpy()
    pb_np = np.eye(b.n) if pb is None else pb.to_numpy()

    def exact_count(mat, pencil, r) -> int:
        if pencil is None:
            return shifted_inertia(mat, r, "exact").n_plus
        return pencil_inertia(mat, pencil, r, "exact").n_plus

    def float_count(m_np, p_np, r) -> tuple[int, bool]:
        shifted = m_np - float(r) * p_np
        tol = 1e-9 * max(1.0, float(np.linalg.norm(shifted, "fro")))
        vals = np.linalg.eigvalsh(shifted)
        fragile = bool(np.min(np.abs(vals)) <= GAP_FACTOR * tol)
        return int(np.count_nonzero(vals > tol)), fragile

    for r in samples:
        ca, fragile_a = float_count(a_np, pa_np, r)
        cb, fragile_b = float_count(b_np, pb_np, r)
        if not (fragile_a or fragile_b) and low <= ca - cb <= high:
            continue
        d = exact_count(a, pa, r) - exact_count(b, pb, r)
        if not (low <= d <= high):
            return RelationReport(False, Witness("shift", r, d, (low, high)))
    return RelationReport(True, None)


def _deletion_reports(g: GraphSpec, which: int, base_kind: str, reduce_by=None):
    before = build_operator(g, base_kind)
    if reduce_by is None:
        laplacian_difference(g, which, base_kind)  # hypothesis check: rank-2 block
        g2 = delete_record(g, which)
    else:
        g2 = reduce_weight(g, which, reduce_by)
    after = build_operator(g2, base_kind)

    # Interlacing of the unnormalized pair, decided by inertia counts at
    # rational shifts placed between the computed breakpoints.
    samples = _interval_samples(
        list(eigenvalues(before).values) + list(eigenvalues(after).values)
    )
    rep_l = _screened_diff_bounded(before, after, None, None, samples, 0, 1)

    # Compatibility of the normalized pair.  Their spectra live in [0, 2] and
    # the matrices are floating, but for nonnegative shifts the positive count
    # of NL - r*I equals that of the diagonal pencil L - r*D, which is exact.
    norm_pts = [
        min(max(v, 0.0), 2.0)
        for v in list(eigenvalues(normalizer(build_operator(g, base_kind, as_float=True))).values)
        + list(eigenvalues(normalizer(build_operator(g2, base_kind, as_float=True))).values)
    ]
    nsamples = [q for q in _interval_samples(norm_pts + [0.0, 2.0]) if q >= 0]
    nsamples.append(Fraction(0))
    rep_n = _screened_diff_bounded(
        before, after, diagonal_part(before), diagonal_part(after), nsamples, -1, 1
    )
    return rep_l, rep_n


def _verify_laplacian_deletion(inputs) -> RelationReport:
    g, which, kind = inputs["graph"], inputs["record"], inputs["kind"]
    if kind not in OperatorKind.LAPLACIAN_FAMILY:
        raise ShapeMismatchError("deletion statement needs an unnormalized Laplacian kind")
    try:
        rep_l, rep_n = _deletion_reports(g, which, kind, inputs.get("reduce_by"))
    except UnexpectedDifferenceShapeError as exc:
        raise ShapeMismatchError(str(exc)) from exc
    return combine([("laplacian-interlaces", rep_l), ("normalized-compatible", rep_n)])


def _verify_mohar_deletion(inputs) -> RelationReport:
    g, which = inputs["graph"], inputs["record"]
    rep_l, rep_n = _deletion_reports(g, which, OperatorKind.HERM_LAPLACIAN_OMEGA)
    return combine([("laplacian-interlaces", rep_l), ("normalized-compatible", rep_n)])


def _verify_nu_criterion(inputs) -> RelationReport:
    f, g, m = inputs["f"], inputs["g"], inputs["m"]
    spectral = shift_dominates_spectral(f, g, m)
    counting = shift_dominates_nu(f, g, m)
    agree = spectral.holds == counting.holds
    witness = None if agree else Witness("route", m, spectral.holds, counting.holds)
    return RelationReport(agree, witness)


_VERIFIERS = {
    TheoremId.INCLUSION_PRINCIPLE: _verify_inclusion_principle,
    TheoremId.CAUCHY: _verify_cauchy,
    TheoremId.INERTIA_SUBADDITIVE: _verify_inertia_subadditive,
    TheoremId.SHIFT_BOUNDS: _verify_shift_bounds,
    TheoremId.MONOTONICITY: _verify_monotonicity,
    TheoremId.WEYL_PAIRWISE: _verify_weyl_pairwise,
    TheoremId.WEYL_INDEXED: _verify_weyl_indexed,
    TheoremId.RANK_ONE_INTERLACE: _verify_rank_one_interlace,
    TheoremId.INDEFINITE_COMPATIBLE: _verify_indefinite_compatible,
    TheoremId.PENCIL: _verify_pencil,
    TheoremId.LEMMA_BOUNDS: _verify_lemma_bounds,
    TheoremId.LEMMA_PENCIL_IDENTITY: _verify_lemma_pencil_identity,
    TheoremId.LAPLACIAN_DELETION: _verify_laplacian_deletion,
    TheoremId.MOHAR_DELETION: _verify_mohar_deletion,
    TheoremId.NU_CRITERION: _verify_nu_criterion,
}


def verify(theorem: str, inputs: dict) -> RelationReport:
    """Run one verifier on explicitly provided inputs."""
    try:
        fn = _VERIFIERS[theorem]
    except KeyError:
        raise ValueError(f"unknown theorem id {theorem!r}") from None
    return fn(inputs)


# -- hard-coded negative controls ---------------------------------------------------
#
# Each control mutates its statement's conclusion in a fixed way that makes it
# false, so the harness can demonstrate it actually detects falsity.


def _control_inclusion(inputs) -> RelationReport:
    a, k = inputs["matrix"], inputs["k"]
    b = principal_submatrix(a, range(k))
    # tightened lower bound: index offset n-k-1 instead of n-k
    return graded(
        shift_dominates_spectral(eigenvalues(b), eigenvalues(a), a.n - k - 1), _gap_tol(a)
    )


def _control_cauchy(inputs) -> RelationReport:
    a = inputs["matrix"]
    b = principal_submatrix(a, range(a.n - 1))
    sa, sb = eigenvalues(a), eigenvalues(b)
    # reversed claim on the shared index range: the submatrix dominates
    margin = None
    for i in range(1, b.n + 1):
        gap = sb[i - 1] - sa[i - 1]
        if margin is None or gap < margin:
            margin = gap
        if sa[i - 1] > sb[i - 1]:
            return graded(
                RelationReport(False, Witness("index", i, sa[i - 1], sb[i - 1]), margin=margin),
                _gap_tol(a),
            )
    return graded(RelationReport(True, None, margin=margin), _gap_tol(a))


def _control_subadditive(inputs) -> RelationReport:
    a, b = inputs["a"], inputs["b"]
    ab = matrix_sum(a, b)
    lhs = inertia_float(ab).n_plus
    rhs = inertia_float(a).n_plus + inertia_float(b).n_plus - 1
    holds = lhs <= rhs
    fragile = _fragile_counts(_gap_tol(a, b, ab), a, b, ab)
    return RelationReport(holds, None if holds else Witness("count", "n_plus", lhs, rhs),
                          indeterminate=fragile and not holds)


def _control_shift_bounds(inputs) -> RelationReport:
    a, b, m = inputs["a"], inputs["b"], inputs["m"]
    ab = matrix_sum(a, b)
    return graded(shift_dominates_spectral(eigenvalues(a), eigenvalues(ab), m - 1), _gap_tol(a, b))


def _control_monotonicity(inputs) -> RelationReport:
    a, b = inputs["a"], inputs["b"]
    ab = matrix_sum(a, b)
    return graded(shift_dominates_spectral(eigenvalues(a), eigenvalues(ab), 0), _gap_tol(a, b))


def _control_weyl_pairwise(inputs) -> RelationReport:
    a, b, p = inputs["a"], inputs["b"], inputs["p"]
    ab = matrix_sum(a, b)
    return graded(shift_dominates_spectral(eigenvalues(a), eigenvalues(ab), p - 1), _gap_tol(a, b))


def _control_weyl_indexed(inputs) -> RelationReport:
    a, b = inputs["a"], inputs["b"]
    ab = matrix_sum(a, b)
    # index i+j-2 instead of i+j-1, restricted to i + j >= 3 so the extended
    # conventions do not make it vacuously false
    rep = _weyl_indexed_check(eigenvalues(a), eigenvalues(b), eigenvalues(ab), -2, i_min=2)
    return graded(rep, _gap_tol(a, b))


def _control_rank_one(inputs) -> RelationReport:
    a, vec = inputs["matrix"], inputs["vector"]
    v = np.array(vec, dtype=complex)
    bumped = from_numpy(a.to_numpy() + np.outer(v, v.conj()))
    return graded(interlaces(eigenvalues(bumped), eigenvalues(a)), _gap_tol(a))


def _control_indefinite(inputs) -> RelationReport:
    a, b = inputs["a"], inputs["b"]
    ab = matrix_sum(a, b)
    return graded(interlaces(eigenvalues(a), eigenvalues(ab)), _gap_tol(a, b))


def _control_pencil(inputs) -> RelationReport:
    p, a = inputs["p"], inputs["a"]
    reduced = pencil_reduce(p, a)
    sub = range(a.n - 1)
    reduced_sub = pencil_reduce(principal_submatrix(p, sub), principal_submatrix(a, sub))
    # reversed border claim: the sub-pencil dominates the full pencil
    return graded(
        shift_dominates_spectral(eigenvalues(reduced_sub), eigenvalues(reduced), 0),
        _gap_tol(p, a),
    )


def _control_lemma_bounds(inputs) -> RelationReport:
    lap = inputs["laplacian"]
    spec = eigenvalues(normalizer(lap))
    for v in spec:
        if not (-NORMALIZED_BOUND_TOL <= v <= 1.8):
            return RelationReport(False, Witness("eigenvalue", v, v, (0.0, 1.8)))
    return RelationReport(True, None)


def _control_lemma_pencil(inputs) -> RelationReport:
    lap = inputs["laplacian"]
    d = diagonal_part(lap)
    norm = normalizer(lap)
    r = -0.5  # the identity only holds for nonnegative shifts
    lhs = shifted_inertia(norm, r).n_plus
    rhs = pencil_inertia(lap, d, r).n_plus
    if lhs != rhs:
        return RelationReport(False, Witness("shift", r, lhs, rhs))
    return RelationReport(True, None)


def _control_deletion_normalized_interlace(g, which, kind, reduce_by=None) -> RelationReport:
    # interlacing instead of compatibility for the normalized pair: the count
    # difference would have to stay in [0, 1] rather than [-1, 1]
    g2 = delete_record(g, which) if reduce_by is None else reduce_weight(g, which, reduce_by)
    before = build_operator(g, kind)
    after = build_operator(g2, kind)
    norm_pts = [
        min(max(v, 0.0), 2.0)
        for v in list(eigenvalues(normalizer(build_operator(g, kind, as_float=True))).values)
        + list(eigenvalues(normalizer(build_operator(g2, kind, as_float=True))).values)
    ]
    nsamples = [q for q in _interval_samples(norm_pts + [0.0, 2.0]) if q >= 0]
    nsamples.append(Fraction(0))
    return _screened_diff_bounded(
        before, after, diagonal_part(before), diagonal_part(after), nsamples, 0, 1
    )


def _control_laplacian_deletion(inputs) -> RelationReport:
    return _control_deletion_normalized_interlace(
        inputs["graph"], inputs["record"], inputs["kind"], inputs.get("reduce_by")
    )


def _control_mohar_deletion(inputs) -> RelationReport:
    return _control_deletion_normalized_interlace(
        inputs["graph"], inputs["record"], OperatorKind.HERM_LAPLACIAN_OMEGA
    )


def _control_nu_criterion(inputs) -> RelationReport:
    f, g, m = inputs["f"], inputs["g"], inputs["m"]
    spectral = shift_dominates_spectral(f, g, m)
    counting = shift_dominates_nu(f, g, m - 1)  # mismatched offsets must disagree somewhere
    agree = spectral.holds == counting.holds
    return RelationReport(agree, None if agree else Witness("route", m, spectral.holds, counting.holds))


_CONTROLS = {
    TheoremId.INCLUSION_PRINCIPLE: _control_inclusion,
    TheoremId.CAUCHY: _control_cauchy,
    TheoremId.INERTIA_SUBADDITIVE: _control_subadditive,
    TheoremId.SHIFT_BOUNDS: _control_shift_bounds,
    TheoremId.MONOTONICITY: _control_monotonicity,
    TheoremId.WEYL_PAIRWISE: _control_weyl_pairwise,
    TheoremId.WEYL_INDEXED: _control_weyl_indexed,
    TheoremId.RANK_ONE_INTERLACE: _control_rank_one,
    TheoremId.INDEFINITE_COMPATIBLE: _control_indefinite,
    TheoremId.PENCIL: _control_pencil,
    TheoremId.LEMMA_BOUNDS: _control_lemma_bounds,
    TheoremId.LEMMA_PENCIL_IDENTITY: _control_lemma_pencil,
    TheoremId.LAPLACIAN_DELETION: _control_laplacian_deletion,
    TheoremId.MOHAR_DELETION: _control_mohar_deletion,
    TheoremId.NU_CRITERION: _control_nu_criterion,
}


# -- fuzz harness ---------------------------------------------------------------------


def _trial_seed(master_seed: int, trial: int) -> int:
    digest = hashlib.blake2b(f"{master_seed}:{trial}".encode(), digest_size=8).digest()
    return int.from_bytes(digest, "big")


def _serialize_value(value):
    if isinstance(value, HermitianMatrix):
        return {"hmat": dump_hmat(value)}
    if isinstance(value, GraphSpec):
        return {"graph": dump_graph(value)}
    if isinstance(value, RealRootedPoly):
        return [float(r) for r in value.roots]
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, (list, tuple)):
        return [_serialize_value(v) for v in value]
    return value


def serialize_inputs(inputs: dict) -> dict:
    return {k: _serialize_value(v) for k, v in inputs.items()}


@dataclass(frozen=True)
class FuzzFailure:
    seed: int
    inputs: dict
    witness: dict | None

    def to_json(self) -> dict:
        return {"seed": self.seed, "inputs": self.inputs, "witness": self.witness}


@dataclass(frozen=True)
class FuzzReport:
    """Outcome of a fuzz run; empty failures means every trial passed.

    Indeterminate trials (tolerance events) are tallied separately: they are
    neither passes nor failures.
    """

    theorem: str
    trials: int
    rng_seed: int
    failures: tuple[FuzzFailure, ...]
    indeterminate: int

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "trials": self.trials,
            "rng_seed": self.rng_seed,
            "indeterminate": self.indeterminate,
            "failures": [f.to_json() for f in self.failures],
            "passed": self.passed,
        }

    def to_json_text(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2) + "\n"


def _run_trials(theorem, verifier, trials, master_seed, size_bound) -> FuzzReport:
    if trials < 1:
        raise ValueError("at least one trial is required")
    failures = []
    indeterminate = 0
    for t in range(trials):
        seed = _trial_seed(master_seed, t)
        inputs = generate_inputs(theorem, seed, size_bound)
        report = verifier(inputs)
        if report.indeterminate:
            indeterminate += 1
        elif not report.holds:
            failures.append(
                FuzzFailure(
                    seed,
                    serialize_inputs(inputs),
                    report.witness.to_json() if report.witness else None,
                )
            )
    return FuzzReport(theorem, trials, master_seed, tuple(failures), indeterminate)


def fuzz(theorem: str, trials: int, master_seed: int, size_bound: int) -> FuzzReport:
    """Fuzz one statement; failures carry the seed, inputs, and witness."""
    if theorem not in _VERIFIERS:
        raise ValueError(f"unknown theorem id {theorem!r}")
    return _run_trials(theorem, _VERIFIERS[theorem], trials, master_seed, size_bound)


def negative_control(theorem: str, trials: int, master_seed: int, size_bound: int) -> FuzzReport:
    """Fuzz the hard-coded mutated claim; a healthy harness finds failures."""
    if theorem not in _CONTROLS:
        raise ValueError(f"unknown theorem id {theorem!r}")
    return _run_trials(theorem, _CONTROLS[theorem], trials, master_seed, size_bound)
