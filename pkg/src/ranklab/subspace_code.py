"""Lifting rank-metric words and codes to constant-dimension subspace codes.

An n x m matrix X over GF(q) lifts to the rowspace of [I_n | X], an
n-dimensional subspace of GF(q)^(n+m); the map is injective and doubles
distances: d_s(lift X, lift Y) = 2 rank(X - Y).  Words over GF(q^m) convert
to matrices column-per-coordinate and are transposed before lifting.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from ranklab import gfmatrix
from ranklab.errors import BudgetExceeded, RadiusTooLarge, ShapeMismatch
from ranklab.gabidulin import (
    GabidulinCode,
    RankWord,
    codewords,
    rank_distance,
)
from ranklab.subspace import gaussian_binomial

LIFT_BUDGET = 1 << 18


@dataclass(frozen=True)
class LiftedSubspace:
    """Rowspace of [I_n | X] inside GF(q)^(n+m), stored as that RREF.

    packed holds the rows base-q packed (bit j = column j for q = 2); it is
    derived from rows and excluded from comparisons.
    """

    q: int
    n: int
    m: int
    rows: Tuple[Tuple[int, ...], ...]
    packed: Tuple[int, ...] = dc_field(compare=False, repr=False, default=())

    @property
    def dim(self) -> int:
        return self.n

    def payload(self) -> Tuple[Tuple[int, ...], ...]:
        """The matrix X recovered from the stored [I_n | X]."""
        return tuple(r[self.n:] for r in self.rows)

    def packed_rows(self) -> Tuple[int, ...]:
        return self.packed


def _pack_row(row: Sequence[int], q: int) -> int:
    v = 0
    for x in reversed(row):
        v = v * q + x
    return v


def lift(x_rows: Sequence[Sequence[int]], q: int) -> LiftedSubspace:
    """Rowspace of [I_n | X] for an n x m matrix X over GF(q)."""
    n = len(x_rows)
    if n == 0:
        raise ShapeMismatch("matrix must have at least one row")
    m = len(x_rows[0])
    if any(len(r) != m for r in x_rows):
        raise ShapeMismatch("ragged matrix")
    rows = []
    for i, r in enumerate(x_rows):
        ident = [1 if j == i else 0 for j in range(n)]
        rows.append(tuple(ident) + tuple(v % q for v in r))
    rows = tuple(rows)
    return LiftedSubspace(q=q, n=n, m=m, rows=rows,
                          packed=tuple(_pack_row(r, q) for r in rows))


def word_to_matrix(w: RankWord) -> Tuple[Tuple[int, ...], ...]:
    """Transposed matrix form: row j holds the m digits of coordinate j."""
    return tuple(w.spec.digits(c) for c in w.coords)


def lift_word(w: RankWord) -> LiftedSubspace:
    return lift(word_to_matrix(w), w.spec.q)


def lifted_distance(a: LiftedSubspace, b: LiftedSubspace) -> int:
    """Subspace distance 2 rank([I X; I Y]) - 2n.

    Computed from the stacked generators and cross-checked against
    2 rank(X - Y); the two must agree exactly.
    """
    if (a.q, a.n, a.m) != (b.q, b.n, b.m):
        raise ShapeMismatch("lifted subspaces of different shapes")
    if a.q == 2:
        by_stack = 2 * gfmatrix.rank_gf2(a.packed + b.packed) - 2 * a.n
        n = a.n
        by_rank = 2 * gfmatrix.rank_gf2(
            [(x >> n) ^ (y >> n) for x, y in zip(a.packed, b.packed)])
    else:
        stacked = gfmatrix.rank(list(a.rows) + list(b.rows), a.q)
        by_stack = 2 * stacked - 2 * a.n
        diff = [[(x - y) % a.q for x, y in zip(ra, rb)]
                for ra, rb in zip(a.payload(), b.payload())]
        by_rank = 2 * gfmatrix.rank(diff, a.q)
    assert by_stack == by_rank, "distance identity violated"
    return by_stack


def lift_code(code: GabidulinCode,
              budget: int = LIFT_BUDGET) -> List[LiftedSubspace]:
    """Lift of all transposed codewords: an (n+m, q^(mk), 2d, n)_q code."""
    if code.size > budget:
        raise BudgetExceeded(f"code has {code.size} words, budget {budget}")
    out = [lift_word(w) for w in codewords(code, budget)]
    assert len({ls.rows for ls in out}) == len(out)
    return out


def prior_lifted_bound(q: int, n: int, m: int, k: int,
                       tau_s: int) -> Fraction:
    """Earlier existential bound at subspace radius tau_s:
    [n, floor(tau_s/2)]_q / q^(m(n - k - floor(tau_s/2)))."""
    half = tau_s // 2
    if half >= n - k + 1:
        raise RadiusTooLarge(f"floor(tau_s/2)={half} not below d={n - k + 1}")
    return Fraction(gaussian_binomial(n, half, q),
                    q ** (m * (n - k - half)))


def verify_lifted_instance(inst, tau_s: Optional[int] = None,
                           budget: int = LIFT_BUDGET):
    """Subspace-level checks of a rank-level instance.

    Lifts center and codewords, checks every lifted distance is within
    tau_s (equality to 2 tau expected), compares the rank-level list size
    with the lifted ball when enumerable, and evaluates the lifted bound
    matching the instance kind.  Returns a VerificationReport.
    """
    from ranklab.adversarial import CheckResult, VerificationReport

    if tau_s is None:
        tau_s = 2 * inst.tau
    half = tau_s // 2
    # The bound formulas apply at floor(tau_s/2) == tau; a smaller radius
    # still runs the geometric checks (which then fail), but no bound is
    # claimed there, so those checks are skipped.
    radius_matches = half == inst.tau
    checks = []

    lifted_center = lift_word(inst.center)
    dists = sorted({lifted_distance(lifted_center, lift_word(cw))
                    for cw in inst.codewords})
    checks.append(CheckResult(
        "lifted_distances_within_radius",
        "pass" if dists and dists[-1] <= tau_s else "fail",
        measured=dists, expected=[2 * inst.tau]))

    code = inst.code
    if code.size <= budget:
        rank_count = sum(1 for w in codewords(code, budget)
                         if rank_distance(inst.center, w) <= inst.tau)
        if code.q == 2:
            # d_s = 2(rank[stacked] - n) <= tau_s iff the stacked rank
            # stays within n + floor(tau_s/2)
            n = code.n
            cp = list(lifted_center.packed)
            limit = n + tau_s // 2
            count = 0
            for w in codewords(code, budget):
                stacked = cp + [(1 << j) | (w.coords[j] << n)
                                for j in range(n)]
                if not gfmatrix.rank_gf2_exceeds(stacked, limit):
                    count += 1
        else:
            count = sum(1 for w in codewords(code, budget)
                        if lifted_distance(lifted_center,
                                           lift_word(w)) <= tau_s)
        checks.append(CheckResult(
            "ball_relation_inequality",
            "pass" if rank_count <= count else "fail",
            measured=count, expected=rank_count))
    else:
        checks.append(CheckResult(
            "ball_relation_inequality", "skipped",
            measured=f"code size {code.size} over budget {budget}"))

    q, n = code.q, code.n
    listed = len(inst.codewords)
    if inst.kind == "explicit":
        name = "lifted_explicit_bound"
    else:
        name = "lifted_counting_bound"
    if not radius_matches:
        checks.append(CheckResult(
            name, "skipped",
            measured=f"floor(tau_s/2)={half} != instance radius {inst.tau}"))
    elif inst.kind == "explicit":
        bound = (q ** n - 1) // (q ** half - 1)
        checks.append(CheckResult(
            name, "pass" if listed >= bound else "fail",
            measured=listed, expected=bound))
    else:
        g = inst.family.params.g
        ell = half // g - 1
        exact = Fraction(gaussian_binomial(n // g, (n - half) // g, q ** g),
                         q ** (n * ell))
        simplified = q ** (n - half * (ell + 1))
        ok = listed >= exact and listed >= simplified
        checks.append(CheckResult(
            name, "pass" if ok else "fail",
            measured=listed, expected=max(simplified,
                                          -(-exact.numerator
                                            // exact.denominator))))

    return VerificationReport(checks)
