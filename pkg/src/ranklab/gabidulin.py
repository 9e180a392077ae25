"""Gabidulin codes over GF(q^m) with evaluation points spanning a cyclic
shift of the subfield GF(q^n): encoding, the rank metric, brute-force ball
enumeration, puncturing, and the bound calculators.

A word is a length-n vector of GF(q^m) serials; its matrix form is the m x n
expansion over GF(q) (coordinate i becomes column i), and rank weight is the
rank of that matrix.  The ball oracle iterates the q^(mk) messages of the
code, never the ambient space.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from ranklab import gfmatrix
from ranklab.errors import (
    BadDimension,
    BudgetExceeded,
    ContextMismatch,
    DegreeTooHigh,
    NegativeDiscriminant,
    NotASubfield,
    RadiusTooLarge,
    TooManyPunctures,
)
from ranklab.field import FieldSpec, embed_serial, make_field
from ranklab.linpoly import LinearizedPoly
from ranklab.subspace import gaussian_binomial

BALL_BUDGET = 1 << 22


@dataclass(frozen=True)
class RankWord:
    """A length-n word over GF(q^m), coordinates as serials."""

    spec: FieldSpec
    coords: Tuple[int, ...]

    def __len__(self):
        return len(self.coords)

    def columns(self) -> List[Tuple[int, ...]]:
        """Coordinates expanded to GF(q) coefficient columns (m entries)."""
        return [self.spec.digits(c) for c in self.coords]


def _same_context(w1: RankWord, w2: RankWord):
    if w1.spec != w2.spec or len(w1) != len(w2):
        raise ContextMismatch("words from different code contexts")


def rank_weight(w: RankWord) -> int:
    """Rank over GF(q) of the m x n matrix expansion of the word."""
    if w.spec.q == 2:
        return gfmatrix.rank_gf2(w.coords)
    return gfmatrix.rank(w.columns(), w.spec.q)


def rank_distance(w1: RankWord, w2: RankWord) -> int:
    _same_context(w1, w2)
    spec = w1.spec
    diff = RankWord(spec, tuple(spec.sub(a, b)
                                for a, b in zip(w1.coords, w2.coords)))
    return rank_weight(diff)


@dataclass(frozen=True)
class GabidulinCode:
    """Evaluation code of linearized polynomials of q-degree < k.

    eval_points are n GF(q)-independent serials of GF(q^m), all inside
    beta * GF(q^n).  punctured marks codes whose length no longer divides m.
    """

    field: FieldSpec
    n: int
    k: int
    beta: int
    eval_points: Tuple[int, ...]
    subfield_degree: int
    beta_exponent: int = 0
    punctured: int = 0

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def m(self) -> int:
        return self.field.e

    @property
    def min_distance(self) -> int:
        return self.n - self.k + 1

    @property
    def size(self) -> int:
        return self.field.order ** self.k

    def __repr__(self):
        return (f"Gab[{self.n},{self.k}] over GF({self.q}^{self.m})"
                + (f" punctured x{self.punctured}" if self.punctured else ""))


def make_code(q: int, n: int, m: int, k: int, beta_exponent: int = 0,
              points: Optional[Sequence[int]] = None) -> GabidulinCode:
    """Gab[n, k] over GF(q^m) with evaluation points beta * (power basis of
    the embedded GF(q^n)).

    Custom points (serials of GF(q^m)) may be supplied for exploration;
    they must be GF(q)-independent but need not lie in a shifted subfield,
    in which case none of the certified-instance claims apply.
    """
    if m % n:
        raise NotASubfield(f"n={n} must divide m={m}")
    if not 1 <= k <= n:
        raise BadDimension(f"need 1 <= k <= n, got k={k}, n={n}")
    field = make_field(q, m)
    beta = field.pow(field.generator_serial, beta_exponent)
    if points is None:
        sub = make_field(q, n)
        base = [embed_serial(sub.pow(sub.generator_serial, j), sub, field)
                for j in range(n)]
        points = tuple(field.mul(beta, b) for b in base)
    else:
        points = tuple(points)
        if len(points) != n:
            raise BadDimension(f"expected {n} evaluation points")
    if gfmatrix.rank([field.digits(p) for p in points], q) != n:
        raise BadDimension("evaluation points are not independent")
    return GabidulinCode(field=field, n=n, k=k, beta=beta,
                         eval_points=points, subfield_degree=n,
                         beta_exponent=beta_exponent)


def evaluate_word(code: GabidulinCode, poly: LinearizedPoly) -> RankWord:
    """Evaluation of any linearized polynomial at the code's points."""
    return RankWord(code.field,
                    tuple(poly.evaluate_serial(p) for p in code.eval_points))


def encode(code: GabidulinCode, message: LinearizedPoly) -> RankWord:
    """Codeword of a message of q-degree < k."""
    if message.spec != code.field:
        raise ContextMismatch("message over the wrong field")
    if message.q_degree >= code.k:
        raise DegreeTooHigh(
            f"q-degree {message.q_degree} not below k={code.k}")
    return evaluate_word(code, message)


def _basis_contributions(code: GabidulinCode) -> List[Tuple[int, ...]]:
    """Codewords of the GF(q)-basis messages gamma^t x^(q^i)."""
    field = code.field
    out = []
    for i in range(code.k):
        frob_points = [field.frobenius(p, i) for p in code.eval_points]
        for t in range(field.e):
            g = field.pow(field.generator_serial, t)
            out.append(tuple(field.mul(g, fp) for fp in frob_points))
    return out


def codewords(code: GabidulinCode,
              budget: int = BALL_BUDGET) -> Iterator[RankWord]:
    """All q^(mk) codewords (message order; big-endian digit odometer)."""
    if code.size > budget:
        raise BudgetExceeded(f"code has {code.size} words, budget {budget}")
    field = code.field
    contribs = _basis_contributions(code)
    n = code.n
    q = code.q

    def rec(level: int, partial: Tuple[int, ...]):
        if level == len(contribs):
            yield RankWord(field, partial)
            return
        vec = contribs[level]
        cur = partial
        for digit in range(q):
            yield from rec(level + 1, cur)
            if digit < q - 1:
                cur = tuple(field.add(a, b) for a, b in zip(cur, vec))

    yield from rec(0, (0,) * n)


def _check_code_context(code: GabidulinCode, w: RankWord):
    if w.spec != code.field or len(w.coords) != code.n:
        raise ContextMismatch("word does not match the code context")


def preimage_message(code: GabidulinCode,
                     w: RankWord) -> Optional[LinearizedPoly]:
    """Message polynomial of q-degree < k encoding w, or None.

    Solves the GF(q)-linear system over the mk message coordinates, so it
    is independent of the enumeration-based oracle.
    """
    _check_code_context(code, w)
    field = code.field
    q, m, n = code.q, field.e, code.n
    contribs = _basis_contributions(code)
    # equations: m digits per coordinate; unknowns: m*k basis multipliers
    rows = []
    rhs = []
    cols = [  # digit expansion of each basis codeword
        [field.digits(c) for c in vec] for vec in contribs]
    for j in range(n):
        for bit in range(m):
            rows.append(tuple(cols[u][j][bit] for u in range(len(contribs))))
            rhs.append(field.digits(w.coords[j])[bit])
    sol = gfmatrix.solve(rows, rhs, q)
    if sol is None:
        return None
    coeffs = [0] * code.k
    gamma = field.generator_serial
    for i in range(code.k):
        acc = 0
        for t in range(m):
            c = sol[i * m + t]
            if c:
                acc = field.add(acc, field.mul(c, field.pow(gamma, t)))
        coeffs[i] = acc
    return LinearizedPoly(field, coeffs)


def contains(code: GabidulinCode, w: RankWord) -> bool:
    return preimage_message(code, w) is not None


def enumerate_ball(code: GabidulinCode, center: RankWord, tau: int,
                   budget: int = BALL_BUDGET) -> List[RankWord]:
    """All codewords within rank distance tau of center, by brute force.

    This is the ground-truth oracle for every list-size claim.  Output is
    sorted by coordinate serials.
    """
    _check_code_context(code, center)
    if code.size > budget:
        raise BudgetExceeded(f"code has {code.size} words, budget {budget}")
    field = code.field
    n = code.n
    found: List[Tuple[int, ...]] = []
    if code.q == 2:
        # Gray-code walk over the GF(2) message space; diff tracks
        # center - codeword as packed columns.
        contribs = _basis_contributions(code)
        exceeds = gfmatrix.rank_gf2_exceeds
        diff = list(center.coords)
        if not exceeds(diff, tau):
            found.append(tuple(c ^ d for c, d in zip(center.coords, diff)))
        for idx in range(1, code.size):
            vec = contribs[(idx & -idx).bit_length() - 1]
            for j in range(n):
                diff[j] ^= vec[j]
            if not exceeds(diff, tau):
                found.append(tuple(c ^ d
                                   for c, d in zip(center.coords, diff)))
    else:
        for w in codewords(code, budget):
            if rank_distance(center, w) <= tau:
                found.append(w.coords)
    found.sort()
    return [RankWord(field, c) for c in found]


# ----------------------------------------------------------------------
# Puncturing
# ----------------------------------------------------------------------

def puncture(code: GabidulinCode, s: int) -> GabidulinCode:
    """Drop the last s coordinates: a length n-s, dimension k code."""
    if not 0 <= s < code.min_distance:
        raise TooManyPunctures(
            f"s={s} must be below the minimum distance {code.min_distance}")
    if s == 0:
        return code
    return GabidulinCode(field=code.field, n=code.n - s, k=code.k,
                         beta=code.beta,
                         eval_points=code.eval_points[:code.n - s],
                         subfield_degree=code.subfield_degree,
                         beta_exponent=code.beta_exponent,
                         punctured=code.punctured + s)


def puncture_word(w: RankWord, positions: Sequence[int]) -> RankWord:
    """Remove the given coordinate positions."""
    drop = set(positions)
    return RankWord(w.spec, tuple(c for j, c in enumerate(w.coords)
                                  if j not in drop))


def punctured_radius_shift(s: int, n: int, k: int) -> int:
    """Radius offset s' with tau = tau' + s' after s puncturings.

    s even -> s/2; s odd and n-k even -> (s+1)/2; both odd -> (s-1)/2.
    """
    if s % 2 == 0:
        return s // 2
    if (n - k) % 2 == 0:
        return (s + 1) // 2
    return (s - 1) // 2


# ----------------------------------------------------------------------
# Bound calculators
# ----------------------------------------------------------------------

def johnson_like_radius(n: int, m: int, d: int,
                        eps: Union[int, float, Fraction] = 0) -> float:
    """(m+n)/2 - sqrt((m+n)^2/4 - m(d-eps)); error below 1e-9.

    For n = m and eps = 0 this is n - sqrt(n(n-d)).  eps = 1 is allowed
    for the strengthened comparison variant.
    """
    if not 0 <= eps <= 1:
        raise NegativeDiscriminant(f"eps={eps} outside [0, 1]")
    disc = Fraction(m + n, 2) ** 2 - Fraction(m) * (Fraction(d) - Fraction(eps))
    if disc < 0:
        raise NegativeDiscriminant("square root argument is negative")
    return (m + n) / 2 - math.sqrt(disc)


def prior_counting_bound(q: int, n: int, m: int, k: int,
                         tau: int) -> Fraction:
    """Existential list-size bound from the earlier counting argument:
    [n, n-tau]_q / (q^m)^(n-tau-k).  Values below 1 are vacuous."""
    d = n - k + 1
    if tau >= d:
        raise RadiusTooLarge(f"tau={tau} is not below d={d}")
    return Fraction(gaussian_binomial(n, n - tau, q),
                    q ** (m * (n - tau - k)))
