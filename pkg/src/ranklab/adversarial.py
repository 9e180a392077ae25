"""Build and certify adversarial list-decoding instances.

An instance is a non-codeword center word plus a certified list of codewords
all at rank distance exactly tau from it, witnessing that list decoding at
radius tau (one past unique decoding) cannot stay polynomial.  Two builders:
the counting route goes through the pigeonhole subfamily of the
subfield-linear family; the explicit route uses the orbit family directly.
verify_instance re-derives every claim independently, including an optional
exhaustive ball scan.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import List, Tuple

from ranklab.errors import (
    BadParameters,
    ConstraintViolation,
    DivisibilityViolation,
    NoValidRadius,
    ParamMismatch,
)
from ranklab.constructions import (
    FamilyParams,
    PolyFamily,
    orbit_poly_family,
    pigeonhole_subfamily,
    shift_family,
    subfield_linear_family,
)
from ranklab.field import make_field
from ranklab.gabidulin import (
    BALL_BUDGET,
    GabidulinCode,
    RankWord,
    enumerate_ball,
    evaluate_word,
    make_code,
    preimage_message,
    rank_distance,
)
from ranklab.linpoly import LinearizedPoly
from ranklab.subspace import gaussian_binomial


@dataclass(frozen=True)
class AdversarialInstance:
    """Certified dense list around a non-codeword center.

    pivot is the polynomial R whose evaluation is the center; every listed
    codeword is the evaluation of R minus a family member.
    """

    code: GabidulinCode
    tau: int
    pivot: LinearizedPoly
    center: RankWord
    family: PolyFamily
    codewords: Tuple[RankWord, ...]
    claimed_bound: int
    kind: str                      # counting | explicit
    degenerate: bool = dc_field(default=False)


@dataclass
class CheckResult:
    name: str
    status: str                    # pass | fail | skipped
    measured: object = None
    expected: object = None


@dataclass
class VerificationReport:
    checks: List[CheckResult]

    @property
    def all_passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "format": "ranklab.report/v1",
            "all_passed": self.all_passed,
            "checks": [{"name": c.name, "status": c.status,
                        "measured": _jsonable(c.measured),
                        "expected": _jsonable(c.expected)}
                       for c in self.checks],
        }


def _jsonable(v):
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, tuple):
        return list(v)
    return v


def _check_instance(inst: AdversarialInstance):
    """Construction-time invariants; verify_instance re-checks independently."""
    code, tau = inst.code, inst.tau
    d = code.min_distance
    assert (d - 1) // 2 + 1 <= tau <= d - 1, "radius outside (UDR, d)"
    assert inst.pivot.q_degree >= code.k, "pivot degree would be a codeword"
    assert len(inst.codewords) == len(inst.family.members)
    assert len(inst.codewords) >= inst.claimed_bound or inst.degenerate
    for cw in inst.codewords:
        assert rank_distance(inst.center, cw) == tau, \
            "codeword not at distance exactly tau"


def _build_instance(code: GabidulinCode, tau: int, family: PolyFamily,
                    kind: str, claimed_bound: int) -> AdversarialInstance:
    spec = code.field
    r = family.params.r
    pivot_coeffs = [0] * (r + 1)
    for i, c in enumerate(family.mutual_top):
        pivot_coeffs[r - i] = c
    pivot = LinearizedPoly(spec, pivot_coeffs)
    center = evaluate_word(code, pivot)
    cws = tuple(evaluate_word(code, pivot - m) for m in family.members)
    inst = AdversarialInstance(
        code=code, tau=tau, pivot=pivot, center=center, family=family,
        codewords=cws, claimed_bound=claimed_bound, kind=kind,
        degenerate=claimed_bound < 2)
    _check_instance(inst)
    return inst


def counting_bound(q: int, n: int, g: int, tau: int) -> Tuple[Fraction, int]:
    """Exact pigeonhole bound and its simplified floor q^(n - tau(ell+1))."""
    if tau % g or math.gcd(n - tau, n) % g:
        raise DivisibilityViolation(
            f"need g | tau and g | gcd(n-tau, n); got g={g}, n={n}, tau={tau}")
    ell = tau // g - 1
    exact = Fraction(gaussian_binomial(n // g, (n - tau) // g, q ** g),
                     q ** (n * ell))
    simplified = q ** (n - tau * (ell + 1))
    return exact, simplified


def build_counting_instance(q: int, n: int, m: int, k: int, g: int,
                            beta_exponent: int = 0,
                            seed: int = 0) -> AdversarialInstance:
    """Existence-route instance: pigeonhole subfamily of the subfield-linear
    family, shifted by beta, at the smallest admissible radius."""
    code = make_code(q, n, m, k, beta_exponent)
    d = code.min_distance
    tau = None
    for t in range((d - 1) // 2 + 1, d):
        if g >= 2 and t % g == 0 and math.gcd(n - t, n) % g == 0 \
                and 0 < n - t < n:
            tau = t
            break
    if tau is None:
        raise NoValidRadius(
            f"no radius in [{(d - 1) // 2 + 1}, {d - 1}] works with g={g}")
    ell = tau // g - 1
    family = subfield_linear_family(q, n, n - tau, g, seed=seed)
    bucket = pigeonhole_subfamily(family, ell)
    shifted = shift_family(bucket, code.beta, code.field)
    exact, _ = counting_bound(q, n, g, tau)
    bound = -(-exact.numerator // exact.denominator)  # ceil
    return _build_instance(code, tau, shifted, "counting", bound)


def build_explicit_instance(q: int, g: int, s: int, n: int, m: int,
                            beta_exponent: int = 0,
                            seed: int = 0) -> AdversarialInstance:
    """Fully explicit instance: orbit family shifted by beta, code
    Gab[n, n-2gs+1], radius gs."""
    gs = g * s
    if g < 2 or n % gs or n < 2 * gs:
        raise DivisibilityViolation(
            f"need g >= 2, gs | n and n >= 2gs; got g={g}, s={s}, n={n}")
    code = make_code(q, n, m, n - 2 * gs + 1, beta_exponent)
    tau = gs
    family = orbit_poly_family(q, g, s, n - gs, seed=seed)
    shifted = shift_family(family, code.beta, code.field)
    bound = (q ** n - 1) // (q ** gs - 1)
    return _build_instance(code, tau, shifted, "explicit", bound)


def verify_instance(inst: AdversarialInstance,
                    ball_budget: int = BALL_BUDGET) -> VerificationReport:
    """Re-check every instance claim from scratch.

    (a) the center has no message preimage; (b) every listed codeword has
    one of q-degree < k; (c) every distance is exactly tau; (d) the list is
    at least the claimed bound; (e) within budget, the brute-force ball
    contains the whole list.
    """
    code, tau = inst.code, inst.tau
    checks = []

    checks.append(CheckResult(
        "center_not_in_code",
        "pass" if preimage_message(code, inst.center) is None else "fail"))

    bad = 0
    for cw in inst.codewords:
        msg = preimage_message(code, cw)
        if msg is None or msg.q_degree >= code.k:
            bad += 1
    checks.append(CheckResult(
        "codewords_encode_low_degree",
        "pass" if bad == 0 else "fail", measured=len(inst.codewords) - bad,
        expected=len(inst.codewords)))

    dists = sorted({rank_distance(inst.center, cw) for cw in inst.codewords})
    checks.append(CheckResult(
        "distances_exactly_tau",
        "pass" if dists == [tau] else "fail", measured=dists, expected=[tau]))

    checks.append(CheckResult(
        "list_meets_claimed_bound",
        "pass" if len(inst.codewords) >= inst.claimed_bound else "fail",
        measured=len(inst.codewords), expected=inst.claimed_bound))

    if code.size <= ball_budget:
        ball = enumerate_ball(code, inst.center, tau, ball_budget)
        coords = {w.coords for w in ball}
        contained = all(cw.coords in coords for cw in inst.codewords)
        ok = contained and len(ball) >= len(inst.codewords)
        checks.append(CheckResult(
            "ball_oracle_containment", "pass" if ok else "fail",
            measured=len(ball), expected=len(inst.codewords)))
    else:
        checks.append(CheckResult(
            "ball_oracle_containment", "skipped",
            measured=f"code size {code.size} over budget {ball_budget}"))

    return VerificationReport(checks)


# ----------------------------------------------------------------------
# Parameter families and analyses
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class RatioFamily:
    """Code parameters scaled from (length, radius) ratios."""

    q: int
    g: int
    n: int
    tau: int
    k: int
    rate: Fraction
    bound_exponent: int
    simplified_bound: int


def ratio_family_params(alpha_n: int, alpha_tau: int, g: int,
                        q: int = 2) -> RatioFamily:
    """Gab[alpha_n * g, n - 2 tau + 1] with tau = alpha_tau * g.

    Requires alpha_n >= alpha_tau^2 + 1 (exponential list) and
    alpha_n > 2 alpha_tau (radius below n/2), g >= 2.
    """
    if g < 2:
        raise ConstraintViolation("g >= 2 required")
    if alpha_n < alpha_tau ** 2 + 1:
        raise ConstraintViolation(
            f"alpha_n={alpha_n} < alpha_tau^2 + 1 = {alpha_tau ** 2 + 1}")
    if alpha_n <= 2 * alpha_tau:
        raise ConstraintViolation(
            f"alpha_n={alpha_n} must exceed 2*alpha_tau={2 * alpha_tau}")
    n = alpha_n * g
    tau = alpha_tau * g
    k = n - 2 * tau + 1
    exponent = (alpha_n - alpha_tau ** 2) * g
    return RatioFamily(q=q, g=g, n=n, tau=tau, k=k,
                       rate=Fraction(k, n), bound_exponent=exponent,
                       simplified_bound=q ** exponent)


def technical_sqrt_inequality(i: int) -> bool:
    """1 - sqrt((2^i - 1)/2^i) > 1/2^(i+1), checked numerically."""
    return 1.0 - math.sqrt((2 ** i - 1) / 2 ** i) > 1.0 / 2 ** (i + 1)


@dataclass(frozen=True)
class RadiusComparison:
    """Our smallest non-decodable radius vs the prior square-root radius."""

    i: int
    n: int
    tau: int
    tau_prime: float               # with the 2/n correction term
    tau_prime_asymptotic: float    # without it
    verdict: bool                  # tau < tau_prime
    inequality_holds: bool


def compare_radius_to_prior(i: int, n: int) -> RadiusComparison:
    """For length n = 2^j and radius tau = n / 2^(i+1), evaluate the prior
    bound's radius floor n(1 - sqrt(1 - 2^-i + 2/n)) and compare."""
    if n < 4 or n & (n - 1):
        raise BadParameters(f"n={n} must be a power of two")
    if not 1 <= i <= int(math.log2(n)) - 2:
        raise BadParameters(f"need 1 <= i <= log2(n) - 2, got i={i}")
    tau = n // 2 ** (i + 1)
    with_term = n * (1.0 - math.sqrt(1.0 - 2.0 ** -i + 2.0 / n))
    without = n * (1.0 - math.sqrt(1.0 - 2.0 ** -i))
    return RadiusComparison(
        i=i, n=n, tau=tau, tau_prime=with_term,
        tau_prime_asymptotic=without, verdict=tau < with_term,
        inequality_holds=technical_sqrt_inequality(i))


@dataclass(frozen=True)
class RSRouteReport:
    """Size cap of the same family strategy applied to ordinary evaluation
    codes: never more than 4 q^n, so never super-polynomial."""

    q: int
    n: int
    r: int
    g: int
    ell: int
    bound: int
    cap: int
    superpolynomial: bool


def rs_family_size_report(q: int, n: int, r: int, g: int) -> RSRouteReport:
    if n % g or r % g:
        raise DivisibilityViolation(f"g={g} must divide gcd(n, r)")
    ell = (n - r) // g - 1
    exponent = (r // g) * (n - r) - n * ell
    bound = 4 * q ** exponent
    cap = 4 * q ** n
    assert bound <= cap
    return RSRouteReport(q=q, n=n, r=r, g=g, ell=ell, bound=bound, cap=cap,
                         superpolynomial=False)


# ----------------------------------------------------------------------
# Serialization
# ----------------------------------------------------------------------

def code_to_dict(code: GabidulinCode) -> dict:
    return {
        "q": code.q, "n": code.n, "m": code.m, "k": code.k,
        "modulus": list(code.field.modulus),
        "beta_exponent": code.beta_exponent,
        "subfield_degree": code.subfield_degree,
        "punctured": code.punctured,
        "eval_points": list(code.eval_points),
    }


def code_from_dict(d: dict) -> GabidulinCode:
    from ranklab import gfmatrix

    field = make_field(d["q"], d["m"], d["modulus"])
    beta = field.pow(field.generator_serial, d["beta_exponent"])
    points = tuple(d["eval_points"])
    _check_serials(field, points, "eval points")
    if len(points) != d["n"] or gfmatrix.rank(
            [field.digits(p) for p in points], d["q"]) != d["n"]:
        raise ParamMismatch("evaluation points are not independent")
    return GabidulinCode(
        field=field, n=d["n"], k=d["k"], beta=beta,
        eval_points=points,
        subfield_degree=d["subfield_degree"],
        beta_exponent=d["beta_exponent"], punctured=d.get("punctured", 0))


def instance_to_dict(inst: AdversarialInstance, pretty: bool = False) -> dict:
    fam = inst.family
    out = {
        "format": "ranklab.instance/v1",
        "kind": inst.kind,
        "code": code_to_dict(inst.code),
        "tau": inst.tau,
        "pivot": list(inst.pivot.coeffs),
        "center": list(inst.center.coords),
        "codewords": [list(w.coords) for w in inst.codewords],
        "claimed_bound": inst.claimed_bound,
        "degenerate": inst.degenerate,
        "family": {
            "kind": fam.kind,
            "params": {"q": fam.params.q, "n": fam.params.n,
                       "r": fam.params.r, "g": fam.params.g,
                       "s": fam.params.s, "ell": fam.params.ell},
            "mutual_top": list(fam.mutual_top),
            "members": [list(m.coeffs) for m in fam.members],
        },
    }
    if pretty:
        spec = inst.code.field
        out["center_pretty"] = [str(spec.digits(c))
                                for c in inst.center.coords]
        out["pivot_pretty"] = [str(spec.digits(c))
                               for c in inst.pivot.coeffs]
    return out


def _check_serials(spec, values, what: str):
    for v in values:
        if not isinstance(v, int) or not 0 <= v < spec.order:
            raise ParamMismatch(f"{what}: serial {v!r} out of range "
                                f"for GF({spec.q}^{spec.e})")


def instance_from_dict(d: dict) -> AdversarialInstance:
    code = code_from_dict(d["code"])
    spec = code.field
    _check_serials(spec, d["pivot"], "pivot")
    _check_serials(spec, d["center"], "center")
    for cw in d["codewords"]:
        _check_serials(spec, cw, "codeword")
    f = d["family"]
    _check_serials(spec, f["mutual_top"], "mutual top")
    for m in f["members"]:
        _check_serials(spec, m, "family member")
    params = FamilyParams(**f["params"])
    family = PolyFamily(
        params=params, kind=f["kind"], spec=spec,
        members=tuple(LinearizedPoly(spec, c) for c in f["members"]),
        mutual_top=tuple(f["mutual_top"]))
    inst = AdversarialInstance(
        code=code, tau=d["tau"],
        pivot=LinearizedPoly(spec, d["pivot"]),
        center=RankWord(spec, tuple(d["center"])),
        family=family,
        codewords=tuple(RankWord(spec, tuple(c)) for c in d["codewords"]),
        claimed_bound=d["claimed_bound"], kind=d["kind"],
        degenerate=d.get("degenerate", False))
    return inst


def dump_json(data: dict) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + "\n"
