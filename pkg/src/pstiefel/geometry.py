"""Pontrjagin series, span and immersion certificates, rank bounds.

For a two-frame circle quotient of dimension 4n - 5 with weights
(l1, l2), the tangent bundle's Pontrjagin series (in a degree-2 class x,
so index 2i is the i-th Pontrjagin coefficient) is

    p(tau) = (1 - l1^2 x^2)^n (1 - l2^2 x^2)^n (1 - (l2 - l1)^2 x^2)^{-1}

up to 2-torsion, and the stable normal series p(nu) is its inverse. Mod
an odd prime 2-torsion dies, so a nonzero mod-p coefficient at an
admissible power of x is an honest nonvanishing integral class:

  * p_i(tau) != 0 forces span <= (4n - 5) - 2i;
  * p_j(nu) != 0 forces any immersion codimension to be >= 2j, ruling
    out immersions into euclidean space of dimension 4n - 6 + 2j.

Admissible means x^{2i} survives in mod-p cohomology, i.e. 2i is below
the nilpotency order. Certificates are computed from the truncated
series directly; no closed-form shortcut is ever used, which is the
point: the closed-form claims are checked against these computations
and the verdict (AGREE or DISCREPANT) is reported as data.

The complement-rank reports answer a related stable question over
complex projective spaces and lens spaces: how small can a complement
of a weighted line bundle sum be, with nonvanishing Chern coefficients
or homogeneous sums as the obstruction witnesses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cohomology import InvariantViolation, StiefelParams, nilpotency_order
from .ring import Residue, is_prime, p_adic_valuation, primes_upto
from .series import TruncatedSeries
from .weights import WeightTuple, homogeneous_sum, homogeneous_sum_pair

CERTIFICATE_BASIS = "direct-series"

AGREE = "AGREE"
DISCREPANT = "DISCREPANT"
NOT_APPLICABLE = "NOT_APPLICABLE"


def _require_two_frames(ell: WeightTuple) -> None:
    if len(ell) != 2:
        raise ValueError(
            f"Pontrjagin computations need exactly two weights, got {len(ell)}")


def _one_minus_square(c: int, truncation: int, modulus: int) -> TruncatedSeries:
    return TruncatedSeries([1, 0, -c * c], truncation, modulus)


def tangent_pontrjagin(n: int, ell: WeightTuple, modulus: int = 0,
                       truncation: int | None = None) -> TruncatedSeries:
    """Tangent Pontrjagin series, exact over Z or reduced mod m."""
    _require_two_frames(ell)
    if n < 2:
        raise ValueError(f"need n >= 2 for two frames, got {n}")
    T = n if truncation is None else truncation
    l1, l2 = ell.weights
    a = _one_minus_square(l1, T, modulus).int_pow(n)
    b = _one_minus_square(l2, T, modulus).int_pow(n)
    c = _one_minus_square(l2 - l1, T, modulus).inv()
    return a.mul(b).mul(c)


def normal_pontrjagin(n: int, ell: WeightTuple, modulus: int = 0,
                      truncation: int | None = None) -> TruncatedSeries:
    """Stable normal Pontrjagin series, the inverse of the tangent one."""
    _require_two_frames(ell)
    if n < 2:
        raise ValueError(f"need n >= 2 for two frames, got {n}")
    T = n if truncation is None else truncation
    l1, l2 = ell.weights
    a = _one_minus_square(l1, T, modulus).int_pow(-n)
    b = _one_minus_square(l2, T, modulus).int_pow(-n)
    c = _one_minus_square(l2 - l1, T, modulus)
    return a.mul(b).mul(c)


def _require_odd_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        raise ValueError(
            "certificates use odd primes only; the Pontrjagin series "
            "identity holds up to 2-torsion, which mod 2 proves nothing")


@dataclass(frozen=True)
class SpanCertificate:
    """Witness that span <= span_bound: p_index(tau) = witness * x^{2*index}."""

    prime: int
    index: int
    witness: Residue
    span_bound: int

    def __post_init__(self) -> None:
        if not self.witness:
            raise InvariantViolation("span certificate with zero witness")
        if self.index < 1:
            raise InvariantViolation("span certificate needs index >= 1")


@dataclass(frozen=True)
class ImmersionCertificate:
    """Witness of non-immersion: p_index(nu) nonzero mod prime.

    certified_dim is the largest euclidean dimension the vanishing rule
    itself excludes; claimed_dim = certified_dim + 1 is the sharper
    closed-form assertion recorded for comparison.
    """

    prime: int
    index: int
    witness: Residue
    certified_dim: int
    claimed_dim: int

    def __post_init__(self) -> None:
        if not self.witness:
            raise InvariantViolation("immersion certificate with zero witness")
        if self.index < 1:
            raise InvariantViolation("immersion certificate needs index >= 1")
        if self.certified_dim != self.claimed_dim - 1:
            raise InvariantViolation(
                "certified dimension must be one below the claimed one")


def span_certificate(n: int, ell: WeightTuple, p: int) -> SpanCertificate | None:
    """Best direct span bound mod p: the largest admissible index with a
    nonzero tangent Pontrjagin coefficient. None when every admissible
    coefficient vanishes."""
    _require_two_frames(ell)
    _require_odd_prime(p)
    order = nilpotency_order(StiefelParams(n, 2, ell), p)
    if order < 3:
        return None
    series = tangent_pontrjagin(n, ell, modulus=p, truncation=order)
    for i in range((order - 1) // 2, 0, -1):
        w = series.coeff(2 * i)
        if w:
            return SpanCertificate(p, i, w, (4 * n - 5) - 2 * i)
    return None


def immersion_certificate(n: int, ell: WeightTuple,
                          p: int) -> ImmersionCertificate | None:
    """Best direct non-immersion bound mod p, from the normal series."""
    _require_two_frames(ell)
    _require_odd_prime(p)
    order = nilpotency_order(StiefelParams(n, 2, ell), p)
    if order < 3:
        return None
    series = normal_pontrjagin(n, ell, modulus=p, truncation=order)
    for j in range((order - 1) // 2, 0, -1):
        w = series.coeff(2 * j)
        if w:
            return ImmersionCertificate(
                p, j, w, (4 * n - 6) + 2 * j, (4 * n - 5) + 2 * j)
    return None


@dataclass(frozen=True)
class SpanSweep:
    """All span certificates for odd primes up to a bound, plus the best."""

    n: int
    ell: WeightTuple
    prime_bound: int
    certificates: tuple[SpanCertificate, ...]
    best: SpanCertificate | None


@dataclass(frozen=True)
class ImmersionSweep:
    n: int
    ell: WeightTuple
    prime_bound: int
    certificates: tuple[ImmersionCertificate, ...]
    best: ImmersionCertificate | None


def best_span_bound(n: int, ell: WeightTuple, prime_bound: int) -> SpanSweep:
    """Sweep odd primes <= prime_bound; best = smallest span bound,
    ties going to the smallest prime."""
    certs = []
    for p in primes_upto(prime_bound):
        if p == 2:
            continue
        cert = span_certificate(n, ell, p)
        if cert is not None:
            certs.append(cert)
    best = min(certs, key=lambda c: (c.span_bound, c.prime), default=None)
    return SpanSweep(n, ell, prime_bound, tuple(certs), best)


def best_immersion_bound(n: int, ell: WeightTuple,
                         prime_bound: int) -> ImmersionSweep:
    """Sweep odd primes <= prime_bound; best = largest certified dimension,
    ties going to the smallest prime."""
    certs = []
    for p in primes_upto(prime_bound):
        if p == 2:
            continue
        cert = immersion_certificate(n, ell, p)
        if cert is not None:
            certs.append(cert)
    best = min(certs, key=lambda c: (-c.certified_dim, c.prime), default=None)
    return ImmersionSweep(n, ell, prime_bound, tuple(certs), best)


@dataclass(frozen=True)
class ClaimInstance:
    """One closed-form claim instance checked against direct computation."""

    prime: int
    part: int
    hypotheses: tuple[tuple[str, bool], ...]
    index: int | None
    admissible: bool | None
    coefficient: Residue | None
    claimed: int | None
    verdict: str
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class ClaimCheck:
    """All instances of one closed-form claim for a given quotient."""

    kind: str  # "span" or "immersion"
    n: int
    ell: WeightTuple
    instances: tuple[ClaimInstance, ...]

    @property
    def vacuous(self) -> bool:
        return not self.instances

    @property
    def verdicts(self) -> tuple[str, ...]:
        return tuple(inst.verdict for inst in self.instances)


def _odd_prime_divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 3
    while n % 2 == 0:
        n //= 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 2
    if n > 2:
        out.append(n)
    return out


def check_span_theorem(n: int, ell: WeightTuple) -> ClaimCheck:
    """Check the closed-form span bounds against the direct series.

    Qualifying primes are the odd p dividing n but not l2 - l1. Part 1
    claims span <= 4n - 5 - 2*floor((n-2)/2) through the tangent
    coefficient at index floor((n-2)/2); part 2 (n odd, p dividing
    l1^n - l2^n) claims span <= 3n - 4 through index (n-1)/2. A verdict
    of DISCREPANT means the hypotheses hold but the direct coefficient
    vanishes (or sits above the nilpotency order), so the closed-form
    argument's witness is absent; it is reported as data, not an error.
    """
    _require_two_frames(ell)
    l1, l2 = ell.weights
    gap = l2 - l1
    instances = []
    for p in _odd_prime_divisors(n):
        if gap % p == 0:
            continue
        order = nilpotency_order(StiefelParams(n, 2, ell), p)
        i1 = (n - 2) // 2
        i2 = (n - 1) // 2
        T = max(order, 2 * i2 + 1, 2 * i1 + 1)
        series = tangent_pontrjagin(n, ell, modulus=p, truncation=T)

        w1 = series.coeff(2 * i1)
        adm1 = 2 * i1 <= order - 1
        notes1 = ()
        if i1 == 0:
            notes1 = ("index 0 is vacuous: the claimed bound equals the "
                      "manifold dimension",)
        instances.append(ClaimInstance(
            prime=p,
            part=1,
            hypotheses=(("p divides n", True),
                        ("p does not divide l2 - l1", True)),
            index=i1,
            admissible=adm1,
            coefficient=w1,
            claimed=(4 * n - 5) - 2 * i1,
            verdict=AGREE if (w1 and adm1) else DISCREPANT,
            notes=notes1,
        ))

        pow_gap = (l1 ** n - l2 ** n) % p == 0
        hyps2 = (("p divides n", True),
                 ("p does not divide l2 - l1", True),
                 ("n odd", n % 2 == 1),
                 ("p divides l1^n - l2^n", pow_gap))
        if n % 2 == 1 and pow_gap:
            w2 = series.coeff(2 * i2)
            adm2 = 2 * i2 <= order - 1
            instances.append(ClaimInstance(
                prime=p,
                part=2,
                hypotheses=hyps2,
                index=i2,
                admissible=adm2,
                coefficient=w2,
                claimed=3 * n - 4,
                verdict=AGREE if (w2 and adm2) else DISCREPANT,
            ))
        else:
            instances.append(ClaimInstance(
                prime=p,
                part=2,
                hypotheses=hyps2,
                index=None,
                admissible=None,
                coefficient=None,
                claimed=None,
                verdict=NOT_APPLICABLE,
            ))
    return ClaimCheck("span", n, ell, tuple(instances))


def check_immersion_theorem(n: int, ell: WeightTuple) -> ClaimCheck:
    """Check the closed-form non-immersion claim against the direct series.

    Qualifying primes are the odd divisors of gcd(n - 1, l2 - l1). The
    claim puts the quotient outside euclidean space of dimension
    4n - 5 + 2*floor((n-3)/2) through the normal coefficient at index
    floor((n-3)/2); the direct vanishing rule certifies one dimension
    less, recorded alongside.
    """
    _require_two_frames(ell)
    l1, l2 = ell.weights
    instances = []
    for p in _odd_prime_divisors(math.gcd(n - 1, l2 - l1)):
        j = (n - 3) // 2
        if j < 0:
            continue
        order = nilpotency_order(StiefelParams(n, 2, ell), p)
        T = max(order, 2 * j + 1)
        series = normal_pontrjagin(n, ell, modulus=p, truncation=T)
        w = series.coeff(2 * j)
        adm = 2 * j <= order - 1
        notes = ()
        if j == 0:
            notes = ("index 0 is vacuous: the constant coefficient is 1",)
        instances.append(ClaimInstance(
            prime=p,
            part=1,
            hypotheses=(("p divides n - 1", True),
                        ("p divides l2 - l1", True)),
            index=j,
            admissible=adm,
            coefficient=w,
            claimed=(4 * n - 5) + 2 * j,
            verdict=AGREE if (w and adm) else DISCREPANT,
            notes=notes,
        ))
    return ClaimCheck("immersion", n, ell, tuple(instances))


@dataclass(frozen=True)
class RankBoundReport:
    """Lower bound (with witness) and achievable rank of a complement."""

    space: str
    lower_bound: int
    achievable: int
    reason_kind: str  # "chern-nonzero", "homogeneous-sum-mod-m",
                      # "steenrod-square" or "none"
    reason_index: int | None = None
    reason_value: int | None = None
    notes: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.lower_bound > self.achievable:
            raise InvariantViolation(
                f"lower bound {self.lower_bound} exceeds achievable "
                f"rank {self.achievable}")


def cp_complement_min_rank(n: int, ell: WeightTuple) -> RankBoundReport:
    """Minimal rank of a complement of the weighted line bundle sum
    over complex projective n-space.

    The complement's r-th Chern coefficient is (-1)^r h_r, so the
    largest surviving r <= n forces rank >= r; a complement of rank n
    always exists, and rank n - 1 is achievable exactly when h_n = 0.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    hs = [homogeneous_sum(ell, i) for i in range(n + 1)]
    surviving = [i for i in range(1, n + 1) if hs[i] != 0]
    lower = max(surviving, default=0)
    achievable = n - 1 if hs[n] == 0 else n
    notes = ()
    if hs[n] == 0:
        notes = ("top complement coefficient vanishes, so a rank "
                 f"{n - 1} complement exists",)
    if lower == 0:
        return RankBoundReport(f"CP^{n}", 0, achievable, "none", notes=notes)
    sign = -1 if lower % 2 else 1
    return RankBoundReport(
        f"CP^{n}", lower, achievable, "chern-nonzero",
        reason_index=lower, reason_value=sign * hs[lower], notes=notes)


@dataclass(frozen=True)
class LensParams:
    """A lens space quotient instance: join dimension d, order m, weights."""

    d: int
    m: int
    l1: int
    l2: int

    def __post_init__(self) -> None:
        if self.d < 1:
            raise ValueError(f"need d >= 1, got {self.d}")
        if self.m < 2:
            raise ValueError(f"need m >= 2, got {self.m}")
        if math.gcd(self.l1, self.l2) != 1:
            raise ValueError(
                f"weights ({self.l1}, {self.l2}) must be coprime")


@dataclass(frozen=True)
class CriterionResult:
    """Outcome of the mod-2 secondary criterion with hypothesis breakdown."""

    satisfied: bool
    hypotheses: tuple[tuple[str, bool], ...]
    value: int
    diagnostic: str | None = None


def lens_sq2_criterion(params: LensParams) -> CriterionResult:
    """Secondary (Steenrod square) criterion for a full-rank complement.

    Requires all of: d even, m even, m divides h_d(l1, l2), and equal
    2-adic valuations of m and h_d. For coprime weights and even d the
    sum h_d is odd, so the conjunction can never hold; the diagnostic
    records that whenever d is even.
    """
    d, m = params.d, params.m
    value = homogeneous_sum_pair(params.l1, params.l2, d)
    divides = value % m == 0
    if value != 0 and m % 2 == 0:
        valuations_match = p_adic_valuation(2, m) == p_adic_valuation(2, value)
    else:
        valuations_match = False
    hyps = (
        ("d even", d % 2 == 0),
        ("m even", m % 2 == 0),
        ("m divides h_d", divides),
        ("2-adic valuations of m and h_d match", valuations_match),
    )
    satisfied = all(v for _, v in hyps)
    diagnostic = None
    if d % 2 == 0:
        diagnostic = (
            f"h_{d}({params.l1},{params.l2}) = {value} is odd for coprime "
            "weights and even d, so 'm even' and 'm divides h_d' cannot "
            "hold together")
    return CriterionResult(satisfied, hyps, value, diagnostic)


def lens_rank_bound(params: LensParams) -> RankBoundReport:
    """Complement rank bound over the lens space quotient.

    Rank d is always achievable. It is forced when h_d(l1, l2) is
    nonzero mod m, or (in principle) when the secondary mod-2 criterion
    holds; otherwise only d - 1 is forced.
    """
    d, m = params.d, params.m
    value = homogeneous_sum_pair(params.l1, params.l2, d)
    space = f"L^{d}({m})"
    if value % m != 0:
        return RankBoundReport(
            space, d, d, "homogeneous-sum-mod-m",
            reason_index=d, reason_value=value % m)
    crit = lens_sq2_criterion(params)
    if crit.satisfied:
        return RankBoundReport(
            space, d, d, "steenrod-square", reason_index=d, reason_value=value)
    notes = ()
    if crit.diagnostic:
        notes = (crit.diagnostic,)
    return RankBoundReport(space, d - 1, d, "none", notes=notes)
