"""Exact moments of the four adjacency-type counts, their limits, and the
feasibility region for segment-set growth rates.

For a uniform random permutation and a segment set I with m adjacencies in k
segments, the per-adjacency type probabilities are elementary (they only see
how many end/intrinsic/isolated points I has), which gives closed forms for
the conditional expectations. Unconditional moments average those over the
number of segments of a uniform m-subset of the identity's adjacencies, with
weights P(A_{m,k}) = C(m-1, k-1) C(n-m, k) / C(n-1, m).

Everything is evaluated in exact rational arithmetic. Variances are built
from first-principles pairwise probabilities (the sum over ordered pairs of
adjacency positions); the equivalent simplified product forms are checked
against these definitions in the test suite and in REPORT.md, and where a
simplification disagrees with exhaustive enumeration the defining sum is the
one implemented here. Two published simplifications fail that audit (the
unconditional trivial-segment expectation and the conditional 0-free-end
variance); corrected forms are derived in REPORT.md.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import InvalidRange


@dataclass(frozen=True)
class MomentVector:
    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    delta: Fraction

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.alpha, self.beta, self.gamma, self.delta)


@dataclass(frozen=True)
class VarianceVector:
    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    delta: Fraction

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.alpha, self.beta, self.gamma, self.delta)


@dataclass(frozen=True)
class LimitVector:
    """Limits of the four normalised counts; conditional block present only
    when a segment-rate c' is supplied."""

    alpha: float
    beta: float
    gamma: float
    delta: float
    alpha_conditional: float | None = None
    beta_conditional: float | None = None
    gamma_conditional: float | None = None
    delta_conditional: float | None = None


def _check_conditional(n: int, m: int, k: int) -> None:
    if n < 2 or not (1 <= k <= m <= n - k):
        raise InvalidRange(f"need 1 <= k <= m <= n-k, got n={n} m={m} k={k}")


def _check_unconditional(n: int, m: int) -> None:
    if n < 2 or not (1 <= m <= n - 1):
        raise InvalidRange(f"need 1 <= m <= n-1, got n={n} m={m}")


def expected_counts_conditional(n: int, m: int, k: int) -> MomentVector:
    """Expected type counts for any fixed I with |I| = m, ||I|| = k."""
    _check_conditional(n, m, k)
    r = n - m - k
    return MomentVector(
        Fraction(r * (r - 1), n),
        Fraction(4 * k * r, n),
        Fraction(2 * k * (2 * k - 1), n),
        Fraction((m - k) * (2 * n - m + k - 1), n),
    )


def _pair_term_numerators(n: int, m: int, k: int) -> tuple[int, int, int, int]:
    """Numerators over n(n-1) of 2 * sum_{i>j} P(both positions have the type).

    The 0-free-end entry is the inclusion-exclusion over the two endpoint
    pairs sharing zero or one point; the published product simplification of
    it disagrees with enumeration (see REPORT.md).
    """
    r = n - m - k
    w = m - k
    u = n - w
    t_alpha = r * (r - 1) ** 2 * (r - 2)
    t_beta = 4 * k * r * ((r - 1) * (4 * k - 1) + 2 * k - 1)
    t_gamma = 2 * k * (2 * k - 1) ** 2 * (2 * k - 2)
    t_delta = (
        n * (n - 1) * (n - 2) * (n - 3)
        - 2 * u * (u - 1) * (n - 2) * (n - 3)
        + u * (u - 1) * (u - 2) * (u - 3)
        + 2 * n * (n - 1) * (n - 2)
        - 4 * u * (u - 1) * (n - 2)
        + 2 * u * (u - 1) * (u - 2)
    )
    return t_alpha, t_beta, t_gamma, t_delta


def variance_counts_conditional(n: int, m: int, k: int) -> VarianceVector:
    """Variances for fixed I in exact rationals: E(1-E) plus the pair sums."""
    _check_conditional(n, m, k)
    e = expected_counts_conditional(n, m, k)
    terms = _pair_term_numerators(n, m, k)
    den = n * (n - 1)
    return VarianceVector(
        *(ei * (1 - ei) + Fraction(t, den) for ei, t in zip(e.as_tuple(), terms))
    )


def expected_counts_unconditional(n: int, m: int) -> MomentVector:
    """Expected type counts over a uniform m-subset of the identity adjacencies."""
    _check_unconditional(n, m)
    den = n * (n - 1) * (n - 2)
    if n == 2:
        # single adjacency, necessarily trivial-segment w.r.t. I = A_id
        return MomentVector(Fraction(0), Fraction(0), Fraction(1), Fraction(0))
    alpha = Fraction((n - m) * (n - m - 1) ** 2 * (n - m - 2), den)
    beta = Fraction(4 * m * (n - m) * (n - m - 1) ** 2, den)
    gamma = Fraction(2 * m * (n - m) * (2 * m * (n - m) - n), den)
    delta = Fraction(m * (m - 1) * (2 * n * n - 6 * n - m * m + 3 * m + 2), den)
    return MomentVector(alpha, beta, gamma, delta)


def variance_counts_unconditional(n: int, m: int) -> VarianceVector:
    """Variances over (uniform m-subset, uniform permutation), via the k-sum.

    The k-sum is accumulated as one big integer over the common denominator
    n(n-1) C(n-1, m), which keeps n in the thousands fast.
    """
    _check_unconditional(n, m)
    e = expected_counts_unconditional(n, m)
    sums = [0, 0, 0, 0]
    binom_den = comb(n - 1, m)
    for k in range(1, min(m, n - m) + 1):
        weight = comb(m - 1, k - 1) * comb(n - m, k)
        for i, t in enumerate(_pair_term_numerators(n, m, k)):
            sums[i] += t * weight
    den = n * (n - 1) * binom_den
    return VarianceVector(
        *(ei * (1 - ei) + Fraction(s, den) for ei, s in zip(e.as_tuple(), sums))
    )


def asymptotic_limits(c: float, c_prime: float | None = None) -> LimitVector:
    """Limits of the normalised expected counts when m/n -> c (and k/n -> c').

    The unconditional 0-free-end limit is c^2 (2 - c^2); REPORT.md derives it
    from the exact expectation, whose published limit (c^2 (2-c)^2) does not
    match the closed forms.
    """
    if not (0 <= c <= 1):
        raise InvalidRange(f"need 0 <= c <= 1, got c={c}")
    uncond = (
        (1 - c) ** 4,
        4 * c * (1 - c) ** 3,
        4 * c * c * (1 - c) ** 2,
        c * c * (2 - c * c),
    )
    if c_prime is None:
        return LimitVector(*uncond)
    if not (0 <= c_prime <= c and c <= 1 - c_prime):
        raise InvalidRange(f"need 0 <= c' <= c <= 1-c', got c={c} c'={c_prime}")
    cond = (
        (1 - c - c_prime) ** 2,
        4 * c_prime * (1 - c - c_prime),
        4 * c_prime * c_prime,
        (c - c_prime) * (2 - c + c_prime),
    )
    return LimitVector(*uncond, *cond)


def variance_limit_coefficients(c: float) -> tuple[float, float, float, float]:
    """Leading coefficients of Var/n for the unconditional counts at rate c.

    The trivial-segment coefficient is the corrected one (REPORT.md); the
    published display for it differs by 160 c^4 (1-c)^4 and goes negative.
    """
    if not (0 <= c <= 1):
        raise InvalidRange(f"need 0 <= c <= 1, got c={c}")
    return (
        (1 - c) ** 4 * c * c * (8 + c * (-12 + 5 * c)),
        4 * (1 - c) ** 3 * c * c * (8 - c * (31 + 4 * c * (-11 + 5 * c))),
        4 * c * c * (1 - c) ** 2 * (20 * c ** 4 - 40 * c ** 3 + 24 * c * c - 4 * c + 1),
        c * c * (1 - c * c) ** 2 * (4 + c * (-8 + 5 * c)),
    )


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    violations: tuple[str, ...]


def feasibility_check(c: float, c_prime: float) -> FeasibilityResult:
    """Test (c, c') against the constraint system that makes a far geodesic
    point through a rate-(c, c') segment set possible:

        1 - c - (1-c-c')^2 <= 4c' - 4cc'
        c' <= 1 - c - (1-c-c')^2 <= 2c'
        0 < c' <= c <= 1 - c'

    Comparisons are exact on the binary values of the inputs.
    """
    fc, fp = Fraction(c), Fraction(c_prime)
    mid = 1 - fc - (1 - fc - fp) ** 2
    violations = []
    if not mid <= 4 * fp - 4 * fc * fp:
        violations.append(f"1-c-(1-c-c')^2 <= 4c'-4cc' fails: {float(mid):.6g} > {float(4 * fp - 4 * fc * fp):.6g}")
    if not fp <= mid:
        violations.append(f"c' <= 1-c-(1-c-c')^2 fails: {float(fp):.6g} > {float(mid):.6g}")
    if not mid <= 2 * fp:
        violations.append(f"1-c-(1-c-c')^2 <= 2c' fails: {float(mid):.6g} > {float(2 * fp):.6g}")
    if not 0 < fp:
        violations.append(f"0 < c' fails: c'={float(fp):.6g}")
    if not fp <= fc:
        violations.append(f"c' <= c fails: c'={float(fp):.6g} > c={float(fc):.6g}")
    if not fc <= 1 - fp:
        violations.append(f"c <= 1-c' fails: c={float(fc):.6g} > {float(1 - fp):.6g}")
    return FeasibilityResult(not violations, tuple(violations))
