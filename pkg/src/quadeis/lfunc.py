"""Truncated Dirichlet-series checks for the twisted L-function of an
Eisenstein eigen-series.

The L-series of a series twisted by a quadratic character eta factors as a
pair of finite Euler polynomials times L(chi*eta, s-1) * L(chi*eta, s);
this module verifies that identity coefficientwise to a chosen precision,
and produces the exact algebraic part of the completed value at s = 1
(a rational multiple of the Gauss sum of chi).
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arith import divisors, prime_divisors
from .characters import QuadraticCharacter, bernoulli_b1
from .eisenstein import EisTriple, qexp_closed, validate_triple


@dataclass(frozen=True)
class DirichletCoeffs:
    """Coefficients a_1..a_N of a truncated Dirichlet series."""

    values: tuple

    @property
    def precision(self) -> int:
        return len(self.values)

    def coeff(self, n: int):
        if not 1 <= n <= self.precision:
            raise IndexError(f"coefficient {n} beyond precision {self.precision}")
        return self.values[n - 1]

    def dirichlet_product(self, other: "DirichletCoeffs") -> "DirichletCoeffs":
        """Truncated Dirichlet convolution: (ab)_n = sum over d | n of a_d b_{n/d}."""
        N = min(self.precision, other.precision)
        out = []
        for n in range(1, N + 1):
            out.append(sum(self.coeff(d) * other.coeff(n // d) for d in divisors(n)))
        return DirichletCoeffs(tuple(out))

    def euler_factor(self, p: int, w) -> "DirichletCoeffs":
        """Multiply by the sparse polynomial 1 + w p^{-s}: b_n = a_n + w*a_{n/p}."""
        vals = list(self.values)
        for n in range(len(vals), 0, -1):
            if n % p == 0:
                vals[n - 1] += w * vals[n // p - 1]
        return DirichletCoeffs(tuple(vals))


def _check_twist(D: int, C: int, triple: EisTriple, eta: QuadraticCharacter) -> None:
    validate_triple(D, C, triple.M, triple.L, triple.chi.conductor)
    if gcd(eta.conductor, D) != 1:
        raise ValueError(
            f"twist conductor {eta.conductor} must be prime to D={D}"
        )


def lhs_series(D: int, C: int, triple: EisTriple, eta: QuadraticCharacter, N: int) -> DirichletCoeffs:
    """Coefficients of the twisted L-series straight from the q-expansion."""
    _check_twist(D, C, triple, eta)
    g = qexp_closed(D, C, triple, N)
    return DirichletCoeffs(tuple(g.coeff(n) * eta(n) for n in range(1, N + 1)))


def rhs_series(D: int, C: int, triple: EisTriple, eta: QuadraticCharacter, N: int) -> DirichletCoeffs:
    """The factored side: Euler polynomials over the primes of M/f and L/f
    against the product L(chi*eta, s-1) * L(chi*eta, s)."""
    _check_twist(D, C, triple, eta)
    chi, f = triple.chi, triple.chi.conductor

    def chieta(n: int) -> int:
        return chi(n) * eta(n)

    shifted = DirichletCoeffs(tuple(n * chieta(n) for n in range(1, N + 1)))
    plain = DirichletCoeffs(tuple(chieta(n) for n in range(1, N + 1)))
    out = shifted.dirichlet_product(plain)
    for p in prime_divisors(triple.M // f):
        out = out.euler_factor(p, -chieta(p) * p)
    for p in prime_divisors(triple.L // f):
        out = out.euler_factor(p, -chieta(p))
    return out


def verify_factorization(D: int, C: int, triple: EisTriple, eta: QuadraticCharacter, N: int) -> bool:
    """Coefficientwise equality of the two series up to N."""
    return lhs_series(D, C, triple, eta, N) == rhs_series(D, C, triple, eta, N)


def lambda_algebraic(D: int, C: int, triple: EisTriple, eta: QuadraticCharacter) -> Fraction:
    """Algebraic part of the completed twisted value at s = 1, as the
    rational multiplier of g(chi).

    Zero whenever chi*eta is even.  Otherwise
      -(eta(-f) * chi(f_eta) / (2f)) * prod_{p | M/f} (1 - chieta(p))
        * prod_{p | L/f} (1 - chieta(p)/p) * B1(chi*eta)^2,
    quadratic characters being self-conjugate.  The transcendental
    normalization is never evaluated; this is a report-only quantity plus
    the structural vanishing rule.
    """
    _check_twist(D, C, triple, eta)
    chi, f = triple.chi, triple.chi.conductor
    product = chi.times(eta)
    if product.is_trivial:
        raise ValueError("the product character must be nontrivial")
    if product.parity == 1:
        return Fraction(0)
    val = -Fraction(eta(-f) * chi(eta.conductor), 2 * f)
    for p in prime_divisors(triple.M // f):
        val *= 1 - product(p)
    for p in prime_divisors(triple.L // f):
        val *= 1 - Fraction(product(p), p)
    return val * bernoulli_b1(product) ** 2
