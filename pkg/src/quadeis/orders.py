"""Cuspidal-subgroup orders and the Eisenstein-ideal index prediction.

The only irrational quantity in the theory is the Gauss sum g(chi); every
order formula involves it through the unit n_chi = -(f/(4*g(chi)))*d_chi.
Rational multiples of g(chi) are kept formal (GaussCoefficient), with the
single reduction rule g(chi)^2 = chi(-1)*f.  Orders are computed as
indices of rational lattices and reported both as a full integer
(provisional at 2, 3 and the primes of the conductor, where the theory
proves nothing) and with those primes stripped.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arith import euler_phi, prime_divisors, psi_plus, rational_gcd
from .characters import QuadraticCharacter, d_chi
from .cusp_constants import lattice_R
from .eisenstein import EisTriple, validate_triple


@dataclass(frozen=True)
class GaussCoefficient:
    """The number c * g(chi), carried formally."""

    chi: QuadraticCharacter
    c: Fraction

    def __mul__(self, other: "GaussCoefficient") -> Fraction:
        """Product of two formal multiples of the same Gauss sum; the result
        is rational via g(chi)^2 = parity * conductor."""
        if not isinstance(other, GaussCoefficient):
            return NotImplemented
        if other.chi != self.chi:
            raise ValueError("cannot multiply coefficients of different characters")
        return self.c * other.c * self.chi.gauss_square()

    def scaled(self, r) -> "GaussCoefficient":
        return GaussCoefficient(self.chi, self.c * Fraction(r))


@dataclass(frozen=True)
class FactoredOrder:
    """A group order with the uncontrolled primes stripped.

    value is coprime to every inverted prime; raw is the rational the value
    was extracted from (numerator and denominator of raw are supported on
    value and the inverted primes only).
    """

    value: int
    inverted: frozenset[int]
    raw: Fraction


def n_chi_gauss(chi: QuadraticCharacter) -> GaussCoefficient:
    """The constant-term unit n_chi as a formal Gauss-sum multiple:
    n_chi = -parity * (d_chi/4) * g(chi)."""
    d = d_chi(chi)
    if d == 0:
        raise ArithmeticError(f"d_chi vanishes for conductor {chi.conductor}")
    return GaussCoefficient(chi, Fraction(-chi.parity) * d / 4)


def a_factor(D: int, C: int, triple: EisTriple) -> int:
    """The integer lattice generator phi(D/f) * psi(L/f) * gcd(D/M, C)."""
    f = triple.chi.conductor
    return euler_phi(D // f) * psi_plus(triple.L // f) * gcd(D // triple.M, C)


def lattice_quotient_order(x: Fraction, modulus) -> int:
    """Index |(x*Z + A*Z) / A*Z| for rational x and positive rational A."""
    A = Fraction(modulus)
    if A <= 0:
        raise ValueError(f"modulus must be positive, got {A}")
    if x == 0:
        return 1
    order = A / rational_gcd((x, A))
    if order.denominator != 1:
        raise ArithmeticError(f"lattice gcd does not divide the modulus: {x}, {A}")
    return order.numerator


def order_full(D: int, C: int, triple: EisTriple) -> int:
    """Order of (x*Z + A*Z)/A*Z with x = -parity*4/(f*d_chi) and A the
    integer lattice generator.  This is the cuspidal-subgroup order as a
    plain integer; its parts at 2, 3 and the primes of the conductor are
    provisional (the theory controls the order only away from them)."""
    chi = triple.chi
    validate_triple(D, C, triple.M, triple.L, chi.conductor)
    d = d_chi(chi)
    if d == 0:
        raise ArithmeticError(f"d_chi vanishes for conductor {chi.conductor}")
    x = Fraction(-4 * chi.parity) / (chi.conductor * d)
    return lattice_quotient_order(x, a_factor(D, C, triple))


def strip_primes(q: Fraction, primes) -> Fraction:
    """Remove every power of the given primes from numerator and denominator."""
    num, den = q.numerator, q.denominator
    for p in primes:
        while num % p == 0:
            num //= p
        while den % p == 0:
            den //= p
    return Fraction(num, den)


def _stripped_order(D: int, C: int, triple: EisTriple, extra: int) -> FactoredOrder:
    chi = triple.chi
    validate_triple(D, C, triple.M, triple.L, chi.conductor)
    raw = a_factor(D, C, triple) * d_chi(chi)
    inverted = frozenset(prime_divisors(6 * chi.conductor * extra))
    stripped = strip_primes(abs(raw), inverted)
    if stripped.denominator != 1:
        raise ArithmeticError(
            f"denominator of {raw} has support outside {sorted(inverted)}"
        )
    return FactoredOrder(stripped.numerator, inverted, raw)


def order_away_6f(D: int, C: int, triple: EisTriple) -> FactoredOrder:
    """Cuspidal-subgroup order with the primes of 6*f inverted: the absolute
    value of A * d_chi stripped of those primes.  The denominator of
    A * d_chi is always supported on them."""
    return _stripped_order(D, C, triple, 1)


def index_prediction(D: int, C: int, triple: EisTriple) -> FactoredOrder:
    """Predicted index of the Eisenstein ideal in the cusp-form Hecke
    algebra, away from 6 * gcd(L, C) * f.

    This is only the numeric right-hand side of the index isomorphism; the
    Hecke algebra itself is never computed here.
    """
    return _stripped_order(D, C, triple, gcd(triple.L, C))


def periods_report(D: int, C: int, triple: EisTriple) -> tuple[GaussCoefficient, GaussCoefficient]:
    """Generators of the period lattice on the Gamma1 cover, as formal
    Gauss-sum multiples: g(chi)/L and the Gamma1 residue-lattice generator.

    For the trivial character both coefficients are literal rationals
    (g = 1).  The quotient of the first generator modulo the second has the
    same order as the full lattice quotient with modulus A*f; this
    consistency is asserted.
    """
    chi = triple.chi
    validate_triple(D, C, triple.M, triple.L, chi.conductor)
    gen1 = GaussCoefficient(chi, Fraction(1, triple.L))
    gen2 = n_chi_gauss(chi).scaled(lattice_R(D, C, triple, "gamma1"))
    d = d_chi(chi)
    x = Fraction(-4 * chi.parity) / (chi.conductor * d)
    expected = lattice_quotient_order(x, a_factor(D, C, triple) * chi.conductor)
    got = lattice_quotient_order(gen1.c / gen2.c, 1)
    if got != expected:
        raise ArithmeticError(
            f"period-lattice quotient {got} disagrees with lattice order {expected}"
        )
    return gen1, gen2
