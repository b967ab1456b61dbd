"""Quadratic Dirichlet characters of odd square-free conductor.

For every odd square-free f >= 1 there is exactly one such character; it is
evaluated through the Jacobi symbol (n|f), extended by zero on integers
sharing a factor with f.  Conductor 1 is the trivial character.  The
attached rational constants (the parity chi(-1), the Gauss-sum square,
the double Bernoulli sum d_chi, and the generalized Bernoulli number
B_{1,chi}) are what the order formulas downstream consume.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .arith import bernoulli2, is_squarefree, jacobi


@dataclass(frozen=True)
class QuadraticCharacter:
    """The quadratic character (.|f) of odd square-free conductor f."""

    conductor: int

    def __post_init__(self):
        f = self.conductor
        if f < 1 or f % 2 == 0 or not is_squarefree(f):
            raise ValueError(f"conductor must be odd and square-free, got {f}")

    @property
    def is_trivial(self) -> bool:
        return self.conductor == 1

    def __call__(self, n: int) -> int:
        return _jacobi_mod(n % self.conductor if self.conductor > 1 else 0, self.conductor)

    def on_fraction(self, q) -> int:
        """Multiplicative extension to rationals with numerator and
        denominator prime to the conductor."""
        q = Fraction(q)
        f = self.conductor
        if gcd(q.numerator, f) != 1 or gcd(q.denominator, f) != 1:
            raise ValueError(f"{q} is not prime to the conductor {f}")
        return self(q.numerator) * self(q.denominator)

    @property
    def parity(self) -> int:
        """Value at -1: +1 for even characters, -1 for odd ones."""
        return self(-1)

    def gauss_square(self) -> int:
        """Square of the Gauss sum: parity * conductor."""
        return self.parity * self.conductor

    def times(self, other: "QuadraticCharacter") -> "QuadraticCharacter":
        """Product character; conductors must be coprime, so the product is
        primitive of conductor equal to the product of conductors."""
        if gcd(self.conductor, other.conductor) != 1:
            raise ValueError("product only defined for coprime conductors")
        return QuadraticCharacter(self.conductor * other.conductor)


@lru_cache(maxsize=None)
def _jacobi_mod(n_mod: int, f: int) -> int:
    return jacobi(n_mod, f)


def trivial_character() -> QuadraticCharacter:
    return QuadraticCharacter(1)


@lru_cache(maxsize=None)
def d_chi(chi: QuadraticCharacter) -> Fraction:
    """Double Bernoulli sum sum_{a,b mod f} chi(a) chi(b) B2((a+b)/f).

    The sum runs over all residues; chi vanishes on non-units.  For the
    trivial character this is the single term B2(0) = 1/6.  The value is
    integral away from the conductor (the denominator can carry factors of
    f, e.g. conductor 3 gives -4/9), never at primes outside it.
    """
    f = chi.conductor
    total = Fraction(0)
    values = [chi(a) for a in range(f)]
    for a in range(f):
        if values[a] == 0:
            continue
        for b in range(f):
            if values[b] == 0:
                continue
            total += values[a] * values[b] * bernoulli2(Fraction(a + b, f))
    return total


@lru_cache(maxsize=None)
def bernoulli_b1(chi: QuadraticCharacter) -> Fraction:
    """Generalized Bernoulli number B_{1,chi} = (1/f) sum_{a=1}^{f} chi(a) a.

    Zero for even characters; rejected for the trivial character, whose
    B1 value depends on a normalization convention this library never needs.
    """
    f = chi.conductor
    if chi.is_trivial:
        raise ValueError("B1 of the trivial character is convention-dependent")
    return Fraction(sum(chi(a) * a for a in range(1, f + 1)), f)
