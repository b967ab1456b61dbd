"""Exact integer and rational helpers used by every other module.

All values are exact: integers are unbounded, rationals are ``Fraction``
instances in lowest terms with positive denominator, and nothing here
touches floating point.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from math import floor, gcd, isqrt


@dataclass(frozen=True)
class Factorization:
    """Prime factorization n = prod p**e, primes strictly increasing, e >= 1."""

    n: int
    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)


@lru_cache(maxsize=None)
def factor(n: int) -> Factorization:
    """Factor n >= 1 by deterministic trial division."""
    if n < 1:
        raise ValueError(f"cannot factor nonpositive integer {n}")
    m = n
    factors = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


def prime_divisors(n: int) -> tuple[int, ...]:
    return factor(n).primes


def is_prime(n: int) -> bool:
    return n >= 2 and factor(n).factors == ((n, 1),)


def is_squarefree(n: int) -> bool:
    return factor(n).is_squarefree


def radical(n: int) -> int:
    out = 1
    for p in factor(n).primes:
        out *= p
    return out


def val_p(n: int, p: int) -> int:
    """Multiplicity of the prime p in n >= 1."""
    if n < 1:
        raise ValueError(f"valuation undefined for {n}")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    """Sorted positive divisors of n >= 1."""
    divs = [1]
    for p, e in factor(n).factors:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return tuple(sorted(divs))


def euler_phi(n: int) -> int:
    """Number of units modulo n."""
    if n < 1:
        raise ValueError(f"euler_phi undefined for {n}")
    out = n
    for p in factor(n).primes:
        out = out // p * (p - 1)
    return out


def psi_plus(n: int) -> int:
    """prod (p + 1) over primes p | n; defined for square-free n only."""
    fac = factor(n)
    if not fac.is_squarefree:
        raise ValueError(f"psi_plus requires square-free input, got {n}")
    out = 1
    for p in fac.primes:
        out *= p + 1
    return out


def nu(n: int) -> int:
    """Total number of prime factors of n counted with multiplicity."""
    return sum(e for _, e in factor(n).factors)


def index_mu(n: int) -> int:
    """Index of the Hecke congruence subgroup of level n: n * prod (1 + 1/p)."""
    out = n
    for p in factor(n).primes:
        out = out // p * (p + 1)
    return out


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a|n) for odd positive n; jacobi(a, 1) == 1."""
    if n < 1 or n % 2 == 0:
        raise ValueError(f"jacobi symbol needs odd positive modulus, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def bernoulli2(t) -> Fraction:
    """Second Bernoulli polynomial at the fractional part of t.

    B2(<t>) = <t>**2 - <t> + 1/6 with <t> in [0, 1); periodic with period 1.
    """
    t = Fraction(t)
    u = t - floor(t)
    return u * u - u + Fraction(1, 6)


def primes_up_to(limit: int) -> list[int]:
    """All primes <= limit, by sieve."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(2, limit + 1) if sieve[i]]


def squarefree_up_to(limit: int) -> list[int]:
    return [n for n in range(1, limit + 1) if is_squarefree(n)]


def rational_gcd(values) -> Fraction:
    """Content of a finite set of rationals: the largest g with each v in g*Z.

    Zero entries are ignored; returns 0 if every entry is zero.
    """

    def gcd2(x: Fraction, y: Fraction) -> Fraction:
        return Fraction(
            gcd(x.numerator * y.denominator, y.numerator * x.denominator),
            x.denominator * y.denominator,
        )

    vals = [Fraction(v) for v in values if v != 0]
    if not vals:
        return Fraction(0)
    return reduce(gcd2, vals)
