"""The weight-2 Eisenstein eigenbasis at level D*C.

The basis is indexed by triples (M, L, chi) with M, L | D, M != 1,
D | M*L | D*C and the conductor of chi dividing gcd(M, L).  Only quadratic
chi are ever expanded; the full index set is counted but not materialized.
Each series has two independent q-expansion routes: the operator route
(per-prime shift operators applied to the base series of the character)
and a closed divisor-sum formula.  Their agreement, and the Hecke
eigenvalue pattern, are the module's main verification targets.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .arith import divisors, euler_phi, is_prime, nu, prime_divisors, radical, val_p
from .characters import QuadraticCharacter
from .cusps import validate_level


@dataclass(frozen=True)
class EisTriple:
    """Index (M, L, chi) of one Eisenstein eigen-series."""

    M: int
    L: int
    chi: QuadraticCharacter

    @property
    def f(self) -> int:
        return self.chi.conductor

    @property
    def D(self) -> int:
        """The square-free level part, recoverable as the radical of M*L."""
        return radical(self.M * self.L)


def validate_triple(D: int, C: int, M: int, L: int, f: int) -> EisTriple:
    """Build the triple, naming the violated index-set constraint on failure."""
    validate_level(D, C)
    if M < 1 or D % M != 0:
        raise ValueError(f"M={M} must divide D={D}")
    if L < 1 or D % L != 0:
        raise ValueError(f"L={L} must divide D={D}")
    if M == 1:
        raise ValueError("M=1 is excluded from the index set")
    if (M * L) % D != 0:
        raise ValueError(f"D={D} must divide M*L={M * L}")
    if (D * C) % (M * L) != 0:
        raise ValueError(f"M*L={M * L} must divide D*C={D * C}")
    chi = QuadraticCharacter(f)
    if gcd(M, L) % f != 0:
        raise ValueError(f"conductor f={f} must divide gcd(M,L)={gcd(M, L)}")
    return EisTriple(M, L, chi)


def ml_pairs(D: int, C: int) -> list[tuple[int, int]]:
    """All (M, L) with M, L | D, M != 1, D | M*L | D*C, sorted."""
    validate_level(D, C)
    out = []
    for M in divisors(D):
        if M == 1:
            continue
        for L in divisors(D):
            if (M * L) % D == 0 and (D * C) % (M * L) == 0:
                out.append((M, L))
    return sorted(out)


def count_H(D: int, C: int) -> int:
    """Size of the full index set: all Dirichlet characters counted."""
    return sum(euler_phi(gcd(M, L)) for M, L in ml_pairs(D, C))


def enumerate_quadratic_triples(D: int, C: int) -> list[EisTriple]:
    """The quadratic sub-family: one triple per (M, L) and odd f | gcd(M, L)."""
    out = []
    for M, L in ml_pairs(D, C):
        for f in divisors(gcd(M, L)):
            if f % 2 == 1:
                out.append(EisTriple(M, L, QuadraticCharacter(f)))
    return out


class QSeries:
    """Truncated q-expansion with exact rational coefficients a0..aN.

    The precision records how many coefficients are trustworthy; reading
    beyond it raises.
    """

    __slots__ = ("_a", "precision", "ambient_level")

    def __init__(self, coeffs, ambient_level: int):
        self._a = list(coeffs)
        if not self._a:
            raise ValueError("a series needs at least the constant term")
        self.precision = len(self._a) - 1
        self.ambient_level = ambient_level

    def coeff(self, n: int):
        if not 0 <= n <= self.precision:
            raise IndexError(f"coefficient {n} beyond valid precision {self.precision}")
        return self._a[n]

    def coefficients(self) -> tuple:
        return tuple(self._a)

    def scaled(self, c) -> "QSeries":
        return QSeries([c * a for a in self._a], self.ambient_level)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return (
            self.ambient_level == other.ambient_level
            and self.precision == other.precision
            and self._a == other._a
        )

    def __repr__(self) -> str:
        head = ", ".join(str(a) for a in self._a[:6])
        return f"QSeries(level={self.ambient_level}, prec={self.precision}, [{head}, ...])"


@lru_cache(maxsize=None)
def sigma_chi(chi: QuadraticCharacter, n: int) -> int:
    """Twisted divisor sum: sum over d | n of d * chi(d) * chi(n/d)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return sum(d * chi(d) * chi(n // d) for d in divisors(n))


@lru_cache(maxsize=None)
def sigma_coprime(m: int, n: int) -> int:
    """Sum of the divisors of n that are coprime to m."""
    if n < 1 or m < 1:
        raise ValueError("arguments must be positive")
    return sum(d for d in divisors(n) if gcd(d, m) == 1)


def sigma_ML(D: int, M: int, L: int, f: int, n: int) -> int:
    """Divisor sum attached to (M, L): zero when n meets gcd(M,L)/f,
    otherwise (prod over primes l | D/M of l^{v_l(n)}) * sigma_coprime(D/f, n)."""
    if gcd(n, gcd(M, L) // f) != 1:
        return 0
    out = sigma_coprime(D // f, n)
    for ell in prime_divisors(D // M):
        out *= ell ** val_p(n, ell)
    return out


@lru_cache(maxsize=None)
def _echi_coeffs(chi: QuadraticCharacter, N: int) -> tuple:
    a0 = Fraction(-1, 24) if chi.is_trivial else Fraction(0)
    return (a0,) + tuple(sigma_chi(chi, n) for n in range(1, N + 1))


def qexp_echi(chi: QuadraticCharacter, N: int) -> QSeries:
    """Base series of the character: constant -1/24 for the trivial character,
    0 otherwise, then the twisted divisor sums."""
    return QSeries(_echi_coeffs(chi, N), chi.conductor**2)


def _check_shift_args(p: int, chi: QuadraticCharacter) -> None:
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    if chi.conductor % p == 0:
        raise ValueError(f"p={p} divides the conductor {chi.conductor}")


def apply_plus(g: QSeries, p: int, chi: QuadraticCharacter) -> QSeries:
    """Coefficient action of the plus shift operator: b_n = a_n - p*chi(p)*a_{n/p}."""
    _check_shift_args(p, chi)
    w = p * chi(p)
    a = g.coefficients()
    return QSeries(
        [a[n] - w * a[n // p] if n % p == 0 else a[n] for n in range(len(a))],
        g.ambient_level,
    )


def apply_minus(g: QSeries, p: int, chi: QuadraticCharacter) -> QSeries:
    """Coefficient action of the minus shift operator: b_n = a_n - chi(p)*a_{n/p}."""
    _check_shift_args(p, chi)
    w = chi(p)
    a = g.coefficients()
    return QSeries(
        [a[n] - w * a[n // p] if n % p == 0 else a[n] for n in range(len(a))],
        g.ambient_level,
    )


def qexp_operator(D: int, C: int, triple: EisTriple, N: int) -> QSeries:
    """Operator route: the plus operators for the primes of M/f, then the
    minus operators for the primes of L/f, applied to the base series.
    The composition order is immaterial; primes are taken increasing."""
    chi = triple.chi
    validate_triple(D, C, triple.M, triple.L, chi.conductor)
    g = qexp_echi(chi, N)
    for p in prime_divisors(triple.M // chi.conductor):
        g = apply_plus(g, p, chi)
    for p in prime_divisors(triple.L // chi.conductor):
        g = apply_minus(g, p, chi)
    return QSeries(g.coefficients(), D * C)


def qexp_closed(D: int, C: int, triple: EisTriple, N: int) -> QSeries:
    """Closed route: a_n = sigma_ML(n) * chi(n) for n >= 1.  The constant
    term is nonzero only for the trivial character with L = 1, where the
    operator multipliers (1 - p) applied to -1/24 force
    (-1/24) * (-1)^nu(D) * phi(D)."""
    M, L, chi = triple.M, triple.L, triple.chi
    f = chi.conductor
    validate_triple(D, C, M, L, f)
    if chi.is_trivial and L == 1:
        a0 = Fraction(-1, 24) * (-1) ** nu(D) * euler_phi(D)
    else:
        a0 = Fraction(0)
    coeffs = [a0] + [sigma_ML(D, M, L, f, n) * chi(n) for n in range(1, N + 1)]
    return QSeries(coeffs, D * C)


def hecke(g: QSeries, ell: int) -> QSeries:
    """Weight-2 Hecke operator at the prime ell on the ambient level:
    b_n = a_{ell*n} + ell*a_{n/ell} away from the level, b_n = a_{ell*n} on it.
    The result is valid to precision floor(N/ell)."""
    if not is_prime(ell):
        raise ValueError(f"ell={ell} is not prime")
    a = g.coefficients()
    N2 = g.precision // ell
    if g.ambient_level % ell == 0:
        out = [a[ell * n] for n in range(N2 + 1)]
    else:
        out = [
            a[ell * n] + (ell * a[n // ell] if n % ell == 0 else 0)
            for n in range(N2 + 1)
        ]
    return QSeries(out, g.ambient_level)


def predicted_eigenvalue(triple: EisTriple, ell: int) -> int:
    """Hecke eigenvalue of the series at the prime ell:
    chi(ell)*(1 + ell) away from D, chi(ell) on M/(M,L), ell*chi(ell) on
    L/(M,L), and 0 on gcd(M, L)."""
    if not is_prime(ell):
        raise ValueError(f"ell={ell} is not prime")
    M, L, chi = triple.M, triple.L, triple.chi
    D = triple.D
    G = gcd(M, L)
    if D % ell != 0:
        return chi(ell) * (1 + ell)
    if (M // G) % ell == 0:
        return chi(ell)
    if (L // G) % ell == 0:
        return ell * chi(ell)
    return 0
