"""Cyclotomic-coefficient q-expansions of the classical phi-functions.

The function attached to a pair (a/f, b/f^2) of rational points of Q/Z has
a q^(1/f)-expansion whose coefficients are integer combinations of f^2-th
roots of unity times the global scale 1/f.  Roots of unity live in
Z[x]/(x^m - 1); equality of elements is decided after reduction modulo the
m-th cyclotomic polynomial.  On top of the raw expansions the module
verifies two identities coefficientwise in the cyclotomic ring: the
character-weighted double sum reproduces the Gauss sum times the rational
eigen-series of the character, and the plus shift operator applied to the
level-one series equals half the sum of the phi-functions with first
component zero.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .arith import bernoulli2, divisors, is_prime
from .characters import QuadraticCharacter
from .eisenstein import apply_plus, qexp_echi


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients of the m-th cyclotomic polynomial, constant term first.

    Computed by exact division of x^m - 1 by the polynomials of the proper
    divisors of m.
    """
    if m < 1:
        raise ValueError(f"index must be positive, got {m}")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in divisors(m):
        if d < m:
            poly = _poly_exact_div(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _poly_exact_div(num: list[int], den: list[int]) -> list[int]:
    """Quotient of integer polynomials; the division must be exact and the
    divisor monic (cyclotomic polynomials are)."""
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        q = num[i]
        out[i - dd] = q
        if q:
            for j, c in enumerate(den):
                num[i - dd + j] -= q * c
    if any(num):
        raise ArithmeticError("polynomial division was not exact")
    return out


class CycloElement:
    """Element of Z[x]/(x^m - 1); equality holds modulo the m-th cyclotomic
    polynomial, so x stands for a primitive m-th root of unity."""

    __slots__ = ("modulus", "coeffs")

    def __init__(self, modulus: int, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != modulus:
            raise ValueError(f"need exactly {modulus} coefficients, got {len(coeffs)}")
        self.modulus = modulus
        self.coeffs = coeffs

    @classmethod
    def zero(cls, m: int) -> "CycloElement":
        return cls(m, (0,) * m)

    @classmethod
    def integer(cls, m: int, c: int) -> "CycloElement":
        return cls(m, (c,) + (0,) * (m - 1))

    @classmethod
    def root(cls, m: int, k: int, weight: int = 1) -> "CycloElement":
        v = [0] * m
        v[k % m] = weight
        return cls(m, v)

    def _binop_check(self, other: "CycloElement") -> None:
        if self.modulus != other.modulus:
            raise ValueError("elements live in different cyclotomic rings")

    def __add__(self, other: "CycloElement") -> "CycloElement":
        self._binop_check(other)
        return CycloElement(self.modulus, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "CycloElement") -> "CycloElement":
        self._binop_check(other)
        return CycloElement(self.modulus, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CycloElement":
        return CycloElement(self.modulus, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return CycloElement(self.modulus, tuple(a * other for a in self.coeffs))
        if isinstance(other, CycloElement):
            self._binop_check(other)
            m = self.modulus
            out = [0] * m
            for i, a in enumerate(self.coeffs):
                if a:
                    for j, b in enumerate(other.coeffs):
                        if b:
                            out[(i + j) % m] += a * b
            return CycloElement(m, out)
        return NotImplemented

    __rmul__ = __mul__

    def reduced(self) -> tuple[int, ...]:
        """Remainder modulo the m-th cyclotomic polynomial (degree < phi(m))."""
        phi = cyclotomic_polynomial(self.modulus)
        deg = len(phi) - 1
        rem = list(self.coeffs)
        for i in range(len(rem) - 1, deg - 1, -1):
            q = rem[i]
            if q:
                for j in range(deg + 1):
                    rem[i - deg + j] -= q * phi[j]
        return tuple(rem[:deg])

    def is_zero(self) -> bool:
        return not any(self.reduced())

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = CycloElement.integer(self.modulus, other)
        if not isinstance(other, CycloElement):
            return NotImplemented
        if self.modulus != other.modulus:
            return False
        return (self - other).is_zero()

    def __hash__(self):
        return hash((self.modulus, self.reduced()))

    def __repr__(self) -> str:
        terms = [f"{c}*z^{i}" for i, c in enumerate(self.coeffs) if c]
        return f"CycloElement({self.modulus}, {' + '.join(terms) or '0'})"


@dataclass(frozen=True, eq=False)
class PhiSeries:
    """Holomorphic part of a phi-function (or finite weighted sum of them)
    in powers of q^(1/f).

    The rational constant term is exact; every higher coefficient is
    scale * coeffs[j] with coeffs[j] in Z[x]/(x^(f^2) - 1), for 1 <= j <=
    precision.  Missing keys are zero.
    """

    f: int
    precision: int
    constant: Fraction
    scale: Fraction
    coeffs: dict = field(default_factory=dict)

    def cyclo_coefficient(self, j: int) -> CycloElement:
        if not 1 <= j <= self.precision:
            raise IndexError(f"coefficient {j} beyond precision {self.precision}")
        return self.coeffs.get(j, CycloElement.zero(self.f * self.f))


def phi_qexp(f: int, a: int, b: int, prec: int) -> PhiSeries:
    """Expansion of the phi-function at (a/f, b/f^2) in powers of q^(1/f).

    The constant term is B2(a/f)/2.  The coefficient of q^(j/f) is
      -(1/f) * [ sum over m | j with j/m = a mod f of (j/m) x^(m b)
               + sum over m | j with j/m = -a mod f of (j/m) x^(-m b) ],
    collecting the two lattice-point families of the expansion.
    """
    if f < 1:
        raise ValueError(f"scale must be positive, got {f}")
    m2 = f * f
    a %= f
    b %= m2
    if a == 0 and b == 0:
        raise ValueError("the pair (0, 0) has a non-holomorphic term and is excluded")
    coeffs = {}
    for j in range(1, prec + 1):
        vec = [0] * m2
        hit = False
        for m in divisors(j):
            k = j // m
            if k % f == a:
                vec[(m * b) % m2] -= k
                hit = True
            if k % f == (-a) % f:
                vec[(-m * b) % m2] -= k
                hit = True
        if hit:
            coeffs[j] = CycloElement(m2, vec)
    return PhiSeries(f, prec, bernoulli2(Fraction(a, f)) / 2, Fraction(1, f), coeffs)


@lru_cache(maxsize=None)
def gauss_cyclo(chi: QuadraticCharacter) -> CycloElement:
    """Gauss sum of the character inside Z[x]/(x^(f^2) - 1):
    sum over units a mod f of chi(a) x^(a*f)."""
    f = chi.conductor
    m2 = f * f
    vec = [0] * m2
    for a in range(f):
        c = chi(a)
        if c:
            vec[(a * f) % m2] += c
    return CycloElement(m2, vec)


def weighted_echi_lhs(chi: QuadraticCharacter, prec: int) -> PhiSeries:
    """The double character sum -(1/2) sum_{a,b} chi(a) chi(b) phi_(a/f, b/f^2),
    i.e. the eigen-series of the character still carrying its Gauss-sum
    factor.  Expanded to prec * f coefficients of q^(1/f); every coefficient
    at a non-integral power must reduce to zero, which the definitional
    verification checks.
    """
    f = chi.conductor
    if f <= 1:
        raise ValueError("the trivial character has no character-weighted sum")
    m2 = f * f
    J = prec * f

    # gauss_like[k] = sum over units b mod f^2 of chi(b) x^(k*b), k mod f^2
    units = [(b, chi(b)) for b in range(m2) if chi(b) != 0]

    @lru_cache(maxsize=None)
    def gauss_like(k: int) -> CycloElement:
        vec = [0] * m2
        for b, c in units:
            vec[(k * b) % m2] += c
        return CycloElement(m2, vec)

    coeffs = {}
    for j in range(1, J + 1):
        total = CycloElement.zero(m2)
        hit = False
        for m in divisors(j):
            k = j // m
            ck, cmk = chi(k), chi(-k)
            if ck:
                total = total + k * ck * gauss_like(m % m2)
                hit = True
            if cmk:
                total = total + k * cmk * gauss_like((-m) % m2)
                hit = True
        if hit:
            coeffs[j] = total
    # Constant term: -(1/4) (sum_a chi(a) B2(a/f)) (sum_b chi(b)); both
    # factors vanish for a primitive character, computed exactly anyway.
    s_a = sum(chi(a) * bernoulli2(Fraction(a, f)) for a in range(f))
    s_b = sum(c for _, c in units)
    return PhiSeries(f, J, Fraction(-1, 4) * s_a * s_b, Fraction(1, 2 * f), coeffs)


def verify_echi_definition(chi: QuadraticCharacter, prec: int) -> bool:
    """Check, coefficientwise in the cyclotomic ring, that the weighted
    double sum equals the Gauss sum times the rational eigen-series of the
    character, and that all fractional-power coefficients vanish."""
    f = chi.conductor
    lhs = weighted_echi_lhs(chi, prec)
    g = gauss_cyclo(chi)
    series = qexp_echi(chi, prec)
    if lhs.constant != 0:
        return False
    # lhs.scale is 1/(2f): compare raw vectors against 2f * expected.
    clear = 2 * f
    for j in range(1, prec * f + 1):
        vec = lhs.cyclo_coefficient(j)
        if j % f:
            if not vec.is_zero():
                return False
        else:
            expected = (clear * series.coeff(j // f)) * g
            if not (vec - expected).is_zero():
                return False
    return True


def verify_p_plus_e1(p: int, prec: int) -> bool:
    """Check that the plus shift operator at p applied to the level-one
    series equals half the sum of the phi-functions at (0, b/p) over units
    b mod p, coefficient by coefficient up to q^prec.

    The left side is rational (built from the divisor-sum expansion); the
    right side is assembled from the raw phi-expansions and happens to be
    rational, which the cyclotomic reduction certifies.
    """
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    one = QuadraticCharacter(1)
    lhs = apply_plus(qexp_echi(one, prec), p, one)

    m2 = p * p
    J = prec * p
    total_constant = Fraction(0)
    vecs = {}
    for b in range(1, p):
        series = phi_qexp(p, 0, b * p, J)
        total_constant += series.constant
        for j, vec in series.coeffs.items():
            vecs[j] = vecs[j] + vec if j in vecs else vec
    # overall factor 1/2, and each phi carries scale 1/p: compare the raw
    # integer vectors against 2p times the rational target.
    if total_constant / 2 != lhs.coeff(0):
        return False
    for j in range(1, J + 1):
        vec = vecs.get(j, CycloElement.zero(m2))
        if j % p:
            if not vec.is_zero():
                return False
        else:
            target = 2 * p * lhs.coeff(j // p)
            if target.denominator != 1:
                return False
            if not (vec - CycloElement.integer(m2, target.numerator)).is_zero():
                return False
    return True
