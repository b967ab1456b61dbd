"""Constant terms of the Eisenstein eigen-series at every cusp.

All constant terms are rational multiples of the character's unit n_chi
(a formal Gauss-sum multiple handled in the orders module); this module
works exclusively with the rational multipliers rho.  Two independent
routes are provided: a closed product formula over the cusp data
(r, s, t, x), and a per-prime recursion that peels one shift operator at
a time, re-canonicalizing the moved cusp at each intermediate level and
bottoming out in the base series' level f^2, where the constant term is
chi(x) on the cusps with s = 1, t = f and zero elsewhere.
"""

from fractions import Fraction
from math import gcd, prod

from .arith import euler_phi, nu, prime_divisors, psi_plus, rational_gcd
from .cusps import (
    CuspPoint,
    CuspRep,
    canonicalize,
    enumerate_cusps,
    level_decompose,
    to_point,
    validate_rep,
    width_gamma0,
    width_gamma1,
)
from .eisenstein import EisTriple, validate_triple


def rho_closed(D: int, C: int, triple: EisTriple, rep: CuspRep) -> Fraction:
    """Closed-form constant term at the cusp, in units of n_chi.

    Nonzero exactly when gcd(s, f) = 1, gcd(M, L) | s*t and D/M | r*s, in
    which case it equals
      phi(D/f) * psi(L/f) * (f/L) * (-1)^nu(D/(f*r*s))
        * chi(D*C / (f*r*s^2*t*x)) / (r*s) * prod_{p | gcd(s,M,L)} (1 - 1/p).
    """
    M, L, chi = triple.M, triple.L, triple.chi
    f = chi.conductor
    validate_triple(D, C, M, L, f)
    validate_rep(rep, D, C)
    r, s, t, x = rep.r, rep.s, rep.t, rep.x
    G = gcd(M, L)
    if gcd(s, f) != 1 or (s * t) % G != 0 or (r * s) % (D // M) != 0:
        return Fraction(0)
    val = Fraction(euler_phi(D // f) * psi_plus(L // f) * f, L)
    val *= (-1) ** nu(D // (f * r * s))
    val *= chi.on_fraction(Fraction(D * C, f * r * s * s * t * x))
    val /= r * s
    for p in prime_divisors(gcd(s, G)):
        val *= 1 - Fraction(1, p)
    return val


def _point_at_level(point: CuspPoint, level: int) -> CuspPoint:
    D2, C2 = level_decompose(level)
    return to_point(canonicalize(point, D2, C2), D2, C2)


def _rho_rec(chi, plus: tuple, minus: tuple, point: CuspPoint, memo: dict) -> Fraction:
    key = (plus, minus, point)
    if key in memo:
        return memo[key]
    f = chi.conductor
    if not plus and not minus:
        rep = canonicalize(point, f, f)
        val = Fraction(chi(rep.x)) if rep.s == 1 and rep.t == f else Fraction(0)
    else:
        if plus:
            p, rest_plus, rest_minus, is_plus = plus[0], plus[1:], minus, True
        else:
            p, rest_plus, rest_minus, is_plus = minus[0], plus, minus[1:], False
        child_level = f * f * prod(rest_plus) * prod(rest_minus)
        here = _point_at_level(point, child_level)
        moved = _point_at_level(CuspPoint.of(p * point.a, point.c), child_level)
        base = _rho_rec(chi, rest_plus, rest_minus, here, memo)
        shifted = _rho_rec(chi, rest_plus, rest_minus, moved, memo)
        # The constant-term recursion for one shift operator: the moved cusp
        # carries weight p*chi(p) or chi(p) when p divides the denominator,
        # and chi(p)/p or chi(p)/p^2 when it does not.
        cp = chi(p)
        if point.c % p == 0:
            coef = Fraction(p * cp) if is_plus else Fraction(cp)
        else:
            coef = Fraction(cp, p) if is_plus else Fraction(cp, p * p)
        val = base - coef * shifted
    memo[key] = val
    return val


def rho_recursive(D: int, C: int, triple: EisTriple, rep: CuspRep) -> Fraction:
    """Recursive constant term at the cusp, in units of n_chi.

    Peels the shift operators one prime at a time, branching on whether the
    prime divides the cusp denominator, until only the base series of the
    character is left.
    """
    M, L, chi = triple.M, triple.L, triple.chi
    f = chi.conductor
    validate_triple(D, C, M, L, f)
    validate_rep(rep, D, C)
    plus = prime_divisors(M // f)
    minus = prime_divisors(L // f)
    top_level = f * f * prod(plus) * prod(minus)
    point = _point_at_level(to_point(rep, D, C), top_level)
    return _rho_rec(chi, plus, minus, point, {})


def constant_vector(D: int, C: int, triple: EisTriple) -> tuple[tuple[CuspRep, Fraction], ...]:
    """(rep, rho) for every cusp, rho in units of n_chi, via the closed route."""
    return tuple((rep, rho_closed(D, C, triple, rep)) for rep in enumerate_cusps(D, C))


def delta_vector(D: int, C: int, triple: EisTriple) -> tuple[tuple[CuspRep, Fraction], ...]:
    """Width-weighted constant terms (the residue divisor), in units of n_chi.

    The entries always sum to zero: the residues of the attached
    differential form a degree-zero divisor.
    """
    entries = tuple(
        (rep, width_gamma0(rep) * rho) for rep, rho in constant_vector(D, C, triple)
    )
    total = sum(v for _, v in entries)
    if total != 0:
        raise ArithmeticError(
            f"residue sum {total} != 0 for {triple} at level {D * C}"
        )
    return entries


def lattice_R(D: int, C: int, triple: EisTriple, group: str = "gamma0") -> Fraction:
    """Positive generator, in units of n_chi, of the lattice spanned by the
    width-weighted constant terms: phi(D/f)*psi(L/f)*gcd(D/M, C)*f/L for the
    level-N curve, and f times that on its Gamma1 cover."""
    M, L, chi = triple.M, triple.L, triple.chi
    f = chi.conductor
    validate_triple(D, C, M, L, f)
    base = Fraction(euler_phi(D // f) * psi_plus(L // f) * gcd(D // M, C) * f, L)
    if group == "gamma0":
        return base
    if group == "gamma1":
        return base * f
    raise ValueError(f"group must be 'gamma0' or 'gamma1', got {group!r}")


def delta_content(D: int, C: int, triple: EisTriple, group: str = "gamma0") -> Fraction:
    """Content (rational gcd) of the width-weighted constant terms; the
    independent cross-check for lattice_R."""
    width = width_gamma0 if group == "gamma0" else width_gamma1
    if group not in ("gamma0", "gamma1"):
        raise ValueError(f"group must be 'gamma0' or 'gamma1', got {group!r}")
    return rational_gcd(
        width(rep) * rho for rep, rho in constant_vector(D, C, triple)
    )
