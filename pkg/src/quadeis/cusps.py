"""Cusps of the modular curve of level D*C (D square-free, C | D).

Every cusp has a unique representative r*s^2*t*x / (D*C) with r | D/C,
s | C, t | C, gcd(s, t) = 1 and x running over the classes of units mod t,
realized as the smallest positive integer in its class that is prime to D.
This module enumerates those representatives, converts them to points of
the rational projective line, decides equivalence under the level-N Hecke
congruence subgroup, and moves representatives down to lower levels.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .arith import divisors, euler_phi, is_prime, is_squarefree, radical


@dataclass(frozen=True, order=True)
class CuspRep:
    """Canonical cusp representative (r, s, t, x) at level D*C."""

    r: int
    s: int
    t: int
    x: int


@dataclass(frozen=True, order=True)
class CuspPoint:
    """Point (a : c) of the rational projective line; c == 0 encodes infinity."""

    a: int
    c: int

    @classmethod
    def of(cls, a: int, c: int) -> "CuspPoint":
        if a == 0 and c == 0:
            raise ValueError("(0 : 0) is not a projective point")
        g = gcd(a, c)
        a, c = a // g, c // g
        if c < 0 or (c == 0 and a < 0):
            a, c = -a, -c
        return cls(a, c)


def validate_level(D: int, C: int) -> None:
    if D < 1 or not is_squarefree(D):
        raise ValueError(f"D must be a positive square-free integer, got {D}")
    if C < 1 or D % C != 0:
        raise ValueError(f"C must be a positive divisor of D, got C={C}, D={D}")


def level_decompose(N: int) -> tuple[int, int]:
    """Write N = D*C with D square-free and C | D; requires cube-free N."""
    D = radical(N)
    C, rem = divmod(N, D)
    if rem != 0 or D % C != 0:
        raise ValueError(f"{N} is not of the form D*C with square-free D and C | D")
    return D, C


def cusp_count(N: int) -> int:
    """Number of cusps at level N: sum over d | N of phi(gcd(d, N/d))."""
    if N < 1:
        raise ValueError(f"level must be positive, got {N}")
    return sum(euler_phi(gcd(d, N // d)) for d in divisors(N))


def canonical_x(u: int, t: int, D: int) -> int:
    """Smallest positive integer congruent to u mod t and prime to D."""
    if t == 1:
        return 1
    u %= t
    if gcd(u, t) != 1:
        raise ValueError(f"{u} is not a unit modulo {t}")
    x = u
    while gcd(x, D) != 1:
        x += t
    return x


@lru_cache(maxsize=None)
def enumerate_cusps(D: int, C: int) -> tuple[CuspRep, ...]:
    """All canonical cusp representatives at level D*C, sorted."""
    validate_level(D, C)
    reps = []
    for r in divisors(D // C):
        for s in divisors(C):
            for t in divisors(C):
                if gcd(s, t) != 1:
                    continue
                if t == 1:
                    reps.append(CuspRep(r, s, 1, 1))
                else:
                    for u in range(1, t + 1):
                        if gcd(u, t) == 1:
                            reps.append(CuspRep(r, s, t, canonical_x(u, t, D)))
    return tuple(sorted(reps))


def validate_rep(rep: CuspRep, D: int, C: int) -> None:
    validate_level(D, C)
    r, s, t, x = rep.r, rep.s, rep.t, rep.x
    if r < 1 or (D // C) % r != 0:
        raise ValueError(f"r={r} does not divide D/C={D // C}")
    if s < 1 or C % s != 0 or t < 1 or C % t != 0:
        raise ValueError(f"s={s}, t={t} must divide C={C}")
    if gcd(s, t) != 1:
        raise ValueError(f"s={s} and t={t} must be coprime")
    if gcd(x, D) != 1 or x != canonical_x(x, t, D):
        raise ValueError(f"x={x} is not canonical modulo t={t} for D={D}")


def width_gamma0(rep: CuspRep) -> int:
    """Ramification index of the level-N curve at the cusp: r * s**2."""
    return rep.r * rep.s * rep.s


def width_gamma1(rep: CuspRep) -> int:
    """Ramification index upstairs on the principal-level-t cover: r * s**2 * t."""
    return rep.r * rep.s * rep.s * rep.t


def to_point(rep: CuspRep, D: int, C: int) -> CuspPoint:
    """Lowest-terms point of r*s^2*t*x / (D*C); always (x : DC/(r*s^2*t))."""
    den = D * C // (rep.r * rep.s * rep.s * rep.t)
    return CuspPoint.of(rep.x, den)


def equivalent(p1: CuspPoint, p2: CuspPoint, N: int) -> bool:
    """Whether two cusps coincide at level N.

    Uses the standard criterion: with s_i an inverse of the numerator a_i
    modulo the denominator c_i, the cusps agree iff
    s1*c2 == s2*c1 modulo gcd(c1*c2, N).  The brute-force matrix search in
    the test suite is the independent oracle for this fast path.
    """
    if N < 1:
        raise ValueError(f"level must be positive, got {N}")
    s1 = 1 if p1.c == 0 else pow(p1.a, -1, p1.c)
    s2 = 1 if p2.c == 0 else pow(p2.a, -1, p2.c)
    return (s1 * p2.c - s2 * p1.c) % gcd(p1.c * p2.c, N) == 0


@lru_cache(maxsize=None)
def canonicalize(point: CuspPoint, D: int, C: int) -> CuspRep:
    """The enumerated representative equivalent to the given point."""
    N = D * C
    for rep in enumerate_cusps(D, C):
        if equivalent(point, to_point(rep, D, C), N):
            return rep
    raise ArithmeticError(f"no representative found for {point} at level {N}")


def reduce_level(rep: CuspRep, D: int, C: int, p: int, case: int) -> tuple[CuspRep, int, int]:
    """Move a representative down one prime of the level.

    The five cases and their hypotheses:
      1: p | r           -> (r/p, s, t, x)        at (D/p, C)
      2: p | s           -> (r, s/p, t, x)        at (D/p, C/p)
      3: p | t           -> (r, s, t/p, p*x)      at (D/p, C/p)
      4: p | D/(C*r)     -> (r, s, t, p*x)        at (D/p, C)
      5: p | C/(s*t)     -> (r, s, t, p^2*x)      at (D/p, C/p)
    The x entry is re-canonicalized in its new class; the tests confirm each
    output is equivalent to the input point at the lower level.
    """
    validate_rep(rep, D, C)
    if not is_prime(p) or D % p != 0:
        raise ValueError(f"p={p} must be a prime divisor of D={D}")
    r, s, t, x = rep.r, rep.s, rep.t, rep.x
    if case == 1:
        if r % p != 0:
            raise ValueError(f"case 1 needs p | r, got p={p}, r={r}")
        D2, C2 = D // p, C
        out = CuspRep(r // p, s, t, canonical_x(x, t, D2))
    elif case == 2:
        if s % p != 0:
            raise ValueError(f"case 2 needs p | s, got p={p}, s={s}")
        D2, C2 = D // p, C // p
        out = CuspRep(r, s // p, t, canonical_x(x, t, D2))
    elif case == 3:
        if t % p != 0:
            raise ValueError(f"case 3 needs p | t, got p={p}, t={t}")
        D2, C2 = D // p, C // p
        out = CuspRep(r, s, t // p, canonical_x(p * x, t // p, D2))
    elif case == 4:
        if (D // (C * r)) % p != 0:
            raise ValueError(f"case 4 needs p | D/(C*r), got p={p}")
        D2, C2 = D // p, C
        out = CuspRep(r, s, t, canonical_x(p * x, t, D2))
    elif case == 5:
        if (C // (s * t)) % p != 0:
            raise ValueError(f"case 5 needs p | C/(s*t), got p={p}")
        D2, C2 = D // p, C // p
        out = CuspRep(r, s, t, canonical_x(p * p * x, t, D2))
    else:
        raise ValueError(f"case must be 1..5, got {case}")
    validate_rep(out, D2, C2)
    return out, D2, C2


def levels_up_to(bound: int) -> list[tuple[int, int]]:
    """All (D, C) with D square-free, C | D and D*C <= bound, sorted."""
    out = []
    for D in range(1, bound + 1):
        if not is_squarefree(D):
            continue
        for C in divisors(D):
            if D * C <= bound:
                out.append((D, C))
    return sorted(out)
