import random
from fractions import Fraction
from math import gcd

import pytest

from quadeis.characters import QuadraticCharacter, bernoulli_b1
from quadeis.cusps import levels_up_to
from quadeis.eisenstein import enumerate_quadratic_triples, validate_triple
from quadeis.lfunc import (
    DirichletCoeffs,
    lambda_algebraic,
    lhs_series,
    rhs_series,
    verify_factorization,
)

T_11 = validate_triple(11, 1, 11, 1, 1)
T_ECHI3 = validate_triple(3, 3, 3, 3, 3)
ETA1 = QuadraticCharacter(1)
ETA3 = QuadraticCharacter(3)
ETA5 = QuadraticCharacter(5)
ETA7 = QuadraticCharacter(7)


def test_dirichlet_product():
    one = DirichletCoeffs((1, 0, 0, 0, 0, 0))
    ident = DirichletCoeffs(tuple(1 for _ in range(6)))
    assert one.dirichlet_product(ident) == ident
    # tau(n) = (1 * 1)_n
    tau = ident.dirichlet_product(ident)
    assert tau.values == (1, 2, 2, 3, 2, 4)


def test_lhs_examples():
    assert lhs_series(11, 1, T_11, ETA3, 10).coeff(1) == 1
    assert lhs_series(11, 1, T_11, ETA3, 10).coeff(2) == -3
    assert lhs_series(3, 3, T_ECHI3, ETA1, 10).coeff(2) == -3


def test_rhs_examples():
    assert rhs_series(11, 1, T_11, ETA1, 12).coeff(1) == 1
    # the Euler polynomial at 11 cancels the 11-part
    assert rhs_series(11, 1, T_11, ETA1, 12).coeff(11) == lhs_series(
        11, 1, T_11, ETA1, 12
    ).coeff(11)
    assert rhs_series(3, 3, T_ECHI3, ETA5, 10).coeff(4) == 7


def test_twist_conductor_must_be_coprime():
    with pytest.raises(ValueError):
        lhs_series(3, 3, T_ECHI3, ETA3, 10)


def test_factorization_examples():
    assert verify_factorization(11, 1, T_11, ETA3, 60)
    assert verify_factorization(11, 1, T_11, ETA1, 60)
    assert verify_factorization(3, 3, T_ECHI3, ETA5, 60)


def test_factorization_grid():
    for D, C in levels_up_to(225):
        for triple in enumerate_quadratic_triples(D, C):
            for f_eta in (1, 3, 5, 7):
                if gcd(f_eta, D) != 1:
                    continue
                assert verify_factorization(
                    D, C, triple, QuadraticCharacter(f_eta), 100
                ), (D, C, triple, f_eta)


def test_lhs_multiplicative():
    rng = random.Random(10)
    for D, C in [(11, 1), (15, 3), (3, 3), (21, 21)]:
        for triple in enumerate_quadratic_triples(D, C):
            for f_eta in (1, 3, 5, 7):
                if gcd(f_eta, D) != 1:
                    continue
                series = lhs_series(D, C, triple, QuadraticCharacter(f_eta), 200)
                checked = 0
                while checked < 200:
                    m = rng.randrange(1, 15)
                    n = rng.randrange(1, 200 // m + 1)
                    if gcd(m, n) != 1:
                        continue
                    assert series.coeff(m * n) == series.coeff(m) * series.coeff(n)
                    checked += 1


def test_lambda_examples():
    assert lambda_algebraic(11, 1, T_11, ETA5) == 0
    assert lambda_algebraic(11, 1, T_11, ETA3) == Fraction(1, 9)
    t = validate_triple(3, 1, 3, 1, 1)
    assert lambda_algebraic(3, 1, t, ETA7) == 1
    with pytest.raises(ValueError):
        lambda_algebraic(11, 1, T_11, ETA1)  # product character trivial


def test_lambda_vanishing_rule():
    # zero iff the product character is even, or some plus-side Euler factor
    # 1 - chieta(p) vanishes, or B1 vanishes (never for odd quadratic)
    from quadeis.arith import prime_divisors

    for D, C in levels_up_to(120):
        for triple in enumerate_quadratic_triples(D, C):
            chi, f = triple.chi, triple.f
            for f_eta in (1, 3, 5, 7):
                if gcd(f_eta, D) != 1:
                    continue
                eta = QuadraticCharacter(f_eta)
                product = chi.times(eta)
                if product.is_trivial:
                    continue
                val = lambda_algebraic(D, C, triple, eta)
                if product.parity == 1:
                    assert val == 0
                    continue
                euler_vanishes = any(
                    product(p) == 1 for p in prime_divisors(triple.M // f)
                )
                b1_vanishes = bernoulli_b1(product) == 0
                assert (val == 0) == (euler_vanishes or b1_vanishes), (
                    D,
                    C,
                    triple,
                    f_eta,
                )
