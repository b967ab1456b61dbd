from fractions import Fraction
from math import gcd

import pytest

from quadeis.cusp_constants import (
    constant_vector,
    delta_content,
    delta_vector,
    lattice_R,
    rho_closed,
    rho_recursive,
)
from quadeis.cusps import (
    CuspRep,
    canonical_x,
    enumerate_cusps,
    levels_up_to,
)
from quadeis.eisenstein import enumerate_quadratic_triples, validate_triple

T_ECHI3 = validate_triple(3, 3, 3, 3, 3)
T_11 = validate_triple(11, 1, 11, 1, 1)
T_31 = validate_triple(3, 1, 3, 1, 1)
T_151 = validate_triple(15, 1, 15, 1, 1)


def test_rho_closed_base_series():
    assert rho_closed(3, 3, T_ECHI3, CuspRep(1, 1, 3, 1)) == 1
    assert rho_closed(3, 3, T_ECHI3, CuspRep(1, 1, 3, 2)) == -1
    assert rho_closed(3, 3, T_ECHI3, CuspRep(1, 1, 1, 1)) == 0
    assert rho_closed(3, 3, T_ECHI3, CuspRep(1, 3, 1, 1)) == 0


def test_rho_closed_level_11():
    assert rho_closed(11, 1, T_11, CuspRep(1, 1, 1, 1)) == -10
    assert rho_closed(11, 1, T_11, CuspRep(11, 1, 1, 1)) == Fraction(10, 11)


def test_rho_closed_rejects_mismatch():
    with pytest.raises(ValueError):
        rho_closed(11, 1, T_11, CuspRep(3, 1, 1, 1))
    with pytest.raises(ValueError):
        rho_closed(3, 3, T_11, CuspRep(1, 1, 1, 1))


def test_rho_recursive_examples():
    for rep in enumerate_cusps(3, 3):
        assert rho_recursive(3, 3, T_ECHI3, rep) == rho_closed(3, 3, T_ECHI3, rep)
    assert rho_recursive(3, 1, T_31, CuspRep(1, 1, 1, 1)) == -2
    assert rho_recursive(15, 1, T_151, CuspRep(15, 1, 1, 1)) == Fraction(8, 15)


def test_two_paths_agree_small_grid():
    for D, C in levels_up_to(100):
        for triple in enumerate_quadratic_triples(D, C):
            for rep in enumerate_cusps(D, C):
                assert rho_closed(D, C, triple, rep) == rho_recursive(
                    D, C, triple, rep
                ), (D, C, triple, rep)


def test_delta_vector_examples():
    entries = {rep: v for rep, v in delta_vector(11, 1, T_11)}
    assert entries == {CuspRep(1, 1, 1, 1): -10, CuspRep(11, 1, 1, 1): 10}
    entries = {rep: v for rep, v in delta_vector(3, 3, T_ECHI3)}
    assert entries == {
        CuspRep(1, 1, 3, 1): 1,
        CuspRep(1, 1, 3, 2): -1,
        CuspRep(1, 1, 1, 1): 0,
        CuspRep(1, 3, 1, 1): 0,
    }


def test_residue_sums_vanish():
    for D, C in levels_up_to(400):
        for triple in enumerate_quadratic_triples(D, C):
            assert sum(v for _, v in delta_vector(D, C, triple)) == 0, (D, C, triple)


def test_twist_covariance():
    for D, C in levels_up_to(400):
        reps = enumerate_cusps(D, C)
        alphas = [a for a in range(1, 3 * D + 1) if gcd(a, D) == 1][:4]
        for triple in enumerate_quadratic_triples(D, C):
            chi = triple.chi
            rhos = {rep: rho_closed(D, C, triple, rep) for rep in reps}
            for rep in reps:
                for alpha in alphas:
                    twisted = CuspRep(
                        rep.r, rep.s, rep.t, canonical_x(alpha * rep.x, rep.t, D)
                    )
                    assert rhos[twisted] == chi(alpha) * rhos[rep], (
                        D,
                        C,
                        triple,
                        rep,
                        alpha,
                    )


def test_support_matches_conditions():
    for D, C in levels_up_to(400):
        for triple in enumerate_quadratic_triples(D, C):
            M, L, f = triple.M, triple.L, triple.f
            G = gcd(M, L)
            for rep, rho in constant_vector(D, C, triple):
                expected = (
                    gcd(rep.s, f) == 1
                    and (rep.s * rep.t) % G == 0
                    and (rep.r * rep.s) % (D // M) == 0
                )
                assert (rho != 0) == expected, (D, C, triple, rep)


def test_lattice_examples():
    assert lattice_R(3, 3, T_ECHI3, "gamma0") == 1
    assert lattice_R(3, 3, T_ECHI3, "gamma1") == 3
    assert lattice_R(11, 1, T_11, "gamma0") == 10
    assert lattice_R(15, 1, T_151, "gamma0") == 8
    assert delta_content(3, 3, T_ECHI3, "gamma0") == 1
    assert delta_content(3, 3, T_ECHI3, "gamma1") == 3
    with pytest.raises(ValueError):
        lattice_R(3, 3, T_ECHI3, "gamma2")


def test_lattice_content_matches_formula():
    for D, C in levels_up_to(225):
        for triple in enumerate_quadratic_triples(D, C):
            for group in ("gamma0", "gamma1"):
                assert delta_content(D, C, triple, group) == lattice_R(
                    D, C, triple, group
                ), (D, C, triple, group)
