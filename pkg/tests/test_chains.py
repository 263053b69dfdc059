import pytest

from incchains import (
    ChainHypothesisError,
    ChainSpec,
    Monomial,
    MonomialIdeal,
    WidthError,
    chain_colon,
    chain_radical,
    e_chain,
    generate,
    orbit,
    shift_sigma,
    variable,
    verify_stability,
)
from conftest import make_product_chain
from oracles import brute_orbit
from randgen import random_chain, random_monomial, rng_for


def test_orbit_examples():
    u = variable(2, 2) * variable(3, 3)
    assert orbit(u, 1, 4, 5) == {
        u,
        variable(2, 2) * variable(3, 4),
        variable(2, 3) * variable(3, 4),
    }
    cube = variable(1, 2, 3)
    assert orbit(cube, 1, 4, 5) == {cube, variable(1, 3, 3)}
    fixed = variable(1, 1) * variable(2, 1)
    assert orbit(fixed, 1, 4, 6) == {fixed}


def test_orbit_errors():
    with pytest.raises(WidthError):
        orbit(variable(1, 5), 1, 4, 6)
    with pytest.raises(ValueError):
        orbit(variable(1, 2), 1, 4, 3)


def test_orbit_matches_bruteforce_everywhere():
    rng = rng_for("orbit")
    for m in range(1, 9):
        for n in range(m, 9):
            for i in range(0, m + 1):
                for _ in range(3):
                    u = random_monomial(rng, 2, m, 3)
                    assert orbit(u, i, m, n) == brute_orbit(u, i, m, n), (
                        str(u),
                        i,
                        m,
                        n,
                    )


def test_generate_zero_below_seed(mixed_chain):
    assert generate(mixed_chain, 3).is_zero
    assert generate(mixed_chain, 1).is_zero


def test_generate_matches_frozen_increments(mixed_chain):
    I5 = generate(mixed_chain, 5)
    I6 = generate(mixed_chain, 6)
    I7 = generate(mixed_chain, 7)
    inc6 = MonomialIdeal(
        3,
        6,
        [
            variable(1, 4, 3),
            variable(1, 6, 2) * variable(2, 1),
            variable(2, 2) * variable(3, 5),
            variable(2, 3) * variable(3, 5),
            variable(2, 4) * variable(3, 5),
        ],
    )
    assert I5 + inc6 == I6
    inc7 = MonomialIdeal(
        3,
        7,
        [
            variable(1, 5, 3),
            variable(1, 7, 2) * variable(2, 1),
            variable(2, 2) * variable(3, 6),
            variable(2, 3) * variable(3, 6),
            variable(2, 4) * variable(3, 6),
            variable(2, 5) * variable(3, 6),
        ],
    )
    assert I6 + inc7 == I7


def test_chain_invariance_under_all_maps(mixed_chain):
    # every monoid image of a smaller ideal lands in the bigger ideal
    for m in range(4, 7):
        Im = generate(mixed_chain, m)
        for n in range(m, 8):
            In = generate(mixed_chain, n)
            for g in Im.gens:
                for image in brute_orbit(g, mixed_chain.index, m, n):
                    assert image in In


def test_shift_sigma_examples():
    assert shift_sigma(1, variable(2, 2) * variable(3, 3)) == variable(2, 3) * variable(3, 4)
    u = variable(1, 1) * variable(1, 2)
    assert shift_sigma(2, u) == u
    assert shift_sigma(0, variable(1, 1)) == variable(1, 2)


def test_chain_colon_identity_and_hypothesis(mixed_chain):
    assert chain_colon(mixed_chain, Monomial()) is mixed_chain
    with pytest.raises(ChainHypothesisError):
        chain_colon(mixed_chain, variable(1, 2))


def test_chain_colon_matches_direct_colon(mixed_chain):
    derived = chain_colon(mixed_chain, variable(2, 1))
    for n in range(4, 9):
        assert generate(derived, n) == generate(mixed_chain, n).colon(variable(2, 1))


def test_chain_colon_stability_bound(mixed_chain):
    # regenerating the quotient at width n must give the quotient at n+1
    v = variable(2, 1)
    derived = chain_colon(mixed_chain, v)
    for n in range(4, 9):
        assert verify_stability(derived, n)


def test_chain_radical_matches_direct_radical(mixed_chain):
    derived = chain_radical(mixed_chain)
    for n in range(5, 8):
        assert generate(derived, n) == generate(mixed_chain, n).radical()
    squarefree = make_product_chain(2)
    assert chain_radical(squarefree) is squarefree


def test_e_chain_product_example():
    spec = make_product_chain(3, index=1)
    derived = e_chain(spec, (1, 0, 0))
    r1 = spec.seed_index + 1
    expected = MonomialIdeal(
        3, r1, [variable(k, c) for k in (1, 2, 3) for c in (2, 3, 4)]
    )
    assert generate(derived, r1) == expected
    assert derived.index == spec.index + 1
    assert derived.seed_index == r1


def test_e_chain_zero_vector(mixed_chain):
    derived = e_chain(mixed_chain, (0, 0, 0))
    r1 = mixed_chain.seed_index + 1
    cols = MonomialIdeal(3, r1, [variable(k, 2) for k in (1, 2, 3)])
    assert generate(derived, r1) == generate(mixed_chain, r1) + cols


def test_e_chain_matches_direct_construction():
    for k in range(40):
        rng = rng_for("echain-direct", k)
        spec = random_chain(rng, max_rows=3, max_seed_index=4, max_gens=3, max_degree=3)
        evector = tuple(rng.randint(0, 2) for _ in range(spec.rows))
        derived = e_chain(spec, evector)
        col = spec.index + 1
        divisor = Monomial({(j + 1, col): e for j, e in enumerate(evector) if e})
        for n in range(derived.seed_index, derived.seed_index + 3):
            cols = MonomialIdeal(
                spec.rows, n, [variable(t, col) for t in range(1, spec.rows + 1)]
            )
            direct = generate(spec, n).colon(divisor) + cols
            assert generate(derived, n) == direct, (k, str(spec.seed), evector, n)


def test_e_chain_q_inequality():
    for k in range(200):
        rng = rng_for("echain-q", k)
        spec = random_chain(rng, max_rows=3, max_seed_index=4, max_gens=4, max_degree=3)
        evector = tuple(rng.randint(0, 2) for _ in range(spec.rows))
        base = generate(spec, spec.seed_index)
        derived = e_chain(spec, evector)
        seed1 = generate(derived, derived.seed_index)
        assert seed1.q_invariant() <= base.q_invariant()


def test_e_chain_q_equality_case():
    # on q-equality, the derived ideal is the shifted ideal plus the new column
    found = 0
    for k in range(300):
        rng = rng_for("echain-qeq", k)
        spec = random_chain(rng, max_rows=2, max_seed_index=4, max_gens=3, max_degree=3)
        evector = tuple(rng.randint(0, 1) for _ in range(spec.rows))
        base = generate(spec, spec.seed_index)
        derived = e_chain(spec, evector)
        if generate(derived, derived.seed_index).q_invariant() != base.q_invariant():
            continue
        found += 1
        col = spec.index + 1
        for n in range(spec.seed_index, spec.seed_index + 3):
            In = generate(spec, n)
            shifted = [shift_sigma(spec.index, g) for g in In.gens]
            cols = [variable(t, col) for t in range(1, spec.rows + 1)]
            direct = MonomialIdeal(spec.rows, n + 1, shifted + cols)
            assert generate(derived, n + 1) == direct
        if found >= 60:
            break
    assert found >= 25


def test_verify_stability(mixed_chain):
    for n in range(4, 10):
        assert verify_stability(mixed_chain, n)
    derived = e_chain(mixed_chain, (0, 1, 0))
    for n in range(derived.seed_index, derived.seed_index + 4):
        assert verify_stability(derived, n)


def test_unit_and_zero_seeds():
    unit = ChainSpec(rows=2, index=1, seed_index=2, seed=MonomialIdeal(2, 2, [Monomial()]))
    assert generate(unit, 5).is_unit
    zero = ChainSpec(rows=2, index=0, seed_index=1, seed=MonomialIdeal(2, 1, []))
    assert generate(zero, 4).is_zero
