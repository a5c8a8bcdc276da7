import itertools
import random

import pytest

import oracles
from wittpoisson.monoideal import (MonomialIdeal, colon, decomposition_check, hat_plus,
                                   intersect, intersect_all, minimal_primes, radical, saturate)


def ideal(m, *gens):
    return MonomialIdeal.from_exponents(m, gens)


def random_ideal(rng, radical_only=False):
    m = rng.randint(1, 5)
    gens = []
    for _ in range(rng.randint(1, 4)):
        if radical_only:
            support = rng.sample(range(m), rng.randint(1, min(m, 4)))
            gens.append(tuple(int(k in support) for k in range(m)))
        else:
            e = [0] * m
            for _ in range(rng.randint(1, 4)):
                e[rng.randrange(m)] += 1
            gens.append(tuple(e))
    return MonomialIdeal.from_exponents(m, gens)


def random_b(rng, m):
    return tuple(rng.randint(0, 2) for _ in range(m))


def as_set(I, D):
    return oracles.ideal_set(I.gens, I.ambient, D)


def test_colon_examples():
    assert colon(ideal(2, (2, 0), (1, 1)), (1, 0)) == ideal(2, (1, 0), (0, 1))
    I = ideal(3, (1, 1, 0))
    assert colon(I, (0, 0, 0)) == I
    assert colon(I, (0, 0, 1)) == I


def test_saturate_examples():
    assert saturate(ideal(2, (2, 1)), (0, 1)) == ideal(2, (2, 0))
    I = ideal(2, (1, 1))
    assert saturate(I, (1, 0)) == colon(I, (1, 0)) == ideal(2, (0, 1))
    assert saturate(I, (2, 3)).is_unit()


def test_radical_examples():
    assert radical(ideal(2, (2, 3))) == ideal(2, (1, 1))
    assert radical(ideal(2, (2, 0), (0, 2))) == ideal(2, (1, 0), (0, 1))
    I = ideal(3, (3, 0, 1), (0, 2, 2))
    assert radical(radical(I)) == radical(I)


def test_intersect_examples():
    assert intersect(ideal(2, (1, 0)), ideal(2, (0, 1))) == ideal(2, (1, 1))
    I = ideal(3, (1, 2, 0), (0, 0, 3))
    assert intersect(I, I) == I
    assert intersect(ideal(3, (1, 0, 0), (0, 1, 0)), ideal(3, (0, 1, 0), (0, 0, 1))) == \
        ideal(3, (0, 1, 0), (1, 0, 1))
    with pytest.raises(ValueError):
        intersect(ideal(2, (1, 0)), ideal(3, (1, 0, 0)))


def test_hat_plus_examples():
    I = ideal(2, (1, 1))
    assert hat_plus(I, (1, 0)) == ideal(2, (1, 0))
    J = ideal(3, (1, 1, 0), (0, 1, 1))
    assert hat_plus(J, (1, 1, 0)) == J
    K = ideal(2, (2, 1))
    rep = decomposition_check(K, (1, 0))
    assert rep["holds"] and not rep["radical_input"]


def test_minimal_primes_examples():
    assert minimal_primes(ideal(2, (1, 1))) == [ideal(2, (1, 0)), ideal(2, (0, 1))]
    assert minimal_primes(ideal(2, (1, 0), (0, 2))) == [ideal(2, (1, 0), (0, 1))]
    assert minimal_primes(MonomialIdeal.unit(3)) == []
    assert minimal_primes(MonomialIdeal.zero(2)) == [MonomialIdeal.zero(2)]


def test_decomposition_examples():
    I = ideal(3, (1, 1, 0), (0, 1, 1))
    assert decomposition_check(I, (0, 1, 0))["holds"]
    assert decomposition_check(I, (0, 0, 0))["holds"]


def brute_primes(I):
    m = I.ambient
    covers = [set(S) for r in range(m + 1) for S in itertools.combinations(range(m), r)
              if all(any(g[v] for v in S) for g in I.gens)]
    return sorted(tuple(sorted(S)) for S in covers if not any(T < S for T in covers))


@pytest.mark.parametrize("seed", range(40))
def test_operations_match_membership_oracle(seed):
    rng = random.Random(seed)
    I = random_ideal(rng)
    b = random_b(rng, I.ambient)
    D = I.max_degree() + 4
    m = I.ambient
    assert as_set(colon(I, b), D) == oracles.colon_set(I.gens, b, m, D)
    assert as_set(saturate(I, b), D) == oracles.saturate_set(I.gens, b, m, D, D)
    assert as_set(radical(I), D) == oracles.radical_set(I.gens, m, D, 4)
    sat = oracles.saturate_set(I.gens, b, m, D, D)
    hp = set(oracles.monomials(m, D))
    # (I : a^inf) only depends on the support of a
    for support in {tuple(int(e > 0) for e in a) for a in sat}:
        hp &= oracles.saturate_set(I.gens, support, m, D, D)
    assert as_set(hat_plus(I, b), D) == hp
    got = sorted(tuple(sorted(v for g in P.gens for v, e in enumerate(g) if e))
                 for P in minimal_primes(I))
    assert got == brute_primes(I)


@pytest.mark.parametrize("seed", range(30))
def test_structural_invariants(seed):
    rng = random.Random(1000 + seed)
    I = random_ideal(rng, radical_only=seed % 2 == 0)
    b = random_b(rng, I.ambient)
    c, s = colon(I, b), saturate(I, b)
    assert c.contains_ideal(I) and s.contains_ideal(c)
    assert colon(s, b) == s
    assert intersect_all(minimal_primes(I), I.ambient) == radical(I)
    if I.is_radical():
        h = hat_plus(I, b)
        assert c.is_radical() and h.is_radical()
        assert h.contains_monomial(b)
        assert saturate(I, b) == colon(I, b)
