import itertools
import math

import pytest

import oracles
from hamcomp.graphs import BitAutomorphism, Johnson, MiddleLevels, is_automorphism, orbits
from hamcomp.johnson import (
    coprime_cycle,
    general_cycle,
    m7_automorphism,
    middle_levels_cycle,
    necklace_canonical,
    necklace_path,
    q_of,
)
from hamcomp.verify import (
    balance_stats,
    check_symmetric,
    cycle_compression,
    lcf,
    lcf_equivalent,
    track_count,
    validate_cycle,
)


def _prime_set(x):
    out, p = set(), 2
    while p * p <= x:
        while x % p == 0:
            out.add(p)
            x //= p
        p += 1
    if x > 1:
        out.add(x)
    return out


def q_brute(n, k):
    """Largest admissible q, checked via shared prime factors."""
    best = None
    for q in range(1, n + 1):
        if q <= max(k, n - k):
            continue
        lo = k - (n - q)
        if all(not (_prime_set(q) & _prime_set(ell)) for ell in range(lo, k + 1)):
            best = q
    return best


def q_by_orbits(n, k):
    """Largest q for which the prefix rotation on J(n,k) has all orbits of size q."""
    g = Johnson(n, k)
    for q in range(n, 0, -1):
        if q <= max(k, n - k):
            break
        if orbits(BitAutomorphism.shift_left(n, q), g).uniform_size == q:
            return q
    return None


def test_necklace_canonical():
    assert necklace_canonical((1, 0, 0, 1, 0)) == (0, 0, 1, 0, 1)
    assert necklace_canonical((0, 0, 1)) == (0, 0, 1)


@pytest.mark.parametrize("n,k", [(5, 2), (7, 2), (7, 3), (8, 3), (9, 4), (11, 3)])
def test_necklace_path_hits_each_necklace_once(n, k):
    np_ = necklace_path(n, k)
    P = np_.path
    assert len(P) == math.comb(n, k) // n
    assert len({necklace_canonical(w) for w in P}) == len(P)
    assert all(sum(w) == k for w in P)
    for a, b in zip(P, P[1:]):
        assert b in oracles.johnson_nbrs(a)
    # the end is adjacent to the shifted start, closing the lifted cycle
    start = P[0]
    assert P[-1] in oracles.johnson_nbrs(start[1:] + start[:1])


@pytest.mark.parametrize("n,k", [(5, 2), (7, 2), (7, 3), (8, 3), (9, 2), (9, 4), (10, 3), (11, 5), (13, 4)])
def test_coprime_cycle(n, k):
    c = coprime_cycle(n, k)
    assert validate_cycle(c).ok
    assert cycle_compression(c) == n
    assert check_symmetric(c, BitAutomorphism.shift_left(n), n)
    assert track_count(c).count == 1
    assert balance_stats(c).counts == [math.comb(n, k) // n] * n


def test_coprime_j72_brute_compression():
    c = coprime_cycle(7, 2)
    seq = [tuple(w) for w in c.words.tolist()]
    assert oracles.is_ham_cycle(seq, oracles.vertex_list("johnson", n=7, k=2), oracles.johnson_nbrs)
    assert oracles.compression(seq, oracles.johnson_nbrs) == 7


def test_coprime_rejects_non_coprime():
    with pytest.raises(ValueError):
        coprime_cycle(6, 2)


def test_q_of_values():
    assert q_of(10, 4) == 7
    assert q_of(6, 3) == 5
    assert q_of(7, 3) == 7
    with pytest.raises(ValueError):
        q_of(5, 0)


def test_q_of_matches_brute_force():
    for n in range(2, 61):
        for k in range(1, n):
            assert q_of(n, k) == q_brute(n, k), (n, k)


@pytest.mark.parametrize("n", range(4, 12))
def test_q_of_matches_orbit_structure(n):
    for k in range(1, n):
        assert q_of(n, k) == q_by_orbits(n, k)


def test_q_exceeds_half():
    for n in range(3, 61):
        for k in range(1, n):
            if math.gcd(n, k) > 1 and n != 2 * k:
                assert q_of(n, k) > n / 2


@pytest.mark.parametrize("n,k", [(6, 2), (6, 3), (8, 2), (9, 3), (10, 4), (12, 4)])
def test_general_cycle(n, k):
    c = general_cycle(n, k)
    q = q_of(n, k)
    assert validate_cycle(c).ok
    assert cycle_compression(c) >= q
    assert check_symmetric(c, c.automorphism, q)
    assert track_count(c).count <= 1 + n - q


def test_middle_levels_m5_lcf():
    c = middle_levels_cycle(2)
    assert validate_cycle(c).ok
    assert cycle_compression(c) == 5
    assert lcf_equivalent(lcf(c).sets, [(-5,), (9,), (-9,), (5,)] * 5)


def test_middle_levels_m7_default_and_m7_map():
    c = middle_levels_cycle(3)
    assert validate_cycle(c).ok and cycle_compression(c) >= 7
    f = m7_automorphism()
    assert f.order() == 10
    assert is_automorphism(f, MiddleLevels(3))
    c = middle_levels_cycle(3, f)
    assert validate_cycle(c).ok
    assert check_symmetric(c, f, 10)
    assert cycle_compression(c) == 10


def test_middle_levels_bad_n():
    with pytest.raises(ValueError):
        middle_levels_cycle(0)
