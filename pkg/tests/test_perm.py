import itertools
import math

import pytest

import oracles
from hamcomp.graphs import Permutahedron, PermAutomorphism, is_automorphism, orbits
from hamcomp.landau import landau, landau0, landau2
from hamcomp.perm import (
    Composition,
    best_composition,
    best_perm_cycle,
    fa_automorphism,
    ga_ham,
    ga_neighbors,
    id_mix_path,
    lace_path,
    mix,
    multiset_perms,
    parity,
    pin_cycle,
    plus_one_track,
    sjt,
)
from hamcomp.verify import (
    balance_stats,
    check_symmetric,
    cycle_compression,
    track_count,
    validate_cycle,
)


def _adjacent(x, y):
    d = [i for i in range(len(x)) if x[i] != y[i]]
    return len(d) == 2 and d[1] == d[0] + 1 and x[d[0]] == y[d[1]] and x[d[1]] == y[d[0]]


def _is_ham_path(P, X):
    return sorted(P) == sorted(itertools.permutations(X)) and all(_adjacent(a, b) for a, b in zip(P, P[1:]))


def test_composition_basics():
    a = Composition((2, 3))
    assert a.n == 5 and a.m == 2 and a.lcm == 6
    assert a.blocks() == [(1, 2), (3, 4, 5)]
    assert a.identity_word() == (1, 1, 2, 2, 2)
    assert a.split((2, 1, 5, 3, 4)) == ((2, 1), (5, 3, 4))
    with pytest.raises(ValueError):
        Composition((2, 0))


def test_parity_against_cycle_count():
    for p in itertools.permutations(range(1, 6)):
        seen, cycles = set(), 0
        for i in range(5):
            if i not in seen:
                cycles += 1
                j = i
                while j not in seen:
                    seen.add(j)
                    j = p[j] - 1
        assert parity(p) == (5 - cycles) % 2


def test_sjt_small_listing():
    assert [tuple(w) for w in sjt(3).words.tolist()] == [
        (1, 2, 3), (1, 3, 2), (3, 1, 2), (3, 2, 1), (2, 3, 1), (2, 1, 3)]
    with pytest.raises(ValueError):
        sjt(2)


@pytest.mark.parametrize("n,k", [(3, 6), (4, 6), (5, 3), (6, 3)])
def test_sjt_compression(n, k):
    c = sjt(n)
    assert validate_cycle(c).ok
    assert cycle_compression(c) == k


def test_sjt4_symmetry_map():
    c = sjt(4)
    f = PermAutomorphism.from_alpha_pi("rev", (2, 3, 1, 4))
    assert is_automorphism(f, c.graph)
    seq = [tuple(w) for w in c.words.tolist()]
    assert oracles.compression(seq, oracles.perm_nbrs) == 6


def test_mix():
    assert mix((1, 2, 2, 1, 1), ((2, 1, 3), (5, 4))) == (2, 5, 4, 1, 3)
    assert mix((1, 1, 2, 2), ((1, 2), (3, 4))) == (1, 2, 3, 4)
    with pytest.raises(ValueError):
        mix((1, 1, 2), ((1,), (2, 3)))
    with pytest.raises(ValueError):
        mix((1, 2), ((1,), (1,)))


@pytest.mark.parametrize("X", [(1, 2), (1, 2, 3, 4), (3, 4, 5, 6, 7)])
def test_lace_path_all_opposite_parity_pairs_from_identity(X):
    x = tuple(X)
    for y in itertools.permutations(X):
        if parity(y) != parity(x):
            P = lace_path(X, x, y)
            assert P[0] == x and P[-1] == y
            assert _is_ham_path(P, X)


def test_lace_path_random_pairs_m6():
    import random

    rng = random.Random(5)
    X = tuple(range(1, 7))
    perms = list(itertools.permutations(X))
    for _ in range(15):
        x, y = rng.sample(perms, 2)
        if parity(x) == parity(y):
            continue
        P = lace_path(X, x, y)
        assert P[0] == x and P[-1] == y and _is_ham_path(P, X)


def test_lace_path_preconditions():
    with pytest.raises(ValueError):
        lace_path((1, 2, 3, 4), (1, 2, 3, 4), (2, 1, 4, 3))
    with pytest.raises(ValueError):
        lace_path((1, 2, 3), (1, 2, 3), (3, 2, 1))
    P = lace_path((1, 2, 3), (1, 2, 3), (2, 1, 3))
    assert _is_ham_path(P, (1, 2, 3))


def test_multiset_perms_count():
    for a in [(2, 2), (3, 1, 2), (1, 1, 1)]:
        words = multiset_perms(a)
        assert len(words) == math.factorial(sum(a)) // math.prod(math.factorial(x) for x in a)
        assert words == sorted(set(words))


@pytest.mark.parametrize("a", [(1, 1), (3, 1), (3, 5), (1, 1, 1), (2, 2, 3, 1), (3, 1, 1), (2, 1, 1, 1)])
def test_ga_ham(a):
    H = ga_ham(a)
    words = multiset_perms(a)
    assert sorted(H) == words
    for u, v in zip(H, H[1:]):
        assert v in ga_neighbors(u)
    if len(a) == 2:
        assert H[0] == (1,) * a[0] + (2,) * a[1]
        assert H[-1] == (2,) * a[1] + (1,) * a[0]
    else:
        assert H[0] in ga_neighbors(H[-1])


def test_ga_ham_exception_rejected():
    with pytest.raises(ValueError):
        ga_ham((2, 1, 1))
    with pytest.raises(ValueError):
        ga_ham((2, 4))


def test_fa_orbits_23():
    a = (2, 3)
    f = fa_automorphism(a)
    g = Permutahedron(5)
    assert is_automorphism(f, g)
    assert f.order() == 6
    part = orbits(f, g)
    assert part.uniform_size == 6 and len(part) == 20
    target = {(1, 2, 3, 4, 5), (2, 1, 4, 5, 3), (1, 2, 5, 3, 4), (2, 1, 3, 4, 5), (1, 2, 4, 5, 3), (2, 1, 5, 3, 4)}
    assert target in [set(o) for o in part.orbits]


@pytest.mark.parametrize("a", [(3,), (5,), (7,), (2, 2), (3, 5), (5, 3, 1), (2, 4, 3, 1), (2, 2, 3, 1), (2, 2, 5)])
def test_id_mix_path_orbit_hits(a):
    P = id_mix_path(a)
    comp = Composition(a)
    f = fa_automorphism(a)
    n = comp.n
    assert P[0] == tuple(range(1, n + 1))
    assert _adjacent(P[-1], f.apply(P[0]))
    for x, y in zip(P, P[1:]):
        assert _adjacent(x, y)
    # one vertex per orbit among the ide(a)-mix permutations
    keys = set()
    for x in P:
        o, y = [x], f.apply(x)
        while y != x:
            o.append(y)
            y = f.apply(y)
        assert len(o) == comp.lcm
        keys.add(min(o))
        assert all(set(b) == set(x[i:i + len(b)]) for b, i in zip(comp.blocks(), itertools.accumulate((0,) + a)))
    assert len(keys) == len(P)
    block_perms = math.prod(math.factorial(x) for x in a)
    assert len(P) * comp.lcm == block_perms


def test_id_mix_rejects_bad_shape():
    with pytest.raises(ValueError):
        id_mix_path((3, 3))
    with pytest.raises(ValueError):
        id_mix_path((4,))


def test_id_mix_22_golden():
    assert id_mix_path((2, 2)) == [(1, 2, 3, 4), (2, 1, 3, 4)]


@pytest.mark.parametrize("a", [(3,), (5,), (7,), (3, 5), (5, 3), (5, 3, 1), (2, 2, 3, 1), (3, 1)])
def test_pin_cycle(a):
    c = pin_cycle(a)
    k = math.lcm(*a)
    assert validate_cycle(c).ok
    assert check_symmetric(c, fa_automorphism(a), k)
    assert cycle_compression(c) >= k


def test_pin5_brute_force():
    c = pin_cycle((5,))
    seq = [tuple(w) for w in c.words.tolist()]
    verts = oracles.vertex_list("permutahedron", n=5)
    assert oracles.is_ham_cycle(seq, verts, oracles.perm_nbrs)
    assert oracles.compression(seq, oracles.perm_nbrs) % 5 == 0


def test_best_composition_examples():
    assert best_composition(8).parts == (5, 3)
    assert best_composition(9).parts == (5, 3, 1)
    assert best_composition(7).parts == (7,)


@pytest.mark.parametrize("n", range(5, 9))
def test_best_perm_cycle(n):
    c = best_perm_cycle(n)
    lam2 = landau2(n).value or 0
    want = max(landau0(n).value, lam2)
    assert validate_cycle(c).ok
    assert c.claimed_k == want
    assert check_symmetric(c, c.automorphism, want)
    assert cycle_compression(c) == want
    # upper-bound consistency
    if n % 4 in (0, 1):
        assert want <= max(2 * landau0(n).value, lam2)
    else:
        assert want <= landau(n).value


@pytest.mark.parametrize("n", [3, 5, 7])
def test_plus_one_track(n):
    c = plus_one_track(n)
    assert validate_cycle(c).ok
    assert cycle_compression(c) >= n
    assert track_count(c).count == 1
    assert balance_stats(c).counts == [math.factorial(n - 1)] * n


def test_plus_one_track_even_rejected():
    with pytest.raises(ValueError):
        plus_one_track(4)
