import itertools

import numpy as np
import pytest

import oracles
from hamcomp.graphs import (
    AbelianCayley,
    AbelianGroup,
    BitAutomorphism,
    ExplicitGraph,
    Hypercube,
    Johnson,
    Permutahedron,
    graph_from_params,
)
from hamcomp.verify import (
    HamCycle,
    SearchBudgetExceeded,
    WordShapeError,
    _Budget,
    balance_stats,
    check_symmetric,
    cycle_compression,
    hamilton_path_search,
    kappa_exact,
    lcf,
    lcf_equivalent,
    lifted_cycle_search,
    rotation_search,
    smallest_period,
    track_count,
    validate_cycle,
)


def _cycle(family, params, seq):
    return HamCycle.from_words(graph_from_params(family, params), seq)


def _q3_brgc():
    return [(0, 0, 0), (0, 0, 1), (0, 1, 1), (0, 1, 0), (1, 1, 0), (1, 1, 1), (1, 0, 1), (1, 0, 0)]


def test_validate_accepts_good_cycle():
    assert validate_cycle(_cycle("hypercube", {"n": 3}, _q3_brgc())).ok


def test_validate_reports_break_index():
    seq = _q3_brgc()
    seq[3], seq[4] = seq[4], seq[3]
    rep = validate_cycle(_cycle("hypercube", {"n": 3}, seq))
    assert not rep.ok and rep.index == 2


def test_validate_reports_missing_and_repeated():
    seq = _q3_brgc()
    rep = validate_cycle(_cycle("hypercube", {"n": 3}, seq[:-1]))
    assert not rep.ok and "vertices" in rep.reason
    seq[5] = seq[1]
    rep = validate_cycle(_cycle("hypercube", {"n": 3}, seq))
    assert not rep.ok and rep.index == 5


def test_validate_rejects_non_vertex():
    seq = [(1, 2, 3), (2, 1, 3), (2, 3, 1), (3, 2, 1), (3, 1, 2), (1, 3, 3)]
    rep = validate_cycle(_cycle("permutahedron", {"n": 3}, seq))
    assert not rep.ok and rep.index == 5


def test_word_of_wrong_length():
    with pytest.raises(WordShapeError) as exc:
        _cycle("hypercube", {"n": 3}, [(0, 0, 0), (0, 1)])
    assert exc.value.index == 1


@pytest.mark.parametrize("family,params,limit", [
    ("hypercube", {"n": 3}, None),
    ("permutahedron", {"n": 4}, 300),
    ("johnson", {"n": 5, "k": 2}, 300),
    ("cayley", {"orders": [2, 6], "gens": [[1, 0], [0, 1]]}, 300),
    ("permutahedron_plus", {"n": 4}, 300),
])
def test_compression_matches_brute_force(family, params, limit):
    g = graph_from_params(family, params)
    verts = oracles.vertex_list(family, **params)
    nb = oracles.nbr_fn(family, **params)
    cycles = itertools.islice(oracles.ham_cycles(verts, nb), limit)
    for seq in cycles:
        c = HamCycle.from_words(g, seq)
        want = oracles.compression(seq, nb)
        assert cycle_compression(c, "edges") == want
        if family in ("hypercube", "johnson", "permutahedron"):
            assert cycle_compression(c, "structural") == want


def test_structural_method_on_larger_cube():
    from hamcomp.cube import brgc, optimal_cube_cycle

    for c in (brgc(7), optimal_cube_cycle(7)):
        assert cycle_compression(c, "structural") == cycle_compression(c, "edges")


def test_check_symmetric():
    c = _cycle("hypercube", {"n": 3}, _q3_brgc())
    f = BitAutomorphism((1, 0, 2), (0, 1, 1))
    assert check_symmetric(c, f, 4)
    assert not check_symmetric(c, f, 2)
    with pytest.raises(ValueError):
        check_symmetric(c, f, 3)


def _lcf_brute(seq, nb):
    N = len(seq)
    pos = {w: i for i, w in enumerate(seq)}
    out = []
    for i, w in enumerate(seq):
        ds = []
        for u in nb(w):
            d = (pos[u] - i) % N
            if d in (1, N - 1):
                continue
            ds.append(d - N if d > N / 2 else d)
        out.append(tuple(sorted(ds)))
    return out


def test_lcf_q3():
    seq = _q3_brgc()
    a = lcf(_cycle("hypercube", {"n": 3}, seq))
    assert a.sets == _lcf_brute(seq, oracles.cube_nbrs)
    assert a.cubic
    assert a.compact() in ("(3,-3)^4", "(-3,3)^4")
    assert a.period == 2


def test_lcf_matches_brute_on_perm():
    from hamcomp.perm import sjt

    c = sjt(4)
    seq = [tuple(w) for w in c.words.tolist()]
    assert lcf(c).sets == _lcf_brute(seq, oracles.perm_nbrs)


def test_lcf_equivalence_handles_rotation_and_reversal():
    a = [(-5,), (9,), (-9,), (5,)] * 5
    b = a[3:] + a[:3]
    rev = [tuple(sorted(-d for d in s)) for s in reversed(a)]
    assert lcf_equivalent(a, b)
    assert lcf_equivalent(a, rev)
    assert not lcf_equivalent(a, [(5,), (9,), (-9,), (5,)] * 5)


def test_smallest_period():
    assert smallest_period([1, 2, 1, 2, 1, 2]) == 2
    assert smallest_period([1, 2, 3]) == 3
    assert smallest_period([7] * 4) == 1


def _tracks_brute(words):
    cols = [tuple(words[:, j]) for j in range(words.shape[1])]
    classes = []
    for col in cols:
        for cl in classes:
            ref = cl[0]
            if any(col == ref[t:] + ref[:t] for t in range(len(ref))):
                cl.append(col)
                break
        else:
            classes.append([col])
    return len(classes)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_tracks_and_balance_brgc(n):
    from hamcomp.cube import brgc

    c = brgc(n)
    assert track_count(c).count == _tracks_brute(c.words)
    b = balance_stats(c)
    flips = (c.words != np.roll(c.words, -1, axis=0)).sum(axis=0).tolist()
    assert b.counts == flips
    assert sum(b.counts) == 2**n


def test_balance_johnson_counts_steps_once():
    from hamcomp.johnson import coprime_cycle

    c = coprime_cycle(7, 2)
    b = balance_stats(c)
    assert sum(b.counts) == len(c)
    assert b.balanced


def _small_tables(family, params):
    g = graph_from_params(family, params)
    words = g.all_words()
    nb = [sorted(g.index(u) for u in g.neighbors(tuple(w))) for w in words.tolist()]
    return g, words, nb


@pytest.mark.parametrize("family,params", [
    ("hypercube", {"n": 4}),
    ("permutahedron", {"n": 4}),
    ("johnson", {"n": 6, "k": 3}),
])
def test_path_searches_find_cycles(family, params):
    g, words, nb = _small_tables(family, params)
    fam_nb = oracles.nbr_fn(family, **params)
    verts = [tuple(w) for w in words.tolist()]
    for path in (hamilton_path_search(nb, 0, cycle=True), rotation_search(nb, 0, cycle=True, seed=3)):
        assert oracles.is_ham_cycle([verts[i] for i in path], verts, fam_nb)


def test_rotation_search_is_seeded():
    g, words, nb = _small_tables("hypercube", {"n": 5})
    assert rotation_search(nb, 0, cycle=True, seed=7) == rotation_search(nb, 0, cycle=True, seed=7)


def test_path_search_to_fixed_end():
    g, words, nb = _small_tables("hypercube", {"n": 4})
    path = hamilton_path_search(nb, 0, end=1)
    assert path[0] == 0 and path[-1] == 1 and sorted(path) == list(range(16))


def test_budget_exhaustion_is_explicit():
    g, words, nb = _small_tables("permutahedron", {"n": 5})
    with pytest.raises(SearchBudgetExceeded):
        hamilton_path_search(nb, 0, end=1, budget=_Budget(5, None))


def test_lifted_search_on_johnson():
    g = Johnson(7, 2)
    c = lifted_cycle_search(g, BitAutomorphism.shift_left(7))
    assert validate_cycle(c).ok
    assert check_symmetric(c, BitAutomorphism.shift_left(7), 7)


@pytest.mark.parametrize("family,params", [
    ("hypercube", {"n": 3}),
    ("permutahedron", {"n": 3}),
    ("permutahedron", {"n": 4}),
    ("johnson", {"n": 5, "k": 2}),
    ("cayley", {"orders": [3, 5], "gens": [[1, 0], [0, 1]]}),
    ("cayley", {"orders": [2, 4], "gens": [[1, 0], [0, 1]]}),
])
def test_kappa_exact_matches_enumeration(family, params):
    g = graph_from_params(family, params)
    want = oracles.kappa(oracles.vertex_list(family, **params), oracles.nbr_fn(family, **params))
    r = kappa_exact(g)
    assert r.exact
    assert r.kappa == want
    if r.witness is not None:
        assert validate_cycle(r.witness).ok
        assert cycle_compression(r.witness) >= r.kappa


def test_kappa_explicit_graphs():
    ring = ExplicitGraph(6, [(i, (i + 1) % 6) for i in range(6)])
    assert kappa_exact(ring).kappa == 6
    petersen = ExplicitGraph(10, [(i, (i + 1) % 5) for i in range(5)] + [(i, i + 5) for i in range(5)]
                             + [(5 + i, 5 + (i + 2) % 5) for i in range(5)])
    r = kappa_exact(petersen)
    assert r.kappa == 0 and r.witness is None
