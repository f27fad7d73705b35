import itertools

import numpy as np
import pytest

import oracles
from hamcomp.graphs import (
    AbelianCayley,
    AbelianGroup,
    AffineAutomorphism,
    BitAutomorphism,
    ExplicitGraph,
    Hypercube,
    Johnson,
    MiddleLevels,
    Permutahedron,
    PermAutomorphism,
    PermutahedronPlus,
    automorphism_from_json,
    graph_from_params,
    is_automorphism,
    orbits,
    read_edge_list,
    write_edge_list,
)

SMALL = [
    ("hypercube", {"n": 4}),
    ("johnson", {"n": 6, "k": 2}),
    ("johnson", {"n": 7, "k": 3}),
    ("middle_levels", {"n": 2}),
    ("permutahedron", {"n": 4}),
    ("permutahedron_plus", {"n": 5}),
    ("cayley", {"orders": [3, 5], "gens": [[1, 0], [0, 1]]}),
    ("cayley", {"orders": [2, 4], "gens": [[1, 1], [0, 1]]}),
]


@pytest.mark.parametrize("family,params", SMALL)
def test_vertex_set_and_codec(family, params):
    g = graph_from_params(family, params)
    verts = oracles.vertex_list(family, **params)
    assert g.vertex_count == len(verts)
    assert sorted(g.vertices()) == sorted(verts)
    for i, v in enumerate(g.vertices()):
        assert g.index(v) == i
        assert g.vertex(i) == v
    words = g.all_words()
    assert g.index_many(words).tolist() == list(range(len(verts)))


@pytest.mark.parametrize("family,params", SMALL)
def test_neighbors_match_brute_force(family, params):
    g = graph_from_params(family, params)
    nb = oracles.nbr_fn(family, **params)
    for v in g.vertices():
        assert sorted(g.neighbors(v)) == sorted(set(nb(v)))
        for u in nb(v):
            assert g.adjacent(v, u)


def test_adjacent_many_agrees_with_scalar():
    g = Johnson(7, 3)
    words = g.all_words()
    rng = np.random.default_rng(1)
    b = words[rng.permutation(len(words))]
    got = g.adjacent_many(words, b)
    want = [g.adjacent(tuple(x), tuple(y)) for x, y in zip(words.tolist(), b.tolist())]
    assert got.tolist() == want


def test_bad_vertices_rejected():
    with pytest.raises(ValueError):
        Johnson(5, 2).check_vertex((1, 1, 1, 0, 0))
    with pytest.raises(ValueError):
        Permutahedron(3).check_vertex((1, 1, 2))
    with pytest.raises(ValueError):
        MiddleLevels(2).check_vertex((0, 0, 0, 0, 1))


def test_group_parse_and_span():
    G = AbelianGroup.parse("Z2xZ4")
    assert G.orders == (2, 4) and G.size == 8
    assert AbelianGroup.parse("Z3+Z5").orders == (3, 5)
    assert G.order_of((1, 2)) == 2
    assert len(G.span([(0, 1)])) == 4
    assert len(G.span([(1, 0), (0, 1)])) == 8
    with pytest.raises(ValueError):
        AbelianGroup.parse("Q8")


def test_cayley_rejects_identity_generator():
    with pytest.raises(ValueError):
        AbelianCayley(AbelianGroup((2, 4)), [(0, 0), (1, 1)])


@pytest.mark.parametrize("f,g", [
    (BitAutomorphism.cube_g(5), Hypercube(5)),
    (BitAutomorphism.shift_left(7), Johnson(7, 3)),
    (BitAutomorphism((0, 1, 3, 4, 5, 6, 2), (1,) * 7), MiddleLevels(3)),
    (PermAutomorphism.from_alpha_pi("id", (2, 3, 4, 5, 1)), Permutahedron(5)),
    (PermAutomorphism.rotation(5), PermutahedronPlus(5)),
    (AffineAutomorphism.translation(AbelianGroup((5, 5)), (1, 2)),
     AbelianCayley(AbelianGroup((5, 5)), [(1, 0), (0, 1)])),
    (AffineAutomorphism.reflection(AbelianGroup((2, 8)), (1, 3)),
     AbelianCayley(AbelianGroup((2, 8)), [(1, 0), (0, 1)])),
])
def test_known_automorphisms(f, g):
    assert is_automorphism(f, g)
    assert f.power(f.order()).apply(g.vertex(3)) == g.vertex(3)
    back = automorphism_from_json(f.to_json(), g)
    assert all(back.apply(v) == f.apply(v) for v in g.vertices())


def test_non_automorphism_detected():
    # swapping x1, x3 only is not an automorphism of the permutahedron
    f = PermAutomorphism((2, 1, 0, 3), (1, 2, 3, 4))
    assert not is_automorphism(f, Permutahedron(4))


def test_cube_g_order_and_orbits():
    for n in (2, 4, 8):
        g = BitAutomorphism.cube_g(n)
        assert g.order() == 2 * n
        part = orbits(g, Hypercube(n))
        assert part.uniform_size == 2 * n
        assert len(part) == 2**n // (2 * n)


@pytest.mark.parametrize("f,g", [
    (BitAutomorphism.shift_left(7), Johnson(7, 2)),
    (PermAutomorphism.rotation(4), PermutahedronPlus(4)),
    (BitAutomorphism((0, 1, 3, 4, 5, 6, 2), (1,) * 7), MiddleLevels(3)),
])
def test_orbit_partition_invariants(f, g):
    part = orbits(f, g)
    seen = list(itertools.chain.from_iterable(part.orbits))
    assert sorted(seen) == sorted(g.vertices())
    for orb in part.orbits:
        for a, b in zip(orb, orb[1:] + orb[:1]):
            assert f.apply(a) == b
        assert f.order() % len(orb) == 0


def test_johnson_72_orbits():
    part = orbits(BitAutomorphism.shift_left(7), Johnson(7, 2))
    assert part.sizes == [7, 7, 7]


def test_edge_list_round_trip(tmp_path):
    g = ExplicitGraph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
    p = tmp_path / "g.txt"
    write_edge_list(g, p)
    h = read_edge_list(p)
    assert h.params() == g.params()
    assert h.adjacent((0,), (2,)) and not h.adjacent((1,), (3,))


def test_edge_list_errors(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("3 2\n0 1\n")
    with pytest.raises(ValueError):
        read_edge_list(p)
    with pytest.raises(ValueError):
        ExplicitGraph(3, [(0, 0)])
