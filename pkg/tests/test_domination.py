import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from domtri import (
    Coloring,
    DominationResult,
    OracleLimit,
    OracleLimitExceeded,
    build_from_rotation,
    class_combinator,
    diamond_chain,
    exact_gamma,
    exact_iota,
    four_coloring,
    greedy_maximal_independent,
    icosahedron,
    is_dominating,
    is_independent,
    k4,
    k4_chain,
    near_triangulation_from,
    octahedron,
    random_connected_plane,
    random_triangulation,
    undominated_by,
    verify_combinator_accounting,
)

HEX_DISK_ROT = [[1, 2, 3, 4, 5], [2, 0], [1, 3, 0], [0, 2, 4], [5, 0, 3], [0, 4]]


def brute_iota(g):
    """Reference value by plain subset enumeration, smallest size first."""
    vs = sorted(g.vertices())
    for size in range(1, g.n + 1):
        for comb in itertools.combinations(vs, size):
            s = frozenset(comb)
            if is_independent(g, s) and is_dominating(g, s):
                return size
    raise AssertionError("graph has no independent dominating set")


def brute_gamma(g):
    vs = sorted(g.vertices())
    for size in range(1, g.n + 1):
        for comb in itertools.combinations(vs, size):
            if is_dominating(g, frozenset(comb)):
                return size
    raise AssertionError("graph has no dominating set")


def small_corpus():
    yield "k4", k4()
    yield "octahedron", octahedron()
    yield "icosahedron", icosahedron()
    yield "hex_disk", build_from_rotation(6, HEX_DISK_ROT, outer=(0, 1, 2, 3, 4, 5))
    for n, seed in ((8, 1), (10, 2), (12, 3)):
        yield f"tri_{n}_{seed}", random_triangulation(n, seed)
    base = random_triangulation(11, 4)
    yield "near_10", near_triangulation_from(base, 6)[0]
    yield "plane_9", random_connected_plane(9, 5)


def test_domination_predicates():
    g = octahedron()
    assert is_dominating(g, {0, 3})
    assert is_independent(g, {0, 3})
    assert not is_dominating(g, {0})
    assert not is_independent(g, {0, 1})


def test_undominated_by():
    g = octahedron()
    c = Coloring(4, (0, 1, 2, 0, 1, 2))
    assert undominated_by(g, c, 0) == frozenset()
    assert undominated_by(g, c, 3) == frozenset(range(6))
    with pytest.raises(ValueError, match="not proper"):
        undominated_by(g, Coloring(4, (0, 0, 1, 2, 1, 2)), 0)


def test_greedy_independent_order():
    path = {0: {1}, 1: {0, 2}, 2: {1}}
    assert greedy_maximal_independent(path) == frozenset({0, 2})
    assert greedy_maximal_independent(path, order=(1, 0, 2)) == frozenset({1})


def test_exact_iota_fixed_values():
    assert exact_iota(k4()).size == 1
    assert exact_iota(octahedron()).size == 2
    r = exact_iota(icosahedron())
    assert r.size == 2
    assert is_independent(icosahedron(), r.vertices)
    assert is_dominating(icosahedron(), r.vertices)


def test_exact_gamma_fixed_values():
    assert exact_gamma(k4()).size == 1
    assert exact_gamma(octahedron()).size == 2


@pytest.mark.parametrize("name,g", list(small_corpus()))
def test_oracles_match_subset_enumeration(name, g):
    iota = exact_iota(g)
    gamma = exact_gamma(g)
    assert iota.size == brute_iota(g)
    assert gamma.size == brute_gamma(g)
    assert gamma.size <= iota.size
    assert is_independent(g, iota.vertices) and is_dominating(g, iota.vertices)
    assert is_dominating(g, gamma.vertices)


def test_oracle_vertex_limit():
    g = icosahedron()
    with pytest.raises(OracleLimitExceeded, match="n <= 10"):
        exact_iota(g, OracleLimit(max_vertices=10, max_nodes=1000))
    with pytest.raises(OracleLimitExceeded, match="n <= 10"):
        exact_gamma(g, OracleLimit(max_vertices=10, max_nodes=1000))


def test_oracle_node_budget():
    g = random_triangulation(20, 9)
    with pytest.raises(OracleLimitExceeded, match="nodes"):
        exact_iota(g, OracleLimit(max_vertices=35, max_nodes=0))
    with pytest.raises(OracleLimitExceeded, match="nodes"):
        exact_gamma(g, OracleLimit(max_vertices=35, max_nodes=0))


def test_combinator_requires_proper():
    with pytest.raises(ValueError, match="not proper"):
        class_combinator(k4(), Coloring(4, (0, 0, 1, 2)))


def test_combinator_rainbow_k4():
    r = class_combinator(k4(), Coloring(4, (0, 1, 2, 3)))
    assert r.size == 1
    assert not r.used_fallback
    assert r.per_class == (1, 1, 1, 1)


def test_combinator_fallback_on_octahedron():
    g = octahedron()
    c = four_coloring(g)  # one class comes out empty
    r = class_combinator(g, c)
    assert r.used_fallback
    assert r.union_s == frozenset()
    assert r.size == 2
    assert r.vertices == c.class_members(r.witness_class)
    assert r.per_class is None


def test_combinator_icosahedron():
    g = icosahedron()
    r = class_combinator(g, four_coloring(g))
    assert not r.used_fallback
    assert r.size == 3
    assert r.per_class == (3, 3, 3, 3)
    # every class already dominates, so no S_i vertices are added
    assert r.union_s == frozenset()
    assert is_independent(g, r.vertices) and is_dominating(g, r.vertices)


def test_accounting_icosahedron():
    g = icosahedron()
    c = four_coloring(g)
    acc = verify_combinator_accounting(g, c, class_combinator(g, c))
    assert acc.holds
    names = {ch.name for ch in acc.checks}
    assert {
        "x_holes_even_degree",
        "interior_face_budget",
        "weighted_deletion_budget",
        "y_at_most_half_outer",
        "near_bound",
        "combined_size",
        "planar_y",
        "planar_f4_strict",
        "planar_size",
        "planar_bound",
        "min5_f4_zero",
        "min5_bound",
    } <= names
    assert acc.s_count == 0 and acc.f4_h == 0


def test_accounting_fallback_rows():
    g = octahedron()
    c = four_coloring(g)
    acc = verify_combinator_accounting(g, c, class_combinator(g, c))
    assert acc.holds
    names = {ch.name for ch in acc.checks}
    assert {"fallback_classes_dominating", "fallback_size"} <= names
    # the averaging rows only make sense when all four classes are in play
    assert "combined_size" not in names and "planar_size" not in names


def test_accounting_near_triangulation():
    g, _ = near_triangulation_from(random_triangulation(18, 21), 5)
    c = four_coloring(g)
    acc = verify_combinator_accounting(g, c, class_combinator(g, c))
    assert acc.holds
    names = {ch.name for ch in acc.checks}
    assert "near_bound" in names and "planar_bound" not in names


def test_accounting_needs_union_s():
    g = octahedron()
    bare = DominationResult(
        vertices=frozenset({0, 3}), size=2, method="exact_iota"
    )
    with pytest.raises(ValueError, match="union_s"):
        verify_combinator_accounting(g, four_coloring(g), bare)


def test_accounting_rejects_plane_graph():
    rot = [[1, 3], [2, 0], [3, 1], [0, 2]]
    g = build_from_rotation(4, rot, outer=(0, 1, 2, 3))
    c = Coloring(4, (0, 1, 0, 1))
    r = class_combinator(g, c)
    with pytest.raises(ValueError, match="near triangulations"):
        verify_combinator_accounting(g, c, r)


def test_diamond_chain_iota():
    g = diamond_chain(2)
    assert g.n == 14
    assert exact_iota(g).size == 4


def test_k4_chain_gamma():
    for k in (2, 3):
        g, anchors = k4_chain(k)
        r = exact_gamma(g)
        assert r.size == k
        assert is_dominating(g, anchors)


@settings(max_examples=25, deadline=None)
@given(n=st.integers(6, 14), seed=st.integers(0, 10_000))
def test_combinator_vs_oracle_on_random(n, seed):
    g = random_triangulation(n, seed)
    c = four_coloring(g)
    r = class_combinator(g, c)
    assert is_independent(g, r.vertices) and is_dominating(g, r.vertices)
    assert 8 * r.size < 3 * n
    assert exact_iota(g).size <= r.size
    acc = verify_combinator_accounting(g, c, r)
    assert acc.holds
