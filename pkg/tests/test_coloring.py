import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from domtri import (
    Coloring,
    class_sizes,
    four_coloring,
    icosahedron,
    is_acyclic,
    is_dominating,
    is_proper,
    is_r_dynamic,
    k4,
    missing_colors,
    octahedron,
    permute_classes,
    planar_three_tree,
    random_triangulation,
    rec_eulerian_six_coloring,
    recursive_eulerian,
    stacked_four_coloring,
)

RAINBOW_K4 = Coloring(4, (0, 1, 2, 3))
# octahedron antipodal pairs under our labeling: 0-3, 1-4, 2-5
OCT_ANTIPODAL = Coloring(3, (0, 1, 2, 0, 1, 2))


def test_coloring_validation():
    with pytest.raises(ValueError):
        Coloring(2, (0, 1, 2))
    c = Coloring(3, (0, 1, 2, 0))
    assert c.n == 4
    assert c[3] == 0
    assert c.class_members(0) == frozenset({0, 3})
    with pytest.raises(IndexError):
        c.class_members(3)


def test_text_round_trip():
    c = Coloring(4, (0, 3, 1, 2, 0))
    assert Coloring.from_text(c.to_text(), k=4) == c
    # k is inferred from the largest class when not given
    assert Coloring.from_text(c.to_text()).k == 4
    assert Coloring.from_text("# note\n0 1\n\n1 0  # trailing\n").colors == (1, 0)


def test_text_rejects_gaps_and_repeats():
    with pytest.raises(ValueError, match="twice"):
        Coloring.from_text("0 0\n0 1\n")
    with pytest.raises(ValueError, match="cover"):
        Coloring.from_text("0 0\n2 1\n")


def test_class_sizes():
    assert class_sizes(RAINBOW_K4) == (1, 1, 1, 1)
    assert class_sizes(Coloring(4, (0, 0, 2, 0))) == (3, 0, 1, 0)


def test_permute_classes():
    c = Coloring(3, (0, 1, 2, 0))
    assert permute_classes(c, [2, 0, 1]).colors == (2, 0, 1, 2)
    assert permute_classes(c, {0: 1, 1: 0, 2: 2}).colors == (1, 0, 2, 1)
    with pytest.raises(ValueError, match="bijection"):
        permute_classes(c, [0, 0, 1])


def test_proper_and_size_mismatch():
    g = k4()
    assert is_proper(g, RAINBOW_K4)
    assert not is_proper(g, Coloring(4, (0, 0, 1, 2)))
    with pytest.raises(ValueError, match="covers"):
        is_proper(g, Coloring(4, (0, 1, 2)))


def test_dynamic_and_acyclic_on_k4():
    g = k4()
    assert is_r_dynamic(g, RAINBOW_K4, 3)
    # degrees cap the requirement, so huge r still passes on a rainbow
    assert is_r_dynamic(g, RAINBOW_K4, 99)
    assert is_acyclic(g, RAINBOW_K4)


def test_antipodal_octahedron_coloring():
    g = octahedron()
    assert is_proper(g, OCT_ANTIPODAL)
    # every vertex sees both other classes twice but only 2 classes total
    assert is_r_dynamic(g, OCT_ANTIPODAL, 2)
    assert not is_r_dynamic(g, OCT_ANTIPODAL, 3)
    assert not is_r_dynamic(g, OCT_ANTIPODAL, 5)
    # any two antipodal pairs induce a 4-cycle
    assert not is_acyclic(g, OCT_ANTIPODAL)


def test_acyclic_colorings_are_3_dynamic():
    # hand-built acyclic colorings of small triangulations: one antipodal
    # pair plus singletons on the octahedron, rainbows elsewhere
    cases = [
        (k4(), RAINBOW_K4),
        (octahedron(), Coloring(5, (0, 1, 2, 0, 3, 4))),
        (octahedron(), Coloring(6, tuple(range(6)))),
        (icosahedron(), Coloring(12, tuple(range(12)))),
    ]
    for g, c in cases:
        assert is_acyclic(g, c)
        assert is_r_dynamic(g, c, 3)
    assert is_r_dynamic(octahedron(), Coloring(6, tuple(range(6))), 5)


def test_permute_classes_commutes_with_checkers():
    g = octahedron()
    c = Coloring(5, (0, 1, 2, 0, 3, 4))
    for perm in ([1, 0, 2, 3, 4], [4, 3, 2, 1, 0], [2, 4, 0, 1, 3]):
        p = permute_classes(c, perm)
        assert is_proper(g, p) == is_proper(g, c)
        assert is_acyclic(g, p) == is_acyclic(g, c)
        for r in (2, 3, 5):
            assert is_r_dynamic(g, p, r) == is_r_dynamic(g, c, r)
        for v in g.vertices():
            before = missing_colors(g, c, v).absent
            after = missing_colors(g, p, v).absent
            assert len(after) == len(before)
            assert after == frozenset(perm[i] for i in before)


def test_checkers_require_proper():
    g = k4()
    bad = Coloring(4, (0, 0, 1, 2))
    for call in (
        lambda: is_r_dynamic(g, bad, 2),
        lambda: is_acyclic(g, bad),
        lambda: missing_colors(g, bad, 0),
    ):
        with pytest.raises(ValueError, match="not proper"):
            call()


def test_missing_colors_rainbow_octahedron():
    g = octahedron()
    rainbow = Coloring(6, tuple(range(6)))
    for v, antipode in ((0, 3), (1, 4), (2, 5), (3, 0), (4, 1), (5, 2)):
        assert missing_colors(g, rainbow, v).absent == frozenset({antipode})


def test_four_coloring_fixed_graphs():
    gk = k4()
    ck = four_coloring(gk)
    assert is_proper(gk, ck) and class_sizes(ck) == (1, 1, 1, 1)

    go = octahedron()
    co = four_coloring(go)
    assert is_proper(go, co)
    # the backtracker lands on the antipodal 3-coloring, leaving class 3 empty
    assert class_sizes(co) == (2, 2, 2, 0)

    gi = icosahedron()
    ci = four_coloring(gi)
    assert is_proper(gi, ci) and class_sizes(ci) == (3, 3, 3, 3)


def test_four_coloring_deterministic():
    g = random_triangulation(30, 4242)
    assert four_coloring(g).colors == four_coloring(g).colors


@settings(max_examples=30, deadline=None)
@given(n=st.integers(4, 40), seed=st.integers(0, 10_000))
def test_four_coloring_proper_on_random(n, seed):
    g = random_triangulation(n, seed)
    assert is_proper(g, four_coloring(g))


def test_stacked_coloring_dominates():
    g, trace = planar_three_tree(25, 7)
    c = stacked_four_coloring(trace)
    assert is_proper(g, c)
    assert class_sizes(c) == (4, 8, 8, 5)
    assert all(is_dominating(g, c.class_members(i)) for i in range(4))
    assert min(class_sizes(c)) <= g.n // 4


def test_stacked_coloring_rejects_foreign_trace():
    _, trace = recursive_eulerian(2, 0)
    with pytest.raises(ValueError, match="stacking"):
        stacked_four_coloring(trace)


def test_six_coloring_one_insertion():
    g, trace = recursive_eulerian(1, 0)
    c = rec_eulerian_six_coloring(g, trace)
    assert c.colors == (0, 2, 1, 4, 5, 3)
    assert is_proper(g, c)
    assert is_r_dynamic(g, c, 5)


def test_six_coloring_t3():
    g, trace = recursive_eulerian(3, 11)
    c = rec_eulerian_six_coloring(g, trace)
    assert is_proper(g, c)
    assert is_r_dynamic(g, c, 5)
    # degree-4 vertices miss exactly one class, higher degrees miss none,
    # and adjacent degree-4 vertices never miss the same one
    miss = {v: missing_colors(g, c, v).absent for v in g.vertices()}
    for v in g.vertices():
        assert len(miss[v]) == (1 if g.degree(v) == 4 else 0)
    for u, v in g.edges():
        if g.degree(u) == 4 and g.degree(v) == 4:
            assert miss[u] != miss[v]


@pytest.mark.parametrize("t,seed", [(2, 0), (4, 3), (6, 1), (8, 2)])
def test_six_coloring_depth_sweep(t, seed):
    g, trace = recursive_eulerian(t, seed)
    c = rec_eulerian_six_coloring(g, trace)
    assert is_proper(g, c)
    assert is_r_dynamic(g, c, 5)


def test_six_coloring_rejects_mismatched_trace():
    g, _ = recursive_eulerian(2, 0)
    _, other = recursive_eulerian(2, 1)
    with pytest.raises(ValueError, match="rebuild"):
        rec_eulerian_six_coloring(g, other)
    _, stack_trace = planar_three_tree(12, 0)
    with pytest.raises(ValueError, match="octahedron-pattern"):
        rec_eulerian_six_coloring(g, stack_trace)
