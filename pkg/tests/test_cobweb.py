import itertools
import json
import random

import pytest

from cobwebcode import (
    AmbientMismatch,
    BoxInterval,
    FBaseNumeral,
    FSequence,
    HasseDigraph,
    HyperBox,
    InvalidPermutation,
    Vertex,
    box_contains,
    build_hasse,
    compare_lexV,
    count_max_chains,
    count_paths_dfs,
    enumerate_max_chains,
    f_factorial,
    join,
    layer_digraph,
    meet,
    pair_order,
    parse_sequence,
    permuted_subposet,
    poset_leq,
    product_leq,
    strip,
)
from cobwebcode.fbase import LT
from conftest import BUILTIN_SPECS


def test_build_hasse_examples(fib, nat):
    g = build_hasse(fib, 4)
    assert g.widths == (1, 1, 1, 2, 3)
    assert g.arc_count == len(list(g.arcs())) == 10
    g0 = build_hasse(nat, 0)
    assert g0.widths == (1,) and g0.arc_count == 0
    g3 = build_hasse(nat, 3)
    assert g3.widths == (1, 1, 2, 3) and len(list(g3.arcs())) == 9


@pytest.mark.parametrize("spec", BUILTIN_SPECS)
def test_arc_count_formula(spec):
    F = parse_sequence(spec)
    for n in range(7):
        g = build_hasse(F, n)
        assert len(list(g.arcs())) == sum(F.width(s) * F.width(s + 1) for s in range(n))


def test_arcs_are_complete_bipartite_between_neighbours(fib):
    g = build_hasse(fib, 5)
    arcs = set(g.arcs())
    for u, v in itertools.product(g.vertices, repeat=2):
        assert ((u, v) in arcs) == (v.level == u.level + 1)


def test_explicit_zero_root_is_one_vertex():
    g = build_hasse(FSequence.explicit([0, 1, 1, 2]), 3)
    assert g.widths == (1, 1, 1, 2)


def test_poset_leq_examples():
    assert poset_leq(Vertex(2, 1), Vertex(3, 2))
    assert not poset_leq(Vertex(3, 1), Vertex(3, 2))
    assert poset_leq(Vertex(3, 2), Vertex(3, 2))


def test_poset_leq_properties(nat):
    vs = build_hasse(nat, 4).vertices
    for x in vs:
        assert poset_leq(x, x)
    for x, y, z in itertools.product(vs, repeat=3):
        if poset_leq(x, y) and poset_leq(y, z):
            assert poset_leq(x, z)
    for x, y in itertools.product(vs, repeat=2):
        if x.level != y.level:
            assert poset_leq(x, y) or poset_leq(y, x)
        if poset_leq(x, y) and poset_leq(y, x):
            assert x == y


def test_permuted_subposet(nat, fib):
    assert permuted_subposet(nat, 3, (1, 2, 3)).widths == (1, 2, 3)
    assert permuted_subposet(nat, 3, (2, 1, 3)).widths == (2, 1, 3)
    for sigma in itertools.permutations(range(1, 6)):
        g = permuted_subposet(fib, 5, sigma)
        assert sum(g.widths) == sum(fib[s] for s in range(1, 6))
    with pytest.raises(InvalidPermutation):
        permuted_subposet(nat, 3, (1, 1, 3))
    with pytest.raises(InvalidPermutation):
        permuted_subposet(nat, 3, (1, 2))


def test_max_chain_examples(nat, fib):
    assert count_max_chains(HyperBox(nat, 3, 4)) == 12
    assert count_paths_dfs(layer_digraph(nat, 3, 4)) == 12
    assert list(enumerate_max_chains(HyperBox(nat, 3, 2))) == [()]
    assert count_max_chains(HyperBox(fib, 1, 4)) == 6


@pytest.mark.parametrize("spec", BUILTIN_SPECS)
def test_chain_counts_match_dfs(spec):
    F = parse_sequence(spec)
    for n in range(7):
        box = HyperBox(F, 1, n)
        pts = list(enumerate_max_chains(box))
        assert len(pts) == len(set(pts)) == count_max_chains(box) == f_factorial(F, n)
        assert count_paths_dfs(layer_digraph(F, 1, n)) == f_factorial(F, n)


def test_enumeration_is_in_digit_order(fib):
    pts = list(HyperBox(fib, 2, 6).points())
    nums = [FBaseNumeral(p, 2, fib) for p in pts]
    assert all(compare_lexV(a, b) == LT for a, b in zip(nums, nums[1:]))


def test_box_contains_examples(nat):
    box = HyperBox(nat, 3, 4)
    full = box.as_interval()
    assert box_contains(full, full)
    assert box_contains(full, BoxInterval.point(box.extents, (2, 1)))
    ambient = HyperBox(nat, 2, 3).extents
    assert not box_contains(BoxInterval(ambient, (0, 0), (1, 1)), BoxInterval(ambient, (0, 0), (1, 2)))
    assert box_contains(BoxInterval(ambient, (0, 0), (1, 2)), BoxInterval(ambient, (0, 0), (1, 1)))
    with pytest.raises(AmbientMismatch):
        box_contains(full, BoxInterval(ambient, (0, 0), (1, 1)))


def _sub_boxes(extents):
    ranges = [[(l, h) for l in range(e) for h in range(l, e)] for e in extents]
    for choice in itertools.product(*ranges):
        yield BoxInterval(tuple(extents), tuple(c[0] for c in choice), tuple(c[1] for c in choice))


@pytest.mark.parametrize("extents", [(3,), (2, 3), (3, 3), (2, 2, 3), (1, 3, 2)])
def test_inclusion_is_partial_order(extents):
    boxes = list(_sub_boxes(extents))
    for a in boxes:
        assert box_contains(a, a)
    for a, b in itertools.product(boxes, repeat=2):
        if box_contains(a, b) and box_contains(b, a):
            assert a == b
        # inclusion of intervals agrees with inclusion of point sets
        assert box_contains(a, b) == set(b.points()).issubset(a.points())
    for a, b, c in itertools.product(boxes[:40], repeat=3):
        if box_contains(a, b) and box_contains(b, c):
            assert box_contains(a, c)


def test_join_meet_strip_examples(nat):
    assert join((0, 1), (1, 0)) == (1, 1)
    assert meet((0, 1), (1, 0)) == (0, 0)
    box = HyperBox(nat, 2, 3)
    s = strip((0, 2), (1, 0), box)
    assert (s.lo, s.hi) == ((0, 0), (1, 2))
    assert (0, 2) in s and (1, 0) in s
    with pytest.raises(AmbientMismatch):
        join((0, 1), (0, 1, 2))
    with pytest.raises(AmbientMismatch):
        strip((0, 3), (1, 0), box)


@pytest.mark.parametrize("spec,k,n", [("natural", 3, 4), ("fibonacci", 1, 5), ("natural", 1, 4), ("gauss:2", 1, 3)])
def test_lattice_laws(spec, k, n):
    box = HyperBox(parse_sequence(spec), k, n)
    pts = list(box.points())
    assert len(pts) <= 200
    for x, y in itertools.product(pts, repeat=2):
        assert join(x, y) == join(y, x) and meet(x, y) == meet(y, x)
        assert join(x, meet(x, y)) == x and meet(x, join(x, y)) == x
        assert product_leq(x, y) == (meet(x, y) == x)
        assert product_leq(x, join(x, y))
        assert join(x, y) in box and meet(x, y) in box
    rng = random.Random(0)
    for _ in range(3000):
        x, y, z = rng.choice(pts), rng.choice(pts), rng.choice(pts)
        assert join(join(x, y), z) == join(x, join(y, z))
        assert meet(meet(x, y), z) == meet(x, meet(y, z))


def test_pair_orders():
    assert pair_order("lex", (1, 5), (2, 0))
    assert not pair_order("product", (1, 5), (2, 0))
    assert not pair_order("strict-reflexive", (1, 1), (2, 0))
    assert pair_order("strict-reflexive", (1, 1), (1, 1))
    with pytest.raises(ValueError):
        pair_order("bogus", (0, 0), (0, 0))


def test_pair_order_kinds():
    pts = list(itertools.product(range(4), repeat=2))
    for kind in ("lex", "product", "strict-reflexive"):
        for a in pts:
            assert pair_order(kind, a, a)
        for a, b in itertools.product(pts, repeat=2):
            if pair_order(kind, a, b) and pair_order(kind, b, a):
                assert a == b
    # lex is total, the other two are not
    assert all(pair_order("lex", a, b) or pair_order("lex", b, a) for a, b in itertools.product(pts, repeat=2))
    assert not pair_order("product", (0, 1), (1, 0)) and not pair_order("product", (1, 0), (0, 1))


def test_dot_and_json_export(fib):
    g = build_hasse(fib, 4)
    dot = g.to_dot()
    assert dot.startswith("digraph")
    assert dot.count("->") == 10
    assert dot.count("rank=same") == 5
    for v in g.vertices:
        assert f'"{v.position}:{v.level}";' in dot
    obj = json.loads(json.dumps(g.to_json()))
    assert len(obj["arcs"]) == 10
    assert HasseDigraph.from_json(obj, fib) == g
    obj["arcs"].pop()
    with pytest.raises(ValueError):
        HasseDigraph.from_json(obj, fib)
