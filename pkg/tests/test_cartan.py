import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from skewtile.cartan import (cartan_family, cartan_monomial, cartan_skew_gentle, check_theorem_4_4,
                             count_full_zero_cycles, det_exact, path_basis_size, rank_exact)
from skewtile.constructions import build_sp, gentle_presentation
from skewtile.errors import NotFiniteDimensional, StructuralError
from skewtile.examples import even_cycle_triple, linear_triple, odd_cycle_triple
from skewtile.generators import all_relation_choices, random_gentle_pair, skew_gentle_triples
from skewtile.quiver import Arrow, Quiver, RelationSet, SkewGentleTriple

ODD = {
    "g": [[1, 0, 1], [1, 1, 0], [0, 1, 1]],
    "sp": [[2, 0, 2], [2, 1, 1], [0, 1, 1]],
    "sg": [[1, 0, 0, 1], [0, 1, 0, 1], [1, 1, 1, 1], [0, 0, 1, 1]],
    "star": [[2, 1, 0, 2], [1, 1, 0, 1], [2, 1, 1, 1], [0, 0, 1, 1]],
}
EVEN = {
    "g": [[1, 0, 0, 1], [1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1]],
    "sp": [[2, 0, 0, 2], [2, 1, 0, 1], [0, 1, 1, 0], [0, 0, 1, 1]],
    "sg": [[1, 0, 0, 0, 1], [0, 1, 0, 0, 1], [1, 1, 1, 0, 1], [0, 0, 1, 1, 0], [0, 0, 0, 1, 1]],
    "star": [[2, 1, 0, 0, 2], [1, 1, 0, 0, 1], [2, 1, 1, 0, 1], [0, 0, 1, 1, 0], [0, 0, 0, 1, 1]],
}

matrices = st.integers(min_value=0, max_value=6).flatmap(
    lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n))


@pytest.mark.parametrize("triple,golden,dets", [
    (odd_cycle_triple, ODD, {"g": 2, "sp": 4, "sg": 2, "star": 2}),
    (even_cycle_triple, EVEN, {"g": 0, "sp": 0, "sg": 0, "star": 0}),
])
def test_worked_examples(triple, golden, dets):
    fam = cartan_family(triple())
    for name, rows in golden.items():
        assert fam[name].as_lists() == rows, name
        assert det_exact(fam[name]) == dets[name]
    assert fam["bowtie"] == fam["sg"]


def test_labels_follow_split_idempotents():
    fam = cartan_family(odd_cycle_triple())
    assert fam["sg"].labels == ("1-", "1+", "2", "3")
    assert fam["star"].labels == ("1", "1*", "2", "3")


def test_basis_size_of_odd_example():
    assert path_basis_size(odd_cycle_triple()) == 10


def test_even_example_projective_identities():
    fam = cartan_family(even_cycle_triple())
    col = lambda m, v: fam[m].column(v)  # noqa: E731
    lhs = [a + b + c for a, b, c in zip(col("sg", "1-"), col("sg", "1+"), col("sg", "3"))]
    rhs = [a + b for a, b in zip(col("sg", "2"), col("sg", "4"))]
    assert lhs == rhs
    assert [a + b for a, b in zip(col("star", "1"), col("star", "3"))] == \
        [a + b for a, b in zip(col("star", "2"), col("star", "4"))]


def test_one_vertex():
    t = SkewGentleTriple(Quiver(("1",), ()), frozenset(), RelationSet.make())
    m = cartan_monomial(gentle_presentation(t))
    assert m.as_lists() == [[1]] and det_exact(m) == 1


def test_monomial_cartan_rejects_idempotent_loops():
    _, sg = build_sp(odd_cycle_triple())
    with pytest.raises(StructuralError):
        cartan_monomial(sg)


def test_infinite_dimensional_input_is_reported():
    q = Quiver(("1", "2"), (Arrow("a", "1", "2"), Arrow("b", "2", "1")))
    t = SkewGentleTriple(q, frozenset(), RelationSet.make())
    with pytest.raises(NotFiniteDimensional):
        cartan_monomial(gentle_presentation(t))


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_bareiss_matches_sympy(rows):
    expected = sympy.Matrix(rows).det() if rows else 1
    assert det_exact(rows) == expected


@settings(max_examples=100, deadline=None)
@given(matrices)
def test_rank_matches_sympy(rows):
    expected = sympy.Matrix(rows).rank() if rows else 0
    assert rank_exact(rows) == expected


def _dfs_cycles(q, r):
    """Oriented cycles with every cyclic composition in the relations, by brute force."""
    succ = {}
    for a in q.arrows:
        succ[a.id] = [b.id for b in q.out_arrows(a.target) if (b.id, a.id) in r.monomial]
    found = set()

    def walk(start, path):
        for b in succ[path[-1]]:
            if b == start:
                k = path.index(min(path))
                found.add(tuple(path[k:] + path[:k]))
            elif b not in path and b > start:
                walk(start, path + [b])
    for a in sorted(succ):
        walk(a, [a])
    return sorted(found)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10_000))
def test_cycle_census_matches_depth_first_search(seed):
    q, r = random_gentle_pair(random.Random(seed))
    census = count_full_zero_cycles(q, r)
    assert list(census.cycles) == _dfs_cycles(q, r)


def test_all_relation_choices_on_a_square():
    q = Quiver(("1", "2", "3", "4"), tuple(Arrow(f"a{i}", str(i), str(i % 4 + 1)) for i in range(1, 5)))
    dets = {}
    for r in all_relation_choices(q):
        census = count_full_zero_cycles(q, r)
        try:
            c = cartan_monomial(gentle_presentation(SkewGentleTriple(q, frozenset(), r)))
        except NotFiniteDimensional:
            continue
        dets[len(r.monomial)] = det_exact(c)
        assert det_exact(c) == (0 if census.ec else 2 ** census.oc)
    assert dets[4] == 0


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10_000))
def test_gentle_determinant_formula(seed):
    q, r = random_gentle_pair(random.Random(seed))
    census = count_full_zero_cycles(q, r)
    c = cartan_monomial(gentle_presentation(SkewGentleTriple(q, frozenset(), r)))
    assert det_exact(c) == (0 if census.ec else 2 ** census.oc)


def test_three_determinants_agree_on_random_triples():
    for t in skew_gentle_triples(seed=11, count=40):
        fam = cartan_family(t)
        assert det_exact(fam["sg"]) == det_exact(fam["g"]) == det_exact(fam["star"])


def test_criterion_report():
    rep = check_theorem_4_4(odd_cycle_triple())
    assert rep.determined_by_dimension_vectors and rep.witness is None
    rep = check_theorem_4_4(even_cycle_triple())
    assert not rep.determined_by_dimension_vectors
    assert rep.witness == ("a1", "a2", "a3", "a4")
    assert rep.to_dict()["determined_by_dimension_vectors"] == "no"


def test_sg_cartan_without_special_vertices_is_the_gentle_one():
    t = linear_triple(4, 2)
    assert cartan_skew_gentle(t).as_lists() == cartan_monomial(gentle_presentation(t)).as_lists()
