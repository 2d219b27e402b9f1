import pytest

from skewtile.constructions import (build_bowtie, build_sp, build_star, gentle_presentation,
                                    presentation_from_dict, presentation_to_dict)
from skewtile.examples import even_cycle_triple, linear_triple, odd_cycle_triple
from skewtile.generators import skew_gentle_triples
from skewtile.quiver import RelationSet, validate_gentle


def test_sp_adds_one_loop_per_special_vertex():
    t = odd_cycle_triple()
    sp, sg = build_sp(t)
    loops = [a for a in sp.quiver.arrows if a.is_loop]
    assert [a.source for a in loops] == ["1"]
    assert sp.relations.markers == {loops[0].id: "nilpotent"}
    assert sg.relations.markers == {loops[0].id: "idempotent"}
    assert [e.label for e in sg.idempotents] == ["1-", "1+", "2", "3"]


def test_sp_of_odd_cycle_is_gentle():
    sp, _ = build_sp(odd_cycle_triple())
    rel = sp.relations
    mono = set(rel.monomial) | {(a, a) for a, m in rel.loop_markers}
    assert validate_gentle(sp.quiver, RelationSet.make(mono)).ok


def test_bowtie_of_odd_cycle():
    p = build_bowtie(odd_cycle_triple())
    assert sorted(p.quiver.vertices) == ["1+", "1-", "2", "3"]
    assert len(p.quiver.arrows) == 5
    assert len(p.relations.binomial) == 1
    assert len(p.relations.monomial) == 4
    b = p.relations.binomial[0]
    assert {b.plus[0], b.minus[0]} != {b.plus[1], b.minus[1]}


def test_bowtie_of_even_cycle_has_one_binomial_through_the_special_vertex():
    p = build_bowtie(even_cycle_triple())
    assert len(p.relations.binomial) == 1
    assert len(p.quiver.arrows) == 6


def test_star_is_gentle_with_a_two_cycle():
    p = build_star(odd_cycle_triple())
    assert sorted(p.quiver.vertices) == ["1", "1*", "2", "3"]
    assert validate_gentle(p.quiver, p.relations).ok
    two_cycle = [a for a in p.quiver.arrows if {a.source, a.target} == {"1", "1*"}]
    assert len(two_cycle) == 2


def test_no_special_vertex_leaves_everything_unchanged():
    t = linear_triple(3, 1)
    sp, sg = build_sp(t)
    assert sp.quiver == t.quiver
    assert build_star(t).quiver.vertices == t.quiver.vertices
    assert not build_bowtie(t).relations.binomial


def test_star_is_gentle_on_random_triples():
    for t in skew_gentle_triples(seed=3, count=60):
        p = build_star(t)
        assert validate_gentle(p.quiver, p.relations).ok


@pytest.mark.parametrize("builder", [gentle_presentation, build_bowtie, build_star,
                                     lambda t: build_sp(t)[1]])
def test_presentation_json_round_trip(builder):
    p = builder(odd_cycle_triple())
    back = presentation_from_dict(presentation_to_dict(p))
    assert back.relations == p.relations or (
        back.relations.monomial == p.relations.monomial
        and back.relations.markers == p.relations.markers
        and set(back.relations.binomial) == set(p.relations.binomial))
    assert [e.label for e in back.idempotents] == [e.label for e in p.idempotents]
