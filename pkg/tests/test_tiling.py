import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from skewtile.constructions import build_sp, build_star
from skewtile.errors import ParseError, StructuralError
from skewtile.examples import TILINGS, even_cycle_tiling, odd_cycle_tiling, square_tiling
from skewtile.generators import disc_tiling, random_disc_tiling
from skewtile.quiver import find_isomorphism, validate_gentle
from skewtile.tiling import (Tile, Tiling, arc_edge, extract_algebra, obstruction_tiles, original_tiling,
                             segment_edge, tagged_version, tiling_from_dict, tiling_svg, triple_of, unfold,
                             validate_tiling)


@pytest.mark.parametrize("name", sorted(TILINGS))
def test_builtin_tilings_are_valid(name):
    rep = validate_tiling(TILINGS[name]())
    assert rep.ok, rep.problems


@pytest.mark.parametrize("name", sorted(TILINGS))
def test_unfolding_realizes_the_star_algebra(name):
    t = TILINGS[name]()
    u = extract_algebra(unfold(t))
    s = build_star(triple_of(t))
    assert find_isomorphism(u.quiver, u.relations, s.quiver, s.relations) is not None


@pytest.mark.parametrize("name", sorted(TILINGS))
def test_original_tiling_realizes_the_loop_algebra(name):
    t = TILINGS[name]()
    o = extract_algebra(original_tiling(t))
    sp, _ = build_sp(triple_of(t))
    assert find_isomorphism(o.quiver, o.relations, sp.quiver, sp.relations) is not None


def test_odd_tiling_gives_the_odd_triple():
    t = triple_of(odd_cycle_tiling())
    assert t.special == frozenset({"1"})
    assert len(t.quiver.arrows) == 3 and len(t.relations.monomial) == 3
    assert validate_gentle(t.quiver, t.relations).ok


def test_unfold_turns_each_monogon_into_a_quadrilateral():
    u = unfold(odd_cycle_tiling())
    mono = u.tile("mono")
    assert mono.type == "IV" and mono.m == 4
    assert "1*" in u.arcs and not u.punctures


def test_tagged_labels_double_the_loops():
    assert tagged_version(odd_cycle_tiling()).arcs == ("1-", "1+", "2", "3")
    pd = tagged_version(odd_cycle_tiling()).punctures[0]
    assert (pd.puncture, pd.loop, pd.base) == ("P", "1", "b")


def test_obstruction_tiles():
    assert obstruction_tiles(even_cycle_tiling()) == ["sq"]
    assert obstruction_tiles(odd_cycle_tiling()) == []
    assert obstruction_tiles(TILINGS["annulus"]()) == ["D"]


@pytest.mark.parametrize("name", sorted(TILINGS))
def test_json_round_trip(name):
    t = TILINGS[name]()
    back = tiling_from_dict(json.loads(json.dumps(t.to_dict())))
    assert back == t


def test_unglued_arc_is_reported():
    t = Tiling((Tile("A", "III", (arc_edge("d", 0), segment_edge("3", "4"), segment_edge("4", "1")),
                     ("1", "3", "4")),))
    rep = validate_tiling(t)
    assert not rep.ok and any("arc d" in p for p in rep.problems)


def test_segment_must_join_its_corners():
    t = square_tiling()
    bad = Tile("A", "III", (arc_edge("d", 0), segment_edge("4", "3"), segment_edge("4", "1")), ("1", "3", "4"))
    t2 = Tiling((bad,) + t.tiles[1:])
    assert any("does not join" in p for p in validate_tiling(t2).problems)


def test_wrong_type_is_reported():
    t = square_tiling()
    bad = Tile("A", "V", t.tiles[0].boundary, t.tiles[0].corners)
    assert not validate_tiling(Tiling((bad,) + t.tiles[1:])).ok


def test_unknown_type_and_duplicate_id_are_structural():
    t = square_tiling()
    with pytest.raises(StructuralError):
        Tiling((Tile("A", "VII", t.tiles[0].boundary, t.tiles[0].corners),))
    with pytest.raises(StructuralError):
        Tiling((t.tiles[0], t.tiles[0]))


def test_malformed_edge_is_a_parse_error():
    doc = square_tiling().to_dict()
    doc["tiles"][0]["boundary"][0] = {"arc": "d", "side": 2}
    with pytest.raises(ParseError, match="side"):
        tiling_from_dict(doc)
    del doc["tiles"][0]["corners"]
    with pytest.raises(ParseError):
        tiling_from_dict(doc)


def test_svg_mentions_every_arc():
    svg = tiling_svg(odd_cycle_tiling())
    assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")
    for arc in odd_cycle_tiling().arcs:
        assert f">{arc}<" in svg


def test_disc_tiling_of_a_hexagon():
    t = disc_tiling(6, [(1, 3), (3, 5), (1, 5)])
    assert validate_tiling(t).ok
    assert sorted(x.type for x in t.tiles) == ["III", "III", "III", "V"]


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_random_disc_tilings_are_valid_and_gentle(seed):
    t = random_disc_tiling(random.Random(seed))
    assert validate_tiling(t).ok
    p = extract_algebra(t)
    assert validate_gentle(p.quiver, p.relations).ok
