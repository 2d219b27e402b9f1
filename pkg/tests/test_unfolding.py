import pytest

from skewtile.arcs import NOTCHED, PLAIN, ArcMultiset, compatible_multisets, enumerate_arcs, s_invariant
from skewtile.errors import ArcError, InvariantViolation
from skewtile.examples import TILINGS
from skewtile.unfolding import (FoldingContext, check_injectivity, check_lemma_3_2, check_theorem_3_4,
                                check_theorem_3_4_family)

CTX = {n: FoldingContext(TILINGS[n]()) for n in ("odd", "even", "two", "pendant", "annulus")}
ARCS = {n: enumerate_arcs(c.cx, 4) for n, c in CTX.items()}


def pair_at(ctx, arcs, p):
    """A plain and a notched copy of the shortest arc ending once at ``p``."""
    plain = next(a for a in arcs if a.tag_at(p) == [PLAIN] and a.notched_count() == 0)
    notched = next(a for a in arcs if a.slots == plain.slots and a.tag_at(p) == [NOTCHED])
    return plain, notched


def test_phi_keeps_words_away_from_punctures():
    ctx = CTX["odd"]
    for a in ARCS["odd"]:
        if "P" in a.ends:
            continue
        img = ctx.phi(a)
        assert len(img.slots) == len(a.slots)
        assert tuple(ctx.slot_down(s) for s in img.slots) == a.slots


def test_empty_multiset_maps_to_empty():
    ctx = CTX["odd"]
    assert len(ctx.Phi(ArcMultiset())) == 0
    assert ctx.recover(ArcMultiset()) == ArcMultiset()


@pytest.mark.parametrize("name", ["odd", "two", "pendant"])
def test_conjugate_pair_becomes_one_loop(name):
    ctx = CTX[name]
    p = ctx.source.punctures[0]
    plain, notched = pair_at(ctx, ARCS[name], p)
    out = ctx.Phi(ArcMultiset([plain, notched]))
    assert len(out) == 1
    loop = list(out)[0]
    assert loop.ends[0] == loop.ends[1] == plain.ends[0 if plain.ends[1] == p else 1]
    assert len(loop.slots) == 2 * len(plain.slots) + 1


def test_loop_crosses_the_radius_once_per_side():
    ctx = CTX["two"]
    radius = {p: ctx.unfolded.arcs.index(ctx.source.loop_of(p) + "*") for p in ctx.source.punctures}
    for p in ctx.source.punctures:
        for a in ARCS["two"]:
            if a.tag_at(p) != [PLAIN] or a.notched_count():
                continue
            seams = sum(1 for s in a.slots if ctx.cx.label(s)[0] == ctx.source.loop_of(p) + "*")
            loop = ctx.loop_for(a, p)
            assert ctx.star_vector(ArcMultiset([loop]))[radius[p]] == 1 + 2 * seams


def test_only_the_surplus_tag_survives():
    ctx = CTX["odd"]
    plain, notched = pair_at(ctx, ARCS["odd"], "P")
    out = ctx.Phi(ArcMultiset([plain, notched, notched]))
    assert len(out) == 2
    assert ctx.recover(out, special={"P"}) == ArcMultiset([plain, notched, notched])


def test_recover_inverts_phi_on_single_arcs():
    ctx = CTX["two"]
    for a in ARCS["two"]:
        m = ArcMultiset([a])
        assert ctx.recover(ctx.Phi(m), special=s_invariant(ctx.cx, m)) == m


def test_recover_rejects_curves_outside_the_image():
    ctx = CTX["odd"]
    rejected = 0
    for a in enumerate_arcs(ctx.cx_star, 4):
        try:
            back = ctx.recover(ArcMultiset([a]))
        except ArcError as exc:
            assert "not in the image" in str(exc)
            rejected += 1
        else:
            assert ctx.Phi(back) == ArcMultiset([a])
    assert rejected == 4


def test_recover_rejects_unknown_punctures():
    with pytest.raises(ArcError, match="unknown punctures"):
        CTX["odd"].recover(ArcMultiset(), special={"Z"})


def test_phi_requires_compatibility():
    ctx = CTX["odd"]
    a = next(x for x in ARCS["odd"] if x.tags == (PLAIN, NOTCHED) and len(x.slots) == 2)
    b = next(x for x in ARCS["odd"] if x.slots != a.slots and len(x.slots) == 2 and x.tags == (PLAIN, PLAIN)
             and "P" in x.ends)
    with pytest.raises(ArcError):
        ctx.Phi(ArcMultiset([a, b]))


@pytest.mark.parametrize("name", ["odd", "two", "pendant", "annulus"])
def test_identities_and_round_trip_on_small_families(name):
    ctx = CTX[name]
    for m in compatible_multisets(ctx.cx, ARCS[name], 2):
        checks = check_lemma_3_2(ctx, m)
        assert all(c.ok for c in checks), [c.to_dict() for c in checks if not c.ok]
        assert ctx.recover(ctx.Phi(m), special=s_invariant(ctx.cx, m)) == m


def test_identity_names_cover_every_arc():
    ctx = CTX["two"]
    names = [c.name for c in check_lemma_3_2(ctx, ArcMultiset())]
    assert sum(n.startswith("radius") for n in names) == 2
    assert sum(n.startswith("loop") for n in names) == 2
    assert "arc[x]" in names


def test_equivalences_agree_on_two_punctures():
    ctx = CTX["two"]
    fam = compatible_multisets(ctx.cx, ARCS["two"], 2)
    rep = check_theorem_3_4_family(ctx, fam)
    assert rep.ok and rep.multisets == len(fam)
    for m, n in zip(fam[:30], fam[1:31]):
        b1, b2 = check_theorem_3_4(ctx, m, n)
        assert b1 == b2


def test_injectivity_without_obstructions():
    ctx = CTX["odd"]
    rep = check_injectivity(ctx, compatible_multisets(ctx.cx, ARCS["odd"], 3))
    assert rep.hypothesis and rep.injective


def test_collision_with_an_even_square():
    ctx = CTX["even"]
    rep = check_injectivity(ctx, compatible_multisets(ctx.cx, ARCS["even"], 3))
    assert not rep.hypothesis and not rep.injective
    m, n = rep.collisions[0]
    assert m != n and ctx.tagged_vector(m) == ctx.tagged_vector(n)


def test_injectivity_check_raises_on_a_forged_collision():
    ctx = CTX["odd"]
    a = ARCS["odd"][0]
    forged = [ArcMultiset([a]), ArcMultiset([a, a])]
    ctx2 = FoldingContext(ctx.source)
    ctx2.tagged_vector = lambda m: (0,)
    with pytest.raises(InvariantViolation):
        check_injectivity(ctx2, forged)
