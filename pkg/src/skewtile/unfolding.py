"""Transport of tagged arcs between a punctured tiling and its unfolding.

Unfolding replaces each punctured monogon by a quadrilateral around a new
boundary component whose single marked point stands for the puncture.  On the
cut complexes this is the identity on every slot except the second side of
the radius, which moves from edge 2 of the punctured triangle to edge 3 of
the quadrilateral.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .arcs import (NOTCHED, PLAIN, ArcMultiset, CutComplex, TaggedArc, arc_vector,
                   chord_visits, crossing_count, cuts_punctured_monogon, curve_problems, endpoints,
                   is_simple, make_arc, require_compatible, s_invariant, visits)
from .errors import ArcError, InvariantViolation
from .tiling import Tiling, radius_id, tagged_version, unfold


@dataclass
class FoldingContext:
    """Both cut complexes plus the per-puncture correspondence."""

    source: Tiling
    unfolded: Tiling = field(init=False)
    cx: CutComplex = field(init=False)
    cx_star: CutComplex = field(init=False)

    def __post_init__(self):
        self.unfolded = unfold(self.source)
        self.cx = CutComplex(self.source)
        self.cx_star = CutComplex(self.unfolded)
        self.tagged = tagged_version(self.source)
        self.quad_of = {p: self.source.loop_tile(p).id for p in self.source.punctures}
        self.puncture_of = {q: p for p, q in self.quad_of.items()}

    # -- slot maps
    def slot_up(self, slot):
        pid, k = slot
        if pid in self.puncture_of and k == 2:
            return (pid, 3)
        return slot

    def slot_down(self, slot):
        pid, k = slot
        if pid in self.puncture_of:
            if k == 2:
                raise ArcError(f"slot {slot} is a boundary segment of the unfolded tiling")
            if k == 3:
                return (pid, 2)
        return slot

    # -- phi
    def phi(self, arc: TaggedArc) -> TaggedArc:
        slots = tuple(self.slot_up(s) for s in arc.slots)
        out = make_arc(self.cx_star, slots)
        if not is_simple(self.cx_star, out.slots):
            raise InvariantViolation(f"image of {arc} is not simple")
        return out

    def loop_for(self, minus: TaggedArc, puncture: str) -> TaggedArc:
        """The loop around the new boundary and the image of ``minus``."""
        w = tuple(self.slot_up(s) for s in minus.slots)
        if endpoints(self.cx_star, w)[1] != puncture:
            w = tuple(self.cx_star.twin(s) for s in reversed(w))
        q = self.quad_of[puncture]
        back = tuple(self.cx_star.twin(w[t]) for t in range(len(w) - 2, -1, -1))
        loop = make_arc(self.cx_star, w + ((q, 3), (q, 0)) + back)
        if not is_simple(self.cx_star, loop.slots):
            raise InvariantViolation(f"wrapping loop for {minus} is not simple")
        return loop

    def Phi(self, m: ArcMultiset) -> ArcMultiset:
        require_compatible(self.cx, m)
        remaining = dict(m.counter)
        out = []
        for p in sorted(self.source.punctures):
            plain = [a for a in sorted(remaining) if a.tag_at(p) == [PLAIN] and remaining[a]]
            notched = [a for a in sorted(remaining) if a.tag_at(p) == [NOTCHED] and remaining[a]]
            k = min(sum(remaining[a] for a in plain), sum(remaining[a] for a in notched))
            if not k:
                continue
            loop = self.loop_for(plain[0], p)
            for group in (plain, notched):
                left = k
                for a in group:
                    take = min(left, remaining[a])
                    remaining[a] -= take
                    left -= take
            out += [loop] * k
        for a, n in remaining.items():
            out += [self.phi(a)] * n
        return ArcMultiset(out)

    # -- recovery
    def _wrap_split(self, slots: tuple):
        n = len(slots)
        if n < 3 or n % 2 == 0:
            return None
        r = (n - 1) // 2
        mid, back = slots[r], slots[r + 1]
        q = mid[0]
        if q not in self.puncture_of or mid[1] not in (1, 3) or back != (q, 0):
            return None
        if self.cx_star.twin(slots[r - 1]) != back:
            return None
        if any(slots[r + 2 + i] != self.cx_star.twin(slots[r - 2 - i]) for i in range(r - 1)):
            return None
        return q, slots[:r]

    def _down(self, slots: tuple, special: frozenset, at_p: str | None = None,
              tag_at_p: str = PLAIN) -> TaggedArc:
        down = tuple(self.slot_down(s) for s in slots)
        problems = curve_problems(self.cx, down)
        if problems:
            raise ArcError("not in the image of the unfolding map: "
                           + "; ".join(f"position {i}: {msg}" for i, msg in problems))
        ends = endpoints(self.cx, down)
        tags = []
        for e in ends:
            if e == at_p:
                tags.append(tag_at_p)
            elif e in self.source.punctures:
                tags.append(NOTCHED if e in special else PLAIN)
            else:
                tags.append(PLAIN)
        if not is_simple(self.cx, down) or cuts_punctured_monogon(self.cx, down):
            raise ArcError(f"not in the image of the unfolding map: {down} is not permissible")
        return make_arc(self.cx, down, tags)

    def recover(self, mstar: ArcMultiset, special: Iterable[str] = ()) -> ArcMultiset:
        special = frozenset(special)
        unknown = special - set(self.source.punctures)
        if unknown:
            raise ArcError(f"unknown punctures {sorted(unknown)}")
        out = []
        for a, n in mstar.counter.items():
            split = self._wrap_split(a.slots) or self._wrap_split(
                tuple(self.cx_star.twin(s) for s in reversed(a.slots)))
            if split:
                q, w = split
                p = self.puncture_of[q]
                out += [self._down(w, special, p, PLAIN), self._down(w, special, p, NOTCHED)] * n
            else:
                out += [self._down(a.slots, special)] * n
        return ArcMultiset(out)

    # -- vectors on the unfolded side, by crossing chords only
    def star_vector(self, mstar: ArcMultiset) -> tuple[int, ...]:
        cx = self.cx_star
        chords = [chord_visits(cx, x) for x in self.unfolded.arcs]
        total = [0] * len(chords)
        for a, n in mstar.counter.items():
            v = visits(cx, a.slots)
            for i, c in enumerate(chords):
                total[i] += n * crossing_count(cx, c, v)
        return tuple(total)

    def tagged_vector(self, m: ArcMultiset) -> tuple[int, ...]:
        total = [0] * len(self.tagged.arcs)
        for a, n in m.counter.items():
            for i, x in enumerate(arc_vector(self.cx, self.tagged, a)):
                total[i] += n * x
        return tuple(total)


# ---------------------------------------------------------------- checks

@dataclass
class IdentityCheck:
    name: str
    lhs: int
    rhs: int

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs

    def to_dict(self) -> dict:
        return {"identity": self.name, "unfolded": self.lhs, "tagged": self.rhs, "ok": self.ok}


def check_lemma_3_2(ctx: FoldingContext, m: ArcMultiset) -> list[IdentityCheck]:
    """Unfolded-side chord counts against tagged-side counts for every arc."""
    star = dict(zip(ctx.unfolded.arcs, ctx.star_vector(ctx.Phi(m))))
    tag = dict(zip(ctx.tagged.arcs, ctx.tagged_vector(m)))
    special = s_invariant(ctx.cx, m)
    out = []
    loops = set()
    for pd in ctx.tagged.punctures:
        loops.add(pd.loop)
        radius = star[radius_id(pd.loop)]
        if pd.puncture in special:
            out.append(IdentityCheck(f"radius[{pd.puncture}] = plus (puncture in S)", radius, tag[pd.plus]))
        else:
            out.append(IdentityCheck(f"radius[{pd.puncture}] = minus (puncture not in S)", radius, tag[pd.minus]))
        out.append(IdentityCheck(f"loop[{pd.puncture}] = minus + plus", star[pd.loop],
                                 tag[pd.minus] + tag[pd.plus]))
    for a in ctx.source.arcs:
        if a not in loops:
            out.append(IdentityCheck(f"arc[{a}]", star[a], tag[a]))
    return out


@dataclass
class EquivalenceReport:
    multisets: int
    pairs_equal_tagged: int
    pairs_equal_unfolded: int
    mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _partition(keys: list) -> dict:
    groups: dict = {}
    for i, k in enumerate(keys):
        groups.setdefault(k, []).append(i)
    return groups


def check_theorem_3_4(ctx: FoldingContext, m: ArcMultiset, n: ArcMultiset) -> tuple[bool, bool]:
    """(equal tagged vectors, equal unfolded vectors and equal S) for one pair."""
    b1 = ctx.tagged_vector(m) == ctx.tagged_vector(n)
    b2 = (ctx.star_vector(ctx.Phi(m)) == ctx.star_vector(ctx.Phi(n))
          and s_invariant(ctx.cx, m) == s_invariant(ctx.cx, n))
    return b1, b2


def check_theorem_3_4_family(ctx: FoldingContext, family: list[ArcMultiset]) -> EquivalenceReport:
    """Both equivalence relations over every pair of the family, via their partitions."""
    k1 = [ctx.tagged_vector(m) for m in family]
    k2 = [(ctx.star_vector(ctx.Phi(m)), s_invariant(ctx.cx, m)) for m in family]
    g1, g2 = _partition(k1), _partition(k2)
    mismatches = []
    for i in range(len(family)):
        a = set(g1[k1[i]])
        b = set(g2[k2[i]])
        if a != b:
            j = min(a ^ b)
            mismatches.append((family[i], family[j]))
    pairs = lambda g: sum(len(v) * (len(v) - 1) // 2 for v in g.values())  # noqa: E731
    return EquivalenceReport(len(family), pairs(g1), pairs(g2), mismatches)


@dataclass
class InjectivityReport:
    hypothesis: bool
    multisets: int
    collisions: list

    @property
    def injective(self) -> bool:
        return not self.collisions

    def to_dict(self, cx: CutComplex | None = None) -> dict:
        return {"hypothesis_holds": self.hypothesis, "multisets": self.multisets,
                "injective": self.injective, "collisions": len(self.collisions)}


def check_injectivity(ctx: FoldingContext, family: list[ArcMultiset], limit: int = 10) -> InjectivityReport:
    """Search the family for distinct multisets with equal tagged vectors."""
    from .tiling import obstruction_tiles

    hypothesis = not obstruction_tiles(ctx.source)
    seen: dict = {}
    collisions = []
    for m in family:
        v = ctx.tagged_vector(m)
        if v in seen and seen[v] != m:
            collisions.append((seen[v], m))
            if len(collisions) >= limit:
                break
        seen.setdefault(v, m)
    if hypothesis and collisions:
        raise InvariantViolation(f"equal vectors for distinct multisets: {collisions[0]}")
    return InjectivityReport(hypothesis, len(family), collisions)
