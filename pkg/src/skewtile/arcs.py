"""Tagged permissible arcs, intersection numbers and intersection vectors.

Curves live on a cut complex: every tile is refined into a disc polygon by
cutting along a seam from a corner to its hole (types I, II) or to its
puncture (type VI).  A curve is then the sequence of edge sides it exits
through ("slots"); it enters the next polygon through the twin slot.

Intersections are counted on the universal cover: two visits sequences that
share a run of consecutive polygons either cross once in that run or not at
all, decided by comparing the positions where they enter and leave the run.
Boundary positions of an ``m``-gon are ``2k`` for corner ``k`` and ``2k+1`` for
edge ``k``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations, product
from typing import Iterable, Mapping

from .errors import ArcError, ParseError
from .tiling import TaggedTriangulation, Tiling, radius_id, require_valid, tagged_version
from .quiver import _check_format

PLAIN, NOTCHED = "plain", "notched"
ARC_FORMAT = "skewtile.arc/1"
MULTISET_FORMAT = "skewtile.multiset/1"

MARKED, PUNCTURE, HOLE = "marked", "puncture", "hole"


@dataclass(frozen=True)
class Polygon:
    id: str
    edges: tuple  # (kind, arc id or None, side or None); kind in arc/seam/segment/hole
    corners: tuple[str, ...]
    corner_kinds: tuple[str, ...]
    punctured: bool = False  # refined once-punctured monogon

    @property
    def m(self) -> int:
        return len(self.edges)


def hole_seam(tile_id: str) -> str:
    return f"~{tile_id}"


class CutComplex:
    """Disc polygons refining the tiles of a tiling."""

    def __init__(self, tiling: Tiling):
        self.tiling = require_valid(tiling)
        self.t_arcs = frozenset(tiling.arcs)
        polys = {}
        for tile in tiling.tiles:
            corners = list(tile.corners)
            kinds = [MARKED] * tile.m
            edges = [("arc", e.arc, e.side) if e.is_arc else ("segment", None, None) for e in tile.boundary]
            punctured = False
            if tile.type == "VI":
                seam = radius_id(tile.boundary[0].arc)
                edges = [edges[0], ("seam", seam, 0), ("seam", seam, 1)]
                corners = [corners[0], corners[0], tile.puncture]
                kinds = [MARKED, MARKED, PUNCTURE]
                punctured = True
            elif tile.type in ("I", "II"):
                seam = hole_seam(tile.id)
                edges = edges + [("seam", seam, 0), ("hole", None, None), ("seam", seam, 1)]
                corners = corners + [corners[0], tile.hole, tile.hole]
                kinds = kinds + [MARKED, HOLE, HOLE]
            polys[tile.id] = Polygon(tile.id, tuple(edges), tuple(corners), tuple(kinds), punctured)
        self.polygons = polys
        self.slot_of = {}
        for p in polys.values():
            for k, (kind, arc, side) in enumerate(p.edges):
                if kind in ("arc", "seam"):
                    self.slot_of[(arc, side)] = (p.id, k)
        self._twin = {}
        for (arc, side), slot in self.slot_of.items():
            self._twin[slot] = self.slot_of[(arc, 1 - side)]

    # -- basic queries
    def poly(self, pid: str) -> Polygon:
        return self.polygons[pid]

    def twin(self, slot) -> tuple:
        return self._twin[slot]

    def label(self, slot) -> tuple[str, int]:
        kind, arc, side = self.polygons[slot[0]].edges[slot[1]]
        return arc, side

    def is_crossable(self, slot) -> bool:
        return slot in self._twin

    def is_t(self, slot) -> bool:
        return self.label(slot)[0] in self.t_arcs

    def corner(self, pid: str, k: int) -> tuple[str, str]:
        p = self.polygons[pid]
        k %= p.m
        return p.corners[k], p.corner_kinds[k]

    def slots(self):
        return sorted(self._twin)

    # -- curve rules
    def end_corner(self, entry) -> tuple[str, str, int]:
        """Where a curve entering through ``entry`` may stop: corner k-1."""
        pid, k = entry
        p = self.polygons[pid]
        idx = (k - 1) % p.m
        return p.corners[idx], p.corner_kinds[idx], idx

    def end_allowed(self, entry) -> bool:
        pid, k = entry
        p = self.polygons[pid]
        _, kind, _ = self.end_corner(entry)
        if p.punctured:
            # inside a once-punctured monogon the only end is at the puncture
            return k == 0 and kind == PUNCTURE
        return kind == MARKED

    def turn_allowed(self, entry, exit_) -> bool:
        if entry[0] != exit_[0] or not self.is_crossable(exit_):
            return False
        p = self.polygons[entry[0]]
        i, j = entry[1], exit_[1]
        if j == (i + 1) % p.m:
            cut = (i + 1) % p.m
        elif j == (i - 1) % p.m:
            cut = i
        else:
            return False
        return p.corner_kinds[cut] == MARKED


@dataclass(frozen=True)
class Visit:
    poly: str
    pin: int
    pout: int


def reverse_slots(cx: CutComplex, slots: tuple) -> tuple:
    return tuple(cx.twin(s) for s in reversed(slots))


def canonical_slots(cx: CutComplex, slots: tuple) -> tuple:
    return min(tuple(slots), reverse_slots(cx, slots))


def curve_problems(cx: CutComplex, slots: tuple) -> list[tuple[int, str]]:
    """Itemized violations of the end and corner-cutting rules; empty when fine."""
    out = []
    if not slots:
        return [(0, "empty crossing word: the curve does not cross any arc")]
    for i, s in enumerate(slots):
        if s not in cx._twin:
            out.append((i, f"slot {s} is not a crossable edge"))
    if out:
        return out
    if not any(cx.is_t(s) for s in slots):
        out.append((0, "crosses no arc of the triangulation"))
    if not _start_allowed(cx, slots[0]):
        out.append((0, "start does not match an allowed end configuration"))
    for i in range(len(slots) - 1):
        if not cx.turn_allowed(cx.twin(slots[i]), slots[i + 1]):
            out.append((i + 1, "consecutive crossings do not cut an angle at a marked point"))
    if not cx.end_allowed(cx.twin(slots[-1])):
        out.append((len(slots) - 1, "end does not match an allowed end configuration"))
    return out


def _start_allowed(cx: CutComplex, first) -> bool:
    # starting through ``first`` is ending (reversed) through ``first``
    return cx.end_allowed(first)


def visits(cx: CutComplex, slots: tuple) -> list[Visit]:
    out = []
    pid, k = slots[0]
    m = cx.poly(pid).m
    out.append(Visit(pid, 2 * ((k - 1) % m), 2 * k + 1))
    for a, b in zip(slots, slots[1:]):
        pid, i = cx.twin(a)
        out.append(Visit(pid, 2 * i + 1, 2 * b[1] + 1))
    pid, i = cx.twin(slots[-1])
    m = cx.poly(pid).m
    out.append(Visit(pid, 2 * i + 1, 2 * ((i - 1) % m)))
    return out


def endpoints(cx: CutComplex, slots: tuple) -> tuple[str, str]:
    v = visits(cx, slots)
    return (cx.poly(v[0].poly).corners[v[0].pin // 2], cx.poly(v[-1].poly).corners[v[-1].pout // 2])


# ---------------------------------------------------------------- crossing runs

def _between(x, a, b, n):
    """x strictly inside the cyclic open interval (a, b) of Z/n."""
    return 0 < (x - a) % n < (b - a) % n


def _runs_count(cx: CutComplex, g: list[Visit], d: list[Visit], reversed_: bool, same: bool) -> int:
    total = 0
    for i, vg in enumerate(g):
        for j, vd in enumerate(d):
            if vg.poly != vd.poly or vg.pin == vd.pin:
                continue
            if same and not reversed_ and i == j:
                continue
            L = 0
            while (i + L < len(g) - 1 and j + L < len(d) - 1 and g[i + L].pout == d[j + L].pout
                   and g[i + L].pout % 2 == 1):
                L += 1
            eg, ed = g[i + L], d[j + L]
            if eg.pout == ed.pout:
                continue  # common endpoint of the two lifts
            if L == 0:
                if reversed_:
                    continue
                a, b, c, e = vg.pin, vg.pout, vd.pin, vd.pout
                if len({a, b, c, e}) < 4:
                    continue
                n = 2 * cx.poly(vg.poly).m
                if _between(c, a, b, n) != _between(e, a, b, n):
                    total += 1
                continue
            n0 = 2 * cx.poly(vg.poly).m
            n1 = 2 * cx.poly(eg.poly).m
            s_edge, e_edge = vg.pout, eg.pin
            kpg, kpd = (vg.pin - s_edge) % n0, (vd.pin - s_edge) % n0
            kqg, kqd = (eg.pout - e_edge) % n1, (ed.pout - e_edge) % n1
            if (kpg < kpd) == (kqg < kqd):
                total += 1
    return total


def _reverse_visits(v: list[Visit]) -> list[Visit]:
    return [Visit(x.poly, x.pout, x.pin) for x in reversed(v)]


def crossing_count(cx: CutComplex, g: list[Visit], d: list[Visit], same: bool = False) -> int:
    """Minimal number of interior crossings between two visit sequences."""
    n = _runs_count(cx, g, d, False, same) + _runs_count(cx, g, _reverse_visits(d), True, same)
    return n // 2 if same else n


def chord_visits(cx: CutComplex, arc: str) -> list[Visit]:
    """The arc ``arc`` drawn as a chord along one of its own edges."""
    pid, k = cx.slot_of[(arc, 0)]
    m = cx.poly(pid).m
    return [Visit(pid, 2 * k, 2 * ((k + 1) % m))]


# ---------------------------------------------------------------- tagged arcs

@dataclass(frozen=True, order=True)
class TaggedArc:
    """Canonically oriented crossing word with the anchors and tags of both ends."""

    slots: tuple
    ends: tuple[str, str]
    tags: tuple[str, str]

    @property
    def untagged(self) -> tuple:
        return self.slots

    def tag_at(self, point: str) -> list[str]:
        return [t for e, t in zip(self.ends, self.tags) if e == point]

    def notched_count(self) -> int:
        return sum(1 for t in self.tags if t == NOTCHED)


def make_arc(cx: CutComplex, slots: Iterable, tags=(PLAIN, PLAIN)) -> TaggedArc:
    slots = tuple(tuple(s) for s in slots)
    probs = curve_problems(cx, slots)
    if probs:
        raise ArcError("; ".join(f"position {i}: {msg}" for i, msg in probs))
    ends = endpoints(cx, slots)
    tags = tuple(tags)
    rev = reverse_slots(cx, slots)
    if (rev, (tags[1], tags[0])) < (slots, tags):
        slots, ends, tags = rev, (ends[1], ends[0]), (tags[1], tags[0])
    arc = TaggedArc(slots, ends, tags)
    problems = tag_problems(cx, arc)
    if problems:
        raise ArcError("; ".join(problems))
    return arc


def tag_problems(cx: CutComplex, arc: TaggedArc) -> list[str]:
    out = []
    punctures = set(cx.tiling.punctures)
    for e, t in zip(arc.ends, arc.tags):
        if t not in (PLAIN, NOTCHED):
            out.append(f"unknown tag {t!r}")
        elif t == NOTCHED and e not in punctures:
            out.append(f"end at boundary point {e} must be plain")
    if arc.ends[0] == arc.ends[1] and arc.ends[0] in punctures and arc.tags[0] != arc.tags[1]:
        out.append("a loop at a puncture must carry equal tags at both ends")
    return out


def cuts_punctured_monogon(cx: CutComplex, slots: tuple) -> bool:
    """The loop runs out to a punctured monogon, around the puncture and straight back."""
    n = len(slots)
    if n < 3 or n % 2 == 0:
        return False
    r = (n - 1) // 2
    seam, back = slots[r], slots[r + 1]
    p = cx.poly(seam[0])
    if not p.punctured or seam[1] not in (1, 2) or back != (p.id, 0):
        return False
    if cx.twin(slots[r - 1]) != back:
        return False
    return all(slots[r + 2 + i] == cx.twin(slots[r - 2 - i]) for i in range(r - 1))


def is_simple(cx: CutComplex, slots: tuple) -> bool:
    v = visits(cx, slots)
    return crossing_count(cx, v, v, same=True) == 0


def permissible_problems(cx: CutComplex, arc: TaggedArc) -> list[str]:
    out = [f"position {i}: {msg}" for i, msg in curve_problems(cx, arc.slots)]
    if out:
        return out
    if not is_simple(cx, arc.slots):
        out.append("curve intersects itself")
    if cuts_punctured_monogon(cx, arc.slots):
        out.append("loop cuts out a once-punctured monogon")
    out += tag_problems(cx, arc)
    ends = endpoints(cx, arc.slots)
    if ends != arc.ends:
        out.append(f"anchors {arc.ends} do not match the crossing word, which joins {ends}")
    return out


def validate_permissible(cx: CutComplex, arc: TaggedArc) -> dict:
    problems = permissible_problems(cx, arc)
    return {"ok": not problems, "problems": problems}


def enumerate_curves(cx: CutComplex, max_crossings: int) -> list[tuple]:
    """Canonical crossing words of permissible untagged curves with at most
    ``max_crossings`` crossings of triangulation arcs (seam crossings are free)."""
    found = set()

    def grow(word, tcount):
        last = word[-1]
        entry = cx.twin(last)
        if tcount >= 1 and cx.end_allowed(entry):
            found.add(canonical_slots(cx, word))
        pid, i = entry
        m = cx.poly(pid).m
        for j in ((i + 1) % m, (i - 1) % m):
            nxt = (pid, j)
            if not cx.turn_allowed(entry, nxt):
                continue
            cost = tcount + (1 if cx.is_t(nxt) else 0)
            if cost <= max_crossings:
                grow(word + (nxt,), cost)

    for s in cx.slots():
        if not _start_allowed(cx, s):
            continue
        cost = 1 if cx.is_t(s) else 0
        if cost <= max_crossings:
            grow((s,), cost)
    out = [w for w in found if is_simple(cx, w) and not cuts_punctured_monogon(cx, w)]
    return sorted(out, key=lambda w: (len(w), w))


def tag_options(cx: CutComplex, slots: tuple) -> list[tuple[str, str]]:
    ends = endpoints(cx, slots)
    punctures = set(cx.tiling.punctures)
    opts0 = (PLAIN, NOTCHED) if ends[0] in punctures else (PLAIN,)
    opts1 = (PLAIN, NOTCHED) if ends[1] in punctures else (PLAIN,)
    out = []
    for a in opts0:
        for b in opts1:
            if ends[0] == ends[1] and ends[0] in punctures and a != b:
                continue
            out.append((a, b))
    return out


def enumerate_arcs(cx: CutComplex, max_crossings: int) -> list[TaggedArc]:
    arcs = set()
    for w in enumerate_curves(cx, max_crossings):
        for tags in tag_options(cx, w):
            arcs.add(make_arc(cx, w, tags))
    return sorted(arcs, key=lambda a: (len(a.slots), a.slots, a.tags))


def t_crossings(cx: CutComplex, arc: TaggedArc) -> int:
    return sum(1 for s in arc.slots if cx.is_t(s))


# ---------------------------------------------------------------- intersection numbers

@dataclass(frozen=True)
class IntParts:
    A: int
    C: int
    D: int

    @property
    def total(self) -> int:
        return self.A + self.C + self.D


def is_one_notched(arc: TaggedArc) -> bool:
    return arc.notched_count() == 1


def conjugate(a: TaggedArc, b: TaggedArc) -> bool:
    return a.slots == b.slots and (is_one_notched(a) != is_one_notched(b))


def int_components(cx: CutComplex, g: TaggedArc, d: TaggedArc) -> IntParts:
    same = g.slots == d.slots
    A = crossing_count(cx, visits(cx, g.slots), visits(cx, d.slots), same=same)
    C = -1 if conjugate(g, d) else 0
    punctures = set(cx.tiling.punctures)
    D = sum(1 for e1, t1 in zip(g.ends, g.tags) for e2, t2 in zip(d.ends, d.tags)
            if e1 == e2 and e1 in punctures and t1 != t2)
    return IntParts(A, C, D)


def compatible(cx: CutComplex, g: TaggedArc, d: TaggedArc) -> bool:
    return int_components(cx, g, d).total == 0


class ArcMultiset:
    """Finite multiset of tagged arcs on one cut complex."""

    def __init__(self, arcs: Iterable[TaggedArc] = ()):
        self.counter = Counter(arcs)

    def __iter__(self):
        for a in sorted(self.counter):
            for _ in range(self.counter[a]):
                yield a

    def __len__(self):
        return sum(self.counter.values())

    def __eq__(self, other):
        return isinstance(other, ArcMultiset) and self.counter == other.counter

    def __hash__(self):
        return hash(self.key())

    def key(self) -> tuple:
        return tuple(sorted(self.counter.items()))

    def __repr__(self):
        return f"ArcMultiset({list(self)})"

    def distinct(self) -> list[TaggedArc]:
        return sorted(self.counter)


def incompatible_pair(cx: CutComplex, m: ArcMultiset):
    arcs = m.distinct()
    for i, a in enumerate(arcs):
        for b in arcs[i:]:
            if not compatible(cx, a, b):
                return a, b
    return None


def require_compatible(cx: CutComplex, m: ArcMultiset) -> None:
    bad = incompatible_pair(cx, m)
    if bad:
        raise ArcError(f"incompatible arcs in multiset: {bad[0]} and {bad[1]}")


# ---------------------------------------------------------------- vectors on the tagged side

def arc_vector(cx: CutComplex, tagged: TaggedTriangulation, arc: TaggedArc) -> tuple[int, ...]:
    """Int(a | arc) for a in the tagged triangulation, by crossing counts and tags."""
    crossed = Counter(cx.label(s)[0] for s in arc.slots)
    out = []
    for label in tagged.arcs:
        pd = tagged.for_label(label)
        if pd is None:
            out.append(crossed[label])
            continue
        seams = crossed[radius_id(pd.loop)]
        tags = arc.tag_at(pd.puncture)
        if label == pd.minus:
            out.append(seams + sum(1 for t in tags if t == NOTCHED))
        else:
            out.append(seams + sum(1 for t in tags if t == PLAIN))
    return tuple(out)


def intersection_vector(cx: CutComplex, m: ArcMultiset, tagged: TaggedTriangulation | None = None,
                        check: bool = True) -> tuple[int, ...]:
    tagged = tagged or tagged_version(cx.tiling)
    if check:
        require_compatible(cx, m)
    total = [0] * len(tagged.arcs)
    for a, k in m.counter.items():
        for i, v in enumerate(arc_vector(cx, tagged, a)):
            total[i] += k * v
    return tuple(total)


def s_invariant(cx: CutComplex, m: ArcMultiset) -> frozenset:
    """Punctures where notched ends outnumber plain ends."""
    out = set()
    for p in cx.tiling.punctures:
        plain = notched = 0
        for a, k in m.counter.items():
            for t in a.tag_at(p):
                if t == PLAIN:
                    plain += k
                else:
                    notched += k
        if notched > plain:
            out.add(p)
    return frozenset(out)


# ---------------------------------------------------------------- compatible multisets

def compatibility_table(cx: CutComplex, arcs: list[TaggedArc]) -> list[set[int]]:
    n = len(arcs)
    ok = [set() for _ in range(n)]
    vis = [visits(cx, a.slots) for a in arcs]
    punctures = set(cx.tiling.punctures)
    for i in range(n):
        for j in range(i, n):
            a, b = arcs[i], arcs[j]
            D = sum(1 for e1, t1 in zip(a.ends, a.tags) for e2, t2 in zip(b.ends, b.tags)
                    if e1 == e2 and e1 in punctures and t1 != t2)
            C = -1 if conjugate(a, b) else 0
            if D + C > 0:
                continue
            if crossing_count(cx, vis[i], vis[j], same=(a.slots == b.slots)) + C + D == 0:
                ok[i].add(j)
                ok[j].add(i)
    return ok


def compatible_multisets(cx: CutComplex, arcs: list[TaggedArc], max_size: int,
                         table: list[set[int]] | None = None) -> list[ArcMultiset]:
    """Every multiset of at most ``max_size`` pairwise compatible arcs (including the empty one)."""
    table = table if table is not None else compatibility_table(cx, arcs)
    out = [ArcMultiset()]

    def extend(chosen, start):
        if len(chosen) == max_size:
            return
        for k in range(start, len(arcs)):
            if all(k in table[c] for c in chosen):
                nxt = chosen + [k]
                out.append(ArcMultiset(arcs[i] for i in nxt))
                extend(nxt, k)

    for k in range(len(arcs)):
        if k in table[k]:
            out.append(ArcMultiset([arcs[k]]))
            extend([k], k)
    return out


# ---------------------------------------------------------------- JSON

def arc_to_dict(cx: CutComplex, a: TaggedArc) -> dict:
    return {
        "format": ARC_FORMAT,
        "end0": {"anchor": a.ends[0], "tag": a.tags[0]},
        "end1": {"anchor": a.ends[1], "tag": a.tags[1]},
        "crossings": [{"arc": cx.label(s)[0], "side": cx.label(s)[1]} for s in a.slots],
    }


def arc_from_dict(cx: CutComplex, doc: Mapping) -> TaggedArc:
    _check_format(doc, ARC_FORMAT)
    try:
        ends = (doc["end0"], doc["end1"])
        crossings = doc["crossings"]
    except (KeyError, TypeError):
        raise ParseError("an arc needs end0, end1 and crossings") from None
    slots = []
    for i, c in enumerate(crossings):
        try:
            key = (str(c["arc"]), int(c["side"]))
        except (KeyError, TypeError, ValueError):
            raise ParseError(f"crossings[{i}] needs arc and side") from None
        if key not in cx.slot_of:
            raise ArcError(f"crossings[{i}]: unknown arc side {key}")
        slots.append(cx.slot_of[key])
    slots = tuple(slots)
    tags = tuple(str(e.get("tag", PLAIN)) for e in ends)
    probs = curve_problems(cx, slots)
    if probs:
        raise ArcError("; ".join(f"position {i}: {msg}" for i, msg in probs))
    actual = endpoints(cx, slots)
    anchors = tuple(str(e.get("anchor")) for e in ends)
    if anchors != actual:
        raise ArcError(f"anchors {anchors} do not match the crossing word, which joins {actual}")
    return make_arc(cx, slots, tags)


def multiset_to_dict(cx: CutComplex, m: ArcMultiset) -> dict:
    return {"format": MULTISET_FORMAT,
            "arcs": [{"arc": arc_to_dict(cx, a), "multiplicity": k} for a, k in sorted(m.counter.items())]}


def multiset_from_dict(cx: CutComplex, doc) -> ArcMultiset:
    if isinstance(doc, list):
        entries = doc
    else:
        _check_format(doc, MULTISET_FORMAT)
        entries = doc.get("arcs", [])
    arcs = []
    for i, e in enumerate(entries):
        if "arc" in e:
            k = int(e.get("multiplicity", 1))
            if k < 1:
                raise ParseError(f"arcs[{i}]: multiplicity must be positive")
            arcs += [arc_from_dict(cx, e["arc"])] * k
        else:
            arcs.append(arc_from_dict(cx, e))
    return ArcMultiset(arcs)


# ---------------------------------------------------------------- brute-force oracle

def _chords(cx: CutComplex, v: list[Visit], curve: int, crossing_ids: list):
    """Chord endpoints as (poly, boundary position, point id)."""
    out = []
    for i, x in enumerate(v):
        a = (x.poly, x.pin, crossing_ids[i - 1] if i > 0 else ("end", curve, 0))
        b = (x.poly, x.pout, crossing_ids[i] if i < len(v) - 1 else ("end", curve, 1))
        out.append((curve, a, b))
    return out


def brute_force_crossings(cx: CutComplex, g: list[Visit], d: list[Visit]) -> int:
    """Minimum number of crossings over every placement of the two diagrams.

    Each crossing of an arc is a point on that arc and each end is a point
    at a corner; a placement fixes the order of the points sharing an arc or
    a corner.  Within a polygon two chords cross iff their endpoints
    interleave.  Valid on surfaces where crossing words determine curves up to
    isotopy, i.e. discs cut by chords.
    """
    ids = []
    for c, v in enumerate((g, d)):
        ids.append([("x", c, i) for i in range(len(v) - 1)])
    chords = _chords(cx, g, 0, ids[0]) + _chords(cx, d, 1, ids[1])
    # groups of points whose relative order is free
    groups: dict = {}
    for c, v in enumerate((g, d)):
        for i in range(len(v) - 1):
            x = v[i]
            slot = (x.poly, x.pout // 2)
            arc = cx.label(slot)[0]
            groups.setdefault(("arc", arc), []).append(ids[c][i])
        for end, x, pos in ((0, v[0], v[0].pin), (1, v[-1], v[-1].pout)):
            groups.setdefault(("corner", x.poly, pos), []).append(("end", c, end))
    keys = sorted(groups, key=repr)
    orders = [list(permutations(groups[k])) for k in keys]
    best = None
    for choice in product(*orders):
        rank = {}
        for k, perm in zip(keys, choice):
            for r, pid in enumerate(perm):
                rank[pid] = r
        total = 0
        for (c1, a1, b1) in chords:
            if c1 != 0:
                continue
            for (c2, a2, b2) in chords:
                if c2 != 1 or a2[0] != a1[0]:
                    continue
                m = cx.poly(a1[0]).m
                pts = [_place(cx, p, rank, m) for p in (a1, b1, a2, b2)]
                if len(set(pts)) < 4:
                    continue
                inside = [_cyc_between(pts[0], pts[1], q) for q in pts[2:]]
                if inside[0] != inside[1]:
                    total += 1
        best = total if best is None else min(best, total)
        if best == 0:
            break
    return best or 0


def _place(cx: CutComplex, point, rank, m):
    poly, pos, pid = point
    r = rank[pid]
    if pos % 2 == 1 and pid[0] == "x":
        # order along an arc runs from side 0's start; reverse on side 1
        _, side = cx.label((poly, pos // 2))
        r = r if side == 0 else -r
    return (pos, r)


def _cyc_between(a, b, x) -> bool:
    """x strictly inside the anticlockwise boundary interval from a to b."""
    if a < b:
        return a < x < b
    return x > a or x < b
