"""Tile-gluing model of a marked surface with an admissible partial triangulation.

A tile is a polygon whose boundary is listed anticlockwise.  Edge ``k`` runs
from corner ``k`` to corner ``k+1``; an edge is either one side of an arc of
the triangulation or a boundary segment.  The two sides of an arc are glued
with opposite orientations.  Tiles may carry an interior hole (an unmarked
boundary component, types I and II) or a puncture (type VI).
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Mapping

from .constructions import DerivedPresentation, split_idempotents, vertex_idempotents
from .errors import ParseError, StructuralError
from .quiver import (IDEMPOTENT, NILPOTENT, Arrow, Quiver, RelationSet, SkewGentleTriple,
                     _check_format)

TILING_FORMAT = "skewtile.tiling/1"
TILE_TYPES = ("I", "II", "III", "IV", "V", "VI")


@dataclass(frozen=True)
class Edge:
    arc: str | None = None
    side: int | None = None
    segment: tuple[str, str] | None = None

    @property
    def is_arc(self) -> bool:
        return self.arc is not None

    def to_dict(self) -> dict:
        if self.is_arc:
            return {"arc": self.arc, "side": self.side}
        return {"segment": list(self.segment)}


def arc_edge(arc: str, side: int) -> Edge:
    return Edge(arc=arc, side=side)


def segment_edge(a: str, b: str) -> Edge:
    return Edge(segment=(a, b))


@dataclass(frozen=True)
class Tile:
    id: str
    type: str
    boundary: tuple[Edge, ...]
    corners: tuple[str, ...]
    hole: str | None = None
    puncture: str | None = None

    @property
    def m(self) -> int:
        return len(self.boundary)

    def corner(self, k: int) -> str:
        return self.corners[k % self.m]

    def to_dict(self) -> dict:
        interior = None
        if self.hole is not None:
            interior = {"hole": self.hole}
        elif self.puncture is not None:
            interior = {"puncture": self.puncture}
        return {"id": self.id, "type": self.type, "boundary": [e.to_dict() for e in self.boundary],
                "corners": list(self.corners), "interior": interior}


Slot = tuple  # (tile id, edge index)


@dataclass(frozen=True)
class Tiling:
    tiles: tuple[Tile, ...]
    name: str = ""
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        tiles = {}
        slots = defaultdict(list)
        for t in self.tiles:
            if t.id in tiles:
                raise StructuralError(f"duplicate tile id {t.id!r}")
            if t.type not in TILE_TYPES:
                raise StructuralError(f"tile {t.id}: unknown type {t.type!r}")
            if len(t.corners) != len(t.boundary) or not t.boundary:
                raise StructuralError(f"tile {t.id}: need one corner per boundary edge")
            tiles[t.id] = t
            for k, e in enumerate(t.boundary):
                if e.is_arc:
                    slots[e.arc].append(((t.id, k), e.side))
        object.__setattr__(self, "_index", {"tiles": tiles, "slots": dict(slots)})

    # -- lookups
    def tile(self, tid: str) -> Tile:
        try:
            return self._index["tiles"][tid]
        except KeyError:
            raise StructuralError(f"unknown tile {tid!r}") from None

    @property
    def arcs(self) -> tuple[str, ...]:
        return tuple(sorted(self._index["slots"]))

    @property
    def marked_points(self) -> tuple[str, ...]:
        pts = {c for t in self.tiles for c in t.corners}
        return tuple(sorted(pts))

    @property
    def punctures(self) -> tuple[str, ...]:
        return tuple(sorted(t.puncture for t in self.tiles if t.puncture is not None))

    @property
    def holes(self) -> tuple[str, ...]:
        return tuple(sorted(t.hole for t in self.tiles if t.hole is not None))

    def edge(self, slot: Slot) -> Edge:
        tid, k = slot
        return self.tile(tid).boundary[k]

    def arc_slots(self, arc: str) -> list[Slot]:
        """The slots of ``arc`` ordered by side."""
        return [s for s, _ in sorted(self._index["slots"][arc], key=lambda p: p[1])]

    def twin(self, slot: Slot) -> Slot:
        e = self.edge(slot)
        if not e.is_arc:
            raise StructuralError(f"slot {slot} is a boundary segment")
        for s, side in self._index["slots"][e.arc]:
            if side != e.side:
                return s
        raise StructuralError(f"arc {e.arc} has no opposite side")

    def loop_tile(self, puncture: str) -> Tile:
        for t in self.tiles:
            if t.puncture == puncture:
                return t
        raise StructuralError(f"unknown puncture {puncture!r}")

    def loop_of(self, puncture: str) -> str:
        return self.loop_tile(puncture).boundary[0].arc

    def base_of(self, puncture: str) -> str:
        return self.loop_tile(puncture).corners[0]

    def to_dict(self) -> dict:
        return {"format": TILING_FORMAT, "name": self.name, "tiles": [t.to_dict() for t in self.tiles]}


# ---------------------------------------------------------------- JSON

def tiling_from_dict(doc: Mapping) -> Tiling:
    _check_format(doc, TILING_FORMAT)
    if "tiles" not in doc or not isinstance(doc["tiles"], list):
        raise ParseError("missing list field 'tiles'")
    tiles = []
    for i, td in enumerate(doc["tiles"]):
        try:
            edges = []
            for j, ed in enumerate(td["boundary"]):
                if "arc" in ed:
                    if ed.get("side") not in (0, 1):
                        raise ParseError(f"tiles[{i}].boundary[{j}]: side must be 0 or 1")
                    edges.append(arc_edge(str(ed["arc"]), int(ed["side"])))
                elif "segment" in ed and len(ed["segment"]) == 2:
                    edges.append(segment_edge(str(ed["segment"][0]), str(ed["segment"][1])))
                else:
                    raise ParseError(f"tiles[{i}].boundary[{j}]: expected an arc side or a segment")
            interior = td.get("interior") or {}
            tiles.append(Tile(str(td.get("id", f"t{i}")), str(td["type"]), tuple(edges),
                              tuple(str(c) for c in td["corners"]),
                              hole=interior.get("hole"), puncture=interior.get("puncture")))
        except (KeyError, TypeError) as exc:
            raise ParseError(f"tiles[{i}]: missing or malformed field {exc}") from None
    return Tiling(tuple(tiles), str(doc.get("name", "")))


# ---------------------------------------------------------------- validation

@dataclass
class TilingReport:
    ok: bool
    problems: list
    euler_characteristic: int | None = None
    boundary_components: int | None = None
    genus: int | None = None

    def to_dict(self) -> dict:
        return {"ok": self.ok, "problems": list(self.problems), "euler_characteristic": self.euler_characteristic,
                "boundary_components": self.boundary_components, "genus": self.genus}


def _type_problems(t: Tile) -> list[str]:
    arcs = sum(1 for e in t.boundary if e.is_arc)
    segs = t.m - arcs
    has_hole, has_punct = t.hole is not None, t.puncture is not None
    if has_hole and has_punct:
        return [f"tile {t.id}: both a hole and a puncture inside"]
    ok = {
        "I": t.m == 1 and arcs == 1 and has_hole,
        "II": t.m == 2 and arcs == 2 and has_hole,
        "III": t.m == 3 and arcs == 1 and not has_hole and not has_punct,
        "IV": t.m >= 3 and segs == 1 and not has_hole and not has_punct,
        "V": t.m >= 3 and segs == 0 and not has_hole and not has_punct,
        "VI": t.m == 1 and arcs == 1 and has_punct,
    }[t.type]
    if ok:
        return []
    return [f"tile {t.id}: content ({arcs} arc sides, {segs} segments, "
            f"hole={t.hole}, puncture={t.puncture}) does not fit type {t.type}"]


def validate_tiling(t: Tiling) -> TilingReport:
    problems: list[str] = []
    # arcs: exactly sides 0 and 1, glued with reversed orientation
    for arc in t.arcs:
        sides = sorted(side for _, side in t._index["slots"][arc])
        if sides != [0, 1]:
            problems.append(f"arc {arc}: sides {sides}, expected [0, 1]")
            continue
        (x, k), (y, j) = t.arc_slots(arc)
        tx, ty = t.tile(x), t.tile(y)
        if tx.corner(k) != ty.corner(j + 1) or tx.corner(k + 1) != ty.corner(j):
            problems.append(f"arc {arc}: sides do not glue with reversed orientation "
                            f"({tx.corner(k)}->{tx.corner(k + 1)} vs {ty.corner(j)}->{ty.corner(j + 1)})")
    punct_seen = set()
    for tile in t.tiles:
        problems += _type_problems(tile)
        for k, e in enumerate(tile.boundary):
            if not e.is_arc and e.segment != (tile.corner(k), tile.corner(k + 1)):
                problems.append(f"tile {tile.id} edge {k}: segment {e.segment} does not join its corners")
        if tile.puncture is not None:
            if tile.type != "VI":
                problems.append(f"puncture {tile.puncture} lies in a type-{tile.type} tile, not a once-punctured monogon")
            if tile.puncture in punct_seen:
                problems.append(f"puncture {tile.puncture} appears twice")
            punct_seen.add(tile.puncture)
    clash = (set(punct_seen) | set(t.holes)) & set(t.marked_points)
    if clash:
        problems.append(f"ids used both as marked point and interior: {sorted(clash)}")
    if problems:
        return TilingReport(False, problems)
    problems += _fan_problems(t)
    if not _connected(t):
        problems.append("tile gluing graph is disconnected")
    # surface invariants
    segments = [e.segment for tile in t.tiles for e in tile.boundary if not e.is_arc]
    faces = sum(1 for tile in t.tiles if tile.type not in ("I", "II"))
    chi = len(t.marked_points) - (len(t.arcs) + len(segments)) + faces
    succ = {}
    for a, b in segments:
        if a in succ:
            problems.append(f"marked point {a} starts two boundary segments")
        succ[a] = b
    cycles, seen = 0, set()
    for p in succ:
        if p in seen:
            continue
        cycles += 1
        q = p
        while q not in seen and q in succ:
            seen.add(q)
            q = succ[q]
    missing = set(t.marked_points) - set(succ)
    if missing:
        problems.append(f"marked points off the boundary: {sorted(missing)}")
    bcount = cycles + len(t.holes)
    twice_genus = 2 - chi - bcount
    genus = twice_genus // 2 if twice_genus % 2 == 0 else None
    if genus is None or genus < 0:
        problems.append(f"no compact oriented surface has chi={chi} with {bcount} boundary components")
    return TilingReport(not problems, problems, chi, bcount, genus)


def _fan_problems(t: Tiling) -> list[str]:
    """Around each marked point the corners must form one chain between two segments."""
    problems = []
    corners_at = defaultdict(set)
    for tile in t.tiles:
        for k in range(tile.m):
            corners_at[tile.corner(k)].add((tile.id, k))
    for p, corners in sorted(corners_at.items()):
        starts = [c for c in corners if not t.tile(c[0]).boundary[(c[1] - 1) % t.tile(c[0]).m].is_arc]
        if len(starts) != 1:
            problems.append(f"marked point {p}: {len(starts)} fan starts, expected 1")
            continue
        chain, cur = [], starts[0]
        while True:
            chain.append(cur)
            tile = t.tile(cur[0])
            e = tile.boundary[cur[1]]
            if not e.is_arc:
                break
            y, j = t.twin(cur)
            cur = (y, (j + 1) % t.tile(y).m)
            if cur in chain:
                problems.append(f"marked point {p}: corner fan closes up (interior point)")
                break
        if set(chain) != corners:
            problems.append(f"marked point {p}: corners split into several fans")
    return problems


def _connected(t: Tiling) -> bool:
    if not t.tiles:
        return False
    adj = defaultdict(set)
    for arc in t.arcs:
        slots = t.arc_slots(arc)
        for a in slots:
            for b in slots:
                adj[a[0]].add(b[0])
    seen, todo = set(), [t.tiles[0].id]
    while todo:
        x = todo.pop()
        if x not in seen:
            seen.add(x)
            todo += adj[x]
    return len(seen) == len(t.tiles)


def require_valid(t: Tiling) -> Tiling:
    rep = validate_tiling(t)
    if not rep.ok:
        raise StructuralError("invalid tiling: " + "; ".join(rep.problems))
    return t


# ---------------------------------------------------------------- derived tilings

@dataclass(frozen=True)
class PunctureData:
    puncture: str
    loop: str
    base: str
    minus: str  # plain at the puncture
    plus: str   # notched at the puncture


@dataclass(frozen=True)
class TaggedTriangulation:
    arcs: tuple[str, ...]
    punctures: tuple[PunctureData, ...]

    def for_label(self, label: str) -> PunctureData | None:
        for pd in self.punctures:
            if label in (pd.minus, pd.plus):
                return pd
        return None


def minus_label(loop: str) -> str:
    return f"{loop}-"


def plus_label(loop: str) -> str:
    return f"{loop}+"


def radius_id(loop: str) -> str:
    return f"{loop}*"


def tagged_version(t: Tiling) -> TaggedTriangulation:
    require_valid(t)
    loops = {}
    for p in t.punctures:
        loops[t.loop_of(p)] = PunctureData(p, t.loop_of(p), t.base_of(p),
                                            minus_label(t.loop_of(p)), plus_label(t.loop_of(p)))
    labels = []
    for a in t.arcs:
        if a in loops:
            labels += [loops[a].minus, loops[a].plus]
        else:
            labels.append(a)
    return TaggedTriangulation(tuple(labels), tuple(loops[k] for k in sorted(loops)))


def unfold(t: Tiling) -> Tiling:
    """Replace each punctured monogon by a quadrilateral around a new boundary component.

    The monogon bounded by ``l`` becomes a single tile whose edges are ``l``,
    one side of the radius arc ``l*``, the one-segment boundary around the
    former puncture, and the other side of ``l*``.
    """
    require_valid(t)
    tiles = []
    for tile in t.tiles:
        if tile.type != "VI":
            tiles.append(tile)
            continue
        loop, b, p = tile.boundary[0], tile.corners[0], tile.puncture
        r = radius_id(loop.arc)
        tiles.append(Tile(tile.id, "IV", (loop, arc_edge(r, 0), segment_edge(p, p), arc_edge(r, 1)),
                          (b, b, p, p)))
    return require_valid(Tiling(tuple(tiles), t.name + "*" if t.name else ""))


def original_tiling(t: Tiling) -> Tiling:
    """Replace each puncture by an unmarked boundary component."""
    require_valid(t)
    tiles = tuple(Tile(x.id, "I", x.boundary, x.corners, hole=x.puncture) if x.type == "VI" else x
                  for x in t.tiles)
    return require_valid(Tiling(tiles, t.name + "0" if t.name else ""))


# ---------------------------------------------------------------- algebra

@dataclass(frozen=True)
class TilingArrow:
    id: str
    source_slot: Slot
    target_slot: Slot


def tiling_arrows(t: Tiling) -> list[TilingArrow]:
    """One arrow per corner between two arc sides, from the later side to the earlier one."""
    out = []
    for tile in t.tiles:
        for k in range(tile.m):
            prev, cur = tile.boundary[(k - 1) % tile.m], tile.boundary[k]
            if prev.is_arc and cur.is_arc:
                out.append(TilingArrow(f"{tile.id}:{k}", (tile.id, k), (tile.id, (k - 1) % tile.m)))
    return out


def extract_algebra(t: Tiling) -> DerivedPresentation:
    require_valid(t)
    arrows = tiling_arrows(t)
    q = Quiver(t.arcs, tuple(Arrow(a.id, t.edge(a.source_slot).arc, t.edge(a.target_slot).arc)
                             for a in arrows))
    mono = set()
    for a in arrows:
        for b in arrows:
            if t.edge(b.source_slot).arc != t.edge(a.target_slot).arc:
                continue
            if b.source_slot != t.twin(a.target_slot):
                mono.add((b.id, a.id))
    markers = {}
    special = set()
    for a in arrows:
        if a.source_slot == a.target_slot:
            tile = t.tile(a.source_slot[0])
            if tile.type == "VI":
                markers[a.id] = IDEMPOTENT
                mono.discard((a.id, a.id))
                special.add(t.edge(a.source_slot).arc)
            else:
                markers[a.id] = NILPOTENT
    r = RelationSet.make(mono, markers)
    idem = split_idempotents(t.arcs, special) if special else vertex_idempotents(t.arcs)
    return DerivedPresentation(q, r, idem, "tiling")


def triple_of(t: Tiling) -> SkewGentleTriple:
    p = extract_algebra(t)
    idem = p.relations.idempotent_loops()
    special = {p.quiver.arrow(a).source for a in idem}
    q = Quiver(p.quiver.vertices, tuple(a for a in p.quiver.arrows if a.id not in idem))
    mono = {(a, b) for a, b in p.relations.monomial if a not in idem and b not in idem}
    return SkewGentleTriple(q, frozenset(special), RelationSet.make(mono))


def obstruction_tiles(t: Tiling) -> list[str]:
    """Tiles of type II and even-sided type-V tiles."""
    return [x.id for x in t.tiles if x.type == "II" or (x.type == "V" and x.m % 2 == 0)]


# ---------------------------------------------------------------- SVG

def tiling_svg(t: Tiling) -> str:
    """Schematic of the tile-gluing graph: tiles on a circle, one line per arc."""
    import math

    n = len(t.tiles)
    pos = {}
    for i, tile in enumerate(t.tiles):
        ang = 2 * math.pi * i / max(n, 1)
        pos[tile.id] = (200 + 140 * math.cos(ang), 200 + 140 * math.sin(ang))
    parts = ['<svg xmlns="http://www.w3.org/2000/svg" width="400" height="400" font-family="monospace" font-size="11">']
    for arc in t.arcs:
        (x, _), (y, _) = t.arc_slots(arc)
        (x1, y1), (x2, y2) = pos[x], pos[y]
        if x == y:
            parts.append(f'<circle cx="{x1:.1f}" cy="{y1 - 22:.1f}" r="14" fill="none" stroke="#2a5bd7"/>')
            parts.append(f'<text x="{x1 + 16:.1f}" y="{y1 - 34:.1f}">{arc}</text>')
        else:
            parts.append(f'<line x1="{x1:.1f}" y1="{y1:.1f}" x2="{x2:.1f}" y2="{y2:.1f}" stroke="#2a5bd7"/>')
            parts.append(f'<text x="{(x1 + x2) / 2:.1f}" y="{(y1 + y2) / 2 - 3:.1f}">{arc}</text>')
    for tile in t.tiles:
        x, y = pos[tile.id]
        inner = tile.puncture or tile.hole or ""
        parts.append(f'<circle cx="{x:.1f}" cy="{y:.1f}" r="18" fill="#f4f4f4" stroke="black"/>')
        parts.append(f'<text x="{x - 14:.1f}" y="{y + 4:.1f}">{tile.type}</text>')
        parts.append(f'<text x="{x - 14:.1f}" y="{y + 32:.1f}">{tile.id} {inner}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
