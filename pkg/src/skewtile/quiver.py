"""Quivers with length-two relations, gentle validation and path enumeration.

Composition is written right to left: the pair ``(a, b)`` stands for the
product ``ab`` which first traverses ``b`` and then ``a`` (so ``t(b) = s(a)``).
Paths are stored in traversal order, first arrow first.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import NotFiniteDimensional, ParseError, StructuralError

NILPOTENT = "nilpotent"
IDEMPOTENT = "idempotent"
TRIPLE_FORMAT = "skewtile.triple/1"


@dataclass(frozen=True, order=True)
class Arrow:
    id: str
    source: str
    target: str

    @property
    def is_loop(self) -> bool:
        return self.source == self.target


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...] = ()
    _by_id: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise StructuralError(f"duplicate vertex ids in {self.vertices}")
        table = {}
        for a in self.arrows:
            if a.id in table:
                raise StructuralError(f"duplicate arrow id {a.id!r}")
            for end in (a.source, a.target):
                if end not in self.vertices:
                    raise StructuralError(f"arrow {a.id!r} touches unknown vertex {end!r}")
            table[a.id] = a
        object.__setattr__(self, "_by_id", table)

    def arrow(self, arrow_id: str) -> Arrow:
        try:
            return self._by_id[arrow_id]
        except KeyError:
            raise StructuralError(f"unknown arrow {arrow_id!r}") from None

    def has_arrow(self, arrow_id: str) -> bool:
        return arrow_id in self._by_id

    def out_arrows(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def in_arrows(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.target == v]

    def relabel(self, vmap: Mapping[str, str], amap: Mapping[str, str]) -> "Quiver":
        return Quiver(
            tuple(vmap[v] for v in self.vertices),
            tuple(Arrow(amap[a.id], vmap[a.source], vmap[a.target]) for a in self.arrows),
        )


@dataclass(frozen=True)
class Binomial:
    """The relation ``plus - minus = 0`` between two length-two products."""

    plus: tuple[str, str]
    minus: tuple[str, str]


@dataclass(frozen=True)
class RelationSet:
    monomial: frozenset = frozenset()
    loop_markers: tuple = ()  # sorted (arrow id, marker) pairs
    binomial: tuple = ()

    @staticmethod
    def make(monomial: Iterable = (), loop_markers: Mapping[str, str] | None = None,
             binomial: Iterable[Binomial] = ()) -> "RelationSet":
        markers = tuple(sorted((loop_markers or {}).items()))
        for _, m in markers:
            if m not in (NILPOTENT, IDEMPOTENT):
                raise StructuralError(f"unknown loop marker {m!r}")
        return RelationSet(frozenset(tuple(p) for p in monomial), markers, tuple(binomial))

    @property
    def markers(self) -> dict[str, str]:
        return dict(self.loop_markers)

    def idempotent_loops(self) -> set[str]:
        return {a for a, m in self.loop_markers if m == IDEMPOTENT}

    def check(self, q: Quiver) -> None:
        """Raise StructuralError unless every relation is composable in ``q``."""
        for a, b in self.monomial:
            alpha, beta = q.arrow(a), q.arrow(b)
            if beta.target != alpha.source:
                raise StructuralError(f"relation ({a},{b}) is not composable: t({b}) != s({a})")
        for a, _ in self.loop_markers:
            if not q.arrow(a).is_loop:
                raise StructuralError(f"loop marker on non-loop arrow {a!r}")
        for rel in self.binomial:
            ends = []
            for a, b in (rel.plus, rel.minus):
                alpha, beta = q.arrow(a), q.arrow(b)
                if beta.target != alpha.source:
                    raise StructuralError(f"binomial term ({a},{b}) is not composable")
                ends.append((beta.source, alpha.target))
            if ends[0] != ends[1]:
                raise StructuralError(f"binomial terms {rel} do not share endpoints")

    def relabel(self, amap: Mapping[str, str]) -> "RelationSet":
        return RelationSet(
            frozenset((amap[a], amap[b]) for a, b in self.monomial),
            tuple(sorted((amap[a], m) for a, m in self.loop_markers)),
            tuple(Binomial((amap[p[0]], amap[p[1]]), (amap[n[0]], amap[n[1]]))
                  for p, n in ((r.plus, r.minus) for r in self.binomial)),
        )


@dataclass(frozen=True)
class SkewGentleTriple:
    quiver: Quiver
    special: frozenset
    relations: RelationSet

    def __post_init__(self):
        object.__setattr__(self, "special", frozenset(self.special))
        for v in self.special:
            if v not in self.quiver.vertices:
                raise StructuralError(f"special vertex {v!r} is not a vertex")
        if self.relations.binomial or self.relations.loop_markers:
            raise StructuralError("a triple carries monomial relations only")
        self.relations.check(self.quiver)


@dataclass(frozen=True)
class Path:
    source: str
    target: str
    arrows: tuple[str, ...] = ()

    def __len__(self) -> int:
        return len(self.arrows)

    def word(self) -> str:
        """Right-to-left product notation; ``e_v`` for a trivial path."""
        if not self.arrows:
            return f"e_{self.source}"
        return "".join(reversed(self.arrows)) if all(len(a) == 1 for a in self.arrows) \
            else "*".join(reversed(self.arrows))


def step_is_zero(r: RelationSet, first: str, second: str) -> bool:
    """Whether traversing ``first`` then ``second`` hits a relation (or an idempotent square)."""
    if (second, first) in r.monomial:
        return True
    return first == second and first in r.markers


@dataclass(frozen=True)
class PathEnumeration:
    paths: tuple[Path, ...]
    truncated: bool
    max_len: int

    def __iter__(self):
        return iter(self.paths)

    def __len__(self):
        return len(self.paths)

    def require_finite(self) -> "PathEnumeration":
        if self.truncated:
            raise NotFiniteDimensional(
                f"legal paths longer than {self.max_len} exist; algebra treated as infinite-dimensional")
        return self


def default_max_len(q: Quiver, r: RelationSet) -> int:
    return max(1, len(q.arrows)) * max(1, len(q.vertices)) + 1


def enumerate_nonzero_paths(q: Quiver, r: RelationSet, max_len: int | None = None) -> PathEnumeration:
    """All paths of length <= max_len avoiding monomial relations and repeated marked loops."""
    r.check(q)
    if max_len is None:
        max_len = default_max_len(q, r)
    outgoing = defaultdict(list)
    for a in sorted(q.arrows):
        outgoing[a.source].append(a)
    found = [Path(v, v) for v in sorted(q.vertices)]
    frontier = []
    for a in sorted(q.arrows):
        frontier.append(Path(a.source, a.target, (a.id,)))
    truncated = False
    length = 1
    while frontier and length <= max_len:
        found.extend(frontier)
        nxt = []
        for p in frontier:
            for a in outgoing[p.target]:
                if not step_is_zero(r, p.arrows[-1], a.id):
                    nxt.append(Path(p.source, a.target, p.arrows + (a.id,)))
        if length == max_len and nxt:
            truncated = True
            break
        frontier = nxt
        length += 1
    found.sort(key=lambda p: (len(p), p.source, p.arrows))
    return PathEnumeration(tuple(found), truncated, max_len)


@dataclass(frozen=True)
class Violation:
    condition: str
    detail: str
    witnesses: tuple = ()


@dataclass
class GentleReport:
    ok: bool
    violations: list
    relation_successors: dict
    free_successors: dict
    relation_predecessors: dict
    free_predecessors: dict

    def conditions(self) -> set[str]:
        return {v.condition for v in self.violations}


def _successor_tables(q: Quiver, r: RelationSet):
    zero = set(r.monomial)
    for a, m in r.loop_markers:
        if m == NILPOTENT:
            zero.add((a, a))
    rel_succ, free_succ = defaultdict(list), defaultdict(list)
    rel_pred, free_pred = defaultdict(list), defaultdict(list)
    for alpha in sorted(q.arrows):
        for beta in sorted(q.arrows):
            if alpha.target != beta.source:
                continue
            # beta after alpha: product (beta, alpha)
            if (beta.id, alpha.id) in zero:
                rel_succ[alpha.id].append(beta.id)
                rel_pred[beta.id].append(alpha.id)
            else:
                free_succ[alpha.id].append(beta.id)
                free_pred[beta.id].append(alpha.id)
    return dict(rel_succ), dict(free_succ), dict(rel_pred), dict(free_pred)


def validate_gentle(q: Quiver, r: RelationSet) -> GentleReport:
    """Check the four gentle conditions; itemize every violation with witnesses."""
    if r.binomial:
        raise StructuralError("gentle validation expects monomial relations only")
    r.check(q)
    violations = []
    for v in sorted(q.vertices):
        outs, ins = q.out_arrows(v), q.in_arrows(v)
        if len(outs) > 2:
            violations.append(Violation("G1", f"vertex {v} has out-degree {len(outs)}",
                                        tuple(sorted(a.id for a in outs))))
        if len(ins) > 2:
            violations.append(Violation("G1", f"vertex {v} has in-degree {len(ins)}",
                                        tuple(sorted(a.id for a in ins))))
    if r.idempotent_loops():
        violations.append(Violation("G2", "idempotent loop markers are not monomial relations",
                                    tuple(sorted(r.idempotent_loops()))))
    rel_succ, free_succ, rel_pred, free_pred = _successor_tables(q, r)
    for a in sorted(q.arrows):
        for table, cond, what in ((rel_succ, "G3", "zero successors"), (free_succ, "G3", "nonzero successors"),
                                  (rel_pred, "G4", "zero predecessors"), (free_pred, "G4", "nonzero predecessors")):
            hits = table.get(a.id, [])
            if len(hits) > 1:
                violations.append(Violation(cond, f"arrow {a.id} has {len(hits)} {what}", (a.id, *hits)))
    return GentleReport(not violations, violations, rel_succ, free_succ, rel_pred, free_pred)


def validate_skew_gentle(t: SkewGentleTriple) -> GentleReport:
    from .constructions import sp_pair

    q, r = sp_pair(t, idempotent=False)
    return validate_gentle(q, r)


# ---------------------------------------------------------------- isomorphism

def find_isomorphism(q1: Quiver, r1: RelationSet, q2: Quiver, r2: RelationSet):
    """Backtracking search for a relabeling of (q1, r1) onto (q2, r2).

    Returns ``(vertex_map, arrow_map)`` or None.  Monomial relations and loop
    markers must correspond exactly; binomial relations are ignored.
    """
    if len(q1.vertices) != len(q2.vertices) or len(q1.arrows) != len(q2.arrows):
        return None
    # a nilpotent marker on a loop is the same datum as the monomial (loop, loop)
    mono1 = set(r1.monomial) | {(a, a) for a, m in r1.loop_markers if m == NILPOTENT}
    mono2 = set(r2.monomial) | {(a, a) for a, m in r2.loop_markers if m == NILPOTENT}
    m1 = {a: m for a, m in r1.loop_markers if m == IDEMPOTENT}
    m2 = {a: m for a, m in r2.loop_markers if m == IDEMPOTENT}

    def signature(q, markers, v):
        return (len(q.out_arrows(v)), len(q.in_arrows(v)),
                tuple(sorted(markers.get(a.id, "-") for a in q.out_arrows(v) if a.is_loop)))

    sig1 = {v: signature(q1, m1, v) for v in q1.vertices}
    sig2 = {v: signature(q2, m2, v) for v in q2.vertices}
    if sorted(sig1.values()) != sorted(sig2.values()):
        return None

    def arrows_between(q, s, t):
        return [a.id for a in q.arrows if a.source == s and a.target == t]

    order = sorted(q1.vertices, key=lambda v: (-len(q1.out_arrows(v)) - len(q1.in_arrows(v)), v))
    vmap: dict[str, str] = {}

    def vertex_ok(v, w):
        for u, x in vmap.items():
            if len(arrows_between(q1, v, u)) != len(arrows_between(q2, w, x)):
                return False
            if len(arrows_between(q1, u, v)) != len(arrows_between(q2, x, w)):
                return False
        return len(arrows_between(q1, v, v)) == len(arrows_between(q2, w, w))

    def arrow_maps():
        groups = defaultdict(list)
        for a in q1.arrows:
            groups[(a.source, a.target)].append(a.id)
        keys = sorted(groups)
        choices = []
        for s, t in keys:
            src = groups[(s, t)]
            dst = arrows_between(q2, vmap[s], vmap[t])
            choices.append([dict(zip(src, perm)) for perm in itertools.permutations(dst)])
        for combo in itertools.product(*choices):
            amap = {}
            for part in combo:
                amap.update(part)
            yield amap

    def relations_match(amap):
        if {(amap[a], amap[b]) for a, b in mono1} != mono2:
            return False
        return {amap[a]: m for a, m in m1.items()} == m2

    def search(i):
        if i == len(order):
            for amap in arrow_maps():
                if relations_match(amap):
                    return dict(vmap), amap
            return None
        v = order[i]
        for w in sorted(q2.vertices):
            if w in vmap.values() or sig1[v] != sig2[w] or not vertex_ok(v, w):
                continue
            vmap[v] = w
            res = search(i + 1)
            if res:
                return res
            del vmap[v]
        return None

    return search(0)


# ---------------------------------------------------------------- JSON

def _check_format(doc: Mapping, expected: str) -> None:
    if not isinstance(doc, Mapping):
        raise ParseError("expected a JSON object at top level")
    fmt = doc.get("format")
    if fmt is not None and fmt != expected:
        raise ParseError(f"format {fmt!r} is not {expected!r}")


def _arrows_from(doc: Mapping) -> tuple[Arrow, ...]:
    out = []
    for i, a in enumerate(doc.get("arrows", [])):
        try:
            out.append(Arrow(str(a["id"]), str(a["source"]), str(a["target"])))
        except (KeyError, TypeError):
            raise ParseError(f"arrows[{i}] needs id, source and target") from None
    return tuple(out)


def _pairs_from(doc: Mapping, key: str = "relations") -> list[tuple[str, str]]:
    out = []
    for i, rel in enumerate(doc.get(key, [])):
        if not isinstance(rel, (list, tuple)) or len(rel) != 2:
            raise ParseError(f"{key}[{i}] must be a pair of arrow ids")
        out.append((str(rel[0]), str(rel[1])))
    return out


def quiver_from_dict(doc: Mapping) -> tuple[Quiver, RelationSet]:
    if "vertices" not in doc:
        raise ParseError("missing field 'vertices'")
    q = Quiver(tuple(str(v) for v in doc["vertices"]), _arrows_from(doc))
    binomial = []
    for i, b in enumerate(doc.get("binomial", [])):
        try:
            binomial.append(Binomial(tuple(b["plus"]), tuple(b["minus"])))
        except (KeyError, TypeError):
            raise ParseError(f"binomial[{i}] needs 'plus' and 'minus' pairs") from None
    r = RelationSet.make(_pairs_from(doc), doc.get("loop_markers", {}), binomial)
    r.check(q)
    return q, r


def triple_from_dict(doc: Mapping) -> SkewGentleTriple:
    _check_format(doc, TRIPLE_FORMAT)
    q, r = quiver_from_dict(doc)
    return SkewGentleTriple(q, frozenset(str(v) for v in doc.get("special", [])), r)


def quiver_to_dict(q: Quiver, r: RelationSet | None = None) -> dict:
    doc = {
        "vertices": sorted(q.vertices),
        "arrows": [{"id": a.id, "source": a.source, "target": a.target}
                   for a in sorted(q.arrows, key=lambda a: a.id)],
        "relations": sorted([list(p) for p in (r.monomial if r else ())]),
    }
    return doc


def triple_to_dict(t: SkewGentleTriple) -> dict:
    doc = {"format": TRIPLE_FORMAT}
    doc.update(quiver_to_dict(t.quiver, t.relations))
    doc["special"] = sorted(t.special)
    return doc
