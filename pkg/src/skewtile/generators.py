"""Seeded random gentle pairs and skew-gentle triples for property tests."""

from __future__ import annotations

import random
from itertools import product

from .constructions import sp_pair
from .quiver import (Arrow, Quiver, RelationSet, SkewGentleTriple, enumerate_nonzero_paths,
                     validate_gentle)


def _pair_at_vertex(rng: random.Random, ins: list[str], outs: list[str]) -> list[tuple[str, str]]:
    """Relations (out, in) at one vertex.

    All in/out pairs at a vertex split into a zero matching and a nonzero
    matching; with at most two arrows on each side this is a proper
    2-edge-colouring of a small complete bipartite graph.
    """
    if not ins or not outs:
        return []
    if len(ins) == 1 and len(outs) == 1:
        return [(outs[0], ins[0])] if rng.random() < 0.5 else []
    if len(ins) == 1:
        return [(rng.choice(outs), ins[0])]
    if len(outs) == 1:
        return [(outs[0], rng.choice(ins))]
    if rng.random() < 0.5:
        return [(outs[0], ins[0]), (outs[1], ins[1])]
    return [(outs[1], ins[0]), (outs[0], ins[1])]


def random_gentle_pair(rng: random.Random, max_vertices: int = 8, max_tries: int = 200):
    """A finite-dimensional gentle pair with 1..max_vertices vertices.

    Loops and parallel arrows are allowed; candidates whose path enumeration
    truncates are rejected and redrawn.
    """
    for _ in range(max_tries):
        n = rng.randint(1, max_vertices)
        verts = [str(i) for i in range(1, n + 1)]
        outdeg = dict.fromkeys(verts, 0)
        indeg = dict.fromkeys(verts, 0)
        arrows = []
        target = rng.randint(0, 2 * n)
        for _ in range(4 * target + 4):
            if len(arrows) >= target:
                break
            s, t = rng.choice(verts), rng.choice(verts)
            if s == t and rng.random() < 0.7:
                continue
            if outdeg[s] >= 2 or indeg[t] >= 2:
                continue
            outdeg[s] += 1
            indeg[t] += 1
            arrows.append(Arrow(f"a{len(arrows) + 1}", s, t))
        q = Quiver(tuple(verts), tuple(arrows))
        rel = []
        for v in verts:
            rel += _pair_at_vertex(rng, [a.id for a in q.in_arrows(v)], [a.id for a in q.out_arrows(v)])
        r = RelationSet.make(rel)
        if enumerate_nonzero_paths(q, r).truncated:
            continue
        return q, r
    raise RuntimeError("could not draw a finite-dimensional gentle pair")


def special_candidates(q: Quiver, r: RelationSet) -> list[str]:
    """Vertices where a special loop keeps the pair gentle."""
    out = []
    for v in q.vertices:
        ins, outs = q.in_arrows(v), q.out_arrows(v)
        if len(ins) > 1 or len(outs) > 1:
            continue
        if ins and outs and (outs[0].id, ins[0].id) not in r.monomial:
            continue
        out.append(v)
    return out


def random_skew_gentle_triple(rng: random.Random, max_vertices: int = 8, min_special: int = 0,
                              max_tries: int = 500) -> SkewGentleTriple:
    for _ in range(max_tries):
        q, r = random_gentle_pair(rng, max_vertices)
        cand = special_candidates(q, r)
        if len(cand) < min_special:
            continue
        k = rng.randint(min_special, len(cand)) if cand else 0
        t = SkewGentleTriple(q, frozenset(rng.sample(cand, k)), r)
        q_sp, r_sp = sp_pair(t, idempotent=False)
        if not validate_gentle(q_sp, r_sp).ok:
            continue
        if enumerate_nonzero_paths(q_sp, r_sp).truncated:
            continue
        if enumerate_nonzero_paths(*sp_pair(t, idempotent=True)).truncated:
            continue
        return t
    raise RuntimeError("could not draw a skew-gentle triple")


def gentle_pairs(seed: int, count: int, max_vertices: int = 8):
    rng = random.Random(seed)
    return [random_gentle_pair(rng, max_vertices) for _ in range(count)]


def skew_gentle_triples(seed: int, count: int, max_vertices: int = 8, min_special: int = 1):
    rng = random.Random(seed)
    return [random_skew_gentle_triple(rng, max_vertices, min_special) for _ in range(count)]


def all_relation_choices(q: Quiver):
    """Every gentle relation set on q (exhaustive counterpart of ``_pair_at_vertex``)."""
    per_vertex = []
    for v in q.vertices:
        ins = [a.id for a in q.in_arrows(v)]
        outs = [a.id for a in q.out_arrows(v)]
        if not ins or not outs:
            per_vertex.append([[]])
        elif len(ins) == 1 and len(outs) == 1:
            per_vertex.append([[], [(outs[0], ins[0])]])
        elif len(ins) == 1:
            per_vertex.append([[(o, ins[0])] for o in outs])
        elif len(outs) == 1:
            per_vertex.append([[(outs[0], i)] for i in ins])
        else:
            per_vertex.append([[(outs[0], ins[0]), (outs[1], ins[1])],
                               [(outs[1], ins[0]), (outs[0], ins[1])]])
    for combo in product(*per_vertex):
        yield RelationSet.make([p for part in combo for p in part])


def _crosses(d1, d2) -> bool:
    a, b = d1
    c, d = d2
    if len({a, b, c, d}) < 4:
        return False
    return (a < c < b) != (a < d < b)


def _faces(poly: list[int], diags: list[tuple[int, int]]) -> list[list[int]]:
    for a, b in diags:
        if a in poly and b in poly:
            i, j = poly.index(a), poly.index(b)
            i, j = min(i, j), max(i, j)
            if j - i > 1 and not (i == 0 and j == len(poly) - 1):
                rest = [x for x in diags if x != (a, b)]
                return _faces(poly[i:j + 1], rest) + _faces(poly[j:] + poly[:i + 1], rest)
    return [poly]


def disc_tiling(n: int, diagonals, name: str = "disc"):
    """Tiling of a disc with marked points 1..n cut along non-crossing diagonals."""
    from .tiling import Tile, Tiling, arc_edge, segment_edge

    diags = sorted(tuple(sorted(d)) for d in diagonals)
    tiles = []
    for f, face in enumerate(_faces(list(range(1, n + 1)), diags)):
        edges, segs = [], 0
        for k, u in enumerate(face):
            w = face[(k + 1) % len(face)]
            if (w - u) % n == 1:
                edges.append(segment_edge(str(u), str(w)))
                segs += 1
            else:
                lo, hi = min(u, w), max(u, w)
                edges.append(arc_edge(f"d{lo}_{hi}", 0 if u == lo else 1))
        kind = {0: "V", 1: "IV", 2: "III"}.get(segs, "?")
        tiles.append(Tile(f"F{f}", kind, tuple(edges), tuple(str(u) for u in face)))
    return Tiling(tuple(tiles), name)


def random_disc_tiling(rng: random.Random, min_points: int = 4, max_points: int = 9, max_tries: int = 200):
    """A disc dissection whose faces are all of the allowed tile types."""
    from .errors import StructuralError
    from .tiling import validate_tiling

    for _ in range(max_tries):
        n = rng.randint(min_points, max_points)
        cand = [(a, b) for a in range(1, n + 1) for b in range(a + 2, n + 1) if not (a == 1 and b == n)]
        rng.shuffle(cand)
        chosen = []
        for d in cand[: rng.randint(1, len(cand))]:
            if all(not _crosses(d, e) for e in chosen):
                chosen.append(d)
        try:
            t = disc_tiling(n, chosen, f"disc{n}")
        except StructuralError:
            continue
        if validate_tiling(t).ok:
            return t
    raise RuntimeError("could not draw a disc tiling")
