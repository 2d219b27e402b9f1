"""Derived presentations of a skew-gentle triple.

``sp``: add a loop at each special vertex (nilpotent or idempotent).
``bowtie``: split each special vertex into a minus and a plus copy with signed
binomial relations.
``star``: attach a fresh vertex ``i*`` to each special vertex by a 2-cycle
whose composite through ``i*`` ... ``i`` ... ``i*`` is zero.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantViolation, ParseError
from .quiver import (IDEMPOTENT, NILPOTENT, Arrow, Binomial, Quiver, RelationSet,
                     SkewGentleTriple, _check_format, quiver_from_dict, quiver_to_dict,
                     validate_gentle)

PRESENTATION_FORMAT = "skewtile.presentation/1"


def loop_id(v: str) -> str:
    return f"eps[{v}]"


def minus(v: str) -> str:
    return f"{v}-"


def plus(v: str) -> str:
    return f"{v}+"


def star(v: str) -> str:
    return f"{v}*"


@dataclass(frozen=True)
class Idempotent:
    """A primitive idempotent written as ``vertex`` or ``vertex - loop`` / ``loop``."""

    label: str
    vertex: str
    kind: str  # "vertex", "minus" (e_i - loop), "plus" (loop)


@dataclass(frozen=True)
class DerivedPresentation:
    quiver: Quiver
    relations: RelationSet
    idempotents: tuple[Idempotent, ...]
    name: str = ""

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(e.label for e in self.idempotents)


def vertex_idempotents(vertices) -> tuple[Idempotent, ...]:
    return tuple(Idempotent(v, v, "vertex") for v in sorted(vertices))


def split_idempotents(vertices, special) -> tuple[Idempotent, ...]:
    out = []
    for v in sorted(vertices):
        if v in special:
            out.append(Idempotent(minus(v), v, "minus"))
            out.append(Idempotent(plus(v), v, "plus"))
        else:
            out.append(Idempotent(v, v, "vertex"))
    return tuple(out)


def sp_pair(t: SkewGentleTriple, idempotent: bool) -> tuple[Quiver, RelationSet]:
    q = t.quiver
    loops = tuple(Arrow(loop_id(v), v, v) for v in sorted(t.special))
    qsp = Quiver(q.vertices, q.arrows + loops)
    marker = IDEMPOTENT if idempotent else NILPOTENT
    mono = set(t.relations.monomial)
    if not idempotent:
        mono |= {(a.id, a.id) for a in loops}
    return qsp, RelationSet.make(mono, {a.id: marker for a in loops})


def build_sp(t: SkewGentleTriple) -> tuple[DerivedPresentation, DerivedPresentation]:
    """Return the nilpotent-loop and the idempotent-loop presentations."""
    q, r_sp = sp_pair(t, idempotent=False)
    _, r_sg = sp_pair(t, idempotent=True)
    return (DerivedPresentation(q, r_sp, vertex_idempotents(q.vertices), "sp"),
            DerivedPresentation(q, r_sg, split_idempotents(q.vertices, t.special), "sg"))


def bowtie_arrow_id(a: str, alpha: str, b: str) -> str:
    return f"({a},{alpha},{b})"


def build_bowtie(t: SkewGentleTriple) -> DerivedPresentation:
    q, sp = t.quiver, t.special

    def copies(v):
        return [minus(v), plus(v)] if v in sp else [v]

    vertices = tuple(c for v in sorted(q.vertices) for c in copies(v))
    arrows = []
    for alpha in sorted(q.arrows):
        for a in copies(alpha.source):
            for b in copies(alpha.target):
                arrows.append(Arrow(bowtie_arrow_id(a, alpha.id, b), a, b))
    monomial, binomial = set(), []
    for alpha_id, beta_id in sorted(t.relations.monomial):
        alpha, beta = q.arrow(alpha_id), q.arrow(beta_id)
        mid = alpha.source
        for a in copies(beta.source):
            for c in copies(alpha.target):
                terms = [(bowtie_arrow_id(b, alpha_id, c), bowtie_arrow_id(a, beta_id, b))
                         for b in copies(mid)]
                if len(terms) == 1:
                    monomial.add(terms[0])
                else:
                    # lambda = -1 on the minus copy, +1 on the plus copy
                    binomial.append(Binomial(terms[1], terms[0]))
    qb = Quiver(vertices, tuple(arrows))
    rb = RelationSet.make(monomial, {}, binomial)
    rb.check(qb)
    return DerivedPresentation(qb, rb, vertex_idempotents(vertices), "bowtie")


def rho_id(v: str) -> str:
    return f"rho[{v}]"


def build_star(t: SkewGentleTriple) -> DerivedPresentation:
    q = t.quiver
    vertices = list(q.vertices)
    arrows = list(q.arrows)
    mono = set(t.relations.monomial)
    for v in sorted(t.special):
        s = star(v)
        vertices.append(s)
        there, back = Arrow(rho_id(v), v, s), Arrow(rho_id(s), s, v)
        arrows += [there, back]
        mono.add((there.id, back.id))
    qs = Quiver(tuple(vertices), tuple(arrows))
    rs = RelationSet.make(mono)
    report = validate_gentle(qs, rs)
    if not report.ok:
        raise InvariantViolation(f"star presentation is not gentle: {report.violations}")
    return DerivedPresentation(qs, rs, vertex_idempotents(vertices), "star")


def gentle_presentation(t: SkewGentleTriple) -> DerivedPresentation:
    return DerivedPresentation(t.quiver, t.relations, vertex_idempotents(t.quiver.vertices), "g")


def presentation_to_dict(p: DerivedPresentation) -> dict:
    doc = {"format": PRESENTATION_FORMAT, "name": p.name}
    doc.update(quiver_to_dict(p.quiver, p.relations))
    doc["loop_markers"] = dict(sorted(p.relations.markers.items()))
    doc["binomial"] = sorted(({"plus": list(b.plus), "minus": list(b.minus)} for b in p.relations.binomial),
                             key=lambda d: (d["plus"], d["minus"]))
    doc["idempotents"] = [{"label": e.label, "vertex": e.vertex, "kind": e.kind} for e in p.idempotents]
    return doc


def presentation_from_dict(doc) -> DerivedPresentation:
    _check_format(doc, PRESENTATION_FORMAT)
    q, r = quiver_from_dict(doc)
    if "idempotents" in doc:
        try:
            idem = tuple(Idempotent(str(e["label"]), str(e["vertex"]), str(e["kind"])) for e in doc["idempotents"])
        except (KeyError, TypeError):
            raise ParseError("idempotents entries need label, vertex and kind") from None
    elif r.idempotent_loops():
        special = {q.arrow(a).source for a in r.idempotent_loops()}
        idem = split_idempotents(q.vertices, special)
    else:
        idem = vertex_idempotents(q.vertices)
    return DerivedPresentation(q, r, idem, str(doc.get("name", "")))
