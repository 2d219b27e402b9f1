"""Command line interface.

Every command reads JSON files (or the name of a built-in example) and prints
either a human summary or JSON.  Exit status: 0 success, 1 domain error (or a
negative verdict from ``check``), 2 unreadable input.
"""

from __future__ import annotations

import json
import logging
import os
import sys
import time
from pathlib import Path

import click

from . import __version__
from .arcs import (ArcMultiset, CutComplex, arc_from_dict, arc_to_dict, arc_vector, compatible_multisets,
                   enumerate_arcs, int_components, intersection_vector, multiset_from_dict,
                   multiset_to_dict, s_invariant, validate_permissible)
from .cartan import (cartan_family, cartan_of, check_theorem_4_4, count_full_zero_cycles, det_exact,
                     path_basis_size)
from .constructions import (PRESENTATION_FORMAT, build_bowtie, build_sp, build_star, gentle_presentation,
                            presentation_from_dict, presentation_to_dict)
from .errors import ParseError, SkewtileError
from .examples import TILINGS, TRIPLES
from .quiver import triple_from_dict, triple_to_dict
from .tiling import (extract_algebra, obstruction_tiles, original_tiling, tagged_version, tiling_from_dict,
                     tiling_svg, triple_of, unfold, validate_tiling)
from .unfolding import FoldingContext, check_injectivity, check_lemma_3_2, check_theorem_3_4_family

log = logging.getLogger("skewtile")
LOG_ENV = "SKEWTILE_LOG"


class InputError(click.ClickException):
    exit_code = 2


# ---------------------------------------------------------------- input helpers

def _load_json(source: str):
    try:
        text = sys.stdin.read() if source == "-" else Path(source).read_text()
    except OSError as e:
        raise InputError(f"{source}: {e.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"{source}: line {e.lineno} column {e.colno}: {e.msg}") from None


def _is_file(source: str) -> bool:
    return source == "-" or Path(source).exists()


def load_triple(source: str):
    if not _is_file(source) and source in TRIPLES:
        return TRIPLES[source]()
    doc = _load_json(source)
    try:
        return triple_from_dict(doc)
    except ParseError as e:
        raise InputError(f"{source}: {e}") from None


def load_tiling(source: str):
    if not _is_file(source) and source in TILINGS:
        return TILINGS[source]()
    doc = _load_json(source)
    try:
        return tiling_from_dict(doc)
    except ParseError as e:
        raise InputError(f"{source}: {e}") from None


def _parsed(fn, source, *args):
    try:
        return fn(*args, _load_json(source))
    except ParseError as e:
        raise InputError(f"{source}: {e}") from None


# ---------------------------------------------------------------- output helpers

def emit(ctx: click.Context, doc, human=None):
    if ctx.obj["format"] == "json" or human is None:
        click.echo(json.dumps(doc, indent=2))
    else:
        click.echo(human(doc) if callable(human) else human)


def matrix_text(labels, rows) -> str:
    w = max([len(str(x)) for r in rows for x in r] + [len(lab) for lab in labels] + [1])
    head = " " * (w + 1) + " ".join(lab.rjust(w) for lab in labels)
    body = [lab.rjust(w) + " " + " ".join(str(x).rjust(w) for x in r) for lab, r in zip(labels, rows)]
    return "\n".join([head] + body)


def _run(fn):
    try:
        return fn()
    except click.ClickException:
        raise
    except ParseError as e:
        raise InputError(str(e)) from None
    except SkewtileError as e:
        raise click.ClickException(f"{type(e).__name__}: {e}") from None


@click.group()
@click.version_option(__version__)
@click.option("-f", "--format", "fmt", type=click.Choice(["human", "json"]), default="human",
              help="Output format.")
@click.pass_context
def cli(ctx, fmt):
    """Skew-gentle algebras, skew-tilings and tagged permissible arcs."""
    level = os.environ.get(LOG_ENV, "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    ctx.ensure_object(dict)
    ctx.obj["format"] = fmt


# ---------------------------------------------------------------- algebra commands

PRESENTATIONS = ("g", "sp", "sg", "bowtie", "star")


def _presentation(t, which):
    if which == "g":
        return gentle_presentation(t)
    if which in ("sp", "sg"):
        sp, sg = build_sp(t)
        return sp if which == "sp" else sg
    if which == "bowtie":
        return build_bowtie(t)
    return build_star(t)


@cli.command()
@click.argument("triple")
@click.option("--which", type=click.Choice(PRESENTATIONS + ("all",)), default="all")
@click.pass_context
def build(ctx, triple, which):
    """Build the derived presentations of a skew-gentle triple."""
    def go():
        t = load_triple(triple)
        names = PRESENTATIONS if which == "all" else (which,)
        doc = {n: presentation_to_dict(_presentation(t, n)) for n in names}

        def human(d):
            lines = []
            for n, p in d.items():
                lines.append(f"[{n}] {len(p['vertices'])} vertices, {len(p['arrows'])} arrows, "
                             f"{len(p['relations'])} zero relations, {len(p['binomial'])} binomial")
            return "\n".join(lines)
        emit(ctx, doc, human)
    _run(go)


@cli.command()
@click.argument("source")
@click.option("--which", type=click.Choice(PRESENTATIONS + ("all",)), default="all")
@click.option("--max-len", type=click.IntRange(min=1), default=None, help="Path length cap.")
@click.pass_context
def cartan(ctx, source, which, max_len):
    """Cartan matrices and exact determinants (triple or presentation JSON)."""
    def go():
        doc = _load_json(source) if _is_file(source) else None
        if doc is not None and doc.get("format") == PRESENTATION_FORMAT:
            p = _parsed(lambda d: presentation_from_dict(d), source)
            mats = {p.name or "presentation": cartan_of(p)}
        else:
            t = load_triple(source)
            fam = cartan_family(t, max_len)
            mats = fam if which == "all" else {which: fam[which]}
        out = {n: m.to_dict() for n, m in mats.items()}

        def human(d):
            return "\n\n".join(f"[{n}] det = {m['det']}\n" + matrix_text(m["labels"], m["rows"])
                               for n, m in d.items())
        emit(ctx, out, human)
    _run(go)


@cli.command()
@click.argument("triple")
@click.pass_context
def cycles(ctx, triple):
    """Minimal oriented cycles with full zero relations."""
    def go():
        t = load_triple(triple)
        c = count_full_zero_cycles(t.quiver, t.relations)
        doc = {"cycles": [list(x) for x in c.cycles], "ec": c.ec, "oc": c.oc}
        emit(ctx, doc, lambda d: "\n".join([f"ec = {d['ec']}, oc = {d['oc']}"]
                                           + [" -> ".join(x) for x in d["cycles"]]))
    _run(go)


@cli.command()
@click.argument("triple")
@click.pass_context
def check(ctx, triple):
    """Are tau-rigid modules determined by dimension vectors?  Exit 0 yes, 1 no."""
    def go():
        t = load_triple(triple)
        rep = check_theorem_4_4(t)
        doc = rep.to_dict()

        def human(d):
            s = f"determined: {d['determined_by_dimension_vectors']}\ndet C_sg = {d['det_sg']}"
            if d["witness"]:
                s += "\nwitness: " + " -> ".join(d["witness"])
            return s
        emit(ctx, doc, human)
        return rep.determined_by_dimension_vectors
    ok = _run(go)
    ctx.exit(0 if ok else 1)


# ---------------------------------------------------------------- tilings

@cli.command()
@click.argument("action", type=click.Choice(["validate", "algebra", "unfold", "original", "tagged", "svg",
                                             "list"]))
@click.argument("source", required=False)
@click.pass_context
def tiling(ctx, action, source):
    """Tiling operations; SOURCE is a JSON file or a built-in example name."""
    def go():
        if action == "list":
            emit(ctx, sorted(TILINGS), lambda d: "\n".join(d))
            return
        if source is None:
            raise InputError("missing SOURCE")
        t = load_tiling(source)
        if action == "validate":
            rep = validate_tiling(t)
            doc = rep.to_dict()
            doc["obstruction_tiles"] = obstruction_tiles(t) if rep.ok else []
            emit(ctx, doc, lambda d: ("valid" if d["ok"] else "invalid") + "".join(
                f"\n  {p}" for p in d["problems"]))
            if not rep.ok:
                ctx.exit(1)
        elif action == "algebra":
            emit(ctx, {"presentation": presentation_to_dict(extract_algebra(t)),
                       "triple": triple_to_dict(triple_of(t))})
        elif action == "unfold":
            emit(ctx, unfold(t).to_dict())
        elif action == "original":
            emit(ctx, original_tiling(t).to_dict())
        elif action == "tagged":
            tg = tagged_version(t)
            emit(ctx, {"arcs": list(tg.arcs),
                       "punctures": [{"puncture": p.puncture, "loop": p.loop, "base": p.base,
                                      "minus": p.minus, "plus": p.plus} for p in tg.punctures]},
                 lambda d: " ".join(d["arcs"]))
        else:
            click.echo(tiling_svg(t))
    _run(go)


# ---------------------------------------------------------------- arcs

@cli.command()
@click.argument("action", type=click.Choice(["validate", "int", "vector", "enumerate"]))
@click.argument("inputs", nargs=-1)
@click.option("-t", "--tiling", "tiling_src", required=True, help="Tiling JSON file or built-in name.")
@click.option("--max-crossings", type=click.IntRange(min=0), default=4)
@click.pass_context
def arcs(ctx, action, inputs, tiling_src, max_crossings):
    """Tagged permissible arcs: validate ARC, int ARC ARC, vector MULTISET, enumerate."""
    def go():
        cx = CutComplex(load_tiling(tiling_src))
        need = {"validate": 1, "int": 2, "vector": 1, "enumerate": 0}[action]
        if len(inputs) != need:
            raise InputError(f"{action} takes {need} input file(s)")
        if action == "validate":
            a = _parsed(lambda d: arc_from_dict(cx, d), inputs[0])
            rep = validate_permissible(cx, a)
            emit(ctx, rep, lambda d: "permissible" if d["ok"] else "\n".join(d["problems"]))
            if not rep["ok"]:
                ctx.exit(1)
        elif action == "int":
            g, d = (_parsed(lambda doc: arc_from_dict(cx, doc), x) for x in inputs)
            parts = int_components(cx, g, d)
            emit(ctx, {"A": parts.A, "C": parts.C, "D": parts.D, "total": parts.total},
                 lambda x: f"Int = {x['total']} (A={x['A']}, C={x['C']}, D={x['D']})")
        elif action == "vector":
            m = _parsed(lambda doc: multiset_from_dict(cx, doc), inputs[0])
            tg = tagged_version(cx.tiling)
            vec = intersection_vector(cx, m, tg)
            doc = {"labels": list(tg.arcs), "vector": list(vec), "S": sorted(s_invariant(cx, m))}
            emit(ctx, doc, lambda x: " ".join(f"{k}={v}" for k, v in zip(x["labels"], x["vector"]))
                 + f"\nS = {{{', '.join(x['S'])}}}")
        else:
            tg = tagged_version(cx.tiling)
            found = enumerate_arcs(cx, max_crossings)
            doc = [dict(arc_to_dict(cx, a), vector=list(arc_vector(cx, tg, a))) for a in found]

            def human(items):
                lines = [f"{len(items)} arcs (labels {' '.join(tg.arcs)})"]
                for x in items:
                    word = " ".join(f"{c['arc']}/{c['side']}" for c in x["crossings"])
                    ends = [f"{x[e]['anchor']}{'*' if x[e]['tag'] == 'notched' else ''}" for e in ("end0", "end1")]
                    lines.append(f"  {ends[0]} -> {ends[1]}: {word}  {x['vector']}")
                return "\n".join(lines)
            emit(ctx, doc, human)
    _run(go)


# ---------------------------------------------------------------- unfolding

@cli.command("unfold-map")
@click.argument("action", type=click.Choice(["phi", "Phi", "recover", "check-lemma32", "check-thm34",
                                             "check-thm36"]))
@click.argument("inputs", nargs=-1)
@click.option("-t", "--tiling", "tiling_src", required=True, help="Tiling JSON file or built-in name.")
@click.option("--special", default="", help="Comma separated punctures (recover).")
@click.option("--max-crossings", type=click.IntRange(min=1), default=4)
@click.option("--max-size", type=click.IntRange(min=1), default=3)
@click.pass_context
def unfold_map(ctx, action, inputs, tiling_src, special, max_crossings, max_size):
    """Transport arcs to the unfolded tiling and run the equivalence checks."""
    def go():
        fc = FoldingContext(load_tiling(tiling_src))
        if action == "phi":
            a = _parsed(lambda d: arc_from_dict(fc.cx, d), _one(inputs))
            emit(ctx, arc_to_dict(fc.cx_star, fc.phi(a)))
        elif action == "Phi":
            m = _parsed(lambda d: multiset_from_dict(fc.cx, d), _one(inputs))
            emit(ctx, multiset_to_dict(fc.cx_star, fc.Phi(m)))
        elif action == "recover":
            m = _parsed(lambda d: multiset_from_dict(fc.cx_star, d), _one(inputs))
            sp = [p for p in special.split(",") if p]
            emit(ctx, multiset_to_dict(fc.cx, fc.recover(m, sp)))
        elif action == "check-lemma32":
            m = _parsed(lambda d: multiset_from_dict(fc.cx, d), _one(inputs))
            checks = [c.to_dict() for c in check_lemma_3_2(fc, m)]
            emit(ctx, checks, lambda d: "\n".join(
                f"{'ok  ' if c['ok'] else 'FAIL'} {c['identity']}: {c['unfolded']} vs {c['tagged']}" for c in d))
            if not all(c["ok"] for c in checks):
                ctx.exit(1)
        elif action == "check-thm34":
            if inputs:
                if len(inputs) != 2:
                    raise InputError("check-thm34 takes two multiset files or none")
                fam = [_parsed(lambda d: multiset_from_dict(fc.cx, d), x) for x in inputs]
            else:
                fam = compatible_multisets(fc.cx, enumerate_arcs(fc.cx, max_crossings), max_size)
            rep = check_theorem_3_4_family(fc, fam)
            doc = {"multisets": rep.multisets, "equal_pairs_tagged": rep.pairs_equal_tagged,
                   "equal_pairs_unfolded": rep.pairs_equal_unfolded, "agree": rep.ok}
            emit(ctx, doc, lambda d: f"{d['multisets']} multisets, agree: {d['agree']}")
            if not rep.ok:
                ctx.exit(1)
        else:
            fam = compatible_multisets(fc.cx, enumerate_arcs(fc.cx, max_crossings), max_size)
            rep = check_injectivity(fc, fam)
            doc = rep.to_dict()
            if rep.collisions:
                m, n = rep.collisions[0]
                doc["example"] = [multiset_to_dict(fc.cx, m), multiset_to_dict(fc.cx, n)]
            emit(ctx, doc, lambda d: f"{d['multisets']} multisets, injective: {d['injective']}, "
                                     f"obstruction-free: {d['hypothesis_holds']}")
    _run(go)


def _one(inputs):
    if len(inputs) != 1:
        raise InputError("expected exactly one input file")
    return inputs[0]


# ---------------------------------------------------------------- demo and selftest

def demo_report(name: str) -> dict:
    t = TRIPLES["odd" if name == "ex51" else "even"]()
    fam = cartan_family(t)
    rep = check_theorem_4_4(t)
    return {
        "triple": triple_to_dict(t),
        "presentations": {n: presentation_to_dict(_presentation(t, n)) for n in PRESENTATIONS},
        "cartan": {n: m.to_dict() for n, m in fam.items()},
        "basis_size_sg": path_basis_size(t),
        "criterion": rep.to_dict(),
    }


@cli.command()
@click.argument("example", type=click.Choice(["ex51", "ex52"]))
@click.pass_context
def demo(ctx, example):
    """Full pipeline on the odd (ex51) or even (ex52) cycle example."""
    def human(d):
        parts = []
        for n, m in d["cartan"].items():
            parts.append(f"C_{n}: det = {m['det']}\n" + matrix_text(m["labels"], m["rows"]))
        c = d["criterion"]
        tail = f"determined: {c['determined_by_dimension_vectors']}"
        if c["witness"]:
            tail += "\nwitness: " + " -> ".join(c["witness"])
        return "\n\n".join(parts) + "\n\n" + tail
    _run(lambda: emit(ctx, demo_report(example), human))


def selftest_results() -> list[tuple[str, bool, float]]:
    out = []

    def run(name, fn):
        t0 = time.perf_counter()
        try:
            ok = bool(fn())
        except SkewtileError as e:
            log.error("%s: %s", name, e)
            ok = False
        out.append((name, ok, time.perf_counter() - t0))

    run("odd example determinants 2 4 2 2", lambda: [det_exact(cartan_family(TRIPLES["odd"]())[k])
                                                     for k in ("g", "sp", "sg", "star")] == [2, 4, 2, 2])
    run("even example determinants all 0", lambda: all(
        det_exact(m) == 0 for m in cartan_family(TRIPLES["even"]()).values()))
    run("even example verdict no", lambda: not check_theorem_4_4(TRIPLES["even"]()).determined_by_dimension_vectors)
    run("built-in tilings valid", lambda: all(validate_tiling(f()).ok for f in TILINGS.values()))

    def identities():
        fc = FoldingContext(TILINGS["odd"]())
        fam = compatible_multisets(fc.cx, enumerate_arcs(fc.cx, 3), 2)
        return all(c.ok for m in fam for c in check_lemma_3_2(fc, m))
    run("unfolding identities on the odd tiling", identities)
    return out


@cli.command()
@click.pass_context
def selftest(ctx):
    """Quick golden and consistency checks; exit 1 on any failure."""
    res = selftest_results()
    emit(ctx, [{"check": n, "ok": ok, "seconds": round(s, 3)} for n, ok, s in res],
         lambda d: "\n".join(f"{'PASS' if x['ok'] else 'FAIL'} {x['check']} ({x['seconds']}s)" for x in d))
    ctx.exit(0 if all(ok for _, ok, _ in res) else 1)


def main(argv=None):
    cli.main(args=argv, prog_name="skewtile")


if __name__ == "__main__":
    main()
