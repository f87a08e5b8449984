"""Command line front end: parse a program, run its command, print JSON.

    planarmcg prog.txt --bound 3
    echo "surface(3) tw{1,2} tw{1,2|s2^-1} mult" | planarmcg -
    planarmcg -e "surface(3) tw{1} tw{2} enumerate" --bound 0

Exit status is 0 on success, 1 on bad input and 2 when a search hits its
candidate ceiling.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
import time
from pathlib import Path

from . import archive
from .dsl import DSLSemanticError, DSLSyntaxError, Program, Twist, parse
from .factorization import (
    Factorization,
    hurwitz_move,
    multiplicity_profile,
    product,
)
from .filling import b2_conjugator, h1
from .mcg import BoundaryViolationError, curve, format_braid
from .pa import NotATwistPairStretch, growth_rate, stretch_from_z, z_from_stretch
from .search import ResourceLimitError, SearchConfig, enumerate_factorizations, profile_multisets
from .words import Word


class InputError(ValueError):
    pass


def _profile_json(F: Factorization) -> dict:
    p = multiplicity_profile(F)
    return {"M": list(p.M), "J": {f"{i},{j}": v for (i, j), v in p.pairs().items()}}


def _product(p: Program, opts) -> tuple[dict, dict]:
    f = product(p.factorization).check()
    return {
        "images": [str(Word(w, p.n)) for w in f.images],
        "framing": list(f.framing),
        "braid": format_braid(f.braid),
        "pure": f.is_pure(),
    }, {}


def _mult(p: Program, opts):
    return _profile_json(p.factorization), {}


def _relations(p: Program, opts):
    F = p.factorization
    phi = product(F)
    pairs = []
    for (i, a), (j, b) in itertools.combinations(enumerate(F, 1), 2):
        ta, tb = a.twist, b.twist
        A, B = set(a.enclosed), set(b.enclosed)
        pairs.append({
            "factors": [i, j],
            "commute": ta * tb == tb * ta,
            "sets_nested_or_disjoint": A <= B or B <= A or not (A & B),
        })
    moves = [product(hurwitz_move(F, i)) == phi for i in range(1, len(F))]
    return {"pairs": pairs, "hurwitz_preserves_product": moves}, {}


def _hurwitz(p: Program, opts):
    F = p.factorization
    i = 1 if p.arg is None else p.arg
    if not 1 <= i < len(F):
        raise InputError(f"Hurwitz position {i} outside 1..{len(F) - 1}")
    G = hurwitz_move(F, i)
    return {
        "position": i,
        "factorization": archive.record(G),
        "classes": [str(c.cls) for c in G],
        "product_preserved": product(G) == product(F),
        "profile_preserved": multiplicity_profile(G) == multiplicity_profile(F),
    }, {}


def _seed(p: Program, opts):
    if opts.seed_set:
        text = opts.seed_set.strip()
        try:
            st = parse(f"surface({p.n}) tw{text} product").statements[0]
        except (DSLSyntaxError, DSLSemanticError) as e:
            raise InputError(f"bad --seed-set {text!r}: {e}") from None
        return curve(st.S, p.n, st.conj)
    rest = [c for c in p.factorization if not c.is_boundary]
    if not rest:
        raise InputError("no essential factor to use as seed; pass --seed-set")
    return rest[0]


def _stretch(p: Program, opts):
    seed = _seed(p, opts)
    if opts.iters < 2:
        raise InputError("--iters must be at least 2")
    g = growth_rate(product(p.factorization), seed, opts.iters)
    out = {"growth_rate": g, "seed": archive.curve_record(seed), "z": None, "trace": None, "stretch_from_z": None}
    if g > 1.5:
        try:
            z = z_from_stretch(g)
            out.update(z=z, trace=2 - z * z, stretch_from_z=stretch_from_z(z))
        except NotATwistPairStretch:
            pass
    return out, {"iters": opts.iters}


def _config(opts) -> SearchConfig:
    return SearchConfig(conjugator_bound=opts.bound, dedupe_bound=opts.dedupe_bound,
                        workers=opts.threads, max_candidates=opts.max_candidates)


def _bounds(opts) -> dict:
    return {"conjugator_bound": opts.bound, "dedupe_bound": opts.dedupe_bound,
            "max_candidates": opts.max_candidates}


def _class_json(c) -> dict:
    sets, traces = c.signature
    return {
        "representative": archive.record(c.representative),
        "signature": {"sets": [list(s) for s in sets], "traces": list(traces)},
        "members_found": c.members_found,
        "contains_target": c.contains_target,
        "possibly_equivalent": c.possibly_equivalent,
        "invariants": h1(c.representative).summary(),
    }


def _enumerate(p: Program, opts):
    classes = enumerate_factorizations(p.factorization, _config(opts))
    return {"class_count": len(classes), "classes": [_class_json(c) for c in classes]}, _bounds(opts)


def _verify(p: Program, opts):
    classes = enumerate_factorizations(p.factorization, _config(opts))
    inv = [h1(c.representative).summary() for c in classes]
    return {
        "class_count": len(classes),
        "all_invariants_equal": all(x == inv[0] for x in inv),
        "invariants": inv,
    }, _bounds(opts)


def _invariants(p: Program, opts):
    inv = h1(p.factorization)
    out = inv.summary()
    out["relation_matrix"] = [list(r) for r in inv.relation_matrix]
    return out, {}


def _family(p: Program, opts):
    fam = next((st for st in p.statements if not isinstance(st, Twist)), None)
    if fam is None:
        raise InputError("family needs a family(...) or twistknot(...) statement")
    F = fam.expand()
    if fam.kind == "family":
        n, k, pp, q = fam.params
    else:
        pp, n, k = fam.params
        q = 1
    expected = tuple(sorted((c.enclosed for c in F), key=lambda s: (len(s), s)))
    return {
        "statement": fam.text(),
        "parameters": {"n": n, "k": k, "p": pp, "q": q},
        "factorization": archive.record(F),
        "profile": _profile_json(F),
        "b2_conjugator": format_braid(b2_conjugator(n, k, pp, q)),
        "profile_multiset_found": expected in profile_multisets(multiplicity_profile(F)),
        # recorded value for the twist knot members, not computed from the page
        "page_framing": -n if fam.kind == "twistknot" else None,
    }, {}


RUNNERS = {
    "product": _product,
    "mult": _mult,
    "relations-check": _relations,
    "hurwitz": _hurwitz,
    "enumerate": _enumerate,
    "stretch": _stretch,
    "invariants": _invariants,
    "family": _family,
    "verify-unique": _verify,
}


def run(p: Program, opts=None) -> dict:
    opts = opts or build_parser().parse_args(["-e", ""])
    t0 = time.perf_counter()
    results, bounds = RUNNERS[p.command](p, opts)
    elapsed = time.perf_counter() - t0
    return {
        "command": p.command if p.arg is None else f"{p.command}({p.arg})",
        "surface": p.n,
        "inputs": archive.record(p.factorization),
        "results": results,
        "bounds_used": bounds,
        "timing": {"seconds": round(elapsed, 6)} if opts.timing else None,
    }


def _leaves(obj, prefix=""):
    if isinstance(obj, (dict, list)) and not obj:
        yield prefix, json.dumps(obj)
    elif isinstance(obj, dict):
        for k in sorted(obj):
            yield from _leaves(obj[k], f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(obj, list):
        for i, v in enumerate(obj):
            yield from _leaves(v, f"{prefix}[{i}]")
    else:
        yield prefix, json.dumps(obj)


def render(doc: dict, fmt: str = "json") -> str:
    if fmt == "tsv":
        return "".join(f"{k}\t{v}\n" for k, v in _leaves(doc))
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="planarmcg", description="Dehn twist factorizations on the holed disk.")
    ap.add_argument("source", nargs="?", help="program file, or - for stdin")
    ap.add_argument("-e", "--expr", help="program text")
    ap.add_argument("--archive", help="JSON-lines file; its first factorization is the monodromy")
    ap.add_argument("--bound", type=int, default=2)
    ap.add_argument("--dedupe-bound", type=int, default=2)
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--iters", type=int, default=20)
    ap.add_argument("--seed-set", help='seed curve for stretch, e.g. "{1,2}" or "{1,2|s2}"')
    ap.add_argument("--max-candidates", type=int, default=2_000_000)
    ap.add_argument("--format", choices=("json", "tsv"), default="json")
    ap.add_argument("--timing", action="store_true", help="report wall time (breaks byte-identical output)")
    ap.add_argument("-o", "--output", help="write the document here instead of stdout")
    return ap


def _read_program(opts) -> Program:
    if opts.expr is not None:
        text = opts.expr
    elif opts.source == "-":
        text = sys.stdin.read()
    elif opts.source:
        text = Path(opts.source).read_text()
    else:
        raise InputError("no program given")
    if opts.archive:
        with open(opts.archive) as fh:
            F = next(archive.read(fh), None)
        if F is None:
            raise InputError(f"{opts.archive} holds no factorization")
        # the program is just a command; statements come from the archive
        stmts = "\n".join(Twist(c.enclosed, c.conjugator).text() for c in F)
        text = f"surface({F.n})\n{stmts}\n{text}"
    return parse(text)


def main(argv=None) -> int:
    opts = build_parser().parse_args(argv)
    try:
        if min(opts.bound, opts.dedupe_bound, opts.max_candidates) < 0 or opts.threads < 1:
            raise InputError("bounds must be nonnegative and --threads positive")
        prog = _read_program(opts)
        doc = run(prog, opts)
    except ResourceLimitError as e:
        print(f"planarmcg: resource limit: {e}", file=sys.stderr)
        return 2
    except (DSLSyntaxError, DSLSemanticError, InputError, OSError, ValueError, IndexError) as e:
        print(f"planarmcg: {e}", file=sys.stderr)
        return 1
    except BoundaryViolationError as e:
        print(f"planarmcg: internal error: {e}", file=sys.stderr)
        return 1
    out = render(doc, opts.format)
    if opts.output:
        Path(opts.output).write_text(out)
    else:
        sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
