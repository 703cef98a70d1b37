"""Command-line interface.

All data goes to stdout, diagnostics to stderr.  Output is canonically
ordered, so identical invocations are byte-identical.  Exit codes:
0 success, 1 usage error, 2 computation error (cap exceeded, not a solution),
3 verification or divergence failure.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys

from .cartan import build_cartan, parse_type, weyl_order
from .errors import ComputationError, UsageError
from .orbits import DEFAULT_EXPAND_CAP, expand_orbit, orbit_seeds
from .ordering import bruhat_from_primary, bruhat_from_subwords, emit_dot, reduced_words
from .quadrics import QuadForm, primary_form, secondary_form
from .verify import run_verification
from .weyl import (
    DEFAULT_TABLE_CAP,
    P_map,
    S_map,
    build_group_table,
    element_from_pvector,
    word_to_element,
)

SAFE_INT = 2**53


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits with 2; usage errors are 1 here
        raise UsageError(message)


def _json_int(v: int):
    return v if abs(v) < SAFE_INT else str(v)


def _vec(v) -> str:
    return ",".join(str(x) for x in v)


def _parse_int_vector(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise UsageError(f"cannot parse {what} {text!r}: expected comma-separated integers")


def _parse_word(text: str) -> tuple[int, ...]:
    if text.strip() == "":
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise UsageError(f"cannot parse word {text!r}: expected comma-separated indices")


def _quadform_json(form: QuadForm) -> dict:
    return {
        "n": form.n,
        "quad": [list(row) for row in form.quad],
        "linear": list(form.linear),
        "constant": form.constant,
        "convention": "value(x) = x.quad.x/2 + linear.x + constant",
    }


def _poset_json(p) -> dict:
    return {
        "nodes": [list(v) for v in p.nodes],
        "covers": sorted([a, b] for a, b in p.covers),
        "kind": p.kind,
    }


def _cmd_info(args) -> int:
    cd = build_cartan(parse_type(args.type))
    out = sys.stdout
    print(f"type: {cd.spec}", file=out)
    print(f"rank: {cd.n}", file=out)
    print(f"detA: {cd.detA}", file=out)
    print(f"weyl_order: {weyl_order(cd)}", file=out)
    print(f"k: ({_vec(cd.k)})", file=out)
    print(f"delta: ({','.join(str(d) for d in cd.delta)})", file=out)
    print("cartan_matrix:", file=out)
    for row in cd.A:
        print(f"  [{' '.join(f'{v:3d}' for v in row)}]", file=out)
    return 0


def _cmd_equation(args, which: str) -> int:
    cd = build_cartan(parse_type(args.type))
    form = primary_form(cd) if which == "primary" else secondary_form(cd)
    var = "x" if which == "primary" else "h"
    if args.json:
        payload = {"type": str(cd.spec), "equation": form.equation_text(var)}
        payload.update(_quadform_json(form))
        print(json.dumps(payload, indent=2))
    else:
        print(form.equation_text(var))
    return 0


def _cmd_orbits(args) -> int:
    if args.csv and args.expand:
        raise UsageError("--expand is not available with --csv output")
    cd = build_cartan(parse_type(args.type))
    cap = args.cap if args.cap is not None else DEFAULT_EXPAND_CAP
    records = orbit_seeds(cd, threads=args.threads)
    if args.expand:
        expanded = []
        for rec in records:
            if rec.size <= cap:
                elements = tuple(expand_orbit(rec.minimal, cd, cap=cap))
                expanded.append(dataclasses.replace(rec, elements=elements))
            else:
                print(
                    f"orbit at h=({_vec(rec.h)}) has size {rec.size} > cap {cap}; elements omitted",
                    file=sys.stderr,
                )
                expanded.append(rec)
        records = expanded
    if args.json:
        payload = {
            "type": str(cd.spec),
            "orbits": [
                {
                    "h": list(rec.h),
                    "minimal": list(rec.minimal),
                    "size": _json_int(rec.size),
                    **(
                        {"elements": [list(e) for e in rec.elements]}
                        if rec.elements is not None
                        else {}
                    ),
                }
                for rec in records
            ],
        }
        print(json.dumps(payload, indent=2))
    elif args.csv:
        print("h;minimal;size")
        for rec in records:
            print(f"{_vec(rec.h)};{_vec(rec.minimal)};{rec.size}")
    else:
        print(f"type: {cd.spec}")
        print(f"orbits: {len(records)}")
        for rec in records:
            print(f"h=({_vec(rec.h)}) minimal=({_vec(rec.minimal)}) size={rec.size}")
            if rec.elements is not None:
                for e in rec.elements:
                    print(f"  ({_vec(e)})")
    return 0


def _cmd_expand(args) -> int:
    cd = build_cartan(parse_type(args.type))
    point = _parse_int_vector(args.point, "point") if args.point else (0,) * cd.n
    cap = args.cap if args.cap is not None else DEFAULT_EXPAND_CAP
    elements = expand_orbit(point, cd, cap=cap)
    if args.json:
        print(json.dumps({"type": str(cd.spec), "elements": [list(e) for e in elements]}))
    else:
        for e in elements:
            print(_vec(e))
    return 0


def _cmd_realize(args) -> int:
    cd = build_cartan(parse_type(args.type))
    w = word_to_element(_parse_word(args.word), cd)
    p = P_map(w, cd)
    s = S_map(w, cd)
    length = len(element_from_pvector(p, cd).word)
    if args.json:
        payload = {
            "type": str(cd.spec),
            "word": list(w.word),
            "length": length,
            "matrix": [list(row) for row in w.mat],
            "pvector": list(p),
            "svector": list(s),
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"type: {cd.spec}")
        print(f"word: {_vec(w.word) if w.word else '(empty)'}")
        print(f"length: {length}")
        print("matrix:")
        for row in w.mat:
            print(f"  [{' '.join(f'{v:3d}' for v in row)}]")
        print(f"P: ({_vec(p)})")
        print(f"S: ({_vec(s)})")
    return 0


def _cmd_reduced_words(args) -> int:
    cd = build_cartan(parse_type(args.type))
    if (args.word is None) == (args.pvector is None):
        raise UsageError("provide exactly one of --word or --pvector")
    if args.word is not None:
        w = word_to_element(_parse_word(args.word), cd)
    else:
        w = element_from_pvector(_parse_int_vector(args.pvector, "pvector"), cd)
    rws = reduced_words(w, cd)
    if args.json:
        payload = {
            "type": str(cd.spec),
            "element": list(rws.element),
            "length": rws.length,
            "count": len(rws.words),
            "words": [list(word) for word in rws.words],
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"element: ({_vec(rws.element)})")
        print(f"length: {rws.length}")
        print(f"count: {len(rws.words)}")
        for word in rws.words:
            print(_vec(word) if word else "(empty)")
    return 0


def _cmd_bruhat(args) -> int:
    cd = build_cartan(parse_type(args.type))
    cap = args.cap if args.cap is not None else DEFAULT_TABLE_CAP
    table = build_group_table(cd, cap=cap)
    diverged = False
    if args.method == "primary":
        poset = bruhat_from_primary(table)
    elif args.method == "subword":
        poset = bruhat_from_subwords(table)
    else:
        filtered = bruhat_from_primary(table)
        poset = bruhat_from_subwords(table)
        rel_f, rel_s = filtered.relation(), poset.relation()
        if rel_f != rel_s:
            diverged = True
            print(
                f"bruhat constructions disagree on {cd.spec}: "
                f"link-filter has {len(rel_f)} relations, subword has {len(rel_s)} "
                f"(missing {len(rel_s - rel_f)}, extra {len(rel_f - rel_s)})",
                file=sys.stderr,
            )
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(emit_dot(poset))
    if args.json:
        print(json.dumps(_poset_json(poset), indent=2))
    elif not args.dot:
        print(f"type: {cd.spec}")
        print(f"kind: {poset.kind}")
        print(f"nodes: {len(poset.nodes)}")
        print(f"covers: {len(poset.covers)}")
        for a, b in poset.cover_vectors():
            print(f"({_vec(a)}) < ({_vec(b)})")
    return 3 if diverged else 0


def _cmd_verify(args) -> int:
    cd = build_cartan(parse_type(args.type))
    results = run_verification(cd)
    failed = 0
    for res in results:
        line = f"{res.status:4s} {res.name}"
        if res.detail:
            line += f": {res.detail}"
        print(line)
        failed += res.status == "FAIL"
    passed = sum(1 for r in results if r.status == "PASS")
    skipped = sum(1 for r in results if r.status == "SKIP")
    print(f"summary: {passed} passed, {failed} failed, {skipped} skipped")
    return 3 if failed else 0


def build_parser() -> _Parser:
    parser = _Parser(prog="weylipse", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("type", help="type string, e.g. A3 or B2xG2")
        p.set_defaults(func=func)
        return p

    add("info", _cmd_info, help="rank, Cartan matrix, weights, delta, detA, |W|")

    p = add("primary-eq", lambda a: _cmd_equation(a, "primary"), help="primary quadric equation")
    p.add_argument("--json", action="store_true")
    p = add("secondary-eq", lambda a: _cmd_equation(a, "secondary"), help="secondary quadric equation")
    p.add_argument("--json", action="store_true")

    p = add("orbits", _cmd_orbits, help="orbit census: h, minimal vector, size")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    p.add_argument("--expand", action="store_true", help="include orbit elements (subject to cap)")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--threads", type=int, default=1)

    p = add("expand", _cmd_expand, help="expand one orbit from a starting point")
    p.add_argument("--point", default=None, help="comma-separated start, default origin")
    p.add_argument("--json", action="store_true")
    p.add_argument("--cap", type=int, default=None)

    p = add("realize", _cmd_realize, help="matrix, P- and S-vector of a word")
    p.add_argument("--word", required=True, help='comma-separated indices, "" for identity')
    p.add_argument("--json", action="store_true")

    p = add("reduced-words", _cmd_reduced_words, help="all reduced expressions of an element")
    p.add_argument("--word", default=None)
    p.add_argument("--pvector", default=None)
    p.add_argument("--json", action="store_true")

    p = add("bruhat", _cmd_bruhat, help="Bruhat order poset (exit 3 if methods disagree)")
    p.add_argument("--method", choices=["primary", "subword", "both"], default="both")
    p.add_argument("--dot", default=None, metavar="FILE")
    p.add_argument("--json", action="store_true")
    p.add_argument("--cap", type=int, default=None)

    add("verify", _cmd_verify, help="run the invariant suite sized to this type")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ComputationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    try:
        code = main()
        sys.stdout.flush()
    except BrokenPipeError:
        # downstream consumer (e.g. head) closed the pipe; not an error
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        code = 0
    sys.exit(code)


if __name__ == "__main__":
    entrypoint()
