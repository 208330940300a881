"""Command-line entry point: ``hfsplice {splice,cfd,cfa,check,export-dot}``."""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import extremal
from .cfd_builder import CfdLayout
from .cfk_complex import ComplexError, SimplificationError, check_normal_form, validate
from .knot_library import FixtureEntry, resolve
from .pairing import BoundednessError, box_tensor, default_budget, homology_rank, splice
from .type_a import ImplicitTypeA, box_with_dd_identity, check_ainfty, multiplication_graph
from .type_d import LABELS, Report, TypeDStructure, check_structure, is_reduced


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _load(spec: str) -> FixtureEntry:
    try:
        return resolve(spec)
    except KeyError as e:
        raise UsageError(str(e)) from None
    except FileNotFoundError:
        raise UsageError(f"{spec!r} is neither a built-in knot nor a readable file") from None


def _write(text: str, path: str | None) -> None:
    if path in (None, "-"):
        print(text)
    else:
        with open(path, "w") as fh:
            fh.write(text + "\n")


def _raw_genus(d: TypeDStructure) -> int:
    if d.alexander is None:
        raise UsageError("a raw type D structure needs Alexander gradings here")
    return int(-min(d.alexander))


def _raw_bottom(d: TypeDStructure) -> list[int]:
    low = min(a for a, i in zip(d.alexander, d.idempotents) if i == 0)
    return [k for k, (a, i) in enumerate(zip(d.alexander, d.idempotents)) if i == 0 and a == low]


# -- subcommands --------------------------------------------------------


def cmd_splice(args) -> int:
    e1, e2 = _load(args.k1), _load(args.k2)
    t0 = time.perf_counter()
    if e1.is_complex and e2.is_complex:
        rep = splice(e1.layout(), e2.layout(), args.budget)
        out = rep.to_json()
        box = rep.box
        bold = frozenset(rep.bold_generators)
    else:
        d1, d2 = e1.cfd(), e2.cfd()
        budget = args.budget or default_budget(_raw_genus(d1), _raw_genus(d2))
        box = box_tensor(ImplicitTypeA(d1), d2, budget)
        out = {
            "total_rank": homology_rank(box),
            "ranks_by_grading": {str(s): r for s, r in box.grading_dims().items()},
            "lower_bound": None,
            "lower_bound_holds": None,
            "bold_generators": [],
        }
        bold = frozenset()
    out["knots"] = [e1.name, e2.name]
    out["generators"] = box.dim
    out["arrows"] = len(box.arrows())
    elapsed = time.perf_counter() - t0
    if args.dot:
        _write(box.to_dot(f"{e1.name} x {e2.name}", bold), args.dot)
    if args.json:
        print(_dump(out))
        return 0
    print(f"splice {e1.name} {e2.name}")
    print(f"  total rank      {out['total_rank']}")
    print(f"  box complex     {out['generators']} generators, {out['arrows']} arrows")
    if out["lower_bound"] is not None:
        print(f"  lower bound     {out['lower_bound']} ({'holds' if out['lower_bound_holds'] else 'VIOLATED'})")
        print(f"  bold generators {', '.join(out['bold_generators'])}")
    print("  dim of box complex by grading A1 + A2:")
    for s, r in out["ranks_by_grading"].items():
        print(f"    {s:>4}  {r}")
    print(f"  time            {elapsed:.3f} s")
    return 0


def _layout_summary(lay: CfdLayout) -> dict:
    nf = lay.nf
    d = lay.structure
    return {
        "genus": nf.genus,
        "tau": nf.tau,
        "epsilon": nf.epsilon,
        "n": nf.n,
        "vertical_lengths": [a.length for a in nf.vertical_arrows],
        "horizontal_lengths": [a.length for a in nf.horizontal_arrows],
        "B": [d.names[i] for i in lay.b_set],
        "V": [d.names[i] for i in lay.v_set],
        "H": [d.names[i] for i in lay.h_set],
    }


def cmd_cfd(args) -> int:
    e = _load(args.knot)
    d = e.cfd()
    if args.dot:
        _write(d.to_dot(e.name), args.dot)
    summary = {"name": e.name, "structure": d.to_json()}
    if e.is_complex:
        summary["normal_form"] = _layout_summary(e.layout())
    if args.json:
        print(_dump(summary))
        return 0
    print(f"CFD {e.name}: {d.dim} generators ({d.dim0} in idempotent 0, {d.dim1} in idempotent 1)")
    if e.is_complex:
        for k, v in summary["normal_form"].items():
            print(f"  {k:<19}{v}")
    for s, l, t in d.arrows():
        print(f"  {s} --D{l}--> {t}")
    return 0


def cmd_cfa(args) -> int:
    e = _load(args.knot)
    a = ImplicitTypeA(e.cfd())
    g = multiplication_graph(a, args.max_len)
    if args.dot:
        _write(g.to_dot(e.name), args.dot)
    edges = [{"from": s, "inputs": list(seq), "to": t} for s, seq, t in g.edges]
    if args.json:
        print(_dump({"name": e.name, "max_len": args.max_len, "truncated": g.truncated, "multiplications": edges}))
        return 0
    print(f"CFA {e.name}: {len(edges)} nonzero multiplications with at most {args.max_len} algebra inputs")
    for s, seq, t in g.edges:
        print(f"  m{len(seq) + 1}({s}, {', '.join('rho' + w for w in seq)}) = {t}")
    if g.truncated:
        print("  (more multiplications exist beyond the length cap)")
    return 0


def _round_trip(d: TypeDStructure) -> Report:
    rep = Report()
    a = ImplicitTypeA(d)
    back = box_with_dd_identity(a)
    diff = [l or "empty" for l in LABELS if (back.maps[l] ^ d.maps[l]).any()]
    detail = ""
    if diff:
        extra = a.m_matrix(("123",))
        only_123 = diff == ["123"] and ((back.maps["123"] ^ d.maps["123"]) == extra).all()
        detail = f"labels differ: {diff}"
        if only_123:
            detail += "; the discrepancy in D123 is exactly the contribution of m2(x, rho123)"
    rep.add("DD-identity round trip reproduces the structure", not diff, detail)
    return rep


def cmd_check(args) -> int:
    e = _load(args.knot)
    sections: list[tuple[str, Report]] = []
    if e.is_complex:
        sections.append(("complex", validate(e.payload)))
        nf_rep = Report()
        try:
            nf = e.normal_form()
            check_normal_form(nf)
            nf_rep.add("simplified bases and normal form", True)
        except (SimplificationError, ValueError) as err:
            nf_rep.add("simplified bases and normal form", False, str(err))
            sections.append(("normal form", nf_rep))
            return _report(e.name, sections, args.json)
        sections.append(("normal form", nf_rep))
        lay = e.layout()
        d, genus = lay.structure, lay.genus
        b, v, h = lay.b_set, lay.v_set, lay.h_set
    else:
        d = e.payload
        genus = _raw_genus(d)
        b, v, h = _raw_bottom(d), [], []
        if e.expected.get("bottom"):
            b = [d.index(n) for n in e.expected["bottom"]]
    sections.append(("type D structure", check_structure(d)))
    red = Report()
    red.add("reduced (no D_empty)", is_reduced(d))
    sections.append(("reduced", red))
    if not is_reduced(d):
        return _report(e.name, sections, args.json)
    sections.append(("A-infinity", check_ainfty(ImplicitTypeA(d), args.max_ainfty_len)))
    sections.append(("round trip", _round_trip(d)))
    if genus > 0:
        budget = 8 * genus + 4
        sections.append(("extremal (D side)", extremal.check_d_side(d, b, v, h, budget)))
        sections.append(("extremal (A side)", extremal.check_a_side(ImplicitTypeA(d), b, v, args.max_ainfty_len)))
        sections.append(("path lengths", extremal.label_counts_ok(d, genus, budget)))
    return _report(e.name, sections, args.json)


def _report(name: str, sections, as_json: bool) -> int:
    ok = all(r.ok for _, r in sections)
    if as_json:
        print(_dump({
            "name": name,
            "ok": ok,
            "sections": {title: [{"check": c, "ok": good, "detail": det} for c, good, det in r.checks] for title, r in sections},
        }))
    else:
        for title, r in sections:
            print(f"[{title}]")
            for line in r.lines():
                print(f"  {line}")
        print("OK" if ok else "FAILED")
    return 0 if ok else 1


def cmd_export_dot(args) -> int:
    e1 = _load(args.k1)
    if args.kind == "box":
        if not args.k2:
            raise UsageError("export-dot --kind box needs two knots")
        e2 = _load(args.k2)
        rep = splice(e1.layout(), e2.layout(), args.budget)
        text = rep.box.to_dot(f"{e1.name} x {e2.name}", frozenset(rep.bold_generators))
    elif args.kind == "cfd":
        text = e1.cfd().to_dot(e1.name)
    else:
        text = multiplication_graph(ImplicitTypeA(e1.cfd()), args.max_len).to_dot(e1.name)
    _write(text, args.output)
    return 0


# -- parser -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hfsplice", description="Heegaard Floer rank of splices of knot complements.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("splice", help="rank of HF-hat of the splice of two knots")
    s.add_argument("k1")
    s.add_argument("k2")
    s.add_argument("--json", action="store_true")
    s.add_argument("--budget", type=int, default=None, help="maximum label-sequence length in the pairing")
    s.add_argument("--dot", metavar="PATH", help="write the box complex as DOT ('-' for stdout)")
    s.set_defaults(func=cmd_splice)

    c = sub.add_parser("cfd", help="type D structure of the knot complement")
    c.add_argument("knot")
    c.add_argument("--json", action="store_true")
    c.add_argument("--dot", metavar="PATH")
    c.set_defaults(func=cmd_cfd)

    a = sub.add_parser("cfa", help="nonzero A-infinity multiplications of the knot complement")
    a.add_argument("knot")
    a.add_argument("--max-len", type=int, default=6)
    a.add_argument("--json", action="store_true")
    a.add_argument("--dot", metavar="PATH")
    a.set_defaults(func=cmd_cfa)

    k = sub.add_parser("check", help="run the validation suites")
    k.add_argument("knot")
    k.add_argument("--max-ainfty-len", type=int, default=8)
    k.add_argument("--json", action="store_true")
    k.set_defaults(func=cmd_check)

    x = sub.add_parser("export-dot", help="write a CFD, CFA or box-complex diagram")
    x.add_argument("k1")
    x.add_argument("k2", nargs="?")
    x.add_argument("--kind", choices=("cfd", "cfa", "box"), default="box")
    x.add_argument("--max-len", type=int, default=6)
    x.add_argument("--budget", type=int, default=None)
    x.add_argument("-o", "--output", default="-")
    x.set_defaults(func=cmd_export_dot)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"hfsplice: error: {e}", file=sys.stderr)
        return 2
    except json.JSONDecodeError as e:
        print(f"hfsplice: malformed JSON at line {e.lineno} column {e.colno}: {e.msg}", file=sys.stderr)
        return 1
    except (ComplexError, ValueError, TypeError) as e:
        print(f"hfsplice: invalid input: {e}", file=sys.stderr)
        return 1
    except BoundednessError as e:
        print(f"hfsplice: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
