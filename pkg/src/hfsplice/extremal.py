"""Constraints on maps into and out of the extremal subspaces B, V and H.

For a knot in an L-space homology sphere, the bottom Alexander grading B of
the bordered invariant has no incoming maps and only a few outgoing label
patterns, and likewise for V one half-step above.  These checks enumerate
paths (D side) and multiplications (A side) up to a length cap and report
every violation, so the same code certifies built structures and exhibits
the failure on structures that do not come from such knots.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from . import f2
from .type_a import ImplicitTypeA, multiplication_graph
from .type_d import LABELS, Report, TypeDStructure, nonzero_paths


def _fmt(seq: Sequence[str]) -> str:
    return "(" + ",".join(seq) + ")"


def bottom_outgoing_ok(seq: Sequence[str]) -> bool:
    """Allowed D-side label patterns leaving B."""
    r = len(seq)
    if seq[0] not in ("3", "123"):
        return False
    if seq[0] == "123" and r > 1 and seq[1] != "23":
        return False
    if seq[0] == "3" and r > 1:
        if seq[1] not in ("2", "23"):
            return False
        if seq[1] == "2" and r > 2 and seq[2] != "123":
            return False
    return True


def bottom_outgoing_a_ok(seq: Sequence[str]) -> bool:
    """Allowed A-side index patterns leaving B."""
    r = len(seq)
    if seq[0] == "3":
        return r >= 3 and seq[1] == "2" and seq[2] in ("1", "12")
    if seq[0] == "123":
        return r >= 2 and seq[1] == "2"
    return True


def check_d_side(d: TypeDStructure, b: Sequence[int], v: Sequence[int], h: Sequence[int], budget: int) -> Report:
    rep = Report()
    b, v, h = list(b), list(v), list(h)
    bad = [f"D{l} into {d.names[t]}" for l in LABELS[1:] for t in b if d.maps[l][t].any()]
    rep.add("B has no incoming coefficient maps", not bad, ", ".join(bad))

    paths = nonzero_paths(d, budget)
    bad_out, bad_vin, bad_vout = [], [], []
    for seq, M in paths:
        if M[:, b].any() and not bottom_outgoing_ok(seq):
            bad_out.append(f"{_fmt(seq)} from {[d.names[i] for i in b if M[:, i].any()]}")
        if M[v, :].any() and not (len(seq) == 1 and seq[0] in ("1", "123")):
            bad_vin.append(_fmt(seq))
        if M[:, v].any() and seq[0] != "23":
            bad_vout.append(_fmt(seq))
    rep.add("paths leaving B start with 3 or 123 and follow the allowed patterns", not bad_out, "; ".join(bad_out[:10]))
    rep.add("only D1 and D123 reach V", not bad_vin, "; ".join(bad_vin[:10]))
    rep.add("paths leaving V start with 23", not bad_vout, "; ".join(bad_vout[:10]))

    for label, target, tag in (("123", v, "V"), ("3", h, "H")):
        M = d.maps[label][:, b]
        outside = [i for i in range(d.dim) if i not in target]
        sub = M[target, :]
        ok = len(target) == len(b) and not M[outside, :].any()
        if ok and len(b):
            ok = f2.rank(sub) == len(b)
        rep.add(f"D{label} restricts to an isomorphism B -> {tag}", ok)
    return rep


def check_a_side(a: ImplicitTypeA, b: Sequence[int], v: Sequence[int], max_len: int) -> Report:
    rep = Report()
    names = a.names
    bn = {names[i] for i in b}
    vn = {names[i] for i in v}
    graph = multiplication_graph(a, max_len)
    bad_in, bad_out, bad_vin, bad_vout = [], [], [], []
    for s, seq, t in graph.edges:
        if t in bn:
            bad_in.append(f"{s} {_fmt(seq)} -> {t}")
        if s in bn and not bottom_outgoing_a_ok(seq):
            bad_out.append(f"{s} {_fmt(seq)} -> {t}")
        if t in vn and not (seq == ("3",) or seq == ("3", "2", "1")):
            bad_vin.append(f"{s} {_fmt(seq)} -> {t}")
        if s in vn and seq[0] != "2":
            bad_vout.append(f"{s} {_fmt(seq)} -> {t}")
    rep.add("B has no incoming multiplications", not bad_in, "; ".join(bad_in[:10]))
    rep.add("multiplications leaving B follow the allowed patterns", not bad_out, "; ".join(bad_out[:10]))
    rep.add("only m2(rho3) and m4(rho3,rho2,rho1) reach V", not bad_vin, "; ".join(bad_vin[:10]))
    rep.add("multiplications leaving V start with rho2", not bad_vout, "; ".join(bad_vout[:10]))
    return rep


def label_counts_ok(d: TypeDStructure, genus: int, budget: int) -> Report:
    """At most 8g+4 labels other than 12 (D side) or 23 (A side) in any nonzero sequence."""
    rep = Report()
    cap = 8 * genus + 4
    worst_d = max((sum(l != "12" for l in seq) for seq, _ in nonzero_paths(d, budget)), default=0)
    rep.add(f"D-side sequences use at most {cap} labels other than 12", worst_d <= cap, f"worst {worst_d}")
    graph = multiplication_graph(ImplicitTypeA(d), budget)
    worst_a = max((sum(w != "23" for w in seq) for _, seq, _ in graph.edges), default=0)
    rep.add(f"A-side sequences use at most {cap} labels other than 23", worst_a <= cap, f"worst {worst_a}")
    return rep


def bottom_witnesses(d: TypeDStructure, b: Sequence[int], budget: int) -> list[tuple[str, tuple[str, ...], list[str]]]:
    """Paths out of B that break the allowed patterns, with their images."""
    out = []
    for seq, M in nonzero_paths(d, budget, start=list(b)):
        if not bottom_outgoing_ok(seq):
            for k, i in enumerate(b):
                col = M[:, k]
                if col.any():
                    out.append((d.names[i], seq, [d.names[j] for j in np.nonzero(col)[0]]))
    return out
