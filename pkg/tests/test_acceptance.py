"""Acceptance criteria, one test each; every test prints a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` (the lines are printed even
without ``-s``).
"""

import contextlib
import io
import itertools
import json
import random
import time

import numpy as np
import pytest

from hfsplice.cfd_builder import build_cfd
from hfsplice.cli import main
from hfsplice.extremal import bottom_witnesses, check_a_side, check_d_side, label_counts_ok
from hfsplice.knot_library import NAMES, get, random_normal_form
from hfsplice.pairing import box_tensor, homology_rank, splice
from hfsplice.type_a import ImplicitTypeA, box_with_dd_identity, check_ainfty, to_type_a
from hfsplice.type_d import LABELS, check_structure, is_reduced
from hfsplice.word_calculus import a_index_to_d_labels, d_labels_to_a_index, is_a_side_sequence, is_canonical_d_sequence, merge_rule, psi

from conftest import cfd, layout
from test_pairing import FIG1, FIG2, canon, figure_name
from test_word_calculus import all_decompositions, alternating_strings, chord_sequences


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, detail="", elapsed=None):
        timing = f" [{elapsed:.2f}s]" if elapsed is not None else ""
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'} {title}" + (f" ({detail})" if detail else "") + timing
        with capsys.disabled():
            print("\n" + line)
        return ok

    return emit


def cli_json(argv):
    buf = io.StringIO()
    t0 = time.perf_counter()
    with contextlib.redirect_stdout(buf):
        code = main(argv)
    return code, json.loads(buf.getvalue()), time.perf_counter() - t0


def test_criterion_1_right_left_rank(report):
    code, data, dt = cli_json(["splice", "trefoil_r", "trefoil_l", "--json"])
    ok = code == 0 and data["total_rank"] == 9 and dt < 1
    assert report(1, "splice trefoil_r trefoil_l has rank 9 in under 1 s", ok, f"rank {data['total_rank']}", dt)


def test_criterion_2_same_handed_ranks(report):
    results = []
    for k in ("trefoil_r", "trefoil_l"):
        code, data, dt = cli_json(["splice", k, k, "--json"])
        results.append((k, code == 0 and data["total_rank"] == 7 and dt < 1, data["total_rank"], dt))
    ok = all(r[1] for r in results)
    detail = ", ".join(f"{k}: rank {r} in {dt:.2f}s" for k, _, r, dt in results)
    assert report(2, "splice of each trefoil with itself has rank 7 in under 1 s", ok, detail)


def test_criterion_3_box_complex_golden(report):
    lines, ok = [], True
    for k2, fig, want_arrows in (("trefoil_l", FIG1, 11), ("trefoil_r", FIG2, 13)):
        rep = splice(layout("trefoil_r"), layout(k2))
        got = {(canon(s), canon(t)) for s, t in rep.box.arrows()}
        golden = {(figure_name(s), figure_name(t)) for s, t in fig}
        nodes_ok = rep.box.dim == 21
        arrows_ok = len(got) == want_arrows
        match = got == golden
        ok &= nodes_ok and arrows_ok and match
        lines.append(
            f"(R,{k2[-1].upper()}): {rep.box.dim} generators (want 21), {len(got)} arrows (want {want_arrows}), "
            f"named edges {'match' if match else 'differ'}"
        )
    assert report(3, "box complexes have 21 generators and the figures' arrows", ok, "; ".join(lines))


def test_criterion_4_dd_round_trip(report):
    bad = []
    for name in NAMES:
        d = cfd(name)
        back = box_with_dd_identity(to_type_a(d))
        if back != d:
            labels = [l for l in LABELS if (back.maps[l] ^ d.maps[l]).any()]
            bad.append(f"{name} differs in D{'/D'.join(labels)}")
    assert report(4, "DD-identity round trip returns every fixture exactly", not bad, "; ".join(bad))


def test_criterion_5_ainfty_and_mutations(report):
    t0 = time.perf_counter()
    failing = [n for n in NAMES if not check_ainfty(ImplicitTypeA(cfd(n)), 8).ok]
    d = cfd("trefoil_r")
    survivors = []
    total = 0
    for lab in LABELS:
        for t, s in itertools.product(range(d.dim), repeat=2):
            total += 1
            M = np.array(d.maps[lab])
            M[t, s] ^= 1
            e = d.with_maps(**{lab: M})
            if not check_structure(e).ok:
                continue
            # an unreduced mutant has no A-side conversion, so only the structure check applies
            if not is_reduced(e) or check_ainfty(ImplicitTypeA(e), 8).ok:
                survivors.append(f"D{lab or '_empty'}:{d.names[s]}->{d.names[t]}")
    ok = not failing and not survivors
    detail = (
        f"A-infinity at length 8 fails for {failing or 'no fixture'}; "
        f"{len(survivors)} of {total} single-entry flips of CFD(trefoil_r) pass both checks"
        + (f": {', '.join(survivors)}" if survivors else "")
    )
    assert report(5, "A-infinity relations hold and every mutation is caught", ok, detail, time.perf_counter() - t0)


def test_criterion_6_random_properties(report):
    t0 = time.perf_counter()
    rng = random.Random(20240601)
    layouts = []
    problems = []
    for _ in range(200):
        lay = build_cfd(random_normal_form(rng, max_genus=4, max_n=5))
        layouts.append(lay)
        if lay.genus == 0:
            continue
        d, g = lay.structure, lay.genus
        budget = 8 * g + 4
        for rep in (
            check_structure(d),
            check_d_side(d, lay.b_set, lay.v_set, lay.h_set, budget),
            check_a_side(ImplicitTypeA(d), lay.b_set, lay.v_set, 8),
            label_counts_ok(d, g, budget),
        ):
            if not rep.ok:
                problems.append(f"{lay.nf.to_json()}: {rep.failures()}")
    nontrivial = [l for l in layouts if l.genus > 0]
    splices = 0
    for l1, l2 in zip(nontrivial, nontrivial[1:] + nontrivial[:1]):
        rep = splice(l1, l2)
        splices += 1
        if not rep.lower_bound_holds:
            problems.append(f"rank {rep.total_rank} below {rep.lower_bound}")
    classes = {(l.genus, l.nf.n, l.nf.tau, l.nf.epsilon) for l in layouts}
    ok = not problems and len(layouts) >= 200
    detail = f"{len(layouts)} normal forms in {len(classes)} (g, n, tau, epsilon) classes, {splices} splices"
    if problems:
        detail += "; " + "; ".join(problems[:3])
    assert report(6, "structural constraints, length bounds and the rank inequality on random knots", ok, detail,
                  time.perf_counter() - t0)


def test_criterion_7_sigma237_counterexample(report):
    entry = get("sigma237_core_cfd")
    d = entry.payload
    eta1 = d.index("eta_1")
    found = {seq: targets for _, seq, targets in bottom_witnesses(d, [eta1], 12)}
    w1 = d.apply(["123", "2"], "eta_1")
    w2 = d.apply(["3", "2", "12"], "eta_1")
    ok = bool(w1) and bool(w2) and ("123", "2") in found and ("3", "2", "12") in found
    ok &= not check_d_side(d, [eta1], [], [], 12).ok
    detail = f"D2 D123 (eta_1) = {w1}, D12 D2 D3 (eta_1) = {w2}"
    assert report(7, "sigma237 core violates the bottom-grading constraints as claimed", ok, detail)


def test_criterion_8_sanity(report):
    _, uu, _ = cli_json(["splice", "unknot", "unknot", "--json"])
    _, ur, _ = cli_json(["splice", "unknot", "trefoil_r", "--json"])
    asym = []
    for k1, k2 in itertools.combinations(NAMES, 2):
        r12 = homology_rank(box_tensor(ImplicitTypeA(cfd(k1)), cfd(k2), 60))
        r21 = homology_rank(box_tensor(ImplicitTypeA(cfd(k2)), cfd(k1), 60))
        if r12 != r21:
            asym.append(f"{k1}/{k2}: {r12} vs {r21}")
    ok = uu["total_rank"] == 1 and ur["total_rank"] == 1 and not asym
    detail = f"unknot/unknot {uu['total_rank']}, unknot/trefoil_r {ur['total_rank']}, asymmetric pairs: {asym or 'none'}"
    assert report(8, "unknot splices have rank 1 and splicing is symmetric", ok, detail)


def test_criterion_9_word_calculus(report):
    t0 = time.perf_counter()
    bad = []
    strings = 0
    for s in alternating_strings(8):
        strings += 1
        decs = all_decompositions(s)
        if len(decs) != 1 or psi(s) != decs[0]:
            bad.append(f"psi {s}")
        for cut in range(1, len(s)):
            l, r = s[:cut], s[cut:]
            if merge_rule(psi(l), psi(r), l[-1], r[0]) != decs[0]:
                bad.append(f"concatenation {l}|{r}")
    trips = 0
    for seq in chord_sequences(10, alternating_only=True):
        if is_a_side_sequence(seq):
            trips += 1
            if d_labels_to_a_index(a_index_to_d_labels(seq)) != seq:
                bad.append(f"a->d->a {seq}")
        if is_canonical_d_sequence(seq) and a_index_to_d_labels(d_labels_to_a_index(seq)) != seq:
            bad.append(f"d->a->d {seq}")
    dt = time.perf_counter() - t0
    ok = not bad and dt < 5
    detail = f"{strings} strings, {trips} round trips" + (f"; {bad[:3]}" if bad else "")
    assert report(9, "psi uniqueness, concatenation rule and round trip are exhaustive and fast", ok, detail, dt)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
