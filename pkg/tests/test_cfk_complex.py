import json
import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from hfsplice import f2
from hfsplice.cfk_complex import (
    CFKComplex,
    ComplexError,
    KnotNormalForm,
    UPoly,
    box,
    change_basis,
    check_normal_form,
    direct_sum,
    epsilon,
    genus,
    hfk_dimension,
    horizontal_matrix,
    mirror,
    simplify,
    staircase,
    tau,
    tensor,
    validate,
    vertical_matrix,
)
from hfsplice.knot_library import get, random_complex

seeds = st.integers(0, 10**9)
FIXTURES = ("unknot", "trefoil_r", "trefoil_l", "figure8")


# -- oracles --------------------------------------------------------------


def persistence_rank(D, grads, s, t):
    """dim of the image H(F_s) -> H(F_t) for sublevel sets F_s = {A <= s}."""
    n = len(grads)
    Fs = [i for i in range(n) if grads[i] <= s]
    Ft = [i for i in range(n) if grads[i] <= t]
    if not Fs:
        return 0
    sub = D[np.ix_(Fs, Fs)]
    # kernel of D on F_s, as vectors in the full space
    kernel = []
    R, piv = f2.row_echelon(sub)
    freecols = [c for c in range(len(Fs)) if c not in piv]
    for fc in freecols:
        v = np.zeros(len(Fs), dtype=np.uint8)
        v[fc] = 1
        for r, pc in enumerate(piv):
            v[pc] = R[r, fc]
        full = np.zeros(n, dtype=np.uint8)
        full[Fs] = v
        kernel.append(full)
    Bt = D[:, Ft]
    if not kernel:
        return 0
    K = np.stack(kernel, axis=1)
    return f2.rank(np.hstack([K, Bt])) - f2.rank(Bt)


def bar_rank(bars, essential, s, t):
    return sum(1 for b, d in bars if b <= s and d > t) + (1 if essential <= s else 0)


def check_bars(D, grads, bars, essential):
    levels = sorted(set(grads))
    for s in levels:
        for t in levels:
            if t >= s:
                assert persistence_rank(D, grads, s, t) == bar_rank(bars, essential, s, t), (s, t)


def tau_oracle(c):
    D = vertical_matrix(c)
    return min(s for s in sorted(set(c.alexander)) if persistence_rank(D, c.alexander, s, max(c.alexander)) > 0)


# -- fixtures -------------------------------------------------------------


def test_fixtures_validate_and_match_expected():
    for name in FIXTURES:
        e = get(name)
        assert validate(e.payload).ok
        nf = e.normal_form()
        exp = e.expected
        assert nf.genus == genus(e.payload) == exp["genus"]
        assert (nf.tau, nf.epsilon, nf.n) == (exp["tau"], exp["epsilon"], exp["n"])
        assert [a.length for a in nf.vertical_arrows] == exp["k"]
        assert [a.length for a in nf.horizontal_arrows] == exp["l"]
        for a, dim in exp["hfk"].items():
            assert hfk_dimension(e.payload, int(a)) == nf.hfk_dimension(int(a)) == dim


def test_trefoils_are_mirrors():
    r, l = get("trefoil_r").normal_form(), get("trefoil_l").normal_form()
    m = simplify(mirror(get("trefoil_r").payload))
    assert (m.tau, m.epsilon) == (l.tau, l.epsilon) == (-r.tau, -r.epsilon)


def test_json_round_trip():
    c = get("figure8").payload
    again = CFKComplex.from_json(json.dumps(c.to_json()))
    assert again.to_json() == c.to_json()
    nf = simplify(c)
    assert KnotNormalForm.from_json(json.loads(json.dumps(nf.to_json()))) == nf


@pytest.mark.parametrize(
    "payload, pointer",
    [
        ({}, "generators"),
        ({"generators": [{"name": "a"}], "differential": []}, "generators[0]"),
        ({"generators": [{"name": "a", "alexander": "0"}], "differential": []}, "generators[0].alexander"),
        ({"generators": [{"name": "a", "alexander": 0}], "differential": [{"from": "a", "to": "z", "u_powers": [0]}]}, "differential[0].to"),
        ({"generators": [{"name": "a", "alexander": 0}], "differential": [{"from": "a", "to": "a", "u_powers": [-1]}]}, "differential[0].u_powers"),
    ],
)
def test_from_json_points_at_the_bad_field(payload, pointer):
    with pytest.raises(ComplexError, match=pointer.replace("[", r"\[").replace("]", r"\]")):
        CFKComplex.from_json(payload)


def test_validate_reports_each_failure():
    even = CFKComplex(("a", "b"), (0, 0), {})
    assert ("odd rank" in {n.split(":")[0] for n, _ in validate(even).failures()})
    unfiltered = CFKComplex(("a", "b", "c"), (0, 1, -1), {(0, 1): UPoly.of(0)})
    assert any(n == "filtered" for n, _ in validate(unfiltered).failures())
    not_reduced = CFKComplex(("a", "b", "c"), (0, 0, 0), {(0, 1): UPoly.of(0)})
    assert any(n == "reduced" for n, _ in validate(not_reduced).failures())
    dsq = CFKComplex(("a", "b", "c"), (0, -1, -2), {(0, 1): UPoly.of(0), (1, 2): UPoly.of(0)})
    assert any(n == "d^2 = 0" for n, _ in validate(dsq).failures())
    lopsided = CFKComplex(("a",), (1,), {})
    assert any(n.startswith("genus symmetry") for n, _ in validate(lopsided).failures())


def test_u_poly_arithmetic():
    assert UPoly.of(1) + UPoly.of(1) == UPoly()
    assert UPoly.of(0, 2) * UPoly.of(1) == UPoly.of(1, 3)
    assert (UPoly.of(0, 1) * UPoly.of(0, 1)) == UPoly.of(0, 2)


def test_change_basis_rejects_unfiltered_moves():
    c = staircase([1, 1])
    with pytest.raises(ComplexError):
        change_basis(c, 2, 0, 0)  # A(x0) = 1 > A(x2) = -1


# -- properties over random complexes -------------------------------------


@given(seeds)
def test_random_complexes_are_valid_and_simplify(seed):
    c = random_complex(random.Random(seed))
    assert validate(c).ok
    nf = simplify(c)
    check_normal_form(nf)
    assert nf.genus == genus(c)
    for a in set(c.alexander):
        assert nf.hfk_dimension(a) == hfk_dimension(c, a)


@given(seeds)
def test_arrows_match_persistence_oracle(seed):
    c = random_complex(random.Random(seed))
    nf = simplify(c)
    vbars = [(a.target_grading, a.source_grading) for a in nf.vertical_arrows]
    check_bars(vertical_matrix(c), c.alexander, vbars, nf.tau)
    neg = tuple(-a for a in c.alexander)
    hbars = [(-a.target_grading, -a.source_grading) for a in nf.horizontal_arrows]
    check_bars(horizontal_matrix(c), neg, hbars, nf.tau)


@given(seeds)
def test_tau_matches_filtration_oracle(seed):
    c = random_complex(random.Random(seed))
    assert tau(c) == tau_oracle(c)


@given(seeds)
def test_mirror_negates_tau_and_epsilon(seed):
    c = random_complex(random.Random(seed))
    assert tau(mirror(c)) == -tau(c)
    assert epsilon(mirror(c)) == -epsilon(c)


@given(seeds, seeds)
def test_connected_sum_rules(s1, s2):
    c1 = random_complex(random.Random(s1), max_genus=2, max_n=2)
    c2 = random_complex(random.Random(s2), max_genus=2, max_n=2)
    c = tensor(c1, c2)
    assert tau(c) == tau(c1) + tau(c2)
    e1, e2, e = epsilon(c1), epsilon(c2), epsilon(c)
    if e1 == 0:
        assert e == e2
    if e2 == 0:
        assert e == e1
    if e1 == e2:
        assert e == e1


@given(seeds, st.integers(1, 12))
def test_normal_form_invariant_under_filtered_basis_change(seed, moves):
    rng = random.Random(seed)
    c = random_complex(rng, moves=0)
    nf = simplify(c)
    d = c
    for _ in range(moves if c.rank > 1 else 0):
        i, j = rng.sample(range(c.rank), 2)
        e = max(0, c.alexander[j] - c.alexander[i]) + rng.randint(0, 2)
        d = change_basis(d, i, j, e)
    nd = simplify(d)
    assert (nd.n, nd.tau, nd.epsilon) == (nf.n, nf.tau, nf.epsilon)
    assert sorted(nd.vertical_arrows, key=repr) == sorted(nf.vertical_arrows, key=repr)
    assert sorted(nd.horizontal_arrows, key=repr) == sorted(nf.horizontal_arrows, key=repr)


def test_staircases_are_lspace_like():
    for steps in ([1, 1], [1, 2, 2, 1], [2, 1, 1, 2], [3, 3]):
        c = staircase(steps)
        g = sum(steps) // 2
        assert (tau(c), epsilon(c)) == (g, 1)
        assert (tau(mirror(c)), epsilon(mirror(c))) == (-g, -1)


def test_acyclic_box_does_not_change_invariants():
    c = staircase([1, 1])
    d = direct_sum(c, box(0, 1))
    nf, nd = simplify(c), simplify(d)
    assert (nd.tau, nd.epsilon) == (nf.tau, nf.epsilon)
    assert nd.n == nf.n + 2


def test_figure8_has_epsilon_zero():
    nf = get("figure8").normal_form()
    assert (nf.tau, nf.epsilon) == (0, 0)
    assert np.array_equal(nf.basis_change_a[0], f2.eye(2 * nf.n + 1)[0])
