"""Bordered invariant of a knot complement, 0-framed, from its normal form.

Generator layout: ``xi_0 .. xi_2n`` (idempotent 0), then the vertical chains
``kappa^j_i``, the horizontal chains ``lambda^j_i`` and the unstable chain
``mu_i`` (idempotent 1).  Arrows that start or end at an eta are written in
xi coordinates through the normal form's change of basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import f2
from .cfk_complex import KnotNormalForm, check_normal_form
from .type_d import LABELS, TypeDStructure

HALF = Fraction(1, 2)


@dataclass(frozen=True, eq=False)
class CfdLayout:
    structure: TypeDStructure
    nf: KnotNormalForm
    xi_indices: tuple[int, ...]
    eta_vectors: np.ndarray  # eta_p as a vector over xi generators (row p)
    chain_index: dict  # name -> ("vertical"|"horizontal"|"unstable", j, i)
    b_set: tuple[int, ...]
    v_set: tuple[int, ...]
    h_set: tuple[int, ...]

    @property
    def genus(self) -> int:
        return self.nf.genus

    def name(self, i: int) -> str:
        return self.structure.names[i]


def _kappa(j: int, i: int) -> str:
    return f"kappa^{j}_{i}"


def _lambda(j: int, i: int) -> str:
    return f"lambda^{j}_{i}"


def build_cfd(nf: KnotNormalForm) -> CfdLayout:
    check_normal_form(nf)
    n, tau = nf.n, nf.tau
    size = 2 * n + 1
    xg, eg = nf.xi_gradings, nf.eta_gradings
    names: list[str] = [f"xi_{p}" for p in range(size)]
    grads: list[Fraction] = [Fraction(a) for a in xg]
    chain: dict[str, tuple[str, int, int]] = {}

    def add(name: str, a: Fraction, where: tuple[str, int, int]) -> int:
        names.append(name)
        grads.append(a)
        chain[name] = where
        return len(names) - 1

    kappa = {}
    for j, arr in enumerate(nf.vertical_arrows, start=1):
        for i in range(1, arr.length + 1):
            kappa[j, i] = add(_kappa(j, i), xg[2 * j] + i - HALF, ("vertical", j, i))
    lam = {}
    for j, arr in enumerate(nf.horizontal_arrows, start=1):
        for i in range(1, arr.length + 1):
            lam[j, i] = add(_lambda(j, i), eg[2 * j - 1] + i - HALF, ("horizontal", j, i))
    t = 2 * abs(tau)
    mu = {}
    base = -tau if tau > 0 else tau
    for i in range(1, t + 1):
        mu[i] = add(f"mu_{i}", base + i - HALF, ("unstable", 0, i))

    N = len(names)
    maps = {lab: f2.zeros(N) for lab in LABELS}
    a, b = nf.basis_change_a, nf.basis_change_b

    def arrow(lab: str, src: int, dst: int) -> None:
        maps[lab][dst, src] ^= 1

    def from_eta(lab: str, p: int, dst: int) -> None:
        # D(eta_p) = dst means D(xi_q) gets a_{q,p} dst
        for q in range(size):
            if a[q, p]:
                arrow(lab, q, dst)

    def to_eta(lab: str, src: int, p: int) -> None:
        for q in range(size):
            if b[p, q]:
                arrow(lab, src, q)

    for j, arr in enumerate(nf.vertical_arrows, start=1):
        arrow("123", 2 * j, kappa[j, 1])
        for i in range(1, arr.length):
            arrow("23", kappa[j, i], kappa[j, i + 1])
        arrow("1", 2 * j - 1, kappa[j, arr.length])
    for j, arr in enumerate(nf.horizontal_arrows, start=1):
        from_eta("3", 2 * j - 1, lam[j, 1])
        for i in range(1, arr.length):
            arrow("23", lam[j, i], lam[j, i + 1])
        to_eta("2", lam[j, arr.length], 2 * j)
    if tau > 0:
        from_eta("3", 0, mu[1])
        for i in range(1, t):
            arrow("23", mu[i], mu[i + 1])
        arrow("1", 0, mu[t])
    elif tau == 0:
        to_eta("12", 0, 0)
    else:
        arrow("123", 0, mu[1])
        for i in range(1, t):
            arrow("23", mu[i], mu[i + 1])
        to_eta("2", mu[t], 0)

    idem = tuple(0 if i < size else 1 for i in range(N))
    d = TypeDStructure(tuple(names), idem, maps, tuple(grads))

    g = nf.genus
    low = Fraction(-g)
    b_set = tuple(i for i in range(size) if grads[i] == low)
    v_set = [kappa[j, 1] for j in range(1, n + 1) if xg[2 * j] == -g]
    h_set = [lam[j, 1] for j in range(1, n + 1) if eg[2 * j - 1] == -g]
    if g > 0 and tau == -g:
        v_set.append(mu[1])
    if g > 0 and tau == g:
        h_set.append(mu[1])
    return CfdLayout(
        structure=d,
        nf=nf,
        xi_indices=tuple(range(size)),
        eta_vectors=b.copy(),
        chain_index=chain,
        b_set=b_set,
        v_set=tuple(sorted(v_set)),
        h_set=tuple(sorted(h_set)),
    )


def extremal_subspaces(layout: CfdLayout) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """Index sets of B (grading -g), V and H (grading -g + 1/2)."""
    if layout.genus == 0:
        raise ValueError("extremal subspaces need a nontrivial knot (genus >= 1)")
    return layout.b_set, layout.v_set, layout.h_set
