"""Box tensor products, their homology, and splice reports."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

import numpy as np

from . import f2
from .cfd_builder import CfdLayout, build_cfd
from .cfk_complex import KnotNormalForm
from .type_a import ASideState, ImplicitTypeA, extend, next_words
from .type_d import TypeDStructure, is_reduced


class BoundednessError(RuntimeError):
    """A jointly nonvanishing label sequence outlived the length budget."""


def boundedness_bound(g1: int, g2: int) -> int:
    if g1 < 0 or g2 < 0:
        raise ValueError("genera are nonnegative")
    return 2 * max(8 * g1 + 4, 8 * g2 + 4)


def default_budget(g1: int, g2: int) -> int:
    return boundedness_bound(g1, g2) + 4


@dataclass(eq=False)
class BoxComplex:
    names: tuple[str, ...]
    pairs: tuple[tuple[int, int], ...]
    boundary: np.ndarray  # boundary[t, s]
    grading: tuple[int, ...] | None
    provenance: dict[tuple[int, int], list[tuple[str, ...]]] = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return len(self.names)

    def arrows(self) -> list[tuple[str, str]]:
        return sorted((self.names[s], self.names[t]) for t, s in zip(*np.nonzero(self.boundary)))

    def index(self, name: str) -> int:
        return self.names.index(name)

    def grading_dims(self) -> dict[int, int]:
        out: dict[int, int] = defaultdict(int)
        for s in self.grading or ():
            out[s] += 1
        return dict(sorted(out.items()))

    def to_dot(self, title: str = "box", bold: frozenset[str] = frozenset()) -> str:
        lines = [f'digraph "{title}" {{']
        for n in self.names:
            style = ", style=bold, fontname=\"bold\"" if n in bold else ""
            lines.append(f'  "{n}" [shape=plaintext{style}];')
        for s, t in self.arrows():
            lines.append(f'  "{s}" -> "{t}";')
        lines.append("}")
        return "\n".join(lines)


def box_tensor(a: ImplicitTypeA, d: TypeDStructure, budget: int) -> BoxComplex:
    """CFA box CFD by synchronized enumeration of label sequences.

    A sequence (I_1, ..., I_r) contributes m_{r+1}(x, rho_I1, ..., rho_Ir) (x)
    D_Ir ... D_I1 (y).  The r = 0 term pairs m_1 = 0 with the identity and
    contributes nothing.
    """
    if not is_reduced(d):
        raise ValueError("box_tensor needs a reduced type D structure")
    src = a.source
    pairs = tuple(
        (x, y)
        for x in range(src.dim)
        for y in range(d.dim)
        if src.idempotents[x] == d.idempotents[y]
    )
    pos = {p: k for k, p in enumerate(pairs)}
    names = tuple(f"{a.names[x]} {d.names[y]}" for x, y in pairs)
    grading = None
    if src.alexander is not None and d.alexander is not None:
        grading = tuple(int(src.alexander[x] + d.alexander[y]) for x, y in pairs)
    B = f2.zeros(len(pairs))
    prov: dict[tuple[int, int], list[tuple[str, ...]]] = defaultdict(list)

    idem_a = np.array(src.idempotents)
    idem_d = np.array(d.idempotents)
    all_a = list(range(src.dim))

    def alive(st: ASideState, MD: np.ndarray) -> bool:
        ca = st.committed.any(axis=0)
        cd = MD.any(axis=0)
        return any(ca[idem_a == i].any() and cd[idem_d == i].any() for i in (0, 1))

    def contribute(words, MA: np.ndarray, MD: np.ndarray) -> None:
        for ta, sa in zip(*np.nonzero(MA)):
            for td, sd in zip(*np.nonzero(MD)):
                s, t = pos.get((sa, sd)), pos.get((ta, td))
                if s is None or t is None:
                    continue
                B[t, s] ^= 1
                prov[t, s].append(words)

    eye_d = f2.eye(d.dim)
    stack: list[tuple[ASideState, np.ndarray]] = []

    def push(prev: ASideState | None, MDprev: np.ndarray, w: str) -> None:
        MD = f2.matmul(d.maps[w], MDprev)
        if not MD.any():
            return
        st = extend(prev, w, src, all_a)
        if not st.committed.any() or not alive(st, MD):
            return
        if len(st.words) > budget:
            raise BoundednessError(
                f"relative boundedness not witnessed: sequence {st.words[:8]}... still live at budget {budget}"
            )
        stack.append((st, MD))

    for w in next_words(()):
        push(None, eye_d, w)
    while stack:
        st, MD = stack.pop()
        MA = st.value(src)
        if MA.any():
            contribute(st.words, MA, MD)
        for w in next_words(st.words):
            push(st, MD, w)
    return BoxComplex(names, pairs, B, grading, dict(prov))


def boundary_squared(b: BoxComplex) -> np.ndarray:
    return f2.matmul(b.boundary, b.boundary)


def homology_rank(b: BoxComplex) -> int:
    if boundary_squared(b).any():
        raise ValueError("boundary does not square to zero")
    return b.dim - 2 * f2.rank(b.boundary)


# -- splices ------------------------------------------------------------


def hfk_bottom(nf: KnotNormalForm) -> int:
    return nf.hfk_dimension(-nf.genus)


def extremal_generators(b: BoxComplex, lay1: CfdLayout, lay2: CfdLayout) -> tuple[list[int], list[int]]:
    pos = {p: k for k, p in enumerate(b.pairs)}
    bb = [pos[x, y] for x in lay1.b_set for y in lay2.b_set if (x, y) in pos]
    vv = [pos[x, y] for x in lay1.v_set for y in lay2.v_set if (x, y) in pos]
    return bb, vv


@dataclass
class SurvivalReport:
    b_generators: list[str]
    v_generators: list[str]
    b_closed: bool
    v_closed: bool
    b_unhit: bool
    v_unhit: bool
    surviving_dimension: int

    @property
    def ok(self) -> bool:
        return self.b_closed and self.v_closed and self.b_unhit and self.v_unhit


def _survival(b: BoxComplex, lay1: CfdLayout, lay2: CfdLayout) -> SurvivalReport:
    bb, vv = extremal_generators(b, lay1, lay2)
    D = b.boundary
    return SurvivalReport(
        b_generators=[b.names[i] for i in bb],
        v_generators=[b.names[i] for i in vv],
        b_closed=not D[:, bb].any(),
        v_closed=not D[:, vv].any(),
        b_unhit=not D[bb, :].any(),
        v_unhit=not D[vv, :].any(),
        surviving_dimension=len(bb) + len(vv),
    )


@dataclass(eq=False)
class SpliceReport:
    total_rank: int
    ranks_by_grading: dict[int, int]
    lower_bound: int | None
    bold_generators: list[str]
    box: BoxComplex = field(repr=False)
    survival: SurvivalReport | None = field(default=None, repr=False)

    @property
    def lower_bound_holds(self) -> bool | None:
        return None if self.lower_bound is None else self.total_rank >= self.lower_bound

    def to_json(self) -> dict:
        return {
            "total_rank": self.total_rank,
            "ranks_by_grading": {str(s): r for s, r in self.ranks_by_grading.items()},
            "lower_bound": self.lower_bound,
            "lower_bound_holds": self.lower_bound_holds,
            "bold_generators": list(self.bold_generators),
        }


def splice(k1: KnotNormalForm | CfdLayout, k2: KnotNormalForm | CfdLayout, budget: int | None = None) -> SpliceReport:
    """Rank of HF-hat of the splice: CFA of the first complement box CFD of the second."""
    lay1 = k1 if isinstance(k1, CfdLayout) else build_cfd(k1)
    lay2 = k2 if isinstance(k2, CfdLayout) else build_cfd(k2)
    g1, g2 = lay1.genus, lay2.genus
    if budget is None:
        budget = default_budget(g1, g2)
    b = box_tensor(ImplicitTypeA(lay1.structure), lay2.structure, budget)
    total = homology_rank(b)
    nontrivial = g1 > 0 and g2 > 0
    lower = 2 * hfk_bottom(lay1.nf) * hfk_bottom(lay2.nf) if nontrivial else None
    surv = _survival(b, lay1, lay2) if nontrivial else None
    bold = (surv.b_generators + surv.v_generators) if surv else []
    return SpliceReport(total, b.grading_dims(), lower, bold, b, surv)


def extremal_survival(k1: KnotNormalForm | CfdLayout, k2: KnotNormalForm | CfdLayout, budget: int | None = None) -> SurvivalReport:
    lay1 = k1 if isinstance(k1, CfdLayout) else build_cfd(k1)
    lay2 = k2 if isinstance(k2, CfdLayout) else build_cfd(k2)
    if lay1.genus == 0 or lay2.genus == 0:
        raise ValueError("extremal survival needs two nontrivial knots")
    rep = splice(lay1, lay2, budget)
    surv = rep.survival
    if not surv.ok:
        raise AssertionError(f"extremal summands do not survive: {surv}")
    return surv
