"""The A-infinity module attached to a reduced type D structure.

The multiplications are never tabulated.  ``m_{k+1}(v, rho_I1, ..., rho_Ik)``
is the composition of coefficient maps read off from the index sequence by
:func:`word_calculus.a_index_to_d_labels`, and it vanishes when that
function returns ``None``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from . import f2
from .torus_algebra import RHO_WORDS, idempotent_sides
from .type_d import LABELS, Report, TypeDStructure, is_reduced
from .word_calculus import a_index_to_d_labels, phi

UNITS = ("i0", "i1", "unit")


def a_side_name(name: str) -> str:
    """Capital-letter alias used for generators of the A-side module."""
    for lower, upper in (("xi", "Xi"), ("kappa", "K"), ("lambda", "Lambda"), ("mu", "M")):
        if name.startswith(lower):
            return upper + name[len(lower):]
    return name.upper()


@dataclass(eq=False)
class ImplicitTypeA:
    source: TypeDStructure
    _cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if not is_reduced(self.source):
            raise ValueError("the conversion needs a reduced type D structure")

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(a_side_name(n) for n in self.source.names)

    @property
    def dim(self) -> int:
        return self.source.dim

    def m_matrix(self, rhos: Sequence[str]) -> np.ndarray:
        """Matrix of m_{k+1}(. , rho_I1, ..., rho_Ik) for chord words I_i."""
        key = tuple(rhos)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if not key:
            M = f2.zeros(self.dim)  # m_1 = 0
        else:
            labels = a_index_to_d_labels(key)
            M = f2.zeros(self.dim) if labels is None else self.source.compose(labels)
        M.setflags(write=False)
        self._cache[key] = M
        return M

    def eval_m(self, v: str | int, rhos: Sequence[str]) -> np.ndarray:
        """Value of m_{k+1}(v, a_1, ..., a_k) as a vector; inputs may be units."""
        i = v if isinstance(v, int) else self.source.index(v)
        out = np.zeros(self.dim, dtype=np.uint8)
        rhos = tuple(rhos)
        if any(r in UNITS for r in rhos):
            if len(rhos) == 1:
                r = rhos[0]
                if r == "unit" or int(r[1]) == self.source.idempotents[i]:
                    out[i] = 1
            return out
        return self.m_matrix(rhos)[:, i].copy()

    def apply(self, v: str, rhos: Sequence[str]) -> list[str]:
        vec = self.eval_m(v, rhos)
        return [self.names[k] for k in np.nonzero(vec)[0]]


def composable(words: Sequence[str]) -> bool:
    """Consecutive chords meet in matching idempotents."""
    return all(idempotent_sides(a)[1] == idempotent_sides(b)[0] for a, b in zip(words, words[1:]))


def composable_sequences(max_len: int) -> Iterator[tuple[str, ...]]:
    for n in range(1, max_len + 1):
        stack: list[tuple[str, ...]] = [(w,) for w in RHO_WORDS]
        while stack:
            seq = stack.pop()
            if len(seq) == n:
                yield seq
                continue
            right = idempotent_sides(seq[-1])[1]
            for w in RHO_WORDS:
                if idempotent_sides(w)[0] == right:
                    stack.append(seq + (w,))


def _chord_product(a: str, b: str) -> str | None:
    ab = a + b
    return ab if ab in RHO_WORDS else None


def ainfty_relation(m, seq: Sequence[str]) -> np.ndarray:
    """Left side of the A-infinity relation for inputs seq, as a matrix.

    ``m`` maps an index tuple to its multiplication matrix.  m_1 = 0 and the
    algebra differential is zero, so only the composition and product terms
    remain.
    """
    seq = tuple(seq)
    n = len(seq)
    total = f2.zeros(m(()).shape[0])
    for i in range(1, n):
        total ^= f2.matmul(m(seq[i:]), m(seq[:i]))
    for k in range(n - 1):
        p = _chord_product(seq[k], seq[k + 1])
        if p is not None:
            total ^= m(seq[:k] + (p,) + seq[k + 2:])
    return total


def check_ainfty(a, max_len: int = 8) -> Report:
    """Bounded-exhaustive A-infinity check; ``a`` is an ImplicitTypeA or a callable m."""
    m = a.m_matrix if isinstance(a, ImplicitTypeA) else a
    names = a.names if isinstance(a, ImplicitTypeA) else None
    rep = Report()
    witnesses = []
    count = 0
    for seq in composable_sequences(max_len):
        count += 1
        R = ainfty_relation(m, seq)
        if R.any():
            for s in np.nonzero(R.any(axis=0))[0]:
                who = names[s] if names else str(s)
                witnesses.append(f"{who} x ({', '.join(seq)})")
    rep.add(f"A-infinity relations up to length {max_len} ({count} sequences)", not witnesses, "; ".join(witnesses[:20]))
    return rep


# -- the DD identity ----------------------------------------------------


@dataclass(frozen=True)
class DDIdentity:
    """Two generators p (idempotent 0) and q (idempotent 1).

    Arrows are (source, first factor, second factor, target); the A-module
    is fed the second factor and the output algebra element is the product
    of the first factors.
    """

    arrows: tuple[tuple[str, str, str, str], ...] = (
        ("p", "1", "3", "q"),
        ("p", "3", "1", "q"),
        ("p", "123", "123", "q"),
        ("q", "2", "2", "p"),
    )
    idempotent: tuple[tuple[str, int], ...] = (("p", 0), ("q", 1))

    def paths(self, start: str) -> list[tuple[str, tuple[str, ...], str]]:
        """(output chord, module inputs, end) for arrow paths with nonzero product."""
        out = []
        stack = [(start, "", ())]
        while stack:
            node, word, inputs = stack.pop()
            for s, first, second, t in self.arrows:
                if s != node:
                    continue
                w = word + first
                if w not in RHO_WORDS:
                    continue
                out.append((w, inputs + (second,), t))
                stack.append((t, w, inputs + (second,)))
        return out


def box_with_dd_identity(a: ImplicitTypeA, dd: DDIdentity | None = None) -> TypeDStructure:
    """Type D structure (V, m) box CFDD(identity), identified with V."""
    dd = dd or DDIdentity()
    src = a.source
    idem_of = dict(dd.idempotent)
    n = src.dim
    maps = {lab: f2.zeros(n) for lab in LABELS}
    for node, idem in idem_of.items():
        cols = [i for i in range(n) if src.idempotents[i] == idem]
        for word, inputs, end in dd.paths(node):
            rows = [i for i in range(n) if src.idempotents[i] == idem_of[end]]
            M = a.m_matrix(inputs)
            for s in cols:
                for t in rows:
                    if M[t, s]:
                        maps[word][t, s] ^= 1
    return TypeDStructure(src.names, src.idempotents, maps, src.alexander)


def to_type_a(d: TypeDStructure) -> ImplicitTypeA:
    return ImplicitTypeA(d)


# -- A-side walks -------------------------------------------------------


@dataclass(frozen=True)
class ASideState:
    """Prefix of an A-side index sequence with the D-composition of its closed runs."""

    words: tuple[str, ...]
    committed: np.ndarray  # composition of closed runs (restricted to start columns)
    open_run: str

    def value(self, d: TypeDStructure) -> np.ndarray:
        return f2.matmul(d.maps[phi(self.open_run)], self.committed)


def next_words(words: Sequence[str]) -> tuple[str, ...]:
    """Chords that may follow ``words`` in a nonvanishing multiplication."""
    if not words:
        return RHO_WORDS
    want = int(words[-1][-1]) - 1
    return tuple(w for w in RHO_WORDS if int(w[0]) == want)


def extend(state: ASideState | None, word: str, d: TypeDStructure, start_cols) -> ASideState:
    if state is None:
        committed = f2.eye(d.dim)[:, start_cols]
        run = word[0]
    else:
        committed = state.committed
        run = state.open_run + word[0]
    for digit in word[1:]:
        committed = f2.matmul(d.maps[phi(run)], committed)
        run = digit
    return ASideState((state.words if state else ()) + (word,), committed, run)


@dataclass
class MultiplicationGraph:
    edges: list[tuple[str, tuple[str, ...], str]]
    truncated: bool

    def to_dot(self, title: str = "CFA") -> str:
        lines = [f'digraph "{title}" {{']
        for s, seq, t in self.edges:
            label = ", ".join(f"rho{w}" for w in seq)
            lines.append(f'  "{s}" -> "{t}" [label="{label}"];')
        lines.append("}")
        return "\n".join(lines)


def multiplication_graph(a: ImplicitTypeA, max_len: int = 6) -> MultiplicationGraph:
    """Every nonzero m_{k+1}(x, rho_I1, ..., rho_Ik) with k <= max_len."""
    d = a.source
    cols = list(range(d.dim))
    edges = []
    truncated = False
    stack: list[ASideState] = [extend(None, w, d, cols) for w in reversed(RHO_WORDS)]
    while stack:
        st = stack.pop()
        if not st.committed.any():
            continue
        val = st.value(d)
        for t, s in zip(*np.nonzero(val)):
            edges.append((a.names[s], st.words, a.names[t]))
        for w in reversed(next_words(st.words)):
            if len(st.words) == max_len:
                if extend(st, w, d, cols).committed.any():
                    truncated = True
                continue
            stack.append(extend(st, w, d, cols))
    edges.sort(key=lambda e: (a.names.index(e[0]), len(e[1]), e[1], a.names.index(e[2])))
    return MultiplicationGraph(edges, truncated)
