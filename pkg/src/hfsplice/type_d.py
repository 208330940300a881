"""Type D structures over the torus algebra, presented by coefficient maps.

A structure is a list of named generators, each tagged with idempotent 0 or
1, and one F_2 matrix per label in ``("", "1", "2", "3", "12", "23", "123")``
(``""`` is the unlabelled map).  ``maps[I][t, s] = 1`` means
``delta_1(x_s)`` contains ``rho_I (x) x_t``.  ``D_I`` takes generators of
idempotent ``(first(I) - 1) mod 2`` to generators of idempotent
``last(I) mod 2``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Mapping, Sequence

import numpy as np

from . import f2
from .torus_algebra import RHO_WORDS, idempotent_sides

LABELS = ("",) + RHO_WORDS

# Alexander degree of each coefficient map
DEGREE = {
    "": Fraction(0),
    "1": Fraction(-1, 2),
    "2": Fraction(1, 2),
    "3": Fraction(1, 2),
    "12": Fraction(0),
    "23": Fraction(1),
    "123": Fraction(1, 2),
}


def label_sides(label: str) -> tuple[int, int] | None:
    """(source idempotent, target idempotent), or None for the unlabelled map."""
    return None if label == "" else idempotent_sides(label)


def factorizations(label: str) -> list[tuple[str, str]]:
    """All (J, K) with JK = label, J and K ranging over LABELS."""
    return [(label[:i], label[i:]) for i in range(len(label) + 1)] if label else [("", "")]


@dataclass
class Report:
    checks: list[tuple[str, bool, str]] = field(default_factory=list)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append((name, ok, detail))

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def failures(self) -> list[tuple[str, str]]:
        return [(n, d) for n, ok, d in self.checks if not ok]

    def lines(self) -> list[str]:
        return [f"{'PASS' if ok else 'FAIL'} {n}" + (f": {d}" if d else "") for n, ok, d in self.checks]


@dataclass(frozen=True, eq=False)
class TypeDStructure:
    names: tuple[str, ...]
    idempotents: tuple[int, ...]
    maps: Mapping[str, np.ndarray]
    alexander: tuple[Fraction, ...] | None = None

    def __post_init__(self):
        n = len(self.names)
        if len(self.idempotents) != n:
            raise ValueError("one idempotent per generator")
        if any(i not in (0, 1) for i in self.idempotents):
            raise ValueError("idempotents are 0 or 1")
        if len(set(self.names)) != n:
            raise ValueError("duplicate generator names")
        unknown = set(self.maps) - set(LABELS)
        if unknown:
            raise ValueError(f"unknown labels {sorted(unknown)}")
        full = {}
        for lab in LABELS:
            M = self.maps.get(lab)
            M = f2.zeros(n) if M is None else f2.as_f2(M)
            if M.shape != (n, n):
                raise ValueError(f"D_{lab or 'empty'} has shape {M.shape}, expected {(n, n)}")
            M.setflags(write=False)
            full[lab] = M
        object.__setattr__(self, "maps", full)
        if self.alexander is not None:
            if len(self.alexander) != n:
                raise ValueError("one Alexander grading per generator")
            object.__setattr__(self, "alexander", tuple(Fraction(a) for a in self.alexander))

    # -- basic accessors ------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.names)

    @property
    def dim0(self) -> int:
        return self.idempotents.count(0)

    @property
    def dim1(self) -> int:
        return self.idempotents.count(1)

    def D(self, label: str) -> np.ndarray:
        return self.maps[label]

    def index(self, name: str) -> int:
        return self.names.index(name)

    def arrows(self) -> list[tuple[str, str, str]]:
        """(source name, label, target name) for every nonzero entry."""
        out = []
        for lab in LABELS:
            for t, s in zip(*np.nonzero(self.maps[lab])):
                out.append((self.names[s], lab, self.names[t]))
        return sorted(out, key=lambda a: (self.index(a[0]), LABELS.index(a[1]), self.index(a[2])))

    def compose(self, labels: Sequence[str]) -> np.ndarray:
        """D_{I_r} o ... o D_{I_1} for labels (I_1, ..., I_r)."""
        M = f2.eye(self.dim)
        for lab in labels:
            M = f2.matmul(self.maps[lab], M)
        return M

    def apply(self, labels: Sequence[str], name: str) -> list[str]:
        col = self.compose(labels)[:, self.index(name)]
        return [self.names[i] for i in np.nonzero(col)[0]]

    def equals(self, other: "TypeDStructure") -> bool:
        return (
            self.names == other.names
            and self.idempotents == other.idempotents
            and all(np.array_equal(self.maps[l], other.maps[l]) for l in LABELS)
            and self.alexander == other.alexander
        )

    def __eq__(self, other):
        if not isinstance(other, TypeDStructure):
            return NotImplemented
        return self.equals(other)

    __hash__ = None

    def with_maps(self, **updates) -> "TypeDStructure":
        maps = {l: np.array(m) for l, m in self.maps.items()}
        for key, M in updates.items():
            maps[key.removeprefix("D")] = M
        return TypeDStructure(self.names, self.idempotents, maps, self.alexander)

    def restrict(self, keep: Sequence[int]) -> "TypeDStructure":
        keep = list(keep)
        ix = np.ix_(keep, keep)
        return TypeDStructure(
            tuple(self.names[i] for i in keep),
            tuple(self.idempotents[i] for i in keep),
            {l: self.maps[l][ix] for l in LABELS},
            None if self.alexander is None else tuple(self.alexander[i] for i in keep),
        )

    def conjugate(self, P: np.ndarray) -> "TypeDStructure":
        """Change of basis: new generator j is sum_i P[i, j] old generator i.

        ``P`` must be invertible and respect idempotents.
        """
        P = f2.as_f2(P)
        for i, j in zip(*np.nonzero(P)):
            if self.idempotents[i] != self.idempotents[j]:
                raise ValueError("basis change mixes idempotents")
        Pinv = f2.inverse(P)
        maps = {l: f2.matmul(f2.matmul(Pinv, M), P) for l, M in self.maps.items()}
        return TypeDStructure(self.names, self.idempotents, maps, self.alexander)

    # -- serialization --------------------------------------------------

    def to_json(self) -> dict:
        gens = []
        for i, n in enumerate(self.names):
            g = {"name": n, "idempotent": self.idempotents[i]}
            if self.alexander is not None:
                g["alexander"] = str(self.alexander[i])
            gens.append(g)
        arrows = [{"from": s, "label": l, "to": t} for s, l, t in self.arrows()]
        return {"generators": gens, "arrows": arrows}

    @classmethod
    def from_json(cls, data) -> "TypeDStructure":
        if isinstance(data, str):
            data = json.loads(data)
        if not isinstance(data, dict) or not isinstance(data.get("generators"), list):
            raise ValueError("generators: missing or not a list")
        gens = data["generators"]
        for i, g in enumerate(gens):
            for key in ("name", "idempotent"):
                if not isinstance(g, dict) or key not in g:
                    raise ValueError(f"generators[{i}]: missing field {key!r}")
            if g["idempotent"] not in (0, 1):
                raise ValueError(f"generators[{i}].idempotent: expected 0 or 1")
        names = tuple(g["name"] for g in gens)
        idem = tuple(int(g["idempotent"]) for g in gens)
        grads = None
        if gens and all("alexander" in g for g in gens):
            try:
                grads = tuple(Fraction(g["alexander"]) for g in gens)
            except (ValueError, TypeError):
                raise ValueError("generators[*].alexander: expected a rational such as '-1/2'") from None
        n = len(names)
        maps = {l: f2.zeros(n) for l in LABELS}
        lookup = {nm: i for i, nm in enumerate(names)}
        for k, a in enumerate(data.get("arrows", [])):
            for key in ("from", "label", "to"):
                if not isinstance(a, dict) or key not in a:
                    raise ValueError(f"arrows[{k}]: missing field {key!r}")
            if a["label"] not in LABELS:
                raise ValueError(f"arrows[{k}].label: unknown label {a['label']!r}")
            for key in ("from", "to"):
                if a[key] not in lookup:
                    raise ValueError(f"arrows[{k}].{key}: unknown generator {a[key]!r}")
            maps[a["label"]][lookup[a["to"]], lookup[a["from"]]] ^= 1
        return cls(names, idem, maps, grads)

    def to_dot(self, title: str = "CFD") -> str:
        lines = [f'digraph "{title}" {{', "  rankdir=LR;"]
        for i, n in enumerate(self.names):
            shape = "circle" if self.idempotents[i] == 0 else "box"
            extra = f"\\nA={self.alexander[i]}" if self.alexander is not None else ""
            lines.append(f'  "{n}" [shape={shape}, label="{n}{extra}"];')
        for s, l, t in self.arrows():
            lines.append(f'  "{s}" -> "{t}" [label="D{l or "_0"}"];')
        lines.append("}")
        return "\n".join(lines)


# -- checks -------------------------------------------------------------


def structure_relation(d: TypeDStructure, label: str) -> np.ndarray:
    """sum over JK = label of D_K o D_J."""
    out = f2.zeros(d.dim)
    for J, K in factorizations(label):
        out ^= f2.matmul(d.maps[K], d.maps[J])
    return out


def check_structure(d: TypeDStructure) -> Report:
    rep = Report()
    idem = np.array(d.idempotents)
    for lab in LABELS:
        M = d.maps[lab]
        bad = []
        for t, s in zip(*np.nonzero(M)):
            sides = label_sides(lab)
            want = (idem[s], idem[s]) if sides is None else sides
            if (idem[s], idem[t]) != want:
                bad.append(f"{d.names[s]}->{d.names[t]}")
        rep.add(f"typing D_{lab or 'empty'}", not bad, ", ".join(bad))
    for lab in LABELS:
        R = structure_relation(d, lab)
        terms = " + ".join(f"D{K or '_0'}D{J or '_0'}" for J, K in factorizations(lab))
        bad = [f"({d.names[s]} -> {d.names[t]})" for t, s in zip(*np.nonzero(R))]
        rep.add(f"relation {lab or 'empty'}: {terms} = 0", not bad, ", ".join(bad))
    if d.alexander is not None:
        bad = [
            d.names[i]
            for i, a in enumerate(d.alexander)
            if (a.denominator == 1) != (d.idempotents[i] == 0)
        ]
        rep.add("grading parity", not bad, ", ".join(bad))
        for lab in LABELS:
            bad = []
            for t, s in zip(*np.nonzero(d.maps[lab])):
                if d.alexander[t] - d.alexander[s] != DEGREE[lab]:
                    bad.append(f"{d.names[s]}->{d.names[t]}")
            rep.add(f"homogeneity D_{lab or 'empty'} (degree {DEGREE[lab]})", not bad, ", ".join(bad))
    return rep


def is_reduced(d: TypeDStructure) -> bool:
    return not d.maps[""].any()


def reduce(d: TypeDStructure) -> TypeDStructure:
    """Cancel unlabelled arrows until none remain, lowest source index first."""
    while True:
        M = d.maps[""]
        hits = np.nonzero(M.T)
        if hits[0].size == 0:
            return d
        x, y = int(hits[0][0]), int(hits[1][0])
        maps = {l: np.array(m, dtype=np.uint8) for l, m in d.maps.items()}
        for lab in LABELS:
            for J, K in factorizations(lab):
                # zig-zag a -J-> y <-_0- x -K-> b contributes rho_J rho_K = rho_lab
                col = d.maps[K][:, x]
                row = d.maps[J][y, :]
                maps[lab] ^= np.outer(col, row).astype(np.uint8)
        keep = [i for i in range(d.dim) if i not in (x, y)]
        d = TypeDStructure(d.names, d.idempotents, maps, d.alexander).restrict(keep)


# -- path enumeration ---------------------------------------------------


@dataclass
class PathEnumeration:
    paths: list[tuple[tuple[str, ...], np.ndarray]]
    truncated: bool

    def __iter__(self) -> Iterator[tuple[tuple[str, ...], np.ndarray]]:
        return iter(self.paths)

    def __len__(self) -> int:
        return len(self.paths)

    def sequences(self) -> list[tuple[str, ...]]:
        return [p for p, _ in self.paths]


def nonzero_paths(
    d: TypeDStructure, budget: int, start: Sequence[int] | None = None
) -> PathEnumeration:
    """All label sequences of length 1..budget whose composition is nonzero.

    With ``start`` the composition is restricted to those source columns.
    ``truncated`` is set if some length-``budget`` path still extends.
    """
    if not is_reduced(d):
        raise ValueError("nonzero_paths needs a reduced structure")
    cols = list(range(d.dim)) if start is None else list(start)
    out: list[tuple[tuple[str, ...], np.ndarray]] = []
    truncated = False
    stack = [((), f2.eye(d.dim)[:, cols])]
    while stack:
        seq, M = stack.pop()
        for lab in reversed(RHO_WORDS):
            N = f2.matmul(d.maps[lab], M)
            if not N.any():
                continue
            if len(seq) == budget:
                truncated = True
                continue
            stack.append((seq + (lab,), N))
        if seq:
            out.append((seq, M))
    out.sort(key=lambda p: (len(p[0]), [RHO_WORDS.index(l) for l in p[0]]))
    return PathEnumeration(out, truncated)
