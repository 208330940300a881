"""Reduced knot Floer complexes over F_2[U] and their simplified bases.

A complex has generators ``x_0 .. x_{2n}`` with integer Alexander gradings and
a differential stored sparsely: ``diff[(p, q)]`` is the polynomial ``d_pq`` in
``dx_p = sum_q d_pq x_q``.  Multiplication by U lowers the Alexander grading
by one.

``simplify`` produces a vertically simplified basis (arrows of the
differential mod U) and a horizontally simplified basis (arrows that keep the
Alexander filtration level), made compatible so the change of basis between
them is homogeneous, and packages the result as a :class:`KnotNormalForm`.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

from . import f2


class ComplexError(ValueError):
    """Malformed or invalid CFK input."""


class SimplificationError(RuntimeError):
    """Raised when simplified bases cannot be produced."""


@dataclass(frozen=True)
class UPoly:
    """An element sum U^e of F_2[U], stored as its set of exponents."""

    exponents: frozenset[int] = frozenset()

    @classmethod
    def of(cls, *exps: int) -> "UPoly":
        out: set[int] = set()
        for e in exps:
            if e < 0:
                raise ValueError("negative U power")
            out ^= {e}
        return cls(frozenset(out))

    def __add__(self, other: "UPoly") -> "UPoly":
        return UPoly(self.exponents ^ other.exponents)

    def __mul__(self, other: "UPoly") -> "UPoly":
        out: set[int] = set()
        for a in self.exponents:
            for b in other.exponents:
                out ^= {a + b}
        return UPoly(frozenset(out))

    def shift(self, k: int = 1) -> "UPoly":
        return UPoly(frozenset(e + k for e in self.exponents))

    def __bool__(self) -> bool:
        return bool(self.exponents)

    def at_zero(self) -> int:
        return int(0 in self.exponents)

    def __repr__(self) -> str:
        if not self.exponents:
            return "0"
        return "+".join("1" if e == 0 else f"U^{e}" for e in sorted(self.exponents))


Diff = Mapping[tuple[int, int], UPoly]


@dataclass(frozen=True)
class CFKComplex:
    names: tuple[str, ...]
    alexander: tuple[int, ...]
    diff: Mapping[tuple[int, int], UPoly] = field(default_factory=dict)

    def __post_init__(self):
        if len(self.names) != len(self.alexander):
            raise ComplexError("names and gradings differ in length")
        if len(set(self.names)) != len(self.names):
            raise ComplexError("duplicate generator names")
        clean = {k: v for k, v in self.diff.items() if v}
        object.__setattr__(self, "diff", clean)

    @property
    def rank(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def boundary(self, p: int) -> dict[int, UPoly]:
        return {q: d for (s, q), d in self.diff.items() if s == p}

    # -- serialization -------------------------------------------------

    def to_json(self) -> dict:
        gens = [{"name": n, "alexander": a} for n, a in zip(self.names, self.alexander)]
        arrows = [
            {"from": self.names[p], "to": self.names[q], "u_powers": sorted(d.exponents)}
            for (p, q), d in sorted(self.diff.items())
        ]
        return {"generators": gens, "differential": arrows}

    @classmethod
    def from_json(cls, data) -> "CFKComplex":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            gens = data["generators"]
        except (KeyError, TypeError):
            raise ComplexError("missing field: generators") from None
        names, grads = [], []
        for i, g in enumerate(gens):
            for key, typ in (("name", str), ("alexander", int)):
                if key not in g:
                    raise ComplexError(f"generators[{i}]: missing field {key!r}")
                if not isinstance(g[key], typ) or isinstance(g[key], bool):
                    raise ComplexError(f"generators[{i}].{key}: expected {typ.__name__}")
            names.append(g["name"])
            grads.append(g["alexander"])
        lookup = {n: i for i, n in enumerate(names)}
        diff: dict[tuple[int, int], UPoly] = {}
        for i, arrow in enumerate(data.get("differential", [])):
            for key in ("from", "to", "u_powers"):
                if key not in arrow:
                    raise ComplexError(f"differential[{i}]: missing field {key!r}")
            for key in ("from", "to"):
                if arrow[key] not in lookup:
                    raise ComplexError(f"differential[{i}].{key}: unknown generator {arrow[key]!r}")
            powers = arrow["u_powers"]
            if not isinstance(powers, list) or not all(isinstance(e, int) and e >= 0 for e in powers):
                raise ComplexError(f"differential[{i}].u_powers: expected list of nonnegative ints")
            key = (lookup[arrow["from"]], lookup[arrow["to"]])
            diff[key] = diff.get(key, UPoly()) + UPoly.of(*powers)
        return cls(tuple(names), tuple(grads), diff)


# -- constructions ------------------------------------------------------


def mirror(c: CFKComplex) -> CFKComplex:
    """Dual complex: gradings negated, arrows reversed with the same U powers."""
    diff = {(q, p): d for (p, q), d in c.diff.items()}
    names = tuple(n + "*" for n in c.names)
    return CFKComplex(names, tuple(-a for a in c.alexander), diff)


def tensor(c1: CFKComplex, c2: CFKComplex) -> CFKComplex:
    n1, n2 = c1.rank, c2.rank
    names = tuple(f"{a}.{b}" for a in c1.names for b in c2.names)
    grads = tuple(a + b for a in c1.alexander for b in c2.alexander)
    diff: dict[tuple[int, int], UPoly] = {}

    def add(k, d):
        diff[k] = diff.get(k, UPoly()) + d

    for (p, q), d in c1.diff.items():
        for r in range(n2):
            add((p * n2 + r, q * n2 + r), d)
    for (r, s), d in c2.diff.items():
        for p in range(n1):
            add((p * n2 + r, p * n2 + s), d)
    return CFKComplex(names, grads, diff)


def direct_sum(*cs: CFKComplex) -> CFKComplex:
    names, grads, diff, off = [], [], {}, 0
    for k, c in enumerate(cs):
        names += [f"{n}#{k}" for n in c.names]
        grads += list(c.alexander)
        diff.update({(p + off, q + off): d for (p, q), d in c.diff.items()})
        off += c.rank
    return CFKComplex(tuple(names), tuple(grads), diff)


def change_basis(c: CFKComplex, i: int, j: int, e: int) -> CFKComplex:
    """Replace ``x_i`` by ``x_i + U^e x_j``; requires A(x_j) - e <= A(x_i)."""
    if i == j or e < 0 or c.alexander[j] - e > c.alexander[i]:
        raise ComplexError("not a filtered elementary basis change")
    rows: dict[int, dict[int, UPoly]] = {p: c.boundary(p) for p in range(c.rank)}
    ue = UPoly.of(e)
    new_i = dict(rows[i])
    for q, d in rows[j].items():
        new_i[q] = new_i.get(q, UPoly()) + ue * d
    rows[i] = new_i
    # old coordinates -> new: the x_j coefficient picks up U^e times the x_i one
    diff: dict[tuple[int, int], UPoly] = {}
    for p, row in rows.items():
        row = dict(row)
        if i in row:
            row[j] = row.get(j, UPoly()) + ue * row[i]
        for q, d in row.items():
            if d:
                diff[p, q] = d
    return CFKComplex(c.names, c.alexander, diff)


def staircase(steps: Iterable[int], name: str = "x") -> CFKComplex:
    """Staircase complex with alternating horizontal/vertical step lengths.

    ``steps = (h0, v0, h1, v1, ...)``; palindromic steps give a complex
    symmetric under A -> -A, as for L-space knots.
    """
    steps = list(steps)
    if len(steps) % 2 or any(s < 1 for s in steps):
        raise ComplexError("staircase needs an even number of positive steps")
    g2 = sum(steps)
    if g2 % 2:
        raise ComplexError("staircase steps must sum to an even number")
    a = g2 // 2
    grads = [a]
    for k, s in enumerate(steps):
        a = a - s
        grads.append(a)
    diff: dict[tuple[int, int], UPoly] = {}
    for i in range(len(steps) // 2):
        src = 2 * i + 1
        diff[src, 2 * i] = UPoly.of(steps[2 * i])
        diff[src, 2 * i + 2] = UPoly.of(0)
    names = tuple(f"{name}{k}" for k in range(len(grads)))
    return CFKComplex(names, tuple(grads), diff)


def box(top: int, side: int, name: str = "b") -> CFKComplex:
    """Acyclic square: a -> c vertically and a -> U^side b horizontally, closed by d.

    ``top`` is A(a); the square is symmetric about 0 when ``top == 0``.
    """
    a, b, cc, d = top, top + side, top - side, top
    diff = {
        (0, 2): UPoly.of(0),
        (0, 1): UPoly.of(side),
        (1, 3): UPoly.of(0),
        (2, 3): UPoly.of(side),
    }
    names = tuple(f"{name}{k}" for k in "abcd")
    return CFKComplex(names, (a, b, cc, d), diff)


# -- validation ---------------------------------------------------------


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


def d_squared(c: CFKComplex) -> dict[tuple[int, int], UPoly]:
    rows = {p: c.boundary(p) for p in range(c.rank)}
    out: dict[tuple[int, int], UPoly] = {}
    for p, row in rows.items():
        for q, d1 in row.items():
            for r, d2 in rows[q].items():
                out[p, r] = out.get((p, r), UPoly()) + d1 * d2
    return {k: v for k, v in out.items() if v}


def validate(c: CFKComplex) -> Report:
    rep = Report()
    A = c.alexander
    sq = d_squared(c)
    rep.add("d^2 = 0", not sq, "; ".join(f"({c.names[p]},{c.names[r]}): {v}" for (p, r), v in sq.items()))
    rep.add("odd rank", c.rank % 2 == 1, f"rank {c.rank}")
    bad_filt, bad_red = [], []
    for (p, q), d in c.diff.items():
        for e in d.exponents:
            if A[q] - e > A[p]:
                bad_filt.append(f"{c.names[p]}->U^{e} {c.names[q]}")
        if 0 in d.exponents and A[q] >= A[p]:
            bad_red.append(f"{c.names[p]}->{c.names[q]}")
    rep.add("filtered", not bad_filt, ", ".join(bad_filt))
    rep.add("reduced", not bad_red, ("not reduced: " + ", ".join(bad_red)) if bad_red else "")
    if c.rank:
        rep.add("genus symmetry", max(A) == -min(A), f"max {max(A)}, min {min(A)}")
    return rep


def genus(c: CFKComplex) -> int:
    return max(c.alexander)


def hfk_dimension(c: CFKComplex, a: int) -> int:
    return sum(1 for x in c.alexander if x == a)


# -- normal forms -------------------------------------------------------


@dataclass(frozen=True)
class Arrow:
    length: int
    source_grading: int
    target_grading: int


@dataclass(frozen=True, eq=False)
class KnotNormalForm:
    """Arrow data, tau, epsilon and the mod-U change of basis between the
    vertical (xi) and horizontal (eta) bases.

    ``basis_change_a[p, q]`` is the coefficient of eta_q in xi_p and
    ``basis_change_b[p, q]`` the coefficient of xi_q in eta_p.
    """

    n: int
    vertical_arrows: tuple[Arrow, ...]
    horizontal_arrows: tuple[Arrow, ...]
    tau: int
    epsilon: int
    basis_change_a: np.ndarray
    basis_change_b: np.ndarray

    @property
    def xi_gradings(self) -> tuple[int, ...]:
        out = [self.tau]
        for arr in self.vertical_arrows:
            out += [arr.source_grading, arr.target_grading]
        return tuple(out)

    @property
    def eta_gradings(self) -> tuple[int, ...]:
        out = [-self.tau]
        for arr in self.horizontal_arrows:
            out += [arr.source_grading, arr.target_grading]
        return tuple(out)

    @property
    def genus(self) -> int:
        return max(self.xi_gradings)

    def hfk_dimension(self, a: int) -> int:
        return sum(1 for x in self.xi_gradings if x == a)

    def __eq__(self, other):
        if not isinstance(other, KnotNormalForm):
            return NotImplemented
        return (
            (self.n, self.vertical_arrows, self.horizontal_arrows, self.tau, self.epsilon)
            == (other.n, other.vertical_arrows, other.horizontal_arrows, other.tau, other.epsilon)
            and np.array_equal(self.basis_change_a, other.basis_change_a)
            and np.array_equal(self.basis_change_b, other.basis_change_b)
        )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "vertical_arrows": [[a.length, a.source_grading, a.target_grading] for a in self.vertical_arrows],
            "horizontal_arrows": [[a.length, a.source_grading, a.target_grading] for a in self.horizontal_arrows],
            "tau": self.tau,
            "epsilon": self.epsilon,
            "basis_change_a": self.basis_change_a.tolist(),
            "basis_change_b": self.basis_change_b.tolist(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "KnotNormalForm":
        nf = cls(
            n=data["n"],
            vertical_arrows=tuple(Arrow(*a) for a in data["vertical_arrows"]),
            horizontal_arrows=tuple(Arrow(*a) for a in data["horizontal_arrows"]),
            tau=data["tau"],
            epsilon=data["epsilon"],
            basis_change_a=f2.as_f2(data["basis_change_a"]),
            basis_change_b=f2.as_f2(data["basis_change_b"]),
        )
        check_normal_form(nf)
        return nf


def check_normal_form(nf: KnotNormalForm) -> None:
    """Raise :class:`ComplexError` if ``nf`` violates a normal-form invariant."""
    n = nf.n
    size = 2 * n + 1
    if len(nf.vertical_arrows) != n or len(nf.horizontal_arrows) != n:
        raise ComplexError("arrow count differs from n")
    for a in nf.vertical_arrows:
        if a.length < 1 or a.source_grading - a.target_grading != a.length:
            raise ComplexError(f"bad vertical arrow {a}")
    for a in nf.horizontal_arrows:
        if a.length < 1 or a.target_grading - a.source_grading != a.length:
            raise ComplexError(f"bad horizontal arrow {a}")
    if Counter(a.length for a in nf.vertical_arrows) != Counter(a.length for a in nf.horizontal_arrows):
        raise ComplexError("vertical and horizontal arrow lengths differ as multisets")
    A, B = nf.basis_change_a, nf.basis_change_b
    if A.shape != (size, size) or B.shape != (size, size):
        raise ComplexError("basis change has the wrong shape")
    if not np.array_equal(f2.matmul(A, B), f2.eye(size)):
        raise ComplexError("basis_change_a and basis_change_b are not inverse")
    xg, eg = nf.xi_gradings, nf.eta_gradings
    for p in range(size):
        for q in range(size):
            if A[p, q] and xg[p] != eg[q]:
                raise ComplexError(f"basis_change_a[{p},{q}] joins gradings {xg[p]} and {eg[q]}")
            if B[p, q] and eg[p] != xg[q]:
                raise ComplexError(f"basis_change_b[{p},{q}] joins gradings {eg[p]} and {xg[q]}")
    if sorted(xg) != sorted(eg):
        raise ComplexError("xi and eta gradings differ")
    if max(xg) != -min(xg):
        raise ComplexError("gradings are not symmetric")
    if nf.epsilon not in (-1, 0, 1):
        raise ComplexError("epsilon must be -1, 0 or 1")
    target = {-1: 1, 0: 0, 1: 2}[nf.epsilon]
    if target >= size or not np.array_equal(A[0], f2.eye(size)[target]):
        raise ComplexError(f"xi_0 is not eta_{target} although epsilon = {nf.epsilon}")


@dataclass
class SimplifiedBases:
    """Both simplified bases as F_2 vectors over the original generators.

    ``xi[:, p]`` lists constant coefficients (xi_p = sum xi[q, p] x_q).
    ``eta[:, p]`` lists coefficients of the homogeneous lift
    eta_p = sum eta[q, p] U^(A(x_q) - A(eta_p)) x_q.
    """

    complex: CFKComplex
    xi: np.ndarray
    eta: np.ndarray
    xi_gradings: tuple[int, ...]
    eta_gradings: tuple[int, ...]
    epsilon: int

    def xi_poly(self, p: int) -> dict[int, UPoly]:
        return {q: UPoly.of(0) for q in np.nonzero(self.xi[:, p])[0]}

    def eta_poly(self, p: int) -> dict[int, UPoly]:
        A = self.complex.alexander
        return {int(q): UPoly.of(A[q] - self.eta_gradings[p]) for q in np.nonzero(self.eta[:, p])[0]}


def vertical_matrix(c: CFKComplex) -> np.ndarray:
    D = f2.zeros(c.rank)
    for (p, q), d in c.diff.items():
        if 0 in d.exponents:
            D[q, p] = 1
    return D


def horizontal_matrix(c: CFKComplex) -> np.ndarray:
    D = f2.zeros(c.rank)
    A = c.alexander
    for (p, q), d in c.diff.items():
        e = A[q] - A[p]
        if e >= 1 and e in d.exponents:
            D[q, p] = 1
    return D


def _level_part(v: np.ndarray, grads: tuple[int, ...], level: int) -> np.ndarray:
    mask = np.array([g == level for g in grads], dtype=bool)
    out = v.copy()
    out[~mask] = 0
    return out


def _simplify_filtered(D: np.ndarray, levels: list[int], basis: np.ndarray):
    """Persistence on ``D`` after moving to ``basis`` (columns sorted by level).

    Returns the reduction and the simplified vectors in original coordinates.
    """
    Binv = f2.inverse(basis)
    Db = f2.matmul(f2.matmul(Binv, D), basis)
    red = f2.reduce_columns(Db)
    vecs = [f2.matmul(basis, red.basis_vector(i).reshape(-1, 1)).ravel() for i in range(len(levels))]
    return red, vecs


def _best_representative(D: np.ndarray, g: np.ndarray, mods: list[np.ndarray]):
    """Best membership class of ``g + m`` over ``m`` in the span of ``mods``.

    Scores are +1 for a boundary of ``D``, 0 for a cycle and -1 otherwise.
    Returns the score, the representative and the coefficients of ``mods``.
    """
    n = len(g)
    M = np.stack(mods, axis=1) if mods else f2.zeros(n, 0)
    k = M.shape[1]
    sol = f2.solve(np.hstack([M, D]), g)
    if sol is not None:
        return 1, g ^ f2.matmul(M, sol[:k].reshape(-1, 1)).ravel(), sol[:k]
    Dg = f2.matmul(D, g.reshape(-1, 1)).ravel()
    sol = f2.solve(f2.matmul(D, M), Dg) if k else (np.zeros(0, np.uint8) if not Dg.any() else None)
    if sol is not None:
        return 0, g ^ f2.matmul(M, sol.reshape(-1, 1)).ravel(), sol
    return -1, g, np.zeros(k, dtype=np.uint8)


def simplified_bases(c: CFKComplex) -> SimplifiedBases:
    rep = validate(c)
    if not rep.ok:
        raise SimplificationError("invalid complex: " + "; ".join(f"{n}: {d}" for n, d in rep.failures()))
    A = c.alexander
    N = c.rank

    # vertical: filtration A, ties by generator index
    order = sorted(range(N), key=lambda q: (A[q], q))
    P = f2.zeros(N)
    for pos, q in enumerate(order):
        P[q, pos] = 1
    Dv = vertical_matrix(c)
    red, vecs = _simplify_filtered(Dv, [A[q] for q in order], P)
    ess = red.essential()
    if len(ess) != 1:
        raise SimplificationError(f"vertical homology has rank {len(ess)}, expected 1")
    pairs = sorted(red.pairs.items())
    lvl = lambda pos: A[order[pos]]
    xi_cols = [vecs[ess[0]]]
    xi_grads = [lvl(ess[0])]
    for s, t in pairs:
        xi_cols += [vecs[s], vecs[t]]
        xi_grads += [lvl(s), lvl(t)]
    xi = np.stack(xi_cols, axis=1) if N else f2.zeros(0)
    tau = xi_grads[0]

    Dh = horizontal_matrix(c)
    h_order = sorted(range(N), key=lambda q: (-A[q], q))
    Ph = f2.zeros(N)
    for pos, q in enumerate(h_order):
        Ph[q, pos] = 1

    # epsilon from the vertical side, using a horizontally simplified basis
    hred, hvecs = _simplify_filtered(Dh, [-A[q] for q in h_order], Ph)
    hess = hred.essential()
    if len(hess) != 1:
        raise SimplificationError(f"horizontal homology has rank {len(hess)}, expected 1")
    eta0_level = A[h_order[hess[0]]]
    if eta0_level != -tau:
        raise SimplificationError(f"tau mismatch: A(xi_0) = {tau} but A(eta_0) = {eta0_level}")
    h_targets = [_level_part(hvecs[t], A, -tau) for t in hred.targets if A[h_order[t]] == -tau]
    lower = [f2.eye(N)[q] for q in range(N) if A[q] < -tau]
    eps_v, _, _ = _best_representative(Dv, _level_part(hvecs[hess[0]], A, -tau), h_targets + lower)

    # epsilon from the horizontal side; the representative of xi_0 may absorb
    # vertical targets in its grading and U-multiples of higher generators
    v_targets = [t for t in red.targets if lvl(t) == tau]
    higher = [f2.eye(N)[q] for q in range(N) if A[q] > tau]
    mods = [_level_part(vecs[t], A, tau) for t in v_targets] + higher
    eps_h, g0, coeffs = _best_representative(Dh, _level_part(xi[:, 0], A, tau), mods)
    if eps_v != eps_h:
        raise SimplificationError(f"epsilon disagrees: vertical test {eps_v}, horizontal test {eps_h}")
    eps = eps_h
    for k, t in enumerate(v_targets):
        if coeffs[k]:
            xi[:, 0] ^= vecs[t]

    # horizontal basis seeded with that representative, first in its level
    star = max((q for q in np.nonzero(g0)[0] if A[q] == tau), key=lambda q: (-A[q], q))
    cols, keys = [], []
    for q in range(N):
        v = g0.copy() if q == star else f2.eye(N)[q]
        cols.append(v)
        keys.append((-A[q], 0 if q == star else 1, q))
    perm = sorted(range(N), key=lambda k: keys[k])
    Bh = np.stack([cols[k] for k in perm], axis=1)
    hred, hvecs = _simplify_filtered(Dh, [keys[k][0] for k in perm], Bh)
    spos = perm.index(star)
    hlvl = lambda pos: A[perm[pos]]
    hpairs = sorted(hred.pairs.items())
    hess = hred.essential()
    if spos in hess:
        role = 0
    elif spos in hred.targets:
        role = 1
    else:
        role = -1
    if role != eps:
        raise SimplificationError(f"xi_0 takes role {role} in the horizontal basis but epsilon = {eps}")
    if role == 1:
        hpairs.sort(key=lambda st: st[1] != spos)
    elif role == -1:
        hpairs.sort(key=lambda st: st[0] != spos)
    eta_cols = [hvecs[hess[0]]]
    eta_grads = [hlvl(hess[0])]
    for s, t in hpairs:
        eta_cols += [hvecs[s], hvecs[t]]
        eta_grads += [hlvl(s), hlvl(t)]
    eta = np.stack(eta_cols, axis=1) if N else f2.zeros(0)
    return SimplifiedBases(c, xi, eta, tuple(xi_grads), tuple(eta_grads), eps)


def _mod_u_change(sb: SimplifiedBases) -> np.ndarray:
    """b[p, q]: coefficient of xi_q in eta_p after truncation and U = 0."""
    A = sb.complex.alexander
    N = sb.complex.rank
    b = f2.zeros(N)
    for level in sorted(set(sb.xi_gradings)):
        xs = [q for q in range(N) if sb.xi_gradings[q] == level]
        es = [p for p in range(N) if sb.eta_gradings[p] == level]
        if len(xs) != len(es):
            raise SimplificationError(f"bases have different sizes in grading {level}")
        M = np.stack([_level_part(sb.xi[:, q], A, level) for q in xs], axis=1)
        for p in es:
            x = f2.solve(M, _level_part(sb.eta[:, p], A, level))
            if x is None:
                raise SimplificationError(f"eta_{p} leading part not spanned by xi leads")
            for k, q in enumerate(xs):
                b[p, q] = x[k]
    return b


def simplify(c: CFKComplex) -> KnotNormalForm:
    sb = simplified_bases(c)
    b = _mod_u_change(sb)
    a = f2.inverse(b)
    n = (c.rank - 1) // 2
    xg, eg = sb.xi_gradings, sb.eta_gradings
    vert = tuple(Arrow(xg[2 * j - 1] - xg[2 * j], xg[2 * j - 1], xg[2 * j]) for j in range(1, n + 1))
    horiz = tuple(Arrow(eg[2 * j] - eg[2 * j - 1], eg[2 * j - 1], eg[2 * j]) for j in range(1, n + 1))
    nf = KnotNormalForm(n, vert, horiz, xg[0], sb.epsilon, a, b)
    check_normal_form(nf)
    return nf


def tau(c: CFKComplex) -> int:
    return simplified_bases(c).xi_gradings[0]


def epsilon(c: CFKComplex) -> int:
    return simplified_bases(c).epsilon
