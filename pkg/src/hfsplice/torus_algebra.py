"""The torus algebra A(T^2) over F_2.

Eight basis elements: the idempotents ``i0``, ``i1`` and the Reeb chords
``r1, r2, r3, r12, r23, r123``.  An element of the algebra is a set of basis
names (coefficients live in F_2, so a set is enough).  The differential on
the algebra is zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

IDEMPOTENTS = ("i0", "i1")
RHO_WORDS = ("1", "2", "3", "12", "23", "123")
GENERATORS = IDEMPOTENTS + tuple("r" + w for w in RHO_WORDS)


def is_rho_word(word: str) -> bool:
    return word in RHO_WORDS


def idempotent_sides(word: str) -> tuple[int, int]:
    """Return ``(left, right)`` with ``i_left * rho_word * i_right = rho_word``."""
    if word not in RHO_WORDS:
        raise ValueError(f"not a Reeb chord: {word!r}")
    return (int(word[0]) - 1) % 2, int(word[-1]) % 2


def rho(word: str) -> str:
    return "r" + word


def word_of(gen: str) -> str:
    if gen[0] != "r":
        raise ValueError(f"{gen!r} is an idempotent")
    return gen[1:]


def _generator_product(a: str, b: str) -> str | None:
    if a in IDEMPOTENTS and b in IDEMPOTENTS:
        return a if a == b else None
    if a in IDEMPOTENTS:
        return b if idempotent_sides(word_of(b))[0] == int(a[1]) else None
    if b in IDEMPOTENTS:
        return a if idempotent_sides(word_of(a))[1] == int(b[1]) else None
    joined = word_of(a) + word_of(b)
    return rho(joined) if joined in RHO_WORDS else None


_TABLE = {(a, b): _generator_product(a, b) for a in GENERATORS for b in GENERATORS}


@dataclass(frozen=True)
class AlgebraElement:
    support: frozenset[str] = frozenset()

    def __post_init__(self):
        bad = set(self.support) - set(GENERATORS)
        if bad:
            raise ValueError(f"unknown generators {sorted(bad)}")

    @classmethod
    def of(cls, *gens: str) -> "AlgebraElement":
        out: set[str] = set()
        for g in gens:
            out ^= {g}
        return cls(frozenset(out))

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(self.support ^ other.support)

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        return multiply(self, other)

    def __bool__(self) -> bool:
        return bool(self.support)

    def __iter__(self):
        return iter(sorted(self.support, key=GENERATORS.index))

    def __str__(self) -> str:
        if not self.support:
            return "0"
        return "+".join(self)


ZERO = AlgebraElement()
ONE = AlgebraElement.of("i0", "i1")


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    out: set[str] = set()
    for x in a.support:
        for y in b.support:
            p = _TABLE[x, y]
            if p is not None:
                out ^= {p}
    return AlgebraElement(frozenset(out))


def rho_element(word: str) -> AlgebraElement:
    """``rho_word`` as an algebra element; the empty word is the unit."""
    if word == "":
        return ONE
    return AlgebraElement.of(rho(word))


def product_word(words: Iterable[str]) -> str | None:
    """Word of ``rho_{w1} ... rho_{wk}`` if that product is a single chord, else None."""
    acc = ""
    for w in words:
        acc += w
        if acc not in RHO_WORDS:
            return None
    return acc or None
