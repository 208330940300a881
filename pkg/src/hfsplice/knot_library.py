"""Built-in fixtures and random valid complexes.

Fixtures ship as JSON under ``hfsplice/data`` in the documented schemas.
``sigma237_core_cfd`` is the bordered invariant of the core of +1 surgery on
the left-handed trefoil, stored as a finished type D structure.  Its
accompanying prose names eta_0 among the generators of vertical homology,
while the diagram itself has eta_1 and eta_2 only; the fixture follows the
diagram.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from importlib import resources

from .cfd_builder import CfdLayout, build_cfd
from .cfk_complex import (
    CFKComplex,
    KnotNormalForm,
    box,
    change_basis,
    direct_sum,
    mirror,
    simplify,
    staircase,
    tensor,
    validate,
)
from .type_d import TypeDStructure, check_structure, is_reduced

NAMES = ("unknot", "trefoil_r", "trefoil_l", "figure8", "sigma237_core_cfd")


@dataclass(eq=False)
class FixtureEntry:
    name: str
    payload: CFKComplex | TypeDStructure
    expected: dict = field(default_factory=dict)

    @property
    def is_complex(self) -> bool:
        return isinstance(self.payload, CFKComplex)

    def normal_form(self) -> KnotNormalForm:
        if not self.is_complex:
            raise TypeError(f"{self.name} is a raw type D structure")
        return simplify(self.payload)

    def layout(self) -> CfdLayout:
        return build_cfd(self.normal_form())

    def cfd(self) -> TypeDStructure:
        return self.layout().structure if self.is_complex else self.payload


def _load(name: str) -> dict:
    return json.loads(resources.files("hfsplice").joinpath("data", f"{name}.json").read_text())


def get(name: str) -> FixtureEntry:
    if name not in NAMES:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(NAMES)}")
    data = _load(name)
    expected = data.pop("expected", {})
    if name == "sigma237_core_cfd":
        d = TypeDStructure.from_json(data)
        rep = check_structure(d)
        if not rep.ok or not is_reduced(d):
            raise ValueError(f"fixture {name} fails its checks: {rep.failures()}")
        return FixtureEntry(name, d, expected)
    c = CFKComplex.from_json(data)
    rep = validate(c)
    if not rep.ok:
        raise ValueError(f"fixture {name} fails validation: {rep.failures()}")
    return FixtureEntry(name, c, expected)


def resolve(spec: str) -> FixtureEntry:
    """A fixture by name, or a JSON file in either schema."""
    if spec in NAMES:
        return get(spec)
    with open(spec) as fh:
        data = json.load(fh)
    if "differential" in data:
        c = CFKComplex.from_json(data)
        return FixtureEntry(spec, c)
    return FixtureEntry(spec, TypeDStructure.from_json(data))


# -- random complexes ---------------------------------------------------


def _palindrome(rng: random.Random, half: int, max_step: int) -> list[int]:
    steps = [rng.randint(1, max_step) for _ in range(half)]
    return steps + steps[::-1]


def random_lspace(rng: random.Random, max_genus: int = 4) -> CFKComplex:
    """Staircase with palindromic steps and genus at most ``max_genus``."""
    while True:
        half = rng.randint(1, 2)
        steps = _palindrome(rng, half, 3)
        if sum(steps) // 2 <= max_genus:
            c = staircase(steps)
            return c if rng.random() < 0.5 else mirror(c)


def scramble(c: CFKComplex, rng: random.Random, moves: int) -> CFKComplex:
    """Apply random filtered elementary changes of basis."""
    for _ in range(moves if c.rank > 1 else 0):
        i, j = rng.sample(range(c.rank), 2)
        e = max(0, c.alexander[j] - c.alexander[i]) + rng.randint(0, 1)
        c = change_basis(c, i, j, e)
    return c


def random_complex(rng: random.Random, max_genus: int = 4, max_n: int = 5, moves: int = 6) -> CFKComplex:
    """A valid reduced complex with genus <= max_genus and rank <= 2 max_n + 1.

    Built from staircases, their mirrors and tensor products, plus symmetric
    acyclic boxes, then scrambled by filtered changes of basis.
    """
    max_rank = 2 * max_n + 1
    while True:
        kind = rng.random()
        if kind < 0.4:
            c = random_lspace(rng, max_genus)
        elif kind < 0.6:
            a = staircase([1, 1])
            b = random_lspace(rng, max_genus - 1)
            c = tensor(a if rng.random() < 0.5 else mirror(a), b)
        else:
            c = random_lspace(rng, max_genus) if rng.random() < 0.7 else CFKComplex(("u",), (0,), {})
        while rng.random() < 0.5 and c.rank + 4 <= max_rank:
            side = rng.randint(1, 2)
            top = rng.randint(-1, 1)
            pieces = [box(0, side)] if top == 0 else [box(top, side), box(-top, side)]
            if c.rank + 4 * len(pieces) > max_rank:
                break
            c = direct_sum(c, *pieces)
        if c.rank > max_rank or max(c.alexander) > max_genus:
            continue
        if max(c.alexander) == 0 and c.rank > 1:
            continue
        return scramble(c, rng, moves)


def random_normal_form(rng: random.Random, max_genus: int = 4, max_n: int = 5) -> KnotNormalForm:
    return simplify(random_complex(rng, max_genus, max_n))

