"""
Multiplication in the basis ``{[X_u]}`` of the cohomology ring.

The pairing ``I[w, w'] = <[Y^w][X_w']>`` is unitriangular once elements are
ordered by length (lexicographic tiebreak), so the structure constants of
``[X_u][X_v]`` are obtained from the triple numbers by integer forward
substitution, one degree block at a time.

>>> A3 = RootSystemId("A", 3)
>>> u = parse_element(A3, "2134")
>>> print(structure_constants(u, u))
[X_2431] - [X_3214] - [X_3241] - [X_3421] - [X_4213]
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Iterable, Optional

from .intersect import triple_number
from .weyl import (
    RootSystemId, WeylElement, descent_count, enumerate_weyl, format_element,
    identity, length, parse_element,
)

__all__ = [
    "SizeCapExceeded", "DEFAULT_SIZE_CAP", "SIZE_CAP_ENV", "check_size_cap",
    "BasisCombination", "PairingMatrix", "pairing_matrix",
    "structure_constants", "multiply", "expand_product", "duality_check",
    "elimination_order",
]

DEFAULT_SIZE_CAP = 50_000
SIZE_CAP_ENV = "WEYLTORIC_SIZE_CAP"


class SizeCapExceeded(RuntimeError):
    pass


def check_size_cap(system: RootSystemId, size_cap: Optional[int] = None) -> None:
    if size_cap is None:
        size_cap = int(os.environ.get(SIZE_CAP_ENV, DEFAULT_SIZE_CAP))
    order = _group_order(system)
    if order > size_cap:
        raise SizeCapExceeded(
            f"{system}: |W| = {order} exceeds the size cap {size_cap} "
            f"(raise it with --size-cap or ${SIZE_CAP_ENV})")


def _group_order(system: RootSystemId) -> int:
    from math import factorial
    n = system.rank
    return {
        "A": factorial(n + 1),
        "B": 2 ** n * factorial(n),
        "C": 2 ** n * factorial(n),
        "D": 2 ** (n - 1) * factorial(n),
        "G2": 12,
    }[system.family]


class BasisCombination(dict):
    """Sparse integer combination ``{u: c}`` of classes ``[X_u]``; zeros are dropped."""

    def __init__(self, items=()):
        super().__init__()
        for u, c in dict(items).items():
            if c:
                self[u] = c

    def add(self, u: WeylElement, c: int) -> None:
        total = self.get(u, 0) + c
        if total:
            self[u] = total
        else:
            self.pop(u, None)

    def terms(self) -> list[tuple[WeylElement, int]]:
        return sorted(self.items(), key=lambda item: item[0].oneline)

    def to_json(self) -> list[dict]:
        return [{"w": format_element(u), "c": c} for u, c in self.terms()]

    def __str__(self):
        if not self:
            return "0"
        out = []
        for k, (u, c) in enumerate(self.terms()):
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            sign = ("-" if c < 0 else "") if k == 0 else (" - " if c < 0 else " + ")
            out.append(f"{sign}{mag}[X_{format_element(u)}]")
        return "".join(out)


def elimination_order(elements: Iterable[WeylElement]) -> list[WeylElement]:
    return sorted(elements, key=lambda u: (length(u), u.oneline))


@lru_cache(maxsize=None)
def _degree_blocks(system: RootSystemId) -> dict[int, tuple[WeylElement, ...]]:
    blocks: dict[int, list] = {}
    for u in enumerate_weyl(system):
        blocks.setdefault(descent_count(u), []).append(u)
    return {d: tuple(elimination_order(block)) for d, block in sorted(blocks.items())}


@dataclass(frozen=True)
class PairingMatrix:
    """``entries[(u, v)] = <[Y^u][X_v]>``, nonzero entries only."""
    system: RootSystemId
    elements: tuple[WeylElement, ...]
    entries: dict

    def __getitem__(self, key: tuple[WeylElement, WeylElement]) -> int:
        return self.entries.get(key, 0)

    def rows(self):
        """Nonzero entries in canonical order."""
        return sorted(((u, v, c) for (u, v), c in self.entries.items()),
                      key=lambda e: (e[0].oneline, e[1].oneline))


@lru_cache(maxsize=8)
def _pairing_cached(system: RootSystemId) -> PairingMatrix:
    e = identity(system)
    entries = {}
    for block in _degree_blocks(system).values():
        for u in block:
            for v in block:
                value = triple_number(v, e, u)
                if value:
                    entries[(u, v)] = value
    return PairingMatrix(system, enumerate_weyl(system), entries)


def pairing_matrix(system: RootSystemId, size_cap: Optional[int] = None) -> PairingMatrix:
    """Entries across different degrees vanish and are not evaluated."""
    check_size_cap(system, size_cap)
    return _pairing_cached(system)


def structure_constants(u: WeylElement, v: WeylElement,
                        size_cap: Optional[int] = None) -> BasisCombination:
    """``c_{u,v}^w`` in ``[X_u][X_v] = sum_w c_{u,v}^w [X_w]``."""
    if u.system != v.system:
        raise ValueError("u and v must belong to the same root system")
    pairing = pairing_matrix(u.system, size_cap)
    block = _degree_blocks(u.system).get(descent_count(u) + descent_count(v), ())
    out = BasisCombination()
    solved = []
    for w in block:
        if pairing[(w, w)] != 1:
            raise ArithmeticError(f"pairing diagonal at {w} is {pairing[(w, w)]}, expected 1")
        c = triple_number(u, v, w) - sum(pairing[(w, x)] * out.get(x, 0) for x in solved)
        solved.append(w)
        out.add(w, c)
    return out


def multiply(left: BasisCombination, right: BasisCombination,
             size_cap: Optional[int] = None) -> BasisCombination:
    out = BasisCombination()
    for u, a in left.items():
        for v, b in right.items():
            for w, c in structure_constants(u, v, size_cap).items():
                out.add(w, a * b * c)
    return out


def expand_product(classes: Iterable[WeylElement], system: Optional[RootSystemId] = None,
                   size_cap: Optional[int] = None) -> BasisCombination:
    """Left fold of ``[X_a][X_b]...``; the empty product needs ``system``."""
    classes = list(classes)
    if not classes:
        if system is None:
            raise ValueError("the empty product needs an explicit root system")
        return BasisCombination({identity(system): 1})
    start = BasisCombination({classes[0]: 1})
    return reduce(lambda acc, x: multiply(acc, BasisCombination({x: 1}), size_cap),
                  classes[1:], start)


def duality_check(u: WeylElement, v: WeylElement, size_cap: Optional[int] = None) -> bool:
    """Every triple number equals ``sum_w' I[w, w'] c_{u,v}^{w'}``, over all of W."""
    pairing = pairing_matrix(u.system, size_cap)
    c = structure_constants(u, v, size_cap)
    for w in enumerate_weyl(u.system):
        if triple_number(u, v, w) != sum(pairing[(w, x)] * coef for x, coef in c.items()):
            return False
    return True
