"""
Young diagrams with n rows inside the n x n square, their lower-right corner
statistics, and the closed-form intersection numbers built from them.

The empty diagram is represented by ``None`` throughout; every intersection
function returns 0 on it.

>>> lam = YoungDiagram((4, 4, 1, 1))
>>> [(c.position, c.a, c.b, c.c) for c in corner_data(lam)]
[(2, 1, 2, 1), (4, 1, 0, 0)]
>>> I_A(lam)
2
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional

from .weyl import (
    Label, RootSystemId, WeylElement, ascent_labels, descent_count,
    descent_labels,
)

__all__ = [
    "YoungDiagram", "Corner", "binom", "corner_data", "staircase",
    "I_A", "I_B", "I_C", "I_D", "I_G2", "vanishing_predicate",
    "is_nested_chain", "chain_diagram", "build_lambda", "diagrams_in_square",
]


@dataclass(frozen=True)
class YoungDiagram:
    """Row lengths ``rows[0] >= ... >= rows[-1] >= 1``, all at most ``len(rows)``.

    ``labels`` is only used in type D: one ``+``/``-`` per row of full length,
    in canonical order (all ``+`` first).
    """
    rows: tuple[int, ...]
    labels: Optional[str] = None

    def __post_init__(self):
        rows = tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows)
        if n == 0:
            raise ValueError("a Young diagram needs at least one row; use None for the empty diagram")
        if any(r < 1 or r > n for r in rows) or any(a < b for a, b in zip(rows, rows[1:])):
            raise ValueError(f"{rows} is not a diagram with {n} rows in the {n}x{n} square")
        if self.labels is not None:
            if len(self.labels) != rows.count(n) or set(self.labels) - {"+", "-"}:
                raise ValueError(f"labels {self.labels!r} must mark each of the {rows.count(n)} full rows")
            object.__setattr__(self, "labels", "".join(sorted(self.labels)))

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def full_rows(self) -> int:
        return self.rows.count(self.n)

    @property
    def m_plus(self) -> int:
        return (self.labels or "").count("+")

    @property
    def m_minus(self) -> int:
        return (self.labels or "").count("-")

    def to_json(self) -> dict:
        out = {"rows": list(self.rows)}
        if self.labels is not None:
            out["labels"] = self.labels
        return out

    @classmethod
    def from_json(cls, obj: dict) -> YoungDiagram:
        return cls(tuple(obj["rows"]), obj.get("labels"))

    def __str__(self):
        body = "(" + ",".join(map(str, self.rows)) + ")"
        return body + (f"[{self.labels}]" if self.labels else "")


@dataclass(frozen=True)
class Corner:
    position: int
    a: int
    b: int
    c: int


def binom(x: int, y: int) -> int:
    """Binomial coefficient, zero unless ``0 <= y <= x``."""
    if 0 <= y <= x:
        return math.comb(x, y)
    return 0


def staircase(n: int) -> YoungDiagram:
    return YoungDiagram(tuple(range(n, 0, -1)))


def corner_data(lam: YoungDiagram) -> tuple[Corner, ...]:
    if lam is None:
        raise ValueError("the empty diagram has no corners")
    n = lam.n
    rows = lam.rows + (0,)
    positions = [i for i in range(1, n + 1) if rows[i - 1] > rows[i]]
    out = []
    for r, i in enumerate(positions):
        prev = positions[r - 1] if r else 0
        below = rows[positions[r + 1] - 1] if r + 1 < len(positions) else 0
        out.append(Corner(i, i - prev - 1, rows[i - 1] - below - 1, rows[i - 1] + i - n - 1))
    return tuple(out)


def _y(corner: Corner) -> int:
    return binom(corner.a, corner.c) * binom(corner.b, corner.c)


def _sign(lam, corners):
    return -1 if (lam.n + len(corners)) % 2 else 1


def I_A(lam: Optional[YoungDiagram]) -> int:
    if lam is None:
        return 0
    corners = corner_data(lam)
    value = _sign(lam, corners)
    for corner in corners:
        value *= _y(corner)
    return value


def I_B(lam: Optional[YoungDiagram]) -> int:
    if lam is None:
        return 0
    return 2 ** (lam.n - lam.rows[0]) * I_A(lam)


def I_C(lam: Optional[YoungDiagram]) -> int:
    if lam is None:
        return 0
    # with no full row the exponent is n - lambda_1 - 1 >= 0
    return 2 ** (lam.n - lam.rows[0] + lam.full_rows - 1) * I_A(lam)


def I_D(lam: Optional[YoungDiagram]) -> int:
    if lam is None:
        return 0
    if lam.labels is None:
        raise ValueError("type D needs a signed diagram")
    n, m = lam.n, lam.full_rows
    corners = corner_data(lam)
    first = corners[0]
    a1, b1, c1 = first.a, first.b, first.c
    if m <= 1:
        y1 = 2 ** ((n - lam.rows[0] - 1) * (1 - m)) * binom(a1, c1) * binom(b1, c1)
    elif lam.m_plus * lam.m_minus:
        y1 = -binom(b1 - 1, c1 - 1)
    else:
        y1 = (2 ** a1 - a1 - 1) * binom(b1, c1) + binom(b1 - 1, c1)
    value = _sign(lam, corners) * y1
    for corner in corners[1:]:
        value *= _y(corner)
    return value


_G2_VALUES = {(2, 1): 1, (1, 1): -3, (2, 2): -1}


def I_G2(lam: Optional[YoungDiagram]) -> int:
    if lam is None:
        return 0
    try:
        return _G2_VALUES[lam.rows]
    except KeyError:
        raise ValueError(f"{lam} is not a G2 diagram") from None


def vanishing_predicate(lam: YoungDiagram) -> bool:
    """False when every corner-based formula is forced to vanish."""
    return all(0 <= c.c <= c.b for c in corner_data(lam))


def diagrams_in_square(n: int):
    """All diagrams with exactly n rows in the n x n square, reverse lexicographic."""
    def rec(k, cap):
        if k == 0:
            yield ()
            return
        for top in range(cap, 0, -1):
            for rest in rec(k - 1, top):
                yield (top,) + rest
    for rows in rec(n, n):
        yield YoungDiagram(rows)


# ---------------------------------------------------------------------------
# chains of labels

def is_nested_chain(system: RootSystemId, labels: Iterable[Label]) -> bool:
    """Whether the labels lie in one cone of the fan, tested combinatorially.

    Types A/B/C/G2: totally ordered by inclusion (repeats allowed).  Type D: a
    subchain of a basic chain, so at most two distinct full-size sets, which
    differ in the sign of one entry and contain every smaller member.
    """
    distinct = sorted(set(labels), key=len)
    if system.family == "D":
        n = system.rank
        full = [S for S in distinct if len(S) == n]
        small = [S for S in distinct if len(S) != n]
        if len(full) > 2:
            return False
        if len(full) == 2:
            diff = full[0] ^ full[1]
            if len(diff) != 2 or sum(diff) != 0:
                return False
        if not _totally_ordered(small):
            return False
        return all(small[-1] <= T for T in full) if small else True
    return _totally_ordered(distinct)


def _totally_ordered(sets_by_size) -> bool:
    return all(a < b for a, b in zip(sets_by_size, sets_by_size[1:]))


def chain_diagram(system: RootSystemId, labels) -> Optional[YoungDiagram]:
    """The diagram of cardinalities of an n-element chain of labels, else None."""
    labels = list(labels)
    n = system.rank
    if len(labels) != n or not is_nested_chain(system, labels):
        return None
    rows = tuple(sorted((len(S) for S in labels), reverse=True))
    signs = None
    if system.family == "D":
        signs = "".join("+" if sum(1 for k in S if k < 0) % 2 == 0 else "-"
                        for S in labels if len(S) == n)
    return YoungDiagram(rows, signs)


def build_lambda(u: WeylElement, v: WeylElement, w: WeylElement) -> Optional[YoungDiagram]:
    """The diagram of the multiset D(u) + D(v) + A(w), or None."""
    if not u.system == v.system == w.system:
        raise ValueError("u, v, w must belong to the same root system")
    if descent_count(u) + descent_count(v) != descent_count(w):
        return None
    labels = descent_labels(u) + descent_labels(v) + ascent_labels(w)
    return chain_diagram(u.system, labels)
