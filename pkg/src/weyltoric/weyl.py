"""
Root systems of type A_n, B_n, C_n, D_n and G2, their Weyl groups realised as
(signed) permutations, descents/ascents, and the identification of coweights
with subsets of ``[n+1]`` or ``[+-n]``.

Elements are written in one-line notation.  A signed permutation ``u`` acts on
the ambient coordinates by ``t_i -> t_{u(i)}`` with ``t_{-i} = -t_i``; the same
rule applies to the dual coordinates ``e_i``.

>>> A4 = RootSystemId("A", 4)
>>> u = parse_element(A4, "31254")
>>> sorted(descents(u))
[1, 4]
>>> [format_label(S) for S in descent_labels(u)]
['3', '1,2,3,5']
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

__all__ = [
    "FAMILIES", "RootSystemId", "WeylElement", "RootData", "Label",
    "root_data", "enumerate_weyl", "identity", "compose", "inverse",
    "act_vector", "descents", "root_descents", "ascents", "descent_count",
    "coweight_label", "descent_labels", "ascent_labels", "act",
    "longest_element", "length", "all_labels", "is_valid_label",
    "parse_element", "format_element", "parse_label", "format_label",
    "label_key",
]

FAMILIES = ("A", "B", "C", "D", "G2")

# a subset of [n+1] or [+-n] naming one coweight
Label = frozenset


@dataclass(frozen=True)
class RootSystemId:
    family: str
    rank: int = 2

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown root system family {self.family!r}")
        if not isinstance(self.rank, int) or self.rank < 1:
            raise ValueError(f"rank must be a positive integer, got {self.rank!r}")
        if self.family == "G2" and self.rank != 2:
            raise ValueError("G2 has fixed rank 2")
        if self.family == "D" and self.rank < 2:
            raise ValueError("type D requires rank >= 2")

    @property
    def n(self) -> int:
        return self.rank

    @property
    def ambient(self) -> int:
        """Number of coordinates ``t_i`` the roots are written in."""
        if self.family == "A":
            return self.rank + 1
        if self.family == "G2":
            return 3
        return self.rank

    @property
    def signed(self) -> bool:
        return self.family != "A"

    def __str__(self):
        return "G2" if self.family == "G2" else f"{self.family}{self.rank}"


@dataclass(frozen=True)
class WeylElement:
    system: RootSystemId
    oneline: tuple[int, ...]

    def __post_init__(self):
        _check_oneline(self.system, self.oneline)

    def __call__(self, i: int) -> int:
        """Image of a signed index, ``u(-i) = -u(i)``."""
        return self.oneline[i - 1] if i > 0 else -self.oneline[-i - 1]

    def __mul__(self, other: WeylElement) -> WeylElement:
        return compose(self, other)

    def __lt__(self, other: WeylElement) -> bool:
        return self.oneline < other.oneline

    def __str__(self):
        return format_element(self)


def _check_oneline(system: RootSystemId, oneline: tuple[int, ...]) -> None:
    size = system.ambient
    if len(oneline) != size:
        raise ValueError(f"{system}: expected {size} entries, got {len(oneline)}")
    if sorted(abs(k) for k in oneline) != list(range(1, size + 1)):
        raise ValueError(f"{system}: {oneline} is not a (signed) permutation of 1..{size}")
    negatives = sum(1 for k in oneline if k < 0)
    if system.family == "A" and negatives:
        raise ValueError(f"{system}: entries must be positive")
    if system.family == "D" and negatives % 2:
        raise ValueError(f"{system}: an even number of negative entries is required")
    if system.family == "G2" and negatives not in (0, 3):
        raise ValueError(f"{system}: all entries must share one sign")


# ---------------------------------------------------------------------------
# root data

@dataclass(frozen=True)
class RootData:
    system: RootSystemId
    simple_roots: tuple[tuple[int, ...], ...]
    coweights: tuple[tuple[Fraction, ...], ...]
    roots: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]


def _unit(size, i, scale=1):
    v = [0] * size
    v[abs(i) - 1] = scale if i > 0 else -scale
    return v


def _add(*vs):
    return tuple(sum(xs) for xs in zip(*vs))


def _pair(x, y):
    return sum(a * b for a, b in zip(x, y))


@lru_cache(maxsize=None)
def root_data(system: RootSystemId) -> RootData:
    n, N, fam = system.rank, system.ambient, system.family
    t = lambda i, c=1: _unit(N, i, c)
    half = Fraction(1, 2)
    if fam == "A":
        roots = [_add(t(i), t(-j)) for i in range(1, N + 1) for j in range(1, N + 1) if i != j]
        simple = [_add(t(i), t(-(i + 1))) for i in range(1, n + 1)]
        coweights = [tuple(Fraction(int(k <= i)) - Fraction(i, N) for k in range(1, N + 1))
                     for i in range(1, n + 1)]
    elif fam in ("B", "C", "D"):
        roots = [_add(t(a), t(b)) for i in range(1, n + 1) for j in range(i + 1, n + 1)
                 for a in (i, -i) for b in (j, -j)]
        if fam != "D":
            scale = 1 if fam == "B" else 2
            roots += [tuple(t(a, scale)) for i in range(1, n + 1) for a in (i, -i)]
        simple = [_add(t(i), t(-(i + 1))) for i in range(1, n)]
        flag = [tuple(Fraction(int(k <= i)) for k in range(1, n + 1)) for i in range(1, n + 1)]
        if fam == "B":
            simple.append(tuple(t(n)))
            coweights = flag
        elif fam == "C":
            simple.append(tuple(t(n, 2)))
            coweights = flag[:-1] + [tuple(half * x for x in flag[-1])]
        else:
            # alpha_{n-1} = t_{n-1} + t_n, alpha_n = t_{n-1} - t_n
            simple = simple[:-1] + [_add(t(n - 1), t(n)), _add(t(n - 1), t(-n))]
            plus = tuple(half for _ in range(n))
            minus = plus[:-1] + (-half,)
            coweights = flag[:n - 2] + [plus, minus]
    else:
        short = [_add(t(i), t(-j)) for i in (1, 2, 3) for j in (1, 2, 3) if i != j]
        long_ = []
        for i in (1, 2, 3):
            j, k = (x for x in (1, 2, 3) if x != i)
            long_.append(_add(t(i, 2), t(-j), t(-k)))
            long_.append(_add(t(-i, 2), t(j), t(k)))
        roots = short + long_
        simple = [_add(t(1), t(-2)), _add(t(-1, 2), t(2), t(3))]
        coweights = [(Fraction(0), Fraction(-1), Fraction(1)),
                     (Fraction(-1, 3), Fraction(-1, 3), Fraction(2, 3))]
    roots = tuple(sorted(set(tuple(r) for r in roots)))
    simple = tuple(tuple(a) for a in simple)
    coweights = tuple(tuple(Fraction(x) for x in w) for w in coweights)
    positive = tuple(r for r in roots if _height(coweights, r) > 0)
    return RootData(system, simple, coweights, roots, positive)


def _height(coweights, root) -> Fraction:
    return sum(_pair(w, root) for w in coweights)


# ---------------------------------------------------------------------------
# group structure

def identity(system: RootSystemId) -> WeylElement:
    return WeylElement(system, tuple(range(1, system.ambient + 1)))


def compose(u: WeylElement, v: WeylElement) -> WeylElement:
    if u.system != v.system:
        raise ValueError(f"cannot compose elements of {u.system} and {v.system}")
    return WeylElement(u.system, tuple(u(k) for k in v.oneline))


def inverse(u: WeylElement) -> WeylElement:
    inv = [0] * len(u.oneline)
    for i, k in enumerate(u.oneline, start=1):
        inv[abs(k) - 1] = i if k > 0 else -i
    return WeylElement(u.system, tuple(inv))


def act_vector(u: WeylElement, vec):
    """Apply ``u`` to a coordinate vector (of roots or of coweights)."""
    out = [0] * len(vec)
    for i, x in enumerate(vec, start=1):
        k = u(i)
        out[abs(k) - 1] = x if k > 0 else -x
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_weyl(system: RootSystemId) -> tuple[WeylElement, ...]:
    """All elements of W, sorted lexicographically by one-line notation."""
    size = system.ambient
    if system.family == "A":
        signs = [(1,) * size]
    elif system.family == "G2":
        signs = [(1, 1, 1), (-1, -1, -1)]
    else:
        signs = list(itertools.product((1, -1), repeat=size))
        if system.family == "D":
            signs = [s for s in signs if s.count(-1) % 2 == 0]
    out = [WeylElement(system, tuple(s * k for s, k in zip(sign, perm)))
           for perm in itertools.permutations(range(1, size + 1)) for sign in signs]
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# descents

def _same_sign(a, b):
    return (a > 0) == (b > 0)


def _descent_pair(a, b):
    # u(i) > u(i+1) with the same sign, or u(i) < u(i+1) with different signs
    return a > b if _same_sign(a, b) else a < b


def descents(u: WeylElement) -> frozenset[int]:
    """Positions ``i`` in ``1..n`` with ``u(alpha_i)`` a negative root."""
    fam, n, w = u.system.family, u.system.rank, u.oneline
    if fam == "A":
        return frozenset(i for i in range(1, n + 1) if w[i - 1] > w[i])
    if fam in ("B", "C"):
        out = {i for i in range(1, n) if _descent_pair(w[i - 1], w[i])}
        if w[n - 1] < 0:
            out.add(n)
        return frozenset(out)
    if fam == "D":
        out = {i for i in range(1, n - 1) if _descent_pair(w[i - 1], w[i])}
        a, b = w[n - 2], w[n - 1]
        if a < 0 and b < 0:
            out.add(n - 1)
        elif not _same_sign(a, b):
            neg, pos = (a, b) if a < 0 else (b, a)
            if -neg < pos:
                out.add(n - 1)
        if _descent_pair(a, b):
            out.add(n)
        return frozenset(out)
    return root_descents(u)


def root_descents(u: WeylElement) -> frozenset[int]:
    """Descents computed by acting on the simple roots."""
    data = root_data(u.system)
    return frozenset(i for i, a in enumerate(data.simple_roots, start=1)
                     if _height(data.coweights, act_vector(u, a)) < 0)


def ascents(u: WeylElement) -> frozenset[int]:
    return frozenset(range(1, u.system.rank + 1)) - descents(u)


def descent_count(u: WeylElement) -> int:
    return len(descents(u))


def length(u: WeylElement) -> int:
    """Number of positive roots sent to negative roots."""
    data = root_data(u.system)
    return sum(1 for r in data.positive_roots
               if _height(data.coweights, act_vector(u, r)) < 0)


@lru_cache(maxsize=None)
def longest_element(system: RootSystemId) -> WeylElement:
    found = [u for u in enumerate_weyl(system) if len(descents(u)) == system.rank]
    if len(found) != 1:
        raise AssertionError(f"{system}: expected a unique all-descent element, found {len(found)}")
    return found[0]


# ---------------------------------------------------------------------------
# coweights as subsets

def coweight_label(u: WeylElement, i: int) -> Label:
    """The subset naming the coweight ``u omega_i``."""
    fam, n = u.system.family, u.system.rank
    if not 1 <= i <= n:
        raise ValueError(f"coweight index {i} out of range 1..{n}")
    if fam == "G2":
        return Label({u(3), -u(2)}) if i == 1 else Label({u(3)})
    if fam == "D" and i >= n - 1:
        last = u(n) if i == n - 1 else -u(n)
        return Label([u(k) for k in range(1, n)] + [last])
    return Label(u(k) for k in range(1, i + 1))


def descent_labels(u: WeylElement) -> list[Label]:
    return [coweight_label(u, i) for i in sorted(descents(u))]


def ascent_labels(u: WeylElement) -> list[Label]:
    return [coweight_label(u, i) for i in sorted(ascents(u))]


def act(u: WeylElement, S: Iterable[int]) -> Label:
    return Label(u(k) for k in S)


def is_valid_label(system: RootSystemId, S) -> bool:
    S = frozenset(S)
    fam, n = system.family, system.rank
    if not S or 0 in S:
        return False
    if fam == "A":
        return S < frozenset(range(1, n + 2))
    if any(-k in S or abs(k) > system.ambient for k in S):
        return False
    if fam == "G2":
        return S in _g2_labels()
    if fam == "D" and len(S) == n - 1:
        return False
    return True


@lru_cache(maxsize=None)
def _g2_labels() -> frozenset:
    out = set()
    for a in (1, 2, 3):
        for s in (1, -1):
            out.add(Label({s * a}))
            for b in (1, 2, 3):
                if b != a:
                    out.add(Label({s * a, -s * b}))
    return frozenset(out)


def label_key(S) -> tuple:
    """Canonical sort key: by size, then by entries in display order."""
    return (len(S), tuple((abs(k), k < 0) for k in _display_order(S)))


def _display_order(S):
    return sorted(S, key=lambda k: (abs(k), k < 0))


@lru_cache(maxsize=None)
def all_labels(system: RootSystemId) -> tuple[Label, ...]:
    """Every label of the system, i.e. the rays of the fan, in canonical order."""
    labels = {coweight_label(u, i) for u in enumerate_weyl(system)
              for i in range(1, system.rank + 1)}
    return tuple(sorted(labels, key=label_key))


# ---------------------------------------------------------------------------
# text formats

def parse_element(system: RootSystemId, text: str) -> WeylElement:
    """Parse ``"2,-3,1,4"`` or, for type A with at most 9 letters, ``"31254"``."""
    text = text.strip()
    try:
        if "," in text or system.ambient == 1:
            entries = tuple(int(tok) for tok in text.split(","))
        elif system.family == "A" and text.isdigit() and system.ambient <= 9:
            entries = tuple(int(ch) for ch in text)
        else:
            raise ValueError
    except ValueError:
        raise ValueError(f"cannot parse {text!r} as an element of {system}") from None
    try:
        return WeylElement(system, entries)
    except ValueError as exc:
        raise ValueError(f"invalid element {text!r}: {exc}") from None


def format_element(u: WeylElement) -> str:
    if u.system.family == "A" and u.system.ambient <= 9:
        return "".join(str(k) for k in u.oneline)
    return ",".join(str(k) for k in u.oneline)


def parse_label(system: RootSystemId, text: str) -> Label:
    try:
        S = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"cannot parse subset {text!r}") from None
    if len(set(S)) != len(S) or not is_valid_label(system, S):
        raise ValueError(f"{text!r} is not a coweight label of {system}")
    return Label(S)


def format_label(S) -> str:
    return ",".join(str(k) for k in _display_order(S))
