"""
Products of invariant divisor classes ``tau_S`` and their degrees.

A monomial of degree n integrates to a number read off from the Young diagram
of the cardinalities of its factors; monomials whose factors do not lie in a
common cone integrate to zero.

>>> A4 = RootSystemId("A", 4)
>>> intersection_number(parse_monomial(A4, "3;1,2,3,5;1,2,3,5;3")).value
2
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .diagram import I_A, I_B, I_C, I_D, I_G2, YoungDiagram, build_lambda, chain_diagram, is_nested_chain
from .weyl import (
    Label, RootSystemId, WeylElement, act, ascent_labels, descent_labels,
    format_label, is_valid_label, label_key, parse_label,
)

__all__ = [
    "TauMonomial", "Reason", "IntersectionResult", "parse_monomial",
    "is_chain", "diagram_value", "intersection_number", "class_X", "class_Y",
    "triple_number",
]


@dataclass(frozen=True)
class TauMonomial:
    """A product of classes ``tau_S``; factors are kept in canonical order."""
    system: RootSystemId
    factors: tuple[Label, ...] = ()

    def __post_init__(self):
        factors = tuple(sorted((Label(S) for S in self.factors), key=label_key))
        for S in factors:
            if not is_valid_label(self.system, S):
                raise ValueError(f"{format_label(S)!r} is not a coweight label of {self.system}")
        object.__setattr__(self, "factors", factors)

    @property
    def degree(self) -> int:
        return len(self.factors)

    def __mul__(self, other: TauMonomial) -> TauMonomial:
        if self.system != other.system:
            raise ValueError("monomials from different root systems")
        return TauMonomial(self.system, self.factors + other.factors)

    def act(self, u: WeylElement) -> TauMonomial:
        return TauMonomial(self.system, tuple(act(u, S) for S in self.factors))

    def __str__(self):
        return ";".join(format_label(S) for S in self.factors)


def parse_monomial(system: RootSystemId, text: str) -> TauMonomial:
    """Parse semicolon-separated subsets, e.g. ``"3;1,2,3,5"``; ``""`` is the unit."""
    text = text.strip()
    if not text:
        return TauMonomial(system)
    return TauMonomial(system, tuple(parse_label(system, tok.strip()) for tok in text.split(";")))


class Reason(enum.Enum):
    NOT_CHAIN = "not_chain"
    DEGREE_MISMATCH = "degree_mismatch"
    FORMULA = "formula"


@dataclass(frozen=True)
class IntersectionResult:
    value: int
    diagram: Optional[YoungDiagram]
    reason: Reason

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "diagram": self.diagram.to_json() if self.diagram else None,
            "reason": self.reason.value,
        }


def is_chain(m: TauMonomial) -> bool:
    return is_nested_chain(m.system, m.factors)


_DISPATCH = {"A": I_A, "B": I_B, "C": I_C, "D": I_D, "G2": I_G2}


def diagram_value(system: RootSystemId, lam: Optional[YoungDiagram]) -> int:
    """The closed-form degree attached to a diagram of the given system."""
    return _DISPATCH[system.family](lam)


def intersection_number(m: TauMonomial) -> IntersectionResult:
    n = m.system.rank
    if m.degree != n:
        return IntersectionResult(0, None, Reason.DEGREE_MISMATCH)
    if not is_chain(m):
        return IntersectionResult(0, None, Reason.NOT_CHAIN)
    lam = chain_diagram(m.system, m.factors)
    return IntersectionResult(diagram_value(m.system, lam), lam, Reason.FORMULA)


def class_X(u: WeylElement) -> TauMonomial:
    """``[X_u]``: product of ``tau`` over the descent labels of ``u``."""
    return TauMonomial(u.system, tuple(descent_labels(u)))


def class_Y(w: WeylElement) -> TauMonomial:
    """``[Y^w]``: product of ``tau`` over the ascent labels of ``w``."""
    return TauMonomial(w.system, tuple(ascent_labels(w)))


def triple_number(u: WeylElement, v: WeylElement, w: WeylElement) -> int:
    """``<[Y^w][X_u][X_v]>`` through the diagram of D(u) + D(v) + A(w)."""
    return diagram_value(u.system, build_lambda(u, v, w))

