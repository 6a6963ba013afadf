"""
Independent check of the closed formulas: the Weyl-chamber fan is built from
the coweight vectors themselves, and degrees of divisor monomials are computed
by torus fixed-point localization,

    <tau_{x_1} ... tau_{x_n}> = sum over maximal cones s containing every x_k of
        prod_k <m_{s,x_k}, t> / prod_j <m_{s,j}, t>,

where ``m_{s,j}`` is the basis of M dual to the rays of ``s`` and ``t`` is a
generic point of N.  All arithmetic is exact; the result is evaluated at two
independent rational points which must agree on the same integer.
"""

from __future__ import annotations

import itertools
import json
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional

import sympy

from .intersect import TauMonomial, intersection_number, is_chain
from .weyl import (
    Label, RootSystemId, WeylElement, act_vector, coweight_label,
    enumerate_weyl, format_label, label_key, root_data,
)

__all__ = [
    "FanModel", "OracleConfig", "OracleError", "LocalizationOracle",
    "VerificationReport", "build_fan", "get_oracle", "oracle_integral",
    "chain_monomials", "sample_nonchain_monomials", "verify_family",
    "DEFAULT_SEED",
]

DEFAULT_SEED = 20190415


class OracleError(RuntimeError):
    """The localization computation contradicted itself."""


@dataclass(frozen=True)
class FanModel:
    system: RootSystemId
    # ray label -> integer coordinates in the basis of fundamental coweights
    rays: dict
    # ray label -> the coweight as a linear form on the ambient coordinates
    forms: dict
    # maximal cone per Weyl element: ordered ray labels (u w_1, ..., u w_n)
    cones: tuple
    # per cone, rows of the inverse generator matrix (dual basis in M)
    duals: tuple
    determinants: tuple
    ray_cones: dict = field(repr=False)

    @property
    def cone_elements(self) -> tuple[WeylElement, ...]:
        return enumerate_weyl(self.system)


def _pairing(x, y):
    return sum(a * b for a, b in zip(x, y))


@lru_cache(maxsize=None)
def build_fan(system: RootSystemId) -> FanModel:
    data = root_data(system)
    n = system.rank
    forms: dict = {}
    by_vector: dict = {}
    cones = []
    for u in enumerate_weyl(system):
        cone = []
        for i, w in enumerate(data.coweights, start=1):
            vec = act_vector(u, w)
            label = coweight_label(u, i)
            if forms.setdefault(label, vec) != vec:
                raise OracleError(f"{system}: label {format_label(label)} names two coweights")
            if by_vector.setdefault(vec, label) != label:
                raise OracleError(f"{system}: coweight {vec} has two labels")
            cone.append(label)
        cones.append(tuple(cone))

    rays = {}
    for label, vec in forms.items():
        coords = [_pairing(vec, a) for a in data.simple_roots]
        if any(Fraction(c).denominator != 1 for c in coords):
            raise OracleError(f"{system}: coweight {vec} is not in the coweight lattice")
        rays[label] = tuple(int(c) for c in coords)

    duals, dets = [], []
    for cone in cones:
        mat = sympy.Matrix([[rays[label][k] for label in cone] for k in range(n)])
        det = int(mat.det())
        if abs(det) != 1:
            raise OracleError(f"{system}: cone {cone} is not unimodular (det {det})")
        inv = mat.inv()
        duals.append(tuple(tuple(int(inv[j, k]) for k in range(n)) for j in range(n)))
        dets.append(det)

    ray_cones: dict = {label: set() for label in rays}
    for idx, cone in enumerate(cones):
        for label in cone:
            ray_cones[label].add(idx)
    ray_cones = {label: frozenset(s) for label, s in ray_cones.items()}
    return FanModel(system, rays, forms, tuple(cones), tuple(duals), tuple(dets), ray_cones)


@dataclass(frozen=True)
class OracleConfig:
    seed: int = DEFAULT_SEED
    points: int = 2
    resample_limit: int = 64
    bound: int = 10 ** 6


class LocalizationOracle:
    """Exact localization on a fixed fan at a few generic rational points."""

    def __init__(self, fan: FanModel, config: OracleConfig = OracleConfig()):
        self.fan = fan
        self.config = config
        rng = random.Random(config.seed)
        self.points = []
        self._weights = []
        self._euler = []
        for _ in range(config.points):
            for _attempt in range(config.resample_limit):
                t = tuple(Fraction(rng.randint(-config.bound, config.bound), rng.randint(1, 997))
                          for _ in range(fan.system.rank))
                weights = [tuple(_pairing(m, t) for m in dual) for dual in fan.duals]
                if all(all(weights_c) for weights_c in weights):
                    break
            else:
                raise OracleError("no generic evaluation point found within the resample limit")
            self.points.append(t)
            self._weights.append(weights)
            self._euler.append([math.prod(w) for w in weights])
        self._position = [{label: j for j, label in enumerate(cone)} for cone in fan.cones]
        self.sign = 1
        unit = self._raw(fan.cones[0])
        if unit not in (1, -1):
            raise OracleError(f"transversal monomial integrates to {unit}")
        self.sign = unit

    def cones_containing(self, labels) -> frozenset:
        labels = set(labels)
        if not labels:
            return frozenset(range(len(self.fan.cones)))
        sets = []
        for label in labels:
            try:
                sets.append(self.fan.ray_cones[label])
            except KeyError:
                raise ValueError(f"{format_label(label)!r} is not a ray of {self.fan.system}") from None
        return frozenset.intersection(*sets)

    def _raw(self, factors) -> int:
        cones = sorted(self.cones_containing(factors))
        values = []
        for weights, euler in zip(self._weights, self._euler):
            total = Fraction(0)
            for c in cones:
                pos = self._position[c]
                total += Fraction(math.prod(weights[c][pos[x]] for x in factors)) / euler[c]
            values.append(total)
        if any(v != values[0] for v in values):
            raise OracleError(f"evaluation points disagree: {values}")
        if values[0].denominator != 1:
            raise OracleError(f"non-integral degree {values[0]}")
        return int(values[0])

    def integral(self, m: TauMonomial) -> int:
        if m.system != self.fan.system:
            raise ValueError("monomial and fan belong to different root systems")
        if m.degree != m.system.rank:
            raise ValueError(f"localization needs a monomial of degree {m.system.rank}, got {m.degree}")
        return self.sign * self._raw(m.factors)


@lru_cache(maxsize=32)
def get_oracle(system: RootSystemId, seed: int = DEFAULT_SEED) -> LocalizationOracle:
    return LocalizationOracle(build_fan(system), OracleConfig(seed=seed))


def oracle_integral(m: TauMonomial, seed: int = DEFAULT_SEED) -> int:
    return get_oracle(m.system, seed).integral(m)


# ---------------------------------------------------------------------------
# verification sweeps

def chain_monomials(system: RootSystemId) -> list[TauMonomial]:
    """Every degree-n monomial supported on a single cone of the fan."""
    fan = build_fan(system)
    seen = set()
    for cone in fan.cones:
        for combo in itertools.combinations_with_replacement(cone, system.rank):
            seen.add(TauMonomial(system, combo))
    return sorted(seen, key=_monomial_key)


def _monomial_key(m: TauMonomial):
    return tuple(label_key(S) for S in m.factors)


_ENUMERATION_LIMIT = 50_000


def sample_nonchain_monomials(system: RootSystemId, size: int, seed: int) -> list[TauMonomial]:
    """Up to ``size`` distinct degree-n monomials that are not chains.

    Small systems are enumerated and subsampled; larger ones use rejection
    sampling over uniformly drawn factor multisets.
    """
    rays = sorted(build_fan(system).rays, key=label_key)
    n = system.rank
    rng = random.Random(seed)
    if math.comb(len(rays) + n - 1, n) <= _ENUMERATION_LIMIT:
        pool = [m for m in (TauMonomial(system, c)
                            for c in itertools.combinations_with_replacement(rays, n))
                if not is_chain(m)]
        if len(pool) <= size:
            return pool
        return sorted(rng.sample(pool, size), key=_monomial_key)
    found = set()
    for _ in range(200 * size):
        m = TauMonomial(system, tuple(rng.choice(rays) for _ in range(n)))
        if not is_chain(m):
            found.add(m)
            if len(found) == size:
                break
    return sorted(found, key=_monomial_key)


@dataclass
class VerificationReport:
    system: RootSystemId
    mode: str
    seed: int
    total: int = 0
    chain_count: int = 0
    nonchain_count: int = 0
    mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {
            "system": str(self.system),
            "mode": self.mode,
            "seed": self.seed,
            "total": self.total,
            "chain_count": self.chain_count,
            "nonchain_count": self.nonchain_count,
            "mismatches": self.mismatches,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def verify_family(system: RootSystemId, mode: str = "exhaustive", sample_size: int = 1000,
                  seed: int = DEFAULT_SEED, size_cap: Optional[int] = None) -> VerificationReport:
    """Compare the closed formulas with localization.

    ``exhaustive``: every chain monomial plus ``sample_size`` non-chain ones
    (all of them when fewer exist).  ``sampled``: ``sample_size`` of each.
    """
    from .basis_ring import check_size_cap

    if mode not in ("exhaustive", "sampled"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "exhaustive":
        check_size_cap(system, size_cap)
    oracle = get_oracle(system, seed)
    chains = chain_monomials(system)
    if mode == "sampled" and len(chains) > sample_size:
        chains = sorted(random.Random(seed).sample(chains, sample_size), key=_monomial_key)
    others = sample_nonchain_monomials(system, sample_size, seed)
    report = VerificationReport(system, mode, seed)
    for m in chains + others:
        formula = intersection_number(m).value
        expected = oracle.integral(m)
        if formula != expected:
            report.mismatches.append({"monomial": str(m), "formula": formula, "oracle": expected})
    report.chain_count, report.nonchain_count = len(chains), len(others)
    report.total = len(chains) + len(others)
    return report
