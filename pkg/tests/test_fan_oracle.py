import random
from fractions import Fraction
from math import comb

import pytest

from weyltoric.fan_oracle import (
    OracleConfig, LocalizationOracle, build_fan, chain_monomials, get_oracle,
    oracle_integral, sample_nonchain_monomials, verify_family,
)
from weyltoric.intersect import TauMonomial, is_chain, parse_monomial
from weyltoric.weyl import (
    RootSystemId, act_vector, coweight_label, enumerate_weyl, root_data,
)

from systems import SCOPE_SYSTEMS

G2 = RootSystemId("G2")


def expected_rays(system):
    n = system.rank
    if system.family == "A":
        return 2 ** (n + 1) - 2
    if system.family in "BC":
        return sum(comb(n, k) * 2 ** k for k in range(1, n + 1))
    if system.family == "D":
        return sum(comb(n, k) * 2 ** k for k in range(1, n - 1)) + 2 ** n
    return 12


@pytest.mark.parametrize("system", SCOPE_SYSTEMS, ids=str)
def test_fan_shape(system):
    fan = build_fan(system)
    assert len(fan.rays) == expected_rays(system)
    assert len(fan.cones) == len(enumerate_weyl(system))
    assert all(d in (1, -1) for d in fan.determinants)
    assert all(isinstance(c, int) for ray in fan.rays.values() for c in ray)


def test_small_fans():
    assert (len(build_fan(RootSystemId("A", 2)).rays), len(build_fan(RootSystemId("A", 2)).cones)) == (6, 6)
    assert (len(build_fan(G2).rays), len(build_fan(G2).cones)) == (12, 12)


@pytest.mark.parametrize("system", SCOPE_SYSTEMS, ids=str)
def test_dual_basis_is_the_moved_simple_roots(system):
    # the dual basis of the cone of u is u(alpha_1), ..., u(alpha_n) in root coordinates
    fan = build_fan(system)
    data = root_data(system)
    for u, cone, dual in zip(enumerate_weyl(system), fan.cones, fan.duals):
        for j, row in enumerate(dual):
            moved = act_vector(u, data.simple_roots[j])
            for label in fan.rays:
                lhs = sum(a * b for a, b in zip(row, fan.rays[label]))
                assert lhs == sum(a * b for a, b in zip(fan.forms[label], moved))


def test_g2_values():
    assert oracle_integral(parse_monomial(G2, "3;-2,3")) == 1
    assert oracle_integral(parse_monomial(G2, "-2,3;-2,3")) == -1
    assert oracle_integral(parse_monomial(G2, "3;3")) == -3


def test_a2_self_intersection():
    A2 = RootSystemId("A", 2)
    for S in build_fan(A2).rays:
        assert oracle_integral(TauMonomial(A2, (S, S))) == -1


@pytest.mark.parametrize("system", SCOPE_SYSTEMS, ids=str)
def test_transversal_is_one(system):
    oracle = get_oracle(system)
    for u in enumerate_weyl(system):
        m = TauMonomial(system, tuple(coweight_label(u, i) for i in range(1, system.rank + 1)))
        assert oracle.integral(m) == 1


def test_seed_independence():
    system = RootSystemId("B", 3)
    a, b = get_oracle(system, 1), get_oracle(system, 2)
    assert a.points != b.points
    for m in chain_monomials(system)[::17]:
        assert a.integral(m) == b.integral(m)


def test_oracle_config_points():
    oracle = LocalizationOracle(build_fan(RootSystemId("A", 3)), OracleConfig(seed=5, points=3))
    assert len(oracle.points) == 3
    assert all(isinstance(x, Fraction) for t in oracle.points for x in t)


def test_degree_check():
    with pytest.raises(ValueError):
        oracle_integral(parse_monomial(G2, "3"))


@pytest.mark.parametrize("system", SCOPE_SYSTEMS, ids=str)
def test_oracle_weyl_invariance(system):
    rng = random.Random(3)
    W = enumerate_weyl(system)
    rays = sorted(build_fan(system).rays, key=sorted)
    for _ in range(30):
        m = TauMonomial(system, tuple(rng.choice(rays) for _ in range(system.rank)))
        assert oracle_integral(m.act(rng.choice(W))) == oracle_integral(m)


@pytest.mark.parametrize("system", SCOPE_SYSTEMS, ids=str)
def test_linear_relations(system):
    rng = random.Random(5)
    fan = build_fan(system)
    roots = root_data(system).roots
    chains = chain_monomials(system)
    for _ in range(20):
        mu = TauMonomial(system, rng.choice(chains).factors[1:])
        alpha = rng.choice(roots)
        total = sum(sum(a * b for a, b in zip(form, alpha)) * oracle_integral(mu * TauMonomial(system, (x,)))
                    for x, form in fan.forms.items())
        assert total == 0


def test_nonchain_sampling():
    A3 = RootSystemId("A", 3)
    sample = sample_nonchain_monomials(A3, 50, seed=1)
    assert len(sample) == len(set(sample)) == 50
    assert not any(is_chain(m) for m in sample)
    assert sample == sample_nonchain_monomials(A3, 50, seed=1)
    assert all(oracle_integral(m) == 0 for m in sample)
    # G2 has fewer than 1000 non-chain multisets: all of them are returned
    assert len(sample_nonchain_monomials(G2, 1000, seed=1)) == 78 - len(chain_monomials(G2))


def test_verify_reports():
    report = verify_family(G2)
    assert report.ok and report.total == 78
    assert set(report.to_json()) >= {"system", "mode", "seed", "total", "mismatches"}
    sampled = verify_family(RootSystemId("A", 3), "sampled", sample_size=20, seed=9)
    assert sampled.ok and sampled.chain_count == 20 and sampled.nonchain_count == 20
    with pytest.raises(ValueError):
        verify_family(G2, mode="partial")
