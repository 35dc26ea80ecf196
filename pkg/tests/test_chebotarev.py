import math
from fractions import Fraction

import numpy as np
import pytest

from multone.catalog import build_example
from multone.characters import ClassFunction, character_table, inner_product
from multone.chebotarev import (
    COUNT_CAP,
    DENSITY_LABEL,
    PlaceStream,
    StreamError,
    baseline_sum,
    dirichlet_sum,
    empirical_lower_density,
    exact_density,
    first_primes,
    hecke_stream,
    pole_order_estimate,
)
from multone.groups import group_from_generators


def test_first_primes():
    assert first_primes(10).tolist() == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert first_primes(0).size == 0
    assert first_primes(10**5)[-1] == 1299709


def test_empty_stream():
    e = build_example("S3")
    hs = hecke_stream(e.group, e.rep("pi"), e.rep("pi"), 1, 0)
    assert len(hs) == 0 and list(hs) == []
    assert dirichlet_sum(hs, (1, 1, 0, 0), 2.0) == 0


def test_trivial_group_samples_are_degree():
    G = group_from_generators([])
    chi = character_table(G)[0]
    hs = hecke_stream(G, chi, chi, 3, 500)
    assert all(s.a == 1 for s in hs)
    zeta_part = math.fsum(p ** -1.1 for p in first_primes(500).tolist())
    assert dirichlet_sum(hs, (1, 1, 0, 0), 1.1).real == pytest.approx(zeta_part, rel=1e-14)


def test_character_free_sum_is_prime_zeta():
    e = build_example("binary-tetrahedral")
    hs = hecke_stream(e.group, e.rep("pi"), e.rep("pi-twist"), 5, 2000)
    expected = math.fsum(p ** -2.0 for p in first_primes(2000).tolist())
    assert dirichlet_sum(hs, (0, 0, 0, 0), 2.0) == pytest.approx(expected, rel=1e-14)


def test_s3_class_frequencies():
    e = build_example("S3")
    st = PlaceStream(e.group, 42, 10_000)
    assert st.frequency_check(3.0)
    sizes = [c.size for c in e.group.classes]
    assert sizes == [1, 2, 3]


def test_determinism_across_threads():
    e = build_example("G216")
    a = PlaceStream(e.group, 9, 300_000, threads=1)
    b = PlaceStream(e.group, 9, 300_000, threads=4)
    assert np.array_equal(a.classes, b.classes)
    assert a.class_weights(1.05) == b.class_weights(1.05)


def test_prefix_consistency():
    e = build_example("S3")
    a = PlaceStream(e.group, 4, 70_000)
    b = PlaceStream(e.group, 4, 200_000)
    assert np.array_equal(a.classes, b.classes[:70_000])


def test_tempered():
    e = build_example("A6-3dim")
    rho = e.rep("rho")
    hs = hecke_stream(e.group, rho, rho, 2, 3000)
    for s in hs.samples(3000):
        assert abs(complex(s.a)) <= 3 + 1e-12


def test_exact_density_examples(tetra):
    c2 = build_example("C2")
    assert exact_density(c2.rep("trivial"), c2.rep("sign")) == Fraction(1, 2)
    pi = tetra.rep("pi")
    assert exact_density(pi, pi) == 0
    # pi and pi(x)mu differ where mu != 1 and pi != 0
    G = tetra.group
    mu = tetra.rep("mu")
    brute = sum(
        c.size for c, m, v in zip(G.classes, mu.values, pi.values) if m != 1 and not v.is_zero()
    )
    assert exact_density(pi, tetra.rep("pi-twist")) == Fraction(brute, G.order) == Fraction(2, 3)


def test_errors():
    e = build_example("S3")
    pi = e.rep("pi")
    with pytest.raises(StreamError):
        hecke_stream(e.group, pi, pi, 1, COUNT_CAP + 1)
    hs = hecke_stream(e.group, pi, pi, 1, 100)
    with pytest.raises(StreamError):
        dirichlet_sum(hs, (1, 1, 0, 0), 1.0)
    with pytest.raises(StreamError):
        dirichlet_sum(hs, (2, 2, 1, 0), 2.0)
    with pytest.raises(StreamError, match="grid too small"):
        pole_order_estimate(hs, (1, 1, 0, 0), [1.1, 1.05])
    with pytest.raises(StreamError):
        pole_order_estimate(hs, (1, 1, 0, 0), [1.05, 1.1, 1.2])
    other = build_example("C2")
    with pytest.raises(StreamError):
        hecke_stream(e.group, pi, other.rep("sign"), 1, 10)


def test_identical_characters_give_zero_density():
    e = build_example("S3")
    pi = e.rep("pi")
    rep = empirical_lower_density(hecke_stream(e.group, pi, pi, 1, 5000))
    assert rep.exact_density == 0
    assert all(v == 0 for v in rep.empirical.values())
    assert rep.label == DENSITY_LABEL


@pytest.mark.parametrize("monomial", [(1, 1, 0, 0), (2, 2, 0, 0), (1, 0, 0, 1)])
def test_pole_orders_track_inner_products(g216, monomial):
    rho, tw = g216.rep("rho"), g216.rep("rho-twist")
    hs = hecke_stream(g216.group, rho, tw, 11, 400_000)
    w, x, y, z = monomial
    exact = inner_product(rho**w * rho.conj() ** x * tw**y * tw.conj() ** z, g216.table[0])
    target = complex(exact).real
    est = pole_order_estimate(hs, monomial)
    assert abs(est.estimate - target) <= 0.15 * max(target, 1)
    assert est.ell_ratios == [z.real / -math.log(s - 1) for z, s in zip(est.partial_sums, est.s_grid)]


def test_c2_density_extrapolation():
    c2 = build_example("C2")
    hs = hecke_stream(c2.group, c2.rep("trivial"), c2.rep("sign"), 42, 300_000)
    rep = empirical_lower_density(hs)
    assert abs(rep.extrapolated - 0.5) < 0.075
    assert all(r >= 0 for r in rep.empirical.values())


def test_density_csv():
    c2 = build_example("C2")
    rep = empirical_lower_density(hecke_stream(c2.group, c2.rep("trivial"), c2.rep("sign"), 1, 1000))
    lines = rep.to_csv().splitlines()
    assert lines[0] == "s,ratio,partial_sum,count"
    assert len(lines) == 1 + len(rep.s_grid)


def test_baseline_matches_unweighted_sum():
    e = build_example("S3")
    st = PlaceStream(e.group, 3, 5000)
    assert baseline_sum(st, 1.5) == math.fsum(p ** -1.5 for p in first_primes(5000).tolist())
