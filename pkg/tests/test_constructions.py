import os
import random

import pytest

from satlab.canon import canonical_form
from satlab.constructions import (
    AttachmentSpec,
    beta_gamma,
    build_family_member,
    csat_family,
    ehm_graph,
    enumerate_family_members,
    family_codes,
    k33_extremal,
    k33_extremal_edges,
    parse_base,
    k24_extremal_family,
    theorem4_construction,
)
from satlab.errors import ConstraintViolation, HypothesisError
from satlab.formulas import csat_k2t, k2t_threshold, sat_complete, sat_k24, sat_k2t, sat_k33
from satlab.graph import complete, empty, join, star
from satlab.saturation import check_saturation, is_saturated, saturation_search
from satlab.virus import VirusPattern


def test_parse_base():
    assert parse_base("K3") == complete(3)
    assert parse_base("K2vK1x3") == join(complete(2), empty(3))
    with pytest.raises(ValueError):
        parse_base("C5")


def test_ehm_examples():
    assert ehm_graph(6, 4).num_edges == 9
    assert ehm_graph(7, 3) == star(6)
    assert check_saturation(ehm_graph(6, 4), VirusPattern(0, 4)).is_saturated
    with pytest.raises(HypothesisError):
        ehm_graph(5, 6)
    with pytest.raises(HypothesisError):
        ehm_graph(5, 2)


def test_ehm_sweep_is_saturated_with_formula_edges():
    for n in range(3, 10):
        for alpha in range(3, n + 1):
            g = ehm_graph(n, alpha)
            assert g.num_edges == sat_complete(n, alpha).value
            assert check_saturation(g, VirusPattern(0, alpha)).is_saturated


def test_member_examples():
    g = build_family_member(AttachmentSpec(complete(2), 4, (2, 0), (0, 0)))
    assert (g.n, g.num_edges) == (8, 13)
    with pytest.raises(ConstraintViolation) as info:
        build_family_member(AttachmentSpec(complete(2), 4, (1, 0), (0, 0)))
    assert info.value.constraint == 1
    g = build_family_member(AttachmentSpec(complete(3), 4, (1, 0, 0), (0, 0, 0)))
    assert (g.n, g.num_edges) == (6, 9)
    assert check_saturation(g, VirusPattern(2, 4)).is_saturated


def test_constraints_two_and_three():
    base = parse_base("K3vK1x2")  # K_{t-2} ∨ 2K_1 for t = 5
    with pytest.raises(ConstraintViolation) as info:
        AttachmentSpec(base, 5, (2, 0, 0, 0, 0), (0,) * 5).validate()
    assert info.value.constraint == 2
    AttachmentSpec(base, 5, (1, 1, 0, 0, 0), (0,) * 5).validate()
    base = parse_base("K2vK1x3")
    with pytest.raises(ConstraintViolation) as info:
        AttachmentSpec(base, 4, (0, 0, 1, 0, 0), (0,) * 5).validate()
    assert info.value.constraint == 3
    AttachmentSpec(base, 4, (1, 0, 0, 0, 0), (0,) * 5).validate()  # vertex 0 has degree 4
    # identification is up to isomorphism, not by labels
    relabelled = base.relabel([4, 3, 2, 1, 0])
    with pytest.raises(ConstraintViolation):
        AttachmentSpec(relabelled, 4, (1, 0, 0, 0, 0), (0,) * 5).validate()


def test_spec_shape_errors():
    with pytest.raises(ValueError):
        AttachmentSpec(complete(2), 4, (1,), (0, 0)).validate()
    with pytest.raises(ValueError):
        AttachmentSpec(complete(2), 4, (-1, 0), (0, 0)).validate()
    with pytest.raises(ValueError):
        AttachmentSpec(empty(2), 4, (0, 0), (0, 0)).validate()


def test_bookkeeping_on_random_specs():
    rnd = random.Random(2024)
    bases = ["K1", "K2", "K3", "K4", "K2vK1x3", "K3vK1x2", "K2vK1x2"]
    built = 0
    while built < 1000:
        base = parse_base(rnd.choice(bases))
        t = rnd.randint(3, 6)
        p = tuple(rnd.randint(0, 2) for _ in range(base.n))
        q = tuple(rnd.randint(0, 1) for _ in range(base.n))
        spec = AttachmentSpec(base, t, p, q)
        if spec.order > 64:
            continue
        try:
            g = build_family_member(spec)
        except ConstraintViolation:
            continue
        built += 1
        assert g.n == spec.order
        assert g.num_edges == spec.edge_count
        assert g.induced_subgraph(range(base.n)) == base


def test_attached_k_t_uses_lowest_vertices():
    g = build_family_member(AttachmentSpec(complete(2), 5, (0, 0), (1, 0)))
    assert [g.has_edge(0, v) for v in range(2, 7)] == [True, True, True, False, False]


def test_enumerate_examples():
    assert len(enumerate_family_members("K2", 4, 8, simple_only=True)) == 1
    (g,) = enumerate_family_members("K1", 5, 9, simple_only=True)
    assert g.num_edges == 20
    assert enumerate_family_members("K3", 4, 5) == []


def test_k24_extremal_family_members_are_saturated():
    for n in range(6, 13):
        fam = k24_extremal_family(n)
        assert fam
        for g in fam.values():
            assert g.num_edges == sat_k24(n).value
            assert check_saturation(g, VirusPattern(2, 4)).is_saturated


@pytest.mark.parametrize("n", [6, 7, 8, 9])
def test_k2_members_are_extremal_and_family_is_exact(n):
    rep = saturation_search(n, VirusPattern(2, 4))
    sub = family_codes(enumerate_family_members("K2", 4, n, pad=True))
    assert set(sub) <= set(rep.extremal_codes)
    assert sorted(k24_extremal_family(n)) == rep.extremal_codes


@pytest.mark.parametrize("t", [5, 6])
def test_csat_family_members_are_connected_saturated(t):
    for n in range(t + 2, 3 * t + 1):
        fam = csat_family(n, t)
        assert fam, n
        for g in fam:
            assert g.is_connected()
            assert g.num_edges == csat_k2t(n, t).value
            assert is_saturated(g, VirusPattern(2, t))


def test_beta_gamma_examples():
    bg = beta_gamma(19, 5)
    assert (bg.beta, bg.gamma) == (2, 3)
    assert 19 - bg.beta * 6 == bg.gamma + bg.k * 4 == 7
    assert (beta_gamma(26, 6).beta, beta_gamma(26, 6).gamma) == (1, 4)
    with pytest.raises(HypothesisError):
        beta_gamma(18, 5)


def test_beta_gamma_tables_agree_with_formula():
    for t in range(5, 14):
        lo = k2t_threshold(t)
        for n in range(lo, lo + 3 * (t - 1)):
            bg = beta_gamma(n, t)
            assert bg.beta >= 0 and bg.gamma >= 1 and bg.k >= 0
            assert n == bg.beta * (t + 1) + bg.gamma + bg.k * (t - 1)
            assert not (bg.gamma == 2 and bg.k == 1)
            spec = AttachmentSpec(complete(bg.gamma), t, (bg.k,) + (0,) * (bg.gamma - 1), (0,) * bg.gamma)
            assert spec.edge_count + bg.beta * t * (t + 1) // 2 == sat_k2t(n, t).value


def test_theorem4_examples():
    g = theorem4_construction(19, 5)
    assert (g.n, g.num_edges) == (19, 43)
    assert check_saturation(g, VirusPattern(2, 5)).is_saturated
    g = theorem4_construction(26, 6)
    assert (g.n, g.num_edges) == (26, 72)
    with pytest.raises(HypothesisError):
        theorem4_construction(18, 5)


def test_k33_examples_and_sweep():
    assert k33_extremal(7, "odd").num_edges == 9
    assert k33_extremal(8, "even").num_edges == 12
    g = k33_extremal(8, "pendant")
    assert g.num_edges == 13 and min(g.degrees()) == 1
    for n in range(7, 13):
        variants = ["odd" if n % 2 else "even"] + (["pendant"] if n % 3 == 2 else [])
        for v in variants:
            g = k33_extremal(n, v)
            assert g.num_edges == k33_extremal_edges(n, v)
            assert check_saturation(g, VirusPattern(3, 3)).is_saturated
            if v != "pendant":
                assert g.num_edges == sat_k33(n).value
    with pytest.raises(HypothesisError):
        k33_extremal(8, "odd")
    with pytest.raises(HypothesisError):
        k33_extremal(9, "pendant")
    with pytest.raises(ValueError):
        k33_extremal(9, "weird")


@pytest.mark.slow
@pytest.mark.skipif(not os.environ.get("SATLAB_SLOW_TESTS"), reason="enumerates 12 million classes; set SATLAB_SLOW_TESTS=1")
def test_k24_family_is_exact_at_order_ten():
    from satlab import config

    config.override(max_n=10)
    try:
        rep = saturation_search(10, VirusPattern(2, 4))
    finally:
        config.clear_overrides()
    assert rep.sat_value == 17
    assert sorted(k24_extremal_family(10)) == rep.extremal_codes
