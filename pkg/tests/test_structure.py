import pytest

from satlab.constructions import AttachmentSpec, build_family_member, k33_extremal
from satlab.errors import PreconditionError
from satlab.graph import Graph, complete, copies, join, union
from satlab.saturation import find_saturated_graphs
from satlab.structure import (
    K2T_CONNECTED,
    K2T_DISCONNECTED,
    K33_CONNECTED,
    NONE,
    TYPE_I,
    TYPE_II,
    classify_kt_copies,
    degree2_types,
    derive_core,
    find_p4,
    role_avoiding_vertex,
    structural_audit,
)
from satlab.virus import VirusPattern

from oracles import embedding_degree_sets


def _p20():
    return build_family_member(AttachmentSpec(complete(2), 4, (2, 0), (0, 0)))


def _q1():
    return build_family_member(AttachmentSpec(complete(2), 4, (0, 0), (1, 0)))


def test_type_one_copies():
    recs = classify_kt_copies(_p20(), 4)
    assert len(recs) == 2
    assert all(r.kind == TYPE_I and r.lucky_vertex == 0 for r in recs)


def test_type_two_copy():
    g = _q1()
    (rec,) = classify_kt_copies(g, 4)
    assert rec.kind == TYPE_II and rec.apex == 0
    assert sorted(g.degree(v) for v in rec.vertices) == [3, 3, 4, 4]


def test_no_cliques_and_none_kind():
    assert classify_kt_copies(copies(3, complete(2)), 4) == []
    (rec,) = classify_kt_copies(complete(4), 4)  # an isolated K_4 has no cut vertex
    assert rec.kind == NONE


def test_core_examples():
    g = _p20()
    res = derive_core(g, 4)
    assert res.core == complete(2) and res.removed == 6 and res.unlucky_count == 2
    assert g.num_edges == res.core.num_edges + 2 * res.removed
    g = _q1()
    res = derive_core(g, 4)
    assert res.core == complete(2) and res.removed == 4 and res.type2_count == 1
    assert g.num_edges == 9 == 1 + 2 * 4
    res = derive_core(copies(2, complete(3)), 4)
    assert res.removed == 0 and res.core == copies(2, complete(3))


def test_core_edge_gap_for_larger_cliques():
    # one type-II K_5 costs t/2 - 2 extra edges over the t/2 per removed vertex bound
    g = build_family_member(AttachmentSpec(complete(3), 5, (0, 0, 0), (1, 0, 0)))
    res = derive_core(g, 5)
    assert res.type2_count == 1 and res.edge_gap(g, 5) == 1


def test_role_avoiding_vertex_examples():
    g = join(complete(1), copies(3, complete(2)))
    assert role_avoiding_vertex(g, VirusPattern(2, 3), 2) == 0
    for n in (7, 8):
        graphs, _ = find_saturated_graphs(n, VirusPattern(2, 5))
        for h in graphs:
            if h.is_connected():
                assert role_avoiding_vertex(h, VirusPattern(1, 5), 4) is not None
    full = complete(6)
    assert role_avoiding_vertex(full, VirusPattern(1, 3), 2) is None


def test_role_avoiding_agrees_with_embedding_oracle():
    graphs, _ = find_saturated_graphs(7, VirusPattern(3, 3))
    for g in graphs:
        roles = embedding_degree_sets(g, 2, 3)
        expect = next((v for v in range(g.n) if 2 not in roles[v]), None)
        assert role_avoiding_vertex(g, VirusPattern(2, 3), 2) == expect


def test_degree2_types():
    g = join(complete(1), copies(3, complete(2)))
    # each pair vertex sees the hub (degree 6) and its partner (degree 2)
    assert degree2_types(g, 1) == {"II"}
    assert degree2_types(g, 0) == set()


def test_find_p4():
    assert find_p4(Graph(4, [(0, 1), (1, 2), (2, 3)]), 0b1111) == (0, 1, 2, 3)
    assert find_p4(complete(3), 0b111) is None


def test_audits_on_examples():
    assert structural_audit(join(complete(1), copies(3, complete(2))), K33_CONNECTED).passed
    pend = k33_extremal(8, "pendant")
    audit = structural_audit(pend, K33_CONNECTED)
    assert audit.passed and audit.get("min_degree_one_shape").passed
    member = build_family_member(AttachmentSpec(complete(2), 4, (0, 0), (1, 0)))
    disc = union(member, complete(5))
    assert disc.n == 11
    assert structural_audit(disc, K2T_DISCONNECTED(4)).passed
    assert structural_audit(member, K2T_CONNECTED(4)).passed


def test_audit_preconditions():
    with pytest.raises(PreconditionError) as info:
        structural_audit(copies(2, complete(3)), K33_CONNECTED)
    assert info.value.hypothesis == "connected"
    with pytest.raises(PreconditionError) as info:
        structural_audit(complete(6), K33_CONNECTED)
    assert info.value.hypothesis == "saturated"
    with pytest.raises(PreconditionError):
        structural_audit(_p20(), K2T_DISCONNECTED(4))


def test_decomposition_failure_carries_witness():
    from satlab.structure import _check_decomposition

    g = union(complete(4), complete(4))
    res = _check_decomposition(g, VirusPattern(2, 4))
    assert not res.passed and res.witness == [[0, 1, 2, 3], [4, 5, 6, 7]]
