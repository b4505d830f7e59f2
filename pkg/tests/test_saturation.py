import json

import pytest

from satlab.canon import canonical_form
from satlab.enumerate import enumerate_graphs
from satlab.errors import CapacityError
from satlab.graph import Graph, complete, copies, empty, join, union
from satlab.graph6 import decode
from satlab.saturation import (
    ALL,
    CONNECTED,
    NONE_FOUND,
    check_saturation,
    find_saturated_graphs,
    is_saturated,
    saturation_search,
)
from satlab.virus import VirusPattern, contains_virus

from oracles import naive_saturated


def test_verdict_examples():
    v = check_saturation(join(complete(1), copies(3, complete(2))), VirusPattern(3, 3))
    assert v.is_saturated and v.is_free and v.completing_nonedges == v.total_nonedges
    v = check_saturation(complete(5), VirusPattern(2, 4))
    assert v.below_order and not v.is_saturated
    assert check_saturation(join(complete(2), empty(5)), VirusPattern(0, 4)).is_saturated


def test_verdict_reports_failing_nonedge():
    g = copies(2, complete(3))
    v = check_saturation(g, VirusPattern(2, 3))
    assert not v.is_saturated and v.failing_nonedge is not None
    u, w = v.failing_nonedge
    assert not contains_virus(g.add_edge(u, w), VirusPattern(2, 3))


def test_require_connected():
    g = union(complete(5), complete(5))  # two K_5: saturated for K^2_4, disconnected
    p = VirusPattern(2, 4)
    assert check_saturation(g, p).is_saturated
    assert not check_saturation(g, p, require_connected=True).is_saturated
    assert is_saturated(g, p) and not is_saturated(g, p, require_connected=True)


@pytest.mark.parametrize("s,t", [(0, 3), (0, 4), (1, 3), (2, 3), (3, 3), (2, 4), (1, 4), (2, 5)])
def test_kernel_agrees_with_python_path_up_to_order_7(s, t):
    p = VirusPattern(s, t)
    for n in range(0, 8):
        for g in enumerate_graphs(n):
            assert is_saturated(g, p) == check_saturation(g, p).is_saturated


@pytest.mark.parametrize("s,t", [(2, 3), (3, 3), (2, 4)])
def test_predicate_agrees_with_naive_oracle_order_6(s, t):
    for g in enumerate_graphs(6):
        assert check_saturation(g, VirusPattern(s, t)).is_saturated == naive_saturated(g, s, t)


def test_search_examples():
    assert saturation_search(6, VirusPattern(2, 4)).sat_value == 9
    rep = saturation_search(7, VirusPattern(3, 3))
    assert rep.sat_value == 9
    assert rep.extremal_codes == [canonical_form(join(complete(1), copies(3, complete(2))))]
    assert saturation_search(5, VirusPattern(0, 3)).sat_value == 4


def test_none_found_below_order():
    rep = saturation_search(4, VirusPattern(2, 3))
    assert rep.sat_value == NONE_FOUND and rep.extremal_codes == []


def test_report_invariants_and_json():
    rep = saturation_search(7, VirusPattern(2, 4))
    assert rep.extremal_codes == sorted(set(rep.extremal_codes))
    for g in rep.extremal_graphs():
        assert g.num_edges == rep.sat_value
        assert check_saturation(g, VirusPattern(2, 4)).is_saturated
    d = json.loads(rep.to_json(stable=True))
    assert list(d)[0] == "schema" and "elapsed" not in d
    assert "elapsed" in rep.to_dict()


def test_connected_mode_filters():
    rep = saturation_search(7, VirusPattern(2, 5), mode=CONNECTED)
    assert rep.sat_value == 13
    assert all(g.is_connected() for g in rep.extremal_graphs())
    with pytest.raises(ValueError):
        saturation_search(7, VirusPattern(2, 5), mode="bogus")


def test_monotonicity_on_saturated_graphs():
    p = VirusPattern(2, 4)
    graphs, _ = find_saturated_graphs(7, p)
    for g in graphs:
        for u, v in g.non_edges():
            assert contains_virus(g.add_edge(u, v), p)
        for u, v in g.edges():
            assert not contains_virus(g.remove_edge(u, v), p)


def test_graph_stream_replaces_enumeration():
    stream = list(enumerate_graphs(7))[::-1] + list(enumerate_graphs(6))
    rep = saturation_search(7, VirusPattern(3, 3), graphs=stream)
    assert rep.sat_value == 9 and rep.graphs_scanned == 1044
    with pytest.raises(CapacityError):
        saturation_search(10, VirusPattern(3, 3))
    odd = join(complete(1), copies(3, complete(2)))
    assert saturation_search(10, VirusPattern(3, 3), graphs=[odd]).sat_value == NONE_FOUND  # wrong order is skipped


def test_jobs_do_not_change_the_report():
    a = saturation_search(7, VirusPattern(2, 4), jobs=1)
    b = saturation_search(7, VirusPattern(2, 4), jobs=3)
    assert a.to_json(stable=True) == b.to_json(stable=True)


def test_csat_counterexample_family_is_saturated():
    # K_{t-1} with one K_t hung on a single vertex at t-2 vertices: t^2 - t - 1 edges
    for t in (5, 6, 7):
        base = complete(t - 1)
        edges = list(base.edges())
        edges += [(t - 1 + i, t - 1 + j) for j in range(t) for i in range(j)]
        edges += [(0, t - 1 + i) for i in range(t - 2)]
        g = Graph(2 * t - 1, edges)
        assert g.num_edges == t * t - t - 1
        assert g.is_connected()
        assert check_saturation(g, VirusPattern(2, t)).is_saturated
