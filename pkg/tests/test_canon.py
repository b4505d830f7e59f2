import random

import networkx as nx
from hypothesis import given, strategies as st

from satlab.canon import canonical_form, canonical_graph, canonical_labeling, is_isomorphic
from satlab.enumerate import enumerate_graphs
from satlab.graph import Graph, complete, copies, cycle, join, union
from satlab.graph6 import decode

from oracles import atlas_by_order, to_nx
from test_graph import graphs


@given(graphs(9), st.randoms(use_true_random=False))
def test_code_is_relabelling_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert canonical_form(g.relabel(perm)) == canonical_form(g)


@given(graphs(8))
def test_code_decodes_to_an_isomorphic_graph(g):
    code = canonical_form(g)
    h = decode(code)
    assert nx.is_isomorphic(to_nx(h), to_nx(g))
    assert canonical_graph(g) == h
    assert g.relabel(canonical_labeling(g)) == h


def test_codes_separate_all_classes_up_to_order_seven():
    for n, gs in atlas_by_order().items():
        codes = {canonical_form(g) for g in gs}
        assert len(codes) == len(gs), n


def test_regular_graphs_with_many_automorphisms():
    pet = Graph(10, [(u, v) for u, v in nx.petersen_graph().edges])
    rnd = random.Random(3)
    for _ in range(5):
        perm = list(range(10))
        rnd.shuffle(perm)
        assert canonical_form(pet.relabel(perm)) == canonical_form(pet)
    assert not is_isomorphic(pet, union(cycle(5), cycle(5)).complement().complement())
    assert is_isomorphic(copies(4, complete(3)), copies(4, complete(3)).relabel(list(range(11, -1, -1))))


def test_cospectral_like_pairs_are_distinguished():
    a = union(cycle(6))
    b = union(cycle(3), cycle(3))
    assert not is_isomorphic(a, b)
    assert canonical_form(join(complete(1), a)) != canonical_form(join(complete(1), b))
