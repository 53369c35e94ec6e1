import random

import pydot
import pytest

from bicomm.figures import FIGURES, legend, spec_case
from bicomm.lattice import (
    ConsequenceGraph,
    FamilySampleError,
    build_graph,
    family,
    graph_intersection,
    graph_union,
    is_distributive,
    sample_family,
    subgraph,
    to_dot,
    to_json,
)
from bicomm.tideal import VarietySpec
from bicomm.varieties import b_spec, u_spec, v_spec, w
from helpers import g


def test_generic_u_graph():
    graph = build_graph(u_spec(1, 2), 4)
    assert sorted(v.name for v in graph.vertices) == ["f1", "f2", "f3", "g2", "g3", "h3"]
    for name in ("f3", "g3", "h3"):
        assert graph.out_degree(name) == 0


def test_diffzero_u_sink():
    graph = build_graph(u_spec(1, 1), 5)
    g4 = graph.vertex("g4")
    assert g4.coords == (0, 0, 1)
    assert graph.out_degree("g4") == 0
    assert "g4" in graph.sinks()


def test_sumzero_u_edges():
    graph = build_graph(u_spec(1, -1), 5)
    edges = graph.edge_names()
    assert ("g3", "p4") in edges and ("h3", "p4") in edges
    assert graph.out_degree("p4") == 0


def test_edges_only_join_adjacent_degrees():
    graph = build_graph(v_spec(1, 0), 5)
    for a, b in graph.edges:
        assert graph.vertices[b].degree == graph.vertices[a].degree + 1


def test_same_seed_same_output():
    a = to_json(build_graph(v_spec(1, -1), 5, seed=7))
    b = to_json(build_graph(v_spec(1, -1), 5, seed=7))
    assert a == b


def test_automatic_vertices_for_other_specs():
    graph = build_graph(b_spec(), 3)
    names = [v.name for v in graph.vertices]
    assert names[0] == "x1"
    assert sum(v.degree == 3 for v in graph.vertices) == 6  # two basis lines and a family per shape
    assert all(graph.out_degree(v.name) > 0 for v in graph.vertices if v.degree < 3)


def test_family_sampling_respects_condition():
    spec = family("j", (3,), w((3,), 2), w((3,), 1), lambda a, b: (a + b) * b != 0, "t")
    for a, b in sample_family(spec, random.Random(3)):
        assert (a + b) * b != 0
    assert len(sample_family(spec, random.Random(3))) == 4


def test_nonuniform_family_is_an_error():
    # in U(1,0), w21^(1) has no consequences while w21^(0) implies w31^(0)
    from bicomm.hwv import Partition
    from bicomm.lattice import IdentityVertex, _decide
    from bicomm.tideal import default_engine

    mixed = IdentityVertex("k", 3, Partition.of(2, 1), None, "mixed", (g(w((2, 1), 1)), g(w((2, 1), 0))))
    target = IdentityVertex("g4", 4, Partition.of(3, 1), (1, 0, 0), "", (g(w((3, 1), 0)),))
    with pytest.raises(FamilySampleError):
        _decide(default_engine(), u_spec(1, 0), mixed, target)


def test_union_intersection_identities():
    graph = build_graph(u_spec(1, 1), 5)
    assert graph_intersection(graph, graph).edge_names() == graph.edge_names()
    empty = ConsequenceGraph(graph.ambient, graph.max_degree, [], [])
    union = graph_union(graph, empty)
    assert [v.name for v in union.vertices] == [v.name for v in graph.vertices]
    assert union.edge_names() == graph.edge_names()
    other = build_graph(u_spec(1, 2), 5)
    with pytest.raises(ValueError):
        graph_union(graph, other)


def test_subgraph_lattice_is_distributive():
    ambient = u_spec(1, 1)
    graph = build_graph(ambient, 5)
    fixed_vertices = [v for v in graph.vertices if not v.is_family and v.degree >= 2]
    rng = random.Random(11)
    subs = []
    for _ in range(3):
        pick = rng.sample(fixed_vertices, 2)
        subs.append(subgraph(graph, ambient, VarietySpec(tuple(p.samples[0] for p in pick))))
    # each subgraph is closed under consequences
    for sub in subs:
        for a, b in graph.edge_names():
            if a in sub:
                assert b in sub
    a, b, c = subs
    assert a | (b & c) == (a | b) & (a | c)
    assert a & (b | c) == (a & b) | (a & c)


def test_dot_output():
    graph = build_graph(u_spec(1, 2), 3)
    text = to_dot(graph)
    (parsed,) = pydot.graph_from_dot_data(text)
    nodes = {n.get_name().strip('"') for n in parsed.get_nodes()} - {"node", "graph", "edge"}
    assert nodes == {"f1", "f2", "f3", "g2", "g3", "h3"}
    assert len(parsed.get_edges()) == 9  # 8 consequence edges plus the g3-h3 family link
    ranks = [sg for sg in parsed.get_subgraphs()]
    assert len(ranks) == 3


def test_dot_empty_graph():
    text = to_dot(ConsequenceGraph("B", 2, [], []))
    assert text.startswith("digraph {")
    assert pydot.graph_from_dot_data(text)


def test_dot_ellipsis_for_infinite_chains():
    text = to_dot(build_graph(v_spec(1, -1), 6))
    assert '"f6..." [label="...", shape=plaintext];' in text
    assert pydot.graph_from_dot_data(text)


def test_distributivity_examples():
    assert not is_distributive(b_spec(), 6)
    assert is_distributive(u_spec(1, 2).union(v_spec(1, 0)), 6)
    assert not is_distributive(u_spec(1, 0), 6)
    with pytest.raises(ValueError):
        is_distributive(b_spec(), 2)


def test_spec_case_recognition():
    assert spec_case(u_spec(2, 4)) == ("U", "Generic", (2, 4))
    assert spec_case(v_spec(0, 3))[:2] == ("V", "Beta1Zero")
    assert spec_case(b_spec()) is None
    assert spec_case(VarietySpec((g(w((2, 2), 0)),))) is None


@pytest.mark.parametrize("fig_id", sorted(FIGURES))
def test_legend_vertices_survive(fig_id):
    fig = FIGURES[fig_id]
    spec = (u_spec if fig.kind == "U" else v_spec)(*fig.coeffs)
    verts, links = legend(fig.kind, fig.case, fig.max_degree)
    names = [v.name for v in verts]
    assert len(names) == len(set(names))
    for a, b in links:
        assert a in names and b in names
    graph = build_graph(spec, fig.max_degree, verts, links)
    assert len(graph.vertices) == len(verts)
