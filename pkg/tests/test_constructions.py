import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from hfree import graph as gr
from hfree.constructions import PatternSpec, branch_gadget, clique_attach, join_gadget
from hfree.graph import Graph, disjoint_union
from hfree.matching import enumerate_subgraph_copies
from hfree.verify import verify_gadget_structure, verify_join_gadget
from strategies import graphs

K4_TRIANGLE = PatternSpec(gr.complete(4), frozenset({0, 1, 2}))
P4_MIDDLE = PatternSpec(gr.path(4), frozenset({1, 2}))


def test_branch_gadget_k3_into_k4():
    out, trace = branch_gadget(gr.complete(3), 1, K4_TRIANGLE)
    assert len(trace.bases) == 1
    assert [len(b.vertices) for b in trace.branches[0]] == [1, 1]
    # 3 original edges plus 2 branches of 3 edges each
    assert (out.n, out.m) == (5, 9)


def test_branch_gadget_no_bases():
    out, trace = branch_gadget(gr.matching(2), 2, K4_TRIANGLE)
    assert out == gr.matching(2)
    assert trace.bases == [] and trace.branches == []


def test_branch_gadget_p4_over_edges_of_k3():
    out, trace = branch_gadget(gr.complete(3), 1, P4_MIDDLE)
    assert len(trace.bases) == 3
    assert all(len(per) == 2 and all(len(b.vertices) == 2 for b in per) for per in trace.branches)
    assert out.n == 3 + 3 * 2 * 2


def test_branch_gadget_rejects_bad_inputs():
    with pytest.raises(ValueError):
        branch_gadget(gr.complete(3), 0, K4_TRIANGLE)
    with pytest.raises(ValueError):
        branch_gadget(gr.complete(3), 1, PatternSpec(gr.complete(4), frozenset(range(4))))
    with pytest.raises(ValueError):
        branch_gadget(gr.complete(3), 1, PatternSpec(gr.complete(4), frozenset()))


def test_branch_ids_are_grouped_by_base_then_branch():
    out, trace = branch_gadget(gr.complete(3), 2, P4_MIDDLE)
    ids = [v for per in trace.branches for b in per for v in b.vertices]
    assert ids == list(range(3, out.n))


def test_same_vertex_set_different_edges_are_distinct_bases():
    # K3 holds three P3 subgraphs on the same vertex set
    spec = PatternSpec(gr.star(3), frozenset({0, 1, 2}))
    _, trace = branch_gadget(gr.complete(3), 1, spec)
    assert len(trace.bases) == 3
    assert len({b.vertices for b in trace.bases}) == 1


def test_trace_format():
    _, trace = branch_gadget(gr.complete(3), 1, K4_TRIANGLE)
    assert trace.format().splitlines() == [
        "gadget branch 3",
        "base 1 2 3 | 1-2 1-3 2-3",
        "branch 4 | 1-4 2-4 3-4",
        "branch 5 | 1-5 2-5 3-5",
    ]


@pytest.mark.parametrize(
    "g, k, n, m",
    [
        (gr.path(3), 2, 12, 20),
        (gr.empty_graph(1), 1, 3, 3),
        (gr.complete(2), 1, 6, 7),
    ],
)
def test_clique_attach_sizes(g, k, n, m):
    out, _ = clique_attach(g, k)
    assert (out.n, out.m) == (n, m)


def test_clique_attach_k1_is_triangle():
    assert clique_attach(gr.empty_graph(1), 1)[0] == gr.complete(3)


def test_clique_attach_rejects_zero_budget():
    with pytest.raises(ValueError):
        clique_attach(gr.path(3), 0)


def test_join_gadget_examples():
    assert join_gadget(gr.complete(2), 1) == gr.complete(4)
    assert join_gadget(gr.empty_graph(1), 2) == gr.complete(3)
    j = join_gadget(gr.path(3), 1)
    assert (j.n, j.m) == (6, 13)


def test_join_gadget_rejects_disconnected():
    with pytest.raises(ValueError):
        join_gadget(gr.matching(2), 1)


@pytest.mark.parametrize("h1", [gr.complete(2), gr.path(3), gr.complete(3)])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_join_gadget_is_2h_free(h1, k):
    assert verify_join_gadget(h1, k).status == "pass"


def test_join_gadget_p3_brute_force():
    assert oracles.is_free(join_gadget(gr.path(3), 1), disjoint_union([gr.path(3)] * 2))


SPECS = [
    K4_TRIANGLE,
    P4_MIDDLE,
    PatternSpec(gr.path(5), frozenset({1, 2, 3})),
    PatternSpec(disjoint_union([gr.complete(3), gr.complete(2)]), frozenset({0, 1, 2})),
    PatternSpec(gr.petersen(), frozenset({0, 1, 2})),
    PatternSpec(gr.cycle(5), frozenset({0, 1})),
]


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=5), st.integers(1, 2), st.sampled_from(SPECS))
def test_branch_gadget_invariants(g, k, spec):
    out, trace = branch_gadget(g, k, spec)
    assert out.induced(range(g.n)) == g
    bases = enumerate_subgraph_copies(g, spec.sub_pattern)
    assert out.n <= g.n + len(bases) * (k + 1) * spec.pattern.n
    assert verify_gadget_structure(trace, out, spec, k).status == "pass"
    for base, per in zip(trace.bases, trace.branches):
        for br in per:
            # base plus branch, with only base and branch edges, is a copy of H
            verts = sorted(base.vertices | set(br.vertices))
            index = {v: i for i, v in enumerate(verts)}
            sub = Graph.from_edges(len(verts), [(index[u], index[v]) for u, v in base.edges | br.edges])
            assert oracles.iso(sub, spec.pattern)


@settings(max_examples=30, deadline=None)
@given(graphs(max_n=6), st.integers(1, 3))
def test_clique_attach_invariants(g, k):
    out, trace = clique_attach(g, k)
    assert out.induced(range(g.n)) == g
    assert verify_gadget_structure(trace, out, None, k).status == "pass"


def test_structure_check_catches_short_branches():
    out, trace = branch_gadget(gr.complete(3), 2, K4_TRIANGLE, branches=2)
    report = verify_gadget_structure(trace, out, K4_TRIANGLE, 2)
    assert report.status == "fail"
    assert any(f.case.endswith("branch-count") for f in report.failures)


def test_structure_check_catches_missing_edge():
    out, trace = branch_gadget(gr.complete(3), 1, K4_TRIANGLE)
    br = trace.branches[0][0]
    dropped = max(br.edges)
    br.edges = br.edges - {dropped}
    report = verify_gadget_structure(trace, out.remove_edges([dropped]), K4_TRIANGLE, 1)
    assert report.status == "fail"


def test_structure_check_on_random_triples():
    rng = random.Random(7)
    for _ in range(10):
        g = gr.Graph.from_edges(5, [(u, v) for u in range(5) for v in range(u + 1, 5) if rng.random() < 0.5])
        spec = rng.choice(SPECS)
        k = rng.randint(1, 2)
        out, trace = branch_gadget(g, k, spec)
        assert verify_gadget_structure(trace, out, spec, k).passed
