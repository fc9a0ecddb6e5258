import pytest

from hfree import graph as gr
from hfree.graph import Instance, disjoint_union
from hfree.planner import ComponentLift, CopyStep, DegreeStrip, StarStep
from hfree.verify import (
    MUTATIONS,
    Failure,
    Random,
    VerificationReport,
    catalog,
    host_instances,
    mutated_builder,
    named_steps,
    sweep_acceptance,
    verify_join_gadget,
    verify_solver_agreement,
    verify_step_equivalence,
)


def test_report_status_rules():
    assert VerificationReport("s", cases=10).status == "pass"
    assert VerificationReport("s", cases=10, skips=1).status == "pass-with-skips"
    # more than 10% skipped is a failure even with no counterexample
    assert VerificationReport("s", cases=10, skips=2).status == "fail"
    assert VerificationReport("s", cases=10, failures=[Failure("0", "yes", "no")]).status == "fail"
    assert VerificationReport("s", unsupported=True).status == "unsupported"
    assert not VerificationReport("s", unsupported=True).passed


def test_report_format():
    r = VerificationReport("demo", cases=3, failures=[Failure("2", "yes", "no", Instance(gr.path(2), 1))])
    assert r.format() == (
        "suite=demo cases=3 skips=0 failures=1 status=fail\n"
        "failure case=2 expected=yes got=no instance=p edge 2 1;e 1 2;k 1\n"
    )


def test_host_instances_exhaustive_count():
    # non-isomorphic graphs on 1..4 vertices: 1 + 2 + 4 + 11
    assert len(list(host_instances(4, 2))) == 18 * 2


def test_host_instances_random_is_deterministic():
    a = list(host_instances(5, 2, Random(20, 3)))
    b = list(host_instances(5, 2, Random(20, 3)))
    c = list(host_instances(5, 2, Random(20, 4)))
    assert a == b and len(a) == 20
    assert a != c
    assert all(1 <= inst.graph.n <= 5 and 1 <= inst.budget <= 2 for inst in a)


def test_host_instances_bad_mode():
    with pytest.raises(ValueError):
        list(host_instances(3, 1, "sometimes"))


@pytest.mark.parametrize("name", sorted(named_steps()))
def test_named_steps_pass(name):
    n, k = (4, 1) if name == "regular-carve" else (4, 2)
    report = verify_step_equivalence(named_steps()[name], n, k)
    assert report.status == "pass", report.format()
    assert report.cases > 0


def test_random_mode_report_is_reproducible():
    step = named_steps()["copy-step"]
    a = verify_step_equivalence(step, 5, 2, Random(30, 11))
    b = verify_step_equivalence(step, 5, 2, Random(30, 11))
    assert a.format() == b.format()
    assert a.cases == 30 and "seed=11" in a.suite


def test_capacity_cap_produces_skips():
    report = verify_step_equivalence(StarStep(3), 4, 2, max_steps=5)
    assert report.skips > 0
    assert report.status == "fail"


@pytest.mark.parametrize(
    "step, mutation",
    [
        (StarStep(3), "short-branches"),
        (StarStep(3), "drop-edge"),
        (CopyStep(gr.complete(2), 2), "short-branches"),
        (CopyStep(gr.complete(2), 2), "partial-join"),
    ],
)
def test_mutations_are_caught(step, mutation):
    report = verify_step_equivalence(step, 5, 2, mutation=mutation)
    assert report.failures, f"{mutation} survived"


def test_mutation_names_and_applicability():
    assert MUTATIONS == ("short-branches", "drop-edge", "partial-join")
    with pytest.raises(ValueError):
        mutated_builder(StarStep(3), "partial-join")
    with pytest.raises(ValueError):
        mutated_builder(StarStep(3), "flip")
    # branch-gadget steps accept the two branch mutations
    mutated_builder(DegreeStrip(gr.path(5), 1), "short-branches")
    mutated_builder(ComponentLift(disjoint_union([gr.complete(3), gr.complete(2)]), frozenset({0, 1, 2})), "drop-edge")


def test_partial_join_contains_2h():
    # with 3 copies of K2 joined only to neighbours, copies 0 and 2 form an induced 2K2
    build = mutated_builder(CopyStep(gr.complete(2), 2), "partial-join")
    g = build(gr.empty_graph(1), 2)
    assert verify_join_gadget(gr.complete(2), 2, g.induced(range(1, 7))).status == "fail"


def test_solver_agreement_small():
    report = verify_solver_agreement(4, [gr.path(3), gr.complete(3)], [0, 1, 2])
    assert report.status == "pass" and report.cases == 18 * 2 * 3


def test_sweep_acceptance_catalog():
    reports = sweep_acceptance(catalog().values(), host_limit=3, budget_limit=1)
    assert len(reports) == 14
    assert all(r.status == "pass" for r in reports), [r.format() for r in reports if not r.passed]


def test_sweep_flags_unsupported_and_ambiguity():
    unsupported, ambiguous = sweep_acceptance(
        [gr.paw(), disjoint_union([gr.cycle(4), gr.star(3)])], host_limit=3, budget_limit=1
    )
    assert unsupported.status == "unsupported"
    assert unsupported.format().startswith("suite=chain[Unsupported n=4 m=4]")
    assert any("largest" in n for n in ambiguous.notes)


def test_petersen_chain_sweep():
    (report,) = sweep_acceptance([gr.petersen()], host_limit=3, budget_limit=1)
    assert report.status in ("pass", "pass-with-skips")
