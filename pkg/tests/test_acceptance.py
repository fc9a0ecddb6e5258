"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines, or as a
script: ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import sys
import time

from hfree import graph as gr
from hfree.constructions import PatternSpec, branch_gadget
from hfree.generate import nonisomorphic_graphs, random_graph
from hfree.graph import Instance, disjoint_union
from hfree.patterns import classify, find_carving_set
from hfree.planner import (
    ComponentLift,
    CopyStep,
    DegreeStrip,
    RegularCarve,
    StarStep,
    TwinStarStep,
    apply_step,
    plan,
)
from hfree.verify import (
    MAX_SKIP_FRACTION,
    catalog,
    verify_gadget_structure,
    verify_join_gadget,
    verify_solver_agreement,
    verify_step_equivalence,
)

K3K2 = disjoint_union([gr.complete(3), gr.complete(2)])


def report(number: int, title: str, ok: bool, detail: str) -> None:
    print(f"criterion {number:>2} {'PASS' if ok else 'FAIL'} {title}: {detail}")
    assert ok, f"criterion {number} failed: {detail}"


def test_01_solver_agreement():
    start = time.perf_counter()
    patterns = [gr.path(3), gr.path(4), gr.complete(3), gr.matching(2), gr.complete(4), gr.cycle(4)]
    r = verify_solver_agreement(5, patterns, [0, 1, 2, 3])
    elapsed = time.perf_counter() - start
    ok = r.cases > 0 and not r.failures and r.skips == 0 and elapsed < 300
    report(1, "solver oracle agreement", ok, f"cases={r.cases} failures={len(r.failures)} time={elapsed:.1f}s")


def _zero_failure_sweep(number, title, step, n, k):
    r = verify_step_equivalence(step, n, k)
    ok = r.cases > 0 and r.status == "pass"
    report(number, title, ok, f"cases={r.cases} skips={r.skips} failures={len(r.failures)}")


def test_02_star_step():
    _zero_failure_sweep(2, "StarStep l=3", StarStep(3), 5, 2)


def test_03_twin_star_step():
    _zero_failure_sweep(3, "TwinStarStep (2,2) from P4", TwinStarStep(2, 2), 5, 2)


def test_04_degree_strip():
    _zero_failure_sweep(4, "DegreeStrip P5 d=1", DegreeStrip(gr.path(5), 1), 5, 2)


def test_05_regular_carve():
    r = verify_step_equivalence(RegularCarve(gr.complete(4), frozenset({0, 1, 2})), 4, 1)
    ok = r.cases > 0 and not r.failures and r.skips <= MAX_SKIP_FRACTION * r.cases
    report(5, "RegularCarve K4 with K3 carving", ok, f"cases={r.cases} skips={r.skips} failures={len(r.failures)}")


def test_06_component_lift():
    _zero_failure_sweep(6, "ComponentLift K3 to K3+K2", ComponentLift(K3K2, frozenset({0, 1, 2})), 5, 2)


def test_07_copy_step_and_join():
    parts = []
    ok = True
    for t in (2, 3):
        r = verify_step_equivalence(CopyStep(gr.complete(2), t), 5, 2)
        ok &= r.cases > 0 and r.status == "pass"
        parts.append(f"t={t} cases={r.cases} failures={len(r.failures)}")
    joins = [verify_join_gadget(h1, k) for h1 in (gr.complete(2), gr.path(3), gr.complete(3)) for k in (1, 2, 3)]
    ok &= all(j.status == "pass" for j in joins)
    parts.append(f"join checks={len(joins)} passed={sum(j.passed for j in joins)}")
    report(7, "CopyStep K2 and join gadget", ok, " ".join(parts))


def _random_spec(rng: random.Random) -> PatternSpec:
    n = rng.randint(3, 6)
    h = random_graph(n, rng.uniform(0.3, 0.9), rng)
    size = rng.randint(1, n - 1)
    return PatternSpec(h, frozenset(rng.sample(range(n), size)))


def test_08_gadget_structure():
    rng = random.Random(2024)
    passed = bases = 0
    for _ in range(50):
        g = random_graph(rng.randint(2, 6), rng.uniform(0.3, 0.9), rng)
        k = rng.randint(1, 3)
        spec = _random_spec(rng)
        out, trace = branch_gadget(g, k, spec)
        bases += len(trace.bases)
        passed += verify_gadget_structure(trace, out, spec, k).status == "pass"
    ok = passed == 50 and bases > 0
    report(8, "gadget structure on 50 random triples", ok, f"passed={passed}/50 bases={bases}")


def test_09_budget_linearity():
    steps = checked = 0
    bad = []
    for name, h in catalog().items():
        p = plan(h)
        for k in (1, 2):
            inst = Instance(gr.path(3), k)
            for step in p.steps:
                out = apply_step(step, inst)
                checked += 1
                if out.budget != inst.budget:
                    bad.append(name)
                inst = out
        steps += len(p.steps)
    report(9, "budget preserved by every catalog step", not bad, f"steps={steps} applications={checked} bad={bad}")


EXPECTED_CLASSES = {
    "S3": ("Star", (3,)),
    "S4": ("Star", (4,)),
    "S2,1": ("TwinStar", (1, 2)),
    "S2,2": ("TwinStar", (2, 2)),
    "P5": ("GeneralTree", None),
    "P6": ("GeneralTree", None),
    "C4": ("Cycle", (4,)),
    "C5": ("Cycle", (5,)),
    "K4": ("RegularHigh", (3,)),
    "Petersen": ("RegularHigh", (3,)),
    "2K2": ("MatchingUnion", (2, 0)),
    "3K2": ("MatchingUnion", (3, 0)),
    "2K2+K1": ("MatchingUnion", (2, 1)),
    "K3+K2": ("CompositeLargest", None),
}


def test_10_classification_catalog():
    wrong = []
    for name, h in catalog().items():
        c = classify(h)
        kind, params = EXPECTED_CLASSES[name]
        if c.kind != kind or (params is not None and c.params != params):
            wrong.append(f"{name}->{c.describe()}")
    composite = classify(K3K2)
    if composite.largest.component != gr.complete(3):
        wrong.append("K3+K2 largest component is not K3")
    if classify(gr.paw()).kind != "Unsupported":
        wrong.append("paw")
    if classify(gr.matching(1, 1)).kind != "PolynomialTime":
        wrong.append("K1+K2")
    report(10, "classification catalog", not wrong, f"graphs={len(catalog()) + 2} wrong={wrong}")


def test_11_carving_sets_exist():
    start = time.perf_counter()
    count = 0
    missing = []
    for n in range(4, 9):
        for g in nonisomorphic_graphs(n):
            if min(g.degrees()) == 3 and gr.is_connected(g):
                count += 1
                if find_carving_set(g, 3) is None:
                    missing.append(g)
    elapsed = time.perf_counter() - start
    ok = count > 0 and not missing and elapsed < 600
    report(11, "carving set for every min-degree-3 graph, n<=8", ok,
           f"graphs={count} missing={len(missing)} time={elapsed:.1f}s")


def test_12_mutation_kill():
    sweeps = {
        "short-branches": [StarStep(3), CopyStep(gr.complete(2), 2), CopyStep(gr.complete(2), 3)],
        "drop-edge": [StarStep(3), CopyStep(gr.complete(2), 2), CopyStep(gr.complete(2), 3)],
        "partial-join": [CopyStep(gr.complete(2), 2), CopyStep(gr.complete(2), 3)],
    }
    kills = {}
    for mutation, steps in sweeps.items():
        kills[mutation] = sum(len(verify_step_equivalence(s, 5, 2, mutation=mutation).failures) for s in steps)
    ok = all(v >= 1 for v in kills.values())
    report(12, "every gadget mutation caught", ok, " ".join(f"{m}={v}" for m, v in kills.items()))


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted((n, f) for n, f in globals().items() if n.startswith("test_")):
        try:
            fn()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
