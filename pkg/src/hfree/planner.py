"""Reduction chains: from a base problem up to an arbitrary supported pattern.

A plan is a base problem (whose pattern is P3, P4, a cycle or 2K2) plus an
ordered list of steps. Each step knows the pattern it starts from, the
pattern it produces, and how to transform an instance. Budgets never change.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from . import graph as gr
from .constructions import PatternSpec, branch_gadget, clique_attach, join_gadget
from .graph import Graph, Instance, complement, disjoint_union, is_connected, is_tree
from .matching import are_isomorphic
from .patterns import ClassificationResult, classify, strip_leaves


class PlanError(ValueError):
    """The pattern has no reduction chain, or a chain is inconsistent."""

    def __init__(self, message: str, classification: ClassificationResult | None = None):
        self.classification = classification
        super().__init__(message)


class StepError(ValueError):
    pass


BASE_KINDS = ("P3Free", "P4Free", "CycleFree", "TwoK2Free")


@dataclass(frozen=True)
class BaseProblem:
    kind: str
    length: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in BASE_KINDS:
            raise ValueError(f"unknown base problem {self.kind!r}")
        if self.kind == "CycleFree" and (self.length is None or self.length < 3):
            raise ValueError("CycleFree needs a length >= 3")

    @property
    def pattern(self) -> Graph:
        if self.kind == "P3Free":
            return gr.path(3)
        if self.kind == "P4Free":
            return gr.path(4)
        if self.kind == "TwoK2Free":
            return gr.matching(2)
        return gr.cycle(self.length)

    def format(self) -> str:
        return f"base {self.kind}" + (f" {self.length}" if self.kind == "CycleFree" else "")


# ---------------------------------------------------------------------------
# Steps


@dataclass(frozen=True)
class StarStep:
    """S_(l-1)-free to S_l-free via clique attachment (l > 2)."""

    leaves: int
    mechanism = "clique_attach"

    def __post_init__(self) -> None:
        if self.leaves <= 2:
            raise StepError("StarStep needs l > 2")

    @property
    def source(self) -> Graph:
        return gr.star(self.leaves - 1)

    @property
    def target(self) -> Graph:
        return gr.star(self.leaves)

    def build(self, g: Graph, k: int) -> Graph:
        return clique_attach(g, k)[0]

    def params(self) -> str:
        return str(self.leaves)


@dataclass(frozen=True)
class TwinStarStep:
    """S_(l1-1,l2-1)-free to S_(l1,l2)-free via clique attachment."""

    left: int
    right: int
    mechanism = "clique_attach"

    def __post_init__(self) -> None:
        if self.left < 1 or self.right < 1 or self.left + self.right < 3:
            raise StepError("TwinStarStep needs l1, l2 >= 1 and l1 + l2 >= 3")

    @property
    def source(self) -> Graph:
        return gr.twin_star(self.left - 1, self.right - 1)

    @property
    def target(self) -> Graph:
        return gr.twin_star(self.left, self.right)

    def build(self, g: Graph, k: int) -> Graph:
        return clique_attach(g, k)[0]

    def params(self) -> str:
        return f"{self.left} {self.right}"


class _DesignatedStep:
    """Shared behaviour of the steps that run :func:`branch_gadget`."""

    pattern: Graph
    mechanism = "branch_gadget"

    @property
    def designated(self) -> frozenset[int]:
        raise NotImplementedError

    @property
    def spec(self) -> PatternSpec:
        return PatternSpec(self.pattern, self.designated)

    @property
    def source(self) -> Graph:
        return self.pattern.induced(self.designated)

    @property
    def target(self) -> Graph:
        return self.pattern

    def build(self, g: Graph, k: int) -> Graph:
        return branch_gadget(g, k, self.spec)[0]

    def _check_designated(self) -> None:
        d = self.designated
        if not d or len(d) == self.pattern.n:
            raise StepError("designated vertices must form a nonempty proper subset")


@dataclass(frozen=True)
class DegreeStrip(_DesignatedStep):
    """H[vertices of degree > d]-free to H-free."""

    pattern: Graph
    d: int

    def __post_init__(self) -> None:
        self._check_designated()

    @property
    def designated(self) -> frozenset[int]:
        return frozenset(v for v in range(self.pattern.n) if self.pattern.degree(v) > self.d)

    def params(self) -> str:
        return f"d={self.d} {_fmt_graph(self.pattern)}"


@dataclass(frozen=True)
class RegularCarve(_DesignatedStep):
    """R[V']-free to R-free for a carving set V' inducing P3 or K3."""

    pattern: Graph
    keep: frozenset[int]

    def __post_init__(self) -> None:
        self._check_designated()
        r = gr.regular_degree(self.pattern)
        if r is None or r < 3 or not is_connected(self.pattern):
            raise StepError("RegularCarve needs a connected r-regular graph with r >= 3")
        if self.source.n != 3 or self.source.m not in (2, 3):
            raise StepError("RegularCarve needs V' inducing P3 or K3")
        rest = [v for v in range(self.pattern.n) if v not in self.keep]
        if not is_connected(self.pattern.induced(rest)):
            raise StepError("RegularCarve needs R - V' connected")

    @property
    def designated(self) -> frozenset[int]:
        return self.keep

    def params(self) -> str:
        return f"{_fmt_graph(self.pattern)} keep={_fmt_ids(self.keep)}"


@dataclass(frozen=True)
class ComponentLift(_DesignatedStep):
    """H'-free to H-free, H' the union of the components isomorphic to a
    largest component."""

    pattern: Graph
    keep: frozenset[int]

    def __post_init__(self) -> None:
        self._check_designated()

    @property
    def designated(self) -> frozenset[int]:
        return self.keep

    def params(self) -> str:
        return f"{_fmt_graph(self.pattern)} keep={_fmt_ids(self.keep)}"


@dataclass(frozen=True)
class CopyStep:
    """(t-1)H1-free to tH1-free: add a disjoint join of k+1 copies of H1."""

    component: Graph
    copies: int
    mechanism = "join_gadget"

    def __post_init__(self) -> None:
        if self.copies < 2:
            raise StepError("CopyStep needs t >= 2")
        if not is_connected(self.component):
            raise StepError("CopyStep needs a connected component graph")

    @property
    def source(self) -> Graph:
        return disjoint_union([self.component] * (self.copies - 1))

    @property
    def target(self) -> Graph:
        return disjoint_union([self.component] * self.copies)

    def build(self, g: Graph, k: int) -> Graph:
        return disjoint_union([g, join_gadget(self.component, k)])

    def params(self) -> str:
        return f"t={self.copies} {_fmt_graph(self.component)}"


ReductionStep = Union[StarStep, TwinStarStep, DegreeStrip, RegularCarve, ComponentLift, CopyStep]
STEP_TYPES = {cls.__name__: cls for cls in (StarStep, TwinStarStep, DegreeStrip, RegularCarve, ComponentLift, CopyStep)}


def step_name(step: ReductionStep) -> str:
    return type(step).__name__


def apply_step(step: ReductionStep, inst: Instance) -> Instance:
    if inst.budget < 1:
        raise StepError("reduction steps need a budget of at least 1")
    if not isinstance(step, tuple(STEP_TYPES.values())):
        raise StepError(f"not a reduction step: {step!r}")
    return Instance(step.build(inst.graph, inst.budget), inst.budget)


# ---------------------------------------------------------------------------
# Plans


@dataclass(frozen=True)
class ReductionPlan:
    base: BaseProblem
    steps: tuple[ReductionStep, ...]
    target: Graph

    def check(self) -> None:
        """Raise PlanError unless the step patterns chain from base to target."""
        current = self.base.pattern
        for i, step in enumerate(self.steps):
            if not are_isomorphic(current, step.source):
                raise PlanError(f"step {i} ({step_name(step)}) does not start from the previous pattern")
            current = step.target
        if not are_isomorphic(current, self.target):
            raise PlanError("chain does not end at the target pattern")

    def format(self) -> str:
        lines = [self.base.format()]
        lines += [f"step {step_name(s)} {s.params()}" for s in self.steps]
        lines.append(f"target {self.target.n} {self.target.m}")
        lines += [f"e {u + 1} {v + 1}" for u, v in self.target.sorted_edges()]
        return "\n".join(lines) + "\n"


def apply_plan(plan: ReductionPlan, base_inst: Instance) -> Instance:
    if base_inst.budget < 1:
        raise StepError("reduction steps need a budget of at least 1")
    inst = base_inst
    for step in plan.steps:
        inst = apply_step(step, inst)
    return inst


def _star_chain(leaves: int) -> list[ReductionStep]:
    return [StarStep(l) for l in range(3, leaves + 1)]


def _twin_star_chain(left: int, right: int) -> tuple[BaseProblem, list[ReductionStep]]:
    a, b = sorted((left, right))
    if a == b:
        base, steps = BaseProblem("P4Free"), []
        lo = (1, 1)
    else:
        # descending a times reaches S_(0, b-a), the star S_(b-a+1)
        base, steps = BaseProblem("P3Free"), _star_chain(b - a + 1)
        lo = (0, b - a)
    steps += [TwinStarStep(lo[0] + i, lo[1] + i) for i in range(1, a - lo[0] + 1)]
    return base, steps


def _tree_chain(t: Graph) -> tuple[BaseProblem, list[ReductionStep]]:
    layers = [t]
    while gr.induced_diameter(layers[-1]) > 3:
        layers.append(strip_leaves(layers[-1]))
    core = classify(layers[-1])
    if core.kind == "Star":
        base, steps = BaseProblem("P3Free"), _star_chain(core.params[0])
    elif core.kind == "TwinStar":
        base, steps = _twin_star_chain(*core.params)
    else:
        raise PlanError("stripped tree core is neither a star nor a twin-star", core)
    steps += [DegreeStrip(layer, 1) for layer in reversed(layers[:-1])]
    return base, steps


def _connected_chain(h: Graph, c: ClassificationResult) -> tuple[BaseProblem, list[ReductionStep]]:
    if c.kind == "Star":
        return BaseProblem("P3Free"), _star_chain(c.params[0])
    if c.kind == "TwinStar":
        return _twin_star_chain(*c.params)
    if c.kind == "GeneralTree":
        return _tree_chain(h)
    if c.kind == "Cycle":
        return BaseProblem("CycleFree", c.params[0]), []
    if c.kind == "RegularHigh":
        step = RegularCarve(h, c.witness)
        base = BaseProblem("P3Free") if step.source.m == 2 else BaseProblem("CycleFree", 3)
        return base, [step]
    raise PlanError(f"no chain for class {c.kind}", c)


def plan(h: Graph) -> ReductionPlan:
    c = classify(h)
    if not c.supported:
        raise PlanError(f"pattern classifies as {c.kind}; no reduction chain", c)
    if c.kind == "MatchingUnion":
        t, isolated = c.params
        k2 = gr.complete(2)
        base, steps = BaseProblem("TwoK2Free"), [CopyStep(k2, s) for s in range(3, t + 1)]
        if isolated:
            steps.append(ComponentLift(h, frozenset(v for v in range(h.n) if h.degree(v) == 1)))
    elif c.kind == "CompositeLargest":
        largest = c.largest
        base, steps = _connected_chain(largest.component, c.inner)
        steps += [CopyStep(largest.component, s) for s in range(2, largest.copies + 1)]
        if largest.leftover:
            steps.append(ComponentLift(h, largest.members))
    else:
        base, steps = _connected_chain(h, c)
    result = ReductionPlan(base, tuple(steps), h)
    result.check()
    return result


def to_completion(h: Graph, inst: Instance) -> tuple[Graph, Instance]:
    """Completion of ``h``-freeness as deletion of complement-freeness."""
    return complement(h), Instance(complement(inst.graph), inst.budget)


# ---------------------------------------------------------------------------
# Plan text format


def _fmt_ids(vs) -> str:
    return ",".join(str(v + 1) for v in sorted(vs))


def _fmt_graph(g: Graph) -> str:
    edges = ",".join(f"{u + 1}-{v + 1}" for u, v in g.sorted_edges()) or "-"
    return f"n={g.n} edges={edges}"


def _parse_fields(tokens: list[str]) -> dict[str, str]:
    out = {}
    for tok in tokens:
        key, sep, value = tok.partition("=")
        if not sep:
            raise PlanError(f"expected key=value, got {tok!r}")
        out[key] = value
    return out


def _graph_from_fields(f: dict[str, str]) -> Graph:
    n = int(f["n"])
    edges = []
    if f["edges"] != "-":
        for pair in f["edges"].split(","):
            u, v = pair.split("-")
            edges.append((int(u) - 1, int(v) - 1))
    return Graph.from_edges(n, edges)


def _ids(text: str) -> frozenset[int]:
    return frozenset(int(x) - 1 for x in text.split(","))


def _parse_step(name: str, tokens: list[str]) -> ReductionStep:
    if name == "StarStep":
        return StarStep(int(tokens[0]))
    if name == "TwinStarStep":
        return TwinStarStep(int(tokens[0]), int(tokens[1]))
    f = _parse_fields(tokens)
    if name == "DegreeStrip":
        return DegreeStrip(_graph_from_fields(f), int(f["d"]))
    if name == "RegularCarve":
        return RegularCarve(_graph_from_fields(f), _ids(f["keep"]))
    if name == "ComponentLift":
        return ComponentLift(_graph_from_fields(f), _ids(f["keep"]))
    if name == "CopyStep":
        return CopyStep(_graph_from_fields(f), int(f["t"]))
    raise PlanError(f"unknown step {name!r}")


def parse_plan(text: str) -> ReductionPlan:
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or lines[0][0] != "base":
        raise PlanError("plan must start with a 'base' line")
    head = lines[0]
    try:
        base = BaseProblem(head[1], int(head[2]) if len(head) > 2 else None)
        steps = []
        i = 1
        while i < len(lines) and lines[i][0] == "step":
            steps.append(_parse_step(lines[i][1], lines[i][2:]))
            i += 1
        if i >= len(lines) or lines[i][0] != "target":
            raise PlanError("missing 'target <n> <m>' line")
        n, m = int(lines[i][1]), int(lines[i][2])
        edge_lines = lines[i + 1:]
        if len(edge_lines) != m or any(ln[0] != "e" or len(ln) != 3 for ln in edge_lines):
            raise PlanError(f"target declares {m} edges")
        target = Graph.from_edges(n, [(int(u) - 1, int(v) - 1) for _, u, v in edge_lines])
    except (IndexError, KeyError, ValueError) as exc:
        if isinstance(exc, PlanError):
            raise
        raise PlanError(f"malformed plan: {exc}") from exc
    result = ReductionPlan(base, tuple(steps), target)
    result.check()
    return result
