"""Gadget constructions used by every reduction step.

* :func:`branch_gadget` attaches ``k + 1`` completions of a pattern to every
  (not necessarily induced) copy of a designated sub-pattern.
* :func:`clique_attach` hangs a ``(k + 1)``-clique on every vertex.
* :func:`join_gadget` fully joins ``k + 1`` disjoint copies of a graph.

Original vertices keep their ids; fresh vertices are numbered after them,
grouped by base and then by branch, so outputs are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .graph import Edge, Graph, is_connected, norm_edge
from .matching import enumerate_subgraph_copies


@dataclass(frozen=True)
class PatternSpec:
    """A forbidden graph with a designated vertex subset and a labelling.

    ``labelling`` maps pattern vertex -> label; it defaults to the identity.
    """

    pattern: Graph
    designated: frozenset[int]
    labelling: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if not self.designated <= frozenset(range(self.pattern.n)):
            raise ValueError("designated vertices must belong to the pattern")
        if self.labelling is not None and sorted(self.labelling) != list(range(self.pattern.n)):
            raise ValueError("labelling must be a bijection onto 0..n-1")

    @property
    def sub_pattern(self) -> Graph:
        """H[V'], relabelled in increasing vertex order."""
        return self.pattern.induced(self.designated)

    @property
    def outside(self) -> list[int]:
        return [v for v in range(self.pattern.n) if v not in self.designated]

    @property
    def added_edges(self) -> list[Edge]:
        """Pattern edges with at least one endpoint outside the designated set."""
        return [e for e in self.pattern.sorted_edges() if not set(e) <= self.designated]


@dataclass
class Base:
    vertices: frozenset[int]
    edges: frozenset[Edge]
    # host vertex -> pattern vertex
    iso: dict[int, int]


@dataclass
class Branch:
    vertices: tuple[int, ...]
    edges: frozenset[Edge]
    # branch vertex -> pattern vertex
    iso: dict[int, int] = field(default_factory=dict)


@dataclass
class GadgetTrace:
    """What a construction added: bases, their branches, and the input graph."""

    kind: str  # "branch" or "clique"
    host: Graph
    bases: list[Base] = field(default_factory=list)
    branches: list[list[Branch]] = field(default_factory=list)

    @property
    def original_vertices(self) -> frozenset[int]:
        return frozenset(range(self.host.n))

    def format(self) -> str:
        lines = [f"gadget {self.kind} {self.host.n}"]
        for base, branches in zip(self.bases, self.branches):
            lines.append(f"base {_fmt_set(base.vertices)} | {_fmt_edges(base.edges)}")
            for br in branches:
                lines.append(f"branch {_fmt_set(br.vertices)} | {_fmt_edges(br.edges)}")
        return "\n".join(lines) + "\n"


def _fmt_set(vs) -> str:
    return " ".join(str(v + 1) for v in sorted(vs)) or "-"


def _fmt_edges(es) -> str:
    return " ".join(f"{u + 1}-{v + 1}" for u, v in sorted(es)) or "-"


def _check_k(k: int) -> None:
    if k < 1:
        raise ValueError("k must be a positive integer")


def branch_gadget(
    g: Graph, k: int, spec: PatternSpec, *, branches: int | None = None
) -> tuple[Graph, GadgetTrace]:
    """Attach ``k + 1`` branches completing each copy of ``spec.sub_pattern``.

    ``branches`` overrides the per-base branch count; it exists only for
    mutation testing.
    """
    _check_k(k)
    if not spec.designated or len(spec.designated) == spec.pattern.n:
        raise ValueError("designated set must be a nonempty proper subset of the pattern")
    count = k + 1 if branches is None else branches
    h = spec.pattern
    sub_order = sorted(spec.designated)
    outside = spec.outside
    added = spec.added_edges

    trace = GadgetTrace("branch", g)
    edges = set(g.edges)
    nxt = g.n
    for copy in enumerate_subgraph_copies(g, spec.sub_pattern):
        # copy.iso labels refer to positions in sub_order
        iso = {hv: sub_order[label] for hv, label in copy.iso}
        base = Base(copy.vertices, copy.edges, iso)
        to_host = {pv: hv for hv, pv in iso.items()}
        per_base = []
        for _ in range(count):
            fresh = tuple(range(nxt, nxt + len(outside)))
            nxt += len(outside)
            where = dict(to_host)
            where.update(zip(outside, fresh))
            branch_edges = frozenset(norm_edge(where[a], where[b]) for a, b in added)
            edges |= branch_edges
            per_base.append(Branch(fresh, branch_edges, dict(zip(fresh, outside))))
        trace.bases.append(base)
        trace.branches.append(per_base)
    return Graph.from_edges(nxt, edges), trace


def clique_attach(g: Graph, k: int, *, size: int | None = None) -> tuple[Graph, GadgetTrace]:
    """Give every vertex ``k + 1`` fresh neighbours forming a clique with it.

    ``size`` overrides the number of fresh vertices (mutation testing only).
    """
    _check_k(k)
    count = k + 1 if size is None else size
    trace = GadgetTrace("clique", g)
    edges = set(g.edges)
    nxt = g.n
    for v in range(g.n):
        fresh = tuple(range(nxt, nxt + count))
        nxt += count
        clique = frozenset(norm_edge(a, b) for a, b in combinations((v,) + fresh, 2))
        edges |= clique
        trace.bases.append(Base(frozenset({v}), frozenset(), {v: 0}))
        trace.branches.append([Branch(fresh, clique)])
    return Graph.from_edges(nxt, edges), trace


def join_gadget(h1: Graph, k: int) -> Graph:
    """``k + 1`` disjoint copies of ``h1`` with every cross-copy pair adjacent."""
    _check_k(k)
    if not is_connected(h1):
        raise ValueError("join_gadget needs a connected graph")
    return _join(h1, k + 1, lambda i, j: True)


def _join(h1: Graph, copies: int, joined) -> Graph:
    n1 = h1.n
    edges = []
    for c in range(copies):
        edges += [(u + c * n1, v + c * n1) for u, v in h1.edges]
    for i, j in combinations(range(copies), 2):
        if joined(i, j):
            edges += [(u + i * n1, v + j * n1) for u in range(n1) for v in range(n1)]
    return Graph.from_edges(copies * n1, edges)
