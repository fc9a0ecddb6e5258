"""Exact deciders for H-free Edge Deletion on small instances.

Two independent routes: a bounded search tree that branches on the edges of
one induced copy, and a brute-force scan over all small edge subsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .graph import Edge, Graph, Instance, norm_edge
from .matching import SearchBudget, SearchCapacityError, find_induced_copy, is_free

BRUTEFORCE_LIMIT = 10**7


class SolverCapacityError(RuntimeError):
    """The instance is too large for the requested solver."""


@dataclass(frozen=True)
class Solution:
    """Edges whose deletion leaves the graph pattern-free (a yes-certificate)."""

    edges: frozenset[Edge]

    def format(self) -> str:
        return " ".join(["yes"] + [f"e {u + 1} {v + 1}" for u, v in sorted(self.edges)])


def format_solution(sol: Solution | None) -> str:
    return "no" if sol is None else sol.format()


def parse_solution(text: str) -> Solution | None:
    tok = text.split()
    if tok == ["no"]:
        return None
    if not tok or tok[0] != "yes" or (len(tok) - 1) % 3:
        raise ValueError(f"malformed solution line: {text!r}")
    edges = set()
    for i in range(1, len(tok), 3):
        if tok[i] != "e":
            raise ValueError(f"malformed solution line: {text!r}")
        edges.add(norm_edge(int(tok[i + 1]) - 1, int(tok[i + 2]) - 1))
    return Solution(frozenset(edges))


@dataclass
class BranchingStats:
    nodes: int = 0
    leaves: int = 0
    max_depth: int = 0


def _check_pattern(pattern: Graph) -> None:
    if pattern.m < 1:
        raise ValueError("pattern must have at least one edge")


def solve_branching(
    inst: Instance,
    pattern: Graph,
    *,
    stats: BranchingStats | None = None,
    max_steps: int | None = None,
) -> Solution | None:
    """Smallest-first bounded search tree.

    Budgets ``0..k`` are tried in turn, so a returned solution has minimum
    size. At each node the first induced copy found is destroyed by deleting
    one of its edges; any valid solution must hit that copy. ``max_steps``
    caps the total matcher work and raises :class:`SolverCapacityError`.
    """
    _check_pattern(pattern)
    pedges = pattern.sorted_edges()
    budget = SearchBudget(max_steps) if max_steps is not None else None
    masks = list(inst.graph.masks)

    def search(depth: int, left: int) -> list[Edge] | None:
        if stats is not None:
            stats.nodes += 1
            stats.max_depth = max(stats.max_depth, depth)
        emb = find_induced_copy(masks, pattern, budget)
        if emb is None:
            if stats is not None:
                stats.leaves += 1
            return []
        if left == 0:
            if stats is not None:
                stats.leaves += 1
            return None
        for a, b in pedges:
            u, v = emb[a], emb[b]
            masks[u] ^= 1 << v
            masks[v] ^= 1 << u
            found = search(depth + 1, left - 1)
            masks[u] ^= 1 << v
            masks[v] ^= 1 << u
            if found is not None:
                return found + [norm_edge(u, v)]
        return None

    try:
        for k in range(inst.budget + 1):
            found = search(0, k)
            if found is not None:
                return Solution(frozenset(found))
    except SearchCapacityError as exc:
        raise SolverCapacityError(str(exc)) from exc
    return None


def solve_bruteforce(inst: Instance, pattern: Graph, *, limit: int = BRUTEFORCE_LIMIT) -> Solution | None:
    """Scan edge subsets of size 0, 1, ..., k for one leaving the graph free."""
    _check_pattern(pattern)
    g = inst.graph
    edges = g.sorted_edges()
    k = min(inst.budget, len(edges))
    total = sum(comb(len(edges), i) for i in range(k + 1))
    if total > limit:
        raise SolverCapacityError(f"{total} edge subsets exceed the limit of {limit}")
    for size in range(k + 1):
        for drop in combinations(edges, size):
            if is_free(g.remove_edges(drop), pattern):
                return Solution(frozenset(drop))
    return None


def check_solution(inst: Instance, pattern: Graph, sol: Solution) -> bool:
    """True iff the certificate is within budget and really removes every copy."""
    if len(sol.edges) > inst.budget or not sol.edges <= inst.graph.edges:
        return False
    return is_free(inst.graph.remove_edges(sol.edges), pattern)
