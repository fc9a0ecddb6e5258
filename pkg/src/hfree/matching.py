"""Backtracking pattern matching: induced copies, subgraph copies, isomorphism.

Patterns are small fixed graphs, so the search is plain backtracking over an
ordering of pattern vertices in which (within each component) every vertex
after the first has an already-placed neighbour. Host adjacency is handled
as integer bitmasks, so the consistency test for a candidate is one mask
comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .graph import Edge, Graph, _bits, norm_edge


class SearchCapacityError(RuntimeError):
    """Raised when a search exceeds its step allowance."""


class SearchBudget:
    """Shared step counter; one step per candidate vertex examined."""

    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def spend(self, steps: int = 1) -> None:
        self.used += steps
        if self.used > self.limit:
            raise SearchCapacityError(f"search exceeded {self.limit} steps")


def search_order(pattern: Graph) -> list[int]:
    """Connected-greedy vertex order: most already-placed neighbours first."""
    placed: list[int] = []
    placed_set: set[int] = set()
    remaining = set(range(pattern.n))
    while remaining:
        frontier = [v for v in remaining if pattern.adj[v] & placed_set]
        if frontier:
            v = max(frontier, key=lambda x: (len(pattern.adj[x] & placed_set), pattern.degree(x), -x))
        else:
            v = max(remaining, key=lambda x: (pattern.degree(x), -x))
        placed.append(v)
        placed_set.add(v)
        remaining.discard(v)
    return placed


def embeddings(
    host_masks: Sequence[int],
    pattern: Graph,
    induced: bool,
    budget: SearchBudget | None = None,
) -> Iterator[tuple[int, ...]]:
    """Yield injective maps pattern -> host as tuples indexed by pattern vertex.

    With ``induced`` the map must preserve adjacency and non-adjacency;
    otherwise only pattern edges need to land on host edges (monomorphism).
    """
    p = pattern.n
    n = len(host_masks)
    order = search_order(pattern)
    pos = {v: i for i, v in enumerate(order)}
    steps = []
    for i, v in enumerate(order):
        back = sorted(pos[u] for u in pattern.adj[v] if pos[u] < i)
        steps.append((back, pattern.degree(v)))
    host_deg = [bin(m).count("1") for m in host_masks]
    everything = (1 << n) - 1
    image = [0] * p

    def rec(i: int, used: int) -> Iterator[tuple[int, ...]]:
        if i == p:
            out = [0] * p
            for j, v in enumerate(order):
                out[v] = image[j]
            yield tuple(out)
            return
        back, deg = steps[i]
        need = 0
        for j in back:
            need |= 1 << image[j]
        cand = (host_masks[image[back[0]]] if back else everything) & ~used
        for c in _bits(cand):
            if budget is not None:
                budget.spend()
            if host_deg[c] < deg:
                continue
            hm = host_masks[c]
            if induced:
                if hm & used != need:
                    continue
            elif hm & need != need:
                continue
            image[i] = c
            yield from rec(i + 1, used | (1 << c))

    if p > n:
        return
    yield from rec(0, 0)


def find_induced_copy(
    host: Graph | Sequence[int], pattern: Graph, budget: SearchBudget | None = None
) -> tuple[int, ...] | None:
    """First induced embedding found by the deterministic search, or None."""
    masks = host.masks if isinstance(host, Graph) else host
    return next(embeddings(masks, pattern, induced=True, budget=budget), None)


def enumerate_induced_copies(host: Graph, pattern: Graph) -> list[frozenset[int]]:
    """Vertex sets inducing a copy of ``pattern``, sorted by their sorted ids."""
    found = {frozenset(e) for e in embeddings(host.masks, pattern, induced=True)}
    return sorted(found, key=sorted)


def is_free(host: Graph, pattern: Graph, budget: SearchBudget | None = None) -> bool:
    if pattern.n < 1:
        raise ValueError("pattern must have at least one vertex")
    return find_induced_copy(host, pattern, budget) is None


@dataclass(frozen=True)
class SubgraphCopy:
    """A (not necessarily induced) copy: vertex set, edge set and the chosen
    isomorphism, stored as host vertex -> pattern vertex."""

    vertices: frozenset[int]
    edges: frozenset[Edge]
    iso: tuple[tuple[int, int], ...]

    @property
    def mapping(self) -> dict[int, int]:
        return dict(self.iso)


def enumerate_subgraph_copies(host: Graph, pattern: Graph) -> list[SubgraphCopy]:
    """All distinct (vertex set, edge set) copies of ``pattern`` in ``host``.

    Each copy carries the lexicographically least isomorphism, comparing the
    pattern labels of the copy's vertices in increasing host id order.
    """
    best: dict[tuple[frozenset[int], frozenset[Edge]], tuple[int, ...]] = {}
    pedges = pattern.sorted_edges()
    for emb in embeddings(host.masks, pattern, induced=False):
        verts = frozenset(emb)
        edges = frozenset(norm_edge(emb[a], emb[b]) for a, b in pedges)
        inverse = {h: pv for pv, h in enumerate(emb)}
        labels = tuple(inverse[h] for h in sorted(verts))
        key = (verts, edges)
        if key not in best or labels < best[key]:
            best[key] = labels
    out = []
    for (verts, edges), labels in best.items():
        out.append(SubgraphCopy(verts, edges, tuple(zip(sorted(verts), labels))))
    out.sort(key=lambda c: (sorted(c.vertices), sorted(c.edges)))
    return out


def isomorphism(a: Graph, b: Graph) -> tuple[int, ...] | None:
    """A map b -> a (indexed by b's vertices) witnessing a ≅ b, or None."""
    if a.n != b.n or a.m != b.m or sorted(a.degrees()) != sorted(b.degrees()):
        return None
    return find_induced_copy(a, b)


def are_isomorphic(a: Graph, b: Graph) -> bool:
    return isomorphism(a, b) is not None
