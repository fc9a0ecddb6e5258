"""Simple undirected graphs and the structural predicates used throughout."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """An immutable simple graph on vertices ``0..n-1``.

    Equality is labeled: two graphs are equal iff they have the same vertex
    count and the same edge set.
    """

    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        for v, nbrs in enumerate(self.adj):
            for u in nbrs:
                if u == v:
                    raise ValueError(f"self-loop at vertex {v}")
                if not 0 <= u < self.n:
                    raise ValueError(f"neighbor {u} of {v} out of range")
                if v not in self.adj[u]:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> Graph:
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(frozenset(s) for s in nbrs))

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> Graph:
        n = len(masks)
        return cls(n, tuple(frozenset(_bits(m)) for m in masks))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Adjacency as one bitmask per vertex."""
        return tuple(sum(1 << u for u in nbrs) for nbrs in self.adj)

    @cached_property
    def edges(self) -> frozenset[Edge]:
        return frozenset((v, u) for v in range(self.n) for u in self.adj[v] if v < u)

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def vertices(self) -> range:
        return range(self.n)

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph, relabeled to ``0..|U|-1`` in increasing id order."""
        order = sorted(set(vertices))
        index = {v: i for i, v in enumerate(order)}
        return Graph.from_edges(
            len(order),
            ((index[u], index[v]) for u, v in self.edges if u in index and v in index),
        )

    def remove_edges(self, edges: Iterable[Edge]) -> Graph:
        drop = {norm_edge(*e) for e in edges}
        missing = drop - self.edges
        if missing:
            raise ValueError(f"edges not in graph: {sorted(missing)}")
        return Graph.from_edges(self.n, self.edges - drop)

    def add_edges(self, edges: Iterable[Edge]) -> Graph:
        return Graph.from_edges(self.n, set(self.edges) | {norm_edge(*e) for e in edges})

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def components(g: Graph) -> list[frozenset[int]]:
    """Vertex sets of the connected components, ordered by smallest member."""
    seen: set[int] = set()
    out = []
    for s in range(g.n):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            v = stack.pop()
            for u in g.adj[v]:
                if u not in comp:
                    comp.add(u)
                    stack.append(u)
        seen |= comp
        out.append(frozenset(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def is_tree(g: Graph) -> bool:
    return is_connected(g) and g.m == g.n - 1


def regular_degree(g: Graph) -> int | None:
    if g.n == 0:
        return None
    degs = set(g.degrees())
    return degs.pop() if len(degs) == 1 else None


def induced_diameter(g: Graph) -> int:
    """Edge count of a longest induced path.

    Exhaustive DFS over induced paths; every vertex added to the path must be
    adjacent to the current endpoint and to no other path vertex.
    """
    if g.n == 0:
        raise ValueError("induced_diameter needs at least one vertex")
    masks = g.masks
    best = 0

    def extend(end: int, blocked: int, length: int) -> None:
        nonlocal best
        if length > best:
            best = length
        # blocked: closed neighbourhoods of all path vertices before ``end``
        for u in _bits(masks[end] & ~blocked):
            extend(u, blocked | masks[end] | (1 << end), length + 1)

    for s in range(g.n):
        extend(s, 1 << s, 0)
    return best


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph.from_masks([full & ~m & ~(1 << v) for v, m in enumerate(g.masks)])


def disjoint_union(gs: Sequence[Graph]) -> Graph:
    edges: list[Edge] = []
    offset = 0
    for g in gs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph.from_edges(offset, edges)


def is_dominating(g: Graph, vertices: Iterable[int]) -> bool:
    members = set(vertices)
    return all(v in members or g.adj[v] & members for v in range(g.n))


# ---------------------------------------------------------------------------
# Named families

def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, ())


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def star(leaves: int) -> Graph:
    """S_l: a centre (vertex 0) with ``leaves`` pendant vertices."""
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def twin_star(left: int, right: int) -> Graph:
    """Adjacent centres 0 and 1 carrying ``left`` and ``right`` leaves."""
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(left)]
    edges += [(1, 2 + left + i) for i in range(right)]
    return Graph.from_edges(left + right + 2, edges)


def matching(t: int, isolated: int = 0) -> Graph:
    """tK2 plus ``isolated`` extra vertices."""
    return Graph.from_edges(2 * t + isolated, ((2 * i, 2 * i + 1) for i in range(t)))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def paw() -> Graph:
    return Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])


@dataclass(frozen=True)
class Instance:
    """A graph together with a deletion budget."""

    graph: Graph
    budget: int

    def __post_init__(self) -> None:
        if self.budget < 0:
            raise ValueError("budget must be non-negative")
