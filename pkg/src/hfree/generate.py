"""Exhaustive and random host graphs.

Non-isomorphic graphs are produced by vertex augmentation: every graph on
``n`` vertices arises from some graph on ``n - 1`` vertices by adding a vertex
with some neighbourhood. Duplicates are removed with a canonical form that
minimises the adjacency code over all orderings compatible with a
colour-refined vertex partition.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import permutations, product

from .graph import Graph


def _refine(g: Graph) -> list[list[int]]:
    """Ordered stable partition by iterated neighbour-colour multisets."""
    colour = [0] * g.n
    while True:
        sig = [(colour[v], tuple(sorted(colour[u] for u in g.adj[v]))) for v in range(g.n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [ranks[s] for s in sig]
        if len(set(new)) == len(set(colour)):
            break
        colour = new
    cells: dict[int, list[int]] = {}
    for v in range(g.n):
        cells.setdefault(colour[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def canonical_form(g: Graph) -> tuple[int, int]:
    """(n, code) that is equal for two graphs iff they are isomorphic.

    ``code`` packs the upper-triangle adjacency matrix under the best ordering.
    Cost is the product of the refined cells' factorials, fine for n <= 8.
    """
    cells = _refine(g)
    pairs = [(i, j) for i in range(g.n) for j in range(i + 1, g.n)]
    best = None
    for choice in product(*(permutations(c) for c in cells)):
        order = [v for cell in choice for v in cell]
        code = 0
        for i, j in pairs:
            code = (code << 1) | (order[j] in g.adj[order[i]])
        if best is None or code > best:
            best = code
    return g.n, best or 0


def from_canonical(n: int, code: int) -> Graph:
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = [pair for bit, pair in enumerate(reversed(pairs)) if code >> bit & 1]
    return Graph.from_edges(n, edges)


def canonical_graph(g: Graph) -> Graph:
    return from_canonical(*canonical_form(g))


@lru_cache(maxsize=None)
def nonisomorphic_graphs(n: int) -> tuple[Graph, ...]:
    """One canonical representative per isomorphism class on ``n`` vertices."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return (Graph(0, ()),)
    seen: set[tuple[int, int]] = set()
    for base in nonisomorphic_graphs(n - 1):
        for nbrs in range(1 << (n - 1)):
            edges = list(base.edges)
            edges += [(u, n - 1) for u in range(n - 1) if nbrs >> u & 1]
            seen.add(canonical_form(Graph.from_edges(n, edges)))
    return tuple(from_canonical(*key) for key in sorted(seen))


def graphs_up_to(n: int, start: int = 1) -> list[Graph]:
    return [g for size in range(start, n + 1) for g in nonisomorphic_graphs(size)]


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)
