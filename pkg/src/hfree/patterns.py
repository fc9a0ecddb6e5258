"""Recognition of forbidden-graph classes and their structural witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .generate import canonical_form
from .graph import Graph, components, induced_diameter, is_connected, is_tree, regular_degree
from .matching import are_isomorphic

KINDS = (
    "PolynomialTime",
    "Star",
    "TwinStar",
    "GeneralTree",
    "Cycle",
    "RegularHigh",
    "MatchingUnion",
    "CompositeLargest",
    "Unsupported",
)


@dataclass(frozen=True)
class CarvingSet:
    vertices: frozenset[int]
    shape: str  # "P3", "K3" or "other-connected"


@dataclass(frozen=True)
class LargestComponent:
    component: Graph
    copies: int
    leftover: tuple[Graph, ...]
    members: frozenset[int]
    # several largest components exist and not all are isomorphic
    ambiguous: bool = False


@dataclass(frozen=True)
class ClassificationResult:
    kind: str
    params: tuple[int, ...] = ()
    witness: frozenset[int] | None = None
    inner: ClassificationResult | None = None
    largest: LargestComponent | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")

    @property
    def supported(self) -> bool:
        return self.kind not in ("PolynomialTime", "Unsupported")

    def describe(self) -> str:
        """Short form such as ``Star(4)`` or ``CompositeLargest(Cycle(3),t=1)``."""
        if self.kind == "CompositeLargest" and self.inner is not None:
            return f"{self.kind}({self.inner.describe()},t={self.params[0]})"
        if not self.params:
            return self.kind
        return f"{self.kind}({','.join(map(str, self.params))})"

    def format(self) -> str:
        if self.kind == "CompositeLargest":
            assert self.inner is not None and self.largest is not None
            left = "+".join(f"{g.n}:{g.m}" for g in self.largest.leftover) or "-"
            params = f"inner={self.inner.describe()};t={self.largest.copies};leftover={left}"
        else:
            params = ",".join(map(str, self.params)) or "-"
        witness = ",".join(str(v + 1) for v in sorted(self.witness)) if self.witness else "-"
        return f"class={self.kind} params={params} witness={witness}"


def recognize_star(g: Graph) -> int | None:
    if not is_tree(g) or g.n < 3:
        return None
    leaves = g.n - 1
    return leaves if max(g.degrees()) == leaves else None


def _centres(t: Graph) -> list[int]:
    return [v for v in range(t.n) if t.degree(v) >= 2]


def recognize_twin_star(g: Graph) -> tuple[int, int] | None:
    if not is_tree(g) or g.n < 4:
        return None
    centres = _centres(g)
    if len(centres) != 2 or not g.has_edge(*centres):
        return None
    a, b = (g.degree(c) - 1 for c in centres)
    return (min(a, b), max(a, b))


def strip_leaves(t: Graph) -> Graph:
    """Remove every leaf of a tree of induced diameter > 3."""
    if not is_tree(t):
        raise ValueError("strip_leaves needs a tree")
    if induced_diameter(t) <= 3:
        raise ValueError("strip_leaves needs induced diameter > 3")
    return t.induced(_centres(t))


def _shape(h: Graph) -> str:
    if h.n == 3:
        return {2: "P3", 3: "K3"}.get(h.m, "other-connected")
    return "other-connected"


def iter_carving_sets(h: Graph, d: int) -> Iterator[CarvingSet]:
    """Size-d connected sets whose removal leaves h connected, in lex order."""
    for subset in combinations(range(h.n), d):
        inside = h.induced(subset)
        if not is_connected(inside):
            continue
        rest = [v for v in range(h.n) if v not in subset]
        if rest and not is_connected(h.induced(rest)):
            continue
        yield CarvingSet(frozenset(subset), _shape(inside))


def find_carving_set(h: Graph, d: int) -> CarvingSet | None:
    if d < 1:
        raise ValueError("d must be positive")
    return next(iter_carving_sets(h, d), None)


def _tree_or_regular(g: Graph) -> bool:
    return is_tree(g) or regular_degree(g) is not None


def choose_largest_component(h: Graph) -> LargestComponent:
    """Pick a largest component, preferring trees and regular graphs.

    Remaining ties go to the smallest canonical form. Returns the chosen
    component (relabelled), how many components are isomorphic to it, the
    other components, and the vertex ids of all copies.
    """
    if h.n == 0:
        raise ValueError("graph has no vertices")
    comps = components(h)
    size = max(len(c) for c in comps)
    largest = [c for c in comps if len(c) == size]
    graphs = {c: h.induced(c) for c in comps}

    def rank(c: frozenset[int]):
        g = graphs[c]
        return (not _tree_or_regular(g), canonical_form(g), min(c))

    chosen = min(largest, key=rank)
    h1 = graphs[chosen]
    same = [c for c in comps if len(c) == size and are_isomorphic(graphs[c], h1)]
    others = [graphs[c] for c in comps if c not in same]
    members = frozenset().union(*same)
    return LargestComponent(
        component=h1,
        copies=len(same),
        leftover=tuple(others),
        members=members,
        ambiguous=len(same) != len(largest),
    )


def _matching_union(h: Graph) -> tuple[int, int] | None:
    if max(h.degrees(), default=0) > 1:
        return None
    return h.m, h.n - 2 * h.m


def _classify_connected(h: Graph) -> ClassificationResult:
    r = regular_degree(h)
    if r == 2:
        return ClassificationResult("Cycle", (h.n,))
    if r is not None and r >= 3:
        carving = preferred_carving_set(h)
        return ClassificationResult("RegularHigh", (r,), witness=carving.vertices)
    if is_tree(h):
        leaves = recognize_star(h)
        if leaves is not None:
            return ClassificationResult("Star", (leaves,))
        twin = recognize_twin_star(h)
        if twin is not None:
            return ClassificationResult("TwinStar", twin)
        return ClassificationResult("GeneralTree", (induced_diameter(h),))
    return ClassificationResult("Unsupported")


def preferred_carving_set(h: Graph) -> CarvingSet:
    """Size-3 carving set, preferring an induced P3 over a triangle."""
    found = list(iter_carving_sets(h, 3))
    if not found:
        raise RuntimeError("connected graph of minimum degree >= 3 without a carving set")
    for c in found:
        if c.shape == "P3":
            return c
    return found[0]


def classify(h: Graph) -> ClassificationResult:
    if h.n < 1:
        raise ValueError("pattern must have at least one vertex")
    if h.m <= 1:
        return ClassificationResult("PolynomialTime")
    mu = _matching_union(h)
    if mu is not None:
        return ClassificationResult("MatchingUnion", mu)
    if is_connected(h):
        return _classify_connected(h)
    largest = choose_largest_component(h)
    h1 = largest.component
    if h1.m >= 2 and _tree_or_regular(h1):
        inner = _classify_connected(h1)
        if inner.supported:
            return ClassificationResult(
                "CompositeLargest",
                (largest.copies,),
                witness=largest.members,
                inner=inner,
                largest=largest,
            )
    return ClassificationResult("Unsupported")
