"""Line-oriented text format for graphs and instances.

A graph file is a ``p edge <n> <m>`` header followed by exactly ``m`` lines
``e <u> <v>`` with 1-based endpoints. Instance files add a single
``k <budget>`` line. Lines starting with ``#`` are comments.
"""

from __future__ import annotations

from pathlib import Path

from .graph import Graph, Instance


class GraphFormatError(ValueError):
    """Base class for malformed graph or instance text."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class HeaderError(GraphFormatError):
    pass


class EdgeCountError(GraphFormatError):
    pass


class DuplicateEdgeError(GraphFormatError):
    pass


class EndpointRangeError(GraphFormatError):
    pass


class SelfLoopError(GraphFormatError):
    pass


class BudgetLineError(GraphFormatError):
    pass


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line.split()


def _parse(text: str, with_budget: bool) -> tuple[Graph, int | None]:
    lines = list(_content_lines(text))
    if not lines:
        raise HeaderError("missing 'p edge <n> <m>' header")
    lineno, head = lines[0]
    if len(head) != 4 or head[0] != "p" or head[1] != "edge":
        raise HeaderError("expected 'p edge <n> <m>'", lineno)
    try:
        n, m = int(head[2]), int(head[3])
    except ValueError:
        raise HeaderError("vertex and edge counts must be integers", lineno) from None
    if n < 0 or m < 0:
        raise HeaderError("counts must be non-negative", lineno)

    edges: set[tuple[int, int]] = set()
    budget = None
    for lineno, tok in lines[1:]:
        if tok[0] == "e":
            if len(tok) != 3:
                raise GraphFormatError("expected 'e <u> <v>'", lineno)
            try:
                u, v = int(tok[1]), int(tok[2])
            except ValueError:
                raise GraphFormatError("endpoints must be integers", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise EndpointRangeError(f"endpoint outside 1..{n}", lineno)
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}", lineno)
            e = (min(u, v) - 1, max(u, v) - 1)
            if e in edges:
                raise DuplicateEdgeError(f"duplicate edge {u} {v}", lineno)
            edges.add(e)
        elif tok[0] == "k" and with_budget:
            if budget is not None:
                raise BudgetLineError("more than one budget line", lineno)
            if len(tok) != 2 or not tok[1].isdigit():
                raise BudgetLineError("expected 'k <budget>' with budget >= 0", lineno)
            budget = int(tok[1])
        else:
            raise GraphFormatError(f"unexpected line starting with {tok[0]!r}", lineno)
    if len(edges) != m:
        raise EdgeCountError(f"header declares {m} edges, found {len(edges)}")
    if with_budget and budget is None:
        raise BudgetLineError("missing 'k <budget>' line")
    return Graph.from_edges(n, edges), budget


def parse_graph(text: str) -> Graph:
    return _parse(text, with_budget=False)[0]


def parse_instance(text: str) -> Instance:
    g, k = _parse(text, with_budget=True)
    return Instance(g, k)


def format_graph(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def format_instance(inst: Instance) -> str:
    return format_graph(inst.graph) + f"k {inst.budget}\n"


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())


def read_instance(path: str | Path) -> Instance:
    return parse_instance(Path(path).read_text())
