"""Per-element insertion graphs and the interference sum over their paths.

One matrix element <f | lam t y> is evaluated by growing patterns letter by
letter: level j of the graph holds every pattern reachable after inserting
f(1)..f(j) while tracking the growth chain encoded by y, and each edge carries
the fundamental-operator value of that step.  The element is the sum over all
source-to-target paths of the product of edge values.

Two evaluation routes exist on purpose: a dynamic-programming accumulation
over the levelled DAG (the default; polynomial per element) and a literal
path enumerator used as a cross-check oracle at small sizes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gt_patterns import GTPattern, from_weyl, insert_letter
from .pattern_calculus import fundamental_element
from .radicals import RadicalSum, SignedRadical
from .tableaux import (
    Configuration,
    StandardTableau,
    WeylTableau,
    chain_from_syt,
    pad,
    strip_zeros,
    validate_configuration,
)


@dataclass(frozen=True)
class Edge:
    source: GTPattern
    target: GTPattern
    letter: int
    taus: tuple[int, ...]
    value: SignedRadical


@dataclass
class InsertionGraph:
    """Levelled DAG for one matrix element.

    ``levels[j]`` lists the patterns reachable after j insertions (level 0 is
    the zero pattern alone) and ``edges[j]`` joins level j to level j+1.
    Zero-valued steps are never materialized as edges.
    """

    n: int
    config: Configuration
    target: GTPattern
    levels: list[list[GTPattern]]
    edges: list[list[Edge]]

    @property
    def vertex_count(self) -> int:
        return sum(len(level) for level in self.levels)

    def all_edges(self) -> list[Edge]:
        return [e for level in self.edges for e in level]


def _check_element(f, lam, t: WeylTableau, y: StandardTableau, n: int):
    lam = strip_zeros(lam)
    if t.shape != lam or y.shape != lam:
        raise ValueError(f"shape mismatch: lambda={lam}, shape(t)={t.shape}, shape(y)={y.shape}")
    f = validate_configuration(f, n, N=sum(lam))
    if t.max_letter() > n:
        raise ValueError(f"tableau letter {t.max_letter()} exceeds n = {n}")
    return f, lam


def build_graph(f, y: StandardTableau, t: WeylTableau, n: int) -> InsertionGraph:
    """Construct the graph for <f | lam t y>, lam = shape(t) = shape(y).

    Intermediate levels hold every pattern reachable so far; the final level
    is filtered to the designated maximal vertex (the pattern of t), which may
    leave it empty when the amplitude is zero.
    """
    f, _ = _check_element(f, y.shape, t, y, n)
    chain = chain_from_syt(y)
    target = from_weyl(t, n)
    level: list[GTPattern] = [GTPattern.zero(n)]
    levels = [level]
    edges: list[list[Edge]] = []
    last = len(f)
    for j, letter in enumerate(f, 1):
        tgt_top = pad(chain[j - 1], n)
        seen: dict[GTPattern, None] = {}
        level_edges: list[Edge] = []
        for v in level:
            for result, shift in insert_letter(v, letter, tgt_top):
                if j == last and result != target:
                    continue
                value = fundamental_element(v, shift)
                if value.is_zero():
                    continue
                level_edges.append(Edge(v, result, letter, shift.taus, value))
                seen[result] = None
        level = list(seen)
        levels.append(level)
        edges.append(level_edges)
    return InsertionGraph(n, f, target, levels, edges)


def _propagate(f, chain, n: int) -> dict[GTPattern, RadicalSum]:
    """Amplitudes of every final-level pattern, accumulated level by level."""
    frontier: dict[GTPattern, RadicalSum] = {GTPattern.zero(n): RadicalSum.one()}
    for j, letter in enumerate(f, 1):
        tgt_top = pad(chain[j - 1], n)
        nxt: dict[GTPattern, RadicalSum] = {}
        for pattern, amp in frontier.items():
            for result, shift in insert_letter(pattern, letter, tgt_top):
                value = fundamental_element(pattern, shift)
                if value.is_zero():
                    continue
                contrib = amp * value
                if result in nxt:
                    nxt[result] = nxt[result] + contrib
                else:
                    nxt[result] = contrib
        frontier = {p: a for p, a in nxt.items() if not a.is_zero()}
        if not frontier:
            return {}
    return frontier


def final_amplitudes(f, chain, n: int) -> dict[GTPattern, RadicalSum]:
    """Bulk entry point used by matrix assembly: all final amplitudes for one
    configuration and one growth chain."""
    return _propagate(tuple(f), tuple(chain), n)


def amplitude(f, lam, t: WeylTableau, y: StandardTableau, n: int, *, by_paths: bool = False) -> RadicalSum:
    """The matrix element <f | lam t y> as a canonical radical sum.

    ``by_paths=True`` switches to the literal path-enumeration oracle, which
    is exponential in the path count but independent of the accumulation
    order.
    """
    f, _ = _check_element(f, lam, t, y, n)
    if by_paths:
        return amplitude_from_paths(build_graph(f, y, t, n))
    final = _propagate(f, chain_from_syt(y), n)
    return final.get(from_weyl(t, n), RadicalSum.zero())


def iter_paths(graph: InsertionGraph, *, reverse: bool = False):
    """Yield every complete source-to-target path as a tuple of edges."""
    steps = len(graph.config)
    adjacency: list[dict[GTPattern, list[Edge]]] = []
    for level_edges in graph.edges:
        by_source: dict[GTPattern, list[Edge]] = {}
        for e in level_edges:
            by_source.setdefault(e.source, []).append(e)
        if reverse:
            for lst in by_source.values():
                lst.reverse()
        adjacency.append(by_source)

    def walk(level: int, vertex: GTPattern, acc: list[Edge]):
        if level == steps:
            if vertex == graph.target:
                yield tuple(acc)
            return
        for e in adjacency[level].get(vertex, ()):
            acc.append(e)
            yield from walk(level + 1, e.target, acc)
            acc.pop()

    if graph.levels and graph.levels[0]:
        yield from walk(0, graph.levels[0][0], [])


def amplitude_from_paths(graph: InsertionGraph, *, reverse: bool = False) -> RadicalSum:
    """Literal sum over paths of the product of edge values (oracle route)."""
    total = RadicalSum.zero()
    for path in iter_paths(graph, reverse=reverse):
        product = SignedRadical.one()
        for e in path:
            product = product * e.value
        total = total + product.canonical()
    return total


def count_paths(graph: InsertionGraph) -> int:
    """Number of complete source-to-target paths, counted by level DP."""
    if not graph.levels or not graph.levels[0]:
        return 0
    counts: dict[GTPattern, int] = {graph.levels[0][0]: 1}
    for level_edges in graph.edges:
        nxt: dict[GTPattern, int] = {}
        for e in level_edges:
            c = counts.get(e.source, 0)
            if c:
                nxt[e.target] = nxt.get(e.target, 0) + c
        counts = nxt
    return counts.get(graph.target, 0)


def path_count(f, lam, t: WeylTableau, y: StandardTableau, n: int) -> int:
    """Distinct zero-to-target paths for one matrix element."""
    f, _ = _check_element(f, lam, t, y, n)
    return count_paths(build_graph(f, y, t, n))
