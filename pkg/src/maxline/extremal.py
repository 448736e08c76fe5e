"""Generators for the extremal digraphs and the arc-degree test for optimal roots.

Vertex numbering is fixed so generated graphs are bit-reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import Digraph
from .errors import InvalidSize, InvalidSpec


@dataclass(frozen=True)
class StarSpec:
    """A star around one centre: ``x`` arcs in, ``y`` arcs out, ``c`` of them paired into 2-circuits."""

    x: int
    y: int
    c: int

    def __post_init__(self):
        if self.x < 0 or self.y < 0 or self.x + self.y < 1:
            raise InvalidSpec(f"need x, y >= 0 and x + y >= 1, got {self}")
        if not 0 <= self.c <= min(self.x, self.y):
            raise InvalidSpec(f"need 0 <= c <= min(x, y), got {self}")

    @property
    def outer_vertices(self) -> int:
        return self.x + self.y - self.c


def gen_o(m: int) -> Digraph:
    """Centre 0 with ``m // 2`` 2-circuits; for odd ``m`` one more vertex feeding the centre."""
    if m < 2:
        raise InvalidSize(f"gen_o needs m >= 2, got {m}")
    p = m // 2
    arcs = []
    for i in range(1, p + 1):
        arcs += [(0, i), (i, 0)]
    if m % 2:
        arcs.append((p + 1, 0))
    return Digraph(p + 1 + m % 2, arcs)


def gen_max_line(m: int) -> Digraph:
    """Line digraph on ``m`` vertices with the maximum number of arcs, built directly.

    Side A holds ``ceil(m / 2)`` vertices, side B the remaining ``m // 2``.
    Every A->B arc is present, plus the return arc ``B[i] -> A[i]`` for each
    ``i < m // 2``.
    """
    if m < 2:
        raise InvalidSize(f"gen_max_line needs m >= 2, got {m}")
    p = m // 2
    size_a = m - p
    side_b = range(size_a, m)
    arcs = [(a, b) for a in range(size_a) for b in side_b]
    arcs += [(size_a + i, i) for i in range(p)]
    return Digraph(m, arcs)


def gen_star(spec: StarSpec) -> Digraph:
    x, y, c = spec.x, spec.y, spec.c
    arcs = []
    for i in range(1, c + 1):
        arcs += [(0, i), (i, 0)]
    sources = range(c + 1, x + 1)
    sinks = range(x + 1, x + y - c + 1)
    arcs += [(s, 0) for s in sources]
    arcs += [(0, t) for t in sinks]
    return Digraph(spec.outer_vertices + 1, arcs)


def arc_degree_threshold(m: int) -> int:
    return m // 2 + 1 if m % 2 == 0 else (m - 1) // 2


def check_arc_degree_bound(G: Digraph) -> bool:
    """True iff every arc ``(u, v)`` has ``indeg(u) + outdeg(v)`` at least the optimality threshold."""
    threshold = arc_degree_threshold(G.m)
    return all(G.in_degree(u) + G.out_degree(v) >= threshold for u, v in G.arcs)
