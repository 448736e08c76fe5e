"""Line digraph transform, the consecutive-pair count and its closed-form maximum."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Tuple

from .digraph import Arc, Digraph


@dataclass(frozen=True)
class LineDigraph:
    """``graph`` has one vertex per root arc; vertex ``i`` stands for ``labels[i]``."""

    graph: Digraph
    labels: Tuple[Arc, ...]


def line_digraph(G: Digraph) -> LineDigraph:
    """Build L(G): arc ``(i, j)`` whenever root arc ``i`` ends where arc ``j`` starts.

    Line vertices follow the lexicographic order of the root arcs.
    """
    labels = G.arcs
    by_tail = defaultdict(list)
    for j, (tail, _) in enumerate(labels):
        by_tail[tail].append(j)
    arcs = [(i, j) for i, (_, head) in enumerate(labels) for j in by_tail[head]]
    return LineDigraph(Digraph(len(labels), arcs), labels)


def phi(G: Digraph) -> int:
    """Sum over vertices of out-degree times in-degree."""
    return sum(len(o) * len(i) for o, i in zip(G.out_adj, G.in_adj))


def max_arcs(m: int) -> int:
    """Largest arc count of a line digraph on ``m`` vertices.

    Even ``m``: (m/2)^2 + m/2.  Odd ``m``: ((m-1)/2)^2 + m - 1.  Both give 0
    for ``m`` in {0, 1}.
    """
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    half = m // 2
    if m % 2 == 0:
        return half * half + half
    return half * half + 2 * half
