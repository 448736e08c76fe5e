"""Line digraph recognition by forbidden patterns, and root reconstruction.

A loop-free digraph is a line digraph exactly when it contains no Eight,
Shortcut or Deviation, and every Z (arcs a->c, b->c, b->d) is closed by
the arc a->d.  Each finder returns the first embedding met in a fixed
lexicographic scan, so verdicts and witnesses are reproducible.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Tuple

from .digraph import Digraph
from .errors import InternalInconsistency, NotLineDigraph


class PatternKind(str, enum.Enum):
    EIGHT = "Eight"
    SHORTCUT = "Shortcut"
    DEVIATION = "Deviation"
    BAD_Z = "BadZ"


@dataclass(frozen=True)
class PatternWitness:
    """An embedding of a forbidden pattern.

    Vertex tuples: Eight ``(v, a, b)``; Shortcut ``(x, y, z)``;
    Deviation ``(u, a, b, v)``; BadZ ``(a, b, c, d)`` with ``(a, d)`` missing.
    """

    kind: PatternKind
    vertices: Tuple[int, ...]

    def required_arcs(self):
        vs = self.vertices
        if self.kind is PatternKind.EIGHT:
            v, a, b = vs
            return [(v, a), (a, v), (v, b), (b, v)]
        if self.kind is PatternKind.SHORTCUT:
            x, y, z = vs
            return [(x, y), (y, z), (x, z)]
        if self.kind is PatternKind.DEVIATION:
            u, a, b, v = vs
            return [(u, a), (a, v), (u, b), (b, v)]
        a, b, c, d = vs
        return [(a, c), (b, c), (b, d)]

    def validate(self, H: Digraph) -> bool:
        """Re-check the embedding against ``H``."""
        vs = self.vertices
        if len(set(vs)) != len(vs) or not all(0 <= v < H.n for v in vs):
            return False
        if not all(H.has_arc(t, h) for t, h in self.required_arcs()):
            return False
        if self.kind is PatternKind.BAD_Z:
            a, _, _, d = vs
            return not H.has_arc(a, d)
        return True

    def __str__(self):
        return f"{self.kind.value} {' '.join(map(str, self.vertices))}"


@dataclass(frozen=True)
class RecognitionVerdict:
    is_line: bool
    witness: Optional[PatternWitness] = None


def find_eight(H: Digraph) -> Optional[PatternWitness]:
    for v in range(H.n):
        partners = [a for a in H.out_adj[v] if H.has_arc(a, v)]
        if len(partners) >= 2:
            return PatternWitness(PatternKind.EIGHT, (v, partners[0], partners[1]))
    return None


def find_shortcut(H: Digraph) -> Optional[PatternWitness]:
    for x in range(H.n):
        for y in H.out_adj[x]:
            for z in H.out_adj[y]:
                if z != x and H.has_arc(x, z):
                    return PatternWitness(PatternKind.SHORTCUT, (x, y, z))
    return None


def find_deviation(H: Digraph) -> Optional[PatternWitness]:
    for u in range(H.n):
        succ = H.out_adj[u]
        for i, a in enumerate(succ):
            targets_a = set(H.out_adj[a])
            for b in succ[i + 1:]:
                for v in H.out_adj[b]:
                    if v != u and v in targets_a:
                        return PatternWitness(PatternKind.DEVIATION, (u, a, b, v))
    return None


def find_bad_z(H: Digraph) -> Optional[PatternWitness]:
    for a in range(H.n):
        for b in range(H.n):
            if b == a:
                continue
            for c in H.out_adj[a]:
                if c == b or not H.has_arc(b, c):
                    continue
                for d in H.out_adj[b]:
                    if d not in (a, c) and not H.has_arc(a, d):
                        return PatternWitness(PatternKind.BAD_Z, (a, b, c, d))
    return None


_DETECTORS = (find_eight, find_shortcut, find_deviation, find_bad_z)


def is_line_digraph(H: Digraph) -> RecognitionVerdict:
    for detect in _DETECTORS:
        witness = detect(H)
        if witness is not None:
            return RecognitionVerdict(False, witness)
    return RecognitionVerdict(True)


class _DisjointSet:
    def __init__(self, size):
        self.parent = list(range(size))

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            # smaller representative wins so class order is deterministic
            if ry < rx:
                rx, ry = ry, rx
            self.parent[ry] = rx


def reconstruct_root(H: Digraph) -> Digraph:
    """Return a root ``G`` with ``line_digraph(G).graph`` isomorphic to ``H``.

    Every vertex ``i`` of ``H`` becomes a root arc with endpoint symbols
    ``tail_i`` and ``head_i``; each arc ``(i, j)`` of ``H`` glues ``head_i``
    to ``tail_j``.  Root vertices are the glued classes, numbered by their
    smallest symbol.  Root arc ``k`` in lexicographic order need not be the
    image of vertex ``k``.
    """
    verdict = is_line_digraph(H)
    if not verdict.is_line:
        raise NotLineDigraph(verdict.witness)
    dsu = _DisjointSet(2 * H.n)
    for i, j in H.arcs:
        dsu.union(2 * i + 1, 2 * j)
    index = {}
    for symbol in range(2 * H.n):
        index.setdefault(dsu.find(symbol), len(index))
    arcs = [(index[dsu.find(2 * i)], index[dsu.find(2 * i + 1)]) for i in range(H.n)]
    if any(t == h for t, h in arcs) or len(set(arcs)) != len(arcs):
        raise InternalInconsistency(f"endpoint gluing of {H!r} produced a loop or parallel arc")
    return Digraph(len(index), arcs)
