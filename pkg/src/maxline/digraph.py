"""Simple loop-free digraphs on dense vertex indices.

A :class:`Digraph` is immutable.  Vertices are ``0..n-1``; arcs are kept
as a sorted tuple of ``(tail, head)`` pairs together with sorted
out-/in-neighbour lists, so equal arc sets always produce identical
objects regardless of the order they were supplied in.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence, Tuple, Union

from .errors import ArcNotPresent, DuplicateArc, LoopArc, VertexOutOfRange


class Arc(NamedTuple):
    tail: int
    head: int


class Digraph:
    __slots__ = ("_n", "_arcs", "_arcset", "_out", "_in")

    def __init__(self, n: int, arcs: Iterable[Tuple[int, int]] = ()):
        if n < 0:
            raise VertexOutOfRange(f"negative vertex count {n}")
        seen = set()
        for tail, head in arcs:
            tail, head = int(tail), int(head)
            if not (0 <= tail < n and 0 <= head < n):
                raise VertexOutOfRange(f"arc ({tail}, {head}) outside 0..{n - 1}")
            if tail == head:
                raise LoopArc(f"loop arc ({tail}, {head})")
            if (tail, head) in seen:
                raise DuplicateArc(f"duplicate arc ({tail}, {head})")
            seen.add((tail, head))
        self._n = n
        self._arcs = tuple(Arc(t, h) for t, h in sorted(seen))
        self._arcset = frozenset(self._arcs)
        out = [[] for _ in range(n)]
        inc = [[] for _ in range(n)]
        for t, h in self._arcs:
            out[t].append(h)
            inc[h].append(t)
        self._out = tuple(tuple(x) for x in out)
        self._in = tuple(tuple(sorted(x)) for x in inc)

    @property
    def n(self) -> int:
        return self._n

    @property
    def arcs(self) -> Tuple[Arc, ...]:
        """Arcs in lexicographic ``(tail, head)`` order."""
        return self._arcs

    @property
    def m(self) -> int:
        return len(self._arcs)

    @property
    def out_adj(self) -> Tuple[Tuple[int, ...], ...]:
        return self._out

    @property
    def in_adj(self) -> Tuple[Tuple[int, ...], ...]:
        return self._in

    def has_arc(self, tail: int, head: int) -> bool:
        return (tail, head) in self._arcset

    def out_degree(self, v: int) -> int:
        return len(self._out[v])

    def in_degree(self, v: int) -> int:
        return len(self._in[v])

    def out_masks(self) -> list:
        """Per-vertex bitmask of out-neighbours (bit ``h`` set for arc ``(v, h)``)."""
        masks = [0] * self._n
        for t, h in self._arcs:
            masks[t] |= 1 << h
        return masks

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self._n == other._n and self._arcs == other._arcs

    def __hash__(self):
        return hash((self._n, self._arcs))

    def __repr__(self):
        arcs = ", ".join(f"({t}, {h})" for t, h in self._arcs)
        return f"Digraph({self._n}, [{arcs}])"


def from_arcs(n: int, arcs: Iterable[Tuple[int, int]]) -> Digraph:
    return Digraph(n, arcs)


def from_out_masks(masks: Sequence[int]) -> Digraph:
    n = len(masks)
    arcs = []
    for t, mask in enumerate(masks):
        while mask:
            low = mask & -mask
            arcs.append((t, low.bit_length() - 1))
            mask ^= low
    return Digraph(n, arcs)


def _check_vertex(G: Digraph, v: int) -> None:
    if not 0 <= v < G.n:
        raise VertexOutOfRange(f"vertex {v} outside 0..{G.n - 1}")


def degrees(G: Digraph, v: int) -> Tuple[int, int]:
    """Return ``(in_degree, out_degree)`` of ``v``."""
    _check_vertex(G, v)
    return G.in_degree(v), G.out_degree(v)


def transpose(G: Digraph) -> Digraph:
    return Digraph(G.n, ((h, t) for t, h in G.arcs))


def remove(G: Digraph, target: Union[int, Tuple[int, int]]) -> Digraph:
    """Delete a vertex or an arc.

    Removing vertex ``v`` drops every incident arc and renumbers the
    vertices above ``v`` down by one, keeping indices dense.
    """
    if isinstance(target, tuple):
        tail, head = target
        if not G.has_arc(tail, head):
            raise ArcNotPresent(f"arc ({tail}, {head}) not in digraph")
        return Digraph(G.n, (a for a in G.arcs if a != (tail, head)))
    v = int(target)
    _check_vertex(G, v)

    def shift(x):
        return x - 1 if x > v else x

    return Digraph(G.n - 1, ((shift(t), shift(h)) for t, h in G.arcs if v not in (t, h)))


def is_connected(G: Digraph) -> bool:
    """Weak connectivity; the graphs on zero or one vertex count as connected."""
    if G.n <= 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in G.out_adj[v] + G.in_adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == G.n


def two_circuits(G: Digraph) -> list:
    """All pairs ``(u, v)`` with ``u < v`` joined in both directions, sorted."""
    return [(t, h) for t, h in G.arcs if t < h and G.has_arc(h, t)]


def disjoint_union(*graphs: Digraph) -> Digraph:
    offset = 0
    arcs = []
    for G in graphs:
        arcs.extend((t + offset, h + offset) for t, h in G.arcs)
        offset += G.n
    return Digraph(offset, arcs)


def relabel(G: Digraph, perm: Sequence[int]) -> Digraph:
    """Apply ``v -> perm[v]``; ``perm`` must be a permutation of ``range(n)``."""
    return Digraph(G.n, ((perm[t], perm[h]) for t, h in G.arcs))


def strip_isolated(G: Digraph) -> Digraph:
    """Drop vertices with no incident arc, keeping the relative order of the rest."""
    keep = [v for v in range(G.n) if G.out_adj[v] or G.in_adj[v]]
    if len(keep) == G.n:
        return G
    index = {v: i for i, v in enumerate(keep)}
    return Digraph(len(keep), ((index[t], index[h]) for t, h in G.arcs))
