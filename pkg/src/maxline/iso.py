"""Isomorphism testing and canonical forms.

``canonical_form`` runs the canonical-labeling kernel (compiled when
available, pure Python otherwise).  ``are_isomorphic`` is a separate
backtracking matcher with joint colour refinement, so the two can check
each other.  Both ignore isolated vertices.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from typing import Tuple

from . import _canon_py
from .digraph import Digraph, strip_isolated
from .errors import TooLarge

if os.environ.get("MAXLINE_PURE_PYTHON"):
    canonical_labeling = _canon_py.canonical_labeling
    KERNEL = "python"
else:
    try:
        from ._canon import canonical_labeling
        KERNEL = "cython"
    except ImportError:  # pragma: no cover - depends on the build
        canonical_labeling = _canon_py.canonical_labeling
        KERNEL = "python"

CANONICAL_MAX_VERTICES = 16


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Vertex count and sorted arc list of the canonically relabeled digraph."""

    n: int
    arcs: Tuple[Tuple[int, int], ...]

    def to_digraph(self) -> Digraph:
        return Digraph(self.n, self.arcs)

    @classmethod
    def from_certificate(cls, cert) -> "CanonicalForm":
        n = len(cert)
        arcs = tuple(
            (i, j) for i, row in enumerate(cert) for j in range(n) if row >> (n - 1 - j) & 1
        )
        return cls(n, arcs)


def canonical_form(G: Digraph) -> CanonicalForm:
    core = strip_isolated(G)
    if core.n > CANONICAL_MAX_VERTICES:
        raise TooLarge(
            f"canonical_form handles at most {CANONICAL_MAX_VERTICES} non-isolated vertices, got {core.n}"
        )
    cert, _ = canonical_labeling(core.out_masks())
    return CanonicalForm.from_certificate(cert)


def _degree_profile(G: Digraph):
    return sorted((G.in_degree(v), G.out_degree(v)) for v in range(G.n))


def are_isomorphic(G1: Digraph, G2: Digraph) -> bool:
    """Decide isomorphism of the non-isolated parts of two digraphs."""
    G1, G2 = strip_isolated(G1), strip_isolated(G2)
    if G1.n != G2.n or G1.m != G2.m or _degree_profile(G1) != _degree_profile(G2):
        return False
    n = G1.n
    if n == 0:
        return True
    # vertices of G2 are shifted by n in the joint colouring
    out_adj = list(G1.out_adj) + [tuple(h + n for h in hs) for hs in G2.out_adj]
    in_adj = list(G1.in_adj) + [tuple(t + n for t in ts) for ts in G2.in_adj]

    def refine(colors):
        while True:
            sigs = [
                (colors[v], tuple(sorted(colors[w] for w in out_adj[v])),
                 tuple(sorted(colors[w] for w in in_adj[v])))
                for v in range(2 * n)
            ]
            ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
            refined = [ranks[s] for s in sigs]
            if len(ranks) == len(set(colors)):
                return refined
            colors = refined

    def extend(colors):
        colors = refine(colors)
        left = Counter(colors[:n])
        if left != Counter(colors[n:]):
            return False
        split = next((c for c in sorted(left) if left[c] > 1), None)
        if split is None:
            image = {colors[w]: w - n for w in range(n, 2 * n)}
            mapping = [image[colors[v]] for v in range(n)]
            return all(G2.has_arc(mapping[t], mapping[h]) for t, h in G1.arcs)
        v = next(u for u in range(n) if colors[u] == split)
        fresh = max(colors) + 1
        for w in range(n, 2 * n):
            if colors[w] == split:
                trial = list(colors)
                trial[v] = trial[w] = fresh
                if extend(trial):
                    return True
        return False

    return extend([0] * (2 * n))
