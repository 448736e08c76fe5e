"""Edge-list and DOT serialization.

Edge-list documents hold an optional ``n <count>`` header followed by one
``tail head`` pair per line.  ``#`` starts a comment and blank lines are
skipped.  Without a header the vertex count is one more than the largest
index used.
"""

from __future__ import annotations

from .digraph import Digraph
from .errors import DuplicateArc, LoopArc, ParseError


def parse_edge_list(text: str) -> Digraph:
    n = None
    arcs = []
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if n is not None:
                raise ParseError(lineno, "repeated 'n' header")
            if arcs:
                raise ParseError(lineno, "'n' header must precede the arcs")
            if len(tokens) != 2:
                raise ParseError(lineno, "expected 'n <count>'")
            n = _parse_int(tokens[1], lineno)
            continue
        if len(tokens) != 2:
            raise ParseError(lineno, f"expected 'tail head', got {line!r}")
        tail, head = (_parse_int(tok, lineno) for tok in tokens)
        if tail == head:
            raise LoopArc(f"line {lineno}: loop arc ({tail}, {head})")
        if (tail, head) in seen:
            raise DuplicateArc(
                f"line {lineno}: duplicate arc ({tail}, {head}), first on line {seen[(tail, head)]}"
            )
        seen[(tail, head)] = lineno
        arcs.append((tail, head))
    if n is None:
        n = 1 + max((max(a) for a in arcs), default=-1)
    else:
        for tail, head in arcs:
            if max(tail, head) >= n:
                raise ParseError(seen[(tail, head)], f"vertex index outside 0..{n - 1}")
    return Digraph(n, arcs)


def _parse_int(token: str, lineno: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(lineno, f"not an integer: {token!r}") from None
    if value < 0:
        raise ParseError(lineno, f"negative value {value}")
    return value


def emit(G: Digraph, fmt: str = "edges") -> str:
    if fmt == "edges":
        lines = [f"n {G.n}"] + [f"{t} {h}" for t, h in G.arcs]
    elif fmt == "dot":
        lines = ["digraph G {"]
        lines += [f"  {v};" for v in range(G.n)]
        lines += [f"  {t} -> {h};" for t, h in G.arcs]
        lines.append("}")
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return "\n".join(lines) + "\n"
