"""Pure-Python canonical labeling kernel.

Mirrors ``_canon.pyx`` exactly; used when the compiled extension is absent
and as the reference the extension is tested against.

Certificate
    For a labeling ``lab`` (position -> vertex) row ``i`` is the integer whose
    bit ``n - 1 - j`` is set iff ``lab[i] -> lab[j]`` is an arc.  The
    canonical certificate is the lexicographically largest row tuple over the
    leaves of an individualization-refinement search, which is the same as
    the lexicographically smallest sorted arc list over those leaves.
"""

MAXN = 32
_MAX_AUTOMORPHISMS = 64


def _refine(n, out_masks, in_masks, colors):
    # colors: dense ranks 0..k-1; returns the coarsest equitable refinement
    k = max(colors) + 1 if n else 0
    while True:
        sigs = []
        for v in range(n):
            out_count = [0] * k
            in_count = [0] * k
            mask = out_masks[v]
            while mask:
                low = mask & -mask
                out_count[colors[low.bit_length() - 1]] += 1
                mask ^= low
            mask = in_masks[v]
            while mask:
                low = mask & -mask
                in_count[colors[low.bit_length() - 1]] += 1
                mask ^= low
            sigs.append((colors[v], tuple(out_count), tuple(in_count)))
        distinct = sorted(set(sigs))
        if len(distinct) == k:
            return colors
        rank = {s: i for i, s in enumerate(distinct)}
        colors = [rank[s] for s in sigs]
        k = len(distinct)


def _twin_classes(n, out_masks, in_masks):
    # u ~ v iff swapping u and v is an automorphism
    cls = list(range(n))
    for v in range(n):
        for u in range(v):
            if cls[u] != u:
                continue
            keep = ~((1 << u) | (1 << v))
            if (
                (out_masks[u] & keep) == (out_masks[v] & keep)
                and (in_masks[u] & keep) == (in_masks[v] & keep)
                and bool(out_masks[u] >> v & 1) == bool(out_masks[v] >> u & 1)
            ):
                cls[v] = u
                break
    return cls


def _orbit(start, generators):
    orbit = {start}
    frontier = [start]
    while frontier:
        x = frontier.pop()
        for g in generators:
            y = g[x]
            if y not in orbit:
                orbit.add(y)
                frontier.append(y)
    return orbit


def canonical_labeling(out_masks):
    """Return ``(certificate, lab)`` for the digraph given by per-vertex out-masks.

    ``lab[i]`` is the original vertex placed at canonical position ``i``.
    """
    n = len(out_masks)
    if n > MAXN:
        raise ValueError(f"canonical labeling supports at most {MAXN} vertices, got {n}")
    if n == 0:
        return (), []
    out_masks = list(out_masks)
    in_masks = [0] * n
    for t in range(n):
        mask = out_masks[t]
        while mask:
            low = mask & -mask
            in_masks[low.bit_length() - 1] |= 1 << t
            mask ^= low
    twins = _twin_classes(n, out_masks, in_masks)
    best = [None, None]
    automorphisms = []

    def leaf(colors):
        lab = [0] * n
        for v, c in enumerate(colors):
            lab[c] = v
        pos = colors
        rows = []
        for i in range(n):
            mask = out_masks[lab[i]]
            row = 0
            while mask:
                low = mask & -mask
                row |= 1 << (n - 1 - pos[low.bit_length() - 1])
                mask ^= low
            rows.append(row)
        cert = tuple(rows)
        if best[0] is None or cert > best[0]:
            best[0], best[1] = cert, lab
        elif cert == best[0] and len(automorphisms) < _MAX_AUTOMORPHISMS:
            gamma = [0] * n
            for i in range(n):
                gamma[best[1][i]] = lab[i]
            automorphisms.append(gamma)

    def search(colors, fixed):
        k = max(colors) + 1
        if k == n:
            leaf(colors)
            return
        sizes = [0] * k
        for c in colors:
            sizes[c] += 1
        target = next(c for c in range(k) if sizes[c] > 1)
        cell = [v for v in range(n) if colors[v] == target]
        tried = []
        for v in cell:
            if any(twins[u] == twins[v] for u in tried):
                continue
            if tried:
                gens = [g for g in automorphisms if all(g[f] == f for f in fixed)]
                if gens:
                    orbit = _orbit(v, gens)
                    if any(u in orbit for u in tried):
                        continue
            split = [2 * c + 1 for c in colors]
            split[v] = 2 * target
            ranks = {c: i for i, c in enumerate(sorted(set(split)))}
            child = _refine(n, out_masks, in_masks, [ranks[c] for c in split])
            search(child, fixed + [v])
            tried.append(v)

    search(_refine(n, out_masks, in_masks, [0] * n), [])
    return best[0], best[1]
