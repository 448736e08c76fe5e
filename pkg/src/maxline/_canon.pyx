# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled canonical labeling kernel; same algorithm and certificate as ``_canon_py``."""

from libc.string cimport memcpy, memset

cdef enum:
    CMAXN = 32
    CMAXAUT = 64

MAXN = CMAXN

ctypedef unsigned long long u64


cdef struct State:
    int n
    u64 out_m[CMAXN]
    u64 in_m[CMAXN]
    int twins[CMAXN]
    int have_best
    u64 best[CMAXN]
    int best_lab[CMAXN]
    int n_aut
    int auts[CMAXAUT][CMAXN]


cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int _lowbit_index(u64 x) nogil:
    return __builtin_ctzll(x)


cdef int _compare_sig(int* a, int* b, int length) nogil:
    cdef int i
    for i in range(length):
        if a[i] != b[i]:
            return -1 if a[i] < b[i] else 1
    return 0


cdef void _refine(State* s, int* colors) nogil:
    cdef int n = s.n
    cdef int sig[CMAXN][1 + 2 * CMAXN]
    cdef int order[CMAXN]
    cdef int newc[CMAXN]
    cdef int k, v, i, j, t, length, distinct
    cdef u64 mask
    k = 0
    for v in range(n):
        if colors[v] + 1 > k:
            k = colors[v] + 1
    while True:
        length = 1 + 2 * k
        for v in range(n):
            memset(&sig[v][0], 0, length * sizeof(int))
            sig[v][0] = colors[v]
            mask = s.out_m[v]
            while mask:
                sig[v][1 + colors[_lowbit_index(mask)]] += 1
                mask &= mask - 1
            mask = s.in_m[v]
            while mask:
                sig[v][1 + k + colors[_lowbit_index(mask)]] += 1
                mask &= mask - 1
        for i in range(n):
            order[i] = i
        for i in range(1, n):
            t = order[i]
            j = i - 1
            while j >= 0 and _compare_sig(&sig[order[j]][0], &sig[t][0], length) > 0:
                order[j + 1] = order[j]
                j -= 1
            order[j + 1] = t
        distinct = 0
        for i in range(n):
            if i > 0 and _compare_sig(&sig[order[i - 1]][0], &sig[order[i]][0], length) != 0:
                distinct += 1
            newc[order[i]] = distinct
        distinct += 1
        if distinct == k:
            return
        memcpy(colors, newc, n * sizeof(int))
        k = distinct


cdef void _leaf(State* s, int* colors) nogil:
    cdef int n = s.n
    cdef int lab[CMAXN]
    cdef u64 rows[CMAXN]
    cdef int i, v, cmp
    cdef u64 mask, row
    for v in range(n):
        lab[colors[v]] = v
    for i in range(n):
        mask = s.out_m[lab[i]]
        row = 0
        while mask:
            row |= (<u64>1) << (n - 1 - colors[_lowbit_index(mask)])
            mask &= mask - 1
        rows[i] = row
    cmp = 1
    if s.have_best:
        cmp = 0
        for i in range(n):
            if rows[i] != s.best[i]:
                cmp = 1 if rows[i] > s.best[i] else -1
                break
    if cmp > 0:
        s.have_best = 1
        memcpy(s.best, rows, n * sizeof(u64))
        memcpy(s.best_lab, lab, n * sizeof(int))
    elif cmp == 0 and s.n_aut < CMAXAUT:
        for i in range(n):
            s.auts[s.n_aut][s.best_lab[i]] = lab[i]
        s.n_aut += 1


cdef int _in_orbit_of_tried(State* s, int v, int* tried, int ntried, int* fixed, int nfixed) nogil:
    cdef int usable[CMAXAUT]
    cdef int nus = 0
    cdef int a, f, ok, i, x, y, head, tail
    cdef int seen[CMAXN]
    cdef int queue[CMAXN]
    for a in range(s.n_aut):
        ok = 1
        for f in range(nfixed):
            if s.auts[a][fixed[f]] != fixed[f]:
                ok = 0
                break
        if ok:
            usable[nus] = a
            nus += 1
    if nus == 0:
        return 0
    memset(seen, 0, s.n * sizeof(int))
    seen[v] = 1
    queue[0] = v
    head = 0
    tail = 1
    while head < tail:
        x = queue[head]
        head += 1
        for i in range(nus):
            y = s.auts[usable[i]][x]
            if not seen[y]:
                seen[y] = 1
                queue[tail] = y
                tail += 1
    for i in range(ntried):
        if seen[tried[i]]:
            return 1
    return 0


cdef void _search(State* s, int* colors, int* fixed, int nfixed) nogil:
    cdef int n = s.n
    cdef int k = 0
    cdef int sizes[CMAXN]
    cdef int tried[CMAXN]
    cdef int child[CMAXN]
    cdef int ntried = 0
    cdef int v, u, c, target, skip, i
    for v in range(n):
        if colors[v] + 1 > k:
            k = colors[v] + 1
    if k == n:
        _leaf(s, colors)
        return
    memset(sizes, 0, k * sizeof(int))
    for v in range(n):
        sizes[colors[v]] += 1
    target = 0
    while sizes[target] <= 1:
        target += 1
    for v in range(n):
        if colors[v] != target:
            continue
        skip = 0
        for i in range(ntried):
            if s.twins[tried[i]] == s.twins[v]:
                skip = 1
                break
        if skip:
            continue
        if ntried and _in_orbit_of_tried(s, v, tried, ntried, fixed, nfixed):
            continue
        # individualize v ahead of the rest of its cell, then compact ranks
        for u in range(n):
            c = colors[u]
            if u == v:
                child[u] = c
            elif c >= target:
                child[u] = c + 1
            else:
                child[u] = c
        _refine(s, child)
        fixed[nfixed] = v
        _search(s, child, fixed, nfixed + 1)
        tried[ntried] = v
        ntried += 1


def canonical_labeling(out_masks):
    """Return ``(certificate, lab)``; see ``_canon_py.canonical_labeling``."""
    cdef State s
    cdef int n = len(out_masks)
    cdef int colors[CMAXN]
    cdef int fixed[CMAXN]
    cdef int t, u, v
    cdef u64 keep, mask
    if n > CMAXN:
        raise ValueError(f"canonical labeling supports at most {CMAXN} vertices, got {n}")
    if n == 0:
        return (), []
    s.n = n
    s.have_best = 0
    s.n_aut = 0
    for t in range(n):
        s.in_m[t] = 0
    for t in range(n):
        mask = <u64>out_masks[t]
        s.out_m[t] = mask
        while mask:
            s.in_m[_lowbit_index(mask)] |= (<u64>1) << t
            mask &= mask - 1
    for v in range(n):
        s.twins[v] = v
        for u in range(v):
            if s.twins[u] != u:
                continue
            keep = ~(((<u64>1) << u) | ((<u64>1) << v))
            if ((s.out_m[u] & keep) == (s.out_m[v] & keep)
                    and (s.in_m[u] & keep) == (s.in_m[v] & keep)
                    and ((s.out_m[u] >> v) & 1) == ((s.out_m[v] >> u) & 1)):
                s.twins[v] = u
                break
    with nogil:
        for v in range(n):
            colors[v] = 0
        _refine(&s, colors)
        _search(&s, colors, fixed, 0)
    cert = tuple([s.best[i] for i in range(n)])
    lab = [s.best_lab[i] for i in range(n)]
    return cert, lab
