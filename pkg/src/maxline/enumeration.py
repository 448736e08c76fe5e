"""Exhaustive and branch-and-bound search over connected roots with ``m`` arcs.

Connected digraphs with ``m`` arcs are grown one arc at a time from the
classes with ``m - 1`` arcs: every connected digraph keeps a connected
core after deleting a suitable arc (a non-bridge, or a pendant arc whose
leaf then disappears), so adding one arc between existing vertices or to a
fresh vertex reaches every class.  Children are deduplicated by canonical
certificate.  Restricting to connected roots is safe because ``max_arcs``
is strictly superadditive: a disconnected root never reaches the optimum.
"""

from __future__ import annotations

import enum
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from .digraph import Digraph, disjoint_union, two_circuits
from .errors import BoundViolated, InvalidSize, TooLarge
from .extremal import check_arc_degree_bound, gen_o
from .iso import CanonicalForm, canonical_labeling
from .line import line_digraph, max_arcs, phi

EXHAUSTIVE_MAX_ARCS = 7
BRANCH_AND_BOUND_MAX_ARCS = 9


class Mode(str, enum.Enum):
    EXHAUSTIVE = "exhaustive"
    BRANCH_AND_BOUND = "branch_and_bound"


Masks = Tuple[int, ...]
Certificate = Tuple[int, ...]


def _masks_from_certificate(cert: Certificate) -> Masks:
    n = len(cert)
    masks = []
    for row in cert:
        mask = 0
        for j in range(n):
            if row >> (n - 1 - j) & 1:
                mask |= 1 << j
        masks.append(mask)
    return tuple(masks)


def _children(masks: Masks) -> Iterator[List[int]]:
    n = len(masks)
    for u in range(n):
        for v in range(n):
            if u != v and not masks[u] >> v & 1:
                child = list(masks)
                child[u] |= 1 << v
                yield child
    for u in range(n):
        child = list(masks) + [0]
        child[u] |= 1 << n
        yield child
        yield list(masks) + [1 << u]


def _expand(parents: List[Masks]) -> set:
    certs = set()
    for masks in parents:
        for child in _children(masks):
            certs.add(canonical_labeling(child)[0])
    return certs


def _degrees(masks: Masks):
    n = len(masks)
    outdeg = [bin(x).count("1") for x in masks]
    indeg = [0] * n
    for mask in masks:
        while mask:
            low = mask & -mask
            indeg[low.bit_length() - 1] += 1
            mask ^= low
    return indeg, outdeg


def _phi_masks(masks: Masks) -> int:
    indeg, outdeg = _degrees(masks)
    return sum(i * o for i, o in zip(indeg, outdeg))


def gain_bound(masks: Masks, remaining: int) -> int:
    """Upper bound on how much ``phi`` can still grow when ``remaining`` arcs are added.

    Adding arc ``(u, v)`` raises ``phi`` by exactly ``indeg(u) + outdeg(v)``.
    With ``k`` arcs present that is at most ``k + 1`` (only ``(v, u)`` is
    counted twice), and at most ``max indeg + max outdeg``; each earlier
    addition lifts either maximum by at most one.
    """
    indeg, outdeg = _degrees(masks)
    k = sum(outdeg)
    top = max(indeg) + max(outdeg)
    return sum(min(k + i, top + 2 * (i - 1)) for i in range(1, remaining + 1))


def _grow(level: List[Masks], jobs: int) -> List[Certificate]:
    if jobs <= 1 or len(level) < 2 * jobs:
        certs = _expand(level)
    else:
        chunks = [level[i::jobs] for i in range(jobs)]
        certs = set()
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_expand, chunks):
                certs |= part
    return sorted(certs, key=lambda c: (len(c), c))


@lru_cache(maxsize=None)
def _connected_certificates(m: int) -> Tuple[Certificate, ...]:
    if m == 1:
        return (canonical_labeling([0b10, 0])[0],)
    parents = [_masks_from_certificate(c) for c in _connected_certificates(m - 1)]
    return tuple(_grow(parents, 1))


def _search(m: int, mode: Mode, jobs: int) -> List[Certificate]:
    if m == 1 or (mode is Mode.EXHAUSTIVE and jobs <= 1):
        return list(_connected_certificates(m))
    # the extremal construction is a valid starting incumbent
    incumbent = phi(gen_o(m)) if mode is Mode.BRANCH_AND_BOUND else None
    level = [_masks_from_certificate(c) for c in _connected_certificates(1)]
    certs: List[Certificate] = []
    for k in range(1, m):
        if incumbent is not None:
            level = [
                masks for masks in level
                if _phi_masks(masks) + gain_bound(masks, m - k) >= incumbent
            ]
        certs = _grow(level, jobs)
        level = [_masks_from_certificate(c) for c in certs]
    return certs


def enumerate_connected(m: int, sink: Optional[Callable[[Digraph], None]] = None) -> int:
    """Deliver one canonical representative per class of connected digraphs with ``m`` arcs.

    Representatives have no isolated vertices and come in a fixed order
    (vertex count, then certificate).  Returns the number of classes.
    """
    if m < 1:
        raise InvalidSize(f"need m >= 1, got {m}")
    if m > EXHAUSTIVE_MAX_ARCS:
        raise TooLarge(f"exhaustive enumeration is limited to m <= {EXHAUSTIVE_MAX_ARCS}")
    certs = _connected_certificates(m)
    if sink is not None:
        for cert in certs:
            sink(CanonicalForm.from_certificate(cert).to_digraph())
    return len(certs)


def connected_classes(m: int) -> List[Digraph]:
    found: List[Digraph] = []
    enumerate_connected(m, found.append)
    return found


def all_roots(m: int) -> Iterator[Digraph]:
    """One digraph per class of possibly disconnected digraphs with ``m`` arcs and no isolated vertex."""

    def partitions(total, largest):
        if total == 0:
            yield ()
            return
        for part in range(min(total, largest), 0, -1):
            for rest in partitions(total - part, part):
                yield (part,) + rest

    for parts in partitions(m, m):
        sizes = sorted(set(parts), reverse=True)
        per_size = []
        for size in sizes:
            classes = connected_classes(size)
            per_size.append(list(combinations_with_replacement(classes, parts.count(size))))

        def product(i):
            if i == len(per_size):
                yield ()
                return
            for combo in per_size[i]:
                for rest in product(i + 1):
                    yield combo + rest

        for components in product(0):
            yield disjoint_union(*components)


@dataclass
class VerificationReport:
    m: int
    max_phi_found: int
    formula_value: int
    optimal_classes: List[CanonicalForm]
    lemma_checks: Dict[str, Optional[bool]]
    roots_examined: int
    mode: str
    elapsed_seconds: float = field(default=0.0, compare=False)

    @property
    def success(self) -> bool:
        checks_ok = all(v is not False for v in self.lemma_checks.values())
        return self.max_phi_found == self.formula_value and bool(self.optimal_classes) and checks_ok

    def to_dict(self) -> dict:
        data = asdict(self)
        data["optimal_classes"] = [
            {"n": c.n, "arcs": [list(a) for a in c.arcs]} for c in self.optimal_classes
        ]
        return data


def _single_hub(G: Digraph) -> bool:
    return any(all(w in a for a in G.arcs) for w in range(G.n))


def _min_line_degree(G: Digraph) -> int:
    L = line_digraph(G).graph
    return min(L.in_degree(v) + L.out_degree(v) for v in range(L.n))


def verify_max(m: int, mode: Mode | str = Mode.EXHAUSTIVE, jobs: int = 1) -> VerificationReport:
    """Compute the largest ``phi`` over connected roots with ``m`` arcs and check the structural lemmas.

    ``lemma_checks`` maps each check to True/False, or None where it does not
    apply to this ``m`` or mode.  Branch-and-bound never materializes the
    pruned roots, so the all-roots line-degree check is None there.
    """
    mode = Mode(mode)
    if m < 1:
        raise InvalidSize(f"need m >= 1, got {m}")
    limit = EXHAUSTIVE_MAX_ARCS if mode is Mode.EXHAUSTIVE else BRANCH_AND_BOUND_MAX_ARCS
    if m > limit:
        raise TooLarge(f"{mode.value} verification is limited to m <= {limit}")
    start = time.perf_counter()
    certs = _search(m, mode, jobs)
    scored = [(_phi_masks(_masks_from_certificate(c)), c) for c in certs]
    best = max(score for score, _ in scored)
    formula = max_arcs(m)
    if best > formula:
        raise BoundViolated(f"m={m}: found phi {best} above the closed form {formula}")
    optima = sorted(CanonicalForm.from_certificate(c) for score, c in scored if score == best)
    graphs = [c.to_digraph() for c in optima]

    checks: Dict[str, Optional[bool]] = {
        "two_circuit_present": all(two_circuits(G) for G in graphs) if m >= 4 else None,
        "star_incidence": all(_single_hub(G) for G in graphs) if m >= 7 else None,
        "arc_degree_bound": all(check_arc_degree_bound(G) for G in graphs),
        "odd_order_degree_lemma": None,
    }
    if m % 2 == 1 and m >= 7 and mode is Mode.EXHAUSTIVE:
        bound = (m - 1) // 2
        checks["odd_order_degree_lemma"] = all(
            _min_line_degree(CanonicalForm.from_certificate(c).to_digraph()) <= bound for c in certs
        )
    return VerificationReport(
        m=m,
        max_phi_found=best,
        formula_value=formula,
        optimal_classes=optima,
        lemma_checks=checks,
        roots_examined=len(certs),
        mode=mode.value,
        elapsed_seconds=round(time.perf_counter() - start, 3),
    )
