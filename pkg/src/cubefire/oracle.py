"""Brute-force cross-checks, deliberately independent of the fast paths.

search_partition settles (non-)existence of a left cyclic partition of a
given order over the whole assignment space; census evolves every
orientation of a tiny cube; reference_period re-detects periods the naive
way (full trajectory list, linear scan).
"""

import random
from dataclasses import dataclass

from .dynamics import Orientation, _low_mask, _swap, evolve
from .hypercube import neighbors
from .partition import LeftCyclicPartition, validate

SEARCH_DIM_CAP = 4
CENSUS_DIM_CAP = 3


@dataclass(frozen=True)
class SearchOutcome:
    found: bool
    witness: LeftCyclicPartition | None
    nodes_explored: int


def search_partition(n: int, k: int) -> SearchOutcome:
    """Backtracking search for a left cyclic partition of order k on H_n.

    Exhaustive up to symmetry: vertex 0 is pinned to class 0 (any valid
    partition can be rotated so that holds, and rotation preserves
    validity), vertices are assigned in breadth-first order from 0, and a
    branch is cut as soon as a class contains an edge or some fully
    surrounded vertex lacks a neighbor in its predecessor class.
    """
    if n < 1:
        raise ValueError(f"search needs dimension >= 1, got {n}")
    if n > SEARCH_DIM_CAP:
        raise ValueError(
            f"search supported only for n <= {SEARCH_DIM_CAP}: the assignment "
            f"space at n={n}, k={k} holds about {k}**{1 << n} nodes"
        )
    size = 1 << n
    if not 1 <= k <= size:
        raise ValueError(f"order must lie in [1, 2^{n}], got {k}")

    order = sorted(range(size), key=lambda v: (v.bit_count(), v))
    nbrs = [sorted(neighbors(v, n)) for v in range(size)]
    cls: list[int | None] = [None] * size
    unassigned_nb = [n] * size
    has_pred = [False] * size
    class_size = [0] * k
    nodes = 0

    def coverable(v: int) -> bool:
        # assigned vertex v can still acquire a predecessor-class neighbor
        return has_pred[v] or unassigned_nb[v] > 0

    def assign(v: int, c: int):
        cls[v] = c
        class_size[c] += 1
        has_pred[v] = any(cls[w] == (c - 1) % k for w in nbrs[v])
        for w in nbrs[v]:
            unassigned_nb[w] -= 1
            if cls[w] is not None and c == (cls[w] - 1) % k:
                has_pred[w] = True

    def unassign(v: int, c: int):
        cls[v] = None
        class_size[c] -= 1
        has_pred[v] = False
        for w in nbrs[v]:
            unassigned_nb[w] += 1
            if cls[w] is not None and c == (cls[w] - 1) % k:
                # recompute: v may not have been the only provider
                has_pred[w] = any(cls[x] == (cls[w] - 1) % k for x in nbrs[w])

    def feasible_after(v: int) -> bool:
        if not coverable(v):
            return False
        for w in nbrs[v]:
            if cls[w] is not None and not coverable(w):
                return False
        return True

    def backtrack(idx: int) -> bool:
        nonlocal nodes
        if idx == size:
            return all(class_size[c] > 0 for c in range(k))
        remaining = size - idx
        empty = sum(1 for c in range(k) if class_size[c] == 0)
        if empty > remaining:
            return False
        v = order[idx]
        choices = (0,) if idx == 0 else range(k)
        for c in choices:
            if any(cls[w] == c for w in nbrs[v]):
                continue  # would put an edge inside class c
            nodes += 1
            assign(v, c)
            if feasible_after(v) and backtrack(idx + 1):
                return True
            unassign(v, c)
        return False

    found = backtrack(0)
    witness = None
    if found:
        sets = [[v for v in range(size) if cls[v] == c] for c in range(k)]
        witness = LeftCyclicPartition.from_sets(n, sets)
        if not validate(witness).valid:
            raise AssertionError("search produced a witness the validator rejects")
    return SearchOutcome(found, witness, nodes)


@dataclass(frozen=True)
class PeriodCensus:
    n: int
    entries: dict  # (period, transient) -> orientation count
    total: int

    def periods(self) -> set[int]:
        return {p for p, _ in self.entries}

    def to_doc(self) -> dict:
        return {
            "n": self.n,
            "total": self.total,
            "entries": [
                {"period": p, "transient": q, "count": c}
                for (p, q), c in sorted(self.entries.items())
            ],
        }


def census(n: int) -> PeriodCensus:
    """Evolve every one of the 2^(n*2^(n-1)) orientations of H_n under the
    parallel schedule and tabulate (chip period, transient) pairs."""
    if n < 1:
        raise ValueError(f"census needs dimension >= 1, got {n}")
    if n > CENSUS_DIM_CAP:
        raise ValueError(
            f"census supported only for n <= {CENSUS_DIM_CAP}: H_{n} has "
            f"2**{n * (1 << (n - 1))} orientations"
        )
    n_edges = n * (1 << (n - 1))
    entries: dict[tuple[int, int], int] = {}
    for code in range(1 << n_edges):
        bits = [(code >> i) & 1 for i in range(n_edges)]
        result = evolve(Orientation.from_direction_bits(n, bits))
        key = (result.period, result.transient)
        entries[key] = entries.get(key, 0) + 1
    return PeriodCensus(n, entries, 1 << n_edges)


def random_orientation(n: int, rng: random.Random) -> Orientation:
    """Every edge direction an independent fair bit from the given generator.

    Planes are filled directly (one random bit per low edge endpoint, the
    partner bit complemented) so sampling H_16 stays cheap.
    """
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    size = 1 << n
    full = (1 << size) - 1
    planes = []
    for d in range(n):
        low = _low_mask(n, d)
        b = rng.getrandbits(size) & low
        planes.append(b | (full & ~low & ~_swap(b, n, d)))
    return Orientation(n, tuple(planes))


def reference_period(orientation: Orientation, max_steps: int = 1 << 20):
    """Naive (transient, period) detector: step chip counts directly with
    per-vertex arithmetic, keep the whole trajectory in a list, and find the
    first repeat by linear scan.

    Returns (q, p), or None when max_steps ran out first.
    """
    if max_steps < 1:
        raise ValueError(f"max_steps must be >= 1, got {max_steps}")
    n = orientation.n
    size = 1 << n
    nbrs = [sorted(neighbors(v, n)) for v in range(size)]

    # in-degrees recomputed from the wire format, not from the fast kernel
    counts = [0] * size
    bits = orientation.direction_bits()
    i = 0
    for d in range(n):
        step = 1 << d
        for u in range(size):
            if u & step:
                continue
            counts[u | step if bits[i] else u] += 1
            i += 1

    state = tuple(counts)
    history = [state]
    for t in range(1, max_steps + 1):
        fired = [v for v in range(size) if state[v] == n]
        nxt = list(state)
        for v in fired:
            nxt[v] -= n
            for w in nbrs[v]:
                nxt[w] += 1
        state = tuple(nxt)
        for j, old in enumerate(history):
            if old == state:
                return j, t - j
        history.append(state)
    return None


def check_lemma23(candidate: LeftCyclicPartition) -> bool:
    """For an order-3 candidate: valid AND every vertex has at least two
    neighbors in its predecessor class.  For order 3 the two are provably
    equivalent, so this doubles as a consistency check on the validator."""
    if candidate.k != 3:
        raise ValueError(f"order must be 3, got {candidate.k}")
    if not validate(candidate).valid:
        return False
    n = candidate.n
    for i, s in enumerate(candidate.sets):
        prev = set(candidate.sets[i - 1])
        for v in s:
            if len(neighbors(v, n) & prev) < 2:
                return False
    return True
