"""Sink-reversal chip firing dynamics on n-cube orientations.

An orientation is stored bit-parallel: one 2^n-bit plane per dimension,
where bit v of plane d is 1 iff the dimension-d edge at v leaves v.  Sinks
are the vertices whose bits are 0 in every plane, and a firing step is a
masked bit flip, so stepping H_16 costs a few dozen big-int operations.
"""

from dataclasses import dataclass
from functools import lru_cache

from .partition import LeftCyclicPartition, _require_valid
from .hypercube import gray_cycle

DEFAULT_MAX_STEPS = 1 << 20


@lru_cache(maxsize=None)
def _low_mask(n: int, d: int) -> int:
    """Bitmask over [0, 2^n) of the vertices whose bit d is clear."""
    step = 1 << d
    mask = (1 << step) - 1
    width = 2 * step
    size = 1 << n
    while width < size:
        mask |= mask << width
        width *= 2
    return mask


def _swap(mask: int, n: int, d: int) -> int:
    """Move every bit of a vertex mask to its dimension-d partner."""
    step = 1 << d
    low = _low_mask(n, d)
    return ((mask & low) << step) | ((mask >> step) & low)


def _full(n: int) -> int:
    return (1 << (1 << n)) - 1


def _mask_to_set(mask: int) -> frozenset[int]:
    out = set()
    while mask:
        low = mask & -mask
        out.add(low.bit_length() - 1)
        mask ^= low
    return frozenset(out)


def _set_to_mask(vertices) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Orientation:
    n: int
    planes: tuple[int, ...]

    def __post_init__(self):
        if len(self.planes) != self.n:
            raise ValueError(f"need {self.n} planes, got {len(self.planes)}")
        full = _full(self.n)
        for d, plane in enumerate(self.planes):
            if plane & ~full:
                raise ValueError(f"plane {d} has bits outside H_{self.n}")
            # each edge must leave exactly one endpoint
            if plane ^ _swap(plane, self.n, d) != full:
                raise ValueError(f"plane {d} is not a consistent edge orientation")

    @staticmethod
    def from_direction_bits(n: int, bits) -> "Orientation":
        """Canonical edge order: dimension-major, then low endpoint ascending;
        bit 1 means the edge points toward the endpoint with the bit set."""
        n_edges = n * (1 << (n - 1)) if n else 0
        if len(bits) != n_edges:
            raise ValueError(f"H_{n} has {n_edges} edges, got {len(bits)} bits")
        planes = []
        it = iter(bits)
        for d in range(n):
            plane = 0
            step = 1 << d
            for u in range(1 << n):
                if u & step:
                    continue
                b = next(it)
                if b not in (0, 1):
                    raise ValueError(f"direction bits must be 0/1, got {b!r}")
                # bit set: points toward u|step, i.e. leaves u
                plane |= (1 << u) if b else (1 << (u | step))
            planes.append(plane)
        return Orientation(n, tuple(planes))

    def direction_bits(self) -> list[int]:
        bits = []
        for d in range(self.n):
            step = 1 << d
            plane = self.planes[d]
            for u in range(1 << self.n):
                if u & step:
                    continue
                bits.append((plane >> u) & 1)
        return bits

    def to_doc(self) -> dict:
        return {"n": self.n, "bits": self.direction_bits()}

    @staticmethod
    def from_doc(doc: dict) -> "Orientation":
        try:
            n, bits = doc["n"], doc["bits"]
            if not isinstance(n, int) or not isinstance(bits, list):
                raise TypeError
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed orientation document: {exc!r}")
        return Orientation.from_direction_bits(n, bits)

    def out_degree(self, v: int) -> int:
        return sum((plane >> v) & 1 for plane in self.planes)

    def in_degree(self, v: int) -> int:
        return self.n - self.out_degree(v)


def _sink_mask(planes, n: int) -> int:
    acc = 0
    for plane in planes:
        acc |= plane
    return _full(n) & ~acc


def _fire(planes, n: int, fired: int):
    """Reverse every edge incident to the fired vertices (all are in-going)."""
    return tuple(plane ^ (fired | _swap(fired, n, d)) for d, plane in enumerate(planes))


def sinks(orientation: Orientation) -> frozenset[int]:
    """Vertices with out-degree zero; never contains two adjacent vertices."""
    return _mask_to_set(_sink_mask(orientation.planes, orientation.n))


def parallel_step(orientation: Orientation):
    """Fire every sink at once: reverse all arcs going into sinks."""
    n = orientation.n
    fired = _sink_mask(orientation.planes, n)
    return Orientation(n, _fire(orientation.planes, n, fired)), _mask_to_set(fired)


def block_step(orientation: Orientation, eligible):
    """Fire only the sinks inside the eligible set."""
    if not eligible:
        raise ValueError("eligible set must be non-empty")
    n = orientation.n
    fired = _sink_mask(orientation.planes, n) & _set_to_mask(eligible)
    return Orientation(n, _fire(orientation.planes, n, fired)), _mask_to_set(fired)


def chips(orientation: Orientation) -> dict[int, int]:
    """Chip count of every vertex: its in-degree. Total is n * 2^(n-1)."""
    return {v: orientation.in_degree(v) for v in range(1 << orientation.n)}


def _chip_key(planes) -> tuple[int, ...]:
    # bit-sliced per-vertex sum of out-planes; determines the chip state
    acc: list[int] = []
    for plane in planes:
        carry = plane
        for i in range(len(acc)):
            if not carry:
                break
            acc[i], carry = acc[i] ^ carry, acc[i] & carry
        if carry:
            acc.append(carry)
    return tuple(acc)


def from_partition(partition: LeftCyclicPartition) -> Orientation:
    """Orientation whose every edge points from the higher-indexed class to
    the lower-indexed one; its parallel evolution fires S_0, S_1, ... in turn."""
    _require_valid(partition)
    n = partition.n
    class_of = {}
    for i, s in enumerate(partition.sets):
        for v in s:
            class_of[v] = i
    planes = []
    for d in range(n):
        step = 1 << d
        plane = 0
        for u in range(1 << n):
            if u & step:
                continue
            w = u | step
            # arc from the later class to the earlier one
            plane |= (1 << w) if class_of[u] < class_of[w] else (1 << u)
        planes.append(plane)
    return Orientation(n, tuple(planes))


def hamiltonian_orientation(n: int) -> Orientation:
    """A sink-free orientation: the Gray hamiltonian cycle directed forward,
    every other edge pointing from its higher-popcount endpoint."""
    if n < 2:
        raise ValueError(f"hamiltonian_orientation needs dimension >= 2, got {n}")
    # default: each edge leaves the endpoint with the dimension bit set
    planes = [_full(n) & ~_low_mask(n, d) for d in range(n)]
    cycle = gray_cycle(n)
    for i, a in enumerate(cycle):
        b = cycle[(i + 1) % len(cycle)]
        d = (a ^ b).bit_length() - 1
        planes[d] |= 1 << a
        planes[d] &= ~(1 << b)
    return Orientation(n, tuple(planes))


@dataclass(frozen=True)
class Schedule:
    """Firing eligibility. blocks=None is the parallel schedule; otherwise
    the non-empty sets W_0..W_{k-1} are applied cyclically."""

    blocks: tuple[frozenset[int], ...] | None = None

    def __post_init__(self):
        if self.blocks is not None:
            if not self.blocks:
                raise ValueError("periodic-block schedule needs at least one block")
            for w in self.blocks:
                if not w:
                    raise ValueError("schedule blocks must be non-empty")

    @property
    def is_parallel(self) -> bool:
        return self.blocks is None

    def is_serial_parallel(self, n: int) -> bool:
        """Whether the blocks partition the vertex set (flagged, not enforced)."""
        if self.blocks is None:
            return True
        seen: set[int] = set()
        for w in self.blocks:
            if seen & w:
                return False
            seen |= w
        return seen == set(range(1 << n))

    @staticmethod
    def parallel() -> "Schedule":
        return Schedule(None)

    @staticmethod
    def periodic(blocks) -> "Schedule":
        return Schedule(tuple(frozenset(w) for w in blocks))


PARALLEL = Schedule.parallel()


@dataclass(frozen=True)
class EvolutionResult:
    """Transient/period summary of one trajectory.

    determined is False when max_steps ran out before a repeat; then the
    numeric fields are None and firing_sets holds the whole observed
    firing sequence instead of one cycle.
    """

    transient: int | None
    period: int | None
    orientation_period: int | None
    firing_sets: tuple[frozenset[int], ...]
    steps_executed: int
    determined: bool = True


def evolve(
    orientation: Orientation,
    schedule: Schedule = PARALLEL,
    max_steps: int = DEFAULT_MAX_STEPS,
) -> EvolutionResult:
    """Run the stepper until the chip state (and then the orientation)
    repeats; report transient, chip period, orientation period and the
    firing sets of one chip cycle.

    Periodicity is detected with first-seen-time maps.  Under a periodic
    block schedule the schedule phase is part of the state identity.
    """
    if max_steps < 1:
        raise ValueError(f"max_steps must be >= 1, got {max_steps}")
    n = orientation.n
    planes = orientation.planes
    blocks = None
    if not schedule.is_parallel:
        blocks = [_set_to_mask(w) for w in schedule.blocks]
        nblocks = len(blocks)
    chip_seen: dict = {}
    orient_seen: dict = {}
    fired_masks: list[int] = []
    chip_qp = None
    t = 0
    while True:
        phase = t % nblocks if blocks else 0
        if chip_qp is None:
            ckey = (phase, _chip_key(planes))
            if ckey in chip_seen:
                chip_qp = (chip_seen[ckey], t - chip_seen[ckey])
            else:
                chip_seen[ckey] = t
        okey = (phase, planes)
        if okey in orient_seen:
            q, p = chip_qp
            return EvolutionResult(
                transient=q,
                period=p,
                orientation_period=t - orient_seen[okey],
                firing_sets=tuple(
                    _mask_to_set(fired_masks[i]) for i in range(q, q + p)
                ),
                steps_executed=t,
            )
        orient_seen[okey] = t
        if t == max_steps:
            return EvolutionResult(
                transient=None,
                period=None,
                orientation_period=None,
                firing_sets=tuple(_mask_to_set(m) for m in fired_masks),
                steps_executed=t,
                determined=False,
            )
        fired = _sink_mask(planes, n)
        if blocks:
            fired &= blocks[phase]
        planes = _fire(planes, n, fired)
        fired_masks.append(fired)
        t += 1
