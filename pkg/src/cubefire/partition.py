"""Left cyclic partitions of n-cube vertices: validator and constructors.

A left cyclic partition is an ordered sequence of classes S_0..S_{k-1}
covering all 2^n vertices such that every vertex of S_i has a neighbor in
S_{i-1} (mod k) and no class contains an edge.  Every constructor re-checks
its own output with the validator and raises on violation.
"""

from dataclasses import dataclass

from .hypercube import even_cycle, gray_cycle, neighbors


class InvalidPartitionError(ValueError):
    """Raised when an operation receives or produces an invalid partition."""


@dataclass(frozen=True)
class LeftCyclicPartition:
    n: int
    sets: tuple[tuple[int, ...], ...]  # vertices sorted within each class

    @property
    def k(self) -> int:
        return len(self.sets)

    @staticmethod
    def from_sets(n, sets) -> "LeftCyclicPartition":
        """Canonical form: sort within classes; class order is semantic."""
        return LeftCyclicPartition(n, tuple(tuple(sorted(s)) for s in sets))

    def to_doc(self) -> dict:
        return {"n": self.n, "k": self.k, "sets": [list(s) for s in self.sets]}

    @staticmethod
    def from_doc(doc: dict) -> "LeftCyclicPartition":
        try:
            n = doc["n"]
            sets = doc["sets"]
            if not isinstance(n, int) or not isinstance(sets, list):
                raise TypeError
            for s in sets:
                if not all(isinstance(v, int) for v in s):
                    raise TypeError
        except (KeyError, TypeError) as exc:
            raise InvalidPartitionError(f"malformed partition document: {exc!r}")
        if "k" in doc and doc["k"] != len(sets):
            raise InvalidPartitionError(f"k={doc['k']} but {len(sets)} sets given")
        return LeftCyclicPartition.from_sets(n, sets)


@dataclass(frozen=True)
class Violation:
    condition: str  # cover | disjointness | predecessor-neighbor | internal-edge
    class_index: int  # -1 for vertices missing from every class
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    violations: tuple[Violation, ...]


def validate(partition: LeftCyclicPartition) -> ValidationReport:
    """Check the four partition conditions; out-of-range vertices are a
    domain error, not a violation."""
    n, sets = partition.n, partition.sets
    size = 1 << n
    for s in sets:
        for v in s:
            if not 0 <= v < size:
                raise InvalidPartitionError(f"vertex {v} out of range for H_{n}")

    violations = []
    seen = {}
    for i, s in enumerate(sets):
        if not s:
            violations.append(Violation("cover", i, ()))
        for v in s:
            if v in seen:
                violations.append(Violation("disjointness", i, (v,)))
            else:
                seen[v] = i
    for v in range(size):
        if v not in seen:
            violations.append(Violation("cover", -1, (v,)))

    k = len(sets)
    for i, s in enumerate(sets):
        prev = set(sets[(i - 1) % k]) if k else set()
        for v in s:
            if not (neighbors(v, n) & prev):
                violations.append(Violation("predecessor-neighbor", i, (v,)))
        for v in s:
            for w in s:
                if w > v and (v ^ w).bit_count() == 1:
                    violations.append(Violation("internal-edge", i, (v, w)))

    violations.sort(key=lambda x: (x.class_index, x.vertices, x.condition))
    return ValidationReport(not violations, tuple(violations))


def _checked(n, sets) -> LeftCyclicPartition:
    part = LeftCyclicPartition.from_sets(n, sets)
    report = validate(part)
    if not report.valid:
        raise InvalidPartitionError(
            f"constructor produced an invalid partition: {report.violations[:3]}"
        )
    return part


def _require_valid(partition: LeftCyclicPartition):
    report = validate(partition)
    if not report.valid:
        raise InvalidPartitionError(
            f"input partition is invalid: {report.violations[:3]}"
        )


def construct_even(n: int, p: int) -> LeftCyclicPartition:
    """Partition of even order p: seed singleton classes along a cycle of
    length p, then repeatedly sweep classes, pulling each class's unassigned
    neighbors into the next class until everything is assigned."""
    cycle = even_cycle(n, p).vertices
    sets = [{x} for x in cycle]
    unassigned = set(range(1 << n)) - set(cycle)
    while unassigned:
        for i in range(p):
            grabbed = set()
            for u in sets[i]:
                grabbed |= neighbors(u, n) & unassigned
            sets[(i + 1) % p] |= grabbed
            unassigned -= grabbed
    return _checked(n, sets)


def lift(partition: LeftCyclicPartition) -> LeftCyclicPartition:
    """Same-order partition of H_{n+1}: class i becomes 1S_i union 0S_{i-1}."""
    _require_valid(partition)
    hi = 1 << partition.n
    sets = [
        {hi | v for v in partition.sets[i]} | set(partition.sets[i - 1])
        for i in range(partition.k)
    ]
    return _checked(partition.n + 1, sets)


def _doubled_labels(p: int) -> list[list[tuple[int, int]]]:
    # order-(2p-1) class sequence as (half-bit, source-class) unions
    labels = [[(0, 0)], [(1, 0), (0, 1)], [(1, 1)]]
    for i in range(1, (p - 1) // 2):
        labels += [[(1, 2 * i)], [(0, 2 * i)], [(0, 2 * i + 1)], [(1, 2 * i + 1)]]
    labels += [[(1, p - 1)], [(0, p - 1)]]
    return labels


def _materialize(partition: LeftCyclicPartition, labels) -> LeftCyclicPartition:
    hi = 1 << partition.n
    sets = [
        {(hi if bit else 0) | v for bit, j in cls for v in partition.sets[j]}
        for cls in labels
    ]
    return _checked(partition.n + 1, sets)


def double_minus_1(partition: LeftCyclicPartition) -> LeftCyclicPartition:
    """From an odd order p >= 5 on H_n to order 2p-1 on H_{n+1}."""
    p = partition.k
    if p % 2 == 0 or p < 5:
        raise ValueError(f"double_minus_1 needs odd order >= 5, got {p}")
    _require_valid(partition)
    return _materialize(partition, _doubled_labels(p))


def double_minus_3(partition: LeftCyclicPartition) -> LeftCyclicPartition:
    """From an odd order p >= 7 on H_n to order 2p-3 on H_{n+1}.

    Same sequence as double_minus_1 but with its classes 3..10 contracted
    from eight to six by merging across the halves.
    """
    p = partition.k
    if p % 2 == 0 or p < 7:
        raise ValueError(f"double_minus_3 needs odd order >= 7, got {p}")
    _require_valid(partition)
    labels = _doubled_labels(p)
    replacement = [
        [(1, 2)],
        [(0, 2), (1, 3)],
        [(0, 3)],
        [(0, 4)],
        [(1, 4), (0, 5)],
        [(1, 5)],
    ]
    labels[3:11] = replacement
    return _materialize(partition, labels)


def h4_order5() -> LeftCyclicPartition:
    """The known order-5 partition of H_4."""
    return _checked(
        4,
        [
            {0b0000, 0b1101},
            {0b0001, 0b1100, 0b0010, 0b1111},
            {0b0110, 0b1011},
            {0b0100, 0b0111, 0b1001, 0b1010},
            {0b0011, 0b0101, 0b1000, 0b1110},
        ],
    )


def h4_order7() -> LeftCyclicPartition:
    """The known order-7 partition of H_4."""
    return _checked(
        4,
        [
            {0b0000, 0b1101},
            {0b0001, 0b1100},
            {0b0011, 0b1110},
            {0b0010, 0b1111},
            {0b0110, 0b1011},
            {0b0100, 0b0111, 0b1001, 0b1010},
            {0b0101, 0b1000},
        ],
    )


def max_odd(n: int) -> LeftCyclicPartition:
    """Partition of the maximal odd order 2^(n-1) - 1, n >= 4.

    Built from two interleaved hamiltonian cycles of H_{n-1}: the Gray cycle
    u_i and its translate v_i = u_i ^ 1 ^ 2^(n-2), paired up as {0u_i, 1v_i}
    with one four-element class absorbing the leftover pair.
    """
    if n < 4:
        raise ValueError(f"max_odd needs dimension >= 4, got {n}")
    half = 1 << (n - 1)
    u = gray_cycle(n - 1)
    shift = 1 | (1 << (n - 2))
    v = [x ^ shift for x in u]
    big_n = half
    sets = [{u[i], half | v[i]} for i in range(big_n - 3)]
    sets.append({u[big_n - 3], u[big_n - 1], half | v[big_n - 3], half | v[big_n - 1]})
    sets.append({u[big_n - 2], half | v[big_n - 2]})
    return _checked(n, sets)


def construct_odd(n: int, p: int) -> LeftCyclicPartition:
    """Partition of odd order p, 5 <= p <= 2^(n-1) - 1, n >= 4.

    Recursion: base cases in H_4; small p lifts from H_{n-1}; the maximal
    order has its direct construction; otherwise double an odd order from
    H_{n-1} via 2q-1, falling back to 2q-3 when (p+1)/2 is even.
    """
    if p == 3:
        raise ValueError("order 3 is impossible: no n-cube admits a left cyclic "
                         "partition of order 3")
    if n < 4:
        raise ValueError(f"construct_odd needs dimension >= 4, got {n}")
    bound = (1 << (n - 1)) - 1
    if p % 2 == 0 or p < 5 or p > bound:
        raise ValueError(
            f"odd order must satisfy 5 <= p <= 2^(n-1)-1 = {bound}, got {p}"
        )
    if n == 4:
        return h4_order5() if p == 5 else h4_order7()
    if p <= (1 << (n - 2)) - 1:
        return lift(construct_odd(n - 1, p))
    if p == bound:
        return max_odd(n)
    q1 = (p + 1) // 2
    if q1 % 2 == 1 and 5 <= q1 <= (1 << (n - 2)) - 1:
        return double_minus_1(construct_odd(n - 1, q1))
    return double_minus_3(construct_odd(n - 1, (p + 3) // 2))
