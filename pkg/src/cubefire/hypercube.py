"""Bit-level combinatorics of the n-cube.

Vertices are plain unsigned integers in [0, 2^n); bit d of a vertex is its
d-th coordinate.  The ambient dimension n always travels alongside as an
explicit argument, it is never inferred from a value.
"""

from dataclasses import dataclass

# gray_cycle materializes its result; beyond this the list is useless at desk scale
GRAY_DIM_CAP = 28


def neighbors(v: int, n: int) -> set[int]:
    """All vertices adjacent to v in H_n, i.e. v with one bit flipped."""
    if n < 0:
        raise ValueError(f"dimension must be non-negative, got {n}")
    if not 0 <= v < (1 << n):
        raise ValueError(f"vertex {v} out of range for H_{n}")
    return {v ^ (1 << d) for d in range(n)}


def parity(v: int) -> int:
    """Number of set bits mod 2; the two parities form the cube's bipartition."""
    return v.bit_count() & 1


def gray_cycle(m: int) -> list[int]:
    """Reflected Gray code: entry i is i ^ (i >> 1).

    The sequence is a hamiltonian cycle of H_m: consecutive entries (and the
    wraparound pair) differ in exactly one bit.
    """
    if m < 1:
        raise ValueError(f"gray_cycle needs dimension >= 1, got {m}")
    if m > GRAY_DIM_CAP:
        raise ValueError(f"gray_cycle dimension capped at {GRAY_DIM_CAP}, got {m}")
    return [i ^ (i >> 1) for i in range(1 << m)]


@dataclass(frozen=True)
class CubeCycle:
    """A cycle in H_n of even length p.

    p = 2 denotes the degenerate back-and-forth traversal of a single edge;
    for p >= 4 all vertices are distinct.
    """

    n: int
    vertices: tuple[int, ...]

    def __post_init__(self):
        p = len(self.vertices)
        if p < 2 or p % 2:
            raise ValueError(f"cycle length must be even and >= 2, got {p}")
        for v in self.vertices:
            if not 0 <= v < (1 << self.n):
                raise ValueError(f"vertex {v} out of range for H_{self.n}")
        for i in range(p):
            a, b = self.vertices[i], self.vertices[(i + 1) % p]
            if (a ^ b).bit_count() != 1:
                raise ValueError(f"consecutive vertices {a}, {b} not adjacent")
        if p >= 4 and len(set(self.vertices)) != p:
            raise ValueError("cycle vertices must be pairwise distinct")

    def __len__(self):
        return len(self.vertices)


def even_cycle(n: int, p: int) -> CubeCycle:
    """A cycle of even length p in H_n, 2 <= p <= 2^n.

    Deterministic construction: a cycle of length p <= 2^(n-1) is taken
    inside the low subcube; otherwise fold the Gray path g_0..g_{m-1}
    (m = p/2) of H_{n-1} across the top dimension:
    [g_0, ..., g_{m-1}, g_{m-1}+2^(n-1), ..., g_0+2^(n-1)].
    """
    if n < 1:
        raise ValueError(f"even_cycle needs dimension >= 1, got {n}")
    if p % 2 or not 2 <= p <= (1 << n):
        raise ValueError(f"cycle length must be even in [2, 2^{n}], got {p}")
    if p == 2:
        return CubeCycle(n, (0, 1))
    if p <= (1 << (n - 1)):
        return CubeCycle(n, even_cycle(n - 1, p).vertices)
    half = 1 << (n - 1)
    path = gray_cycle(n - 1)[: p // 2]
    return CubeCycle(n, tuple(path) + tuple(half | g for g in reversed(path)))
