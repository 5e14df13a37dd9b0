"""Simple graphs on vertex set {1, ..., n}, their automorphisms, and the
dihedral group that Aut of a cycle graph realizes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import AutBoundError, GraphInputError, IndexRangeError
from .words import Permutation


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph; edges are stored as sorted vertex pairs."""

    vertices: int
    edges: frozenset[tuple[int, int]]

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def edges_sorted(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.edges))

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(a + b - v for a, b in self.edges if v in (a, b))


def from_edge_list(n: int, pairs) -> SimpleGraph:
    """Build a graph from vertex pairs; multi-edges collapse, loops are errors."""
    if n < 0:
        raise GraphInputError(f"vertex count must be >= 0, got {n}")
    edges = set()
    for i, j in pairs:
        if i == j:
            raise GraphInputError(f"loop edge at vertex {i}")
        if not (1 <= i <= n and 1 <= j <= n):
            raise GraphInputError(f"edge ({i}, {j}) outside vertex range 1..{n}")
        edges.add((min(i, j), max(i, j)))
    return SimpleGraph(n, frozenset(edges))


def cycle(n: int) -> SimpleGraph:
    if n < 3:
        raise GraphInputError(f"cycle graph needs n >= 3, got {n}")
    return from_edge_list(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def path(n: int) -> SimpleGraph:
    if n < 1:
        raise GraphInputError(f"path graph needs n >= 1, got {n}")
    return from_edge_list(n, [(i, i + 1) for i in range(1, n)])


def complete(n: int) -> SimpleGraph:
    if n < 1:
        raise GraphInputError(f"complete graph needs n >= 1, got {n}")
    return from_edge_list(n, combinations(range(1, n + 1), 2))


def is_complete(G: SimpleGraph) -> bool:
    n = G.vertices
    return len(G.edges) == n * (n - 1) // 2


def is_3_circuit(G: SimpleGraph, i: int, j: int, k: int) -> bool:
    """True iff the three distinct vertices span a triangle of G."""
    for v in (i, j, k):
        if not 1 <= v <= G.vertices:
            raise GraphInputError(f"vertex {v} outside range 1..{G.vertices}")
    if len({i, j, k}) != 3:
        raise GraphInputError(f"repeated vertex in triple ({i}, {j}, {k})")
    return G.has_edge(i, j) and G.has_edge(j, k) and G.has_edge(i, k)


def is_triangle_free(G: SimpleGraph) -> bool:
    for i, j in G.edges:
        if G.neighbors(i) & G.neighbors(j):
            return False
    return True


def is_automorphism(G: SimpleGraph, g: Permutation) -> bool:
    """Membership test for a single permutation; no exhaustive search."""
    if g.size != G.vertices:
        return False
    return all(G.has_edge(g.apply(i), g.apply(j)) for i, j in G.edges)


@lru_cache(maxsize=None)
def _automorphisms(G: SimpleGraph) -> tuple[Permutation, ...]:
    n = G.vertices
    deg = [0] + [G.degree(v) for v in range(1, n + 1)]
    adj = [frozenset()] + [G.neighbors(v) for v in range(1, n + 1)]
    found: list[Permutation] = []
    image = [0] * (n + 1)
    used = [False] * (n + 1)

    def extend(v: int):
        if v > n:
            found.append(Permutation(tuple(image[1:])))
            return
        for w in range(1, n + 1):
            if used[w] or deg[w] != deg[v]:
                continue
            # adjacency to every earlier vertex must be preserved both ways
            if any((u in adj[v]) != (image[u] in adj[w]) for u in range(1, v)):
                continue
            image[v] = w
            used[w] = True
            extend(v + 1)
            used[w] = False
        image[v] = 0

    extend(1)
    return tuple(sorted(found, key=lambda g: g.image))


def automorphisms(G: SimpleGraph, max_vertices: int = 10) -> list[Permutation]:
    """All automorphisms of G by pruned backtracking, sorted by one-line notation.

    Refuses graphs larger than max_vertices since the search is exhaustive;
    raise the bound explicitly when a larger instance is genuinely wanted.
    """
    if G.vertices > max_vertices:
        raise AutBoundError(
            f"automorphism search on {G.vertices} vertices exceeds bound {max_vertices}"
        )
    return list(_automorphisms(G))


def dihedral_generators(n: int) -> tuple[Permutation, Permutation]:
    """The rotation a = (1 2 ... n) and the reflection b fixing vertex 1.

    In one-line notation a(i) = i+1 (mod n) and b(1) = 1, b(k) = n+2-k.
    Both are automorphisms of cycle(n) and generate all 2n of them.
    """
    if n < 3:
        raise IndexRangeError(f"dihedral generators need n >= 3, got {n}")
    a = Permutation(tuple(i % n + 1 for i in range(1, n + 1)))
    b = Permutation((1,) + tuple(n + 2 - k for k in range(2, n + 1)))
    return a, b


@dataclass(frozen=True)
class DihedralElement:
    """Element a^rotation b^reflected of the dihedral group of order 2n.

    Multiplication matches left-to-right permutation composition through
    to_perm: (k1, e1) * (k2, e2) = (k1 + (-1)^e1 k2 mod n, e1 xor e2).
    """

    order: int
    rotation: int
    reflected: bool

    def __post_init__(self):
        if self.order < 3:
            raise IndexRangeError(f"dihedral group needs n >= 3, got {self.order}")
        if not 0 <= self.rotation < self.order:
            raise IndexRangeError(
                f"rotation {self.rotation} not reduced mod {self.order}"
            )

    @staticmethod
    def identity(n: int) -> DihedralElement:
        return DihedralElement(n, 0, False)

    @staticmethod
    def rotation_gen(n: int) -> DihedralElement:
        return DihedralElement(n, 1, False)

    @staticmethod
    def reflection_gen(n: int) -> DihedralElement:
        return DihedralElement(n, 0, True)

    def __mul__(self, other: DihedralElement) -> DihedralElement:
        if other.order != self.order:
            raise IndexRangeError("multiplying elements of different dihedral groups")
        sign = -1 if self.reflected else 1
        return DihedralElement(
            self.order,
            (self.rotation + sign * other.rotation) % self.order,
            self.reflected != other.reflected,
        )

    def inverse(self) -> DihedralElement:
        if self.reflected:
            return self
        return DihedralElement(self.order, (-self.rotation) % self.order, False)

    def is_identity(self) -> bool:
        return self.rotation == 0 and not self.reflected

    def to_perm(self) -> Permutation:
        a, b = dihedral_generators(self.order)
        g = Permutation.identity(self.order)
        for _ in range(self.rotation):
            g = g * a
        if self.reflected:
            g = g * b
        return g

    @staticmethod
    def all_elements(n: int) -> list[DihedralElement]:
        return [
            DihedralElement(n, k, e) for e in (False, True) for k in range(n)
        ]

    @staticmethod
    def from_perm(n: int, g: Permutation) -> DihedralElement:
        d = _perm_table(n).get(g.image)
        if d is None:
            raise IndexRangeError(
                f"permutation {g.one_line()} is not dihedral on cycle({n})"
            )
        return d


@lru_cache(maxsize=None)
def _perm_table(n: int) -> dict[tuple[int, ...], DihedralElement]:
    return {d.to_perm().image: d for d in DihedralElement.all_elements(n)}
