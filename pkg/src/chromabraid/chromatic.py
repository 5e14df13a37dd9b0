"""Abelianized invariants of graph-conditioned braid groups.

A simple graph G on the strand positions conditions the braid group: two
strands may cross only transiently unless their start positions form an
edge, where a residual full twist is allowed to survive.  Concretely the
pure part P(G) of the conditioned group B(G) is free abelian on the edge
set, an element being the vector of halved crossing counts over the edges
(edge_lk).  The full group splits as P(G) -> B(G) -> Aut(G): phi reads the
underlying permutation, section lifts an automorphism to a distinguished
word, and i_star combines both into the normal form (edge vector,
automorphism) that classifies elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    GraphInputError,
    NotAutomorphismError,
    NotPureError,
    OutOfScopeError,
    StrandMismatchError,
)
from .garside import equal_in_Bn
from .graphs import (
    DihedralElement,
    SimpleGraph,
    cycle,
    is_automorphism,
    is_complete,
    is_triangle_free,
)
from .words import (
    BraidWord,
    Permutation,
    concat,
    crossing_matrix,
    e_word,
    inverse,
    perm_of,
    power,
    psi_a_word,
    psi_b_word,
)


@dataclass(frozen=True)
class EdgeVector:
    """Integer vector indexed by the sorted edge list of its graph."""

    graph: SimpleGraph
    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != len(self.graph.edges):
            raise GraphInputError(
                f"vector length {len(self.coords)} != edge count {len(self.graph.edges)}"
            )

    def coefficient(self, i: int, j: int) -> int:
        e = (min(i, j), max(i, j))
        try:
            return self.coords[_edge_index(self.graph)[e]]
        except KeyError:
            raise GraphInputError(f"{e} is not an edge of the graph") from None

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __add__(self, other: EdgeVector) -> EdgeVector:
        if other.graph != self.graph:
            raise GraphInputError("adding edge vectors over different graphs")
        return EdgeVector(self.graph, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> EdgeVector:
        return EdgeVector(self.graph, tuple(-a for a in self.coords))

    def __sub__(self, other: EdgeVector) -> EdgeVector:
        return self + (-other)

    def __str__(self) -> str:
        return "[" + ",".join(str(c) for c in self.coords) + "]"


@lru_cache(maxsize=None)
def _edge_index(G: SimpleGraph) -> dict[tuple[int, int], int]:
    return {e: idx for idx, e in enumerate(G.edges_sorted())}


def zero_vector(G: SimpleGraph) -> EdgeVector:
    return EdgeVector(G, (0,) * len(G.edges))


def unit_vector(G: SimpleGraph, i: int, j: int) -> EdgeVector:
    idx = _edge_index(G).get((min(i, j), max(i, j)))
    if idx is None:
        raise GraphInputError(f"({i}, {j}) is not an edge of the graph")
    coords = [0] * len(G.edges)
    coords[idx] = 1
    return EdgeVector(G, tuple(coords))


@dataclass(frozen=True)
class ChromaticElement:
    """Normal form of an element of B(G): edge vector plus automorphism."""

    vector: EdgeVector
    aut: Permutation

    def __post_init__(self):
        if self.aut.size != self.vector.graph.vertices:
            raise StrandMismatchError("automorphism size != graph vertex count")
        if not is_automorphism(self.vector.graph, self.aut):
            raise NotAutomorphismError(
                f"{self.aut.one_line()} is not an automorphism of the graph"
            )

    def __str__(self) -> str:
        coords = ",".join(str(c) for c in self.vector.coords)
        image = ",".join(str(v) for v in self.aut.image)
        return f"[{coords}|{image}]"


def _check_strands(w: BraidWord, G: SimpleGraph):
    if w.strands != G.vertices:
        raise StrandMismatchError(
            f"word on {w.strands} strands against graph on {G.vertices} vertices"
        )


def edge_lk(w: BraidWord, G: SimpleGraph) -> EdgeVector:
    """Halved crossing counts of a pure word, restricted to the edges of G.

    Pure words cross every pair of strands an even number of times, so the
    halves are integers; they are invariant under braid relations and under
    removing transient (non-edge) twists, which makes the vector a complete
    abelian invariant of the pure conditioned group.
    """
    _check_strands(w, G)
    if not perm_of(w).is_identity():
        raise NotPureError("edge_lk needs a pure word")
    m = crossing_matrix(w)
    coords = []
    for i, j in G.edges_sorted():
        c = m.entry(i, j)
        if c % 2:
            raise AssertionError("odd crossing count on a pure word")
        coords.append(c // 2)
    return EdgeVector(G, tuple(coords))


def phi(w: BraidWord, G: SimpleGraph) -> Permutation:
    """Underlying permutation, verified to be a graph automorphism."""
    _check_strands(w, G)
    g = perm_of(w)
    if not is_automorphism(G, g):
        raise NotAutomorphismError(
            f"permutation {g.one_line()} is not an automorphism of the graph"
        )
    return g


def dihedral_section_word(d: DihedralElement) -> BraidWord:
    """Distinguished lift psi(a)^k psi(b)^e of a dihedral element, n >= 4."""
    n = d.order
    w = power(psi_a_word(n), d.rotation)
    if d.reflected:
        w = concat(w, psi_b_word(n))
    return w


def section(g: Permutation, G: SimpleGraph) -> BraidWord:
    """A word whose permutation is g, chosen canonically per graph.

    On a cycle graph with n >= 4 the dihedral lift psi(a)^k psi(b)^e is
    used, so sections compose predictably with the extension layer; on any
    other graph g is decomposed into transpositions by selection sort and
    each transposition (p v) is lifted to e_word(p, v).
    """
    if not is_automorphism(G, g):
        raise NotAutomorphismError(
            f"permutation {g.one_line()} is not an automorphism of the graph"
        )
    n = G.vertices
    if n >= 4 and G.edges == cycle(n).edges:
        return dihedral_section_word(DihedralElement.from_perm(n, g))
    work = list(g.image)
    word = BraidWord(n)
    for p in range(1, n + 1):
        if work[p - 1] == p:
            continue
        v = work.index(p, p - 1) + 1
        work[p - 1], work[v - 1] = work[v - 1], work[p - 1]
        word = concat(word, e_word(p, v, n))
    return word


def i_star(w: BraidWord, G: SimpleGraph) -> ChromaticElement:
    """Normal form (edge vector, automorphism) of a word in B(G)."""
    _check_strands(w, G)
    if not is_triangle_free(G):
        raise OutOfScopeError("i_star needs a triangle-free graph")
    g = phi(w, G)
    pure_part = concat(w, inverse(section(g, G)))
    return ChromaticElement(edge_lk(pure_part, G), g)


def equal_in_BGamma(u: BraidWord, v: BraidWord, G: SimpleGraph) -> bool:
    """Word problem in the graph-conditioned braid group B(G).

    Triangle-free G: B(G) is the split extension of Aut(G) by the free
    abelian group Z^E(G), and (edge_lk, phi) is a complete invariant; u
    and v are equal iff their permutations agree and u v^-1 has the zero
    edge vector.  Complete G: the conditioning is vacuous, B(G) = B_n, and
    the question is delegated to the left-weighted normal form.  Any other
    graph (a 3-circuit plus a non-edge) is outside the decidable fragment
    handled here and raises OutOfScopeError.
    """
    _check_strands(u, G)
    _check_strands(v, G)
    if is_triangle_free(G):
        pu = phi(u, G)
        pv = phi(v, G)
        if pu != pv:
            return False
        return edge_lk(concat(u, inverse(v)), G).is_zero()
    if is_complete(G):
        return equal_in_Bn(u, v)
    raise OutOfScopeError(
        "graph has a 3-circuit but is not complete; equality is not decided here"
    )


def edge_action(g: Permutation, v: EdgeVector) -> EdgeVector:
    """Push-forward of an edge vector: coordinate at {g(i), g(j)} = old at {i, j}."""
    G = v.graph
    if not is_automorphism(G, g):
        raise NotAutomorphismError(
            f"permutation {g.one_line()} is not an automorphism of the graph"
        )
    index = _edge_index(G)
    coords = [0] * len(G.edges)
    for (i, j), src in index.items():
        t = (min(g.apply(i), g.apply(j)), max(g.apply(i), g.apply(j)))
        coords[index[t]] = v.coords[src]
    return EdgeVector(G, tuple(coords))
