"""Finite presentations: the classical braid presentations, the band-generator
presentation, its graph-conditioned quotient, and split-extension assembly.

A relator is a tuple of (generator name, +-1) tokens, always kept freely
reduced; a presentation is a generator tuple plus a relator tuple.  Two
synthesizers matter for cross-checking: markoff_presentation builds the
band-generator presentation of the pure braid group from the three classical
relation families, while pure_chromatic_presentation builds the presentation
of the graph-conditioned pure group by instantiating five schemas over the
conditioning graph.  On a complete graph the two must produce the same
relator multiset; that identity is enforced by the test suite, so the two
code paths are deliberately independent.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import IndexRangeError, MissingEntryError
from .graphs import SimpleGraph, cycle, dihedral_generators, is_3_circuit
from .words import BraidWord, concat, inverse, psi_r, psi_s

Token = tuple[str, int]
Relator = tuple[Token, ...]


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Relator, ...]

    def __post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("duplicate generator names")
        names = set(self.generators)
        for rel in self.relators:
            for name, exp in rel:
                if name not in names:
                    raise ValueError(f"relator uses unknown generator {name!r}")
                if exp not in (-1, 1):
                    raise ValueError(f"token exponent must be +-1, got {exp}")


def free_reduce_relator(rel) -> Relator:
    stack: list[Token] = []
    for name, exp in rel:
        if stack and stack[-1] == (name, -exp):
            stack.pop()
        else:
            stack.append((name, exp))
    return tuple(stack)


def relator_inverse(rel) -> Relator:
    return tuple((name, -exp) for name, exp in reversed(rel))


def commutator(x: str, y: str) -> Relator:
    return ((x, 1), (y, 1), (x, -1), (y, -1))


def equation_relator(lhs, rhs) -> Relator:
    """Relator of the equation lhs = rhs, freely reduced."""
    return free_reduce_relator(tuple(lhs) + relator_inverse(tuple(rhs)))


def cyclic_canonical(rel) -> Relator:
    """Free reduction followed by the lexicographically least rotation."""
    rel = free_reduce_relator(rel)
    if not rel:
        return rel
    return min(rel[i:] + rel[:i] for i in range(len(rel)))


def equivalent_presentations(p: Presentation, q: Presentation) -> bool:
    """Same generator set, same relator multiset up to cyclic canonicalization."""
    if sorted(p.generators) != sorted(q.generators):
        return False
    return sorted(map(cyclic_canonical, p.relators)) == sorted(
        map(cyclic_canonical, q.relators)
    )


def artin_generator_name(i: int) -> str:
    return f"s{i}"


def edge_generator_name(i: int, j: int) -> str:
    return f"s{min(i, j)}_{max(i, j)}"


def artin_presentation(n: int) -> Presentation:
    """<sigma_1..sigma_{n-1} | far commutation, braid relations>."""
    if n < 2:
        raise IndexRangeError(f"artin_presentation needs n >= 2, got {n}")
    gens = tuple(artin_generator_name(i) for i in range(1, n))
    relators: list[Relator] = []
    for i, j in combinations(range(1, n), 2):
        if j - i >= 2:
            relators.append(commutator(artin_generator_name(i), artin_generator_name(j)))
    for i in range(1, n - 1):
        x, y = artin_generator_name(i), artin_generator_name(i + 1)
        relators.append(equation_relator(((x, 1), (y, 1), (x, 1)), ((y, 1), (x, 1), (y, 1))))
    return Presentation(gens, tuple(relators))


def _triple_equality(w1, w2, w3) -> list[Relator]:
    # consecutive pairing of a three-way equality
    return [equation_relator(w1, w2), equation_relator(w2, w3)]


def _band(i: int, j: int) -> Token:
    return (edge_generator_name(i, j), 1)


def markoff_presentation(n: int) -> Presentation:
    """Band-generator presentation of the pure braid group on n strands.

    Generators s_{i,j} for 1 <= i < j <= n; relators in three families:
      (1) s_{i,j} s_{k,l} = s_{k,l} s_{i,j} for i<j<k<l and for i<k<l<j,
      (2) s_{i,j} s_{i,k} s_{j,k} = s_{i,k} s_{j,k} s_{i,j}
                                  = s_{j,k} s_{i,j} s_{i,k} for i<j<k,
      (3) s_{i,k} s_{j,k} s_{j,l} s_{j,k}^-1
            = s_{j,k} s_{j,l} s_{j,k}^-1 s_{i,k} for i<j<k<l.
    """
    if n < 2:
        raise IndexRangeError(f"markoff_presentation needs n >= 2, got {n}")
    gens = tuple(
        edge_generator_name(i, j) for i, j in combinations(range(1, n + 1), 2)
    )
    relators: list[Relator] = []
    for a, b, c, d in combinations(range(1, n + 1), 4):
        # separated pattern (i, j, k, l) = (a, b, c, d)
        relators.append(commutator(edge_generator_name(a, b), edge_generator_name(c, d)))
        # nested pattern (i, k, l, j) = (a, b, c, d)
        relators.append(commutator(edge_generator_name(a, d), edge_generator_name(b, c)))
    for i, j, k in combinations(range(1, n + 1), 3):
        relators.extend(
            _triple_equality(
                (_band(i, j), _band(i, k), _band(j, k)),
                (_band(i, k), _band(j, k), _band(i, j)),
                (_band(j, k), _band(i, j), _band(i, k)),
            )
        )
    for i, j, k, l in combinations(range(1, n + 1), 4):
        lhs = (_band(i, k), _band(j, k), _band(j, l), (edge_generator_name(j, k), -1))
        rhs = (_band(j, k), _band(j, l), (edge_generator_name(j, k), -1), _band(i, k))
        relators.append(equation_relator(lhs, rhs))
    return Presentation(gens, tuple(relators))


def pure_chromatic_presentation(G: SimpleGraph) -> Presentation:
    """Presentation of the graph-conditioned pure group P(Gamma).

    One generator s_e per edge; relators instantiate five schemas over the
    vertex order, writing E for the edge set of G:
      (1)   {i,j}, {k,l} in E, i<j<k<l or i<k<l<j:   [s_{ij}, s_{kl}],
      (2.1) {i,j,k} a 3-circuit, i<j<k:              the triple equality (2),
      (2.2) {i,j}, {j,k} in E, {i,k} not in E,
            any order:                               [s_{ij}, s_{jk}],
      (3.1) {i,k}, {j,l} in E, i<j<k<l, {j,k,l} a
            3-circuit:                               the conjugation relation (3),
      (3.2) {i,k}, {j,l} in E, i<j<k<l, {j,k,l} not
            a 3-circuit:                             [s_{ik}, s_{jl}].
    Tokens over non-edges denote the identity and are dropped before free
    reduction; empty relators and exact duplicates (after cyclic
    canonicalization) are discarded.  Commutator-shaped relators are
    emitted lexicographically smaller generator first so the unordered
    instances of (2.2) deduplicate.
    """
    n = G.vertices
    edge = G.has_edge
    relators: list[Relator] = []

    def comm_sorted(e1: tuple[int, int], e2: tuple[int, int]) -> Relator:
        x, y = sorted((edge_generator_name(*e1), edge_generator_name(*e2)))
        return commutator(x, y)

    for a, b, c, d in combinations(range(1, n + 1), 4):
        if edge(a, b) and edge(c, d):
            relators.append(comm_sorted((a, b), (c, d)))
        if edge(a, d) and edge(b, c):
            relators.append(comm_sorted((a, d), (b, c)))
    for i, j, k in combinations(range(1, n + 1), 3):
        if is_3_circuit(G, i, j, k):
            relators.extend(
                _triple_equality(
                    (_band(i, j), _band(i, k), _band(j, k)),
                    (_band(i, k), _band(j, k), _band(i, j)),
                    (_band(j, k), _band(i, j), _band(i, k)),
                )
            )
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                if len({i, j, k}) == 3 and edge(i, j) and edge(j, k) and not edge(i, k):
                    relators.append(comm_sorted((i, j), (j, k)))
    for i, j, k, l in combinations(range(1, n + 1), 4):
        if edge(i, k) and edge(j, l):
            if is_3_circuit(G, j, k, l):
                lhs = (_band(i, k), _band(j, k), _band(j, l), (edge_generator_name(j, k), -1))
                rhs = (_band(j, k), _band(j, l), (edge_generator_name(j, k), -1), _band(i, k))
                relators.append(equation_relator(lhs, rhs))
            else:
                relators.append(comm_sorted((i, k), (j, l)))

    gens = tuple(edge_generator_name(i, j) for i, j in G.edges_sorted())
    names = set(gens)
    cleaned: list[Relator] = []
    seen: set[Relator] = set()
    for rel in relators:
        rel = free_reduce_relator(tuple(t for t in rel if t[0] in names))
        if not rel:
            continue
        key = cyclic_canonical(rel)
        if key in seen:
            continue
        seen.add(key)
        cleaned.append(rel)
    return Presentation(gens, tuple(cleaned))


def dihedral_presentation(n: int) -> Presentation:
    """<a, b | a^n = b^2 = e, b a b = a^-1>, the third relation as (ba)^2."""
    if n < 3:
        raise IndexRangeError(f"dihedral_presentation needs n >= 3, got {n}")
    relators = (
        (("a", 1),) * n,
        (("b", 1), ("b", 1)),
        (("b", 1), ("a", 1), ("b", 1), ("a", 1)),
    )
    return Presentation(("a", "b"), relators)


def psi_name(t: str) -> str:
    return f"psi_{t}"


def extension_presentation(A: Presentation, G: Presentation, action, cocycle_words) -> Presentation:
    """Presentation of an extension of G by A from conjugation and lifting data.

    action maps (quotient generator t, kernel generator s) to a word over
    A.generators equal to psi(t)^-1 s psi(t); cocycle_words maps each
    relator q of G to the word over A.generators equal to q evaluated at
    the lifts psi(t).  Output generators are A's followed by psi_t for each
    t of G; output relators are A's, then the conjugation relators
    psi_t^-1 s psi_t action(t,s)^-1, then q(psi) cocycle_words[q]^-1.
    """
    psi = {t: psi_name(t) for t in G.generators}
    clash = set(psi.values()) & set(A.generators)
    if clash:
        raise ValueError(f"lift names collide with kernel generators: {sorted(clash)}")
    relators: list[Relator] = list(A.relators)
    for t in G.generators:
        for s in A.generators:
            try:
                conj = tuple(action[t, s])
            except KeyError:
                raise MissingEntryError(f"action table misses ({t!r}, {s!r})") from None
            lhs = ((psi[t], -1), (s, 1), (psi[t], 1))
            relators.append(equation_relator(lhs, conj))
    for q in G.relators:
        try:
            value = tuple(cocycle_words[q])
        except KeyError:
            raise MissingEntryError(f"cocycle table misses relator {q!r}") from None
        lifted = tuple((psi[t], e) for t, e in q)
        relators.append(equation_relator(lifted, value))
    return Presentation(A.generators + tuple(psi[t] for t in G.generators), tuple(relators))


def cyclic_braid_presentation(n: int) -> Presentation:
    """Presentation of the braid group conditioned by the cycle graph C_n.

    Kernel part: one generator per cycle edge, all commutators (the kernel
    is free abelian of rank n).  Lifts psi_a, psi_b of the dihedral
    rotation and reflection, conjugation relators from the edge action of
    the dihedral group, and three lifted relators recording a^n, b^2 and
    (ba)^2 as explicit kernel words:

        psi_a^n             = s_{1,n} s_{n-1,n} s_{n-2,n-1} ... s_{1,2}
        psi_b^2             = e                     (n even)
                              s_{r,r+1}             (n odd, r = (n+1)/2)
        (psi_b psi_a)^2     = s_{1,2} s_{m,m+1}     (n even, m = (n+2)/2)
                              s_{1,2} s_{r,r+1} s_{r+1,r+2}   (n odd)
    """
    if n < 4:
        raise IndexRangeError(f"cyclic_braid_presentation needs n >= 4, got {n}")
    G = cycle(n)
    edges = G.edges_sorted()
    gens = tuple(edge_generator_name(i, j) for i, j in edges)
    relators: list[Relator] = [
        commutator(x, y) for x, y in combinations(gens, 2)
    ]
    a, b = dihedral_generators(n)
    for gen_name, g in (("psi_a", a), ("psi_b", b)):
        for i, j in edges:
            lhs = ((gen_name, -1), (edge_generator_name(i, j), 1), (gen_name, 1))
            rhs = (_band(g.apply(i), g.apply(j)),)
            relators.append(equation_relator(lhs, rhs))
    rot_rhs = [_band(1, n)] + [_band(k, k + 1) for k in range(n - 1, 0, -1)]
    relators.append(equation_relator((("psi_a", 1),) * n, rot_rhs))
    r, s = psi_r(n), psi_s(n)
    if n % 2 == 0:
        refl_rhs: list[Token] = []
        mixed_rhs = [_band(1, 2), _band(r + 1, s)]
    else:
        refl_rhs = [_band(r, s)]
        mixed_rhs = [_band(1, 2), _band(r, s), _band(s, s + 1)]
    relators.append(equation_relator((("psi_b", 1), ("psi_b", 1)), refl_rhs))
    relators.append(
        equation_relator(
            (("psi_b", 1), ("psi_a", 1), ("psi_b", 1), ("psi_a", 1)), mixed_rhs
        )
    )
    return Presentation(gens + ("psi_a", "psi_b"), tuple(relators))


def substitute(rel, table: dict[str, BraidWord], n: int) -> BraidWord:
    """Evaluate a relator as a braid word through a generator-to-word table."""
    w = BraidWord(n)
    for name, exp in rel:
        piece = table[name]
        w = concat(w, piece if exp > 0 else inverse(piece))
    return w


def format_presentation(p: Presentation, dialect: str = "plain") -> str:
    if dialect == "plain":
        lines = ["generators: " + " ".join(p.generators)]
        for rel in p.relators:
            lines.append(" ".join(_plain_token(t) for t in rel))
        return "\n".join(lines) + "\n"
    if dialect == "algebra-system":
        quoted = ", ".join(f'"{g}"' for g in p.generators)
        index = {g: i + 1 for i, g in enumerate(p.generators)}
        lines = [f"F := FreeGroup( {quoted} );;"]
        if not p.relators:
            lines.append("rels := [];;")
        else:
            lines.append("rels := [")
            body = [f"  {_algebra_relator(rel, index)}" for rel in p.relators]
            lines.append(",\n".join(body))
            lines.append("];;")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown dialect {dialect!r}")


def _plain_token(t: Token) -> str:
    name, exp = t
    return name if exp > 0 else f"{name}^-1"


def _algebra_relator(rel: Relator, index: dict[str, int]) -> str:
    # compress runs of an identical token into powers
    parts = []
    pos = 0
    while pos < len(rel):
        name, exp = rel[pos]
        run = 1
        while pos + run < len(rel) and rel[pos + run] == (name, exp):
            run += 1
        power = exp * run
        parts.append(f"F.{index[name]}" + (f"^{power}" if power != 1 else ""))
        pos += run
    return "*".join(parts)
