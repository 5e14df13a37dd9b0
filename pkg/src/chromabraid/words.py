"""Braid words over the Artin generators and their combinatorial shadows.

A braid word is a strand count n together with a finite sequence of letters
sigma_k or sigma_k^-1, 1 <= k <= n-1, stored as signed integers: k > 0
encodes sigma_k and k < 0 encodes sigma_|k|^-1.  The textual form is the
same sequence as whitespace-separated decimal integers, e.g. "1 2 -1".

Besides the free-monoid plumbing (parse, format, concat, inverse, free
reduction) the module provides the named word families

    a_word(i, j)   = sigma_{j-1} ... sigma_{i+1} sigma_i          (empty for i = j)
    s_word(i, j)   = sigma_{j-1} ... sigma_{i+1} sigma_i^2 sigma_{i+1}^-1 ... sigma_{j-1}^-1
    e_word(k, l)   = a_word(k, l) a_word(k+1, l)^-1
    psi_a_word(n)  = a_word(1, n)
    psi_b_word(n)  = e_word(2, n) e_word(3, n-1) ... e_word(r, n+2-r)

and two invariants computed by simulating the strand diagram bottom to top:
perm_of (the underlying permutation, with left-to-right composition so that
perm_of(concat(u, v)) = perm_of(u) * perm_of(v)) and crossing_matrix (the
symmetric matrix of signed crossing counts between labelled strands).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from ._kernel import crossing_counts
from .errors import IndexRangeError, ParseError, StrandMismatchError

_TOKEN = re.compile(r"[+-]?[0-9]+")


@dataclass(frozen=True)
class Permutation:
    """Permutation of {1, ..., n} in one-line notation: image[i-1] = value at i.

    Composition is left to right: (p * q)(i) = q(p(i)).  This matches the
    bottom-to-top reading of braid diagrams, so perm_of is a homomorphism.
    """

    image: tuple[int, ...]

    def __post_init__(self):
        n = len(self.image)
        if sorted(self.image) != list(range(1, n + 1)):
            raise IndexRangeError(f"not a permutation of 1..{n}: {self.image}")

    @staticmethod
    def identity(n: int) -> Permutation:
        return Permutation(tuple(range(1, n + 1)))

    @staticmethod
    def transposition(n: int, i: int, j: int) -> Permutation:
        if not (1 <= i <= n and 1 <= j <= n and i != j):
            raise IndexRangeError(f"transposition ({i} {j}) undefined on 1..{n}")
        image = list(range(1, n + 1))
        image[i - 1], image[j - 1] = j, i
        return Permutation(tuple(image))

    @property
    def size(self) -> int:
        return len(self.image)

    def apply(self, i: int) -> int:
        return self.image[i - 1]

    def compose(self, other: Permutation) -> Permutation:
        """self then other, left to right."""
        if other.size != self.size:
            raise StrandMismatchError(
                f"composing permutations of sizes {self.size} and {other.size}"
            )
        return Permutation(tuple(other.image[v - 1] for v in self.image))

    __mul__ = compose

    def inverse(self) -> Permutation:
        image = [0] * self.size
        for i, v in enumerate(self.image, start=1):
            image[v - 1] = i
        return Permutation(tuple(image))

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.image, start=1))

    def one_line(self) -> str:
        return " ".join(str(v) for v in self.image)

    def __str__(self) -> str:
        return self.one_line()


@dataclass(frozen=True)
class BraidWord:
    """A word in the braid group on `strands` strands, as signed letters."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise IndexRangeError(f"strand count must be >= 1, got {self.strands}")
        for k in self.letters:
            if k == 0 or abs(k) >= self.strands:
                raise IndexRangeError(
                    f"letter {k} out of range for {self.strands} strands"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return concat(self, other)

    def __str__(self) -> str:
        return format_word(self)


def parse_word(text: str, n: int) -> BraidWord:
    """Parse whitespace-separated signed letter indices into a word on n strands."""
    letters = []
    for position, token in enumerate(text.split(), start=1):
        if not _TOKEN.fullmatch(token):
            raise ParseError(f"not a decimal integer: {token!r}", position=position)
        k = int(token)
        if k == 0 or abs(k) >= n:
            raise IndexRangeError(
                f"letter {k} out of range for {n} strands (token {position})"
            )
        letters.append(k)
    return BraidWord(n, tuple(letters))


def format_word(w: BraidWord) -> str:
    """Canonical text: letters as signed decimal integers, single spaces."""
    return " ".join(str(k) for k in w.letters)


def concat(u: BraidWord, v: BraidWord) -> BraidWord:
    if u.strands != v.strands:
        raise StrandMismatchError(
            f"concatenating words on {u.strands} and {v.strands} strands"
        )
    return BraidWord(u.strands, u.letters + v.letters)


def inverse(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple(-k for k in reversed(w.letters)))


def power(w: BraidWord, e: int) -> BraidWord:
    """w^e by repeated concatenation; negative e inverts first."""
    base = w if e >= 0 else inverse(w)
    letters: tuple[int, ...] = ()
    for _ in range(abs(e)):
        letters += base.letters
    return BraidWord(w.strands, letters)


def free_reduce(w: BraidWord) -> BraidWord:
    """Cancel adjacent sigma_k sigma_k^-1 pairs until none remain."""
    stack: list[int] = []
    for k in w.letters:
        if stack and stack[-1] == -k:
            stack.pop()
        else:
            stack.append(k)
    return BraidWord(w.strands, tuple(stack))


def a_word(i: int, j: int, n: int) -> BraidWord:
    """sigma_{j-1} sigma_{j-2} ... sigma_i, the strand-i-to-position-j run; empty when i = j."""
    if not 1 <= i <= j <= n:
        raise IndexRangeError(f"a_word needs 1 <= i <= j <= n, got ({i}, {j}) on {n}")
    return BraidWord(n, tuple(range(j - 1, i - 1, -1)))


def s_word(i: int, j: int, n: int) -> BraidWord:
    """Band generator: sigma_i^2 conjugated so strands i and j do the full twist."""
    if not 1 <= i < j <= n:
        raise IndexRangeError(f"s_word needs 1 <= i < j <= n, got ({i}, {j}) on {n}")
    run = tuple(range(j - 1, i, -1))
    return BraidWord(n, run + (i, i) + tuple(-k for k in reversed(run)))


def e_word(k: int, l: int, n: int) -> BraidWord:
    """a_word(k, l) a_word(k+1, l)^-1; its permutation is the transposition (k l)."""
    if not 1 <= k < l <= n:
        raise IndexRangeError(f"e_word needs 1 <= k < l <= n, got ({k}, {l}) on {n}")
    return concat(a_word(k, l, n), inverse(a_word(k + 1, l, n)))


def psi_r(n: int) -> int:
    """Last index of the reflection's transposition list: n/2 for even n, (n+1)/2 for odd."""
    return n // 2 if n % 2 == 0 else (n + 1) // 2


def psi_s(n: int) -> int:
    """Partner of psi_r under the reflection: (n+4)/2 for even n, (n+3)/2 for odd."""
    return (n + 4) // 2 if n % 2 == 0 else (n + 3) // 2


def psi_a_word(n: int) -> BraidWord:
    """Lift of the rotation (1 2 ... n): the full descending run a_word(1, n)."""
    if n < 4:
        raise IndexRangeError(f"psi_a_word needs n >= 4, got {n}")
    return a_word(1, n, n)


def psi_b_word(n: int) -> BraidWord:
    """Lift of the reflection fixing vertex 1: e_word(2, n) e_word(3, n-1) ..."""
    if n < 4:
        raise IndexRangeError(f"psi_b_word needs n >= 4, got {n}")
    w = BraidWord(n)
    for k in range(2, psi_r(n) + 1):
        w = concat(w, e_word(k, n + 2 - k, n))
    return w


def perm_of(w: BraidWord) -> Permutation:
    """Permutation sending each strand's start position to its end position."""
    n = w.strands
    at = list(range(n))  # position -> strand label, 0-based
    for k in w.letters:
        i = abs(k) - 1
        at[i], at[i + 1] = at[i + 1], at[i]
    image = [0] * n
    for pos, strand in enumerate(at):
        image[strand] = pos + 1
    return Permutation(tuple(image))


def is_pure(w: BraidWord) -> bool:
    return perm_of(w).is_identity()


@dataclass(frozen=True)
class CrossingMatrix:
    """Symmetric matrix of signed crossing counts between labelled strands.

    rows[p-1][q-1] counts crossings of the strands *starting* at positions p
    and q, each counted +1 when positive and -1 when negative.  Additivity
    under concatenation holds after relabelling the second factor through
    the permutation of the first: M(uv) = M(u) + M(v).relabeled(perm_of(u)).
    """

    rows: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.rows)

    def entry(self, p: int, q: int) -> int:
        return self.rows[p - 1][q - 1]

    def __add__(self, other: CrossingMatrix) -> CrossingMatrix:
        if self.size != other.size:
            raise StrandMismatchError("adding crossing matrices of different sizes")
        return CrossingMatrix(
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.rows, other.rows)
            )
        )

    def relabeled(self, g: Permutation) -> CrossingMatrix:
        """Matrix in the start labels of a word preceding this one: new[p][q] = old[g(p)][g(q)]."""
        if g.size != self.size:
            raise StrandMismatchError("relabelling permutation has the wrong size")
        n = self.size
        return CrossingMatrix(
            tuple(
                tuple(self.entry(g.apply(p), g.apply(q)) for q in range(1, n + 1))
                for p in range(1, n + 1)
            )
        )


def crossing_matrix(w: BraidWord) -> CrossingMatrix:
    counts = crossing_counts(w.strands, w.letters)
    return CrossingMatrix(tuple(tuple(row) for row in counts))


@lru_cache(maxsize=None)
def _half_twist_image(n: int) -> tuple[int, ...]:
    return tuple(range(n, 0, -1))


def half_twist_perm(n: int) -> Permutation:
    """Permutation of the positive half twist: i -> n + 1 - i."""
    return Permutation(_half_twist_image(n))
