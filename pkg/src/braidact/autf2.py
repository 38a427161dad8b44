"""Automorphisms of the rank-two free group as ordered image pairs.

An endomorphism a |-> image_a, b |-> image_b of F_2 is an automorphism
exactly when (image_a, image_b) is a basis.  The primary basis test is
the classical commutator criterion; greedy Nielsen reduction provides
an independent cross-check and the mechanism for constructive inverses.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import Word, word_sort_key

__all__ = [
    "AutF2",
    "aut_sort_key",
    "commutator",
    "is_basis",
    "nielsen_reduce",
]

_A = Word((1,))
_B = Word((2,))
_ABAB = Word((1, 2, -1, -2))


def commutator(u: Word, v: Word) -> Word:
    return u * v * u.inverse() * v.inverse()


def is_basis(image_a: Word, image_b: Word) -> bool:
    """Whether a |-> image_a, b |-> image_b extends to an automorphism of F_2.

    The pair is a basis exactly when the commutator of the images is
    conjugate to the commutator of the generators or to its inverse.
    """
    for w in (image_a, image_b):
        if w.max_generator() > 2:
            raise ValueError("basis test is defined for words over a, b only")
    c = commutator(image_a, image_b)
    return c.is_conjugate(_ABAB) or c.is_conjugate(_ABAB.inverse())


# Elementary pair moves in a fixed tie-break order: inversions first, then
# the multiplications (either side, either entry), then the swap.  Only the
# multiplications can shorten the pair, so they are the ones that ever fire.
_MOVES = (
    ("a<-A", lambda u, v: (u.inverse(), v)),
    ("b<-B", lambda u, v: (u, v.inverse())),
    ("a<-ab", lambda u, v: (u * v, v)),
    ("a<-aB", lambda u, v: (u * v.inverse(), v)),
    ("a<-ba", lambda u, v: (v * u, v)),
    ("a<-Ba", lambda u, v: (v.inverse() * u, v)),
    ("b<-ba", lambda u, v: (u, v * u)),
    ("b<-bA", lambda u, v: (u, v * u.inverse())),
    ("b<-ab", lambda u, v: (u, u * v)),
    ("b<-Ab", lambda u, v: (u, u.inverse() * v)),
    ("swap", lambda u, v: (v, u)),
)


def _greedy_reduce(u: Word, v: Word, mirrors: list[Word] | None = None):
    moves: list[str] = []
    while True:
        total = len(u) + len(v)
        for tag, f in _MOVES:
            u2, v2 = f(u, v)
            if len(u2) + len(v2) < total:
                u, v = u2, v2
                if mirrors is not None:
                    mirrors[:] = f(mirrors[0], mirrors[1])
                moves.append(tag)
                break
        else:
            return (u, v), tuple(moves)


def nielsen_reduce(image_a: Word, image_b: Word) -> tuple[tuple[Word, Word], tuple[str, ...]]:
    """Greedily shorten a pair by elementary moves; returns (pair, move tags).

    A pair generates F_2 exactly when the reduction bottoms out at total
    length 2.
    """
    return _greedy_reduce(image_a, image_b)


@dataclass(frozen=True)
class AutF2:
    """An automorphism of F_2 = <a, b>, stored by its images of a and b."""

    image_a: Word
    image_b: Word

    @classmethod
    def identity(cls) -> AutF2:
        return cls(_A, _B)

    @classmethod
    def parse(cls, text: str) -> AutF2:
        parts = text.split(",")
        if len(parts) != 2:
            raise ValueError(f"expected 'A,B' core syntax, got {text!r}")
        return cls(Word.parse(parts[0]), Word.parse(parts[1]))

    def apply(self, w: Word) -> Word:
        return w.substitute((self.image_a, self.image_b))

    def compose(self, other: AutF2) -> AutF2:
        """Right-action composition: the result sends x to (x . self) . other."""
        return AutF2(other.apply(self.image_a), other.apply(self.image_b))

    def inverse(self) -> AutF2:
        """Invert by tracking preimages along a greedy Nielsen reduction."""
        if not is_basis(self.image_a, self.image_b):
            raise ValueError(f"({self}) is not a basis of F_2; cannot invert")
        mirrors = [_A, _B]
        (u, v), _ = _greedy_reduce(self.image_a, self.image_b, mirrors)
        if len(u) != 1 or len(v) != 1:
            raise ValueError(f"({self}) did not reduce to a length-2 pair")
        images: dict[int, Word] = {}
        for end, mirror in ((u, mirrors[0]), (v, mirrors[1])):
            letter = end.letters[0]
            images[abs(letter)] = mirror if letter > 0 else mirror.inverse()
        return AutF2(images[1], images[2])

    def is_identity(self) -> bool:
        return self.image_a == _A and self.image_b == _B

    def __str__(self) -> str:
        return f"{self.image_a.text(2)},{self.image_b.text(2)}"


def aut_sort_key(phi: AutF2) -> tuple:
    return (word_sort_key(phi.image_a), word_sort_key(phi.image_b))
