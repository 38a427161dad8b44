"""Reduced words in finitely generated free groups.

A letter is a nonzero integer: ``+i`` is the i-th generator and ``-i``
its inverse.  Every :class:`Word` is stored freely reduced, so equality
of values is equality of group elements.

Text form: words over the first two generators use the compact letters
``a``/``b`` with capitals for inverses, so ``"abA"`` is a b a^-1; words
involving higher generators use whitespace-separated tokens such as
``"x1 X3"``.  The empty word renders as ``"1"``.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Sequence

__all__ = ["Word", "word_sort_key"]

_TOKEN = re.compile(r"([xX])([1-9][0-9]*)")
_CHARS = {"a": 1, "b": 2, "A": -1, "B": -2}
_CHARS_REV = {v: k for k, v in _CHARS.items()}


def _reduced(letters: Iterable[int]) -> tuple[int, ...]:
    # Single left-to-right cancellation pass; linear in the input.
    stack: list[int] = []
    for letter in letters:
        if letter == 0:
            raise ValueError("0 is not a letter; use +i / -i for x_i and its inverse")
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


class Word:
    """A freely reduced word.  Instances are immutable values.

    >>> Word((1, 2, -2))
    Word('a')
    >>> Word.parse("abb") * Word.parse("BB")
    Word('a')
    >>> Word.parse("aB").inverse()
    Word('bA')
    """

    __slots__ = ("letters",)

    letters: tuple[int, ...]

    def __init__(self, letters: Iterable[int] = ()) -> None:
        self.letters = _reduced(letters)

    @classmethod
    def gen(cls, index: int, power: int = 1) -> Word:
        """The word ``x_index ** power``."""
        if index < 1:
            raise ValueError("generator index must be >= 1")
        letter = index if power >= 0 else -index
        return cls((letter,) * abs(power))

    @classmethod
    def parse(cls, text: str) -> Word:
        s = text.strip()
        if s in ("", "1"):
            return cls()
        if any(c.isdigit() for c in s):
            letters = []
            for tok in s.split():
                m = _TOKEN.fullmatch(tok)
                if m is None:
                    raise ValueError(f"bad word token {tok!r} (expected xK or XK)")
                index = int(m.group(2))
                letters.append(index if m.group(1) == "x" else -index)
            return cls(letters)
        try:
            return cls(_CHARS[c] for c in s)
        except KeyError as exc:
            raise ValueError(f"bad word character {exc.args[0]!r} in {text!r}") from None

    def text(self, rank: int | None = None) -> str:
        """Render the word; compact a/b form when the rank context is <= 2."""
        if not self.letters:
            return "1"
        r = self.max_generator() if rank is None else max(rank, self.max_generator())
        if r <= 2:
            return "".join(_CHARS_REV[l] for l in self.letters)
        return " ".join(("x" if l > 0 else "X") + str(abs(l)) for l in self.letters)

    # -- group structure ------------------------------------------------

    def __mul__(self, other: Word) -> Word:
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self.letters + other.letters)

    def inverse(self) -> Word:
        return Word(tuple(-l for l in reversed(self.letters)))

    def __pow__(self, n: int) -> Word:
        if n < 0:
            return self.inverse() ** (-n)
        return Word(self.letters * n)

    def substitute(self, images: Sequence[Word]) -> Word:
        """Replace x_i by images[i-1]; a homomorphism into the target group."""
        out: list[int] = []
        for letter in self.letters:
            index = abs(letter) - 1
            if index >= len(images):
                raise ValueError(f"no image provided for generator x{abs(letter)}")
            img = images[index].letters
            if letter > 0:
                out.extend(img)
            else:
                out.extend(-l for l in reversed(img))
        return Word(out)

    # -- letter-level transformations -------------------------------------

    def reverse(self) -> Word:
        """The word read backward (letter signs unchanged)."""
        return Word(tuple(reversed(self.letters)))

    def swap_letters(self) -> Word:
        """Interchange the first two generators; defined for rank <= 2 only."""
        if self.max_generator() > 2:
            raise ValueError("letter swap is defined for words over a, b only")
        table = {1: 2, 2: 1, -1: -2, -2: -1}
        return Word(tuple(table[l] for l in self.letters))

    def cyclically_reduce(self) -> tuple[Word, Word]:
        """Return (core, conjugator) with self = conjugator * core * conjugator^-1."""
        ls = self.letters
        i, j = 0, len(ls)
        while j - i >= 2 and ls[i] == -ls[j - 1]:
            i += 1
            j -= 1
        return Word(ls[i:j]), Word(ls[:i])

    def is_cyclically_reduced(self) -> bool:
        ls = self.letters
        return len(ls) < 2 or ls[0] != -ls[-1]

    def is_conjugate(self, other: Word) -> bool:
        """Free-group conjugacy: cyclic cores are rotations of each other."""
        c1, _ = self.cyclically_reduce()
        c2, _ = other.cyclically_reduce()
        n = len(c1.letters)
        if n != len(c2.letters):
            return False
        if n == 0:
            return True
        doubled = c1.letters + c1.letters
        return any(doubled[k : k + n] == c2.letters for k in range(n))

    def exponent_sum(self, gen: int) -> int:
        return sum(1 if l == gen else -1 if l == -gen else 0 for l in self.letters)

    def max_generator(self) -> int:
        return max((abs(l) for l in self.letters), default=0)

    # -- value protocol ----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __str__(self) -> str:
        return self.text()

    def __repr__(self) -> str:
        return f"Word({self.text()!r})"


def word_sort_key(w: Word) -> tuple:
    """Length-lexicographic order with a < a^-1 < b < b^-1 < x3 < ..."""
    return (len(w.letters), tuple((abs(l), 0 if l > 0 else 1) for l in w.letters))
