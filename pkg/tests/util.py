"""Shared helpers and independent oracles for the test suite."""

from __future__ import annotations

import itertools

from braidact.groups import FiniteGroupTable
from braidact.invariant import GroupPresentation
from braidact.words import Word


def reduced_letter_tuples(max_len: int) -> list[tuple[int, ...]]:
    """Every reduced word over a, b with length <= max_len, as letter tuples."""
    out: list[tuple[int, ...]] = [()]
    frontier: list[tuple[int, ...]] = [()]
    for _ in range(max_len):
        step = []
        for w in frontier:
            for letter in (1, -1, 2, -2):
                if w and w[-1] == -letter:
                    continue
                step.append(w + (letter,))
        out.extend(step)
        frontier = step
    return out


def reduced_words(max_len: int) -> list[Word]:
    return [Word(t) for t in reduced_letter_tuples(max_len)]


def brute_hom_count(p: GroupPresentation, group: FiniteGroupTable) -> int:
    """Independent hom-count oracle: evaluate relators as explicit products.

    Works on the presentation exactly as given (no simplification), mapping
    each relator to a flat list of group elements and folding the product.
    """
    count = 0
    for assignment in itertools.product(range(group.order), repeat=p.ngens):
        images = list(assignment)
        ok = True
        for rel in p.relators:
            elems = [
                images[l - 1] if l > 0 else group.inverse[images[-l - 1]]
                for l in rel.letters
            ]
            acc = group.identity
            for e in elems:
                acc = group.table[acc][e]
            if acc != group.identity:
                ok = False
                break
        if ok:
            count += 1
    return count
