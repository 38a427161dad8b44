"""Group-valued link invariants from braid closures.

Fixing a local action, a braid beta on n strands yields the group
G(beta) = < x_1..x_n | (x_i)beta = x_i >.  When the action has the
stabilization properties this group only depends on the closure link,
so computable fingerprints of it (abelianization via Smith normal form,
homomorphism counts into small finite groups) are link invariants.
Fingerprint equality is "consistent with isomorphic"; inequality is a
definitive distinction.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable

from .autf2 import AutF2
from .braid import BraidWord, endo_of_braid
from .groups import FiniteGroupTable
from .localrep import LocalRep
from .snf import smith_normal_form
from .words import Word

__all__ = [
    "Fingerprint",
    "GroupPresentation",
    "S1Report",
    "abelian_invariants",
    "abelianization",
    "check_S1",
    "count_homs",
    "fingerprint",
    "markov_conjugate",
    "markov_stabilize",
    "presentation",
    "tietze_simplify",
]


@dataclass(frozen=True)
class GroupPresentation:
    """A finite presentation < x_1..x_ngens | relators >."""

    ngens: int
    relators: tuple[Word, ...]

    def __post_init__(self) -> None:
        if self.ngens < 0:
            raise ValueError("generator count must be >= 0")
        for r in self.relators:
            if r.max_generator() > self.ngens:
                raise ValueError(f"relator {r} uses a generator beyond x{self.ngens}")

    def text(self) -> str:
        rels = ", ".join(r.text(self.ngens) for r in self.relators)
        return f"gens: {self.ngens}; relators: {rels}"

    def __str__(self) -> str:
        return self.text()


def presentation(rep: LocalRep, braid: BraidWord, keep_trivial: bool = False) -> GroupPresentation:
    """Relators (x_i)beta * x_i^-1 for the closed-braid group."""
    endo = endo_of_braid(rep, braid)
    relators = []
    for i, image in enumerate(endo.images, start=1):
        r = image * Word.gen(i, -1)
        if r or keep_trivial:
            relators.append(r)
    return GroupPresentation(rep.n, tuple(relators))


def markov_conjugate(b: BraidWord, g: BraidWord) -> BraidWord:
    """g^-1 b g on the same strand count."""
    if b.n != g.n:
        raise ValueError(f"strand mismatch: {b.n} vs {g.n}")
    return g.inverse() * b * g


def markov_stabilize(b: BraidWord, sign: int) -> BraidWord:
    """b with one extra strand and a trailing crossing on it."""
    if sign not in (1, -1):
        raise ValueError("stabilization sign must be +1 or -1")
    return BraidWord(b.n + 1, b.letters + (sign * b.n,))


def abelianization(p: GroupPresentation) -> tuple[int, ...]:
    """Invariant factors of the abelianized group, one entry per generator.

    Smith normal form diagonal of the relator exponent matrix, padded with
    zeros (free factors); entries form a divisibility chain.
    """
    if not p.relators:
        return (0,) * p.ngens
    rows = [[r.exponent_sum(j) for j in range(1, p.ngens + 1)] for r in p.relators]
    diag = smith_normal_form(rows)
    return tuple(diag) + (0,) * (p.ngens - len(diag))


def abelian_invariants(p: GroupPresentation) -> tuple[int, ...]:
    """Abelianization with unit factors dropped: a presentation-independent form."""
    return tuple(d for d in abelianization(p) if d != 1)


def count_homs(p: GroupPresentation, group: FiniteGroupTable, budget: int = 10_000_000) -> int:
    """Exact number of homomorphisms into the group, by exhaustive counting.

    Refuses (raises ValueError) when the candidate tuple space exceeds the
    budget; it never truncates silently.
    """
    total = group.order**p.ngens
    if total > budget:
        raise ValueError(
            f"hom counting refused: {group.order}^{p.ngens} = {total} tuples "
            f"exceeds the budget of {budget}"
        )
    relators = [r.letters for r in p.relators]
    table = group.table
    inv = group.inverse
    e = group.identity
    count = 0
    for assignment in itertools.product(range(group.order), repeat=p.ngens):
        for rel in relators:
            cur = e
            for l in rel:
                g = assignment[abs(l) - 1]
                if l < 0:
                    g = inv[g]
                cur = table[cur][g]
            if cur != e:
                break
        else:
            count += 1
    return count


def _renumber(w: Word, gone: int) -> Word:
    return Word(tuple(l - (1 if l > gone else 0) + (1 if l < -gone else 0) for l in w.letters))


def tietze_simplify(p: GroupPresentation, max_steps: int = 1000) -> GroupPresentation:
    """Shrink a presentation without changing the group.

    Per round: cyclically reduce relators, drop empty ones, then eliminate a
    generator that occurs exactly once in some relator (shortest relator
    first).  Every step is an isomorphism-preserving move, so group-level
    fingerprints are unchanged.
    """
    ngens = p.ngens
    relators = list(p.relators)
    for _ in range(max_steps):
        relators = [r.cyclically_reduce()[0] for r in relators]
        relators = [r for r in relators if r]
        choice = None
        for ri, r in enumerate(relators):
            counts: dict[int, int] = {}
            for l in r.letters:
                counts[abs(l)] = counts.get(abs(l), 0) + 1
            for g, c in counts.items():
                if c == 1:
                    key = (len(r), ri, g)
                    if choice is None or key < choice:
                        choice = key
        if choice is None:
            break
        _, ri, gone = choice
        r = relators.pop(ri)
        pos = next(k for k, l in enumerate(r.letters) if abs(l) == gone)
        rotated = r.letters[pos:] + r.letters[:pos]
        u = Word(rotated[1:])
        replacement = u.inverse() if rotated[0] > 0 else u
        replacement = _renumber(replacement, gone)
        images = []
        for m in range(1, ngens + 1):
            if m == gone:
                images.append(replacement)
            else:
                images.append(Word.gen(m - (1 if m > gone else 0)))
        relators = [rel.substitute(images) for rel in relators]
        ngens -= 1
    return GroupPresentation(ngens, tuple(relators))


@dataclass(frozen=True)
class S1Report:
    """Verdict on whether a core collapses the two-generator quotient to Z.

    status is one of "holds" (the relation forces a = b), the separately
    reported "holds-up-to-inversion" (forces a = b^-1), "fails" (provably
    neither), or "unknown" (the one-relator question was not decided).
    """

    status: str
    witness: str


def _s1_side(core: AutF2) -> tuple[str, str]:
    relator = (core.image_b * Word.gen(2, -1)).cyclically_reduce()[0]
    if not relator:
        return "fails", "relator is trivial, quotient is free of rank 2"
    counts = {1: 0, 2: 0}
    for l in relator.letters:
        counts[abs(l)] += 1
    for single, other in ((1, 2), (2, 1)):
        if counts[single] == 1:
            pos = next(k for k, l in enumerate(relator.letters) if abs(l) == single)
            rotated = relator.letters[pos:] + relator.letters[:pos]
            m = sum(1 if l == other else -1 for l in rotated[1:])
            k = -m if rotated[0] > 0 else m
            names = {1: "a", 2: "b"}
            s, o = names[single], names[other]
            if k == 1:
                return "holds", f"relator {relator.text(2)} forces {s} = {o}"
            if k == -1:
                return (
                    "holds-up-to-inversion",
                    f"relator {relator.text(2)} forces {s} = {o}^-1",
                )
            return "fails", f"relator {relator.text(2)} forces {s} = {o}^{k}"
    g = math.gcd(relator.exponent_sum(1), relator.exponent_sum(2))
    if g != 1:
        shape = "Z x Z" if g == 0 else f"Z x Z/{g}"
        return "fails", f"abelianized quotient is {shape}"
    return "unknown", f"relator {relator.text(2)} was not resolved"


def check_S1(core: AutF2) -> S1Report:
    """Decide the collapse property for a core and for its inverse.

    Both directions matter because a stabilizing crossing can carry either
    sign.  The result is the weaker of the two one-sided verdicts.
    """
    s1, w1 = _s1_side(core)
    s2, w2 = _s1_side(core.inverse())
    statuses = {s1, s2}
    if "fails" in statuses:
        status = "fails"
    elif "unknown" in statuses:
        status = "unknown"
    elif statuses == {"holds"}:
        status = "holds"
    else:
        status = "holds-up-to-inversion"
    return S1Report(status, f"core: {w1}; inverse core: {w2}")


@dataclass(frozen=True)
class Fingerprint:
    """Computable isomorphism invariants of a presented group.

    abelianization lists the nontrivial invariant factors (0 per free
    factor); hom_counts pairs group names with exact homomorphism counts.
    """

    abelianization: tuple[int, ...]
    hom_counts: tuple[tuple[str, int], ...]

    def hom_count(self, name: str) -> int:
        for n, c in self.hom_counts:
            if n == name:
                return c
        raise KeyError(name)

    def describe(self) -> str:
        if not self.abelianization:
            ab = "trivial"
        else:
            parts = [("Z" if d == 0 else f"Z/{d}") for d in self.abelianization]
            ab = " x ".join(parts)
        homs = ", ".join(f"{n}: {c}" for n, c in self.hom_counts)
        return f"abelianization {ab}" + (f"; hom counts {homs}" if homs else "")


def fingerprint(
    rep: LocalRep, braid: BraidWord, groups: Iterable[FiniteGroupTable] = ()
) -> Fingerprint:
    """Abelianization plus hom counts of the closed-braid group.

    The presentation is Tietze-simplified first; both measurements are
    invariants of the group, so the simplification only buys speed.
    """
    simplified = tietze_simplify(presentation(rep, braid))
    counts = tuple(
        sorted((g.name, count_homs(simplified, g)) for g in groups)
    )
    return Fingerprint(abelian_invariants(simplified), counts)
