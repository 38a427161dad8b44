"""Local actions on the rank-three free group and their classification.

A quadruple of reduced words (A, B, C, D) over {a, b} encodes two
endomorphisms of F_2 — tau: a|->A, b|->B and kappa: a|->C, b|->D.  The
pair defines a braid-compatible local action on F_3 exactly when three
word equations hold and both pairs are bases.  This module checks those
equations, applies the three commuting symmetries (inverse, swap,
backward), emits the fourteen classified families, re-derives the
classification by bounded exhaustive search, and builds the successor
graph whose edge-paths enumerate local actions on F_n.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .autf2 import AutF2, aut_sort_key, is_basis
from .words import Word, word_sort_key

__all__ = [
    "ARTIN_CORE",
    "COMPONENT_KINDS",
    "FAMILY_TAGS",
    "FamilyId",
    "GammaEdge",
    "GammaGraph",
    "LocalRep",
    "PathError",
    "Quad",
    "QuadReport",
    "backward_dual",
    "base_quad",
    "build_gamma",
    "can_extend",
    "canonicalize",
    "catalog",
    "check_pair_via_braid",
    "check_quad",
    "classify_search",
    "component_vertices",
    "constant_rep",
    "identify_quad",
    "inverse_rep",
    "outgoing_cores",
    "quad_sort_key",
    "rep_from_cores",
    "rep_from_path",
    "swap_dual",
    "symmetry_orbit",
]

_X, _Y, _Z = Word((1,)), Word((2,)), Word((3,))
_A, _B = Word((1,)), Word((2,))

ARTIN_CORE = AutF2(Word((1, 2, -1)), _A)


class PathError(ValueError):
    """A vertex sequence uses a pair that is not a valid adjacency."""


@dataclass(frozen=True)
class Quad:
    """Images (A, B, C, D) of two rank-two endomorphisms."""

    a: Word
    b: Word
    c: Word
    d: Word

    @classmethod
    def parse(cls, text: str) -> Quad:
        parts = text.split(",")
        if len(parts) != 4:
            raise ValueError(f"expected 'A,B,C,D' quad syntax, got {text!r}")
        return cls(*(Word.parse(p) for p in parts))

    @classmethod
    def from_cores(cls, tau: AutF2, kappa: AutF2) -> Quad:
        return cls(tau.image_a, tau.image_b, kappa.image_a, kappa.image_b)

    @property
    def tau(self) -> AutF2:
        return AutF2(self.a, self.b)

    @property
    def kappa(self) -> AutF2:
        return AutF2(self.c, self.d)

    @property
    def words(self) -> tuple[Word, Word, Word, Word]:
        return (self.a, self.b, self.c, self.d)

    def max_word_length(self) -> int:
        return max(len(w) for w in self.words)

    def __str__(self) -> str:
        return ",".join(w.text(2) for w in self.words)


@dataclass(frozen=True)
class QuadReport:
    """Outcome of the defining checks, condition by condition."""

    quad: Quad
    basis_ab: bool
    basis_cd: bool
    eq_t: bool
    eq_m: bool
    eq_b: bool

    @property
    def valid(self) -> bool:
        return self.basis_ab and self.basis_cd and self.eq_t and self.eq_m and self.eq_b

    def failures(self) -> tuple[str, ...]:
        out = []
        if not self.basis_ab:
            out.append("Aut(A,B)")
        if not self.basis_cd:
            out.append("Aut(C,D)")
        if not self.eq_t:
            out.append("T")
        if not self.eq_m:
            out.append("M")
        if not self.eq_b:
            out.append("B")
        return tuple(out)


def check_quad(a: Word, b: Word, c: Word, d: Word) -> QuadReport:
    """Evaluate the three defining word equations in F_3 plus both basis tests.

    Failure is data, not an error: the report carries one flag per condition.
    """
    for w in (a, b, c, d):
        if w.max_generator() > 2:
            raise ValueError("quad words must be over a, b")
    c_yz = c.substitute((_Y, _Z))
    d_yz = d.substitute((_Y, _Z))
    c_bz = c.substitute((b, _Z))
    b_xc = b.substitute((_X, c_yz))
    eq_t = a.substitute((a, c_bz)) == a.substitute((_X, c_yz))
    eq_m = b.substitute((a, c_bz)) == c.substitute((b_xc, d_yz))
    eq_b = d.substitute((b, _Z)) == d.substitute((b_xc, d_yz))
    return QuadReport(
        quad=Quad(a, b, c, d),
        basis_ab=is_basis(a, b),
        basis_cd=is_basis(c, d),
        eq_t=eq_t,
        eq_m=eq_m,
        eq_b=eq_b,
    )


def check_pair_via_braid(tau: AutF2, kappa: AutF2) -> bool:
    """Cross-check: compare the two triple compositions of the local maps.

    Builds the 1-local and 2-local endomorphisms of F_3 induced by the two
    cores and tests g1 g2 g1 = g2 g1 g2 generator by generator (right
    action).  Agrees with :func:`check_quad` on every pair of bases.
    """
    for phi in (tau, kappa):
        if not is_basis(phi.image_a, phi.image_b):
            raise ValueError(f"core ({phi}) is not a basis of F_2")
    g1 = (tau.image_a, tau.image_b, _Z)
    g2 = (_X, kappa.image_a.substitute((_Y, _Z)), kappa.image_b.substitute((_Y, _Z)))

    def comp(e1, e2):
        return tuple(w.substitute(e2) for w in e1)

    return comp(comp(g1, g2), g1) == comp(comp(g2, g1), g2)


# -- the three commuting symmetries -------------------------------------


def _inverse_quad(q: Quad) -> Quad:
    return Quad.from_cores(q.tau.inverse(), q.kappa.inverse())


def _swap_quad(q: Quad) -> Quad:
    return Quad(
        q.d.swap_letters(), q.c.swap_letters(), q.b.swap_letters(), q.a.swap_letters()
    )


def _backward_quad(q: Quad) -> Quad:
    return Quad(*(w.reverse() for w in q.words))


def _require_valid(q: Quad, op: str) -> None:
    report = check_quad(*q.words)
    if not report.valid:
        raise ValueError(f"{op}: quad ({q}) is not valid (fails {report.failures()})")


def inverse_rep(q: Quad) -> Quad:
    """Quad of the inverted cores; an involution on valid quads."""
    _require_valid(q, "inverse_rep")
    return _inverse_quad(q)


def swap_dual(q: Quad) -> Quad:
    """(D, C, B, A) with a and b interchanged; an involution on valid quads."""
    _require_valid(q, "swap_dual")
    return _swap_quad(q)


def backward_dual(q: Quad) -> Quad:
    """Each word read backward; an involution on valid quads."""
    _require_valid(q, "backward_dual")
    return _backward_quad(q)


def symmetry_orbit(q: Quad) -> tuple[Quad, ...]:
    """The 8 symmetry images of a valid quad (duplicates possible)."""
    _require_valid(q, "symmetry_orbit")
    out = []
    for inv, swap, backward in itertools.product((False, True), repeat=3):
        img = q
        if inv:
            img = _inverse_quad(img)
        if swap:
            img = _swap_quad(img)
        if backward:
            img = _backward_quad(img)
        out.append(img)
    return tuple(out)


def quad_sort_key(q: Quad) -> tuple:
    return tuple(word_sort_key(w) for w in q.words)


def canonicalize(q: Quad) -> Quad:
    """Least symmetry image under the length-lexicographic word order."""
    return min(symmetry_orbit(q), key=quad_sort_key)


# -- the fourteen classified families ------------------------------------

FAMILY_TAGS = (
    "T",
    "T'",
    "A1",
    "A2",
    "A3",
    "B1",
    "B2",
    "C1",
    "C2",
    "C3",
    "D1",
    "D2",
    "D3",
    "D4",
)

_A_FAMILIES = ("A1", "A2", "A3")

_FIXED_QUADS = {
    "T": ("a", "b", "a", "b"),
    "T'": ("a", "B", "A", "b"),
    "B1": ("B", "a", "B", "a"),
    "B2": ("B", "a", "b", "A"),
    "C1": ("aBa", "a", "aBa", "a"),
    "C2": ("aBa", "a", "aba", "A"),
    "C3": ("aba", "A", "aba", "A"),
    "D1": ("ABa", "bba", "ABa", "bba"),
    "D2": ("abA", "bbA", "ABa", "bba"),
    "D3": ("ABa", "bba", "Aba", "Abb"),
    "D4": ("abA", "bbA", "Aba", "Abb"),
}


def _conj_power(r: int, mid: int) -> Word:
    """a^r mid a^-r (r may be negative)."""
    outer = 1 if r >= 0 else -1
    return Word((outer,) * abs(r) + (mid,) + (-outer,) * abs(r))


def base_quad(family: str, r: int | None = None) -> Quad:
    if family in _FIXED_QUADS:
        if r is not None:
            raise ValueError(f"family {family} takes no parameter r")
        return Quad(*(Word.parse(t) for t in _FIXED_QUADS[family]))
    if family in _A_FAMILIES:
        if r is None or r < 0:
            raise ValueError(f"family {family} needs a parameter r >= 0")
        a_inv = _A.inverse()
        if family == "A1":
            return Quad(_conj_power(r, 2), _A, _conj_power(r, 2), _A)
        if family == "A2":
            return Quad(_conj_power(r, 2), _A, _conj_power(r, -2), a_inv)
        return Quad(_conj_power(r, -2), a_inv, _conj_power(-r, -2), a_inv)
    raise ValueError(f"unknown family tag {family!r}")


@dataclass(frozen=True)
class FamilyId:
    """A family tag, its parameter when applicable, and a symmetry decoration."""

    family: str
    r: int | None = None
    inv: bool = False
    swap: bool = False
    backward: bool = False

    @classmethod
    def parse(cls, text: str) -> FamilyId:
        parts = text.split(":")
        family = parts[0]
        if family not in FAMILY_TAGS:
            raise ValueError(f"unknown family tag {family!r}")
        r: int | None = None
        inv = swap = backward = False
        for part in parts[1:]:
            if part.startswith("r="):
                r = int(part[2:])
            else:
                rest = part
                if rest.startswith("-"):
                    inv = True
                    rest = rest[1:]
                if rest.startswith("s"):
                    swap = True
                    rest = rest[1:]
                if rest.startswith("bw"):
                    backward = True
                    rest = rest[2:]
                if rest:
                    raise ValueError(f"bad decoration {part!r} in {text!r}")
        return cls(family, r, inv, swap, backward)

    @property
    def decoration(self) -> str:
        return ("-" if self.inv else "") + ("s" if self.swap else "") + (
            "bw" if self.backward else ""
        )

    def __str__(self) -> str:
        out = self.family
        if self.r is not None:
            out += f":r={self.r}"
        if self.decoration:
            out += f":{self.decoration}"
        return out


def catalog(fid: FamilyId) -> Quad:
    """Exact quad for a (possibly decorated) family identifier."""
    q = base_quad(fid.family, fid.r)
    if fid.inv:
        q = _inverse_quad(q)
    if fid.swap:
        q = _swap_quad(q)
    if fid.backward:
        q = _backward_quad(q)
    return q


_DECORATIONS = tuple(
    (inv, swap, backward)
    for inv, swap, backward in itertools.product((False, True), repeat=3)
)


def _family_ids(max_word_len: int):
    for family in FAMILY_TAGS:
        rs: Sequence[int | None]
        if family in _A_FAMILIES:
            rs = range(0, (max_word_len - 1) // 2 + 1)
        else:
            rs = (None,)
        for r in rs:
            for inv, swap, backward in _DECORATIONS:
                yield FamilyId(family, r, inv, swap, backward)


def identify_quad(q: Quad) -> FamilyId | None:
    """First decorated family identifier whose quad equals q, if any."""
    for fid in _family_ids(q.max_word_length()):
        if catalog(fid) == q:
            return fid
    return None


# -- bounded exhaustive classification search ------------------------------


def _reduced_letter_tuples(max_len: int) -> list[tuple[int, ...]]:
    words: list[tuple[int, ...]] = [()]
    frontier: list[tuple[int, ...]] = [()]
    for _ in range(max_len):
        step = []
        for w in frontier:
            for letter in (1, -1, 2, -2):
                if w and w[-1] == -letter:
                    continue
                step.append(w + (letter,))
        words.extend(step)
        frontier = step
    return words


def _basis_pairs_up_to(max_len: int) -> list[tuple[Word, Word]]:
    ws = [Word(t) for t in _reduced_letter_tuples(max_len)]
    exps = [(w.exponent_sum(1), w.exponent_sum(2)) for w in ws]
    pairs = []
    for u, (ua, ub) in zip(ws, exps):
        for v, (va, vb) in zip(ws, exps):
            if abs(ua * vb - ub * va) != 1:
                continue
            if is_basis(u, v):
                pairs.append((u, v))
    return pairs


def _scan_block(max_len: int, lo: int, hi: int | None) -> list[Quad]:
    """Check every quad whose (A, B) pair falls in pairs[lo:hi]."""
    pairs = _basis_pairs_up_to(max_len)
    shifted: dict[tuple[int, ...], Word] = {}
    b_xc: dict[tuple[tuple[int, ...], tuple[int, ...]], Word] = {}
    c_bz: dict[tuple[tuple[int, ...], tuple[int, ...]], Word] = {}
    rhs_t: dict[tuple[tuple[int, ...], tuple[int, ...]], Word] = {}

    def shift(w: Word) -> Word:
        key = w.letters
        got = shifted.get(key)
        if got is None:
            got = shifted[key] = w.substitute((_Y, _Z))
        return got

    survivors = []
    for a, b in pairs[lo:hi]:
        for c, d in pairs:
            cs = shift(c)
            ds = shift(d)
            key_bc = (b.letters, c.letters)
            bxc = b_xc.get(key_bc)
            if bxc is None:
                bxc = b_xc[key_bc] = b.substitute((_X, cs))
            if d.substitute((b, _Z)) != d.substitute((bxc, ds)):
                continue
            cbz = c_bz.get(key_bc)
            if cbz is None:
                cbz = c_bz[key_bc] = c.substitute((b, _Z))
            key_ac = (a.letters, c.letters)
            rhs = rhs_t.get(key_ac)
            if rhs is None:
                rhs = rhs_t[key_ac] = a.substitute((_X, cs))
            if a.substitute((a, cbz)) != rhs:
                continue
            if b.substitute((a, cbz)) != c.substitute((bxc, ds)):
                continue
            survivors.append(Quad(a, b, c, d))
    return survivors


def classify_search(max_len: int, jobs: int = 1) -> set[Quad]:
    """All canonical classes of valid quads with word lengths <= max_len.

    Candidates are pruned by the abelianized determinant, then both basis
    tests, then the word equations (cheapest reject first).  The result is
    a set of canonical representatives and does not depend on `jobs`.
    """
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    if jobs <= 1:
        found = _scan_block(max_len, 0, None)
    else:
        import multiprocessing

        npairs = len(_basis_pairs_up_to(max_len))
        chunks = max(1, jobs)
        step = -(-npairs // chunks)
        bounds = [(i, min(i + step, npairs)) for i in range(0, npairs, step)]
        with multiprocessing.Pool(jobs) as pool:
            parts = pool.starmap(
                _scan_block, [(max_len, lo, hi) for lo, hi in bounds]
            )
        found = [q for part in parts for q in part]
    return {canonicalize(q) for q in found}


# -- representations as core sequences -------------------------------------


@dataclass(frozen=True)
class LocalRep:
    """Cores (tau_1, ..., tau_{n-1}) of a local action on F_n."""

    n: int
    cores: tuple[AutF2, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("strand count must be >= 1")
        if len(self.cores) != self.n - 1:
            raise ValueError(f"{self.n} strands need {self.n - 1} cores, got {len(self.cores)}")

    def validate(self) -> None:
        """Check every adjacent pair; raises PathError on the first bad one."""
        for i in range(len(self.cores) - 1):
            q = Quad.from_cores(self.cores[i], self.cores[i + 1])
            if not check_quad(*q.words).valid:
                raise PathError(
                    f"cores {i + 1} and {i + 2} (({self.cores[i]}); ({self.cores[i + 1]})) "
                    "do not define a local action"
                )


def rep_from_cores(cores: Sequence[AutF2]) -> LocalRep:
    rep = LocalRep(len(cores) + 1, tuple(cores))
    rep.validate()
    return rep


def constant_rep(core: AutF2, n: int) -> LocalRep:
    """The rep with every core equal (requires a self-adjacency for n >= 3)."""
    return rep_from_cores((core,) * (n - 1))


# -- the successor graph ----------------------------------------------------


@dataclass(frozen=True)
class GammaEdge:
    src: AutF2
    dst: AutF2
    label: str


@dataclass(frozen=True)
class GammaGraph:
    vertices: tuple[AutF2, ...]
    edges: tuple[GammaEdge, ...]

    def has_edge(self, src: AutF2, dst: AutF2) -> bool:
        return any(e.src == src and e.dst == dst for e in self.edges)

    def successors(self, v: AutF2) -> tuple[AutF2, ...]:
        return tuple(e.dst for e in self.edges if e.src == v)

    def edge_pairs(self) -> set[tuple[AutF2, AutF2]]:
        return {(e.src, e.dst) for e in self.edges}

    def to_dot(self, name: str = "gamma") -> str:
        lines = [f"digraph {name} {{"]
        for v in self.vertices:
            lines.append(f'  "({v})";')
        for e in self.edges:
            lines.append(f'  "({e.src})" -> "({e.dst})" [label="{e.label}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_gamma(vertices: Iterable[AutF2]) -> GammaGraph:
    """Complete directed adjacency (self-loops included) over the vertex set."""
    verts = tuple(sorted(set(vertices), key=aut_sort_key))
    for v in verts:
        if not is_basis(v.image_a, v.image_b):
            raise ValueError(f"vertex ({v}) is not a basis of F_2")
    edges = []
    for v in verts:
        for w in verts:
            q = Quad.from_cores(v, w)
            if check_quad(*q.words).valid:
                fid = identify_quad(q)
                edges.append(GammaEdge(v, w, str(fid) if fid is not None else "?"))
    return GammaGraph(verts, tuple(edges))


COMPONENT_KINDS = ("T", "T'", "A", "B", "C", "D")


def component_vertices(kind: str, r: int | None = None) -> tuple[AutF2, ...]:
    """Vertex set of one connected component of the classification graph."""
    a_inv = _A.inverse()
    b_inv = _B.inverse()
    if kind == "A":
        if r is None or r < 0:
            raise ValueError("component A needs a parameter r >= 0")
        raw = [
            AutF2(_conj_power(r, 2), _A),
            AutF2(_conj_power(r, -2), a_inv),
            AutF2(_conj_power(-r, -2), a_inv),
            AutF2(_conj_power(-r, 2), _A),
        ]
    else:
        if r is not None:
            raise ValueError(f"component {kind} takes no parameter r")
        if kind == "T":
            raw = [AutF2(_A, _B)]
        elif kind == "T'":
            raw = [AutF2(_A, b_inv), AutF2(a_inv, _B)]
        elif kind == "B":
            raw = [AutF2(b_inv, _A), AutF2(_B, a_inv)]
        elif kind == "C":
            raw = [AutF2(Word.parse("aBa"), _A), AutF2(Word.parse("aba"), a_inv)]
        elif kind == "D":
            raw = [
                AutF2(Word.parse("ABa"), Word.parse("bba")),
                AutF2(Word.parse("abA"), Word.parse("bbA")),
                AutF2(Word.parse("Aba"), Word.parse("Abb")),
                AutF2(Word.parse("aBA"), Word.parse("abb")),
            ]
        else:
            raise ValueError(f"unknown component kind {kind!r}")
    out: list[AutF2] = []
    for v in raw:
        if v not in out:
            out.append(v)
    return tuple(out)


def rep_from_path(graph: GammaGraph, path: Sequence[AutF2]) -> LocalRep:
    """Rep whose cores are the vertices of an edge-path of the graph."""
    for v, w in zip(path, path[1:]):
        if not graph.has_edge(v, w):
            raise PathError(f"no edge from ({v}) to ({w}) in the graph")
    return LocalRep(len(path) + 1, tuple(path))


def outgoing_cores(core: AutF2) -> tuple[tuple[AutF2, FamilyId], ...]:
    """All successors of a core, found by matching decorated family quads.

    Every valid pair is a symmetry image of a classified family, so scanning
    the decorated quads whose first core equals `core` enumerates the full
    outgoing edge set, self-loop included.
    """
    lmax = max(len(core.image_a), len(core.image_b), 1)
    seen: list[AutF2] = []
    out = []
    for fid in _family_ids(lmax):
        q = catalog(fid)
        if (q.a, q.b) == (core.image_a, core.image_b):
            target = AutF2(q.c, q.d)
            if target not in seen:
                seen.append(target)
                out.append((target, fid))
    return tuple(out)


def can_extend(rep: LocalRep) -> bool:
    """Whether the rep extends to more strands (last core has a successor)."""
    if not rep.cores:
        return True
    return bool(outgoing_cores(rep.cores[-1]))
