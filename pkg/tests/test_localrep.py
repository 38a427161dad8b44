import itertools

import pytest

from braidact.autf2 import AutF2
from braidact.localrep import (
    ARTIN_CORE,
    FAMILY_TAGS,
    FamilyId,
    LocalRep,
    PathError,
    Quad,
    backward_dual,
    build_gamma,
    can_extend,
    canonicalize,
    catalog,
    check_pair_via_braid,
    check_quad,
    classify_search,
    component_vertices,
    constant_rep,
    identify_quad,
    inverse_rep,
    outgoing_cores,
    rep_from_cores,
    rep_from_path,
    swap_dual,
    symmetry_orbit,
)
from braidact.words import Word

from .util import reduced_words


def q(text):
    return Quad.parse(text)


def all_family_ids(max_r):
    for fam in FAMILY_TAGS:
        rs = range(max_r + 1) if fam in ("A1", "A2", "A3") else (None,)
        for r in rs:
            yield FamilyId(fam, r)


class TestCheckQuad:
    def test_trivial_family_valid(self):
        assert check_quad(*q("a,b,a,b").words).valid

    def test_conjugation_family_valid(self):
        assert check_quad(*q("abA,a,abA,a").words).valid

    def test_mismatched_pair_fails_m_and_b(self):
        report = check_quad(*q("a,b,b,a").words)
        assert not report.valid
        assert report.eq_t and not report.eq_m and not report.eq_b
        assert report.failures() == ("M", "B")

    def test_rank_error(self):
        with pytest.raises(ValueError):
            check_quad(Word.parse("x3"), *q("a,b,a").words[:3])


class TestCheckPairViaBraid:
    def test_artin_cores(self):
        assert check_pair_via_braid(ARTIN_CORE, ARTIN_CORE)

    def test_identity_cores(self):
        assert check_pair_via_braid(AutF2.identity(), AutF2.identity())

    def test_identity_with_swap_fails(self):
        assert not check_pair_via_braid(AutF2.identity(), AutF2.parse("b,a"))

    def test_non_basis_rejected(self):
        with pytest.raises(ValueError):
            check_pair_via_braid(AutF2.parse("aa,b"), AutF2.identity())

    def test_agreement_with_check_quad_exhaustive(self):
        words = reduced_words(2)
        from braidact.autf2 import is_basis

        pairs = [(u, v) for u in words for v in words if is_basis(u, v)]
        for (a, b), (c, d) in itertools.product(pairs, repeat=2):
            assert check_quad(a, b, c, d).valid == check_pair_via_braid(
                AutF2(a, b), AutF2(c, d)
            )

    def test_agreement_with_check_quad_random_longer(self):
        import random

        from braidact.autf2 import is_basis

        rng = random.Random(31)
        words = reduced_words(5)
        bases = [(u, v) for u in words for v in words if len(u) + len(v) >= 5 and is_basis(u, v)]
        for _ in range(150):
            a, b = rng.choice(bases)
            c, d = rng.choice(bases)
            assert check_quad(a, b, c, d).valid == check_pair_via_braid(
                AutF2(a, b), AutF2(c, d)
            )


class TestSymmetries:
    def test_swap_dual_rule(self):
        # (A,B,C,D) -> (D,C,B,A) with letters interchanged
        assert swap_dual(q("B,a,B,a")) == q("b,A,b,A")

    def test_trivial_inverting_family_is_swap_self_dual(self):
        assert swap_dual(q("a,B,A,b")) == q("a,B,A,b")

    def test_backward_dual_flips_conjugation_direction(self):
        assert backward_dual(catalog(FamilyId("A1", 2))) == Quad(
            Word.parse("AAbaa"), Word.parse("a"), Word.parse("AAbaa"), Word.parse("a")
        )

    def test_inverse_rep_of_artin_family(self):
        assert inverse_rep(q("abA,a,abA,a")) == q("b,Bab,b,Bab")

    @pytest.mark.parametrize("fid", list(all_family_ids(3)), ids=str)
    def test_involutions_commutation_validity(self, fid):
        quad = catalog(fid)
        images = {
            "inv": inverse_rep(quad),
            "swap": swap_dual(quad),
            "bw": backward_dual(quad),
        }
        ops = {"inv": inverse_rep, "swap": swap_dual, "bw": backward_dual}
        for name, image in images.items():
            assert check_quad(*image.words).valid
            assert ops[name](image) == quad
        for n1, n2 in itertools.combinations(ops, 2):
            assert ops[n1](ops[n2](quad)) == ops[n2](ops[n1](quad))

    def test_invalid_input_rejected(self):
        with pytest.raises(ValueError, match="not valid"):
            swap_dual(q("a,b,b,a"))


class TestCanonicalize:
    def test_trivial_family_fixed(self):
        assert canonicalize(q("a,b,a,b")) == q("a,b,a,b")

    def test_b_family_orbit_representative(self):
        # both B-family vertices land on the same canonical quad
        assert canonicalize(q("B,a,B,a")) == q("b,A,b,A")
        assert canonicalize(q("b,A,b,A")) == q("b,A,b,A")

    def test_idempotent_on_catalog(self):
        for fid in all_family_ids(2):
            canon = canonicalize(catalog(fid))
            assert canonicalize(canon) == canon

    def test_orbit_size_divides_eight(self):
        for fid in all_family_ids(3):
            orbit = set(symmetry_orbit(catalog(fid)))
            assert 8 % len(orbit) == 0


def test_every_catalog_core_inverts_cleanly():
    for fid in all_family_ids(3):
        quad = catalog(fid)
        for core in (quad.tau, quad.kappa):
            assert core.compose(core.inverse()).is_identity()
            assert core.inverse().compose(core).is_identity()


class TestCatalog:
    def test_flagship_values(self):
        assert catalog(FamilyId("D4")) == q("abA,bbA,Aba,Abb")
        assert catalog(FamilyId("A2", 0)) == q("b,a,B,A")
        assert catalog(FamilyId("C3")) == q("aba,A,aba,A")

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            catalog(FamilyId.parse("E1"))

    def test_a_family_needs_r(self):
        with pytest.raises(ValueError):
            catalog(FamilyId("A1"))

    def test_fixed_family_rejects_r(self):
        with pytest.raises(ValueError):
            catalog(FamilyId("B1", 2))

    @pytest.mark.parametrize("fid", list(all_family_ids(4)), ids=str)
    def test_all_emitted_quads_valid(self, fid):
        for inv, swap, backward in itertools.product((False, True), repeat=3):
            decorated = FamilyId(fid.family, fid.r, inv, swap, backward)
            assert check_quad(*catalog(decorated).words).valid

    def test_family_id_text_round_trip(self):
        for text in ("T", "T'", "A1:r=2", "D2:-s", "C1:bw", "A3:r=0:-sbw"):
            assert str(FamilyId.parse(text)) == text

    def test_identify_quad(self):
        assert identify_quad(q("a,b,a,b")) == FamilyId("T")
        assert identify_quad(catalog(FamilyId("A2", 1))) == FamilyId("A2", 1)
        assert identify_quad(q("a,b,b,a")) is None

    def test_shared_orbit_of_two_mixing_families(self):
        # D3 is the inverse-swap-backward image of D2; one orbit, two names
        assert catalog(FamilyId("D3")) == catalog(
            FamilyId("D2", inv=True, swap=True, backward=True)
        )


class TestClassifySearch:
    def test_length_one_classes(self):
        classes = classify_search(1)
        expected = {
            canonicalize(catalog(FamilyId(fam, r)))
            for fam, r in [
                ("T", None),
                ("T'", None),
                ("A1", 0),
                ("A2", 0),
                ("A3", 0),
                ("B1", None),
                ("B2", None),
            ]
        }
        assert classes == expected
        assert len(classes) == 7

    def test_length_two_adds_nothing(self):
        assert len(classify_search(2)) == 7

    def test_results_closed_under_canonicalize(self):
        for quad in classify_search(1):
            assert canonicalize(quad) == quad
            assert check_quad(*quad.words).valid
            assert check_pair_via_braid(quad.tau, quad.kappa)

    def test_jobs_do_not_change_result(self):
        assert classify_search(1, jobs=2) == classify_search(1)

    def test_bad_max_len(self):
        with pytest.raises(ValueError):
            classify_search(0)


def _pairs(graph):
    return {(str(e.src), str(e.dst)) for e in graph.edges}


class TestGamma:
    def test_trivial_component(self):
        g = build_gamma(component_vertices("T"))
        assert _pairs(g) == {("a,b", "a,b")}

    def test_inverting_component_single_arrow(self):
        g = build_gamma(component_vertices("T'"))
        assert _pairs(g) == {("a,B", "A,b")}

    def test_b_component(self):
        g = build_gamma(component_vertices("B"))
        assert _pairs(g) == {
            ("B,a", "B,a"),
            ("b,A", "b,A"),
            ("B,a", "b,A"),
            ("b,A", "B,a"),
        }

    def test_a_component_r1(self):
        g = build_gamma(component_vertices("A", 1))
        assert _pairs(g) == {
            ("abA,a", "abA,a"),
            ("abA,a", "aBA,A"),
            ("aBA,A", "Aba,a"),
            ("aBA,A", "ABa,A"),
            ("ABa,A", "abA,a"),
            ("ABa,A", "aBA,A"),
            ("Aba,a", "Aba,a"),
            ("Aba,a", "ABa,A"),
        }

    def test_a_component_r0_degenerates(self):
        vertices = component_vertices("A", 0)
        assert len(vertices) == 2
        g = build_gamma(vertices)
        assert _pairs(g) == {
            ("b,a", "b,a"),
            ("b,a", "B,A"),
            ("B,A", "b,a"),
            ("B,A", "B,A"),
        }

    def test_labels_expand_to_edge_quads(self):
        for kind, r in [("A", 1), ("B", None), ("C", None), ("D", None)]:
            g = build_gamma(component_vertices(kind, r))
            for e in g.edges:
                fid = FamilyId.parse(e.label)
                assert catalog(fid) == Quad.from_cores(e.src, e.dst)

    def test_non_basis_vertex_rejected(self):
        with pytest.raises(ValueError):
            build_gamma([AutF2(Word.parse("aa"), Word.parse("b"))])

    def test_dot_output(self):
        g = build_gamma(component_vertices("T"))
        dot = g.to_dot()
        assert dot.startswith("digraph gamma {")
        assert '"(a,b)" -> "(a,b)" [label="T"];' in dot


class TestReps:
    def test_constant_artin_path(self):
        rep = constant_rep(ARTIN_CORE, 4)
        assert rep.n == 4 and len(rep.cores) == 3

    def test_alternating_b_path(self):
        g = build_gamma(component_vertices("B"))
        v, w_ = g.vertices
        rep = rep_from_path(g, [v, w_, v])
        assert rep.n == 4

    def test_single_vertex_path(self):
        g = build_gamma(component_vertices("C"))
        rep = rep_from_path(g, [g.vertices[0]])
        assert rep.n == 2

    def test_missing_edge_names_pair(self):
        g = build_gamma(component_vertices("T'"))
        src, dst = g.vertices[1], g.vertices[0]
        assert not g.has_edge(src, dst)
        with pytest.raises(PathError, match=r"no edge from \(A,b\)"):
            rep_from_path(g, [src, dst])

    def test_rep_from_cores_validates(self):
        with pytest.raises(PathError):
            rep_from_cores((AutF2.identity(), AutF2.parse("b,a")))

    def test_local_rep_shape_checked(self):
        with pytest.raises(ValueError):
            LocalRep(3, (ARTIN_CORE,))


class TestExtension:
    def test_artin_extends(self):
        assert can_extend(constant_rep(ARTIN_CORE, 3))
        successors = {str(core) for core, _ in outgoing_cores(ARTIN_CORE)}
        assert successors == {"abA,a", "aBA,A"}

    def test_inverting_type_does_not_extend(self):
        rep = rep_from_cores((AutF2.parse("a,B"), AutF2.parse("A,b")))
        assert not can_extend(rep)

    def test_self_loop_vertex_extends(self):
        assert can_extend(constant_rep(AutF2.parse("aBa,a"), 2))

    def test_trivial_strand_count_extends(self):
        assert can_extend(LocalRep(1, ()))
