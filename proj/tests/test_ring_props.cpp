#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sr/complex.hpp"
#include "sr/corpus.hpp"
#include "sr/families.hpp"
#include "sr/hochster.hpp"
#include "sr/ring_props.hpp"

using namespace sr;

namespace {
const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::gf(2);
} // namespace

TEST_CASE("Cohen-Macaulay and Buchsbaum classification") {
    SimplicialComplex d5 = hibi_cycle(3);
    CHECK_FALSE(is_cohen_macaulay(d5, Q));
    CHECK(is_buchsbaum(d5, Q));

    // skeletons of a simplex are Cohen-Macaulay
    CHECK(is_cohen_macaulay(skeleton_complex(5, 3), Q));
    CHECK(is_cohen_macaulay(skeleton_complex(5, 3), F2));

    // characteristic split for the projective plane
    CHECK(is_cohen_macaulay(rp2(), Q));
    CHECK_FALSE(is_cohen_macaulay(rp2(), F2));
    CHECK(is_buchsbaum(rp2(), F2));

    // a non-pure complex is never Buchsbaum
    SimplicialComplex nonpure =
        SimplicialComplex::from_vertex_lists(5, {{0, 1, 2}, {3, 4}});
    CHECK_FALSE(is_buchsbaum(nonpure, Q));

    // disconnected pure: Buchsbaum but not Cohen-Macaulay
    SimplicialComplex segments =
        SimplicialComplex::from_vertex_lists(4, {{0, 1}, {2, 3}});
    CHECK(is_buchsbaum(segments, Q));
    CHECK_FALSE(is_cohen_macaulay(segments, Q));
}

TEST_CASE("homology upper bound values") {
    CHECK(h_bound(2, 3, 3) == Rat(1));
    CHECK(h_bound(3, 3, 3) == Rat(2));
    CHECK(h_bound(4, 3, 3) == Rat(10, 3));
    CHECK(h_bound(5, 3, 3) == Rat(5));
    CHECK(h_bound(1, 3, 3) == Rat(1, 3));
    // q = 2: the single factor c/d
    CHECK(h_bound(4, 2, 2) == Rat(2));
    CHECK(h_bound(3, 2, 2) == Rat(3, 2));
    CHECK(rat_floor(h_bound(4, 3, 3)) == 3);
    CHECK(rat_floor(Rat(-7, 2)) == -4);
}

TEST_CASE("predicted h-vectors") {
    CHECK(predicted_h_vector(2, 3, 3, 1).coeffs ==
          std::vector<long long>({1, 2, 3, -1}));
    CHECK(predicted_h_vector(3, 3, 3, 2).coeffs ==
          std::vector<long long>({1, 3, 6, -2}));
    CHECK(predicted_h_vector(2, 3, 3, 0).coeffs ==
          std::vector<long long>({1, 2, 3, 0}));
    // q = 2 alternates from degree 2 on
    CHECK(predicted_h_vector(3, 3, 2, 1).coeffs ==
          std::vector<long long>({1, 3, -3, 1}));
}

TEST_CASE("I-invariant matches the Buchsbaum closed form h * C(d-1, q-1)") {
    CHECK(i_invariant(hibi_cycle(3), Q) == 1);
    for (const CorpusEntry& entry : equivalence_corpus(Q)) {
        CAPTURE(entry.name);
        PropertyReport rep = make_property_report(entry.complex, Q);
        if (!rep.q_linear || !rep.q) continue;
        REQUIRE(rep.i_inv.has_value());
        CHECK(*rep.i_inv == rep.h * binomial(rep.d - 1, *rep.q - 1));
    }
}

TEST_CASE("minimal multiplicity and maximal homology flags") {
    CHECK(is_min_mult_type_q(hibi_cycle(3), Q));
    CHECK(has_maximal_homology(hibi_cycle(3), Q)); // h = bound = 1
    CHECK(is_min_mult_type_q(terai_complex(5), Q));
    // n ≡ 1 mod 3: maximal homology instead of minimal multiplicity
    CHECK_FALSE(is_min_mult_type_q(hanano(7), Q));
    CHECK(has_maximal_homology(hanano(7), Q));
    CHECK(is_min_mult_type_q(hanano(8), Q));
}

TEST_CASE("minimal multiplicity lower bound is attained exactly at min-mult") {
    for (const CorpusEntry& entry : equivalence_corpus(Q)) {
        CAPTURE(entry.name);
        PropertyReport rep = make_property_report(entry.complex, Q);
        if (!rep.q) continue;
        Rat bound = min_mult_lower_bound(rep.c, rep.d, *rep.q);
        CHECK(Rat(rep.e) >= bound);
        CHECK((Rat(rep.e) == bound) == rep.min_mult_type_q);
    }
}

TEST_CASE("seven-way equivalence is consistent and detects both verdicts") {
    MinMultEquivalence yes = check_min_mult_equivalence(hibi_cycle(3), Q);
    CHECK(yes.consistent);
    CHECK(yes.all_true);

    MinMultEquivalence no = check_min_mult_equivalence(hanano(7), Q);
    CHECK(no.consistent);
    CHECK_FALSE(no.all_true);

    for (const FieldSpec& f : {Q, F2}) {
        std::vector<CorpusEntry> corpus = equivalence_corpus(f);
        CHECK(corpus.size() >= 12);
        for (const CorpusEntry& entry : corpus) {
            CAPTURE(entry.name);
            CHECK(check_min_mult_equivalence(entry.complex, f).consistent);
        }
    }
}

TEST_CASE("sufficient criteria for minimal multiplicity") {
    for (int d = 3; d <= 5; ++d) CHECK(hibi_criterion(hibi_cycle(d), Q));
    CHECK_FALSE(hibi_criterion(rp2(), F2));
    // the improved criterion only requires vanishing in one homological degree
    CHECK(improved_criterion(hibi_cycle(3), Q));
    CHECK(improved_criterion(terai_complex(5), Q));
}

TEST_CASE("d-full complexes") {
    CHECK(is_d_full(hibi_cycle(3)));
    CHECK(is_d_full(rp2()));
    // one dimension down the condition only asks for the vertices, so even
    // a disjoint union of segments qualifies
    SimplicialComplex segments =
        SimplicialComplex::from_vertex_lists(4, {{0, 1}, {2, 3}});
    CHECK(is_d_full(segments));
    // two disjoint triangles miss the cross edges of the six-vertex simplex
    SimplicialComplex triangles =
        SimplicialComplex::from_vertex_lists(6, {{0, 1, 2}, {3, 4, 5}});
    CHECK_FALSE(is_d_full(triangles));
    // non-pure complexes are excluded outright
    SimplicialComplex mixed =
        SimplicialComplex::from_vertex_lists(4, {{0, 1, 2}, {2, 3}});
    CHECK_FALSE(is_d_full(mixed));
}

TEST_CASE("q = 2 classification via connected components") {
    CHECK(is_froberg_q2(disjoint_union_q2(3, 3, 1), Q));
    CHECK(is_froberg_q2(max_embdim_cm(2, 3), Q));
    CHECK_FALSE(is_froberg_q2(hibi_cycle(3), Q)); // indeg 3, not 2
}

TEST_CASE("property report fields are mutually consistent") {
    for (const FieldSpec& f : {Q, F2}) {
        PropertyReport rep = make_property_report(hibi_cycle(4), f);
        CHECK(rep.n == 7);
        CHECK(rep.d == 4);
        CHECK(rep.c == 3);
        CHECK(rep.q == 3);
        CHECK(rep.e == 7);
        CHECK(rep.pure);
        CHECK(rep.buchsbaum);
        CHECK_FALSE(rep.cm);
        CHECK(rep.q_linear);
        CHECK(rep.h == 1);
        CHECK(rep.min_mult_type_q);
        CHECK(rep.depth_ == rep.n - rep.betti.projective_dimension());
        long long sum = 0;
        for (long long v : rep.hvec.coeffs) sum += v;
        CHECK(sum == rep.e);
    }
}

TEST_CASE("a-invariant range for Buchsbaum q-linear corpus instances") {
    for (const FieldSpec& f : {Q, F2})
        for (const CorpusEntry& entry : standard_corpus()) {
            CAPTURE(entry.name);
            PropertyReport rep = make_property_report(entry.complex, f);
            if (!(rep.buchsbaum && rep.q_linear && rep.q)) continue;
            CHECK((rep.a_inv == *rep.q - rep.d - 2 ||
                   rep.a_inv == *rep.q - rep.d - 1));
        }
}
