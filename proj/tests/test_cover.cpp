#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sr/complex.hpp>
#include <sr/cover.hpp>
#include <sr/error.hpp>
#include <sr/families.hpp>
#include <sr/ring_props.hpp>

#include <vector>

using namespace sr;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::gf(2);

VSet face(const std::vector<int>& verts) { return vs::of(verts); }

} // namespace

TEST_CASE("pentagon cover adds the one missing triangle") {
    SimplicialComplex pentagon = hibi_cycle(3);
    CoverResult r = cm_cover(pentagon, Q, 0);
    CHECK(r.attempts == 1);
    CHECK(r.added_facets == std::vector<VSet>{face({1, 3, 4})});
    CHECK(r.cover.facets().size() == 6);
    CHECK(is_valid_cm_cover(pentagon, r.cover, Q));

    SUBCASE("same seed reproduces the same cover") {
        CoverResult again = cm_cover(pentagon, Q, 0);
        CHECK(again.cover.facets() == r.cover.facets());
        CHECK(again.added_facets == r.added_facets);
        CHECK(again.attempts == r.attempts);
    }
    SUBCASE("other seeds still produce valid covers") {
        for (std::uint64_t seed : {1, 7, 23}) {
            CoverResult other = cm_cover(pentagon, Q, seed);
            CHECK(is_valid_cm_cover(pentagon, other.cover, Q));
            CHECK(other.added_facets.size() == 1);
        }
    }
}

TEST_CASE("moebius band covers depend on the field") {
    SimplicialComplex band = moebius();
    SimplicialComplex plane = rp2();

    SUBCASE("over the rationals the cover is the projective plane") {
        CoverResult r = cm_cover(band, Q, 0);
        CHECK(r.added_facets.size() == 1);
        CHECK(r.cover.facets().size() == 10);
        CHECK(r.cover.facets() == plane.facets());
        CHECK(is_valid_cm_cover(band, r.cover, Q));
    }
    SUBCASE("over GF(2) the plane is rejected and another facet is found") {
        CoverResult r = cm_cover(band, F2, 0);
        CHECK(r.attempts == 2); // first greedy pick completes the plane, which fails
        CHECK(r.added_facets == std::vector<VSet>{face({0, 1, 3})});
        CHECK(r.cover.facets().size() == 10);
        CHECK(r.cover.facets() != plane.facets());
        CHECK(is_valid_cm_cover(band, r.cover, F2));
    }
    SUBCASE("validity predicate splits on the field for the plane itself") {
        CHECK(is_valid_cm_cover(band, plane, Q));
        CHECK_FALSE(is_valid_cm_cover(band, plane, F2));
    }
}

TEST_CASE("pinwheel covers add exactly the homology rank many facets") {
    // dim H̃_1 = 2 for six vertices, 3 for seven; multiplicity lands on C(n-1,2)
    CoverResult r6 = cm_cover(hanano(6), Q, 0);
    CHECK(r6.added_facets.size() == 2);
    CHECK(r6.cover.facets().size() == 10);

    CoverResult r7 = cm_cover(hanano(7), Q, 0);
    CHECK(r7.added_facets.size() == 3);
    CHECK(r7.added_facets ==
          std::vector<VSet>{face({1, 3, 6}), face({2, 4, 6}), face({3, 5, 6})});
    CHECK(r7.cover.facets().size() == 15);

    PropertyReport rep = make_property_report(r7.cover, Q, 16);
    CHECK(rep.e == 15);
    CHECK(rep.cm);
    CHECK(rep.q.has_value());
    CHECK(*rep.q == 3);
    CHECK(rep.h == 0);
}

TEST_CASE("cover of an already completed complex adds nothing") {
    SimplicialComplex done = cm_cover(hibi_cycle(3), Q, 0).cover;
    CoverResult r = cm_cover(done, Q, 0);
    CHECK(r.added_facets.empty());
    CHECK(r.cover.facets() == done.facets());
}

TEST_CASE("cover rejects inputs without a matching linear resolution") {
    // all 3-subsets of five vertices: generators sit in degree 4, not dim+1
    CHECK_THROWS_AS(cm_cover(skeleton_complex(5, 3), Q, 0), Error);
    try {
        cm_cover(skeleton_complex(5, 3), Q, 0);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PreconditionFailed);
    }
}

TEST_CASE("cover validity predicate rejects structural mismatches") {
    SimplicialComplex pentagon = hibi_cycle(3);
    SimplicialComplex covered = cm_cover(pentagon, Q, 0).cover;

    // candidate on a different vertex count
    CHECK_FALSE(is_valid_cm_cover(pentagon, hibi_cycle(4), Q));
    // candidate that dropped a base facet
    std::vector<VSet> missing(covered.facets().begin() + 1, covered.facets().end());
    SimplicialComplex partial = SimplicialComplex::from_facets(5, missing);
    CHECK_FALSE(is_valid_cm_cover(pentagon, partial, Q));
    // the base itself is not Cohen-Macaulay, so it is not its own cover
    CHECK_FALSE(is_valid_cm_cover(pentagon, pentagon, Q));
}

TEST_CASE("sandwich interpolates between a base and its cover") {
    SimplicialComplex lower = hanano(6);
    SimplicialComplex upper = cm_cover(lower, Q, 0).cover;
    const long long e_lo = static_cast<long long>(lower.facets().size());
    const long long e_hi = static_cast<long long>(upper.facets().size());
    REQUIRE(e_lo == 8);
    REQUIRE(e_hi == 10);

    SUBCASE("endpoints reproduce the bounds exactly") {
        CHECK(sandwich_family(lower, upper, e_lo, Q, 0).facets() == lower.facets());
        CHECK(sandwich_family(lower, upper, e_hi, Q, 0).facets() == upper.facets());
    }
    SUBCASE("interior samples keep the classification") {
        for (std::uint64_t seed : {0, 5, 11}) {
            SimplicialComplex mid = sandwich_family(lower, upper, e_lo + 1, Q, seed);
            PropertyReport rep = make_property_report(mid, Q, 16);
            CHECK(rep.e == e_lo + 1);
            CHECK(rep.buchsbaum);
            CHECK(rep.q.has_value());
            CHECK(*rep.q == 3);
            CHECK(rep.h == 1);
        }
    }
    SUBCASE("same seed is reproducible") {
        SimplicialComplex a = sandwich_family(lower, upper, e_lo + 1, Q, 5);
        SimplicialComplex b = sandwich_family(lower, upper, e_lo + 1, Q, 5);
        CHECK(a.facets() == b.facets());
    }
    SUBCASE("error cases") {
        CHECK_THROWS_AS(sandwich_family(hibi_cycle(3), upper, e_lo, Q, 0), Error);
        try {
            sandwich_family(hibi_cycle(3), upper, e_lo, Q, 0);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NotNested);
        }
        CHECK_THROWS_AS(sandwich_family(lower, upper, e_hi + 1, Q, 0), Error);
        try {
            sandwich_family(lower, upper, e_hi + 1, Q, 0);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::TargetOutOfRange);
        }
    }
}

TEST_CASE("realization explorer status matrix") {
    auto outcome = [](int c, int d, int q, long long h) {
        return realize(c, d, q, h, Q, 1);
    };

    SUBCASE("feasible three-dimensional case is realized by the pipeline") {
        RealizationOutcome o = outcome(2, 3, 3, 1);
        CHECK(o.status == RealizationStatus::Realized);
        CHECK(o.method == RealizationMethod::Sandwich3);
        REQUIRE(o.witness.has_value());
        PropertyReport rep = make_property_report(*o.witness, Q, 16);
        CHECK(rep.c == 2);
        CHECK(rep.d == 3);
        CHECK(rep.buchsbaum);
        CHECK(rep.q.has_value());
        CHECK(*rep.q == 3);
        CHECK(rep.h == 1);
    }
    SUBCASE("homology above the bound is infeasible") {
        RealizationOutcome o = outcome(1, 3, 3, 1); // bound is 1/3, so h = 1 exceeds it
        CHECK(o.status == RealizationStatus::InfeasibleByBound);
        CHECK_FALSE(o.witness.has_value());
    }
    SUBCASE("two-linear targets use the disjoint union construction") {
        RealizationOutcome o = outcome(3, 2, 2, 1);
        CHECK(o.status == RealizationStatus::Realized);
        CHECK(o.method == RealizationMethod::DisjointUnionQ2);
        REQUIRE(o.witness.has_value());
        PropertyReport rep = make_property_report(*o.witness, Q, 16);
        CHECK(rep.c == 3);
        CHECK(rep.d == 2);
        CHECK(rep.h == 1);
    }
    SUBCASE("known example families cover further shapes") {
        for (auto [c, d, q, h] : {std::tuple{2, 3, 3, 0}, std::tuple{3, 5, 5, 3}}) {
            RealizationOutcome o = outcome(c, d, q, h);
            CHECK(o.status == RealizationStatus::Realized);
            REQUIRE(o.witness.has_value());
            PropertyReport rep = make_property_report(*o.witness, Q, 16);
            CHECK(rep.c == c);
            CHECK(rep.d == d);
            CHECK(rep.q.has_value());
            CHECK(*rep.q == q);
            CHECK(rep.h == h);
        }
    }
    SUBCASE("out-of-scope shapes come back unknown, not wrong") {
        RealizationOutcome o = outcome(4, 4, 3, 1);
        CHECK(o.status == RealizationStatus::Unknown);
        CHECK_FALSE(o.witness.has_value());
    }
    SUBCASE("same seed is reproducible") {
        RealizationOutcome a = outcome(2, 3, 3, 1);
        RealizationOutcome b = outcome(2, 3, 3, 1);
        REQUIRE(a.witness.has_value());
        REQUIRE(b.witness.has_value());
        CHECK(a.witness->facets() == b.witness->facets());
        CHECK(a.method == b.method);
    }
}

TEST_CASE("status and method names are stable strings") {
    CHECK(std::string(realization_status_name(RealizationStatus::Realized)) ==
          "Realized");
    CHECK(std::string(realization_status_name(RealizationStatus::InfeasibleByBound)) ==
          "InfeasibleByBound");
    CHECK(std::string(realization_status_name(RealizationStatus::Unknown)) ==
          "Unknown");
    CHECK(std::string(realization_method_name(RealizationMethod::Sandwich3)) ==
          "Sandwich3");
    CHECK(std::string(realization_method_name(RealizationMethod::DisjointUnionQ2)) ==
          "DisjointUnionQ2");
}
