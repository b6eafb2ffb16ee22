#pragma once

#include "sr/complex.hpp"
#include "sr/field.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sr {

struct CoverOptions {
    long long genericity_modulus = 32003; // prime field for the coefficient draw
    int retry_cap = 16;
};

struct CoverResult {
    SimplicialComplex cover;
    std::vector<VSet> added_facets;
    int attempts = 0;
    std::uint64_t seed = 0;
};

/**
 * Cohen-Macaulayfication by facet addition, for Buchsbaum complexes whose
 * face ring has a d-linear resolution (q = d):
 * substitute a random linear change of the last d variables into the degree-d
 * monomials of the size-d non-faces, expand over the first c variables, and
 * keep the non-faces whose rows are left over by a greedy independent-row
 * selection. The h = dim H̃_{d-2}(Δ) leftover non-faces become new facets.
 * The result has multiplicity C(n-1, d-1) and is re-verified to be
 * Cohen-Macaulay with a d-linear resolution over f (retrying with fresh
 * coefficients up to options.retry_cap, then GenericityExhausted).
 */
CoverResult cm_cover(const SimplicialComplex& dl, const FieldSpec& f,
                     std::uint64_t seed, const CoverOptions& options = {});

// The verification predicate used by cm_cover, exposed for tests: candidate
// must contain every facet of base, be pure of the same dimension, and be
// Cohen-Macaulay with a d-linear resolution over f.
bool is_valid_cm_cover(const SimplicialComplex& base,
                       const SimplicialComplex& candidate, const FieldSpec& f);

/**
 * Any complex sandwiched between two Buchsbaum d-linear complexes with the
 * same facet dimension is again Buchsbaum d-linear: sample one with the
 * requested facet count by drawing facets of upper ∖ lower uniformly without
 * replacement. Errors: NotNested, TargetOutOfRange, PreconditionFailed.
 * The output is re-verified over f.
 */
SimplicialComplex sandwich_family(const SimplicialComplex& lower,
                                  const SimplicialComplex& upper,
                                  long long target_facet_count,
                                  const FieldSpec& f, std::uint64_t seed);

enum class RealizationStatus { Realized, InfeasibleByBound, Unknown };

enum class RealizationMethod {
    DisjointUnionQ2,
    CyclicDual,
    CMExample,
    Sandwich3,
    SearchFail,
};

const char* realization_status_name(RealizationStatus s);
const char* realization_method_name(RealizationMethod m);

struct RealizationOutcome {
    int c = 0, d = 0, q = 0;
    long long h = 0;
    RealizationStatus status = RealizationStatus::Unknown;
    RealizationMethod method = RealizationMethod::SearchFail;
    std::optional<SimplicialComplex> witness;
    std::string note;
};

/**
 * Tries to produce a Buchsbaum complex with q-linear resolution, codimension
 * c, Krull dimension d and dim H̃_{q-2} = h:
 *   h > h_{c,d,q}      -> InfeasibleByBound
 *   q = 2              -> disjoint union construction
 *   h = 0              -> a Cohen-Macaulay q-linear example where available
 *   q = d = 3          -> minimal-example + cover + sandwich pipeline (complete)
 *   known family match -> that family
 *   otherwise          -> bounded random search, normally Unknown
 * Realized witnesses are always re-verified over f (dimension, codimension,
 * Buchsbaum, q-linear, homology h).
 */
RealizationOutcome realize(int c, int d, int q, long long h, const FieldSpec& f,
                           std::uint64_t seed);

} // namespace sr
