#pragma once

#include "sr/complex.hpp"
#include "sr/field.hpp"
#include "sr/matrix.hpp"

#include <cstddef>

namespace sr {

/**
 * Reduced simplicial homology dimensions over a field, for p = -1 .. dim Δ.
 * The augmented chain complex has C_{-1} = k spanned by the empty face, so
 * the complex {∅} has H̃_{-1} = k and a nonvoid complex with a vertex has
 * H̃_{-1} = 0. The void complex has no homology at all.
 */
struct HomologyProfile {
    FieldSpec field;
    int dim = -2;
    std::vector<long long> dims; // dims[p + 1] = dim H̃_p

    long long at(int p) const {
        int idx = p + 1;
        if (idx < 0 || idx >= static_cast<int>(dims.size())) return 0;
        return dims[idx];
    }
};

// Matrix of ∂_p : C_p -> C_{p-1} with one row per p-face and one column per
// (p-1)-face, both bases lex sorted. Signs follow
//   ∂({v_1 < ... < v_{p+1}}) = sum_j (-1)^j {v_1, ..., v̂_j, ..., v_{p+1}}
// with j counted from 1. Valid for -1 <= p <= dim+1 (empty shapes at the ends).
ExactMatrix boundary_matrix(const SimplicialComplex& dl, int p, const FieldSpec& f);

// dim H̃_p = #(p-faces) - rank ∂_p - rank ∂_{p+1}. Results are memoized in a
// process-wide LRU cache keyed by (facet set, field); the cache is guarded by
// a mutex so callers may share it across threads.
HomologyProfile reduced_homology(const SimplicialComplex& dl, const FieldSpec& f);

// sum_p (-1)^p dim H̃_p, which must match the face-count alternating sum.
long long reduced_euler(const HomologyProfile& profile);

std::size_t homology_cache_entries();
void clear_homology_cache();

} // namespace sr
