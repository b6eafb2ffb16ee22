#pragma once

#include "sr/hochster.hpp"

#include <array>
#include <optional>
#include <string>

namespace sr {

// Reisner's criterion: H̃_i(link F; k) = 0 for all faces F (including ∅)
// and all i < dim link F.
bool is_cohen_macaulay(const SimplicialComplex& dl, const FieldSpec& f);

// Purity plus the same vanishing for every nonempty face.
bool is_buchsbaum(const SimplicialComplex& dl, const FieldSpec& f);

// Buchsbaum invariant I = sum_{i=0}^{d-1} C(d-1, i) dim H̃_{i-1}(Δ; k).
// Throws NotBuchsbaum.
long long i_invariant(const SimplicialComplex& dl, const FieldSpec& f);

// Homology bound h_{c,d,q} = (c+q-2)···(c+1)c / (d(d-1)···(d-q+2)),
// exact rational. Requires c >= 1 and 2 <= q <= d.
Rat h_bound(int c, int d, int q);

// Minimal multiplicity value ((c+d)/d) C(c+q-2, q-2), exact rational.
Rat min_mult_lower_bound(int c, int d, int q);

// The h-vector forced on Buchsbaum rings with minimal multiplicity:
//   h_p = C(c+p-1, p)              for 0 <= p <= q-1,
//   h_p = (-1)^{p-q+1} C(d, p) h   for q <= p <= d.
HVector predicted_h_vector(int c, int d, int q, long long h);

// e == ((c+d)/d) C(c+q-2, q-2), with q = indeg. Requires Buchsbaum and
// finite q <= d (NotBuchsbaum / ParameterRange).
bool is_min_mult_type_q(const SimplicialComplex& dl, const FieldSpec& f);

// q-linear and dim H̃_{q-2}(Δ) == floor(h_{c,d,q}). Same preconditions.
bool has_maximal_homology(const SimplicialComplex& dl, const FieldSpec& f);

/**
 * Seven equivalent characterisations of Buchsbaum face rings with minimal
 * multiplicity, evaluated independently:
 *   0  e equals the minimal multiplicity value
 *   1  q-linear resolution and dim H̃_{q-2}(Δ) = h_{c,d,q}
 *   2  h-vector equals the predicted one with h = h_{c,d,q}
 *   3  every vertex link has a (q-1)-linear resolution
 *   4  every vertex link has a-invariant q - d - 1
 *   5  a(Δ) = q - d - 2
 *   6  the Alexander dual is Cohen-Macaulay with pure almost-linear Betti
 *      support (β_{i,c+i-1} for i < q, β_{q,c+d} on top) and a(Δ*) = 0
 * Requires Δ Buchsbaum, codim >= 2, 2 <= q <= d.
 */
struct MinMultEquivalence {
    std::array<bool, 7> conditions{};
    bool consistent = false; // all seven agree
    bool all_true = false;
};

MinMultEquivalence check_min_mult_equivalence(const SimplicialComplex& dl,
                                              const FieldSpec& f);

// Sufficient criterion: H̃_i(Δ) = 0 for all i != q-2, and a(link v) <= q-d
// for every vertex v. Requires Buchsbaum, 2 <= q <= d.
bool hibi_criterion(const SimplicialComplex& dl, const FieldSpec& f);

// Weakened form: only H̃_{q-1}(Δ) = 0 plus the same link bound.
bool improved_criterion(const SimplicialComplex& dl, const FieldSpec& f);

// Pure of dimension d-1 and containing every (d-2)-face of the vertex set.
bool is_d_full(const SimplicialComplex& dl);

// Structure test for Buchsbaum rings with 2-linear resolution: every
// connected component is Cohen-Macaulay of maximal embedding dimension
// (2-linear resolution, or a full simplex). Throws NotBuchsbaum.
bool is_froberg_q2(const SimplicialComplex& dl, const FieldSpec& f);

/**
 * One-shot classification summary of a face ring over a field.
 * h always means dim H̃_{q-2}(Δ; k) (0 when the face ideal is zero);
 * I is present iff the ring is Buchsbaum; hBound iff 2 <= q <= d, c >= 1.
 */
struct PropertyReport {
    FieldSpec field;
    int n = 0;
    int d = 0;
    int c = 0;
    std::optional<int> q; // nullopt = +infinity (zero ideal)
    bool pure = false;
    FVector fvec;
    HVector hvec;
    long long e = 0;
    int depth_ = 0;
    bool cm = false;
    bool buchsbaum = false;
    bool d_full = false;
    bool q_linear = false;
    long long h = 0;
    std::optional<long long> i_inv;
    int a_inv = 0;
    std::optional<Rat> h_bound_;
    bool min_mult_type_q = false;
    bool max_homology = false;
    BettiTable betti;
};

PropertyReport make_property_report(const SimplicialComplex& dl, const FieldSpec& f,
                                    int max_n = 20);

} // namespace sr
