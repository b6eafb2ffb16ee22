#pragma once

#include "sr/complex.hpp"
#include "sr/homology.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace sr {

/**
 * Graded Betti numbers β_{i,j} of the face ring, computed by restriction:
 *   β_{i,j} = sum over W ⊆ V with |W| = j of dim H̃_{j-i-1}(Δ_W; k).
 * Only i >= 1 entries are stored; β_{0,0} = 1 is implicit. Entries are kept
 * sparse and sorted by (i, j).
 */
struct BettiTable {
    FieldSpec field;
    int n = 0;
    std::map<std::pair<int, int>, long long> entries;

    long long at(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
    // max i with β_{i,j} != 0 (0 for the zero ideal).
    int projective_dimension() const;
};

// Enumerates all 2^n vertex subsets; guarded by a size cap.
BettiTable betti_table(const SimplicialComplex& dl, const FieldSpec& f,
                       int max_n = 20);

// Betti table of the Alexander dual computed from the primal complex alone:
// β_{i,j}(k[Δ*]) = Σ over faces F with |F| = n - j of dim H̃_{i-2}(link F).
// Independent of betti_table(alexander_dual(Δ), f); the two must agree.
BettiTable dual_betti_via_links(const SimplicialComplex& dl, const FieldSpec& f);

// max(j - i) over nonzero entries; 0 for an empty table.
int regularity(const BettiTable& t);

// min j with β_{1,j} != 0; NoGenerators on an empty table.
int indeg_from_betti(const BettiTable& t);

struct LinearResolutionCheck {
    bool linear = false;
    int q = 0; // = indeg
};

// q-linear resolution test: regularity == indeg - 1. NoGenerators when the
// face ideal is zero (full simplex).
LinearResolutionCheck is_q_linear(const SimplicialComplex& dl, const FieldSpec& f);

/**
 * Graded dimensions of the i-th local cohomology of the face ring at the
 * irrelevant maximal ideal, from the face-wise series
 *   F(H^i, t) = sum_{F ∈ Δ} dim H̃_{i-|F|-1}(link F; k) * (t^{-1}/(1-t^{-1}))^{|F|}.
 * Expanded degreewise:
 *   dims[0]  = dim H̃_{i-1}(Δ)
 *   dims[-p] = sum over faces F with 1 <= |F| <= p of
 *              C(p-1, |F|-1) * dim H̃_{i-|F|-1}(link F),   p >= 1,
 * and every positive degree vanishes.
 */
struct GradedDims {
    FieldSpec field;
    int index = 0; // the cohomological index i
    int lo = 0;    // window [lo, 0]
    std::map<int, long long> dims;

    long long at(int degree) const {
        auto it = dims.find(degree);
        return it == dims.end() ? 0 : it->second;
    }
};

GradedDims local_cohomology_dims(const SimplicialComplex& dl, const FieldSpec& f,
                                 int i, int lo);

// a-invariant = top degree of H^d: a = -min{|F| : F ∈ Δ, H̃_{d-|F|-1}(link F) != 0}
// (the empty face contributes degree 0). nullopt encodes -infinity.
std::optional<int> a_invariant(const SimplicialComplex& dl, const FieldSpec& f);

// depth = min{i : H^i != 0}; equals krull_dim for Cohen-Macaulay rings.
int depth(const SimplicialComplex& dl, const FieldSpec& f);

// Regularity bound for Buchsbaum face rings: reg <= a + d + 1.
// Throws NotBuchsbaum when the hypothesis fails.
bool hoa_miyazaki_check(const SimplicialComplex& dl, const FieldSpec& f);

// Betti numbers of a pure resolution with shifts c_1 < ... < c_q:
//   β_i = | prod_{j != i} c_j / (c_j - c_i) |, exact rationals.
std::vector<Rat> herzog_kuhl_pure_betti(const std::vector<int>& degrees);

} // namespace sr
