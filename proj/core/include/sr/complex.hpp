#pragma once

#include "sr/vset.hpp"

#include <optional>
#include <vector>

namespace sr {

/**
 * An abstract simplicial complex on vertex set {0, ..., n-1}, stored as its
 * set of facets (inclusion-maximal faces).
 *
 * Conventions:
 *  - the void complex (no faces at all) has an empty facet list;
 *  - the complex {∅} is stored as the single empty facet;
 *  - facets are kept deduplicated, inclusion-maximal, and sorted
 *    lexicographically (as ascending vertex sequences), so equal complexes
 *    compare equal structurally.
 *
 * By default every vertex must lie in some facet; allow_isolated relaxes
 * this for intermediate objects (restrictions used by subset enumeration).
 */
class SimplicialComplex {
public:
    SimplicialComplex() : n_(0) {} // void complex on zero vertices

    static SimplicialComplex from_facets(int n, std::vector<VSet> facets,
                                         bool allow_isolated = false);
    static SimplicialComplex from_vertex_lists(int n,
                                               const std::vector<std::vector<int>>& facets,
                                               bool allow_isolated = false);

    int vertex_count() const { return n_; }
    const std::vector<VSet>& facets() const { return facets_; }

    bool is_void() const { return facets_.empty(); }
    bool is_irrelevant() const { return facets_.size() == 1 && facets_[0] == 0; }

    // dim Δ: -1 for {∅}, -2 for the void complex.
    int dim() const;
    // Krull dimension of the face ring = dim Δ + 1 (0 for {∅}).
    int krull_dim() const;

    bool contains(VSet face) const;

    // All faces with k vertices, lex sorted. k = 0 gives {∅} when nonvoid.
    std::vector<VSet> faces_of_size(int k) const;
    // faces_of_size for every k = 0..d at once (index = k).
    std::vector<std::vector<VSet>> faces_by_size() const;

    long long face_count(int k) const;

    bool operator==(const SimplicialComplex& o) const {
        return n_ == o.n_ && facets_ == o.facets_;
    }

private:
    int n_;
    std::vector<VSet> facets_;
};

struct FVector {
    // counts[k] = f_{k-1} = number of faces with k vertices; counts[0] = 1.
    std::vector<long long> counts;
    int d() const { return static_cast<int>(counts.size()) - 1; }
};

struct HVector {
    // coeffs[i] = h_i, i = 0..d.
    std::vector<long long> coeffs;
    int d() const { return static_cast<int>(coeffs.size()) - 1; }
    bool operator==(const HVector& o) const { return coeffs == o.coeffs; }
};

struct SubcomplexResult {
    SimplicialComplex complex;
    // vertex_map[i] = label in the parent complex of the new vertex i
    std::vector<int> vertex_map;
};

FVector f_vector(const SimplicialComplex& dl);
// h_k = sum_{i=0..k} (-1)^{k-i} C(d-i, k-i) f_{i-1}
HVector h_vector(const SimplicialComplex& dl);

// link_Δ(F) = {G : F∩G = ∅, F∪G ∈ Δ}, re-indexed to the vertices that occur
// in its faces. link(∅) = Δ. Throws FaceNotInComplex if F ∉ Δ.
SubcomplexResult link(const SimplicialComplex& dl, VSet face);

// Δ_W = {F ∈ Δ : F ⊆ W}, re-indexed along ascending W (isolated vertices
// of W are kept, so the result lives on |W| vertices).
SubcomplexResult restriction(const SimplicialComplex& dl, VSet w);

// r-skeleton: all faces of dimension <= r. Requires -1 <= r <= dim.
SimplicialComplex skeleton(const SimplicialComplex& dl, int r);

// Alexander dual Δ* = {F ⊆ V : V∖F ∉ Δ}; facets are the complements of the
// minimal non-faces. Defined iff codim >= 2 and indeg >= 2 (DualUndefined).
SimplicialComplex alexander_dual(const SimplicialComplex& dl);

// Inclusion-minimal non-faces (generators of the face ideal), lex sorted.
std::vector<VSet> minimal_nonfaces(const SimplicialComplex& dl);

// Initial degree of the face ideal = size of the smallest non-face;
// nullopt encodes +infinity (full simplex, zero ideal).
std::optional<int> indeg(const SimplicialComplex& dl);

bool is_pure(const SimplicialComplex& dl);

// e = f_{d-1}: the number of top-dimensional faces (facet count when pure).
long long multiplicity(const SimplicialComplex& dl);

} // namespace sr
