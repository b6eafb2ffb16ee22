#pragma once

#include "sr/complex.hpp"

#include <string>
#include <vector>

namespace sr {

// (d-1)-skeleton of the full simplex on n vertices: all d-subsets are facets.
// 1 <= d <= n-1.
SimplicialComplex skeleton_complex(int n, int d);

// Cohen-Macaulay complex of maximal embedding dimension: vertices
// X_0..X_c, Y_1..Y_{d-1} with facets {X_i} ∪ {Y_1..Y_{d-1}}. c >= 1, d >= 2
// (c = 0 is permitted internally and degenerates to a single simplex).
SimplicialComplex max_embdim_cm(int c, int d);

// Buchsbaum complex with 2-linear resolution, codim c, dim H̃_0 = h:
// a maximal-embedding-dimension component (codim c - dh) together with h
// standalone (d-1)-simplexes (h+1 simplexes when c = dh). Requires c >= dh.
SimplicialComplex disjoint_union_q2(int c, int d, int h);

// 2d-1 cyclic windows {i, i+1, ..., i+d-1} mod 2d-1. d >= 2.
SimplicialComplex hibi_cycle(int d);

// Sum-set triangle complex on {1..n} (stored 0-based): {a,b,a+b} for
// a < b, a+b <= n, together with {a,b,c} for a+b+c = 2n+1.
// Requires n > 3 and 2n+1 prime.
SimplicialComplex terai_complex(int n);

// Two-dimensional Buchsbaum complexes with 3-linear resolution and maximal
// first homology; three constructions by n mod 3. n >= 5.
SimplicialComplex hanano(int n);

// Boundary complex of the cyclic polytope C(n, f) via Gale's evenness
// condition: a size-f subset is a facet iff every maximal run of consecutive
// vertices that touches neither 0 nor n-1 has even length. n >= f+1, f >= 2.
SimplicialComplex cyclic_boundary(int n, int f);

// Alexander dual of cyclic_boundary(2d-q+2, 2(d-q+1)): Buchsbaum q-linear
// with minimal multiplicity and one-dimensional top homology. 2 <= q <= d.
SimplicialComplex cyclic_dual(int d, int q);

// Cyclic triangle complex {i, i+1, i+j} mod n for even offsets j = 2..n-2.
// n >= 6 even.
SimplicialComplex bruns_hibi(int n);

SimplicialComplex bruns_hibi_dual(int n);

// Minimal 6-vertex triangulation of the real projective plane (10 triangles).
SimplicialComplex rp2();

// rp2 minus one facet: a Moebius band (9 triangles).
SimplicialComplex moebius();

struct FamilyInfo {
    std::string name;
    int arity;
    std::string params_doc;
};

const std::vector<FamilyInfo>& family_list();

// Dispatch by family name as used by the CLI (e.g. "hibi-cycle", "rp2").
SimplicialComplex make_family(const std::string& name,
                              const std::vector<long long>& params);

} // namespace sr
