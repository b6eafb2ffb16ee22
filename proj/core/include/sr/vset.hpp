#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace sr {

// A set of vertices as a 64-bit mask. Vertex labels are 0-based; the library
// caps n at 64 (practical sizes are far smaller, see the enumeration caps).
using VSet = std::uint64_t;

namespace vs {

inline int count(VSet s) { return std::popcount(s); }
inline bool test(VSet s, int v) { return (s >> v) & 1u; }
inline VSet unit(int v) { return VSet{1} << v; }
inline VSet full(int n) { return n >= 64 ? ~VSet{0} : (VSet{1} << n) - 1; }
inline bool subset(VSet a, VSet b) { return (a & ~b) == 0; }
inline int min_vertex(VSet s) { return std::countr_zero(s); }

std::vector<int> vertices(VSet s);
VSet of(const std::vector<int>& verts);

// Lexicographic order on faces viewed as ascending vertex sequences.
// A proper prefix sorts before its extensions.
bool lex_less(VSet a, VSet b);

// Appends all k-subsets of `base`; output order is lex ascending.
void subsets_of_size(VSet base, int k, std::vector<VSet>& out);

// Re-indexes s (must be a subset of mask) to bit positions 0..|mask|-1,
// preserving the vertex order induced by mask.
VSet compress(VSet s, VSet mask);

} // namespace vs

// n <= 64 throughout, so these fit in long long (C(64,32) < 2^63).
long long binomial(int n, int k);

} // namespace sr
