#include "sr/hochster.hpp"

#include "sr/error.hpp"
#include "sr/ring_props.hpp"

#include <algorithm>

namespace sr {

int BettiTable::projective_dimension() const {
    int pd = 0;
    for (const auto& [ij, v] : entries)
        if (v != 0) pd = std::max(pd, ij.first);
    return pd;
}

BettiTable betti_table(const SimplicialComplex& dl, const FieldSpec& f, int max_n) {
    int n = dl.vertex_count();
    if (n > max_n)
        fail(ErrorCode::SizeCapExceeded,
             "graded Betti numbers enumerate 2^n subsets; n = " + std::to_string(n) +
                 " exceeds the cap " + std::to_string(max_n));
    BettiTable t;
    t.field = f;
    t.n = n;
    if (dl.is_void()) return t;
    for (VSet w = 1; w < (VSet{1} << n); ++w) {
        int j = vs::count(w);
        HomologyProfile prof = reduced_homology(restriction(dl, w).complex, f);
        for (int i = 1; i <= j; ++i) {
            long long dim = prof.at(j - i - 1);
            if (dim) t.entries[{i, j}] += dim;
        }
    }
    return t;
}

BettiTable dual_betti_via_links(const SimplicialComplex& dl, const FieldSpec& f) {
    const int n = dl.vertex_count();
    BettiTable table;
    table.field = f;
    table.n = n;
    for (const std::vector<VSet>& layer : dl.faces_by_size())
        for (VSet face : layer) {
            const int j = n - vs::count(face);
            HomologyProfile profile = reduced_homology(link(dl, face).complex, f);
            for (int p = -1; p <= profile.dim; ++p) {
                long long value = profile.at(p);
                if (value != 0) table.entries[{p + 2, j}] += value;
            }
        }
    return table;
}

int regularity(const BettiTable& t) {
    int reg = 0;
    for (const auto& [ij, v] : t.entries)
        if (v != 0) reg = std::max(reg, ij.second - ij.first);
    return reg;
}

int indeg_from_betti(const BettiTable& t) {
    for (const auto& [ij, v] : t.entries)
        if (ij.first == 1 && v != 0) return ij.second; // sorted, first hit is min
    fail(ErrorCode::NoGenerators, "the face ideal has no generators");
}

LinearResolutionCheck is_q_linear(const SimplicialComplex& dl, const FieldSpec& f) {
    auto q = indeg(dl);
    if (!q.has_value())
        fail(ErrorCode::NoGenerators,
             "linearity is undefined for the zero face ideal (full simplex)");
    BettiTable t = betti_table(dl, f);
    return LinearResolutionCheck{regularity(t) == *q - 1, *q};
}

GradedDims local_cohomology_dims(const SimplicialComplex& dl, const FieldSpec& f,
                                 int i, int lo) {
    int d = dl.krull_dim();
    if (dl.is_void() || i < 0 || i > d)
        fail(ErrorCode::ParameterRange,
             "local cohomology index must satisfy 0 <= i <= " + std::to_string(d));
    if (lo > 0 || lo < -64)
        fail(ErrorCode::ParameterRange, "window low end must lie in [-64, 0]");

    GradedDims out;
    out.field = f;
    out.index = i;
    out.lo = lo;
    for (int deg = lo; deg <= 0; ++deg) out.dims[deg] = 0;

    out.dims[0] = reduced_homology(dl, f).at(i - 1); // the empty face's term
    auto by_size = dl.faces_by_size();
    for (int s = 1; s < static_cast<int>(by_size.size()); ++s) {
        if (s > -lo) break; // faces larger than the window cannot contribute
        for (VSet face : by_size[s]) {
            long long dim = reduced_homology(link(dl, face).complex, f).at(i - s - 1);
            if (dim == 0) continue;
            for (int p = s; p <= -lo; ++p)
                out.dims[-p] += binomial(p - 1, s - 1) * dim;
        }
    }
    return out;
}

std::optional<int> a_invariant(const SimplicialComplex& dl, const FieldSpec& f) {
    if (dl.is_void())
        fail(ErrorCode::PreconditionFailed, "a-invariant of the void complex");
    int d = dl.krull_dim();
    auto by_size = dl.faces_by_size();
    for (int s = 0; s < static_cast<int>(by_size.size()); ++s)
        for (VSet face : by_size[s]) {
            const SimplicialComplex lk =
                (s == 0) ? dl : link(dl, face).complex;
            if (reduced_homology(lk, f).at(d - s - 1) != 0) return -s;
        }
    return std::nullopt; // top local cohomology vanishes in the window: -inf
}

int depth(const SimplicialComplex& dl, const FieldSpec& f) {
    if (dl.is_void())
        fail(ErrorCode::PreconditionFailed, "depth of the void complex");
    int d = dl.krull_dim();
    int n = std::max(dl.vertex_count(), 1);
    for (int i = 0; i < d; ++i) {
        GradedDims dims = local_cohomology_dims(dl, f, i, -n);
        for (const auto& [deg, v] : dims.dims)
            if (v != 0) return i;
    }
    return d; // H^d never vanishes
}

bool hoa_miyazaki_check(const SimplicialComplex& dl, const FieldSpec& f) {
    if (!is_buchsbaum(dl, f))
        fail(ErrorCode::NotBuchsbaum, "regularity bound requires a Buchsbaum ring");
    auto a = a_invariant(dl, f);
    int d = dl.krull_dim();
    int reg = regularity(betti_table(dl, f));
    long long bound = (a ? *a : -(d + 1)) + d + 1;
    return reg <= bound;
}

std::vector<Rat> herzog_kuhl_pure_betti(const std::vector<int>& degrees) {
    if (degrees.empty())
        fail(ErrorCode::DegenerateDegrees, "no degrees given");
    for (size_t i = 0; i < degrees.size(); ++i) {
        if (degrees[i] <= 0)
            fail(ErrorCode::ParameterRange, "degrees must be positive");
        if (i > 0 && degrees[i] <= degrees[i - 1])
            fail(ErrorCode::DegenerateDegrees, "degrees must strictly increase");
    }
    std::vector<Rat> betti(degrees.size());
    for (size_t i = 0; i < degrees.size(); ++i) {
        // Rat's two-integer constructor rejects negative denominators; the
        // absolute value distributes over the factors since every degree is
        // positive, so take each factor over the positive gap directly.
        Rat prod = 1;
        for (size_t j = 0; j < degrees.size(); ++j) {
            if (j == i) continue;
            int gap = degrees[j] - degrees[i];
            prod *= Rat(degrees[j], gap < 0 ? -gap : gap);
        }
        betti[i] = prod;
    }
    return betti;
}

} // namespace sr
