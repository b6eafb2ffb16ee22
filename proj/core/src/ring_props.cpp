#include "sr/ring_props.hpp"

#include "sr/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace sr {

namespace {

// Vanishing of H̃_i(link F) for all i < dim link F, over all faces listed.
bool links_vanish_below_top(const SimplicialComplex& dl, const FieldSpec& f,
                            bool include_empty_face) {
    auto by_size = dl.faces_by_size();
    int first = include_empty_face ? 0 : 1;
    for (int s = first; s < static_cast<int>(by_size.size()); ++s)
        for (VSet face : by_size[s]) {
            SimplicialComplex lk = (s == 0) ? dl : link(dl, face).complex;
            HomologyProfile prof = reduced_homology(lk, f);
            for (int i = -1; i < prof.dim; ++i)
                if (prof.at(i) != 0) return false;
        }
    return true;
}

bool is_full_simplex(const SimplicialComplex& dl) {
    return dl.facets().size() == 1 &&
           vs::count(dl.facets()[0]) == dl.vertex_count();
}

long long homology_h(const SimplicialComplex& dl, const FieldSpec& f, int q) {
    return reduced_homology(dl, f).at(q - 2);
}

} // namespace

bool is_cohen_macaulay(const SimplicialComplex& dl, const FieldSpec& f) {
    if (dl.is_void())
        fail(ErrorCode::PreconditionFailed, "classification of the void complex");
    return links_vanish_below_top(dl, f, /*include_empty_face=*/true);
}

bool is_buchsbaum(const SimplicialComplex& dl, const FieldSpec& f) {
    if (dl.is_void())
        fail(ErrorCode::PreconditionFailed, "classification of the void complex");
    if (!is_pure(dl)) return false;
    return links_vanish_below_top(dl, f, /*include_empty_face=*/false);
}

long long i_invariant(const SimplicialComplex& dl, const FieldSpec& f) {
    if (!is_buchsbaum(dl, f))
        fail(ErrorCode::NotBuchsbaum, "I-invariant requires a Buchsbaum ring");
    int d = dl.krull_dim();
    HomologyProfile prof = reduced_homology(dl, f);
    long long acc = 0;
    for (int i = 0; i <= d - 1; ++i)
        acc += binomial(d - 1, i) * prof.at(i - 1);
    return acc;
}

Rat h_bound(int c, int d, int q) {
    if (c < 1 || q < 2 || q > d)
        fail(ErrorCode::ParameterRange,
             "homology bound needs c >= 1 and 2 <= q <= d");
    Rat num = 1, den = 1;
    for (int t = 0; t <= q - 2; ++t) {
        num *= c + t;
        den *= d - t;
    }
    return num / den;
}

Rat min_mult_lower_bound(int c, int d, int q) {
    if (c < 1 || q < 2 || q > d)
        fail(ErrorCode::ParameterRange,
             "multiplicity bound needs c >= 1 and 2 <= q <= d");
    return Rat(c + d, d) * Rat(binomial(c + q - 2, q - 2));
}

HVector predicted_h_vector(int c, int d, int q, long long h) {
    if (c < 1 || q < 2 || q > d || h < 0)
        fail(ErrorCode::ParameterRange, "predicted h-vector parameter out of range");
    HVector out;
    out.coeffs.assign(d + 1, 0);
    for (int p = 0; p <= std::min(q - 1, d); ++p)
        out.coeffs[p] = binomial(c + p - 1, p);
    for (int p = q; p <= d; ++p) {
        long long v = binomial(d, p) * h;
        out.coeffs[p] = ((p - q + 1) % 2 == 0) ? v : -v;
    }
    return out;
}

namespace {

struct TypeQContext {
    int n, d, c, q;
    long long e;
};

TypeQContext type_q_context(const SimplicialComplex& dl, const FieldSpec& f) {
    if (!is_buchsbaum(dl, f))
        fail(ErrorCode::NotBuchsbaum, "minimal multiplicity requires Buchsbaum");
    auto q = indeg(dl);
    int d = dl.krull_dim();
    if (!q.has_value() || *q < 2 || *q > d)
        fail(ErrorCode::ParameterRange,
             "minimal multiplicity is defined for finite 2 <= indeg <= d");
    return TypeQContext{dl.vertex_count(), d, dl.vertex_count() - d, *q,
                        multiplicity(dl)};
}

} // namespace

bool is_min_mult_type_q(const SimplicialComplex& dl, const FieldSpec& f) {
    TypeQContext ctx = type_q_context(dl, f);
    return Rat(ctx.e) == min_mult_lower_bound(ctx.c, ctx.d, ctx.q);
}

bool has_maximal_homology(const SimplicialComplex& dl, const FieldSpec& f) {
    TypeQContext ctx = type_q_context(dl, f);
    LinearResolutionCheck lin = is_q_linear(dl, f);
    if (!lin.linear) return false;
    return homology_h(dl, f, ctx.q) == rat_floor(h_bound(ctx.c, ctx.d, ctx.q));
}

namespace {

// "k[link] has a (q-1)-linear resolution" with the zero-ideal degenerate
// case: a full-simplex link only counts for q = 2 (polynomial rings are the
// q = 2 maximal-embedding-dimension degenerate case).
bool link_is_q1_linear(const SimplicialComplex& lk, const FieldSpec& f, int q) {
    if (is_full_simplex(lk)) return q == 2;
    LinearResolutionCheck lin = is_q_linear(lk, f);
    return lin.linear && lin.q == q - 1;
}

} // namespace

MinMultEquivalence check_min_mult_equivalence(const SimplicialComplex& dl,
                                              const FieldSpec& f) {
    TypeQContext ctx = type_q_context(dl, f);
    if (ctx.c < 2)
        fail(ErrorCode::ParameterRange,
             "the equivalence requires codimension >= 2");
    const int d = ctx.d, c = ctx.c, q = ctx.q, n = ctx.n;
    MinMultEquivalence out;

    // 0: multiplicity value
    out.conditions[0] = Rat(ctx.e) == min_mult_lower_bound(c, d, q);

    // 1: q-linear with dim H̃_{q-2} = h_{c,d,q}
    Rat bound = h_bound(c, d, q);
    LinearResolutionCheck lin = is_q_linear(dl, f);
    out.conditions[1] = lin.linear && Rat(homology_h(dl, f, q)) == bound;

    // 2: forced h-vector (requires the bound to be an integer)
    {
        bool ok = false;
        Int bnum = boost::multiprecision::numerator(bound);
        Int bden = boost::multiprecision::denominator(bound);
        if (bden == 1) {
            long long hb = bnum.convert_to<long long>();
            ok = h_vector(dl) == predicted_h_vector(c, d, q, hb);
        }
        out.conditions[2] = ok;
    }

    // 3 and 4: vertex links
    {
        bool all_linear = true, all_a = true;
        for (int v = 0; v < n; ++v) {
            SimplicialComplex lk = link(dl, vs::unit(v)).complex;
            if (!link_is_q1_linear(lk, f, q)) all_linear = false;
            auto a = a_invariant(lk, f);
            if (!a.has_value() || *a != q - d - 1) all_a = false;
            if (!all_linear && !all_a) break;
        }
        out.conditions[3] = all_linear;
        out.conditions[4] = all_a;
    }

    // 5: a-invariant of the complex itself
    {
        auto a = a_invariant(dl, f);
        out.conditions[5] = a.has_value() && *a == q - d - 2;
    }

    // 6: dual Cohen-Macaulay with pure almost-linear Betti support and a* = 0
    {
        bool ok = false;
        if (indeg(dl).has_value() && *indeg(dl) >= 2 && c >= 2) {
            SimplicialComplex dual = alexander_dual(dl);
            if (is_cohen_macaulay(dual, f)) {
                BettiTable bt = betti_table(dual, f);
                bool support_ok = bt.projective_dimension() == q;
                for (const auto& [ij, v] : bt.entries) {
                    if (v == 0) continue;
                    auto [i, j] = ij;
                    bool allowed = (i >= 1 && i <= q - 1 && j == c + i - 1) ||
                                   (i == q && j == c + d);
                    if (!allowed) support_ok = false;
                }
                auto a = a_invariant(dual, f);
                ok = support_ok && a.has_value() && *a == 0;
            }
        }
        out.conditions[6] = ok;
    }

    out.all_true = std::all_of(out.conditions.begin(), out.conditions.end(),
                               [](bool b) { return b; });
    bool all_false = std::none_of(out.conditions.begin(), out.conditions.end(),
                                  [](bool b) { return b; });
    out.consistent = out.all_true || all_false;
    return out;
}

bool hibi_criterion(const SimplicialComplex& dl, const FieldSpec& f) {
    TypeQContext ctx = type_q_context(dl, f);
    HomologyProfile prof = reduced_homology(dl, f);
    for (int i = -1; i <= prof.dim; ++i)
        if (i != ctx.q - 2 && prof.at(i) != 0) return false;
    for (int v = 0; v < ctx.n; ++v) {
        auto a = a_invariant(link(dl, vs::unit(v)).complex, f);
        if (!a.has_value() || *a > ctx.q - ctx.d) return false;
    }
    return true;
}

bool improved_criterion(const SimplicialComplex& dl, const FieldSpec& f) {
    TypeQContext ctx = type_q_context(dl, f);
    if (reduced_homology(dl, f).at(ctx.q - 1) != 0) return false;
    for (int v = 0; v < ctx.n; ++v) {
        auto a = a_invariant(link(dl, vs::unit(v)).complex, f);
        if (!a.has_value() || *a > ctx.q - ctx.d) return false;
    }
    return true;
}

bool is_d_full(const SimplicialComplex& dl) {
    if (dl.is_void() || dl.is_irrelevant()) return false;
    if (!is_pure(dl)) return false;
    int d = dl.krull_dim();
    if (d < 1) return false;
    // every (d-1)-subset of the vertex set must be a face
    std::vector<VSet> cands;
    vs::subsets_of_size(vs::full(dl.vertex_count()), d - 1, cands);
    for (VSet s : cands)
        if (!dl.contains(s)) return false;
    return true;
}

bool is_froberg_q2(const SimplicialComplex& dl, const FieldSpec& f) {
    if (!is_buchsbaum(dl, f))
        fail(ErrorCode::NotBuchsbaum, "the structure test requires Buchsbaum");
    auto q = indeg(dl);
    if (!q.has_value() || *q != 2) return false;

    // connected components via union-find on vertices
    int n = dl.vertex_count();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (VSet fc : dl.facets()) {
        auto verts = vs::vertices(fc);
        for (size_t i = 1; i < verts.size(); ++i)
            parent[find(verts[i])] = find(verts[0]);
    }
    std::vector<VSet> comps(n, 0);
    for (int v = 0; v < n; ++v) comps[find(v)] |= vs::unit(v);

    for (int root = 0; root < n; ++root) {
        if (comps[root] == 0) continue;
        SimplicialComplex part = restriction(dl, comps[root]).complex;
        if (!is_cohen_macaulay(part, f)) return false;
        if (is_full_simplex(part)) continue; // maximal embdim, degenerate case
        LinearResolutionCheck lin = is_q_linear(part, f);
        if (!lin.linear || lin.q != 2) return false;
    }
    return true;
}

PropertyReport make_property_report(const SimplicialComplex& dl, const FieldSpec& f,
                                    int max_n) {
    if (dl.is_void() || dl.is_irrelevant())
        fail(ErrorCode::PreconditionFailed,
             "property report needs a complex with at least one vertex");
    PropertyReport r;
    r.field = f;
    r.n = dl.vertex_count();
    r.d = dl.krull_dim();
    r.c = r.n - r.d;
    r.q = indeg(dl);
    r.pure = is_pure(dl);
    r.fvec = f_vector(dl);
    r.hvec = h_vector(dl);
    r.e = multiplicity(dl);
    r.depth_ = depth(dl, f);
    r.cm = is_cohen_macaulay(dl, f);
    r.buchsbaum = is_buchsbaum(dl, f);
    r.d_full = is_d_full(dl);
    r.betti = betti_table(dl, f, max_n);
    r.q_linear = r.q.has_value() && regularity(r.betti) == *r.q - 1;
    r.h = r.q.has_value() ? reduced_homology(dl, f).at(*r.q - 2) : 0;
    if (r.buchsbaum) r.i_inv = i_invariant(dl, f);
    auto a = a_invariant(dl, f);
    if (!a.has_value())
        fail(ErrorCode::PreconditionFailed, "a-invariant undefined"); // unreachable: top faces always contribute
    r.a_inv = *a;
    if (r.c >= 1 && r.q.has_value() && *r.q >= 2 && *r.q <= r.d)
        r.h_bound_ = h_bound(r.c, r.d, *r.q);
    if (r.buchsbaum && r.q.has_value() && *r.q >= 2 && *r.q <= r.d) {
        r.min_mult_type_q = is_min_mult_type_q(dl, f);
        r.max_homology = has_maximal_homology(dl, f);
    }
    return r;
}

} // namespace sr
