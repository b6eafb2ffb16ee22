#include "sr/cover.hpp"

#include "sr/error.hpp"
#include "sr/families.hpp"
#include "sr/hochster.hpp"
#include "sr/homology.hpp"
#include "sr/ring_props.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <utility>

namespace sr {

namespace {

using Exponents = std::vector<int>; // degree vector over the first c variables

void gen_exponents_rec(int pos, int c, int remaining, Exponents& cur,
                       std::vector<Exponents>& out) {
    if (pos == c - 1) {
        cur[pos] = remaining;
        out.push_back(cur);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur[pos] = e;
        gen_exponents_rec(pos + 1, c, remaining - e, cur, out);
    }
}

// All exponent vectors of total degree d in c variables, in a fixed order.
std::vector<Exponents> gen_exponents(int c, int d) {
    std::vector<Exponents> out;
    Exponents cur(c, 0);
    gen_exponents_rec(0, c, d, cur, out);
    return out;
}

template <typename T>
void seeded_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[rng() % i]);
}

bool witness_ok(const SimplicialComplex& w, int c, int d, int q, long long h,
                const FieldSpec& f) {
    if (w.vertex_count() != c + d || w.krull_dim() != d) return false;
    auto deg = indeg(w);
    if (!deg.has_value() || *deg != q) return false;
    if (!is_buchsbaum(w, f)) return false;
    if (!is_q_linear(w, f).linear) return false;
    return reduced_homology(w, f).at(q - 2) == h;
}

void verify_witness(const SimplicialComplex& w, int c, int d, int q,
                    long long h, const FieldSpec& f) {
    if (!witness_ok(w, c, d, q, h, f))
        fail(ErrorCode::VerificationFailed,
             "constructed witness failed re-verification");
}

// Boundary of the (d)-simplex on d+1 vertices minus one facet: a shellable
// ball with codimension 1, indeg d, and vanishing intermediate homology.
SimplicialComplex punctured_simplex_boundary(int d) {
    int n = d + 1;
    std::vector<VSet> facets;
    vs::subsets_of_size(vs::full(n), d, facets);
    VSet dropped = vs::full(n) & ~vs::unit(0);
    facets.erase(std::remove(facets.begin(), facets.end(), dropped),
                 facets.end());
    return SimplicialComplex::from_facets(n, facets);
}

} // namespace

bool is_valid_cm_cover(const SimplicialComplex& base,
                       const SimplicialComplex& candidate, const FieldSpec& f) {
    if (base.is_void() || base.is_irrelevant()) return false;
    if (candidate.is_void() || candidate.is_irrelevant()) return false;
    if (candidate.vertex_count() != base.vertex_count()) return false;
    for (VSet fc : base.facets())
        if (!candidate.contains(fc)) return false;
    int d = base.krull_dim();
    if (!is_pure(candidate) || candidate.krull_dim() != d) return false;
    auto q = indeg(candidate);
    if (!q.has_value() || *q != d) return false;
    if (!is_cohen_macaulay(candidate, f)) return false;
    return is_q_linear(candidate, f).linear;
}

CoverResult cm_cover(const SimplicialComplex& dl, const FieldSpec& f,
                     std::uint64_t seed, const CoverOptions& options) {
    if (dl.is_void() || dl.is_irrelevant())
        fail(ErrorCode::PreconditionFailed, "cover needs a nonempty complex");
    const int n = dl.vertex_count();
    const int d = dl.krull_dim();
    const int c = n - d;
    if (c < 1)
        fail(ErrorCode::PreconditionFailed, "cover needs codimension >= 1");
    auto q = indeg(dl);
    if (!q.has_value() || *q != d)
        fail(ErrorCode::PreconditionFailed, "cover needs indeg equal to dim+1");
    if (!is_buchsbaum(dl, f))
        fail(ErrorCode::PreconditionFailed, "cover input must be Buchsbaum");
    if (!is_q_linear(dl, f).linear)
        fail(ErrorCode::PreconditionFailed,
             "cover input must have a d-linear resolution");
    const long long h = reduced_homology(dl, f).at(d - 2);

    // Degree-d square-free non-faces: the monomial pool the generic change of
    // coordinates is expanded over.
    std::vector<VSet> all_d;
    vs::subsets_of_size(vs::full(n), d, all_d);
    std::vector<VSet> pool;
    for (VSet s : all_d)
        if (!dl.contains(s)) pool.push_back(s);
    const long long mu = static_cast<long long>(pool.size());
    if (mu != binomial(n - 1, d) + h)
        fail(ErrorCode::PreconditionFailed,
             "non-face count does not match the d-linear Buchsbaum profile");

    const std::vector<Exponents> cols = gen_exponents(c, d);
    if (static_cast<long long>(cols.size()) != mu - h)
        fail(ErrorCode::PreconditionFailed,
             "monomial space dimension mismatch");
    std::map<Exponents, int> col_index;
    for (std::size_t k = 0; k < cols.size(); ++k)
        col_index[cols[k]] = static_cast<int>(k);

    const FieldSpec draw_field = FieldSpec::gf(options.genericity_modulus);
    const long long p = draw_field.modulus;
    std::mt19937_64 rng(seed);

    for (int attempt = 1; attempt <= options.retry_cap; ++attempt) {
        // coefficients of the generic substitution x_i -> sum_j coef[i][j] x_j
        // for the last d vertices i, over the first c vertices j
        std::vector<std::vector<long long>> coef(n, std::vector<long long>(c, 0));
        for (int i = c; i < n; ++i)
            for (int j = 0; j < c; ++j) coef[i][j] = static_cast<long long>(rng() % p);

        // Any maximal independent row set is a valid selection. The greedy
        // scan resolves ties by position, so permuting the row order on
        // retries explores different selections (and hence different added
        // facets) when the first choice fails verification over f.
        std::vector<int> order(pool.size());
        for (std::size_t i = 0; i < pool.size(); ++i) order[i] = static_cast<int>(i);
        if (attempt > 1) seeded_shuffle(order, rng);

        ExactMatrix a(static_cast<int>(mu), static_cast<int>(mu - h));
        for (long long r = 0; r < mu; ++r) {
            std::map<Exponents, long long> poly;
            Exponents base_exp(c, 0);
            std::vector<int> big;
            for (int v : vs::vertices(pool[order[r]])) {
                if (v < c)
                    base_exp[v] += 1;
                else
                    big.push_back(v);
            }
            poly[base_exp] = 1;
            for (int v : big) {
                std::map<Exponents, long long> next;
                for (const auto& [exp, val] : poly)
                    for (int j = 0; j < c; ++j) {
                        if (coef[v][j] == 0) continue;
                        Exponents bumped = exp;
                        bumped[j] += 1;
                        next[bumped] = (next[bumped] + val * coef[v][j]) % p;
                    }
                poly = std::move(next);
            }
            for (const auto& [exp, val] : poly)
                a.at(static_cast<int>(r), col_index.at(exp)) = Rat(val);
        }

        std::vector<int> picked = select_independent_rows(a, draw_field);
        if (static_cast<long long>(picked.size()) < mu - h) continue;

        std::vector<bool> kept(pool.size(), false);
        for (int r : picked) kept[order[r]] = true;
        std::vector<VSet> added;
        for (std::size_t r = 0; r < pool.size(); ++r)
            if (!kept[r]) added.push_back(pool[r]);

        std::vector<VSet> facets = dl.facets();
        facets.insert(facets.end(), added.begin(), added.end());
        SimplicialComplex candidate = SimplicialComplex::from_facets(n, facets);
        if (is_valid_cm_cover(dl, candidate, f))
            return CoverResult{candidate, added, attempt, seed};
    }
    fail(ErrorCode::GenericityExhausted,
         "no generic coefficient draw produced a verified cover within the retry cap");
}

SimplicialComplex sandwich_family(const SimplicialComplex& lower,
                                  const SimplicialComplex& upper,
                                  long long target_facet_count,
                                  const FieldSpec& f, std::uint64_t seed) {
    if (lower.is_void() || lower.is_irrelevant() || upper.is_void() ||
        upper.is_irrelevant())
        fail(ErrorCode::PreconditionFailed, "sandwich needs nonempty complexes");
    if (lower.vertex_count() != upper.vertex_count())
        fail(ErrorCode::NotNested, "endpoint complexes have different vertex sets");
    for (VSet fc : lower.facets())
        if (!upper.contains(fc))
            fail(ErrorCode::NotNested,
                 "lower endpoint is not contained in the upper endpoint");
    const int d = upper.krull_dim();
    if (lower.krull_dim() != d)
        fail(ErrorCode::PreconditionFailed,
             "endpoint complexes must have the same dimension");
    for (const SimplicialComplex* end : {&lower, &upper}) {
        auto q = indeg(*end);
        if (!q.has_value() || *q != d)
            fail(ErrorCode::PreconditionFailed, "endpoints must have indeg = d");
        if (!is_buchsbaum(*end, f) || !is_q_linear(*end, f).linear)
            fail(ErrorCode::PreconditionFailed,
                 "endpoints must be Buchsbaum with d-linear resolutions");
    }
    const long long lo = multiplicity(lower), hi = multiplicity(upper);
    if (target_facet_count < lo || target_facet_count > hi)
        fail(ErrorCode::TargetOutOfRange,
             "target facet count must lie between the endpoint multiplicities");

    std::vector<VSet> extra;
    for (VSet fc : upper.facets())
        if (!lower.contains(fc)) extra.push_back(fc);
    std::mt19937_64 rng(seed);
    seeded_shuffle(extra, rng);

    std::vector<VSet> facets = lower.facets();
    facets.insert(facets.end(), extra.begin(),
                  extra.begin() + static_cast<std::ptrdiff_t>(target_facet_count - lo));
    SimplicialComplex result =
        SimplicialComplex::from_facets(lower.vertex_count(), facets);

    auto q = indeg(result);
    bool ok = q.has_value() && *q == d && is_buchsbaum(result, f) &&
              is_q_linear(result, f).linear;
    if (!ok)
        fail(ErrorCode::VerificationFailed,
             "sandwich output failed Buchsbaum/d-linear re-verification");
    return result;
}

const char* realization_status_name(RealizationStatus s) {
    switch (s) {
    case RealizationStatus::Realized: return "Realized";
    case RealizationStatus::InfeasibleByBound: return "InfeasibleByBound";
    case RealizationStatus::Unknown: return "Unknown";
    }
    return "Unknown";
}

const char* realization_method_name(RealizationMethod m) {
    switch (m) {
    case RealizationMethod::DisjointUnionQ2: return "DisjointUnionQ2";
    case RealizationMethod::CyclicDual: return "CyclicDual";
    case RealizationMethod::CMExample: return "CMExample";
    case RealizationMethod::Sandwich3: return "Sandwich3";
    case RealizationMethod::SearchFail: return "SearchFail";
    }
    return "SearchFail";
}

RealizationOutcome realize(int c, int d, int q, long long h, const FieldSpec& f,
                           std::uint64_t seed) {
    if (c < 1 || q < 2 || q > d || h < 0)
        fail(ErrorCode::ParameterRange,
             "realize needs c >= 1, 2 <= q <= d, h >= 0");
    RealizationOutcome out;
    out.c = c;
    out.d = d;
    out.q = q;
    out.h = h;

    const Rat bound = h_bound(c, d, q);
    if (Rat(h) > bound) {
        out.status = RealizationStatus::InfeasibleByBound;
        out.method = RealizationMethod::SearchFail;
        out.note = "h exceeds the homology bound " + bound.str() +
                   " for this (c, d, q)";
        return out;
    }

    auto deliver = [&](SimplicialComplex w, RealizationMethod m,
                       const std::string& note) {
        verify_witness(w, c, d, q, h, f);
        out.status = RealizationStatus::Realized;
        out.method = m;
        out.witness = std::move(w);
        out.note = note;
        return out;
    };

    if (q == 2)
        return deliver(disjoint_union_q2(c, d, h),
                       RealizationMethod::DisjointUnionQ2,
                       "disjoint union of a star component and standalone simplexes");

    if (h == 0 && q == d) {
        if (c == 1)
            return deliver(punctured_simplex_boundary(d),
                           RealizationMethod::CMExample,
                           "simplex boundary minus one facet");
        if (q == 3)
            return deliver(cm_cover(hanano(c + 3), f, seed).cover,
                           RealizationMethod::CMExample,
                           "Cohen-Macaulay cover of the two-dimensional example");
        if (c == 2)
            return deliver(cm_cover(cyclic_dual(d, d), f, seed).cover,
                           RealizationMethod::CMExample,
                           "Cohen-Macaulay cover of the cyclic dual");
    }

    if (q == 3 && d == 3 && h >= 1) {
        // c >= 2 here: c = 1 gives bound 1/3 and is already infeasible
        SimplicialComplex lower = hanano(c + 3);
        long long h0 = reduced_homology(lower, f).at(1);
        if (h <= h0) {
            SimplicialComplex w =
                (h == h0) ? lower
                          : sandwich_family(lower, cm_cover(lower, f, seed).cover,
                                            multiplicity(lower) + (h0 - h), f,
                                            seed);
            return deliver(std::move(w), RealizationMethod::Sandwich3,
                           "two-dimensional example interpolated toward its cover");
        }
    }

    if (h == 1 && c == d - q + 2)
        return deliver(cyclic_dual(d, q), RealizationMethod::CyclicDual,
                       "cyclic polytope boundary dual");

    if (c == 3 && q == d && d % 2 == 1 && h == (d + 1) / 2)
        return deliver(bruns_hibi_dual(d + 3), RealizationMethod::CMExample,
                       "dual of the even-offset cyclic triangle family");

    // bounded random search over pure complexes with the forced multiplicity
    const int n = c + d;
    const long long target_e =
        binomial(c + q - 1, q - 1) - h * binomial(d - 1, q - 1);
    if (n <= 9 && target_e >= 1 && target_e <= binomial(n, d)) {
        std::vector<VSet> all_d;
        vs::subsets_of_size(vs::full(n), d, all_d);
        std::mt19937_64 rng(seed);
        for (int trial = 0; trial < 24; ++trial) {
            std::vector<VSet> sample = all_d;
            seeded_shuffle(sample, rng);
            sample.resize(static_cast<std::size_t>(target_e));
            try {
                SimplicialComplex cand =
                    SimplicialComplex::from_facets(n, sample);
                if (cand.krull_dim() != d) continue;
                if (witness_ok(cand, c, d, q, h, f)) {
                    out.status = RealizationStatus::Realized;
                    out.method = RealizationMethod::SearchFail;
                    out.witness = std::move(cand);
                    out.note = "found by bounded random search";
                    return out;
                }
            } catch (const Error&) {
                continue;
            }
        }
        out.note = "bounded random search exhausted without a witness";
    } else {
        out.note = "no construction applies and the search space is out of range";
    }
    out.status = RealizationStatus::Unknown;
    out.method = RealizationMethod::SearchFail;
    return out;
}

} // namespace sr
