#include "sr/complex.hpp"

#include "sr/error.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace sr {

namespace {

std::string face_str(VSet f) {
    std::string s = "{";
    bool first = true;
    for (int v : vs::vertices(f)) {
        if (!first) s += ",";
        s += std::to_string(v);
        first = false;
    }
    return s + "}";
}

// Keep only inclusion-maximal sets, deduplicated, lex sorted.
std::vector<VSet> maximalize(std::vector<VSet> sets) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VSet> out;
    for (VSet s : sets) {
        bool dominated = false;
        for (VSet t : sets)
            if (t != s && vs::subset(s, t)) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(s);
    }
    std::sort(out.begin(), out.end(), vs::lex_less);
    return out;
}

} // namespace

SimplicialComplex SimplicialComplex::from_facets(int n, std::vector<VSet> facets,
                                                 bool allow_isolated) {
    if (n < 0 || n > 64)
        fail(ErrorCode::VertexOutOfRange,
             "vertex count must be between 0 and 64, got " + std::to_string(n));
    VSet universe = vs::full(n);
    for (VSet f : facets)
        if (!vs::subset(f, universe))
            fail(ErrorCode::VertexOutOfRange,
                 "facet " + face_str(f) + " uses vertices outside 0.." +
                     std::to_string(n - 1));
    if (facets.empty() && n > 0 && !allow_isolated)
        fail(ErrorCode::EmptyFacetList,
             "no facets given for " + std::to_string(n) + " vertices");

    SimplicialComplex dl;
    dl.n_ = n;
    dl.facets_ = maximalize(std::move(facets));

    if (!allow_isolated && n > 0) {
        VSet covered = 0;
        for (VSet f : dl.facets_) covered |= f;
        if (covered != universe)
            fail(ErrorCode::EmptyFacetList,
                 "vertices not covered by any facet (pass allow_isolated to "
                 "permit this): missing " +
                     face_str(universe & ~covered));
    }
    return dl;
}

SimplicialComplex SimplicialComplex::from_vertex_lists(
    int n, const std::vector<std::vector<int>>& facets, bool allow_isolated) {
    std::vector<VSet> masks;
    masks.reserve(facets.size());
    for (const auto& verts : facets) {
        for (int v : verts)
            if (v < 0 || v >= n)
                fail(ErrorCode::VertexOutOfRange,
                     "vertex " + std::to_string(v) + " out of range 0.." +
                         std::to_string(n - 1));
        masks.push_back(vs::of(verts));
    }
    return from_facets(n, std::move(masks), allow_isolated);
}

int SimplicialComplex::dim() const {
    if (is_void()) return -2;
    int best = 0;
    for (VSet f : facets_) best = std::max(best, vs::count(f));
    return best - 1;
}

int SimplicialComplex::krull_dim() const { return dim() + 1; }

bool SimplicialComplex::contains(VSet face) const {
    for (VSet f : facets_)
        if (vs::subset(face, f)) return true;
    return false;
}

std::vector<VSet> SimplicialComplex::faces_of_size(int k) const {
    std::vector<VSet> out;
    if (is_void() || k < 0) return out;
    if (k == 0) return {VSet{0}};
    std::set<VSet> seen;
    std::vector<VSet> buf;
    for (VSet f : facets_) {
        buf.clear();
        vs::subsets_of_size(f, k, buf);
        seen.insert(buf.begin(), buf.end());
    }
    out.assign(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), vs::lex_less);
    return out;
}

std::vector<std::vector<VSet>> SimplicialComplex::faces_by_size() const {
    int d = krull_dim();
    std::vector<std::vector<VSet>> out;
    if (is_void()) return out;
    out.reserve(d + 1);
    for (int k = 0; k <= d; ++k) out.push_back(faces_of_size(k));
    return out;
}

long long SimplicialComplex::face_count(int k) const {
    return static_cast<long long>(faces_of_size(k).size());
}

FVector f_vector(const SimplicialComplex& dl) {
    if (dl.is_void())
        fail(ErrorCode::PreconditionFailed, "f-vector of the void complex");
    FVector f;
    int d = dl.krull_dim();
    f.counts.resize(d + 1);
    for (int k = 0; k <= d; ++k) f.counts[k] = dl.face_count(k);
    return f;
}

HVector h_vector(const SimplicialComplex& dl) {
    FVector f = f_vector(dl);
    int d = f.d();
    HVector h;
    h.coeffs.assign(d + 1, 0);
    for (int k = 0; k <= d; ++k) {
        long long acc = 0;
        for (int i = 0; i <= k; ++i) {
            long long term = binomial(d - i, k - i) * f.counts[i];
            acc += ((k - i) % 2 == 0) ? term : -term;
        }
        h.coeffs[k] = acc;
    }
    return h;
}

namespace {

SubcomplexResult reindex(int parent_n, std::vector<VSet> facets, VSet kept) {
    SubcomplexResult res;
    res.vertex_map = vs::vertices(kept);
    for (VSet& f : facets) f = vs::compress(f, kept);
    res.complex = SimplicialComplex::from_facets(vs::count(kept), std::move(facets),
                                                 /*allow_isolated=*/true);
    (void)parent_n;
    return res;
}

} // namespace

SubcomplexResult link(const SimplicialComplex& dl, VSet face) {
    if (!dl.contains(face))
        fail(ErrorCode::FaceNotInComplex, "link of a non-face " + face_str(face));
    std::vector<VSet> lk;
    for (VSet f : dl.facets())
        if (vs::subset(face, f)) lk.push_back(f & ~face);
    lk = maximalize(std::move(lk));
    VSet occurring = 0;
    for (VSet f : lk) occurring |= f;
    return reindex(dl.vertex_count(), std::move(lk), occurring);
}

SubcomplexResult restriction(const SimplicialComplex& dl, VSet w) {
    if (!vs::subset(w, vs::full(dl.vertex_count())))
        fail(ErrorCode::VertexOutOfRange, "restriction set outside vertex range");
    std::vector<VSet> cut;
    cut.reserve(dl.facets().size());
    for (VSet f : dl.facets()) cut.push_back(f & w);
    if (dl.is_void()) cut.clear();
    cut = maximalize(std::move(cut));
    return reindex(dl.vertex_count(), std::move(cut), w);
}

SimplicialComplex skeleton(const SimplicialComplex& dl, int r) {
    if (dl.is_void() || r < -1 || r > dl.dim())
        fail(ErrorCode::ParameterRange,
             "skeleton index must satisfy -1 <= r <= dim");
    std::vector<VSet> facets = dl.faces_of_size(r + 1);
    for (VSet f : dl.facets())
        if (vs::count(f) <= r) facets.push_back(f);
    return SimplicialComplex::from_facets(dl.vertex_count(), std::move(facets),
                                          /*allow_isolated=*/true);
}

std::vector<VSet> minimal_nonfaces(const SimplicialComplex& dl) {
    std::vector<VSet> out;
    int n = dl.vertex_count();
    int d = dl.krull_dim();
    std::vector<VSet> candidates;
    for (int s = 1; s <= d + 1 && s <= n; ++s) {
        candidates.clear();
        vs::subsets_of_size(vs::full(n), s, candidates);
        for (VSet cand : candidates) {
            if (dl.contains(cand)) continue;
            bool minimal = true;
            for (VSet rest = cand; rest; rest &= rest - 1) {
                VSet v = rest & (~rest + 1);
                if (!dl.contains(cand & ~v)) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) out.push_back(cand);
        }
    }
    std::sort(out.begin(), out.end(), vs::lex_less);
    return out;
}

std::optional<int> indeg(const SimplicialComplex& dl) {
    int n = dl.vertex_count();
    int d = dl.krull_dim();
    std::vector<VSet> candidates;
    for (int s = 1; s <= d + 1 && s <= n; ++s) {
        candidates.clear();
        vs::subsets_of_size(vs::full(n), s, candidates);
        for (VSet cand : candidates)
            if (!dl.contains(cand)) return s; // smallest non-face is minimal
    }
    return std::nullopt; // zero ideal
}

bool is_pure(const SimplicialComplex& dl) {
    if (dl.is_void()) return true;
    int d = dl.krull_dim();
    for (VSet f : dl.facets())
        if (vs::count(f) != d) return false;
    return true;
}

long long multiplicity(const SimplicialComplex& dl) {
    if (dl.is_void())
        fail(ErrorCode::PreconditionFailed, "multiplicity of the void complex");
    return dl.face_count(dl.krull_dim());
}

SimplicialComplex alexander_dual(const SimplicialComplex& dl) {
    int n = dl.vertex_count();
    int c = n - dl.krull_dim();
    auto q = indeg(dl);
    if (c < 2 || !q.has_value() || *q < 2)
        fail(ErrorCode::DualUndefined,
             "Alexander dual needs codim >= 2 and indeg >= 2 (codim " +
                 std::to_string(c) + ", indeg " +
                 (q ? std::to_string(*q) : std::string("inf")) + ")");
    VSet universe = vs::full(n);
    std::vector<VSet> facets;
    for (VSet nf : minimal_nonfaces(dl)) facets.push_back(universe & ~nf);
    return SimplicialComplex::from_facets(n, std::move(facets));
}

} // namespace sr
