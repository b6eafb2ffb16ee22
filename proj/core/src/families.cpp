#include "sr/families.hpp"

#include "sr/error.hpp"

#include <algorithm>

namespace sr {

namespace {

bool small_prime(long long p) {
    if (p < 2) return false;
    for (long long t = 2; t * t <= p; ++t)
        if (p % t == 0) return false;
    return true;
}

using Lists = std::vector<std::vector<int>>;

SimplicialComplex build(int n, const Lists& lists) {
    return SimplicialComplex::from_vertex_lists(n, lists);
}

} // namespace

SimplicialComplex skeleton_complex(int n, int d) {
    if (d < 1 || d > n - 1)
        fail(ErrorCode::ParameterRange, "skeleton needs 1 <= d <= n-1");
    std::vector<VSet> facets;
    vs::subsets_of_size(vs::full(n), d, facets);
    return SimplicialComplex::from_facets(n, facets);
}

SimplicialComplex max_embdim_cm(int c, int d) {
    if (c < 0 || d < 2)
        fail(ErrorCode::ParameterRange, "max_embdim_cm needs c >= 0 and d >= 2");
    int n = c + d;
    VSet y_block = 0; // vertices c+1 .. c+d-1
    for (int j = c + 1; j < n; ++j) y_block |= vs::unit(j);
    std::vector<VSet> facets;
    for (int i = 0; i <= c; ++i) facets.push_back(y_block | vs::unit(i));
    return SimplicialComplex::from_facets(n, facets);
}

SimplicialComplex disjoint_union_q2(int c, int d, int h) {
    if (c < 1 || d < 2 || h < 0)
        fail(ErrorCode::ParameterRange,
             "disjoint_union_q2 needs c >= 1, d >= 2, h >= 0");
    if (c < static_cast<long long>(d) * h)
        fail(ErrorCode::ParameterRange,
             "disjoint_union_q2 infeasible: h exceeds c/d");
    int c0 = c - d * h;
    SimplicialComplex core = max_embdim_cm(c0, d);
    int n = c + d;
    std::vector<VSet> facets(core.facets());
    int offset = core.vertex_count();
    for (int t = 0; t < h; ++t) {
        VSet block = 0;
        for (int j = 0; j < d; ++j) block |= vs::unit(offset + t * d + j);
        facets.push_back(block);
    }
    return SimplicialComplex::from_facets(n, facets);
}

SimplicialComplex hibi_cycle(int d) {
    if (d < 2) fail(ErrorCode::ParameterRange, "hibi_cycle needs d >= 2");
    int n = 2 * d - 1;
    Lists lists;
    for (int i = 0; i < n; ++i) {
        std::vector<int> fc;
        for (int r = 0; r < d; ++r) fc.push_back((i + r) % n);
        lists.push_back(fc);
    }
    return build(n, lists);
}

SimplicialComplex terai_complex(int n) {
    if (n <= 3 || !small_prime(2LL * n + 1))
        fail(ErrorCode::ParameterRange,
             "terai_complex needs n > 3 with 2n+1 prime");
    Lists lists;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; a + b <= n; ++b)
            lists.push_back({a - 1, b - 1, a + b - 1});
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            int cc = 2 * n + 1 - a - b;
            if (cc > b && cc <= n) lists.push_back({a - 1, b - 1, cc - 1});
        }
    return build(n, lists);
}

SimplicialComplex hanano(int n) {
    if (n < 5) fail(ErrorCode::ParameterRange, "hanano needs n >= 5");
    Lists lists;
    if (n % 3 == 0) {
        int k = n / 3;
        for (int i = 0; i <= k - 1; ++i)
            lists.push_back({i, i + k, i + 2 * k});
        for (int i = 0; i < n; ++i)
            for (int j = k + 1; j <= 2 * k - 1; ++j)
                lists.push_back({i, (i + k) % n, (i + j) % n});
    } else if (n % 3 == 2) {
        int k = (n - 2) / 3;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= k - 1; ++j)
                lists.push_back({i, (i + 1) % n, (i + 3 * j + 2) % n});
    } else {
        int k = (n - 1) / 3;
        int m = n - 1;        // cyclic part
        int apex = n - 1;     // the extra cone vertex
        for (int i = 0; i < m; ++i)
            lists.push_back({apex, i, (i + 1) % m});
        for (int i = 0; i < m; ++i)
            for (int j = 1; j <= k - 1; ++j)
                lists.push_back({i, (i + 1) % m, (i + 3 * j) % m});
    }
    return build(n, lists);
}

SimplicialComplex cyclic_boundary(int n, int f) {
    if (f < 2 || n < f + 1)
        fail(ErrorCode::ParameterRange, "cyclic_boundary needs f >= 2, n >= f+1");
    // Gale's evenness condition: S is a facet iff every maximal run of
    // consecutive vertices in S avoiding both 0 and n-1 has even length.
    std::vector<VSet> candidates;
    vs::subsets_of_size(vs::full(n), f, candidates);
    std::vector<VSet> facets;
    for (VSet s : candidates) {
        auto verts = vs::vertices(s);
        bool ok = true;
        size_t i = 0;
        while (i < verts.size() && ok) {
            size_t j = i;
            while (j + 1 < verts.size() && verts[j + 1] == verts[j] + 1) ++j;
            bool exempt = verts[i] == 0 || verts[j] == n - 1;
            if (!exempt && (j - i + 1) % 2 != 0) ok = false;
            i = j + 1;
        }
        if (ok) facets.push_back(s);
    }
    return SimplicialComplex::from_facets(n, facets);
}

SimplicialComplex cyclic_dual(int d, int q) {
    if (q < 2 || q > d)
        fail(ErrorCode::ParameterRange, "cyclic_dual needs 2 <= q <= d");
    return alexander_dual(cyclic_boundary(2 * d - q + 2, 2 * (d - q + 1)));
}

SimplicialComplex bruns_hibi(int n) {
    if (n < 6 || n % 2 != 0)
        fail(ErrorCode::ParameterRange, "bruns_hibi needs even n >= 6");
    Lists lists;
    for (int i = 0; i < n; ++i)
        for (int j = 2; j <= n - 2; j += 2)
            lists.push_back({i, (i + 1) % n, (i + j) % n});
    return build(n, lists);
}

SimplicialComplex bruns_hibi_dual(int n) {
    return alexander_dual(bruns_hibi(n));
}

SimplicialComplex rp2() {
    // minimal 6-vertex triangulation of the real projective plane
    Lists lists = {{0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {0, 2, 5}, {0, 3, 4},
                   {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {2, 4, 5}, {3, 4, 5}};
    return build(6, lists);
}

SimplicialComplex moebius() {
    Lists lists = {{0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {0, 2, 5}, {0, 3, 4},
                   {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {2, 4, 5}};
    return build(6, lists);
}

const std::vector<FamilyInfo>& family_list() {
    static const std::vector<FamilyInfo> table = {
        {"skeleton", 2, "n d  (all d-subsets of n vertices)"},
        {"max-embdim-cm", 2, "c d  (star construction, codim c, dim d)"},
        {"disjoint-union-q2", 3, "c d h  (requires c >= d*h)"},
        {"hibi-cycle", 1, "d  (2d-1 cyclic windows of width d)"},
        {"terai", 1, "n  (sum-set triangles; 2n+1 must be prime)"},
        {"hanano", 1, "n  (two-dimensional, three cases by n mod 3)"},
        {"cyclic-boundary", 2, "n f  (cyclic polytope boundary, Gale evenness)"},
        {"cyclic-dual", 2, "d q  (dual of cyclic_boundary(2d-q+2, 2(d-q+1)))"},
        {"bruns-hibi", 1, "n  (even offsets; n even >= 6)"},
        {"bruns-hibi-dual", 1, "n  (Alexander dual of bruns-hibi)"},
        {"rp2", 0, "(6-vertex projective plane)"},
        {"moebius", 0, "(9-triangle Moebius band)"},
    };
    return table;
}

SimplicialComplex make_family(const std::string& name,
                              const std::vector<long long>& params) {
    const FamilyInfo* info = nullptr;
    for (const auto& fi : family_list())
        if (fi.name == name) { info = &fi; break; }
    if (info == nullptr)
        fail(ErrorCode::ParameterRange, "unknown family '" + name + "'");
    if (static_cast<int>(params.size()) != info->arity)
        fail(ErrorCode::ParameterRange,
             "family '" + name + "' takes " + std::to_string(info->arity) +
                 " parameter(s): " + info->params_doc);
    for (long long p : params)
        if (p < 0 || p > 64)
            fail(ErrorCode::ParameterRange,
                 "family parameter out of range: " + std::to_string(p));
    auto a = [&](int i) { return static_cast<int>(params[i]); };
    if (name == "skeleton") return skeleton_complex(a(0), a(1));
    if (name == "max-embdim-cm") return max_embdim_cm(a(0), a(1));
    if (name == "disjoint-union-q2") return disjoint_union_q2(a(0), a(1), a(2));
    if (name == "hibi-cycle") return hibi_cycle(a(0));
    if (name == "terai") return terai_complex(a(0));
    if (name == "hanano") return hanano(a(0));
    if (name == "cyclic-boundary") return cyclic_boundary(a(0), a(1));
    if (name == "cyclic-dual") return cyclic_dual(a(0), a(1));
    if (name == "bruns-hibi") return bruns_hibi(a(0));
    if (name == "bruns-hibi-dual") return bruns_hibi_dual(a(0));
    if (name == "rp2") return rp2();
    return moebius();
}

} // namespace sr
