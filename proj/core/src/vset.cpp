#include "sr/vset.hpp"

#include <array>

namespace sr {
namespace vs {

std::vector<int> vertices(VSet s) {
    std::vector<int> out;
    out.reserve(count(s));
    while (s) {
        out.push_back(std::countr_zero(s));
        s &= s - 1;
    }
    return out;
}

VSet of(const std::vector<int>& verts) {
    VSet s = 0;
    for (int v : verts) s |= unit(v);
    return s;
}

bool lex_less(VSet a, VSet b) {
    while (a && b) {
        int va = std::countr_zero(a);
        int vb = std::countr_zero(b);
        if (va != vb) return va < vb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

namespace {

void subsets_rec(const std::vector<int>& verts, int from, int k, VSet acc,
                 std::vector<VSet>& out) {
    if (k == 0) {
        out.push_back(acc);
        return;
    }
    int remaining = static_cast<int>(verts.size()) - from;
    if (remaining < k) return;
    // taking the smallest available vertex first yields lex order
    subsets_rec(verts, from + 1, k - 1, acc | unit(verts[from]), out);
    subsets_rec(verts, from + 1, k, acc, out);
}

} // namespace

void subsets_of_size(VSet base, int k, std::vector<VSet>& out) {
    if (k < 0 || k > count(base)) return;
    std::vector<int> verts = vertices(base);
    subsets_rec(verts, 0, k, 0, out);
}

VSet compress(VSet s, VSet mask) {
    VSet out = 0;
    int idx = 0;
    for (VSet m = mask; m; m &= m - 1, ++idx) {
        if (s & (m & (~m + 1))) out |= VSet{1} << idx;
    }
    return out;
}

} // namespace vs

long long binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    static const auto table = [] {
        constexpr int N = 65;
        std::array<std::array<long long, N>, N> t{};
        for (int i = 0; i < N; ++i) {
            t[i][0] = 1;
            for (int j = 1; j <= i; ++j)
                t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? t[i - 1][j] : 0);
        }
        return t;
    }();
    return table[n][k];
}

} // namespace sr
