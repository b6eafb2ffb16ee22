#include "sr/matrix.hpp"

#include "sr/error.hpp"

#include <utility>

namespace sr {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

Int gcd_int(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = std::move(t);
    }
    return a;
}

// Rows scaled to integers (rank and row independence are scale-invariant).
std::vector<std::vector<Int>> integer_rows(const ExactMatrix& m) {
    std::vector<std::vector<Int>> rows(m.rows(), std::vector<Int>(m.cols()));
    for (int r = 0; r < m.rows(); ++r) {
        Int lcm = 1;
        for (int c = 0; c < m.cols(); ++c) {
            Int den = denominator(m.at(r, c));
            Int g = gcd_int(lcm, den);
            lcm = lcm / g * den;
        }
        for (int c = 0; c < m.cols(); ++c) {
            const Rat& e = m.at(r, c);
            rows[r][c] = numerator(e) * (lcm / denominator(e));
        }
    }
    return rows;
}

// Fraction-free (Bareiss) elimination: every division below is exact.
int rank_bareiss(std::vector<std::vector<Int>> a) {
    if (a.empty()) return 0;
    int rows = static_cast<int>(a.size());
    int cols = static_cast<int>(a[0].size());
    Int prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[r], a[pivot]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

long long mod_reduce(const Int& v, long long p) {
    Int m = v % p;
    if (m < 0) m += p;
    return m.convert_to<long long>();
}

long long mod_inverse(long long a, long long p) {
    long long t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        long long q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (r != 1)
        fail(ErrorCode::ParameterRange, "not invertible mod p");
    return ((t % p) + p) % p;
}

std::vector<std::vector<long long>> mod_rows(const ExactMatrix& m, long long p) {
    std::vector<std::vector<long long>> rows(m.rows(),
                                             std::vector<long long>(m.cols()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            const Rat& e = m.at(r, c);
            long long den = mod_reduce(denominator(e), p);
            if (den == 0)
                fail(ErrorCode::ParameterRange,
                     "matrix entry has denominator divisible by the field characteristic");
            long long num = mod_reduce(numerator(e), p);
            rows[r][c] = num * mod_inverse(den, p) % p;
        }
    return rows;
}

int rank_mod_p(std::vector<std::vector<long long>> a, long long p) {
    if (a.empty()) return 0;
    int rows = static_cast<int>(a.size());
    int cols = static_cast<int>(a[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[r], a[pivot]);
        long long inv = mod_inverse(a[r][c], p);
        for (int i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            long long factor = a[i][c] * inv % p;
            for (int j = c; j < cols; ++j) {
                a[i][j] = (a[i][j] - factor * a[r][j]) % p;
                if (a[i][j] < 0) a[i][j] += p;
            }
        }
        ++r;
    }
    return r;
}

} // namespace

int rank(const ExactMatrix& m, const FieldSpec& f) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    if (f.is_rationals()) return rank_bareiss(integer_rows(m));
    return rank_mod_p(mod_rows(m, f.modulus), f.modulus);
}

// Greedy scan keeping an echelonized basis of the rows accepted so far.
std::vector<int> select_independent_rows(const ExactMatrix& m, const FieldSpec& f) {
    std::vector<int> picked;
    if (m.rows() == 0 || m.cols() == 0) return picked;
    int cols = m.cols();

    if (f.is_rationals()) {
        auto rows = integer_rows(m);
        // basis rows with their pivot columns, kept as exact rationals
        std::vector<std::vector<Rat>> basis;
        std::vector<int> pivot_col;
        for (int r = 0; r < m.rows(); ++r) {
            std::vector<Rat> v(cols);
            for (int c = 0; c < cols; ++c) v[c] = Rat(rows[r][c]);
            for (size_t b = 0; b < basis.size(); ++b) {
                const Rat& lead = v[pivot_col[b]];
                if (lead != 0) {
                    Rat factor = lead; // basis rows are normalized to pivot 1
                    for (int c = 0; c < cols; ++c) v[c] -= factor * basis[b][c];
                }
            }
            int pc = -1;
            for (int c = 0; c < cols; ++c)
                if (v[c] != 0) {
                    pc = c;
                    break;
                }
            if (pc < 0) continue;
            Rat inv = Rat(1) / v[pc];
            for (int c = 0; c < cols; ++c) v[c] *= inv;
            basis.push_back(std::move(v));
            pivot_col.push_back(pc);
            picked.push_back(r);
        }
        return picked;
    }

    long long p = f.modulus;
    auto rows = mod_rows(m, p);
    std::vector<std::vector<long long>> basis;
    std::vector<int> pivot_col;
    for (int r = 0; r < m.rows(); ++r) {
        std::vector<long long> v = rows[r];
        for (size_t b = 0; b < basis.size(); ++b) {
            long long lead = v[pivot_col[b]];
            if (lead != 0) {
                for (int c = 0; c < cols; ++c) {
                    v[c] = (v[c] - lead * basis[b][c]) % p;
                    if (v[c] < 0) v[c] += p;
                }
            }
        }
        int pc = -1;
        for (int c = 0; c < cols; ++c)
            if (v[c] != 0) {
                pc = c;
                break;
            }
        if (pc < 0) continue;
        long long inv = mod_inverse(v[pc], p);
        for (int c = 0; c < cols; ++c) v[c] = v[c] * inv % p;
        basis.push_back(std::move(v));
        pivot_col.push_back(pc);
        picked.push_back(r);
    }
    return picked;
}

} // namespace sr
