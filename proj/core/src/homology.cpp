#include "sr/homology.hpp"

#include "sr/error.hpp"

#include <cstring>
#include <list>
#include <mutex>
#include <unordered_map>

namespace sr {

ExactMatrix boundary_matrix(const SimplicialComplex& dl, int p, const FieldSpec& f) {
    (void)f; // entries are 0/±1 in any field
    if (p < -1 || p > dl.dim() + 1)
        fail(ErrorCode::ParameterRange, "boundary index out of range");
    std::vector<VSet> rows_faces = dl.faces_of_size(p + 1);
    std::vector<VSet> cols_faces = dl.faces_of_size(p);
    ExactMatrix m(static_cast<int>(rows_faces.size()),
                  static_cast<int>(cols_faces.size()));
    if (p <= 0) {
        // ∂_0 sends every vertex to -∅; ∂_{-1} is the zero shape.
        if (p == 0)
            for (int r = 0; r < m.rows(); ++r) m.at(r, 0) = -1;
        return m;
    }
    std::unordered_map<VSet, int> col_index;
    col_index.reserve(cols_faces.size());
    for (size_t i = 0; i < cols_faces.size(); ++i) col_index[cols_faces[i]] = static_cast<int>(i);
    for (size_t r = 0; r < rows_faces.size(); ++r) {
        int j = 0;
        for (VSet rest = rows_faces[r]; rest; rest &= rest - 1) {
            ++j; // 1-based position of the removed vertex
            VSet v = rest & (~rest + 1);
            int col = col_index.at(rows_faces[r] & ~v);
            m.at(static_cast<int>(r), col) = (j % 2 == 1) ? -1 : 1;
        }
    }
    return m;
}

namespace {

std::string cache_key(const SimplicialComplex& dl, const FieldSpec& f) {
    std::string key;
    key.reserve(16 + dl.facets().size() * 8);
    auto push64 = [&key](std::uint64_t v) {
        char buf[8];
        std::memcpy(buf, &v, 8);
        key.append(buf, 8);
    };
    push64(static_cast<std::uint64_t>(dl.vertex_count()));
    push64(f.is_rationals() ? ~std::uint64_t{0}
                            : static_cast<std::uint64_t>(f.modulus));
    for (VSet fc : dl.facets()) push64(fc);
    return key;
}

class HomologyCache {
public:
    explicit HomologyCache(std::size_t cap) : cap_(cap) {}

    bool get(const std::string& key, std::vector<long long>& out) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = index_.find(key);
        if (it == index_.end()) return false;
        order_.splice(order_.begin(), order_, it->second);
        out = it->second->second;
        return true;
    }

    void put(const std::string& key, const std::vector<long long>& value) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = index_.find(key);
        if (it != index_.end()) {
            order_.splice(order_.begin(), order_, it->second);
            return;
        }
        order_.emplace_front(key, value);
        index_[key] = order_.begin();
        if (index_.size() > cap_) {
            index_.erase(order_.back().first);
            order_.pop_back();
        }
    }

    std::size_t size() {
        std::lock_guard<std::mutex> lock(mutex_);
        return index_.size();
    }

    void clear() {
        std::lock_guard<std::mutex> lock(mutex_);
        order_.clear();
        index_.clear();
    }

private:
    std::mutex mutex_;
    std::size_t cap_;
    std::list<std::pair<std::string, std::vector<long long>>> order_;
    std::unordered_map<std::string,
                       decltype(order_)::iterator>
        index_;
};

HomologyCache& cache() {
    static HomologyCache instance(1u << 20);
    return instance;
}

} // namespace

HomologyProfile reduced_homology(const SimplicialComplex& dl, const FieldSpec& f) {
    HomologyProfile profile;
    profile.field = f;
    profile.dim = dl.dim();
    if (dl.is_void()) return profile;

    std::string key = cache_key(dl, f);
    if (cache().get(key, profile.dims)) return profile;

    int dim = profile.dim;
    auto by_size = dl.faces_by_size();
    // ranks[p] = rank ∂_p for p = 0..dim; the maps beyond are zero.
    std::vector<int> ranks(dim + 2, 0);
    for (int p = 0; p <= dim; ++p)
        ranks[p] = rank(boundary_matrix(dl, p, f), f);

    profile.dims.assign(dim + 2, 0);
    for (int p = -1; p <= dim; ++p) {
        long long chains = (p == -1) ? 1 : static_cast<long long>(by_size[p + 1].size());
        long long r_here = (p >= 0) ? ranks[p] : 0;
        long long r_next = (p + 1 <= dim) ? ranks[p + 1] : 0;
        profile.dims[p + 1] = chains - r_here - r_next;
    }
    cache().put(key, profile.dims);
    return profile;
}

long long reduced_euler(const HomologyProfile& profile) {
    long long acc = 0;
    for (int p = -1; p <= profile.dim; ++p) {
        long long v = profile.at(p);
        acc += (p % 2 == 0) ? v : -v;
    }
    return acc;
}

std::size_t homology_cache_entries() { return cache().size(); }

void clear_homology_cache() { cache().clear(); }

} // namespace sr
