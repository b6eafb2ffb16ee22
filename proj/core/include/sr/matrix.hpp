#pragma once

#include "sr/field.hpp"

#include <vector>

namespace sr {

/**
 * Dense matrix with exact rational entries, interpreted over a FieldSpec
 * at computation time. Over GF(p) the entries must reduce mod p (i.e. no
 * denominator divisible by p); boundary matrices and the cover matrices
 * only ever store small integers.
 */
class ExactMatrix {
public:
    ExactMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }
    const Rat& at(int r, int c) const {
        return entries_[static_cast<size_t>(r) * cols_ + c];
    }

private:
    int rows_, cols_;
    std::vector<Rat> entries_;
};

// Exact rank. Over the rationals the computation clears denominators per row
// and runs fraction-free (Bareiss) elimination over the integers; over GF(p)
// it runs modular elimination. Never floating point.
int rank(const ExactMatrix& m, const FieldSpec& f);

// Greedy maximal independent row set, scanning rows in ascending index:
// a row is kept iff it is not in the span of the rows kept before it.
// The result size equals rank(m, f) and is deterministic given m and f.
std::vector<int> select_independent_rows(const ExactMatrix& m, const FieldSpec& f);

} // namespace sr
