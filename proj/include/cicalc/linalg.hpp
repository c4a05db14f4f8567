#pragma once

#include "cicalc/base.hpp"

namespace cicalc {

// Dense matrix over F_p, row-major.
class FpMatrix {
public:
    FpMatrix() = default;
    FpMatrix(const PrimeField& F, int rows, int cols)
        : field_(F), rows_(rows), cols_(cols), a_(size_t(rows) * size_t(cols), 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    uint32_t& at(int r, int c) { return a_[size_t(r) * size_t(cols_) + size_t(c)]; }
    uint32_t at(int r, int c) const { return a_[size_t(r) * size_t(cols_) + size_t(c)]; }

    int rank() const;
    int nullity() const { return cols_ - rank(); }
    // column-space basis indices after elimination; also usable for solving
    FpMatrix multiplied(const FpMatrix& o) const;
    FpMatrix transposed() const;

    // solve A x = b; returns false if inconsistent
    bool solve(const std::vector<uint32_t>& b, std::vector<uint32_t>* x) const;
    // basis of the right kernel (as columns)
    std::vector<std::vector<uint32_t>> kernel_basis() const;

private:
    PrimeField field_{101};
    int rows_ = 0, cols_ = 0;
    std::vector<uint32_t> a_;
};

}  // namespace cicalc
