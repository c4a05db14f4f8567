#include "cicalc/linalg.hpp"

namespace cicalc {

namespace {

// row echelon in place; returns pivot columns
std::vector<int> echelon(const PrimeField& F, std::vector<uint32_t>& a, int rows, int cols) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (a[size_t(i) * size_t(cols) + size_t(c)]) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < cols; ++j)
                std::swap(a[size_t(pr) * size_t(cols) + size_t(j)],
                          a[size_t(r) * size_t(cols) + size_t(j)]);
        uint32_t inv = F.inv(a[size_t(r) * size_t(cols) + size_t(c)]);
        for (int j = c; j < cols; ++j) {
            uint32_t& x = a[size_t(r) * size_t(cols) + size_t(j)];
            x = F.mul(x, inv);
        }
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            uint32_t f = a[size_t(i) * size_t(cols) + size_t(c)];
            if (!f) continue;
            for (int j = c; j < cols; ++j) {
                uint32_t& x = a[size_t(i) * size_t(cols) + size_t(j)];
                x = F.sub(x, F.mul(f, a[size_t(r) * size_t(cols) + size_t(j)]));
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int FpMatrix::rank() const {
    std::vector<uint32_t> a = a_;
    return int(echelon(field_, a, rows_, cols_).size());
}

FpMatrix FpMatrix::multiplied(const FpMatrix& o) const {
    if (cols_ != o.rows_) throw StructuralError("matrix shape mismatch");
    FpMatrix out(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            uint32_t v = at(i, k);
            if (!v) continue;
            for (int j = 0; j < o.cols_; ++j)
                out.at(i, j) = field_.add(out.at(i, j), field_.mul(v, o.at(k, j)));
        }
    return out;
}

FpMatrix FpMatrix::transposed() const {
    FpMatrix out(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool FpMatrix::solve(const std::vector<uint32_t>& b, std::vector<uint32_t>* x) const {
    if (int(b.size()) != rows_) throw StructuralError("rhs size mismatch");
    int cols = cols_ + 1;
    std::vector<uint32_t> a(size_t(rows_) * size_t(cols));
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) a[size_t(i) * size_t(cols) + size_t(j)] = at(i, j);
        a[size_t(i) * size_t(cols) + size_t(cols_)] = b[size_t(i)];
    }
    std::vector<int> pivots = echelon(field_, a, rows_, cols);
    for (int p : pivots)
        if (p == cols_) return false;
    if (x) {
        x->assign(size_t(cols_), 0);
        for (size_t r = 0; r < pivots.size(); ++r)
            (*x)[size_t(pivots[r])] = a[r * size_t(cols) + size_t(cols_)];
    }
    return true;
}

std::vector<std::vector<uint32_t>> FpMatrix::kernel_basis() const {
    std::vector<uint32_t> a = a_;
    std::vector<int> pivots = echelon(field_, a, rows_, cols_);
    std::vector<bool> is_pivot(size_t(cols_), false);
    for (int p : pivots) is_pivot[size_t(p)] = true;
    std::vector<std::vector<uint32_t>> out;
    for (int c = 0; c < cols_; ++c) {
        if (is_pivot[size_t(c)]) continue;
        std::vector<uint32_t> v(size_t(cols_), 0);
        v[size_t(c)] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[size_t(pivots[r])] = field_.neg(a[r * size_t(cols_) + size_t(c)]);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace cicalc
