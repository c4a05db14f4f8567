#include "cicalc/homology.hpp"

namespace cicalc {

FiniteModuleBasis::FiniteModuleBasis(ModulePresentation N, ModOrder order)
    : pres_(std::move(N)), gb_(pres_.relation_gb(order)), qb_(gb_, pres_.gen_degrees()) {
    HilbertSeries hs = hilbert_series_of_quotient(gb_, pres_.gen_degrees());
    if (!hs.is_finite_length())
        throw NotFiniteLengthError("finite basis requested for a module of positive dimension");
    int lo_probe = hs.offset;
    int hi_probe = hs.offset + std::max(0, hs.numerator.deg());
    auto hf = hs.hilbert_function(lo_probe, hi_probe);
    lo_ = 0;
    hi_ = -1;
    bool seen = false;
    for (int d = lo_probe; d <= hi_probe; ++d) {
        if (hf[size_t(d - lo_probe)] != 0) {
            if (!seen) lo_ = d;
            hi_ = d;
            seen = true;
        }
    }
    if (!seen) {
        lo_ = 0;
        hi_ = -1;
    }
    for (int d = lo_; d <= hi_; ++d) pieces_.push_back(qb_.of_degree(d));
}

int FiniteModuleBasis::dim(int degree) const {
    if (degree < lo_ || degree > hi_) return 0;
    return int(pieces_[size_t(degree - lo_)].size());
}

int64_t FiniteModuleBasis::total_length() const {
    int64_t s = 0;
    for (const auto& p : pieces_) s += int64_t(p.size());
    return s;
}

const std::vector<BasisMono>& FiniteModuleBasis::basis(int degree) const {
    static const std::vector<BasisMono> empty;
    if (degree < lo_ || degree > hi_) return empty;
    return pieces_[size_t(degree - lo_)];
}

FpMatrix FiniteModuleBasis::mult_matrix(const Poly& g, int degree) const {
    const RingPtr& P = pres_.ring()->ambient();
    const PrimeField& F = P->field;
    int target = degree + (g.is_zero() ? 0 : g.degree());
    const auto& src = basis(degree);
    const auto& dst = basis(target);
    FpMatrix out(F, int(dst.size()), int(src.size()));
    if (g.is_zero() || src.empty() || dst.empty()) return out;
    for (size_t col = 0; col < src.size(); ++col) {
        VecPoly v = vec_zero(P, pres_.rank());
        v[size_t(src[col].comp)] = Poly::monomial(P, src[col].m, 1) * g;
        VecPoly nf = gb_.normal_form(v);
        for (int comp = 0; comp < pres_.rank(); ++comp)
            for (const Term& t : nf[size_t(comp)].terms()) {
                bool found = false;
                for (size_t row = 0; row < dst.size(); ++row)
                    if (dst[row].comp == comp && dst[row].m == t.m) {
                        out.at(int(row), int(col)) = t.c;
                        found = true;
                        break;
                    }
                if (!found) throw StructuralError("normal form term missing from basis");
            }
    }
    return out;
}

std::vector<uint32_t> FiniteModuleBasis::coords(const VecPoly& v, int degree) const {
    VecPoly nf = gb_.normal_form(v);
    const auto& dst = basis(degree);
    std::vector<uint32_t> out(dst.size(), 0);
    for (int comp = 0; comp < pres_.rank(); ++comp)
        for (const Term& t : nf[size_t(comp)].terms()) {
            bool found = false;
            for (size_t row = 0; row < dst.size(); ++row)
                if (dst[row].comp == comp && dst[row].m == t.m) {
                    out[row] = t.c;
                    found = true;
                    break;
                }
            if (!found) throw StructuralError("vector does not live in the stated degree");
        }
    return out;
}

namespace {

// matrix of Hom(F_i, N)_t -> Hom(F_{i+1}, N)_t, "compose with the differential"
FpMatrix hom_differential(const FreeResolution& F, const FiniteModuleBasis& N, int i, int t) {
    const PrimeField& field = F.ring->ambient()->field;
    const auto& d_src = F.degs[size_t(i)];
    const auto& d_dst = F.degs[size_t(i) + 1];
    std::vector<int> src_off(d_src.size() + 1, 0), dst_off(d_dst.size() + 1, 0);
    for (size_t l = 0; l < d_src.size(); ++l)
        src_off[l + 1] = src_off[l] + N.dim(t + d_src[l]);
    for (size_t m = 0; m < d_dst.size(); ++m)
        dst_off[m + 1] = dst_off[m] + N.dim(t + d_dst[m]);
    FpMatrix out(field, dst_off.back(), src_off.back());
    const auto& cols = F.diff[size_t(i) + 1];  // one column per generator of F_{i+1}
    for (size_t m = 0; m < d_dst.size(); ++m)
        for (size_t l = 0; l < d_src.size(); ++l) {
            const Poly& entry = cols[m][l];
            if (entry.is_zero()) continue;
            FpMatrix block = N.mult_matrix(entry, t + d_src[l]);
            for (int r = 0; r < block.rows(); ++r)
                for (int c = 0; c < block.cols(); ++c)
                    if (block.at(r, c)) out.at(dst_off[m] + r, src_off[l] + c) = block.at(r, c);
        }
    return out;
}

// matrix of (F_i (x) N)_t -> (F_{i-1} (x) N)_t
FpMatrix tensor_differential(const FreeResolution& F, const FiniteModuleBasis& N, int i, int t) {
    const PrimeField& field = F.ring->ambient()->field;
    const auto& d_src = F.degs[size_t(i)];
    const auto& d_dst = F.degs[size_t(i) - 1];
    std::vector<int> src_off(d_src.size() + 1, 0), dst_off(d_dst.size() + 1, 0);
    for (size_t m = 0; m < d_src.size(); ++m)
        src_off[m + 1] = src_off[m] + N.dim(t - d_src[m]);
    for (size_t l = 0; l < d_dst.size(); ++l)
        dst_off[l + 1] = dst_off[l] + N.dim(t - d_dst[l]);
    FpMatrix out(field, dst_off.back(), src_off.back());
    const auto& cols = F.diff[size_t(i)];
    for (size_t m = 0; m < d_src.size(); ++m)
        for (size_t l = 0; l < d_dst.size(); ++l) {
            const Poly& entry = cols[m][l];
            if (entry.is_zero()) continue;
            FpMatrix block = N.mult_matrix(entry, t - d_src[m]);
            for (int r = 0; r < block.rows(); ++r)
                for (int c = 0; c < block.cols(); ++c)
                    if (block.at(r, c)) out.at(dst_off[l] + r, src_off[m] + c) = block.at(r, c);
        }
    return out;
}

}  // namespace

int64_t ext_length_finite(const FreeResolution& F, const FiniteModuleBasis& N, int i) {
    if (i < 0 || i + 1 > F.cutoff)
        throw StructuralError("homological index " + std::to_string(i) +
                              " exceeds the resolution cutoff; resolve deeper");
    if (F.betti(i) == 0 || N.hi() < N.lo()) return 0;
    const auto& d_i = F.degs[size_t(i)];
    int dmax = *std::max_element(d_i.begin(), d_i.end());
    int dmin = *std::min_element(d_i.begin(), d_i.end());
    int t_lo = N.lo() - dmax, t_hi = N.hi() - dmin;
    int64_t total = 0;
    for (int t = t_lo; t <= t_hi; ++t) {
        int64_t dim_t = 0;
        for (int d : d_i) dim_t += N.dim(t + d);
        if (dim_t == 0) continue;
        int64_t r_i = hom_differential(F, N, i, t).rank();
        int64_t r_prev = 0;
        if (i >= 1) r_prev = hom_differential(F, N, i - 1, t).rank();
        total += dim_t - r_i - r_prev;
    }
    return total;
}

int64_t tor_length_finite(const FreeResolution& F, const FiniteModuleBasis& N, int i) {
    if (i < 0 || i + 1 > F.cutoff)
        throw StructuralError("homological index " + std::to_string(i) +
                              " exceeds the resolution cutoff; resolve deeper");
    if (F.betti(i) == 0 || N.hi() < N.lo()) return 0;
    const auto& d_i = F.degs[size_t(i)];
    int dmax = *std::max_element(d_i.begin(), d_i.end());
    int dmin = *std::min_element(d_i.begin(), d_i.end());
    int t_lo = N.lo() + dmin, t_hi = N.hi() + dmax;
    int64_t total = 0;
    for (int t = t_lo; t <= t_hi; ++t) {
        int64_t dim_t = 0;
        for (int d : d_i) dim_t += N.dim(t - d);
        if (dim_t == 0) continue;
        int64_t r_i = (i >= 1) ? tensor_differential(F, N, i, t).rank() : 0;
        int64_t r_next = tensor_differential(F, N, i + 1, t).rank();
        total += dim_t - r_i - r_next;
    }
    return total;
}

std::vector<int64_t> ext_lengths_upto(const FreeResolution& F, const FiniteModuleBasis& N,
                                      int i_max) {
    if (i_max + 1 > F.cutoff)
        throw StructuralError("table depth exceeds the resolution cutoff; resolve deeper");
    // rank_sum[i] = sum_t rank(Hom(F_i)_t -> Hom(F_{i+1})_t), dim_sum[i] = sum_t dim Hom(F_i)_t
    std::vector<int64_t> rank_sum(size_t(i_max) + 1, 0), dim_sum(size_t(i_max) + 1, 0);
    for (int i = 0; i <= i_max; ++i) {
        if (F.betti(i) == 0 || N.hi() < N.lo()) continue;
        const auto& d_i = F.degs[size_t(i)];
        int dmax = *std::max_element(d_i.begin(), d_i.end());
        int dmin = *std::min_element(d_i.begin(), d_i.end());
        for (int t = N.lo() - dmax; t <= N.hi() - dmin; ++t) {
            int64_t dim_t = 0;
            for (int d : d_i) dim_t += N.dim(t + d);
            if (dim_t == 0) continue;
            dim_sum[size_t(i)] += dim_t;
            rank_sum[size_t(i)] += hom_differential(F, N, i, t).rank();
        }
    }
    std::vector<int64_t> out;
    for (int i = 0; i <= i_max; ++i)
        out.push_back(dim_sum[size_t(i)] - rank_sum[size_t(i)] -
                      (i >= 1 ? rank_sum[size_t(i) - 1] : 0));
    return out;
}

std::vector<int64_t> tor_lengths_upto(const FreeResolution& F, const FiniteModuleBasis& N,
                                      int i_max) {
    if (i_max + 1 > F.cutoff)
        throw StructuralError("table depth exceeds the resolution cutoff; resolve deeper");
    // rank_sum[i] = sum_t rank((F_i x N)_t -> (F_{i-1} x N)_t) for i >= 1
    std::vector<int64_t> rank_sum(size_t(i_max) + 2, 0), dim_sum(size_t(i_max) + 1, 0);
    for (int i = 0; i <= i_max + 1; ++i) {
        if (i > F.cutoff || F.betti(i) == 0 || N.hi() < N.lo()) continue;
        const auto& d_i = F.degs[size_t(i)];
        int dmax = *std::max_element(d_i.begin(), d_i.end());
        int dmin = *std::min_element(d_i.begin(), d_i.end());
        for (int t = N.lo() + dmin; t <= N.hi() + dmax; ++t) {
            int64_t dim_t = 0;
            for (int d : d_i) dim_t += N.dim(t - d);
            if (dim_t == 0) continue;
            if (i <= i_max) dim_sum[size_t(i)] += dim_t;
            if (i >= 1) rank_sum[size_t(i)] += tensor_differential(F, N, i, t).rank();
        }
    }
    std::vector<int64_t> out;
    for (int i = 0; i <= i_max; ++i)
        out.push_back(dim_sum[size_t(i)] - rank_sum[size_t(i)] - rank_sum[size_t(i) + 1]);
    return out;
}

ModulePresentation ext_module(const FreeResolution& F, const ModulePresentation& N, int i) {
    const CIRingPtr& A = F.ring;
    const RingPtr& P = A->ambient();
    if (i < 0 || i + 1 > F.cutoff)
        throw StructuralError("homological index exceeds the resolution cutoff");
    const int b_i = F.betti(i);
    const int g_n = N.rank();
    if (b_i == 0 || g_n == 0) return ModulePresentation::zero_module(A);

    auto big_rank = [&](int stage) { return F.betti(stage) * g_n; };
    auto shifts_at = [&](int stage) {
        std::vector<int> s;
        for (int l = 0; l < F.betti(stage); ++l)
            for (int t = 0; t < g_n; ++t)
                s.push_back(N.gen_degrees()[size_t(t)] - F.degs[size_t(stage)][size_t(l)]);
        return s;
    };
    auto slot_relations = [&](int stage) {
        std::vector<VecPoly> rels;
        for (int l = 0; l < F.betti(stage); ++l)
            for (const VecPoly& r : N.relations()) {
                VecPoly v = vec_zero(P, big_rank(stage));
                for (int t = 0; t < g_n; ++t) v[size_t(l * g_n + t)] = r[size_t(t)];
                rels.push_back(std::move(v));
            }
        return rels;
    };
    // columns of the induced map Hom(F_i, N) -> Hom(F_{i+1}, N)
    auto hom_columns = [&](int stage) {  // uses diff[stage+1]
        std::vector<VecPoly> cols;
        const auto& d = F.diff[size_t(stage) + 1];
        for (int l = 0; l < F.betti(stage); ++l)
            for (int t = 0; t < g_n; ++t) {
                VecPoly v = vec_zero(P, big_rank(stage + 1));
                for (int m = 0; m < F.betti(stage + 1); ++m)
                    v[size_t(m * g_n + t)] = d[size_t(m)][size_t(l)];
                cols.push_back(std::move(v));
            }
        return cols;
    };

    std::vector<VecPoly> aux = slot_relations(i + 1);
    {
        auto fc = A->relation_columns(big_rank(i + 1));
        aux.insert(aux.end(), fc.begin(), fc.end());
    }
    std::vector<VecPoly> U;
    if (F.betti(i + 1) == 0) {
        U = standard_basis(P, big_rank(i));  // the map is zero, kernel is everything
    } else {
        auto cols = hom_columns(i);
        std::vector<VecPoly> syz = syzygies_mod(P, big_rank(i + 1), cols, aux);
        for (VecPoly& s : syz) {
            VecPoly v(s.begin(), s.begin() + long(big_rank(i)));
            if (!vec_is_zero(v)) U.push_back(std::move(v));
        }
    }
    std::vector<VecPoly> W = slot_relations(i);
    if (i >= 1 && F.betti(i - 1) > 0) {
        auto prev_cols = hom_columns(i - 1);
        W.insert(W.end(), prev_cols.begin(), prev_cols.end());
    }
    return present_subquotient(A, big_rank(i), shifts_at(i), U, W);
}

}  // namespace cicalc
