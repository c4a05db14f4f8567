#include "cicalc/blowup.hpp"

#include <map>
#include <random>
#include <sstream>

namespace cicalc {

namespace {

// lift a polynomial over P into a larger ring whose first variables are P's
Poly lift_poly(const RingPtr& big, const Poly& g) {
    std::vector<Term> ts;
    for (const Term& t : g.terms()) ts.push_back(t);
    return Poly::from_terms(big, ts);
}

VecPoly lift_vec(const RingPtr& big, const VecPoly& v) {
    VecPoly out;
    out.reserve(v.size());
    for (const Poly& g : v) out.push_back(lift_poly(big, g));
    return out;
}

// drop the final (u) variable from a u-free polynomial
Poly drop_last_var(const RingPtr& small, const Poly& g, int u_idx) {
    std::vector<Term> ts;
    for (const Term& t : g.terms()) {
        if (t.m.e[size_t(u_idx)] != 0) throw StructuralError("vector still involves u");
        ts.push_back(t);
    }
    return Poly::from_terms(small, ts);
}

}  // namespace

GradedPresentation::GradedPresentation(const ModulePresentation& M, IdealPtr I)
    : ring_(M.ring()), ideal_(std::move(I)) {
    std::vector<std::vector<VecPoly>> levels(1);  // N_0 = the whole module: its generators
    levels[0] = standard_basis(ring_->ambient(), M.rank());
    std::vector<VecPoly> target_rel = M.relations();
    s_ = int(ideal_->gens().size());
    std::vector<VecPoly> rees_gens;
    std::vector<int> lvl;
    for (const VecPoly& v : levels[0]) {
        rees_gens.push_back(v);
        lvl.push_back(0);
    }
    std::vector<int> shifts = M.gen_degrees();
    (void)shifts;
    build(rees_gens, lvl, M.rank(), target_rel);
}

GradedPresentation::GradedPresentation(CIRingPtr A, IdealPtr I, int free_rank,
                                       std::vector<int> free_shifts,
                                       std::vector<std::vector<VecPoly>> level_gens)
    : ring_(std::move(A)), ideal_(std::move(I)) {
    (void)free_shifts;
    s_ = int(ideal_->gens().size());
    std::vector<VecPoly> rees_gens;
    std::vector<int> lvl;
    for (size_t n = 0; n < level_gens.size(); ++n)
        for (const VecPoly& v : level_gens[n]) {
            rees_gens.push_back(v);
            lvl.push_back(int(n));
        }
    build(rees_gens, lvl, free_rank, {});
}

void GradedPresentation::build(const std::vector<VecPoly>& rees_generators,
                               const std::vector<int>& levels, int free_rank,
                               const std::vector<VecPoly>& target_relations) {
    if (!ideal_->is_m_primary())
        throw StructuralError("associated graded pieces are finite only for primary ideals");
    const RingPtr& P = ring_->ambient();
    const int n_x = P->nvars();
    const auto& gens = ideal_->gens();
    if (n_x + s_ + 1 > kMaxVars)
        throw StructuralError("too many variables for the Rees presentation");
    // P[y_1..y_s, u]
    std::vector<std::string> names = P->var_names;
    std::vector<int> weights = P->weights;
    for (int j = 0; j < s_; ++j) {
        names.push_back("y" + std::to_string(j + 1));
        weights.push_back(gens[size_t(j)].degree() + 1);
    }
    names.push_back("u");
    weights.push_back(1);
    RingPtr PYU = Ring::make(P->field.p(), names, weights);
    const int u_idx = n_x + s_;
    // P[y]
    std::vector<std::string> names_y(names.begin(), names.end() - 1);
    std::vector<int> weights_y(weights.begin(), weights.end() - 1);
    PY_ = Ring::make(P->field.p(), names_y, weights_y);

    Poly u = Poly::variable(PYU, u_idx);
    // generators v_l u^{level_l}
    std::vector<VecPoly> w;
    for (size_t l = 0; l < rees_generators.size(); ++l) {
        VecPoly v = lift_vec(PYU, rees_generators[l]);
        Poly upow = Poly::constant(PYU, 1);
        for (int k = 0; k < levels[l]; ++k) upow = upow * u;
        for (Poly& entry : v) entry = entry * upow;
        w.push_back(std::move(v));
    }
    // target relations: graph columns (y_j - g_j u) e_beta, module relations, f columns
    std::vector<VecPoly> aux;
    for (int j = 0; j < s_; ++j) {
        Poly graph = Poly::variable(PYU, n_x + j) - lift_poly(PYU, gens[size_t(j)]) * u;
        for (int beta = 0; beta < free_rank; ++beta) {
            VecPoly col = vec_zero(PYU, free_rank);
            col[size_t(beta)] = graph;
            aux.push_back(std::move(col));
        }
    }
    for (const VecPoly& r : target_relations) aux.push_back(lift_vec(PYU, r));
    for (const Poly& f : ring_->f())
        for (int beta = 0; beta < free_rank; ++beta) {
            VecPoly col = vec_zero(PYU, free_rank);
            col[size_t(beta)] = lift_poly(PYU, f);
            aux.push_back(std::move(col));
        }
    ModOrder elim;
    elim.var_block_split = u_idx;
    std::vector<VecPoly> syz = syzygies_mod(PYU, free_rank, w, aux, elim);
    // keep the u-free relations
    relations_.clear();
    gen_levels_ = levels;
    const int L = int(rees_generators.size());
    for (const VecPoly& s : syz) {
        bool ufree = true;
        for (const Poly& g : s)
            for (const Term& t : g.terms())
                if (t.m.e[size_t(u_idx)]) ufree = false;
        if (!ufree) continue;
        VecPoly over_py;
        for (const Poly& g : s) over_py.push_back(drop_last_var(PY_, g, u_idx));
        if (!vec_is_zero(over_py)) relations_.push_back(std::move(over_py));
    }
    // quotient by I (and by the defining relations of A)
    for (const Poly& g : gens)
        for (int l = 0; l < L; ++l) {
            VecPoly col = vec_zero(PY_, L);
            col[size_t(l)] = lift_poly(PY_, g);
            relations_.push_back(std::move(col));
        }
    for (const Poly& f : ring_->f())
        for (int l = 0; l < L; ++l) {
            VecPoly col = vec_zero(PY_, L);
            col[size_t(l)] = lift_poly(PY_, f);
            relations_.push_back(std::move(col));
        }
    gb_ = std::make_unique<GroebnerBasis>(PY_, L, ModOrder{});
    gb_->add(relations_);
    leads_.assign(gen_levels_.size(), {});
    for (const MPoly& g : gb_->elements())
        if (!g.empty()) leads_[size_t(g[0].comp)].push_back(g[0].m);
}

int GradedPresentation::min_level() const {
    int m = gen_levels_.empty() ? 0 : gen_levels_[0];
    for (int l : gen_levels_) m = std::min(m, l);
    return m;
}

std::vector<BasisMono> GradedPresentation::piece(int n) const {
    if (n < min_level()) return {};
    if (pieces_.empty()) pieces_base_ = min_level();
    int idx = n - pieces_base_;
    while (int(pieces_.size()) <= idx) {
        int level = pieces_base_ + int(pieces_.size());
        std::vector<BasisMono> basis;
        const int n_x = ring_->ambient()->nvars();
        const auto& leads = leads_;
        for (size_t l = 0; l < gen_levels_.size(); ++l) {
            int ydeg = level - gen_levels_[l];
            if (ydeg < 0) continue;
            // all y-exponent patterns of total ydeg
            std::vector<Expvec> ypatterns;
            std::function<void(int, int, Expvec&)> rec = [&](int var, int left, Expvec& cur) {
                if (var == s_ - 1) {
                    cur.e[size_t(n_x + var)] = uint16_t(left);
                    ypatterns.push_back(cur);
                    cur.e[size_t(n_x + var)] = 0;
                    return;
                }
                for (int e = 0; e <= left; ++e) {
                    cur.e[size_t(n_x + var)] = uint16_t(e);
                    rec(var + 1, left - e, cur);
                    cur.e[size_t(n_x + var)] = 0;
                }
            };
            if (s_ == 0) {
                if (ydeg == 0) ypatterns.push_back(Expvec{});
            } else {
                Expvec cur;
                rec(0, ydeg, cur);
            }
            for (const Expvec& b : ypatterns) {
                // x-part monomial ideal for this block
                std::vector<Expvec> xideal;
                for (const Expvec& lead : leads[l]) {
                    bool yfits = true;
                    for (int j = 0; j < s_; ++j)
                        if (lead.e[size_t(n_x + j)] > b.e[size_t(n_x + j)]) yfits = false;
                    if (!yfits) continue;
                    Expvec xpart;
                    for (int v = 0; v < n_x; ++v) xpart.e[size_t(v)] = lead.e[size_t(v)];
                    xideal.push_back(xpart);
                }
                // box bound from pure powers
                std::vector<int> box(size_t(n_x), -1);
                for (const Expvec& g : xideal) {
                    int nz = -1;
                    bool pure = true;
                    for (int v = 0; v < n_x; ++v)
                        if (g.e[size_t(v)]) {
                            if (nz >= 0) pure = false;
                            nz = v;
                        }
                    if (pure && nz >= 0)
                        box[size_t(nz)] = box[size_t(nz)] < 0
                                              ? g.e[size_t(nz)]
                                              : std::min<int>(box[size_t(nz)], g.e[size_t(nz)]);
                    if (pure && nz < 0) box.assign(size_t(n_x), 0);  // contains 1
                }
                for (int v = 0; v < n_x; ++v)
                    if (box[size_t(v)] < 0)
                        throw InconclusiveCohomology(
                            "graded piece is not finite dimensional over k");
                // enumerate the box and filter
                std::function<void(int, Expvec&)> walk = [&](int var, Expvec& cur) {
                    if (var == n_x) {
                        Expvec full = b;
                        for (int v = 0; v < n_x; ++v) full.e[size_t(v)] = cur.e[size_t(v)];
                        bool standard = true;
                        for (const Expvec& g : xideal) {
                            Expvec xonly = cur;
                            if (Expvec::divides(g, xonly)) {
                                standard = false;
                                break;
                            }
                        }
                        if (standard) basis.push_back({int(l), full});
                        return;
                    }
                    for (int e = 0; e < box[size_t(var)]; ++e) {
                        cur.e[size_t(var)] = uint16_t(e);
                        walk(var + 1, cur);
                    }
                    cur.e[size_t(var)] = 0;
                };
                Expvec cur;
                walk(0, cur);
            }
        }
        pieces_.push_back(std::move(basis));
    }
    return pieces_[size_t(idx)];
}

FpMatrix GradedPresentation::mult_y_monomial(const std::vector<int>& exponents, int n) const {
    const PrimeField& F = PY_->field;
    uint64_t key = 0;
    for (int e : exponents) key = key * 257 + uint64_t(e + 1);
    auto it = mult_cache_.find({key, n});
    if (it != mult_cache_.end()) return it->second;
    int total = 0;
    for (int e : exponents) total += e;
    const auto& src = piece(n);
    const auto& dst = piece(n + total);
    FpMatrix out(F, int(dst.size()), int(src.size()));
    if (src.empty() || dst.empty()) return out;
    const int n_x = ring_->ambient()->nvars();
    Expvec mono;
    for (int j = 0; j < s_; ++j) mono.e[size_t(n_x + j)] = uint16_t(exponents[size_t(j)]);
    for (size_t col = 0; col < src.size(); ++col) {
        VecPoly v = vec_zero(PY_, int(gen_levels_.size()));
        v[size_t(src[col].comp)] = Poly::monomial(PY_, Expvec::mul(src[col].m, mono), 1);
        VecPoly nf = gb_->normal_form(v);
        for (size_t comp = 0; comp < gen_levels_.size(); ++comp)
            for (const Term& t : nf[comp].terms()) {
                bool found = false;
                for (size_t row = 0; row < dst.size(); ++row)
                    if (dst[row].comp == int(comp) && dst[row].m == t.m) {
                        out.at(int(row), int(col)) = t.c;
                        found = true;
                        break;
                    }
                if (!found)
                    throw StructuralError("normal form escaped the graded piece basis");
            }
    }
    mult_cache_[{key, n}] = out;
    return out;
}

FpMatrix GradedPresentation::mult_y(int a, int n) const {
    std::vector<int> exps(size_t(s_), 0);
    exps[size_t(a)] = 1;
    return mult_y_monomial(exps, n);
}

bool GradedPresentation::base_is_field() const {
    return ideal_->colength(1) == 1;
}

ModulePresentation GradedPresentation::collapse_to_y_ring() const {
    if (!base_is_field())
        throw StructuralError("collapse to the y-ring requires residue-field base");
    const int n_x = ring_->ambient()->nvars();
    // check x-variables act as zero
    for (int v = 0; v < n_x; ++v)
        for (size_t l = 0; l < gen_levels_.size(); ++l) {
            VecPoly probe = vec_zero(PY_, int(gen_levels_.size()));
            probe[l] = Poly::variable(PY_, v);
            if (!gb_->contains(probe))
                throw StructuralError("ambient variable acts nontrivially on the graded module");
        }
    std::vector<std::string> names;
    for (int j = 0; j < s_; ++j) names.push_back(PY_->var_names[size_t(n_x + j)]);
    RingPtr Y = Ring::make(PY_->field.p(), names, std::vector<int>(size_t(s_), 1));
    CIRingPtr Yring = CIRing::make(Y, {}, /*allow_dim_zero=*/false);
    std::vector<VecPoly> rels;
    for (const VecPoly& r : relations_) {
        VecPoly out;
        bool keep = true;
        for (const Poly& g : r) {
            std::vector<Term> ts;
            for (const Term& t : g.terms()) {
                bool xfree = true;
                for (int v = 0; v < n_x; ++v)
                    if (t.m.e[size_t(v)]) xfree = false;
                if (!xfree) continue;
                Expvec m;
                for (int j = 0; j < s_; ++j) m.e[size_t(j)] = t.m.e[size_t(n_x + j)];
                ts.push_back({m, t.c});
            }
            out.push_back(Poly::from_terms(Y, ts));
        }
        if (keep && !vec_is_zero(out)) rels.push_back(std::move(out));
    }
    return ModulePresentation(Yring, gen_levels_, rels);
}

// ---------------------------------------------------------------------------
// Cech cohomology with stabilized directed limits
// ---------------------------------------------------------------------------

namespace {

struct LocalizedRep {
    int dim = 0;
    std::vector<int> rep_coords;  // unit-vector representatives (non-pivot columns)
    FpMatrix proj;                // piece coords -> quotient coords
    int piece_degree = 0;
};

// projection of F_p^d onto the quotient by the row space of ker_rows; the
// chosen representatives are the unit vectors at the non-pivot coordinates
LocalizedRep quotient_rep(const PrimeField& F, const std::vector<std::vector<uint32_t>>& kernel,
                          int d) {
    LocalizedRep rep;
    if (kernel.empty()) {
        rep.dim = d;
        rep.proj = FpMatrix(F, d, d);
        for (int i = 0; i < d; ++i) {
            rep.proj.at(i, i) = 1;
            rep.rep_coords.push_back(i);
        }
        return rep;
    }
    // reduced row echelon of the kernel rows
    std::vector<uint32_t> a(kernel.size() * size_t(d), 0);
    const int krows = int(kernel.size());
    for (int r = 0; r < krows; ++r)
        for (int c = 0; c < d; ++c) a[size_t(r) * size_t(d) + size_t(c)] = kernel[size_t(r)][size_t(c)];
    int rr = 0;
    std::vector<int> pivots;
    for (int c = 0; c < d && rr < krows; ++c) {
        int pr = -1;
        for (int i = rr; i < krows; ++i)
            if (a[size_t(i) * size_t(d) + size_t(c)]) { pr = i; break; }
        if (pr < 0) continue;
        for (int j = 0; j < d; ++j)
            std::swap(a[size_t(pr) * size_t(d) + size_t(j)], a[size_t(rr) * size_t(d) + size_t(j)]);
        uint32_t inv = F.inv(a[size_t(rr) * size_t(d) + size_t(c)]);
        for (int j = 0; j < d; ++j) {
            uint32_t& x = a[size_t(rr) * size_t(d) + size_t(j)];
            x = F.mul(x, inv);
        }
        for (int i = 0; i < krows; ++i) {
            if (i == rr) continue;
            uint32_t fac = a[size_t(i) * size_t(d) + size_t(c)];
            if (!fac) continue;
            for (int j = 0; j < d; ++j) {
                uint32_t& x = a[size_t(i) * size_t(d) + size_t(j)];
                x = F.sub(x, F.mul(fac, a[size_t(rr) * size_t(d) + size_t(j)]));
            }
        }
        pivots.push_back(c);
        ++rr;
    }
    std::vector<bool> is_pivot(size_t(d), false);
    for (int p : pivots) is_pivot[size_t(p)] = true;
    rep.dim = d - int(pivots.size());
    rep.proj = FpMatrix(F, rep.dim, d);
    for (int c = 0; c < d; ++c)
        if (!is_pivot[size_t(c)]) rep.rep_coords.push_back(c);
    // (v mod ker)[q] = v[c_q] - sum_r v[pivot_r] . row_r[c_q]
    for (int q = 0; q < rep.dim; ++q) {
        int cq = rep.rep_coords[size_t(q)];
        rep.proj.at(q, cq) = 1;
        for (size_t r0 = 0; r0 < pivots.size(); ++r0)
            rep.proj.at(q, pivots[r0]) = F.neg(a[r0 * size_t(d) + size_t(cq)]);
    }
    return rep;
}

}  // namespace

RegReport local_cohomology_ends(const GradedPresentation& G, const CechOptions& opts) {
    RegReport rep;
    rep.margin = opts.margin;
    const int s = G.y_count();
    const PrimeField& F = G.presentation_ring()->field;
    // subsets of {0..s-1} grouped by size
    std::vector<std::vector<int>> subsets;  // as bitmasks per size handled below
    std::vector<int> all_masks;
    for (int m = 1; m < (1 << s); ++m) all_masks.push_back(m);

    int max_lvl = 0;
    for (int l : G.levels()) max_lvl = std::max(max_lvl, l);
    rep.scan_lo = G.min_level() - s - 2;
    rep.scan_hi = max_lvl + s + opts.margin + 2;
    const int hard_cap = rep.scan_hi + 60;

    auto mask_size = [](int m) {
        int c = 0;
        while (m) {
            c += m & 1;
            m >>= 1;
        }
        return c;
    };

    // H^i dims at one degree
    auto cohomology_at = [&](int n, std::vector<int64_t>& dims_out) {
        // common stage K: stabilization of quotient dims for every subset
        int K = 0;
        std::map<int, LocalizedRep> reps;
        auto localized_dim = [&](int mask, int k) {
            int w = mask_size(mask);
            int pdeg = n + k * w;
            int d = int(G.piece(pdeg).size());
            if (d == 0) return std::pair<int, LocalizedRep>(0, LocalizedRep{});
            // saturate the kernel of multiplication by y_S
            std::vector<int> exps(size_t(s), 0);
            for (int j = 0; j < s; ++j)
                if (mask & (1 << j)) exps[size_t(j)] = 1;
            FpMatrix comp(F, d, d);
            for (int i = 0; i < d; ++i) comp.at(i, i) = 1;
            int prev_null = -1;
            int stable = 0;
            int at = pdeg;
            FpMatrix acc = comp;
            FpMatrix step;
            std::vector<std::vector<uint32_t>> ker;
            for (int itr = 0; itr < opts.limit_budget; ++itr) {
                FpMatrix mult = G.mult_y_monomial(exps, at);
                acc = mult.multiplied(acc);
                at += w;
                int nullity = acc.nullity();
                if (nullity == prev_null) {
                    ++stable;
                    if (stable >= 3) {
                        ker = acc.kernel_basis();
                        break;
                    }
                } else {
                    stable = 0;
                    prev_null = nullity;
                }
            }
            if (stable < 3)
                throw InconclusiveCohomology("directed limit kernel did not stabilize");
            LocalizedRep r = quotient_rep(F, ker, d);
            r.piece_degree = pdeg;
            return std::pair<int, LocalizedRep>(r.dim, r);
        };
        // find K with stable localized dims for all masks
        std::map<int, int> last_dim;
        int stable_run = 0;
        std::map<int, LocalizedRep> at_k;
        for (int k = 0;; ++k) {
            if (k > opts.limit_budget)
                throw InconclusiveCohomology("localization stage did not stabilize");
            std::map<int, LocalizedRep> cur;
            bool same = true;
            for (int m : all_masks) {
                auto pr = localized_dim(m, k);
                cur[m] = pr.second;
                if (!last_dim.count(m) || last_dim[m] != pr.first) same = false;
                last_dim[m] = pr.first;
            }
            if (same)
                ++stable_run;
            else
                stable_run = 0;
            at_k = std::move(cur);
            K = k;
            if (stable_run >= 3) break;
        }
        reps = std::move(at_k);
        // assemble the complex: level 0 is the piece itself
        std::vector<std::vector<int>> masks_by_size(size_t(s) + 1);
        for (int m : all_masks) masks_by_size[size_t(mask_size(m))].push_back(m);
        masks_by_size[0].push_back(0);
        LocalizedRep triv;
        triv.dim = int(G.piece(n).size());
        triv.proj = FpMatrix(F, triv.dim, triv.dim);
        for (int i = 0; i < triv.dim; ++i) {
            triv.proj.at(i, i) = 1;
            triv.rep_coords.push_back(i);
        }
        triv.piece_degree = n;
        reps[0] = triv;
        // differential i: sum over masks of size i -> size i+1
        auto level_dim = [&](int i) {
            int64_t total = 0;
            for (int m : masks_by_size[size_t(i)]) total += reps[m].dim;
            return total;
        };
        std::vector<FpMatrix> diffs;
        for (int i = 0; i <= s; ++i) {
            int64_t rows = (i + 1 <= s) ? level_dim(i + 1) : 0;
            int64_t cols = level_dim(i);
            FpMatrix D(F, int(rows), int(cols));
            if (rows && cols) {
                // offsets
                std::map<int, int> coff, roff;
                {
                    int off = 0;
                    for (int m : masks_by_size[size_t(i)]) {
                        coff[m] = off;
                        off += reps[m].dim;
                    }
                    off = 0;
                    for (int m : masks_by_size[size_t(i) + 1]) {
                        roff[m] = off;
                        off += reps[m].dim;
                    }
                }
                for (int tgt : masks_by_size[size_t(i) + 1]) {
                    // positions of bits in tgt, ascending
                    std::vector<int> bits;
                    for (int j = 0; j < s; ++j)
                        if (tgt & (1 << j)) bits.push_back(j);
                    for (size_t pos = 0; pos < bits.size(); ++pos) {
                        int b = bits[pos];
                        int src = tgt & ~(1 << b);
                        const LocalizedRep& rs = reps[src];
                        const LocalizedRep& rt = reps[tgt];
                        if (rs.dim == 0 || rt.dim == 0) continue;
                        // multiplier y_b^K plus degree alignment:
                        // source reps live at n + K|src|, target at n + K|tgt|
                        std::vector<int> exps(size_t(s), 0);
                        exps[size_t(b)] = K;
                        FpMatrix mult = G.mult_y_monomial(exps, rs.piece_degree);
                        uint32_t sign = (pos % 2 == 0) ? 1 : F.neg(1);
                        // columns: image of each representative
                        for (int q = 0; q < rs.dim; ++q) {
                            int coord = rs.rep_coords[size_t(q)];
                            // unit vector at coord, multiplied
                            std::vector<uint32_t> img(size_t(mult.rows()), 0);
                            for (int r = 0; r < mult.rows(); ++r) img[size_t(r)] = mult.at(r, coord);
                            // project into the target quotient
                            for (int r = 0; r < rt.dim; ++r) {
                                uint32_t acc = 0;
                                for (int cidx = 0; cidx < rt.proj.cols(); ++cidx)
                                    if (img[size_t(cidx)])
                                        acc = F.add(acc, F.mul(rt.proj.at(r, cidx),
                                                               img[size_t(cidx)]));
                                if (acc)
                                    D.at(roff[tgt] + r, coff[src] + q) =
                                        F.mul(sign, acc);
                            }
                        }
                    }
                }
            }
            diffs.push_back(std::move(D));
        }
        dims_out.assign(size_t(s) + 1, 0);
        for (int i = 0; i <= s; ++i) {
            int64_t dim_i = level_dim(i);
            int64_t rank_i = diffs[size_t(i)].rank();
            int64_t rank_prev = (i >= 1) ? diffs[size_t(i) - 1].rank() : 0;
            dims_out[size_t(i)] = dim_i - rank_i - rank_prev;
        }
    };

    // scan degrees
    std::vector<std::vector<int64_t>> table;  // [n - scan_lo][i]
    int n = rep.scan_lo;
    std::vector<int> last_nonzero(size_t(s) + 1, rep.scan_lo - 1);
    while (true) {
        std::vector<int64_t> dims;
        cohomology_at(n, dims);
        table.push_back(dims);
        for (int i = 0; i <= s; ++i)
            if (dims[size_t(i)] != 0) last_nonzero[size_t(i)] = n;
        bool all_margined = true;
        for (int i = 0; i <= s; ++i)
            if (n - last_nonzero[size_t(i)] < opts.margin) all_margined = false;
        if (n >= rep.scan_hi && all_margined) break;
        if (n > hard_cap)
            throw InconclusiveCohomology("cohomology did not vanish within the scan budget");
        ++n;
    }
    rep.scan_hi = n;
    rep.piece_dims = std::move(table);
    rep.reg = Deg::minus_infinity();
    for (int i = 0; i <= s; ++i) {
        Deg end = last_nonzero[size_t(i)] >= rep.scan_lo ? Deg::of(last_nonzero[size_t(i)])
                                                         : Deg::minus_infinity();
        rep.ends.push_back(end);
        if (!end.neg_inf) rep.reg = Deg::max(rep.reg, Deg::of(end.value + i));
    }
    // independent betti-number path when the base is the residue field
    if (opts.cross_check_betti && G.base_is_field()) {
        ModulePresentation Ymod = G.collapse_to_y_ring();
        ModulePresentation Ymin = Ymod.minimalized();
        rep.betti_path_used = true;
        if (Ymin.rank() == 0) {
            rep.reg_betti = Deg::minus_infinity();
        } else {
            FreeResolution res = minimal_resolution(Ymin, G.y_count() + 1);
            Deg r = Deg::minus_infinity();
            for (int i = 0; i <= res.cutoff; ++i)
                for (int d : res.degs[size_t(i)]) r = Deg::max(r, Deg::of(d - i));
            rep.reg_betti = r;
        }
        if (!(rep.reg_betti == rep.reg))
            throw StructuralError("regularity mismatch between the Cech and betti paths");
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Ratliff-Rush closures
// ---------------------------------------------------------------------------

RatliffRushChain ratliff_rush(const ModulePresentation& M, const IdealData& I, int n_max) {
    const CIRingPtr& A = M.ring();
    const RingPtr& P = A->ambient();
    RatliffRushChain out;
    out.n_max = n_max;
    auto submodule_of_power = [&](int n) {
        std::vector<VecPoly> gens;
        for (const Poly& g : I.power(n))
            for (const VecPoly& e : standard_basis(P, M.rank())) gens.push_back(vec_scale(e, g));
        auto rel = M.full_relations();
        gens.insert(gens.end(), rel.begin(), rel.end());
        return gens;
    };
    for (int n = 1; n <= n_max; ++n) {
        std::vector<VecPoly> current = submodule_of_power(n);
        int k = 0;
        for (;;) {
            ++k;
            if (k > 30) throw StructuralError("colon chain failed to stabilize");
            std::vector<VecPoly> next =
                colon_ideal(P, M.rank(), submodule_of_power(n + k), I.power(k));
            auto rel = M.full_relations();
            next.insert(next.end(), rel.begin(), rel.end());
            if (submodules_equal(P, M.rank(), current, next)) break;
            current = std::move(next);
        }
        out.stabilization_steps.push_back(k);
        out.closures.push_back(current);
        // defect length l(closure / I^n M)
        ModulePresentation mod_power = M.quotient_by_ideal_power(I, n);
        std::vector<VecPoly> cl_rels = M.relations();
        cl_rels.insert(cl_rels.end(), current.begin(), current.end());
        ModulePresentation mod_closure(A, M.gen_degrees(), cl_rels);
        out.defect.push_back(mod_power.length() - mod_closure.length());
    }
    out.end_h0 = Deg::minus_infinity();
    for (int n = 1; n <= n_max; ++n)
        if (out.defect[size_t(n) - 1] != 0) out.end_h0 = Deg::of(n - 1);
    out.window_limited = (n_max >= 1 && out.defect[size_t(n_max) - 1] != 0);
    return out;
}

// ---------------------------------------------------------------------------
// superficial elements
// ---------------------------------------------------------------------------

SuperficialSearch find_superficial(const IdealData& I,
                                   const std::vector<const ModulePresentation*>& modules,
                                   int n_window, uint64_t seed, int retry_budget) {
    const CIRingPtr& A = I.ring();
    const RingPtr& P = A->ambient();
    SuperficialSearch out;
    std::mt19937_64 rng(seed);
    // spanning sets of the graded pieces I_e for candidate degrees e
    int min_deg = INT32_MAX, max_deg = 0;
    for (const Poly& g : I.gens()) {
        min_deg = std::min(min_deg, g.degree());
        max_deg = std::max(max_deg, g.degree());
    }
    auto spanning = [&](int e) {
        std::vector<Poly> span;
        for (const Poly& g : I.gens()) {
            int extra = e - g.degree();
            if (extra < 0) continue;
            // all monomials of weighted degree extra
            std::function<void(int, int, Expvec&)> rec = [&](int var, int left, Expvec& cur) {
                if (var == P->nvars()) {
                    if (left == 0) {
                        Poly cand = A->nf(g * Poly::monomial(P, cur, 1));
                        if (!cand.is_zero()) span.push_back(cand);
                    }
                    return;
                }
                int w = P->weights[size_t(var)];
                for (int x = 0; x * w <= left; ++x) {
                    cur.e[size_t(var)] = uint16_t(x);
                    rec(var + 1, left - x * w, cur);
                }
                cur.e[size_t(var)] = 0;
            };
            Expvec cur;
            rec(0, extra, cur);
        }
        return span;
    };
    auto check = [&](const Poly& x) -> std::pair<bool, std::string> {
        for (size_t mi = 0; mi < modules.size(); ++mi) {
            const ModulePresentation& M = *modules[mi];
            for (int n = 1; n <= n_window; ++n) {
                std::vector<VecPoly> target;
                for (const Poly& g : I.power(n + 1))
                    for (const VecPoly& e : standard_basis(P, M.rank()))
                        target.push_back(vec_scale(e, g));
                auto rel = M.full_relations();
                target.insert(target.end(), rel.begin(), rel.end());
                std::vector<VecPoly> col =
                    colon_element(P, M.rank(), target, x, standard_basis(P, M.rank()));
                col.insert(col.end(), rel.begin(), rel.end());
                std::vector<VecPoly> expect;
                for (const Poly& g : I.power(n))
                    for (const VecPoly& e : standard_basis(P, M.rank()))
                        expect.push_back(vec_scale(e, g));
                expect.insert(expect.end(), rel.begin(), rel.end());
                if (!submodules_equal(P, M.rank(), col, expect)) {
                    std::ostringstream os;
                    os << "module " << mi << " fails at n=" << n;
                    return {false, os.str()};
                }
            }
        }
        return {true, "all colon checks pass"};
    };
    for (int e = min_deg; e <= max_deg + 1; ++e) {
        std::vector<Poly> span = spanning(e);
        if (span.empty()) continue;
        int per_degree = std::max(1, retry_budget / (max_deg + 2 - min_deg));
        for (int attempt = 0; attempt < per_degree; ++attempt) {
            Poly x = Poly::zero(P);
            for (const Poly& b : span) {
                uint32_t coeff = uint32_t(rng() % A->p());
                if (coeff) x = x + b.scaled(coeff);
            }
            x = A->nf(x);
            ++out.attempts;
            if (x.is_zero() || !x.is_homogeneous()) continue;
            auto [ok, note] = check(x);
            std::ostringstream os;
            os << "degree " << e << " candidate " << x.str() << ": " << note;
            out.transcript.push_back(os.str());
            if (ok) {
                out.found = true;
                out.element = x;
                return out;
            }
        }
    }
    throw GenericityFailure("no superficial element found after " +
                            std::to_string(out.attempts) + " draws (seed " +
                            std::to_string(seed) + ")");
}

// ---------------------------------------------------------------------------
// regularity sweep over syzygies
// ---------------------------------------------------------------------------

SweepReport reg_syzygy_sweep(const ModulePresentation& M, const IdealData& I, int i_max,
                             const CechOptions& opts) {
    SweepReport rep;
    FreeResolution res = minimal_resolution(M, i_max + 1);
    IdealPtr iptr = std::make_shared<IdealData>(I.ring(), I.gens());
    for (int i = 0; i <= i_max; ++i) {
        ModulePresentation s = res.syzygy_module(i).minimalized();
        if (s.rank() == 0) {
            rep.reg_values.push_back(Deg::minus_infinity());
            continue;
        }
        GradedPresentation G(s, iptr);
        RegReport rr = local_cohomology_ends(G, opts);
        rep.reg_values.push_back(rr.reg);
        for (const std::string& f : rr.flags) rep.flags.push_back(f);
    }
    Deg max_all = Deg::minus_infinity(), max_head = Deg::minus_infinity();
    for (size_t i = 0; i < rep.reg_values.size(); ++i) {
        max_all = Deg::max(max_all, rep.reg_values[i]);
        if (i <= 2) max_head = Deg::max(max_head, rep.reg_values[i]);
    }
    rep.bounded_verdict = (max_all == max_head);
    // which hypotheses hold
    PsiReport psi = r_invariants(M, *iptr);
    rep.hypothesis_r_minus_inf = psi.r.neg_inf && psi.tails_ok();
    VarietyIdeal vm = support_variety(M);
    IdealVarietyFamily fam = stable_ideal_variety(*iptr, 4);
    auto meet = ideal_sum(vm.S, vm.gens, fam.stable.gens);
    rep.hypothesis_dim_stable_le_1 =
        (fam.stable.dim <= 1) || (ideal_quotient_dim(vm.S, meet) <= 1);
    VarietyIdeal tot = total_ideal_variety(*iptr, 4);
    auto meet_tot = ideal_sum(vm.S, vm.gens, tot.gens);
    rep.hypothesis_total_meets_origin = (ideal_quotient_dim(vm.S, meet_tot) <= 0);
    return rep;
}

// ---------------------------------------------------------------------------
// end H^0 through a power
// ---------------------------------------------------------------------------

PowerBoundReport end_h0_via_power(const ModulePresentation& M, const IdealData& I, const Poly& x,
                                  int n_max) {
    PowerBoundReport rep;
    const CIRingPtr& A = M.ring();
    HilbertSeries hs = M.series();
    if (hs.dimension() < 2) {
        rep.skip_reason = "module dimension below 2";
        return rep;
    }
    if (depth(M) != hs.dimension()) {
        rep.skip_reason = "module is not Cohen-Macaulay";
        return rep;
    }
    rep.applicable = true;
    ModulePresentation N = M.quotient_by_element(A->nf(x));
    RatliffRushChain over_n = ratliff_rush(N, I, n_max);
    rep.b = over_n.end_h0;
    rep.m = rep.b.neg_inf ? 1 : rep.b.value + 1;
    if (rep.m < 1) rep.m = 1;
    IdealData Im(A, I.power(rep.m));
    int k_max = std::max(2, n_max / rep.m + 1);
    RatliffRushChain powered = ratliff_rush(M, Im, k_max);
    rep.t = powered.end_h0;
    RatliffRushChain plain = ratliff_rush(M, I, n_max);
    rep.lhs = plain.end_h0;
    int t_eff = rep.t.neg_inf ? -1 : rep.t.value;
    int bound = rep.m * (t_eff + 2) - 1;
    rep.holds = rep.lhs.neg_inf || rep.lhs.value <= bound;
    return rep;
}

}  // namespace cicalc
