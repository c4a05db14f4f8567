#include "cicalc/presentation.hpp"

#include <sstream>

namespace cicalc {

ModulePresentation::ModulePresentation(CIRingPtr ring, std::vector<int> gen_degrees,
                                       std::vector<VecPoly> relations)
    : ring_(std::move(ring)), gen_degrees_(std::move(gen_degrees)) {
    for (VecPoly& col : relations) {
        if (int(col.size()) != rank()) throw StructuralError("relation column rank mismatch");
        VecPoly c = ring_->nf(col);
        if (vec_is_zero(c)) continue;
        if (!vec_is_homogeneous(c, gen_degrees_))
            throw StructuralError("relation column not homogeneous: " + vec_str(c));
        relations_.push_back(std::move(c));
    }
}

ModulePresentation ModulePresentation::free_module(CIRingPtr A, std::vector<int> degrees) {
    return ModulePresentation(std::move(A), std::move(degrees), {});
}

ModulePresentation ModulePresentation::zero_module(CIRingPtr A) {
    return ModulePresentation(std::move(A), {}, {});
}

ModulePresentation ModulePresentation::residue_field(CIRingPtr A) {
    std::vector<VecPoly> rels;
    for (int v = 0; v < A->ambient()->nvars(); ++v)
        rels.push_back({Poly::variable(A->ambient(), v)});
    return ModulePresentation(std::move(A), {0}, std::move(rels));
}

ModulePresentation ModulePresentation::cyclic(CIRingPtr A, const std::vector<Poly>& ideal_gens) {
    std::vector<VecPoly> rels;
    for (const Poly& g : ideal_gens) rels.push_back({g});
    return ModulePresentation(std::move(A), {0}, std::move(rels));
}

std::vector<VecPoly> ModulePresentation::full_relations() const {
    std::vector<VecPoly> out = relations_;
    auto fc = ring_->relation_columns(rank());
    out.insert(out.end(), fc.begin(), fc.end());
    return out;
}

GroebnerBasis ModulePresentation::relation_gb(ModOrder order) const {
    GroebnerBasis gb(ring_->ambient(), rank(), order);
    gb.add(full_relations());
    return gb;
}

HilbertSeries ModulePresentation::series() const {
    if (rank() == 0) return {IntPoly::zero(), ring_->ambient()->weights, 0};
    GroebnerBasis gb = relation_gb();
    return hilbert_series_of_quotient(gb, gen_degrees_);
}

int64_t ModulePresentation::length() const {
    HilbertSeries hs = series();
    if (!hs.is_finite_length()) throw NotFiniteLengthError("module has positive dimension");
    return hs.length();
}

bool ModulePresentation::is_zero() const {
    if (rank() == 0) return true;
    GroebnerBasis gb = relation_gb();
    for (const VecPoly& e : standard_basis(ring_->ambient(), rank()))
        if (!gb.contains(e)) return false;
    return true;
}

ModulePresentation ModulePresentation::minimalized() const {
    const RingPtr& P = ring_->ambient();
    const PrimeField& F = P->field;
    std::vector<int> degs = gen_degrees_;
    std::vector<VecPoly> rels = relations_;
    // Gaussian pruning of unit entries
    for (;;) {
        int hit_row = -1, hit_col = -1;
        uint32_t unit = 0;
        for (size_t col = 0; col < rels.size() && hit_row < 0; ++col)
            for (int row = 0; row < int(rels[col].size()); ++row) {
                const Poly& entry = rels[col][size_t(row)];
                if (!entry.is_zero() && entry.is_constant()) {
                    hit_row = row;
                    hit_col = int(col);
                    unit = entry.constant_coeff();
                    break;
                }
            }
        if (hit_row < 0) break;
        // substitute generator hit_row using relation hit_col, drop both
        VecPoly pivot = rels[size_t(hit_col)];
        uint32_t inv_neg = F.neg(F.inv(unit));
        std::vector<VecPoly> next;
        for (size_t col = 0; col < rels.size(); ++col) {
            if (int(col) == hit_col) continue;
            const Poly& coef = rels[col][size_t(hit_row)];
            VecPoly adj = rels[col];
            if (!coef.is_zero()) {
                Poly scale = coef.scaled(inv_neg);
                adj = vec_add(adj, vec_scale(pivot, scale));
            }
            adj.erase(adj.begin() + hit_row);
            next.push_back(ring_->nf(adj));
        }
        degs.erase(degs.begin() + hit_row);
        rels = std::move(next);
    }
    // minimal relation set
    std::vector<VecPoly> pruned;
    for (VecPoly& r : rels)
        if (!vec_is_zero(r)) pruned.push_back(std::move(r));
    int r = int(degs.size());
    pruned = minimal_generators(P, r, pruned, ring_->relation_columns(r), degs);
    return ModulePresentation(ring_, std::move(degs), std::move(pruned));
}

ModulePresentation ModulePresentation::drop_free_summands(int* dropped) const {
    std::vector<bool> touched(size_t(rank()), false);
    for (const VecPoly& col : relations_)
        for (int row = 0; row < rank(); ++row)
            if (!col[size_t(row)].is_zero()) touched[size_t(row)] = true;
    std::vector<int> keep_idx;
    std::vector<int> degs;
    for (int row = 0; row < rank(); ++row)
        if (touched[size_t(row)]) {
            keep_idx.push_back(row);
            degs.push_back(gen_degrees_[size_t(row)]);
        }
    if (dropped) *dropped = rank() - int(keep_idx.size());
    std::vector<VecPoly> rels;
    for (const VecPoly& col : relations_) {
        VecPoly c;
        for (int row : keep_idx) c.push_back(col[size_t(row)]);
        rels.push_back(std::move(c));
    }
    return ModulePresentation(ring_, std::move(degs), std::move(rels));
}

ModulePresentation ModulePresentation::quotient_by_ideal_power(const IdealData& I, int n) const {
    std::vector<VecPoly> rels = relations_;
    for (const Poly& g : I.power(n))
        for (int i = 0; i < rank(); ++i) {
            VecPoly v = vec_zero(ring_->ambient(), rank());
            v[size_t(i)] = g;
            rels.push_back(std::move(v));
        }
    return ModulePresentation(ring_, gen_degrees_, std::move(rels));
}

ModulePresentation ModulePresentation::quotient_by_element(const Poly& x) const {
    std::vector<VecPoly> rels = relations_;
    for (int i = 0; i < rank(); ++i) {
        VecPoly v = vec_zero(ring_->ambient(), rank());
        v[size_t(i)] = x;
        rels.push_back(std::move(v));
    }
    return ModulePresentation(ring_, gen_degrees_, std::move(rels));
}

ModulePresentation ModulePresentation::direct_sum(const ModulePresentation& a,
                                                  const ModulePresentation& b) {
    if (a.ring_ != b.ring_) throw StructuralError("direct sum over different rings");
    std::vector<int> degs = a.gen_degrees_;
    degs.insert(degs.end(), b.gen_degrees_.begin(), b.gen_degrees_.end());
    std::vector<VecPoly> rels;
    for (const VecPoly& col : a.relations_) {
        VecPoly c = col;
        VecPoly pad = vec_zero(a.ring_->ambient(), b.rank());
        c.insert(c.end(), pad.begin(), pad.end());
        rels.push_back(std::move(c));
    }
    for (const VecPoly& col : b.relations_) {
        VecPoly c = vec_zero(a.ring_->ambient(), a.rank());
        c.insert(c.end(), col.begin(), col.end());
        rels.push_back(std::move(c));
    }
    return ModulePresentation(a.ring_, std::move(degs), std::move(rels));
}

ModulePresentation ModulePresentation::transport(const QuotientMap& qm) const {
    if (qm.source != ring_) throw StructuralError("transport from wrong ring");
    std::vector<VecPoly> rels;
    for (const VecPoly& col : relations_) rels.push_back(qm.apply(col));
    return ModulePresentation(qm.target, gen_degrees_, std::move(rels));
}

bool ModulePresentation::is_regular_element(const Poly& x) const {
    // multiplication by x injective: (relations : x) inside the ambient free
    // module equals the relations
    auto full = full_relations();
    auto cols = colon_element(ring_->ambient(), rank(), full, ring_->nf(x),
                              standard_basis(ring_->ambient(), rank()));
    GroebnerBasis gb(ring_->ambient(), rank(), ModOrder{});
    gb.add(full);
    for (const VecPoly& c : cols)
        if (!gb.contains(c)) return false;
    return true;
}

std::string ModulePresentation::describe() const {
    std::ostringstream os;
    os << "gens degrees [";
    for (size_t i = 0; i < gen_degrees_.size(); ++i) {
        if (i) os << ",";
        os << gen_degrees_[i];
    }
    os << "], " << relations_.size() << " relations";
    return os.str();
}

ModuleMap ModuleMap::identity(const ModulePresentation& M) {
    ModuleMap f;
    f.src = M;
    f.dst = M;
    f.cols = standard_basis(M.ring()->ambient(), M.rank());
    return f;
}

ModuleMap ModuleMap::multiplication(const ModulePresentation& M, const Poly& x) {
    ModuleMap f;
    f.src = M;
    f.dst = M;
    Poly xn = M.ring()->nf(x);
    for (const VecPoly& e : standard_basis(M.ring()->ambient(), M.rank()))
        f.cols.push_back(vec_scale(e, xn));
    f.deg_shift = xn.is_zero() ? 0 : xn.degree();
    return f;
}

VecPoly ModuleMap::apply(const VecPoly& v) const {
    VecPoly out = vec_zero(dst.ring()->ambient(), dst.rank());
    for (int l = 0; l < src.rank(); ++l)
        out = vec_add(out, vec_scale(cols[size_t(l)], v[size_t(l)]));
    return dst.ring()->nf(out);
}

bool ModuleMap::is_well_defined() const {
    GroebnerBasis gb = dst.relation_gb();
    for (const VecPoly& r : src.relations()) {
        VecPoly img = vec_zero(dst.ring()->ambient(), dst.rank());
        for (int l = 0; l < src.rank(); ++l)
            img = vec_add(img, vec_scale(cols[size_t(l)], r[size_t(l)]));
        if (!gb.contains(img)) return false;
    }
    return true;
}

bool ModuleMap::is_surjective() const {
    GroebnerBasis gb(dst.ring()->ambient(), dst.rank(), ModOrder{});
    std::vector<VecPoly> gens = cols;
    auto rel = dst.full_relations();
    gens.insert(gens.end(), rel.begin(), rel.end());
    gb.add(gens);
    for (const VecPoly& e : standard_basis(dst.ring()->ambient(), dst.rank()))
        if (!gb.contains(e)) return false;
    return true;
}

ModulePresentation present_subquotient(const CIRingPtr& A, int ambient_rank,
                                       const std::vector<int>& ambient_shifts,
                                       const std::vector<VecPoly>& U,
                                       const std::vector<VecPoly>& W,
                                       std::vector<VecPoly>* gen_vectors) {
    const RingPtr& P = A->ambient();
    std::vector<VecPoly> wfull = W;
    auto fc = A->relation_columns(ambient_rank);
    wfull.insert(wfull.end(), fc.begin(), fc.end());
    std::vector<VecPoly> gens =
        minimal_generators(P, ambient_rank, U, wfull, ambient_shifts);
    std::vector<int> degs;
    for (const VecPoly& g : gens) {
        int d = -1;
        vec_is_homogeneous(g, ambient_shifts, &d);
        degs.push_back(d);
    }
    // relations among chosen generators, modulo W
    std::vector<VecPoly> syz = syzygies_mod(P, ambient_rank, gens, wfull);
    std::vector<VecPoly> rels;
    for (VecPoly& s : syz) {
        VecPoly r(s.begin(), s.begin() + long(gens.size()));
        rels.push_back(std::move(r));
    }
    if (gen_vectors) *gen_vectors = gens;
    return ModulePresentation(A, std::move(degs), std::move(rels));
}

ModulePresentation kernel_presentation(const ModuleMap& f, std::vector<VecPoly>* gen_vectors) {
    const CIRingPtr& A = f.src.ring();
    const RingPtr& P = A->ambient();
    // vectors v with sum(v_l . cols_l) in relations(dst)
    std::vector<VecPoly> syz =
        syzygies_mod(P, f.dst.rank(), f.cols, f.dst.full_relations());
    std::vector<VecPoly> U;
    for (VecPoly& s : syz) {
        VecPoly v(s.begin(), s.begin() + f.src.rank());
        if (!vec_is_zero(v)) U.push_back(std::move(v));
    }
    return present_subquotient(A, f.src.rank(), f.src.gen_degrees(), U, f.src.relations(),
                               gen_vectors);
}

ModulePresentation cokernel_presentation(const ModuleMap& f) {
    std::vector<VecPoly> rels = f.dst.relations();
    rels.insert(rels.end(), f.cols.begin(), f.cols.end());
    return ModulePresentation(f.dst.ring(), f.dst.gen_degrees(), std::move(rels));
}

ModulePresentation dual_module(const ModulePresentation& M, std::vector<VecPoly>* gen_vectors) {
    const CIRingPtr& A = M.ring();
    const RingPtr& P = A->ambient();
    const int b0 = M.rank();
    // kernel of the transposed relation matrix A^{b0}* -> A^{rels}*
    const int nrel = int(M.relations().size());
    std::vector<int> neg_degs;
    for (int d : M.gen_degrees()) neg_degs.push_back(-d);
    if (nrel == 0) {
        if (gen_vectors) *gen_vectors = standard_basis(P, b0);
        return ModulePresentation(A, neg_degs, {});
    }
    // columns of R^T: the l-th column is (rel_c[l])_c over c = 0..nrel-1
    std::vector<VecPoly> tcols;
    for (int l = 0; l < b0; ++l) {
        VecPoly col = vec_zero(P, nrel);
        for (int c = 0; c < nrel; ++c) col[size_t(c)] = M.relations()[size_t(c)][size_t(l)];
        tcols.push_back(std::move(col));
    }
    std::vector<VecPoly> syz = syzygies_mod(P, nrel, tcols, A->relation_columns(nrel));
    std::vector<VecPoly> U;
    for (VecPoly& s : syz)
        if (!vec_is_zero(s)) U.push_back(std::move(s));
    return present_subquotient(A, b0, neg_degs, U, {}, gen_vectors);
}

bool stably_isomorphic_heuristic(const ModulePresentation& a, const ModulePresentation& b,
                                 int degree_window, bool allow_shift) {
    ModulePresentation am = a.minimalized().drop_free_summands();
    ModulePresentation bm = b.minimalized().drop_free_summands();
    int shift = 0;
    if (allow_shift && am.rank() > 0 && bm.rank() > 0) {
        int ma = *std::min_element(am.gen_degrees().begin(), am.gen_degrees().end());
        int mb = *std::min_element(bm.gen_degrees().begin(), bm.gen_degrees().end());
        shift = mb - ma;  // compare a's data shifted up by this amount
    }
    std::vector<int> da = am.gen_degrees(), db = bm.gen_degrees();
    for (int& d : da) d += shift;
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    std::vector<int> ra, rb;
    for (const VecPoly& col : am.relations()) {
        int d = -1;
        vec_is_homogeneous(col, am.gen_degrees(), &d);
        ra.push_back(d + shift);
    }
    for (const VecPoly& col : bm.relations()) {
        int d = -1;
        vec_is_homogeneous(col, bm.gen_degrees(), &d);
        rb.push_back(d);
    }
    std::sort(ra.begin(), ra.end());
    std::sort(rb.begin(), rb.end());
    if (ra != rb) return false;
    HilbertSeries ha = am.series(), hb = bm.series();
    int lo = 0;
    for (int d : da) lo = std::min(lo, d);
    auto fa = ha.hilbert_function(lo - shift, lo - shift + degree_window);
    auto fb = hb.hilbert_function(lo, lo + degree_window);
    return fa == fb;
}

}  // namespace cicalc
