#include "cicalc/ci_ring.hpp"

#include <sstream>

namespace cicalc {

CIRingPtr CIRing::make(RingPtr ambient, std::vector<Poly> f, bool allow_dim_zero) {
    auto A = std::shared_ptr<CIRing>(new CIRing());
    A->ambient_ = ambient;
    A->c_ = int(f.size());
    for (Poly& g : f) {
        if (g.is_zero() || !g.is_homogeneous())
            throw StructuralError("defining relations must be homogeneous and nonzero");
        if (g.degree() < 2)
            throw DegreeError("defining relation of degree < 2 required, got degree " +
                              std::to_string(g.degree()));
    }
    std::vector<VecPoly> gens;
    for (const Poly& g : f) gens.push_back({g});
    A->fgb_ = std::make_unique<GroebnerBasis>(ambient, 1, ModOrder{});
    A->fgb_->add(gens);
    A->series_ = hilbert_series_of_quotient(*A->fgb_, {0});
    int dim = A->series_.dimension();
    if (dim != ambient->nvars() - A->c_)
        throw RegularSequenceError("not a regular sequence: dim drop is " +
                                   std::to_string(ambient->nvars() - dim) + " for " +
                                   std::to_string(A->c_) + " relations");
    A->d_ = dim;
    if (A->d_ < 1 && !allow_dim_zero)
        throw StructuralError("quotient ring has dimension 0; dimension >= 1 required");
    A->f_ = std::move(f);
    return A;
}

Poly CIRing::nf(const Poly& g) const {
    return fgb_->normal_form(VecPoly{g})[0];
}

VecPoly CIRing::nf(const VecPoly& v) const {
    VecPoly out;
    out.reserve(v.size());
    for (const Poly& g : v) out.push_back(nf(g));
    return out;
}

std::vector<VecPoly> CIRing::relation_columns(int rank) const {
    std::vector<VecPoly> out;
    for (int i = 0; i < rank; ++i)
        for (const Poly& g : f_) {
            VecPoly v = vec_zero(ambient_, rank);
            v[size_t(i)] = g;
            out.push_back(std::move(v));
        }
    return out;
}

GroebnerBasis CIRing::gb_over_quotient(int rank, const std::vector<VecPoly>& gens,
                                       ModOrder order) const {
    GroebnerBasis gb(ambient_, rank, order);
    std::vector<VecPoly> all = gens;
    auto rel = relation_columns(rank);
    all.insert(all.end(), rel.begin(), rel.end());
    gb.add(all);
    return gb;
}

IdealData::IdealData(CIRingPtr ring, std::vector<Poly> gens) : ring_(std::move(ring)) {
    for (Poly& g : gens) {
        Poly h = ring_->nf(g);
        if (h.is_zero()) continue;
        if (!h.is_homogeneous()) throw StructuralError("ideal generators must be homogeneous");
        gens_.push_back(std::move(h));
    }
    std::vector<VecPoly> as_vecs;
    for (const Poly& g : gens_) as_vecs.push_back({g});
    as_vecs = minimal_generators(ring_->ambient(), 1, as_vecs, ring_->relation_columns(1), {0});
    gens_.clear();
    for (auto& v : as_vecs) gens_.push_back(v[0]);
    powers_.push_back({Poly::constant(ring_->ambient(), 1)});
    powers_.push_back(gens_);
}

std::vector<Poly> IdealData::power(int n) const {
    if (n < 0) throw StructuralError("negative ideal power");
    std::lock_guard<std::mutex> lock(mu_);
    while (int(powers_.size()) <= n) {
        const std::vector<Poly>& prev = powers_.back();
        std::vector<VecPoly> prods;
        for (const Poly& a : prev)
            for (const Poly& b : gens_)
                prods.push_back({ring_->nf(a * b)});
        prods = minimal_generators(ring_->ambient(), 1, prods, ring_->relation_columns(1), {0});
        std::vector<Poly> next;
        for (auto& v : prods) next.push_back(v[0]);
        powers_.push_back(std::move(next));
    }
    return powers_[size_t(n)];
}

int IdealData::quotient_dim() const {
    std::lock_guard<std::mutex> lock(mu_);
    if (quotient_dim_ == -2) {
        std::vector<VecPoly> gens;
        for (const Poly& g : gens_) gens.push_back({g});
        GroebnerBasis gb = ring_->gb_over_quotient(1, gens);
        quotient_dim_ = hilbert_series_of_quotient(gb, {0}).dimension();
    }
    return quotient_dim_;
}

bool IdealData::is_m_primary() const {
    return quotient_dim() <= 0;
}

int64_t IdealData::colength(int n) const {
    std::vector<VecPoly> gens;
    for (const Poly& g : power(n)) gens.push_back({g});
    GroebnerBasis gb = ring_->gb_over_quotient(1, gens);
    HilbertSeries hs = hilbert_series_of_quotient(gb, {0});
    if (!hs.is_finite_length()) throw NotFiniteLengthError("A/I^n has positive dimension");
    return hs.length();
}

std::vector<VecPoly> IdealData::power_submodule(int n) const {
    std::vector<VecPoly> out;
    for (const Poly& g : power(n)) out.push_back({g});
    auto rel = ring_->relation_columns(1);
    out.insert(out.end(), rel.begin(), rel.end());
    return out;
}

std::string IdealData::describe() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (i) os << ", ";
        os << gens_[i].str();
    }
    os << ")";
    return os.str();
}

IdealPtr irrelevant_ideal(const CIRingPtr& A) {
    std::vector<Poly> gens;
    for (int v = 0; v < A->ambient()->nvars(); ++v)
        gens.push_back(Poly::variable(A->ambient(), v));
    return std::make_shared<IdealData>(A, std::move(gens));
}

Poly QuotientMap::apply(const Poly& g) const {
    const RingPtr& tgt = target->ambient();
    Poly out = Poly::zero(tgt);
    for (const Term& t : g.terms()) {
        Poly piece = Poly::constant(tgt, t.c);
        for (int v = 0; v < source->ambient()->nvars(); ++v) {
            int e = t.m.e[size_t(v)];
            if (!e) continue;
            Poly base = (v == dropped_var) ? substitution
                                           : Poly::variable(tgt, var_map[size_t(v)]);
            for (int k = 0; k < e; ++k) piece = piece * base;
        }
        out = out + piece;
    }
    return target->nf(out);
}

VecPoly QuotientMap::apply(const VecPoly& v) const {
    VecPoly out;
    out.reserve(v.size());
    for (const Poly& g : v) out.push_back(apply(g));
    return out;
}

QuotientMap quotient_by_regular_element(const CIRingPtr& A, const Poly& x, bool allow_dim_zero) {
    Poly xn = A->nf(x);
    if (xn.is_zero() || !xn.is_homogeneous())
        throw StructuralError("quotient element must be homogeneous and nonzero in A");
    QuotientMap qm;
    qm.source = A;
    const RingPtr& P = A->ambient();
    if (xn.degree() == 1) {
        // substitute one variable away
        int pivot = -1;
        uint32_t coeff = 0;
        for (const Term& t : xn.terms()) {
            for (int v = 0; v < P->nvars(); ++v)
                if (t.m.e[size_t(v)] == 1 && t.m.weighted_degree(*P) == 1) {
                    pivot = v;
                    coeff = t.c;
                }
            if (pivot >= 0) break;
        }
        if (pivot < 0) throw StructuralError("no weight-1 variable available for substitution");
        std::vector<std::string> names;
        std::vector<int> weights;
        qm.var_map.assign(size_t(P->nvars()), -1);
        for (int v = 0; v < P->nvars(); ++v) {
            if (v == pivot) continue;
            qm.var_map[size_t(v)] = int(names.size());
            names.push_back(P->var_names[size_t(v)]);
            weights.push_back(P->weights[size_t(v)]);
        }
        RingPtr Pq = Ring::make(P->field.p(), names, weights);
        qm.dropped_var = pivot;
        // x = coeff . x_pivot + rest  =>  x_pivot = -coeff^{-1} . rest
        Poly rest(Pq);
        const PrimeField& F = P->field;
        uint32_t cinv = F.neg(F.inv(coeff));
        for (const Term& t : xn.terms()) {
            if (t.m.e[size_t(pivot)]) continue;
            Expvec m;
            for (int v = 0; v < P->nvars(); ++v)
                if (v != pivot) m.e[size_t(qm.var_map[size_t(v)])] = t.m.e[size_t(v)];
            rest = rest + Poly::monomial(Pq, m, F.mul(t.c, cinv));
        }
        qm.substitution = rest;
        // map the defining relations and rebuild
        QuotientMap pre = qm;  // target not set yet; apply by hand
        std::vector<Poly> fq;
        for (const Poly& g : A->f()) {
            Poly out = Poly::zero(Pq);
            for (const Term& t : g.terms()) {
                Poly piece = Poly::constant(Pq, t.c);
                for (int v = 0; v < P->nvars(); ++v) {
                    int e = t.m.e[size_t(v)];
                    if (!e) continue;
                    Poly base = (v == pivot) ? rest : Poly::variable(Pq, qm.var_map[size_t(v)]);
                    for (int k = 0; k < e; ++k) piece = piece * base;
                }
                out = out + piece;
            }
            if (!out.is_zero()) fq.push_back(out);
        }
        CIRingPtr B = CIRing::make(Pq, fq, allow_dim_zero);
        if (B->dim() != A->dim() - 1)
            throw RegularSequenceError("element is not regular on the ring");
        qm.target = B;
        return qm;
    }
    // degree >= 2: adjoin to the defining sequence
    std::vector<Poly> fq = A->f();
    fq.push_back(xn);
    CIRingPtr B = CIRing::make(P, fq, allow_dim_zero);  // throws if not regular
    qm.target = B;
    qm.var_map.resize(size_t(P->nvars()));
    for (int v = 0; v < P->nvars(); ++v) qm.var_map[size_t(v)] = v;
    return qm;
}

}  // namespace cicalc
