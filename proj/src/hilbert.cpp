#include "cicalc/hilbert.hpp"

#include <functional>

namespace cicalc {

void IntPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

int64_t IntPoly::eval_at_one() const {
    int64_t s = 0;
    for (int64_t x : c) s += x;
    return s;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    IntPoly out;
    out.c.resize(std::max(c.size(), o.c.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) out.c[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) out.c[i] += o.c[i];
    out.trim();
    return out;
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    IntPoly out;
    out.c.resize(std::max(c.size(), o.c.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) out.c[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) out.c[i] -= o.c[i];
    out.trim();
    return out;
}

IntPoly IntPoly::shifted(int k) const {
    if (is_zero()) return {};
    IntPoly out;
    out.c.assign(c.size() + size_t(k), 0);
    for (size_t i = 0; i < c.size(); ++i) out.c[i + size_t(k)] = c[i];
    return out;
}

bool IntPoly::divide_one_minus_power(int w, IntPoly* out) const {
    // (1 - s^w) q = this  =>  q_i = this_i + q_{i-w}
    IntPoly q;
    q.c.assign(c.size(), 0);
    for (size_t i = 0; i < c.size(); ++i)
        q.c[i] = at(int(i)) + ((int(i) >= w) ? q.c[i - size_t(w)] : 0);
    // exact iff the top w coefficients of q vanish beyond deg(this) - w
    for (size_t i = c.size() >= size_t(w) ? c.size() - size_t(w) : 0; i < q.c.size(); ++i)
        if (q.c[i] != 0) return false;
    q.trim();
    if (out) *out = q;
    return true;
}

IntPoly IntPoly::series_divide_one_minus_power(int w, int cap) const {
    IntPoly q;
    q.c.assign(size_t(cap) + 1, 0);
    for (int i = 0; i <= cap; ++i)
        q.c[size_t(i)] = at(i) + (i >= w ? q.c[size_t(i - w)] : 0);
    return q;
}

int HilbertSeries::dimension() const {
    if (numerator.is_zero()) return -1;
    IntPoly n = numerator;
    int mult = 0;
    IntPoly q;
    while (n.divide_one_minus_power(1, &q)) {
        n = q;
        ++mult;
        if (n.is_zero()) break;  // cannot happen for nonzero numerator
    }
    return int(weights.size()) - mult;
}

bool HilbertSeries::is_finite_length() const {
    IntPoly n = numerator;
    for (int w : weights) {
        IntPoly q;
        if (!n.divide_one_minus_power(w, &q)) return false;
        n = q;
    }
    return true;
}

int64_t HilbertSeries::length() const {
    IntPoly n = numerator;
    for (int w : weights) {
        IntPoly q;
        if (!n.divide_one_minus_power(w, &q))
            throw StructuralError("length of a module of positive dimension");
        n = q;
    }
    return n.eval_at_one();
}

std::vector<int64_t> HilbertSeries::hilbert_function(int lo, int hi) const {
    std::vector<int64_t> out;
    if (hi < lo) return out;
    int cap = hi - offset;
    IntPoly s = numerator;
    if (cap >= 0)
        for (int w : weights) s = s.series_divide_one_minus_power(w, cap);
    for (int d = lo; d <= hi; ++d) out.push_back(d - offset >= 0 ? s.at(d - offset) : 0);
    return out;
}

int64_t HilbertSeries::hf(int degree) const {
    return hilbert_function(degree, degree)[0];
}

HilbertSeries HilbertSeries::operator-(const HilbertSeries& o) const {
    if (weights != o.weights) throw StructuralError("Hilbert series over different rings");
    int off = std::min(offset, o.offset);
    return {numerator.shifted(offset - off) - o.numerator.shifted(o.offset - off), weights, off};
}

bool HilbertSeries::same_series(const HilbertSeries& o) const {
    HilbertSeries d = *this - o;
    return d.numerator.is_zero();
}

IntPoly HilbertSeries::reduced_numerator(int* denom_exp) const {
    for (int w : weights)
        if (w != 1) throw StructuralError("reduced numerator requires weight-1 variables");
    IntPoly n = numerator;
    int remaining = int(weights.size());
    IntPoly q;
    while (remaining > 0 && n.divide_one_minus_power(1, &q)) {
        n = q;
        --remaining;
        if (n.is_zero()) break;
    }
    if (denom_exp) *denom_exp = remaining;
    return n;
}

namespace {

std::vector<Expvec> minimalize_monomials(std::vector<Expvec> gens) {
    std::vector<Expvec> out;
    for (size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < gens.size() && !redundant; ++j)
            if (i != j && Expvec::divides(gens[j], gens[i]) &&
                !(gens[i] == gens[j] && j > i))
                redundant = true;
        if (!redundant) out.push_back(gens[i]);
    }
    return out;
}

IntPoly numerator_rec(const Ring& r, std::vector<Expvec> gens) {
    gens = minimalize_monomials(std::move(gens));
    if (gens.empty()) return IntPoly::one();
    for (const Expvec& g : gens)
        if (g.is_one()) return IntPoly::zero();

    // pure powers of distinct variables: complete intersection shortcut
    bool pure = true;
    uint32_t seen_mask = 0;
    for (const Expvec& g : gens) {
        int nz = -1;
        for (int v = 0; v < r.nvars(); ++v)
            if (g.e[v]) { if (nz >= 0) { nz = -2; break; } nz = v; }
        if (nz < 0 || (seen_mask & (1u << nz))) { pure = false; break; }
        seen_mask |= 1u << nz;
    }
    if (pure) {
        IntPoly out = IntPoly::one();
        for (const Expvec& g : gens)
            out = out - out.shifted(g.weighted_degree(r));
        return out;
    }

    // pivot on the most frequent variable
    std::array<int, kMaxVars> freq{};
    for (const Expvec& g : gens)
        for (int v = 0; v < r.nvars(); ++v)
            if (g.e[v]) ++freq[size_t(v)];
    int pivot = 0;
    for (int v = 1; v < r.nvars(); ++v)
        if (freq[size_t(v)] > freq[size_t(pivot)]) pivot = v;

    std::vector<Expvec> plus;  // gens + (x_pivot)
    Expvec xv;
    xv.e[pivot] = 1;
    plus.push_back(xv);
    std::vector<Expvec> colon;  // gens : x_pivot
    for (const Expvec& g : gens) {
        if (g.e[pivot] == 0) plus.push_back(g);
        Expvec h = g;
        if (h.e[pivot]) --h.e[pivot];
        colon.push_back(h);
    }
    IntPoly a = numerator_rec(r, std::move(plus));
    IntPoly b = numerator_rec(r, std::move(colon));
    return a + b.shifted(r.weights[size_t(pivot)]);
}

}  // namespace

IntPoly monomial_ideal_numerator(const Ring& r, std::vector<Expvec> gens) {
    return numerator_rec(r, std::move(gens));
}

HilbertSeries hilbert_series_free(const Ring& r, const std::vector<int>& shifts) {
    int off = 0;
    for (int d : shifts) off = std::min(off, d);
    IntPoly num;
    for (int d : shifts) num = num + IntPoly::one().shifted(d - off);
    return {num, r.weights, off};
}

HilbertSeries hilbert_series_of_quotient(const GroebnerBasis& gb, const std::vector<int>& shifts) {
    const Ring& r = *gb.ring();
    if (int(shifts.size()) != gb.rank()) throw StructuralError("shift list rank mismatch");
    std::vector<std::vector<Expvec>> leads(size_t(gb.rank()));
    for (const MPoly& g : gb.elements())
        if (!g.empty()) leads[size_t(g[0].comp)].push_back(g[0].m);
    int off = 0;
    for (int d : shifts) off = std::min(off, d);
    IntPoly num;
    for (int comp = 0; comp < gb.rank(); ++comp) {
        IntPoly n = monomial_ideal_numerator(r, leads[size_t(comp)]);
        num = num + n.shifted(shifts[size_t(comp)] - off);
    }
    return {num, r.weights, off};
}

QuotientBasis::QuotientBasis(const GroebnerBasis& gb, std::vector<int> shifts)
    : ring_(gb.ring()), rank_(gb.rank()), shifts_(std::move(shifts)) {
    if (int(shifts_.size()) != rank_) throw StructuralError("shift list rank mismatch");
    leads_.resize(size_t(rank_));
    for (const MPoly& g : gb.elements())
        if (!g.empty()) leads_[size_t(g[0].comp)].push_back(g[0].m);
    for (auto& l : leads_) l = minimalize_monomials(std::move(l));
}

bool QuotientBasis::is_standard(int comp, const Expvec& m) const {
    for (const Expvec& l : leads_[size_t(comp)])
        if (Expvec::divides(l, m)) return false;
    return true;
}

namespace {

void enumerate_weighted(const Ring& r, int var, int remaining, Expvec& cur,
                        const std::function<void(const Expvec&)>& emit) {
    if (var == r.nvars()) {
        if (remaining == 0) emit(cur);
        return;
    }
    int w = r.weights[size_t(var)];
    for (int e = 0; e * w <= remaining; ++e) {
        cur.e[size_t(var)] = uint16_t(e);
        enumerate_weighted(r, var + 1, remaining - e * w, cur, emit);
    }
    cur.e[size_t(var)] = 0;
}

}  // namespace

std::vector<BasisMono> QuotientBasis::of_degree(int d) const {
    std::vector<BasisMono> out;
    for (int comp = 0; comp < rank_; ++comp) {
        int internal = d - shifts_[size_t(comp)];
        if (internal < 0) continue;
        Expvec cur;
        enumerate_weighted(*ring_, 0, internal, cur, [&](const Expvec& m) {
            if (is_standard(comp, m)) out.push_back({comp, m});
        });
    }
    return out;
}

}  // namespace cicalc
