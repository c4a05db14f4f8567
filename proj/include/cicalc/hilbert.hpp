#pragma once

#include "cicalc/groebner.hpp"

namespace cicalc {

// Integer polynomial in one formal variable, c[i] = coefficient of s^i.
struct IntPoly {
    std::vector<int64_t> c;

    void trim();
    bool is_zero() const { return c.empty(); }
    int deg() const { return int(c.size()) - 1; }
    int64_t at(int i) const { return (i >= 0 && i < int(c.size())) ? c[size_t(i)] : 0; }
    int64_t eval_at_one() const;

    static IntPoly zero() { return {}; }
    static IntPoly one() { return {{1}}; }
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly shifted(int k) const;  // multiply by s^k
    bool operator==(const IntPoly& o) const { return c == o.c; }

    // exact division by (1 - s^w); returns false if not divisible
    bool divide_one_minus_power(int w, IntPoly* out) const;
    // power series division by (1 - s^w) truncated at degree cap
    IntPoly series_divide_one_minus_power(int w, int cap) const;
};

// Hilbert series of a graded module over the ambient ring, written as
// s^offset . numerator / prod_v (1 - s^{w_v}). The offset absorbs negative
// generator degrees (duals produce them).
struct HilbertSeries {
    IntPoly numerator;
    std::vector<int> weights;
    int offset = 0;

    // Krull dimension of the module; -1 for the zero module.
    int dimension() const;
    // total k-dimension when 0-dimensional; throws otherwise
    int64_t length() const;
    bool is_finite_length() const;
    // values of the Hilbert function for degrees lo..hi inclusive
    std::vector<int64_t> hilbert_function(int lo, int hi) const;
    int64_t hf(int degree) const;

    HilbertSeries operator-(const HilbertSeries& o) const;
    bool same_series(const HilbertSeries& o) const;

    // maximally cancels 1-s factors; denom_exp receives the remaining
    // denominator exponent (weight-1 rings only)
    IntPoly reduced_numerator(int* denom_exp = nullptr) const;
};

// Numerator of the Hilbert series of P / (monomial ideal).
IntPoly monomial_ideal_numerator(const Ring& r, std::vector<Expvec> gens);

// Hilbert series of F / U for a free module F with generator degree shifts,
// where U is given by a Groebner basis (only lead terms are consulted).
HilbertSeries hilbert_series_of_quotient(const GroebnerBasis& gb, const std::vector<int>& shifts);

// Hilbert series of the free module itself.
HilbertSeries hilbert_series_free(const Ring& r, const std::vector<int>& shifts);

// ---------------------------------------------------------------------------
// Degreewise monomial bases of F / U: the standard monomials (those outside
// the lead-term module of U).
// ---------------------------------------------------------------------------

struct BasisMono {
    int comp;
    Expvec m;
};

class QuotientBasis {
public:
    QuotientBasis(const GroebnerBasis& gb, std::vector<int> shifts);

    // standard monomials of total (shifted) degree d, in a deterministic order
    std::vector<BasisMono> of_degree(int d) const;
    bool is_standard(int comp, const Expvec& m) const;

    const std::vector<int>& shifts() const { return shifts_; }

private:
    RingPtr ring_;
    int rank_;
    std::vector<int> shifts_;
    std::vector<std::vector<Expvec>> leads_;  // per component, minimalized
};

}  // namespace cicalc
