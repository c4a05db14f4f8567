#pragma once

#include "cicalc/operators.hpp"

namespace cicalc {

// Integer degree extended by -infinity (the degree of the zero polynomial).
struct Deg {
    bool neg_inf = true;
    int value = 0;

    static Deg minus_infinity() { return Deg{}; }
    static Deg of(int v) { return Deg{false, v}; }
    bool operator==(const Deg& o) const {
        return neg_inf == o.neg_inf && (neg_inf || value == o.value);
    }
    bool operator<(const Deg& o) const {
        if (neg_inf) return !o.neg_inf;
        if (o.neg_inf) return false;
        return value < o.value;
    }
    static Deg max(const Deg& a, const Deg& b) { return a < b ? b : a; }
    std::string str() const { return neg_inf ? "-inf" : std::to_string(value); }
};

// The matrix l(Ext^i(M, A/I^n)) for 1 <= i <= i_max, 1 <= n <= n_max.
struct LengthTable {
    int i_max = 0, n_max = 0;
    std::vector<std::vector<int64_t>> cells;  // cells[i-1][n-1]

    int64_t at(int i, int n) const { return cells[size_t(i) - 1][size_t(n) - 1]; }
    std::vector<int64_t> row(int i) const { return cells[size_t(i) - 1]; }
    bool all_zero() const;
    std::string csv() const;
};

struct TableOptions {
    ModOrder order{};
    bool minimal = true;
    int jobs = 1;
};

LengthTable ext_length_table(const ModulePresentation& M, const IdealData& I, int i_max,
                             int n_max, const TableOptions& opts = {});
LengthTable tor_length_table(const ModulePresentation& M, const IdealData& I, int i_max,
                             int n_max, const TableOptions& opts = {});

// least-degree exact interpolation of one table row past the burn-in
Deg fit_psi(const std::vector<int64_t>& row, int burn_in, int* window_start = nullptr);

struct PsiReport {
    int i_max = 0, n_max = 0, burn_in_n = 2, burn_in_i = 3;
    std::vector<Deg> psi;  // psi[i-1]
    Deg r0, r1, r;
    std::vector<int> fit_window_starts;
    std::vector<std::string> flags;
    bool even_tail_constant = false;
    bool odd_tail_constant = false;
    bool tails_ok() const { return even_tail_constant && odd_tail_constant; }
};

PsiReport r_invariants(const ModulePresentation& M, const IdealData& I, int i_max = 9,
                       int n_max = 8, int burn_in_n = 2, int burn_in_i = 3,
                       const TableOptions& opts = {});
PsiReport r_invariants_from_table(const LengthTable& table, int burn_in_n, int burn_in_i);

// the five equivalent vanishing conditions, evaluated at desk scale
struct EquivalenceReport {
    bool r_is_minus_infinity = false;       // (i)
    bool rowwise_vanishing = false;         // (ii)
    bool uniform_vanishing = false;         // (iii)
    bool variety_meets_origin_only = false; // (iv)
    bool tor_vanishes_past_index = false;   // (v)
    int stabilization_index = -1;
    bool all_equal = false;
    std::vector<std::string> flags;
};

EquivalenceReport check_equivalences(const ModulePresentation& M, const IdealData& I,
                                     int i_max = 9, int n_max = 8, int burn_in_n = 2,
                                     int burn_in_i = 3, int variety_cutoff = 10);

// psi of M/xM against max(psi_{i-1}(M), psi_i(M)) for 3 <= i <= i_max, and
// the r-invariant of the MCM approximation of M/xM against r(M)
struct ModxReport {
    std::vector<Deg> lhs;  // psi_i(M/xM), index i - 3
    std::vector<Deg> rhs;  // max(psi_{i-1}(M), psi_i(M))
    bool formula_holds = false;
    Deg r_M, r_D;
    bool r_matches = false;
};

ModxReport psi_under_modx(const ModulePresentation& M, const IdealData& I, const Poly& x,
                          int i_max = 8, int n_max = 8);

// descent of r = -infinity along a superficial element
struct DescentReport {
    bool applicable = false;  // precondition r(M) = -infinity
    std::string skip_reason;
    Deg r_upstairs, r_downstairs;
    bool holds = false;
};

DescentReport psi_superficial_descent(const ModulePresentation& M, const IdealData& I,
                                      const Poly& x, int i_max = 9, int n_max = 8);

}  // namespace cicalc
