#pragma once

#include "cicalc/fitting.hpp"
#include "cicalc/stable.hpp"

namespace cicalc {

struct GenericityFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ComplexityTooLowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Degree -2 chain operators on a free resolution over A = P/(f): lift the
// differential entrywise (entries are already canonical representatives over
// P), split the square along the regular sequence, reduce back to A.
// ---------------------------------------------------------------------------

struct OperatorSet {
    const FreeResolution* res = nullptr;
    // t[j][i] = columns of t_j : F_i -> F_{i-2} over P, defined for 2 <= i <= cutoff
    std::vector<std::vector<std::vector<VecPoly>>> t;

    // exact identities: composite of lifted differentials equals
    // sum_j f_j t_j over P, and the t_j commute with the differential over A
    void verify() const;
};

OperatorSet eisenbud_operators(const FreeResolution& res);

// The graded pieces Ext^i(M,k) = k^{b_i} with the t_j actions (transposed
// scalar parts), an S = k[t_1..t_c]-module with deg t_j = 2.
struct ExtSModule {
    CIRingPtr A;
    RingPtr S;  // k[t_1..t_c], weight-2 variables
    int cutoff = 0;
    std::vector<int> piece_dim;
    // action[j][i] : piece i -> piece i+2, defined while i+2 <= cutoff
    std::vector<std::vector<FpMatrix>> action;
    // least g such that the degree-one S-action reaches every piece above g;
    // -1 when the window could not confirm generation
    int generation_degree = -1;

    FpMatrix monomial_action(const Expvec& alpha, int from_piece) const;
};

ExtSModule ext_k_module(const FreeResolution& res, const OperatorSet& ops);
ExtSModule ext_k_module(const ModulePresentation& M, int cutoff);

RingPtr operator_ring(const CIRingPtr& A);  // k[t_1..t_c], deg 2

// ---------------------------------------------------------------------------
// Support varieties: annihilator ideals of the (truncated) ExtSModule over S,
// with the double-window stabilization heuristic.
// ---------------------------------------------------------------------------

struct VarietyIdeal {
    RingPtr S;
    std::vector<Poly> gens;  // reduced Groebner basis, canonical
    int dim = 0;
    bool inconclusive = false;
    std::vector<Poly> alt_gens;     // the disagreeing second-window ideal
    int stabilization_index = -1;   // for ideal-power families
    uint32_t p = 0;

    std::string describe() const;
};

// annihilator of the pieces [lo, hi] of E (every test interval inside the
// window); all-zero windows give the irrelevant ideal
std::vector<Poly> annihilator_on_window(const ExtSModule& E, int lo, int hi);

VarietyIdeal support_variety(const ModulePresentation& M, int burn_in = 2, int cutoff = 10);
// second argument restricted to k-vector-space targets (mN = 0)
VarietyIdeal support_variety_pair(const ModulePresentation& M, const ModulePresentation& N,
                                  int burn_in = 2, int cutoff = 10);

struct ComplexityReport {
    int value = 0;
    int via_variety = 0;
    int via_betti = 0;
    bool agreed = false;
};

ComplexityReport complexity(const ModulePresentation& M, int burn_in = 2, int cutoff = 10);

struct IdealVarietyFamily {
    std::vector<VarietyIdeal> per_power;  // index n-1 for V(A/I^n)
    VarietyIdeal stable;                  // with stabilization_index set
    bool stabilized = false;
};

IdealVarietyFamily stable_ideal_variety(const IdealData& I, int n_max, int burn_in = 2,
                                        int cutoff = 10);
VarietyIdeal total_ideal_variety(const IdealData& I, int n_max, int burn_in = 2,
                                 int cutoff = 10);

// ideal arithmetic in S
std::vector<Poly> ideal_sum(const RingPtr& S, const std::vector<Poly>& a,
                            const std::vector<Poly>& b);
std::vector<Poly> ideal_intersection(const RingPtr& S, const std::vector<Poly>& a,
                                     const std::vector<Poly>& b);
int ideal_quotient_dim(const RingPtr& S, const std::vector<Poly>& gens);
bool in_radical(const RingPtr& S, const Poly& g, const std::vector<Poly>& ideal);
bool radical_equal(const RingPtr& S, const std::vector<Poly>& a, const std::vector<Poly>& b);
bool ideal_equal(const RingPtr& S, const std::vector<Poly>& a, const std::vector<Poly>& b);

// ---------------------------------------------------------------------------
// Complexity reduction: a generic degree-2 operator whose chain map is
// surjective high up yields 0 -> K -> M_{i+2} -> M_i -> 0 with cx K = cx M - 1.
// ---------------------------------------------------------------------------

struct ComplexityReduction {
    ModulePresentation K;
    int window_start = 0;
    std::vector<uint32_t> operator_coeffs;
    int attempts = 0;
    std::vector<int> betti_differences;  // b_{j+2}(M) - b_j(M) on the window
    bool syzygy_step_verified = false;
};

ComplexityReduction reduce_complexity(const ModulePresentation& M, int cutoff, uint64_t seed,
                                      int burn_in = 2, int retry_budget = 40);

}  // namespace cicalc
