#pragma once

#include <map>

#include "cicalc/asymptotics.hpp"

namespace cicalc {

struct InconclusiveCohomology : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Associated graded objects. For an I-stable filtration {N_n} of a free
// A-module (the I-adic filtration of a presented module being the main case)
// the Rees module is presented over P[y_1..y_s] by eliminating the auxiliary
// variable u from the graph relations y_j - g_j u, and the associated graded
// object is the quotient by I. Pieces are graded by filtration level; each
// piece is a finite-dimensional k-space once I is primary to the irrelevant
// ideal.
// ---------------------------------------------------------------------------

class GradedPresentation {
public:
    // I-adic case: G_I(M) (use a rank-1 free presentation for G_I(A))
    GradedPresentation(const ModulePresentation& M, IdealPtr I);
    // general filtration inside a free module with the given shifts:
    // level_gens[n] generates N_n; the list must reach the stable range
    // (N_{n+1} = I N_n beyond it)
    GradedPresentation(CIRingPtr A, IdealPtr I, int free_rank, std::vector<int> free_shifts,
                       std::vector<std::vector<VecPoly>> level_gens);

    const CIRingPtr& ring() const { return ring_; }
    const IdealPtr& ideal() const { return ideal_; }
    const RingPtr& presentation_ring() const { return PY_; }
    int y_count() const { return s_; }
    const std::vector<VecPoly>& relations() const { return relations_; }
    const std::vector<int>& levels() const { return gen_levels_; }

    // k-basis of the level-n piece
    std::vector<BasisMono> piece(int n) const;
    int64_t piece_length(int n) const { return int64_t(piece(n).size()); }
    // multiplication by y_a : piece(n) -> piece(n+1)
    FpMatrix mult_y(int a, int n) const;
    // multiplication by a y-monomial
    FpMatrix mult_y_monomial(const std::vector<int>& exponents, int n) const;

    // the module is concentrated in levels >= this
    int min_level() const;

    // presentation over k[y] when the base A/I is the residue field
    bool base_is_field() const;
    ModulePresentation collapse_to_y_ring() const;

private:
    void build(const std::vector<VecPoly>& rees_generators, const std::vector<int>& levels,
               int free_rank, const std::vector<VecPoly>& target_relations);
    CIRingPtr ring_;
    IdealPtr ideal_;
    int s_ = 0;
    RingPtr PY_;
    std::vector<int> gen_levels_;
    std::vector<VecPoly> relations_;
    std::unique_ptr<GroebnerBasis> gb_;
    std::vector<std::vector<Expvec>> leads_;              // per component
    mutable std::vector<std::vector<BasisMono>> pieces_;  // cache, index = level - base
    mutable int pieces_base_ = 0;
    mutable std::map<std::pair<uint64_t, int>, FpMatrix> mult_cache_;
};

// local cohomology ends w.r.t. the irrelevant ideal of the y-variables
struct RegReport {
    std::vector<Deg> ends;  // a_i for 0 <= i <= s
    Deg reg;
    int margin = 4;
    int scan_lo = 0, scan_hi = 0;
    std::vector<std::vector<int64_t>> piece_dims;  // H^i dims on [scan_lo, scan_hi]
    std::vector<std::string> flags;
    bool betti_path_used = false;
    Deg reg_betti;  // when the base is a field, the independent computation
};

struct CechOptions {
    int margin = 4;
    int limit_budget = 50;
    bool cross_check_betti = true;
};

RegReport local_cohomology_ends(const GradedPresentation& G, const CechOptions& opts = {});

// ---------------------------------------------------------------------------
// Ratliff-Rush closures: the colon chains (I^{n+k} M : I^k) and the end of
// the zeroth local cohomology they compute.
// ---------------------------------------------------------------------------

struct RatliffRushChain {
    int n_max = 0;
    std::vector<std::vector<VecPoly>> closures;  // generators, index n-1
    std::vector<int> stabilization_steps;        // k at which the chain stopped
    std::vector<int64_t> defect;                 // l(closure_n / I^n M), index n-1
    Deg end_h0;                                  // max{ n : defect(n+1) != 0 }
    bool window_limited = false;                 // nonzero defect at the last computed power
};

RatliffRushChain ratliff_rush(const ModulePresentation& M, const IdealData& I, int n_max);

// superficial element search with verification transcript
struct SuperficialSearch {
    Poly element;
    bool found = false;
    int attempts = 0;
    std::vector<std::string> transcript;
};

SuperficialSearch find_superficial(const IdealData& I,
                                   const std::vector<const ModulePresentation*>& modules,
                                   int n_window, uint64_t seed, int retry_budget = 40);

// regularity of G_I over the syzygies of M, with the boundedness verdict
struct SweepReport {
    std::vector<Deg> reg_values;  // reg G_I(syzygy i), i = 0..i_max
    bool bounded_verdict = false;
    bool hypothesis_r_minus_inf = false;
    bool hypothesis_dim_stable_le_1 = false;
    bool hypothesis_total_meets_origin = false;
    std::vector<std::string> flags;
};

SweepReport reg_syzygy_sweep(const ModulePresentation& M, const IdealData& I, int i_max,
                             const CechOptions& opts = {});

// end H^0 bound through a power of the ideal; x must be superficial for I
struct PowerBoundReport {
    bool applicable = false;
    std::string skip_reason;
    Deg b;      // end H^0 over M/xM
    int m = 0;  // chosen power, m > b
    Deg t;      // end H^0 against I^m
    Deg lhs;    // end H^0(L^I(M))
    bool holds = false;
};

PowerBoundReport end_h0_via_power(const ModulePresentation& M, const IdealData& I, const Poly& x,
                                  int n_max = 8);

}  // namespace cicalc
