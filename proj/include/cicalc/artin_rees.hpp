#pragma once

#include "cicalc/blowup.hpp"

namespace cicalc {

// The filtration N_n = I^n F_{i-1} (intersect) M_i of the i-th syzygy module
// inside its free cover, with the induced graded module over G_I(A).
struct SyzygyFiltration {
    int level = 1;   // i
    int n_max = 0;
    int free_rank = 0;
    std::vector<int> free_shifts;
    std::vector<std::vector<VecPoly>> pieces;  // generators of N_n, n = 0..n_max
    int stability_index = -1;                  // least n1 with N_{n+1} = I N_n for n >= n1
    bool stable = false;
    std::vector<int64_t> graded_lengths;       // l(N_n / N_{n+1}) for n = 0..n_max-1
    bool exactness_checked = false;            // length additivity against G_I(F), G_I(M_{i-1})
};

SyzygyFiltration syzygy_filtration(const FreeResolution& res, const IdealData& I, int i,
                                   int n_max, ModOrder order = {});

struct ARReport {
    int i_max = 0, n_max = 0;
    std::vector<int> h_per_level;   // index i-1
    int h = 0;                      // max over levels
    std::vector<Deg> reg_filtration;  // reg of the induced graded module per level
    bool cross_check_ok = false;    // h_i <= reg + 1 at every level
    bool hypothesis_verified = false;
    std::vector<std::string> flags;
};

// least exponents h_i making I^n F (intersect) M_i = I^{n-h}(I^h F (intersect) M_i)
// hold on [h_i, n_max], verified by double inclusion; cross-checked against
// the regularity of the filtration module
ARReport strong_ar_exponent(const ModulePresentation& M, const IdealData& I, int i_max,
                            int n_max, const SweepReport* boundedness = nullptr,
                            ModOrder order = {});

struct ARVerification {
    bool holds = true;
    bool vacuous = false;
    std::vector<std::string> transcript;
};

// independent double-inclusion check at a caller-supplied exponent
ARVerification verify_ar(const ModulePresentation& M, const IdealData& I, int h, int i_max,
                         int n_max, ModOrder order = {});

}  // namespace cicalc
