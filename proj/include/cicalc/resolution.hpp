#pragma once

#include "cicalc/presentation.hpp"

namespace cicalc {

// Truncated graded free resolution ... -> F_2 -> F_1 -> F_0 (-> M -> 0)
// over a CIRing. diff[i] holds the columns of F_i -> F_{i-1} for
// 1 <= i <= cutoff; degs[i] the generator degrees of F_i.
struct FreeResolution {
    CIRingPtr ring;
    ModulePresentation module;  // the presentation that was resolved
    bool minimal = true;
    int cutoff = 0;
    std::vector<std::vector<int>> degs;
    std::vector<std::vector<VecPoly>> diff;

    int betti(int i) const {
        return (i >= 0 && i <= cutoff) ? int(degs[size_t(i)].size()) : 0;
    }
    std::vector<int> betti_numbers() const;

    // presentation of the i-th syzygy module (i = 0 gives the module back);
    // requires i < cutoff
    ModulePresentation syzygy_module(int i) const;

    // exact composite check and, when minimal, absence of unit entries
    void verify() const;
};

FreeResolution minimal_resolution(const ModulePresentation& M, int cutoff, ModOrder order = {});

// A valid non-minimal resolution: the minimal one with a trivial
// A(-a) -> A(-a) summand spliced in at every stage.
FreeResolution nonminimal_resolution(const ModulePresentation& M, int cutoff,
                                     ModOrder order = {});

// depth via the Auslander-Buchsbaum formula over the ambient polynomial ring
int depth(const ModulePresentation& M);
bool is_mcm(const ModulePresentation& M);

// projective dimension over the ambient polynomial ring
int ambient_proj_dim(const ModulePresentation& M);

struct NotMCMError : StructuralError {
    using StructuralError::StructuralError;
};

}  // namespace cicalc
