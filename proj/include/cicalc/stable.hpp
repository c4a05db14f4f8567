#pragma once

#include "cicalc/homology.hpp"

namespace cicalc {

// ---------------------------------------------------------------------------
// Stable-category constructions over the (Gorenstein) CIRing: cosyzygies,
// mapping cones via the pushout against the free hull of the dual, and the
// iterated-cone MCM approximation of M/(x_1..x_r)M.
// ---------------------------------------------------------------------------

struct CosyzygyData {
    ModulePresentation cosyzygy;  // coker(M -> Q)
    ModulePresentation Q;         // free hull of the dual, dualized back
    ModuleMap embed;              // M -> Q
    ModuleMap project;            // Q -> cosyzygy
};

// Requires M MCM (throws NotMCMError otherwise).
CosyzygyData cosyzygy(const ModulePresentation& M);

struct ConeWitness {
    ModuleMap input;              // f : M -> N (possibly degree-raising)
    ModulePresentation cone;
    ModuleMap incl;               // N -> C(f)
    ModuleMap proj_cosyz;         // C(f) -> Omega^{-1}(M) (degree-adjusted)
    ModuleMap onto_coker;         // C(f) -> N/f(M)
    ModulePresentation coker_f;   // N/f(M)
    bool rows_exact = false;
};

// Pushout cone of a map of MCM modules, with the exact row
// 0 -> N -> C(f) -> Omega^{-1}(M) -> 0 materialized and verified.
ConeWitness cone(const ModuleMap& f);

struct McmApproxData {
    ModulePresentation V;         // the MCM approximation
    ModulePresentation target;    // M/(xs)M
    ModuleMap onto;               // V -> M/(xs)M, surjective
    ModulePresentation Y;         // kernel, of finite projective dimension
    int pd_Y = -1;                // verified within the cutoff
};

// Iterated cones over an A-regular sequence xs; verifies the approximation
// sequence 0 -> Y -> V -> M/(xs)M -> 0 and that pd Y is finite.
McmApproxData mcm_approx(const ModulePresentation& M, const std::vector<Poly>& xs,
                         int pd_cutoff = -1);

// g after h
ModuleMap compose(const ModuleMap& g, const ModuleMap& h);

}  // namespace cicalc
