#pragma once

#include "cicalc/linalg.hpp"
#include "cicalc/resolution.hpp"

namespace cicalc {

// ---------------------------------------------------------------------------
// Graded k-basis of a finite-length presented module, with multiplication
// matrices. Drives the degreewise homology computations.
// ---------------------------------------------------------------------------

class FiniteModuleBasis {
public:
    explicit FiniteModuleBasis(ModulePresentation N, ModOrder order = {});

    const ModulePresentation& module() const { return pres_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    int dim(int degree) const;
    int64_t total_length() const;
    const std::vector<BasisMono>& basis(int degree) const;

    // matrix of multiplication by homogeneous g: piece(degree) -> piece(degree + deg g)
    FpMatrix mult_matrix(const Poly& g, int degree) const;
    // coordinates of a homogeneous vector of the given degree
    std::vector<uint32_t> coords(const VecPoly& v, int degree) const;

private:
    ModulePresentation pres_;
    GroebnerBasis gb_;
    QuotientBasis qb_;
    int lo_ = 0, hi_ = -1;
    std::vector<std::vector<BasisMono>> pieces_;
};

// l(Ext^i(M, N)) for 0 <= i < resolution cutoff, N finite length.
int64_t ext_length_finite(const FreeResolution& F, const FiniteModuleBasis& N, int i);

// l(Tor_i(M, N)) for 0 <= i < resolution cutoff, N finite length.
int64_t tor_length_finite(const FreeResolution& F, const FiniteModuleBasis& N, int i);

// all of l(Ext^i(M,N)) for 0 <= i <= i_max in one pass (each differential
// rank is computed once)
std::vector<int64_t> ext_lengths_upto(const FreeResolution& F, const FiniteModuleBasis& N,
                                      int i_max);
std::vector<int64_t> tor_lengths_upto(const FreeResolution& F, const FiniteModuleBasis& N,
                                      int i_max);

// Ext^i(M, N) as a presented module for arbitrary finitely generated N
// (subquotient construction through the resolution of M).
ModulePresentation ext_module(const FreeResolution& F, const ModulePresentation& N, int i);

}  // namespace cicalc
