#pragma once

#include "cicalc/ci_ring.hpp"

namespace cicalc {

// ---------------------------------------------------------------------------
// Finitely generated graded module over a CIRing, given by generator degrees
// and homogeneous relation columns. Entries are normal forms modulo the
// defining relations of the ring.
// ---------------------------------------------------------------------------

class ModulePresentation {
public:
    ModulePresentation() = default;
    ModulePresentation(CIRingPtr ring, std::vector<int> gen_degrees,
                       std::vector<VecPoly> relations);

    static ModulePresentation free_module(CIRingPtr A, std::vector<int> degrees = {0});
    static ModulePresentation zero_module(CIRingPtr A);
    static ModulePresentation residue_field(CIRingPtr A);
    // A / (gens)
    static ModulePresentation cyclic(CIRingPtr A, const std::vector<Poly>& ideal_gens);

    const CIRingPtr& ring() const { return ring_; }
    int rank() const { return int(gen_degrees_.size()); }
    const std::vector<int>& gen_degrees() const { return gen_degrees_; }
    const std::vector<VecPoly>& relations() const { return relations_; }

    // relations together with the ring's defining columns
    std::vector<VecPoly> full_relations() const;
    GroebnerBasis relation_gb(ModOrder order = {}) const;

    HilbertSeries series() const;
    int dim() const { return series().dimension(); }
    int64_t length() const;
    bool is_zero() const;

    // Gaussian pruning of unit entries plus minimalization of the relation
    // set; the result has no unit entries and minimally many generators
    // and relations.
    ModulePresentation minimalized() const;
    // drops generators not met by any relation; those split off free summands
    ModulePresentation drop_free_summands(int* dropped = nullptr) const;

    ModulePresentation quotient_by_ideal_power(const IdealData& I, int n) const;
    ModulePresentation quotient_by_element(const Poly& x) const;
    static ModulePresentation direct_sum(const ModulePresentation& a,
                                         const ModulePresentation& b);
    // transport along A -> A/(x)
    ModulePresentation transport(const QuotientMap& qm) const;

    // multiplication by x is injective on M
    bool is_regular_element(const Poly& x) const;

    std::string describe() const;

private:
    CIRingPtr ring_;
    std::vector<int> gen_degrees_;
    std::vector<VecPoly> relations_;
};

// A homogeneous map M -> N: column l is the image of the l-th generator of M,
// expressed over the generators of N. deg_shift is the degree it adds.
struct ModuleMap {
    ModulePresentation src;
    ModulePresentation dst;
    std::vector<VecPoly> cols;
    int deg_shift = 0;

    static ModuleMap identity(const ModulePresentation& M);
    static ModuleMap multiplication(const ModulePresentation& M, const Poly& x);
    bool is_well_defined() const;
    bool is_surjective() const;
    VecPoly apply(const VecPoly& v) const;
};

// Subquotient (span U + span W)/span W of a free module with given shifts;
// presents it with minimal generators and their syzygies. If gen_vectors is
// non-null the chosen generator representatives are returned.
ModulePresentation present_subquotient(const CIRingPtr& A, int ambient_rank,
                                       const std::vector<int>& ambient_shifts,
                                       const std::vector<VecPoly>& U,
                                       const std::vector<VecPoly>& W,
                                       std::vector<VecPoly>* gen_vectors = nullptr);

// Kernel of a map as a presented module (with chosen representatives inside
// the source generator space).
ModulePresentation kernel_presentation(const ModuleMap& f,
                                       std::vector<VecPoly>* gen_vectors = nullptr);

ModulePresentation cokernel_presentation(const ModuleMap& f);

// Hom_A(M, A) with its natural (negated) grading.
ModulePresentation dual_module(const ModulePresentation& M,
                               std::vector<VecPoly>* gen_vectors = nullptr);

// Sound-but-incomplete stable isomorphism test: minimalizes, removes free
// summands, compares graded generator/relation degree tables and Hilbert
// series through a fixed degree window. With allow_shift the comparison is
// made after aligning the least generator degrees (syzygies shift degrees).
bool stably_isomorphic_heuristic(const ModulePresentation& a, const ModulePresentation& b,
                                 int degree_window = 12, bool allow_shift = false);

}  // namespace cicalc
