#pragma once

#include "cicalc/base.hpp"

namespace cicalc {

// ---------------------------------------------------------------------------
// Buchberger engine for submodules of free modules P^rank over the ambient
// polynomial ring. Term lists are kept sorted descending under the active
// ModOrder. Elimination (for syzygies, kernels and Rees computations) is done
// through component/variable block splits in the order.
// ---------------------------------------------------------------------------

struct MTerm {
    int32_t comp = 0;
    Expvec m;
    uint32_t c = 0;
};

using MPoly = std::vector<MTerm>;  // sorted descending, no zero coefficients

MPoly to_mpoly(const Ring& r, const ModOrder& o, const VecPoly& v);
VecPoly from_mpoly(RingPtr r, int rank, const MPoly& p);

class GroebnerBasis {
public:
    GroebnerBasis(RingPtr ring, int rank, ModOrder order)
        : ring_(std::move(ring)), rank_(rank), order_(order) {}

    const RingPtr& ring() const { return ring_; }
    int rank() const { return rank_; }
    const ModOrder& order() const { return order_; }
    const std::vector<MPoly>& elements() const { return gens_; }
    std::vector<VecPoly> element_vectors() const;

    // Adds generators and completes to a Groebner basis.
    void add(const std::vector<VecPoly>& gens);
    void add_mpoly(std::vector<MPoly> gens);

    // Reduced normal form; zero iff v lies in the submodule.
    MPoly normal_form(const MPoly& v) const;
    VecPoly normal_form(const VecPoly& v) const;
    bool contains(const VecPoly& v) const;

    // Interreduces, normalizes leads to 1 and sorts; idempotent.
    void reduce();

    // When representation tracking is on, rep(i) expresses element i as a
    // combination of the original added generators.
    void enable_rep_tracking(int n_inputs_expected);
    const std::vector<MPoly>& reps() const { return reps_; }

    // v = sum(cofactor_k . g_k) + remainder over the basis elements.
    MPoly divide(const MPoly& v, std::vector<MPoly>* cofactors) const;

private:
    struct Pair {
        int i, j;
        Expvec lcm;
        int comp;
        int degree;
    };

    void complete();
    void push_element(MPoly g, MPoly rep);
    MPoly reduce_element(MPoly v, MPoly* rep) const;

    RingPtr ring_;
    int rank_;
    ModOrder order_;
    std::vector<MPoly> gens_;
    std::vector<MPoly> reps_;
    std::vector<Pair> queue_;
    bool track_reps_ = false;
    int n_inputs_ = 0;
    bool reduced_ = false;
};

// Convenience: reduced Groebner basis of a submodule.
GroebnerBasis groebner(RingPtr ring, int rank, const std::vector<VecPoly>& gens,
                       ModOrder order = {});

// Generators of the syzygy module of `gens`, that is relations
// sum(a_l . gens_l) = 0 modulo span(aux). Returned vectors have length
// gens.size().
std::vector<VecPoly> syzygies_mod(RingPtr ring, int rank, const std::vector<VecPoly>& gens,
                                  const std::vector<VecPoly>& aux, ModOrder order = {});

// Generators of { v in span(ambient) : g.v in span(target) }.
std::vector<VecPoly> colon_element(RingPtr ring, int rank, const std::vector<VecPoly>& target,
                                   const Poly& g, const std::vector<VecPoly>& ambient,
                                   ModOrder order = {});

// Generators of { v in P^rank : g.v in span(target) for every g in ideal_gens }.
std::vector<VecPoly> colon_ideal(RingPtr ring, int rank, const std::vector<VecPoly>& target,
                                 const std::vector<Poly>& ideal_gens, ModOrder order = {});

// Generators of span(U) (intersect) span(V).
std::vector<VecPoly> intersect_submodules(RingPtr ring, int rank, const std::vector<VecPoly>& U,
                                          const std::vector<VecPoly>& V, ModOrder order = {});

bool submodules_equal(RingPtr ring, int rank, const std::vector<VecPoly>& U,
                      const std::vector<VecPoly>& V);

// Standard basis vectors of P^rank.
std::vector<VecPoly> standard_basis(RingPtr ring, int rank);

// Prunes a homogeneous generating set to a minimal one modulo span(aux):
// processed in increasing degree, a candidate is dropped iff it lies in the
// span of the kept ones together with aux.
std::vector<VecPoly> minimal_generators(RingPtr ring, int rank, std::vector<VecPoly> cands,
                                        const std::vector<VecPoly>& aux,
                                        const std::vector<int>& shifts, ModOrder order = {});

}  // namespace cicalc
