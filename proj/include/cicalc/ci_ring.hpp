#pragma once

#include <mutex>

#include "cicalc/hilbert.hpp"

namespace cicalc {

struct RegularSequenceError : StructuralError {
    using StructuralError::StructuralError;
};
struct DegreeError : StructuralError {
    using StructuralError::StructuralError;
};
struct NotFiniteLengthError : StructuralError {
    using StructuralError::StructuralError;
};

class CIRing;
using CIRingPtr = std::shared_ptr<const CIRing>;

// A = P / (f_1 .. f_c) for a homogeneous regular sequence f in the graded
// polynomial ring P. Ring elements are carried as canonical normal forms
// modulo the reduced Groebner basis of (f).
class CIRing : public std::enable_shared_from_this<CIRing> {
public:
    // Verifies the regular-sequence property by the dimension drop and
    // rejects generators of degree < 2. Rings of dimension 0 are rejected
    // unless allow_dim_zero is set (quotients by maximal regular sequences
    // arise internally).
    static CIRingPtr make(RingPtr ambient, std::vector<Poly> f, bool allow_dim_zero = false);

    const RingPtr& ambient() const { return ambient_; }
    const std::vector<Poly>& f() const { return f_; }
    int dim() const { return d_; }
    int codim() const { return c_; }
    uint32_t p() const { return ambient_->field.p(); }

    Poly nf(const Poly& g) const;
    VecPoly nf(const VecPoly& v) const;

    // Generators f_j . e_i of the defining submodule of A^rank inside P^rank.
    std::vector<VecPoly> relation_columns(int rank) const;

    // Reduced Groebner basis of span(gens) + relation columns.
    GroebnerBasis gb_over_quotient(int rank, const std::vector<VecPoly>& gens,
                                   ModOrder order = {}) const;

    const HilbertSeries& series() const { return series_; }

private:
    CIRing() = default;
    RingPtr ambient_;
    std::vector<Poly> f_;
    int d_ = 0, c_ = 0;
    std::unique_ptr<GroebnerBasis> fgb_;
    HilbertSeries series_;
};

// An ideal of A given by homogeneous generators, with a lazily grown cache
// of generating sets for its powers.
class IdealData {
public:
    IdealData(CIRingPtr ring, std::vector<Poly> gens);

    const CIRingPtr& ring() const { return ring_; }
    const std::vector<Poly>& gens() const { return gens_; }

    // Minimal homogeneous generating set of I^n as an ideal of A (n >= 0).
    std::vector<Poly> power(int n) const;
    bool is_m_primary() const;
    // dim A/I
    int quotient_dim() const;
    // l(A/I^n); requires m-primary
    int64_t colength(int n) const;

    // I^n as a rank-1 submodule over P, including the ring relations.
    std::vector<VecPoly> power_submodule(int n) const;

    std::string describe() const;

private:
    CIRingPtr ring_;
    std::vector<Poly> gens_;
    mutable std::mutex mu_;
    mutable std::vector<std::vector<Poly>> powers_;
    mutable int quotient_dim_ = -2;
};

using IdealPtr = std::shared_ptr<const IdealData>;

// Maximal homogeneous (irrelevant) ideal of A.
IdealPtr irrelevant_ideal(const CIRingPtr& A);

// Transport along A -> A/(x) for homogeneous A-regular x. For deg x = 1 the
// quotient is presented over a polynomial ring with one variable substituted
// away; for deg x >= 2 the element joins the defining sequence.
struct QuotientMap {
    CIRingPtr source;
    CIRingPtr target;
    int dropped_var = -1;        // -1 when x was adjoined to f
    std::vector<int> var_map;    // source ambient var -> target ambient var
    Poly substitution;           // expression for the dropped variable, over target

    Poly apply(const Poly& g) const;
    VecPoly apply(const VecPoly& v) const;
};

QuotientMap quotient_by_regular_element(const CIRingPtr& A, const Poly& x,
                                        bool allow_dim_zero = true);

}  // namespace cicalc
