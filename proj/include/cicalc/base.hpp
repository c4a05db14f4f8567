#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace cicalc {

// ---------------------------------------------------------------------------
// Prime field F_p, p an odd prime (default 101). Elements are residues in
// [0, p) stored as uint32_t; products fit in uint64_t.
// ---------------------------------------------------------------------------

class PrimeField {
public:
    explicit PrimeField(uint32_t p = 101);

    uint32_t p() const { return p_; }
    uint32_t add(uint32_t a, uint32_t b) const { uint32_t s = a + b; return s >= p_ ? s - p_ : s; }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    uint32_t mul(uint32_t a, uint32_t b) const { return uint32_t((uint64_t(a) * b) % p_); }
    uint32_t inv(uint32_t a) const;
    uint32_t reduce(int64_t n) const { int64_t r = n % int64_t(p_); return uint32_t(r < 0 ? r + p_ : r); }

private:
    uint32_t p_;
};

bool is_prime(uint32_t n);

// ---------------------------------------------------------------------------
// Ambient graded polynomial ring: named variables with positive degree
// weights over F_p.
// ---------------------------------------------------------------------------

constexpr int kMaxVars = 12;

struct Ring {
    PrimeField field;
    std::vector<std::string> var_names;
    std::vector<int> weights;  // positive, one per variable

    int nvars() const { return int(var_names.size()); }
    int var_index(const std::string& name) const;  // -1 if absent

    static std::shared_ptr<const Ring> make(uint32_t p, std::vector<std::string> names,
                                            std::vector<int> weights = {});
};

using RingPtr = std::shared_ptr<const Ring>;

// Exponent vector with fixed capacity. Entries beyond the ring's nvars stay 0.
struct Expvec {
    std::array<uint16_t, kMaxVars> e{};

    bool operator==(const Expvec& o) const { return e == o.e; }
    bool is_one() const;
    int total(int nvars) const;
    int weighted_degree(const Ring& r) const;

    static Expvec mul(const Expvec& a, const Expvec& b);
    // a / b; caller must ensure divisibility
    static Expvec div(const Expvec& a, const Expvec& b);
    static bool divides(const Expvec& b, const Expvec& a);  // b | a
    static Expvec lcm(const Expvec& a, const Expvec& b);
    static bool coprime(const Expvec& a, const Expvec& b);
};

// ---------------------------------------------------------------------------
// Monomial orders. Module terms carry a component index; the module order is
// position-over-term: lower component index is greater, ties within a
// component fall back to the monomial order. A block split supports
// elimination (components >= split form a strictly smaller block), and a
// variable split supports eliminating trailing variables.
// ---------------------------------------------------------------------------

enum class MonoOrder { degrevlex, lex };

MonoOrder mono_order_from_string(const std::string& s);
std::string to_string(MonoOrder o);

// cmp > 0 iff a > b
int cmp_mono(const Ring& r, MonoOrder o, const Expvec& a, const Expvec& b);

struct ModOrder {
    MonoOrder mono = MonoOrder::degrevlex;
    int comp_block_split = -1;  // components >= split are smaller than any component < split
    int var_block_split = -1;   // variables >= split are eliminated (compared first)

    int cmp(const Ring& r, int comp_a, const Expvec& a, int comp_b, const Expvec& b) const;
};

// ---------------------------------------------------------------------------
// Polynomials: term lists kept sorted descending under a fixed canonical
// order (degrevlex with variable-index tiebreak), independent of the order
// used by Groebner runs. No zero coefficients are stored.
// ---------------------------------------------------------------------------

struct Term {
    Expvec m;
    uint32_t c = 0;
    bool operator==(const Term&) const = default;
};

class Poly {
public:
    Poly() = default;
    explicit Poly(RingPtr r) : ring_(std::move(r)) {}

    static Poly zero(RingPtr r) { return Poly(std::move(r)); }
    static Poly constant(RingPtr r, uint32_t c);
    static Poly variable(RingPtr r, int idx, int power = 1);
    static Poly monomial(RingPtr r, const Expvec& m, uint32_t c);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    // Weighted degree of the highest term; -1 for zero.
    int degree() const;
    bool is_homogeneous() const;
    bool is_constant() const { return terms_.size() == 1 && terms_[0].m.is_one(); }
    uint32_t constant_coeff() const;  // coefficient of 1

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(uint32_t c) const;
    Poly mono_multiple(const Expvec& m, uint32_t c) const;
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    // Builds from unsorted/unreduced term list.
    static Poly from_terms(RingPtr r, std::vector<Term> ts);

    std::string str() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

// A free-module element, dense over components.
using VecPoly = std::vector<Poly>;

VecPoly vec_zero(RingPtr r, int rank);
bool vec_is_zero(const VecPoly& v);
VecPoly vec_add(const VecPoly& a, const VecPoly& b);
VecPoly vec_sub(const VecPoly& a, const VecPoly& b);
VecPoly vec_scale(const VecPoly& a, const Poly& f);
std::string vec_str(const VecPoly& v);

// Homogeneity with component shifts: term degrees + shift[comp] all equal.
// Returns the common degree, or -1 for the zero vector.
bool vec_is_homogeneous(const VecPoly& v, const std::vector<int>& shifts, int* degree_out = nullptr);

// ---------------------------------------------------------------------------
// Polynomial string parsing: integer coefficients, "^" powers, "*" optional.
// ---------------------------------------------------------------------------

Poly parse_poly(RingPtr r, const std::string& text);

struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace cicalc
