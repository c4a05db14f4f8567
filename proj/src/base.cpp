#include "cicalc/base.hpp"

#include <cctype>
#include <sstream>

namespace cicalc {

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; uint64_t(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(uint32_t p) : p_(p) {
    if (!is_prime(p) || p == 2)
        throw StructuralError("characteristic must be an odd prime, got " + std::to_string(p));
}

uint32_t PrimeField::inv(uint32_t a) const {
    if (a == 0) throw StructuralError("division by zero in F_p");
    // extended Euclid
    int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
        int64_t q = r / new_r;
        t -= q * new_t; std::swap(t, new_t);
        r -= q * new_r; std::swap(r, new_r);
    }
    return reduce(t);
}

int Ring::var_index(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
        if (var_names[i] == name) return i;
    return -1;
}

RingPtr Ring::make(uint32_t p, std::vector<std::string> names, std::vector<int> weights) {
    if (int(names.size()) > kMaxVars)
        throw StructuralError("too many variables (max " + std::to_string(kMaxVars) + ")");
    if (weights.empty()) weights.assign(names.size(), 1);
    if (weights.size() != names.size())
        throw StructuralError("weight list length mismatch");
    for (int w : weights)
        if (w <= 0) throw StructuralError("variable weights must be positive");
    auto r = std::make_shared<Ring>();
    r->field = PrimeField(p);
    r->var_names = std::move(names);
    r->weights = std::move(weights);
    return r;
}

bool Expvec::is_one() const {
    for (auto x : e) if (x) return false;
    return true;
}

int Expvec::total(int nvars) const {
    int s = 0;
    for (int i = 0; i < nvars; ++i) s += e[i];
    return s;
}

int Expvec::weighted_degree(const Ring& r) const {
    int s = 0;
    for (int i = 0; i < r.nvars(); ++i) s += int(e[i]) * r.weights[i];
    return s;
}

Expvec Expvec::mul(const Expvec& a, const Expvec& b) {
    Expvec out;
    for (int i = 0; i < kMaxVars; ++i) out.e[i] = uint16_t(a.e[i] + b.e[i]);
    return out;
}

Expvec Expvec::div(const Expvec& a, const Expvec& b) {
    Expvec out;
    for (int i = 0; i < kMaxVars; ++i) {
        assert(a.e[i] >= b.e[i]);
        out.e[i] = uint16_t(a.e[i] - b.e[i]);
    }
    return out;
}

bool Expvec::divides(const Expvec& b, const Expvec& a) {
    for (int i = 0; i < kMaxVars; ++i)
        if (b.e[i] > a.e[i]) return false;
    return true;
}

Expvec Expvec::lcm(const Expvec& a, const Expvec& b) {
    Expvec out;
    for (int i = 0; i < kMaxVars; ++i) out.e[i] = std::max(a.e[i], b.e[i]);
    return out;
}

bool Expvec::coprime(const Expvec& a, const Expvec& b) {
    for (int i = 0; i < kMaxVars; ++i)
        if (a.e[i] && b.e[i]) return false;
    return true;
}

MonoOrder mono_order_from_string(const std::string& s) {
    if (s == "degrevlex") return MonoOrder::degrevlex;
    if (s == "lex") return MonoOrder::lex;
    throw StructuralError("unknown monomial order: " + s);
}

std::string to_string(MonoOrder o) {
    return o == MonoOrder::degrevlex ? "degrevlex" : "lex";
}

int cmp_mono(const Ring& r, MonoOrder o, const Expvec& a, const Expvec& b) {
    const int n = r.nvars();
    switch (o) {
        case MonoOrder::degrevlex: {
            int da = a.weighted_degree(r), db = b.weighted_degree(r);
            if (da != db) return da < db ? -1 : 1;
            for (int i = n - 1; i >= 0; --i)
                if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
            return 0;
        }
        case MonoOrder::lex: {
            for (int i = 0; i < n; ++i)
                if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
            return 0;
        }
    }
    return 0;
}

int ModOrder::cmp(const Ring& r, int ca, const Expvec& a, int cb, const Expvec& b) const {
    if (comp_block_split >= 0) {
        bool low_a = ca >= comp_block_split, low_b = cb >= comp_block_split;
        if (low_a != low_b) return low_a ? -1 : 1;
    }
    if (var_block_split >= 0) {
        // compare eliminated variables first, by total degree then position
        int ta = 0, tb = 0;
        for (int i = var_block_split; i < r.nvars(); ++i) { ta += a.e[i]; tb += b.e[i]; }
        if (ta != tb) return ta < tb ? -1 : 1;
        for (int i = var_block_split; i < r.nvars(); ++i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    }
    if (ca != cb) return ca > cb ? -1 : 1;  // lower component index is greater
    return cmp_mono(r, mono, a, b);
}

// canonical storage order for Poly terms
static int cmp_canonical(const Ring& r, const Expvec& a, const Expvec& b) {
    int c = cmp_mono(r, MonoOrder::degrevlex, a, b);
    return c;
}

Poly Poly::constant(RingPtr r, uint32_t c) {
    Poly out(r);
    c %= r->field.p();
    if (c) out.terms_.push_back({Expvec{}, c});
    return out;
}

Poly Poly::variable(RingPtr r, int idx, int power) {
    if (idx < 0 || idx >= r->nvars()) throw StructuralError("variable index out of range");
    Poly out(r);
    if (power < 0) throw StructuralError("negative power");
    Expvec m;
    m.e[idx] = uint16_t(power);
    out.terms_.push_back({m, 1});
    return out;
}

Poly Poly::monomial(RingPtr r, const Expvec& m, uint32_t c) {
    Poly out(r);
    c %= r->field.p();
    if (c) out.terms_.push_back({m, c});
    return out;
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    // canonical order is degree-compatible, so the first term is maximal
    return terms_.front().m.weighted_degree(*ring_);
}

bool Poly::is_homogeneous() const {
    if (terms_.size() <= 1) return true;
    int d = terms_.front().m.weighted_degree(*ring_);
    for (const Term& t : terms_)
        if (t.m.weighted_degree(*ring_) != d) return false;
    return true;
}

uint32_t Poly::constant_coeff() const {
    for (const Term& t : terms_)
        if (t.m.is_one()) return t.c;
    return 0;
}

Poly Poly::from_terms(RingPtr r, std::vector<Term> ts) {
    std::sort(ts.begin(), ts.end(), [&](const Term& a, const Term& b) {
        return cmp_canonical(*r, a.m, b.m) > 0;
    });
    Poly out(r);
    const PrimeField& F = r->field;
    for (auto& t : ts) {
        uint32_t c = t.c % F.p();
        if (!out.terms_.empty() && out.terms_.back().m == t.m)
            out.terms_.back().c = F.add(out.terms_.back().c, c);
        else
            out.terms_.push_back({t.m, c});
        if (!out.terms_.empty() && out.terms_.back().c == 0) out.terms_.pop_back();
    }
    return out;
}

Poly Poly::operator+(const Poly& o) const {
    const Ring& R = *ring_;
    Poly out(ring_);
    out.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = cmp_canonical(R, terms_[i].m, o.terms_[j].m);
        if (c > 0) out.terms_.push_back(terms_[i++]);
        else if (c < 0) out.terms_.push_back(o.terms_[j++]);
        else {
            uint32_t s = R.field.add(terms_[i].c, o.terms_[j].c);
            if (s) out.terms_.push_back({terms_[i].m, s});
            ++i; ++j;
        }
    }
    while (i < terms_.size()) out.terms_.push_back(terms_[i++]);
    while (j < o.terms_.size()) out.terms_.push_back(o.terms_[j++]);
    return out;
}

Poly Poly::operator-(const Poly& o) const {
    return *this + o.scaled(ring_->field.neg(1));
}

Poly Poly::scaled(uint32_t c) const {
    c %= ring_->field.p();
    Poly out(ring_);
    if (c == 0) return out;
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.c = ring_->field.mul(t.c, c);
    return out;
}

Poly Poly::mono_multiple(const Expvec& m, uint32_t c) const {
    c %= ring_->field.p();
    Poly out(ring_);
    if (c == 0) return out;
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_)
        out.terms_.push_back({Expvec::mul(t.m, m), ring_->field.mul(t.c, c)});
    return out;  // multiplying by a fixed monomial preserves the canonical order
}

Poly Poly::operator*(const Poly& o) const {
    std::vector<Term> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const Term& a : terms_)
        for (const Term& b : o.terms_)
            acc.push_back({Expvec::mul(a.m, b.m), uint32_t(uint64_t(a.c) * b.c % ring_->field.p())});
    return from_terms(ring_, std::move(acc));
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        if (!first) os << "+";
        first = false;
        bool printed = false;
        if (t.c != 1 || t.m.is_one()) { os << t.c; printed = true; }
        for (int i = 0; i < ring_->nvars(); ++i) {
            if (!t.m.e[i]) continue;
            if (printed) os << "*";
            os << ring_->var_names[i];
            if (t.m.e[i] > 1) os << "^" << t.m.e[i];
            printed = true;
        }
    }
    return os.str();
}

VecPoly vec_zero(RingPtr r, int rank) {
    return VecPoly(size_t(rank), Poly::zero(r));
}

bool vec_is_zero(const VecPoly& v) {
    for (const Poly& p : v) if (!p.is_zero()) return false;
    return true;
}

VecPoly vec_add(const VecPoly& a, const VecPoly& b) {
    assert(a.size() == b.size());
    VecPoly out;
    out.reserve(a.size());
    for (size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
    return out;
}

VecPoly vec_sub(const VecPoly& a, const VecPoly& b) {
    assert(a.size() == b.size());
    VecPoly out;
    out.reserve(a.size());
    for (size_t i = 0; i < a.size(); ++i) out.push_back(a[i] - b[i]);
    return out;
}

VecPoly vec_scale(const VecPoly& a, const Poly& f) {
    VecPoly out;
    out.reserve(a.size());
    for (const Poly& p : a) out.push_back(p * f);
    return out;
}

std::string vec_str(const VecPoly& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s + ")";
}

bool vec_is_homogeneous(const VecPoly& v, const std::vector<int>& shifts, int* degree_out) {
    int deg = -1;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (!v[i].is_homogeneous()) return false;
        int d = v[i].degree() + shifts[i];
        if (deg == -1) deg = d;
        else if (deg != d) return false;
    }
    if (degree_out) *degree_out = deg;
    return true;
}

// --------------------------- parsing ---------------------------------------

namespace {

struct PolyParser {
    RingPtr ring;
    const std::string& s;
    size_t pos = 0;

    void skip_ws() { while (pos < s.size() && std::isspace(uint8_t(s[pos]))) ++pos; }
    bool eof() { skip_ws(); return pos >= s.size(); }
    char peek() { skip_ws(); return pos < s.size() ? s[pos] : '\0'; }

    Poly parse_expr() {
        Poly acc = parse_term_signed();
        while (!eof()) {
            char c = peek();
            if (c == '+') { ++pos; acc = acc + parse_term(); }
            else if (c == '-') { ++pos; acc = acc - parse_term(); }
            else break;
        }
        return acc;
    }

    Poly parse_term_signed() {
        char c = peek();
        if (c == '-') { ++pos; return Poly::zero(ring) - parse_term(); }
        if (c == '+') ++pos;
        return parse_term();
    }

    Poly parse_term() {
        Poly acc = parse_factor();
        while (!eof()) {
            char c = peek();
            if (c == '*') { ++pos; acc = acc * parse_factor(); }
            else if (std::isalpha(uint8_t(c)) || c == '(') acc = acc * parse_factor();
            else break;
        }
        return acc;
    }

    Poly parse_factor() {
        skip_ws();
        if (pos >= s.size()) throw StructuralError("unexpected end of polynomial: " + s);
        char c = s[pos];
        Poly base(ring);
        if (c == '(') {
            ++pos;
            base = parse_expr();
            if (peek() != ')') throw StructuralError("missing ')' in polynomial: " + s);
            ++pos;
        } else if (std::isdigit(uint8_t(c))) {
            int64_t n = 0;
            while (pos < s.size() && std::isdigit(uint8_t(s[pos]))) {
                n = n * 10 + (s[pos] - '0');
                if (n > (int64_t(1) << 50)) n %= ring->field.p();
                ++pos;
            }
            base = Poly::constant(ring, ring->field.reduce(n));
        } else if (std::isalpha(uint8_t(c)) || c == '_') {
            size_t start = pos;
            while (pos < s.size() && (std::isalnum(uint8_t(s[pos])) || s[pos] == '_')) ++pos;
            std::string name = s.substr(start, pos - start);
            int idx = ring->var_index(name);
            if (idx < 0) throw StructuralError("unknown variable '" + name + "' in polynomial: " + s);
            base = Poly::variable(ring, idx);
        } else {
            throw StructuralError(std::string("unexpected character '") + c + "' in polynomial: " + s);
        }
        if (peek() == '^') {
            ++pos;
            skip_ws();
            if (pos >= s.size() || !std::isdigit(uint8_t(s[pos])))
                throw StructuralError("expected exponent in polynomial: " + s);
            int e = 0;
            while (pos < s.size() && std::isdigit(uint8_t(s[pos]))) {
                e = e * 10 + (s[pos] - '0');
                if (e > 60000) throw StructuralError("exponent too large");
                ++pos;
            }
            Poly out = Poly::constant(ring, 1);
            for (int i = 0; i < e; ++i) out = out * base;
            base = out;
        }
        return base;
    }
};

}  // namespace

Poly parse_poly(RingPtr r, const std::string& text) {
    PolyParser p{r, text};
    if (p.eof()) throw StructuralError("empty polynomial");
    Poly out = p.parse_expr();
    if (!p.eof()) throw StructuralError("trailing characters in polynomial: " + text);
    return out;
}

}  // namespace cicalc
