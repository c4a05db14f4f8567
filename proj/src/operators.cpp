#include "cicalc/operators.hpp"

#include <random>
#include <sstream>

namespace cicalc {

OperatorSet eisenbud_operators(const FreeResolution& res) {
    const CIRingPtr& A = res.ring;
    const RingPtr& P = A->ambient();
    const int c = A->codim();
    OperatorSet out;
    out.res = &res;
    // divider for the defining ideal with representation tracking
    GroebnerBasis fdiv(P, 1, ModOrder{});
    fdiv.enable_rep_tracking(c);
    {
        std::vector<VecPoly> fg;
        for (const Poly& g : A->f()) fg.push_back({g});
        fdiv.add(fg);
    }
    out.t.assign(size_t(c), std::vector<std::vector<VecPoly>>(size_t(res.cutoff) + 1));
    for (int i = 2; i <= res.cutoff; ++i) {
        const auto& d_hi = res.diff[size_t(i)];      // F_i -> F_{i-1}
        const auto& d_lo = res.diff[size_t(i) - 1];  // F_{i-1} -> F_{i-2}
        int rank_lo = res.betti(i - 2);
        for (int j = 0; j < c; ++j)
            out.t[size_t(j)][size_t(i)].assign(d_hi.size(), vec_zero(P, rank_lo));
        for (size_t col = 0; col < d_hi.size(); ++col) {
            // composite column over P
            VecPoly comp = vec_zero(P, rank_lo);
            for (int l = 0; l < res.betti(i - 1); ++l)
                comp = vec_add(comp, vec_scale(d_lo[size_t(l)], d_hi[col][size_t(l)]));
            for (int row = 0; row < rank_lo; ++row) {
                const Poly& entry = comp[size_t(row)];
                if (entry.is_zero()) continue;
                std::vector<MPoly> cofs;
                MPoly rem = fdiv.divide(to_mpoly(*P, fdiv.order(), {entry}), &cofs);
                if (!rem.empty())
                    throw StructuralError("lifted differential square is not in (f)");
                // map cofactors through the tracked representations
                std::vector<Poly> by_input(size_t(c), Poly::zero(P));
                const auto& reps = fdiv.reps();
                for (size_t k = 0; k < cofs.size(); ++k) {
                    if (cofs[k].empty()) continue;
                    Poly q = from_mpoly(P, 1, cofs[k])[0];
                    for (const MTerm& rt : reps[k]) {
                        Poly contrib = q * Poly::monomial(P, rt.m, rt.c);
                        by_input[size_t(rt.comp)] = by_input[size_t(rt.comp)] + contrib;
                    }
                }
                for (int j = 0; j < c; ++j)
                    out.t[size_t(j)][size_t(i)][col][size_t(row)] = by_input[size_t(j)];
            }
        }
    }
    out.verify();
    return out;
}

void OperatorSet::verify() const {
    const FreeResolution& R = *res;
    const CIRingPtr& A = R.ring;
    const RingPtr& P = A->ambient();
    const int c = A->codim();
    // composite equals sum f_j t_j exactly over P
    for (int i = 2; i <= R.cutoff; ++i) {
        const auto& d_hi = R.diff[size_t(i)];
        const auto& d_lo = R.diff[size_t(i) - 1];
        for (size_t col = 0; col < d_hi.size(); ++col) {
            VecPoly comp = vec_zero(P, R.betti(i - 2));
            for (int l = 0; l < R.betti(i - 1); ++l)
                comp = vec_add(comp, vec_scale(d_lo[size_t(l)], d_hi[col][size_t(l)]));
            VecPoly sum = vec_zero(P, R.betti(i - 2));
            for (int j = 0; j < c; ++j)
                sum = vec_add(sum, vec_scale(t[size_t(j)][size_t(i)][col], A->f()[size_t(j)]));
            if (!vec_is_zero(vec_sub(comp, sum)))
                throw StructuralError("operator splitting identity fails over the ambient ring");
        }
    }
    // commutation with the differential over A
    for (int i = 3; i <= R.cutoff; ++i) {
        for (int j = 0; j < c; ++j) {
            const auto& t_hi = t[size_t(j)][size_t(i)];      // F_i -> F_{i-2}
            const auto& t_lo = t[size_t(j)][size_t(i) - 1];  // F_{i-1} -> F_{i-3}
            const auto& d_i = R.diff[size_t(i)];
            const auto& d_lo2 = R.diff[size_t(i) - 2];       // F_{i-2} -> F_{i-3}
            for (int col = 0; col < R.betti(i); ++col) {
                VecPoly a = vec_zero(P, R.betti(i - 3));
                for (int l = 0; l < R.betti(i - 2); ++l)
                    a = vec_add(a, vec_scale(d_lo2[size_t(l)], t_hi[size_t(col)][size_t(l)]));
                VecPoly b = vec_zero(P, R.betti(i - 3));
                for (int l = 0; l < R.betti(i - 1); ++l)
                    b = vec_add(b, vec_scale(t_lo[size_t(l)], d_i[size_t(col)][size_t(l)]));
                if (!vec_is_zero(A->nf(vec_sub(a, b))))
                    throw StructuralError("operator does not commute with the differential");
            }
        }
    }
}

RingPtr operator_ring(const CIRingPtr& A) {
    std::vector<std::string> names;
    std::vector<int> weights;
    for (int j = 1; j <= A->codim(); ++j) {
        names.push_back("t" + std::to_string(j));
        weights.push_back(2);
    }
    return Ring::make(A->p(), names, weights);
}

FpMatrix ExtSModule::monomial_action(const Expvec& alpha, int from_piece) const {
    const PrimeField& F = S->field;
    int e = 0;
    for (int j = 0; j < S->nvars(); ++j) e += alpha.e[size_t(j)];
    FpMatrix acc(F, piece_dim[size_t(from_piece)], piece_dim[size_t(from_piece)]);
    for (int r = 0; r < acc.rows(); ++r) acc.at(r, r) = 1;
    int at = from_piece;
    for (int j = 0; j < S->nvars(); ++j)
        for (int k = 0; k < alpha.e[size_t(j)]; ++k) {
            acc = action[size_t(j)][size_t(at)].multiplied(acc);
            at += 2;
        }
    (void)e;
    return acc;
}

ExtSModule ext_k_module(const FreeResolution& res, const OperatorSet& ops) {
    const CIRingPtr& A = res.ring;
    const PrimeField& F = A->ambient()->field;
    const int c = A->codim();
    ExtSModule out;
    out.A = A;
    out.S = operator_ring(A);
    out.cutoff = res.cutoff;
    for (int i = 0; i <= res.cutoff; ++i) out.piece_dim.push_back(res.betti(i));
    out.action.assign(size_t(c), {});
    for (int j = 0; j < c; ++j) {
        for (int i = 0; i <= res.cutoff; ++i) {
            int rows = (i + 2 <= res.cutoff) ? res.betti(i + 2) : 0;
            FpMatrix m(F, rows, res.betti(i));
            if (i + 2 <= res.cutoff) {
                const auto& cols = ops.t[size_t(j)][size_t(i) + 2];  // F_{i+2} -> F_i
                for (int b = 0; b < res.betti(i + 2); ++b)
                    for (int a = 0; a < res.betti(i); ++a) {
                        // transpose of the scalar part
                        m.at(b, a) = cols[size_t(b)][size_t(a)].constant_coeff();
                    }
            }
            out.action[size_t(j)].push_back(std::move(m));
        }
    }
    // commutation of the induced actions, exact on the window
    for (int j = 0; j < c; ++j)
        for (int l = j + 1; l < c; ++l)
            for (int i = 0; i + 4 <= res.cutoff; ++i) {
                FpMatrix ab = out.action[size_t(j)][size_t(i) + 2].multiplied(
                    out.action[size_t(l)][size_t(i)]);
                FpMatrix ba = out.action[size_t(l)][size_t(i) + 2].multiplied(
                    out.action[size_t(j)][size_t(i)]);
                for (int r = 0; r < ab.rows(); ++r)
                    for (int cc = 0; cc < ab.cols(); ++cc)
                        if (ab.at(r, cc) != ba.at(r, cc))
                            throw StructuralError("induced operator actions fail to commute");
            }
    // generation: piece i is reached by the degree-one action from piece i-2
    auto reached_from_below = [&](int i) {
        if (out.piece_dim[size_t(i)] == 0) return true;
        int src = i - 2;
        if (src < 0 || out.piece_dim[size_t(src)] == 0) return false;
        FpMatrix stacked(F, out.piece_dim[size_t(i)], c * out.piece_dim[size_t(src)]);
        for (int j = 0; j < c; ++j) {
            const FpMatrix& m = out.action[size_t(j)][size_t(src)];
            for (int r = 0; r < m.rows(); ++r)
                for (int cc = 0; cc < m.cols(); ++cc)
                    stacked.at(r, j * out.piece_dim[size_t(src)] + cc) = m.at(r, cc);
        }
        return stacked.rank() == out.piece_dim[size_t(i)];
    };
    out.generation_degree = -1;
    for (int g = 0; g + 2 <= res.cutoff; ++g) {
        bool ok = true;
        for (int i = g + 1; i <= res.cutoff; ++i)
            if (!reached_from_below(i)) {
                ok = false;
                break;
            }
        if (ok) {
            out.generation_degree = g;
            break;
        }
    }
    return out;
}

ExtSModule ext_k_module(const ModulePresentation& M, int cutoff) {
    FreeResolution res = minimal_resolution(M, cutoff);
    OperatorSet ops = eisenbud_operators(res);
    return ext_k_module(res, ops);
}

namespace {

void enumerate_degree(int nvars, int deg, int var, Expvec& cur, std::vector<Expvec>& out) {
    if (var == nvars - 1) {
        cur.e[size_t(var)] = uint16_t(deg);
        out.push_back(cur);
        cur.e[size_t(var)] = 0;
        return;
    }
    for (int e = 0; e <= deg; ++e) {
        cur.e[size_t(var)] = uint16_t(e);
        enumerate_degree(nvars, deg - e, var + 1, cur, out);
    }
    cur.e[size_t(var)] = 0;
}

std::vector<Expvec> monomials_of_t_degree(int nvars, int deg) {
    std::vector<Expvec> out;
    if (nvars == 0) return out;
    Expvec cur;
    enumerate_degree(nvars, deg, 0, cur, out);
    return out;
}

std::vector<Poly> reduced_ideal_gens(const RingPtr& S, const std::vector<Poly>& gens) {
    std::vector<VecPoly> vs;
    for (const Poly& g : gens)
        if (!g.is_zero()) vs.push_back({g});
    GroebnerBasis gb = groebner(S, 1, vs);
    std::vector<Poly> out;
    for (const VecPoly& v : gb.element_vectors()) out.push_back(v[0]);
    return out;
}

}  // namespace

std::vector<Poly> annihilator_on_window(const ExtSModule& E, int lo, int hi) {
    const RingPtr& S = E.S;
    const PrimeField& F = S->field;
    const int c = S->nvars();
    bool all_zero = true;
    for (int i = lo; i <= hi && i <= E.cutoff; ++i)
        if (E.piece_dim[size_t(i)] != 0) all_zero = false;
    if (all_zero) {
        std::vector<Poly> out;
        for (int j = 0; j < c; ++j) out.push_back(Poly::variable(S, j));
        return out;
    }
    std::vector<Poly> gens;
    for (int e = 1; 2 * e <= hi - lo; ++e) {
        std::vector<Expvec> monos = monomials_of_t_degree(c, e);
        // count equations
        int eq = 0;
        for (int i = lo; i + 2 * e <= hi; ++i)
            eq += E.piece_dim[size_t(i)] * E.piece_dim[size_t(i + 2 * e)];
        if (eq == 0) continue;
        FpMatrix sys(F, eq, int(monos.size()));
        int row0 = 0;
        for (int i = lo; i + 2 * e <= hi; ++i) {
            int rows = E.piece_dim[size_t(i + 2 * e)];
            int cols = E.piece_dim[size_t(i)];
            if (rows * cols == 0) continue;
            for (size_t a = 0; a < monos.size(); ++a) {
                FpMatrix act = E.monomial_action(monos[a], i);
                for (int r = 0; r < rows; ++r)
                    for (int cc = 0; cc < cols; ++cc)
                        sys.at(row0 + r * cols + cc, int(a)) = act.at(r, cc);
            }
            row0 += rows * cols;
        }
        for (const auto& ker : sys.kernel_basis()) {
            std::vector<Term> ts;
            for (size_t a = 0; a < monos.size(); ++a)
                if (ker[a]) ts.push_back({monos[a], ker[a]});
            gens.push_back(Poly::from_terms(S, ts));
        }
    }
    return reduced_ideal_gens(S, gens);
}

namespace {

VarietyIdeal variety_from_ext(const ExtSModule& E, int burn_in, int cutoff) {
    VarietyIdeal out;
    out.S = E.S;
    out.p = E.S->field.p();
    std::vector<Poly> j1 = annihilator_on_window(E, burn_in, cutoff - 2);
    std::vector<Poly> j2 = annihilator_on_window(E, burn_in + 2, cutoff);
    if (!ideal_equal(E.S, j1, j2)) {
        out.inconclusive = true;
        out.gens = j1;
        out.alt_gens = j2;
    } else {
        out.gens = j1;
    }
    out.dim = ideal_quotient_dim(E.S, out.gens);
    return out;
}

}  // namespace

VarietyIdeal support_variety(const ModulePresentation& M, int burn_in, int cutoff) {
    ExtSModule E = ext_k_module(M, cutoff);
    return variety_from_ext(E, burn_in, cutoff);
}

VarietyIdeal support_variety_pair(const ModulePresentation& M, const ModulePresentation& N,
                                  int burn_in, int cutoff) {
    // N must be a k-vector space (the irrelevant ideal acts as zero)
    {
        GroebnerBasis gb = N.relation_gb();
        for (int v = 0; v < N.ring()->ambient()->nvars(); ++v)
            for (int l = 0; l < N.rank(); ++l) {
                VecPoly probe = vec_zero(N.ring()->ambient(), N.rank());
                probe[size_t(l)] = Poly::variable(N.ring()->ambient(), v);
                if (!gb.contains(probe))
                    throw StructuralError(
                        "pair varieties are supported only for targets killed by the "
                        "irrelevant ideal");
            }
    }
    // Hom(F_i, N) has zero differentials for a minimal resolution, so the
    // pieces are b_i copies of N and the actions are block copies
    FreeResolution res = minimal_resolution(M, cutoff);
    OperatorSet ops = eisenbud_operators(res);
    ExtSModule base = ext_k_module(res, ops);
    int copies = 0;
    {
        HilbertSeries hs = N.series();
        if (!hs.is_finite_length()) throw NotFiniteLengthError("pair target must be finite");
        copies = int(hs.length());
    }
    ExtSModule blown = base;
    for (auto& d : blown.piece_dim) d *= copies;
    const PrimeField& F = base.S->field;
    for (int j = 0; j < base.S->nvars(); ++j)
        for (size_t i = 0; i < base.action[size_t(j)].size(); ++i) {
            const FpMatrix& m = base.action[size_t(j)][i];
            FpMatrix big(F, m.rows() * copies, m.cols() * copies);
            for (int s = 0; s < copies; ++s)
                for (int r = 0; r < m.rows(); ++r)
                    for (int cc = 0; cc < m.cols(); ++cc)
                        big.at(s * m.rows() + r, s * m.cols() + cc) = m.at(r, cc);
            blown.action[size_t(j)][i] = std::move(big);
        }
    return variety_from_ext(blown, burn_in, cutoff);
}

ComplexityReport complexity(const ModulePresentation& M, int burn_in, int cutoff) {
    FreeResolution res = minimal_resolution(M, cutoff);
    OperatorSet ops = eisenbud_operators(res);
    ExtSModule E = ext_k_module(res, ops);
    VarietyIdeal V = variety_from_ext(E, burn_in, cutoff);
    ComplexityReport out;
    out.via_variety = std::max(V.dim, 0);  // empty/irrelevant variety means complexity 0
    if (V.dim < 0) out.via_variety = 0;
    // betti growth: even/odd tails fit separately
    std::vector<int64_t> evens, odds;
    for (int i = 0; i <= cutoff; ++i)
        (i % 2 == 0 ? evens : odds).push_back(res.betti(i));
    FitResult fe = fit_poly_degree(evens, (burn_in + 1) / 2);
    FitResult fo = fit_poly_degree(odds, (burn_in + 1) / 2);
    if (!fe.ok || !fo.ok) throw InconclusiveFit("betti growth fit failed");
    int deg = -1;  // -1 encodes -infinity here
    if (!fe.neg_inf) deg = std::max(deg, fe.degree);
    if (!fo.neg_inf) deg = std::max(deg, fo.degree);
    out.via_betti = deg + 1;
    out.value = out.via_variety;
    out.agreed = (out.via_betti == out.via_variety);
    return out;
}

IdealVarietyFamily stable_ideal_variety(const IdealData& I, int n_max, int burn_in, int cutoff) {
    IdealVarietyFamily fam;
    const CIRingPtr& A = I.ring();
    for (int n = 1; n <= n_max; ++n) {
        ModulePresentation Mn = ModulePresentation::cyclic(A, I.power(n));
        fam.per_power.push_back(support_variety(Mn, burn_in, cutoff));
    }
    const RingPtr& S = fam.per_power.front().S;
    int s = n_max;
    for (int n = n_max - 1; n >= 1; --n) {
        if (ideal_equal(S, fam.per_power[size_t(n) - 1].gens, fam.per_power.back().gens))
            s = n;
        else
            break;
    }
    fam.stable = fam.per_power.back();
    fam.stable.stabilization_index = s;
    fam.stabilized = (n_max - s + 1 >= 3);
    if (!fam.stabilized) fam.stable.inconclusive = true;
    return fam;
}

VarietyIdeal total_ideal_variety(const IdealData& I, int n_max, int burn_in, int cutoff) {
    IdealVarietyFamily fam = stable_ideal_variety(I, n_max, burn_in, cutoff);
    const RingPtr& S = fam.stable.S;
    int upto = fam.stable.stabilization_index > 0 ? fam.stable.stabilization_index : n_max;
    std::vector<Poly> acc = fam.per_power[0].gens;
    for (int n = 2; n <= upto; ++n)
        acc = ideal_intersection(S, acc, fam.per_power[size_t(n) - 1].gens);
    VarietyIdeal out;
    out.S = S;
    out.p = S->field.p();
    out.gens = reduced_ideal_gens(S, acc);
    out.dim = ideal_quotient_dim(S, out.gens);
    out.stabilization_index = fam.stable.stabilization_index;
    out.inconclusive = fam.stable.inconclusive;
    return out;
}

std::vector<Poly> ideal_sum(const RingPtr& S, const std::vector<Poly>& a,
                            const std::vector<Poly>& b) {
    std::vector<Poly> all = a;
    all.insert(all.end(), b.begin(), b.end());
    return reduced_ideal_gens(S, all);
}

std::vector<Poly> ideal_intersection(const RingPtr& S, const std::vector<Poly>& a,
                                     const std::vector<Poly>& b) {
    std::vector<VecPoly> va, vb;
    for (const Poly& g : a) va.push_back({g});
    for (const Poly& g : b) vb.push_back({g});
    auto meet = intersect_submodules(S, 1, va, vb);
    std::vector<Poly> out;
    for (const VecPoly& v : meet) out.push_back(v[0]);
    return reduced_ideal_gens(S, out);
}

int ideal_quotient_dim(const RingPtr& S, const std::vector<Poly>& gens) {
    std::vector<VecPoly> vs;
    for (const Poly& g : gens) vs.push_back({g});
    GroebnerBasis gb = groebner(S, 1, vs);
    return hilbert_series_of_quotient(gb, {0}).dimension();
}

bool in_radical(const RingPtr& S, const Poly& g, const std::vector<Poly>& ideal) {
    if (g.is_zero()) return true;
    // Rabinowitsch: 1 in ideal + (1 - y.g) over S[y]
    std::vector<std::string> names = S->var_names;
    names.push_back("_y");
    std::vector<int> weights = S->weights;
    weights.push_back(1);
    RingPtr Sy = Ring::make(S->field.p(), names, weights);
    auto lift = [&](const Poly& q) {
        std::vector<Term> ts;
        for (const Term& t : q.terms()) ts.push_back(t);
        return Poly::from_terms(Sy, ts);
    };
    std::vector<VecPoly> gens;
    for (const Poly& q : ideal) gens.push_back({lift(q)});
    Poly y = Poly::variable(Sy, Sy->nvars() - 1);
    gens.push_back({Poly::constant(Sy, 1) - y * lift(g)});
    GroebnerBasis gb = groebner(Sy, 1, gens);
    return gb.contains({Poly::constant(Sy, 1)});
}

bool radical_equal(const RingPtr& S, const std::vector<Poly>& a, const std::vector<Poly>& b) {
    for (const Poly& g : a)
        if (!in_radical(S, g, b)) return false;
    for (const Poly& g : b)
        if (!in_radical(S, g, a)) return false;
    return true;
}

bool ideal_equal(const RingPtr& S, const std::vector<Poly>& a, const std::vector<Poly>& b) {
    std::vector<VecPoly> va, vb;
    for (const Poly& g : a) va.push_back({g});
    for (const Poly& g : b) vb.push_back({g});
    return submodules_equal(S, 1, va, vb);
}

std::string VarietyIdeal::describe() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < gens.size(); ++i) {
        if (i) os << ", ";
        os << gens[i].str();
    }
    os << "), dim " << dim;
    return os.str();
}

ComplexityReduction reduce_complexity(const ModulePresentation& M, int cutoff, uint64_t seed,
                                      int burn_in, int retry_budget) {
    const CIRingPtr& A = M.ring();
    const RingPtr& P = A->ambient();
    const int c = A->codim();
    ComplexityReport cx = complexity(M, burn_in, cutoff);
    if (cx.value <= 1)
        throw ComplexityTooLowError("complexity " + std::to_string(cx.value) +
                                    " admits no reduction step");
    FreeResolution res = minimal_resolution(M, cutoff);
    OperatorSet ops = eisenbud_operators(res);
    std::mt19937_64 rng(seed);
    const int i0 = burn_in;
    ComplexityReduction out;
    for (int attempt = 1; attempt <= retry_budget; ++attempt) {
        std::vector<uint32_t> beta;
        beta.resize(size_t(c));
        for (auto& b : beta) b = uint32_t(rng() % A->p());
        bool nonzero = false;
        for (auto b : beta) nonzero |= (b != 0);
        if (!nonzero) continue;
        // chain map v = sum beta_j t_j : F_{i} -> F_{i-2}
        auto v_columns = [&](int i) {
            std::vector<VecPoly> cols(size_t(res.betti(i)), vec_zero(P, res.betti(i - 2)));
            for (int j = 0; j < c; ++j) {
                if (!beta[size_t(j)]) continue;
                const auto& tj = ops.t[size_t(j)][size_t(i)];
                for (int col = 0; col < res.betti(i); ++col)
                    cols[size_t(col)] =
                        vec_add(cols[size_t(col)],
                                vec_scale(tj[size_t(col)], Poly::constant(P, beta[size_t(j)])));
            }
            for (auto& colv : cols) colv = A->nf(colv);
            return cols;
        };
        bool surjective = true;
        for (int i = i0 + 2; i <= cutoff && surjective; ++i) {
            auto cols = v_columns(i);
            std::vector<VecPoly> gens = cols;
            auto fc = A->relation_columns(res.betti(i - 2));
            gens.insert(gens.end(), fc.begin(), fc.end());
            GroebnerBasis gb(P, res.betti(i - 2), ModOrder{});
            gb.add(gens);
            for (const VecPoly& e : standard_basis(P, res.betti(i - 2)))
                if (!gb.contains(e)) {
                    surjective = false;
                    break;
                }
        }
        out.attempts = attempt;
        if (!surjective) continue;
        // induced map on syzygy modules M_{i0+2} -> M_{i0}
        ModuleMap q;
        q.src = res.syzygy_module(i0 + 2);
        q.dst = res.syzygy_module(i0);
        q.cols = v_columns(i0 + 2);
        q.deg_shift = -A->f()[0].degree();
        if (!q.is_well_defined())
            throw StructuralError("operator chain map is not well defined on syzygies");
        if (!q.is_surjective())
            throw StructuralError("chain map surjective on free covers but not on syzygies");
        out.K = kernel_presentation(q).minimalized();
        out.window_start = i0;
        out.operator_coeffs = beta;
        // betti difference invariant on the window
        int span = cutoff - (i0 + 2) - 1;
        if (span >= 2) {
            FreeResolution kres = minimal_resolution(out.K, span);
            for (int jj = 0; jj <= span; ++jj) {
                int expect = res.betti(i0 + 2 + jj) - res.betti(i0 + jj);
                if (expect < 0)
                    throw StructuralError("negative betti difference contradicts surjectivity");
                out.betti_differences.push_back(expect);
                if (kres.betti(jj) != expect)
                    throw StructuralError("kernel betti numbers disagree with the rank count");
            }
            // syzygy step: Omega^1 of the kernel is the next kernel
            ModuleMap q1;
            q1.src = res.syzygy_module(i0 + 3);
            q1.dst = res.syzygy_module(i0 + 1);
            q1.cols = v_columns(i0 + 3);
            ModulePresentation K1 = kernel_presentation(q1).minimalized();
            out.syzygy_step_verified =
                stably_isomorphic_heuristic(kres.syzygy_module(1), K1, 12, true);
        }
        return out;
    }
    std::ostringstream os;
    os << "no surjective degree-2 operator found after " << retry_budget
       << " draws (seed " << seed << ")";
    throw GenericityFailure(os.str());
}

}  // namespace cicalc
