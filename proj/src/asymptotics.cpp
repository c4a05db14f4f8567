#include "cicalc/asymptotics.hpp"

#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

namespace cicalc {

bool LengthTable::all_zero() const {
    for (const auto& r : cells)
        for (int64_t v : r)
            if (v) return false;
    return true;
}

std::string LengthTable::csv() const {
    std::ostringstream os;
    os << "i\\n";
    for (int n = 1; n <= n_max; ++n) os << "," << n;
    os << "\n";
    for (int i = 1; i <= i_max; ++i) {
        os << i;
        for (int n = 1; n <= n_max; ++n) os << "," << at(i, n);
        os << "\n";
    }
    return os.str();
}

namespace {

void run_parallel(int jobs, int tasks, const std::function<void(int)>& body) {
    if (jobs <= 1 || tasks <= 1) {
        for (int t = 0; t < tasks; ++t) body(t);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    int workers = std::min(jobs, tasks);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                int t = next.fetch_add(1);
                if (t >= tasks) return;
                body(t);
            }
        });
    for (auto& th : pool) th.join();
}

LengthTable build_table(const ModulePresentation& M, const IdealData& I, int i_max, int n_max,
                        const TableOptions& opts, bool tor) {
    if (!I.is_m_primary())
        throw StructuralError("length tables require an ideal primary to the irrelevant ideal");
    LengthTable out;
    out.i_max = i_max;
    out.n_max = n_max;
    out.cells.assign(size_t(i_max), std::vector<int64_t>(size_t(n_max), 0));
    FreeResolution res = opts.minimal ? minimal_resolution(M, i_max + 1, opts.order)
                                      : nonminimal_resolution(M, i_max + 1, opts.order);
    const CIRingPtr& A = M.ring();
    I.power(n_max);  // fill the cache before fanning out
    // one finite target per power; columns are independent
    run_parallel(opts.jobs, n_max, [&](int idx) {
        int n = idx + 1;
        ModulePresentation N = ModulePresentation::cyclic(A, I.power(n));
        FiniteModuleBasis nb(N, opts.order);
        std::vector<int64_t> col = tor ? tor_lengths_upto(res, nb, i_max)
                                       : ext_lengths_upto(res, nb, i_max);
        for (int i = 1; i <= i_max; ++i) out.cells[size_t(i) - 1][size_t(n) - 1] = col[size_t(i)];
    });
    return out;
}

}  // namespace

LengthTable ext_length_table(const ModulePresentation& M, const IdealData& I, int i_max,
                             int n_max, const TableOptions& opts) {
    return build_table(M, I, i_max, n_max, opts, /*tor=*/false);
}

LengthTable tor_length_table(const ModulePresentation& M, const IdealData& I, int i_max,
                             int n_max, const TableOptions& opts) {
    return build_table(M, I, i_max, n_max, opts, /*tor=*/true);
}

Deg fit_psi(const std::vector<int64_t>& row, int burn_in, int* window_start) {
    FitResult fr = fit_poly_degree(row, burn_in);
    if (!fr.ok) throw InconclusiveFit(fr.flag);
    if (window_start) *window_start = fr.window_start;
    return fr.neg_inf ? Deg::minus_infinity() : Deg::of(fr.degree);
}

PsiReport r_invariants_from_table(const LengthTable& table, int burn_in_n, int burn_in_i) {
    PsiReport rep;
    rep.i_max = table.i_max;
    rep.n_max = table.n_max;
    rep.burn_in_n = burn_in_n;
    rep.burn_in_i = burn_in_i;
    for (int i = 1; i <= table.i_max; ++i) {
        int ws = 0;
        // burn-in counts table columns n = 1.. so index burn_in_n - 1
        Deg d = fit_psi(table.row(i), burn_in_n - 1, &ws);
        rep.psi.push_back(d);
        rep.fit_window_starts.push_back(ws + 1);  // as an n-value
    }
    // even/odd tail constancy past the homological burn-in, window >= 3
    auto tail = [&](int parity) {
        std::vector<Deg> vals;
        for (int i = burn_in_i; i <= table.i_max; ++i)
            if (i % 2 == parity) vals.push_back(rep.psi[size_t(i) - 1]);
        return vals;
    };
    auto constant = [](const std::vector<Deg>& v, Deg* out) {
        // best estimate even when unconfirmed; the caller sees the alarm flag
        if (!v.empty()) *out = v.back();
        if (v.size() < 3) return false;
        for (const Deg& d : v)
            if (!(d == v.front())) return false;
        return true;
    };
    rep.even_tail_constant = constant(tail(0), &rep.r0);
    rep.odd_tail_constant = constant(tail(1), &rep.r1);
    if (!rep.even_tail_constant)
        rep.flags.push_back("even psi tail not constant on the window");
    if (!rep.odd_tail_constant) rep.flags.push_back("odd psi tail not constant on the window");
    rep.r = Deg::max(rep.r0, rep.r1);
    return rep;
}

PsiReport r_invariants(const ModulePresentation& M, const IdealData& I, int i_max, int n_max,
                       int burn_in_n, int burn_in_i, const TableOptions& opts) {
    LengthTable t = ext_length_table(M, I, i_max, n_max, opts);
    return r_invariants_from_table(t, burn_in_n, burn_in_i);
}

EquivalenceReport check_equivalences(const ModulePresentation& M, const IdealData& I, int i_max,
                                     int n_max, int burn_in_n, int burn_in_i,
                                     int variety_cutoff) {
    EquivalenceReport rep;
    LengthTable table = ext_length_table(M, I, i_max, n_max);
    PsiReport psi = r_invariants_from_table(table, burn_in_n, burn_in_i);
    if (!psi.tails_ok()) rep.flags.push_back("psi tails inconclusive");
    rep.r_is_minus_infinity = psi.r.neg_inf;

    // (ii) every high row eventually vanishes (needs >= 2 vanishing columns)
    rep.rowwise_vanishing = true;
    for (int i = burn_in_i; i <= i_max; ++i) {
        bool ok = table.at(i, n_max) == 0 && table.at(i, n_max - 1) == 0;
        if (!ok) rep.rowwise_vanishing = false;
    }
    // (iii) a vanishing corner block of size >= 3 x 3
    rep.uniform_vanishing = false;
    for (int i0 = burn_in_i; i0 + 2 <= i_max && !rep.uniform_vanishing; ++i0)
        for (int n0 = 1; n0 + 2 <= n_max && !rep.uniform_vanishing; ++n0) {
            bool zero = true;
            for (int i = i0; i <= i_max && zero; ++i)
                for (int n = n0; n <= n_max && zero; ++n)
                    if (table.at(i, n) != 0) zero = false;
            if (zero) rep.uniform_vanishing = true;
        }
    // (iv) stable ideal variety meets the module variety only at the origin
    IdealVarietyFamily fam = stable_ideal_variety(I, std::max(4, burn_in_n + 2), burn_in_i - 1,
                                                  variety_cutoff);
    if (!fam.stabilized) rep.flags.push_back("ideal variety family not visibly stabilized");
    rep.stabilization_index = fam.stable.stabilization_index;
    VarietyIdeal vm = support_variety(M, burn_in_i - 1, variety_cutoff);
    if (vm.inconclusive) rep.flags.push_back("module variety windows disagree");
    auto sum = ideal_sum(vm.S, vm.gens, fam.stable.gens);
    rep.variety_meets_origin_only = (ideal_quotient_dim(vm.S, sum) <= 0);
    // (v) Tor vanishing past the stabilization index
    LengthTable tor = tor_length_table(M, I, i_max, n_max);
    rep.tor_vanishes_past_index = true;
    int t0 = std::max(1, rep.stabilization_index);
    for (int i = 1; i <= i_max; ++i)
        for (int n = t0; n <= n_max; ++n)
            if (tor.at(i, n) != 0) rep.tor_vanishes_past_index = false;
    rep.all_equal = (rep.r_is_minus_infinity == rep.rowwise_vanishing) &&
                    (rep.r_is_minus_infinity == rep.uniform_vanishing) &&
                    (rep.r_is_minus_infinity == rep.variety_meets_origin_only) &&
                    (rep.r_is_minus_infinity == rep.tor_vanishes_past_index);
    return rep;
}

ModxReport psi_under_modx(const ModulePresentation& M, const IdealData& I, const Poly& x,
                          int i_max, int n_max) {
    const CIRingPtr& A = M.ring();
    Poly xn = A->nf(x);
    if (!M.is_regular_element(xn))
        throw RegularSequenceError("element is not regular on the module");
    ModxReport rep;
    LengthTable tm = ext_length_table(M, I, i_max, n_max);
    PsiReport pm = r_invariants_from_table(tm, 2, 3);
    ModulePresentation Mx = M.quotient_by_element(xn);
    LengthTable tx = ext_length_table(Mx, I, i_max, n_max);
    PsiReport px = r_invariants_from_table(tx, 2, 3);
    rep.formula_holds = true;
    for (int i = 3; i <= i_max; ++i) {
        Deg lhs = px.psi[size_t(i) - 1];
        Deg rhs = Deg::max(pm.psi[size_t(i) - 2], pm.psi[size_t(i) - 1]);
        rep.lhs.push_back(lhs);
        rep.rhs.push_back(rhs);
        if (!(lhs == rhs)) rep.formula_holds = false;
    }
    McmApproxData ap = mcm_approx(M, {xn});
    PsiReport pd = r_invariants(ap.V, I, i_max, n_max);
    rep.r_M = pm.r;
    rep.r_D = pd.r;
    rep.r_matches = (pd.r == pm.r);
    return rep;
}

DescentReport psi_superficial_descent(const ModulePresentation& M, const IdealData& I,
                                      const Poly& x, int i_max, int n_max) {
    DescentReport rep;
    PsiReport up = r_invariants(M, I, i_max, n_max);
    rep.r_upstairs = up.r;
    if (!up.r.neg_inf) {
        rep.applicable = false;
        rep.skip_reason = "r-invariant upstairs is finite; descent precondition fails";
        return rep;
    }
    rep.applicable = true;
    QuotientMap qm = quotient_by_regular_element(M.ring(), x, /*allow_dim_zero=*/true);
    std::vector<Poly> jgens;
    for (const Poly& g : I.gens()) {
        Poly h = qm.apply(g);
        if (!h.is_zero()) jgens.push_back(h);
    }
    IdealData J(qm.target, jgens);
    ModulePresentation N = M.transport(qm);
    PsiReport down = r_invariants(N, J, i_max, n_max);
    rep.r_downstairs = down.r;
    rep.holds = down.r.neg_inf;
    return rep;
}

}  // namespace cicalc
