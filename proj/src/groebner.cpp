#include "cicalc/groebner.hpp"

namespace cicalc {

MPoly to_mpoly(const Ring& r, const ModOrder& o, const VecPoly& v) {
    MPoly out;
    for (int comp = 0; comp < int(v.size()); ++comp)
        for (const Term& t : v[comp].terms())
            out.push_back({comp, t.m, t.c});
    std::sort(out.begin(), out.end(), [&](const MTerm& a, const MTerm& b) {
        return o.cmp(r, a.comp, a.m, b.comp, b.m) > 0;
    });
    return out;
}

VecPoly from_mpoly(RingPtr r, int rank, const MPoly& p) {
    std::vector<std::vector<Term>> comps;
    comps.resize(size_t(rank));
    for (const MTerm& t : p) comps[size_t(t.comp)].push_back({t.m, t.c});
    VecPoly out;
    out.reserve(size_t(rank));
    for (auto& ts : comps) out.push_back(Poly::from_terms(r, std::move(ts)));
    return out;
}

namespace {

// a -= c * x^m * b, merging sorted term lists; b is monic-led
MPoly axpy(const Ring& R, const ModOrder& o, const MPoly& a, uint32_t c, const Expvec& m,
           const MPoly& b) {
    const PrimeField& F = R.field;
    MPoly out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        Expvec bm = Expvec::mul(b[j].m, m);
        int cmp = o.cmp(R, a[i].comp, a[i].m, b[j].comp, bm);
        if (cmp > 0) out.push_back(a[i++]);
        else if (cmp < 0) {
            out.push_back({b[j].comp, bm, F.neg(F.mul(c, b[j].c))});
            ++j;
        } else {
            uint32_t nc = F.sub(a[i].c, F.mul(c, b[j].c));
            if (nc) out.push_back({a[i].comp, a[i].m, nc});
            ++i; ++j;
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) {
        out.push_back({b[j].comp, Expvec::mul(b[j].m, m), F.neg(F.mul(c, b[j].c))});
        ++j;
    }
    return out;
}

MPoly scale_mpoly(const PrimeField& F, MPoly v, uint32_t c) {
    for (MTerm& t : v) t.c = F.mul(t.c, c);
    return v;
}

bool single_component(const MPoly& v) {
    for (const MTerm& t : v)
        if (t.comp != v[0].comp) return false;
    return true;
}

}  // namespace

std::vector<VecPoly> GroebnerBasis::element_vectors() const {
    std::vector<VecPoly> out;
    out.reserve(gens_.size());
    for (const MPoly& g : gens_) out.push_back(from_mpoly(ring_, rank_, g));
    return out;
}

void GroebnerBasis::enable_rep_tracking(int n_inputs_expected) {
    if (!gens_.empty()) throw StructuralError("rep tracking must be enabled before adding");
    track_reps_ = true;
    (void)n_inputs_expected;
}

void GroebnerBasis::add(const std::vector<VecPoly>& gens) {
    std::vector<MPoly> ms;
    ms.reserve(gens.size());
    for (const VecPoly& v : gens) {
        if (int(v.size()) != rank_) throw StructuralError("generator rank mismatch");
        ms.push_back(to_mpoly(*ring_, order_, v));
    }
    add_mpoly(std::move(ms));
}

void GroebnerBasis::add_mpoly(std::vector<MPoly> gens) {
    for (MPoly& g : gens) {
        MPoly rep;
        if (track_reps_) rep.push_back({n_inputs_, Expvec{}, 1});
        ++n_inputs_;
        if (g.empty()) continue;
        MPoly r = reduce_element(std::move(g), track_reps_ ? &rep : nullptr);
        if (!r.empty()) push_element(std::move(r), std::move(rep));
    }
    complete();
    reduced_ = false;
    reduce();
}

void GroebnerBasis::push_element(MPoly g, MPoly rep) {
    const PrimeField& F = ring_->field;
    uint32_t lc = g[0].c;
    if (lc != 1) {
        uint32_t inv = F.inv(lc);
        g = scale_mpoly(F, std::move(g), inv);
        rep = scale_mpoly(F, std::move(rep), inv);
    }
    int idx = int(gens_.size());
    for (int i = 0; i < idx; ++i) {
        const MTerm& la = gens_[size_t(i)][0];
        const MTerm& lb = g[0];
        if (la.comp != lb.comp) continue;
        // coprime criterion, safe only when both elements live in one component
        if (Expvec::coprime(la.m, lb.m) && single_component(gens_[size_t(i)]) &&
            single_component(g))
            continue;
        Expvec l = Expvec::lcm(la.m, lb.m);
        queue_.push_back({i, idx, l, la.comp, l.weighted_degree(*ring_)});
    }
    gens_.push_back(std::move(g));
    reps_.push_back(std::move(rep));
}

MPoly GroebnerBasis::reduce_element(MPoly v, MPoly* rep) const {
    const Ring& R = *ring_;
    const PrimeField& F = R.field;
    MPoly result;
    while (!v.empty()) {
        const MTerm lead = v[0];
        bool hit = false;
        for (size_t k = 0; k < gens_.size(); ++k) {
            if (gens_[k].empty()) continue;
            const MTerm& gl = gens_[k][0];
            if (gl.comp != lead.comp || !Expvec::divides(gl.m, lead.m)) continue;
            Expvec q = Expvec::div(lead.m, gl.m);
            v = axpy(R, order_, v, lead.c, q, gens_[k]);
            if (rep) *rep = axpy(R, order_, *rep, lead.c, q, reps_[k]);
            hit = true;
            break;
        }
        if (!hit) {
            result.push_back(lead);
            v.erase(v.begin());
        }
    }
    return result;
}

void GroebnerBasis::complete() {
    const Ring& R = *ring_;
    const PrimeField& F = R.field;
    while (!queue_.empty()) {
        // normal strategy: smallest lcm degree first, deterministic tiebreak
        size_t best = 0;
        for (size_t k = 1; k < queue_.size(); ++k) {
            const Pair &a = queue_[k], &b = queue_[best];
            if (a.degree != b.degree ? a.degree < b.degree
                                     : (a.j != b.j ? a.j < b.j : a.i < b.i))
                best = k;
        }
        Pair pr = queue_[best];
        queue_.erase(queue_.begin() + long(best));

        // chain criterion: some other lead divides the lcm with both
        // subsidiary lcms proper (so cited pairs have strictly smaller
        // degree, which rules out circular skipping) and neither
        // subsidiary pair is still pending
        bool skip = false;
        for (size_t k = 0; k < gens_.size() && !skip; ++k) {
            if (int(k) == pr.i || int(k) == pr.j || gens_[k].empty()) continue;
            const MTerm& gl = gens_[k][0];
            if (gl.comp != pr.comp || !Expvec::divides(gl.m, pr.lcm)) continue;
            Expvec lik = Expvec::lcm(gens_[size_t(pr.i)][0].m, gl.m);
            Expvec ljk = Expvec::lcm(gens_[size_t(pr.j)][0].m, gl.m);
            if (lik == pr.lcm || ljk == pr.lcm) continue;
            bool pending = false;
            for (const Pair& q : queue_) {
                if ((q.i == pr.i && q.j == int(k)) || (q.i == int(k) && q.j == pr.i) ||
                    (q.i == pr.j && q.j == int(k)) || (q.i == int(k) && q.j == pr.j)) {
                    pending = true;
                    break;
                }
            }
            if (!pending) skip = true;
        }
        if (skip) continue;

        const MPoly& gi = gens_[size_t(pr.i)];
        const MPoly& gj = gens_[size_t(pr.j)];
        Expvec qi = Expvec::div(pr.lcm, gi[0].m);
        Expvec qj = Expvec::div(pr.lcm, gj[0].m);
        // both monic: s = x^qi * gi - x^qj * gj
        MPoly s;
        s.reserve(gi.size());
        for (const MTerm& t : gi) s.push_back({t.comp, Expvec::mul(t.m, qi), t.c});
        s = axpy(R, order_, s, 1, qj, gj);
        MPoly rep;
        if (track_reps_) {
            for (const MTerm& t : reps_[size_t(pr.i)])
                rep.push_back({t.comp, Expvec::mul(t.m, qi), t.c});
            std::sort(rep.begin(), rep.end(), [&](const MTerm& a, const MTerm& b) {
                return order_.cmp(R, a.comp, a.m, b.comp, b.m) > 0;
            });
            rep = axpy(R, order_, rep, 1, qj, reps_[size_t(pr.j)]);
        }
        MPoly r = reduce_element(std::move(s), track_reps_ ? &rep : nullptr);
        if (!r.empty()) push_element(std::move(r), std::move(rep));
    }
}

void GroebnerBasis::reduce() {
    if (reduced_) return;
    const Ring& R = *ring_;
    // drop elements whose lead is divisible by another lead
    std::vector<bool> keep(gens_.size(), true);
    for (size_t i = 0; i < gens_.size(); ++i) {
        for (size_t j = 0; j < gens_.size(); ++j) {
            if (i == j || !keep[j]) continue;
            const MTerm &li = gens_[i][0], &lj = gens_[j][0];
            if (li.comp == lj.comp && Expvec::divides(lj.m, li.m) &&
                !(lj.m == li.m && j > i)) {
                keep[i] = false;
                break;
            }
        }
    }
    std::vector<MPoly> kept, kept_reps;
    for (size_t i = 0; i < gens_.size(); ++i)
        if (keep[i]) {
            kept.push_back(std::move(gens_[i]));
            kept_reps.push_back(std::move(reps_[i]));
        }
    gens_ = std::move(kept);
    reps_ = std::move(kept_reps);
    // full tail reduction of each element against the others
    for (size_t i = 0; i < gens_.size(); ++i) {
        MPoly self = std::move(gens_[i]);
        MPoly self_rep = std::move(reps_[i]);
        gens_[i].clear();
        MPoly head{self[0]};
        MPoly tail(self.begin() + 1, self.end());
        MPoly red = reduce_element(std::move(tail), track_reps_ ? &self_rep : nullptr);
        head.insert(head.end(), red.begin(), red.end());
        gens_[i] = std::move(head);
        reps_[i] = std::move(self_rep);
    }
    std::sort(gens_.begin(), gens_.end(), [&](const MPoly& a, const MPoly& b) {
        return order_.cmp(R, a[0].comp, a[0].m, b[0].comp, b[0].m) > 0;
    });
    reduced_ = true;
}

MPoly GroebnerBasis::normal_form(const MPoly& v) const {
    return reduce_element(v, nullptr);
}

VecPoly GroebnerBasis::normal_form(const VecPoly& v) const {
    if (int(v.size()) != rank_) throw StructuralError("normal_form rank mismatch");
    return from_mpoly(ring_, rank_, reduce_element(to_mpoly(*ring_, order_, v), nullptr));
}

bool GroebnerBasis::contains(const VecPoly& v) const {
    return reduce_element(to_mpoly(*ring_, order_, v), nullptr).empty();
}

MPoly GroebnerBasis::divide(const MPoly& v, std::vector<MPoly>* cofactors) const {
    const Ring& R = *ring_;
    const PrimeField& F = R.field;
    if (cofactors) cofactors->assign(gens_.size(), MPoly{});
    MPoly rem;
    MPoly cur = v;
    while (!cur.empty()) {
        const MTerm lead = cur[0];
        bool hit = false;
        for (size_t k = 0; k < gens_.size(); ++k) {
            if (gens_[k].empty()) continue;
            const MTerm& gl = gens_[k][0];
            if (gl.comp != lead.comp || !Expvec::divides(gl.m, lead.m)) continue;
            Expvec q = Expvec::div(lead.m, gl.m);
            cur = axpy(R, order_, cur, lead.c, q, gens_[k]);
            if (cofactors) {
                MPoly& cof = (*cofactors)[k];
                MPoly one{{0, q, lead.c}};
                cof = axpy(R, order_, cof, F.neg(1), Expvec{}, one);
            }
            hit = true;
            break;
        }
        if (!hit) {
            rem.push_back(lead);
            cur.erase(cur.begin());
        }
    }
    return rem;
}

GroebnerBasis groebner(RingPtr ring, int rank, const std::vector<VecPoly>& gens, ModOrder order) {
    GroebnerBasis gb(std::move(ring), rank, order);
    gb.add(gens);
    return gb;
}

std::vector<VecPoly> standard_basis(RingPtr ring, int rank) {
    std::vector<VecPoly> out;
    for (int i = 0; i < rank; ++i) {
        VecPoly v = vec_zero(ring, rank);
        v[size_t(i)] = Poly::constant(ring, 1);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<VecPoly> syzygies_mod(RingPtr ring, int rank, const std::vector<VecPoly>& gens,
                                  const std::vector<VecPoly>& aux, ModOrder order) {
    const int n = int(gens.size());
    const int ext_rank = rank + n;
    ModOrder ext = order;
    ext.comp_block_split = rank;  // tag components are eliminated
    std::vector<VecPoly> input;
    input.reserve(gens.size() + aux.size());
    for (int l = 0; l < n; ++l) {
        VecPoly v = vec_zero(ring, ext_rank);
        for (int c = 0; c < rank; ++c) v[size_t(c)] = gens[size_t(l)][size_t(c)];
        v[size_t(rank + l)] = Poly::constant(ring, 1);
        input.push_back(std::move(v));
    }
    for (const VecPoly& a : aux) {
        VecPoly v = vec_zero(ring, ext_rank);
        for (int c = 0; c < rank; ++c) v[size_t(c)] = a[size_t(c)];
        input.push_back(std::move(v));
    }
    GroebnerBasis gb(ring, ext_rank, ext);
    gb.add(input);
    std::vector<VecPoly> out;
    for (const MPoly& g : gb.elements()) {
        if (g[0].comp < rank) continue;  // block order: lead in tag block means all terms there
        VecPoly full = from_mpoly(ring, ext_rank, g);
        out.emplace_back(full.begin() + rank, full.end());
    }
    return out;
}

std::vector<VecPoly> colon_element(RingPtr ring, int rank, const std::vector<VecPoly>& target,
                                   const Poly& g, const std::vector<VecPoly>& ambient,
                                   ModOrder order) {
    std::vector<VecPoly> scaled;
    scaled.reserve(ambient.size());
    for (const VecPoly& w : ambient) scaled.push_back(vec_scale(w, g));
    std::vector<VecPoly> syz = syzygies_mod(ring, rank, scaled, target, order);
    std::vector<VecPoly> out;
    for (const VecPoly& s : syz) {
        VecPoly v = vec_zero(ring, rank);
        for (size_t l = 0; l < ambient.size(); ++l)
            v = vec_add(v, vec_scale(ambient[l], s[l]));
        if (!vec_is_zero(v)) out.push_back(std::move(v));
    }
    return out;
}

std::vector<VecPoly> colon_ideal(RingPtr ring, int rank, const std::vector<VecPoly>& target,
                                 const std::vector<Poly>& ideal_gens, ModOrder order) {
    // one shot: kernel of v -> (g_j v)_j into (P^rank / target)^j
    const int n_g = int(ideal_gens.size());
    if (n_g == 0) return standard_basis(ring, rank);
    const int big = rank * n_g;
    std::vector<VecPoly> gens;  // images of standard basis
    for (int c = 0; c < rank; ++c) {
        VecPoly v = vec_zero(ring, big);
        for (int j = 0; j < n_g; ++j) v[size_t(j * rank + c)] = ideal_gens[size_t(j)];
        gens.push_back(std::move(v));
    }
    std::vector<VecPoly> aux;
    for (int j = 0; j < n_g; ++j)
        for (const VecPoly& t : target) {
            VecPoly v = vec_zero(ring, big);
            for (int c = 0; c < rank; ++c) v[size_t(j * rank + c)] = t[size_t(c)];
            aux.push_back(std::move(v));
        }
    std::vector<VecPoly> syz = syzygies_mod(ring, big, gens, aux, order);
    std::vector<VecPoly> out;
    for (const VecPoly& s : syz)
        if (!vec_is_zero(s)) out.push_back(s);
    return out;
}

std::vector<VecPoly> intersect_submodules(RingPtr ring, int rank, const std::vector<VecPoly>& U,
                                          const std::vector<VecPoly>& V, ModOrder order) {
    std::vector<VecPoly> all = U;
    all.insert(all.end(), V.begin(), V.end());
    std::vector<VecPoly> syz = syzygies_mod(ring, rank, all, {}, order);
    std::vector<VecPoly> out;
    for (const VecPoly& s : syz) {
        VecPoly v = vec_zero(ring, rank);
        for (size_t l = 0; l < U.size(); ++l) v = vec_add(v, vec_scale(U[l], s[l]));
        if (!vec_is_zero(v)) out.push_back(std::move(v));
    }
    return out;
}

bool submodules_equal(RingPtr ring, int rank, const std::vector<VecPoly>& U,
                      const std::vector<VecPoly>& V) {
    GroebnerBasis gu = groebner(ring, rank, U);
    for (const VecPoly& v : V)
        if (!gu.contains(v)) return false;
    GroebnerBasis gv = groebner(ring, rank, V);
    for (const VecPoly& u : U)
        if (!gv.contains(u)) return false;
    return true;
}

std::vector<VecPoly> minimal_generators(RingPtr ring, int rank, std::vector<VecPoly> cands,
                                        const std::vector<VecPoly>& aux,
                                        const std::vector<int>& shifts, ModOrder order) {
    struct Cand {
        VecPoly v;
        int deg;
        MPoly key;
    };
    std::vector<Cand> cs;
    GroebnerBasis base(ring, rank, order);
    base.add(aux);
    for (VecPoly& v : cands) {
        VecPoly nf = base.normal_form(v);
        if (vec_is_zero(nf)) continue;
        int deg = -1;
        if (!vec_is_homogeneous(nf, shifts, &deg))
            throw StructuralError("minimal_generators: non-homogeneous candidate");
        cs.push_back({std::move(nf), deg, {}});
    }
    for (Cand& c : cs) c.key = to_mpoly(*ring, order, c.v);
    std::sort(cs.begin(), cs.end(), [&](const Cand& a, const Cand& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        size_t n = std::min(a.key.size(), b.key.size());
        for (size_t k = 0; k < n; ++k) {
            int cc = order.cmp(*ring, a.key[k].comp, a.key[k].m, b.key[k].comp, b.key[k].m);
            if (cc) return cc > 0;
            if (a.key[k].c != b.key[k].c) return a.key[k].c < b.key[k].c;
        }
        return a.key.size() < b.key.size();
    });
    std::vector<VecPoly> kept;
    GroebnerBasis gb(ring, rank, order);
    gb.add(aux);
    for (Cand& c : cs) {
        if (gb.contains(c.v)) continue;
        kept.push_back(c.v);
        gb.add({c.v});
    }
    return kept;
}

}  // namespace cicalc
