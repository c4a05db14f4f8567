#include "cicalc/stable.hpp"

namespace cicalc {

ModuleMap compose(const ModuleMap& g, const ModuleMap& h) {
    ModuleMap out;
    out.src = h.src;
    out.dst = g.dst;
    out.deg_shift = g.deg_shift + h.deg_shift;
    for (const VecPoly& col : h.cols) out.cols.push_back(g.apply(col));
    return out;
}

CosyzygyData cosyzygy(const ModulePresentation& M) {
    if (!is_mcm(M)) throw NotMCMError("cosyzygy requires an MCM module");
    const CIRingPtr& A = M.ring();
    const RingPtr& P = A->ambient();
    const ModulePresentation& Mm = M;  // reflexivity needs no minimality
    std::vector<VecPoly> dual_gens;
    ModulePresentation D = dual_module(Mm, &dual_gens);
    // Q = G_0^* where G_0 is the free hull of D; its generators are dual to
    // the chosen generators of D, so deg = -deg_D
    std::vector<int> q_degs;
    for (int d : D.gen_degrees()) q_degs.push_back(-d);
    ModulePresentation Q = ModulePresentation::free_module(A, q_degs);
    // the evaluation embedding M -> Q: generator l of M maps to the vector of
    // values of the dual generators at l
    ModuleMap embed;
    embed.src = Mm;
    embed.dst = Q;
    for (int l = 0; l < Mm.rank(); ++l) {
        VecPoly col = vec_zero(P, Q.rank());
        for (size_t alpha = 0; alpha < dual_gens.size(); ++alpha)
            col[alpha] = dual_gens[alpha][size_t(l)];
        embed.cols.push_back(A->nf(col));
    }
    if (!embed.is_well_defined())
        throw StructuralError("dual evaluation map is not well defined");
    CosyzygyData out;
    out.Q = Q;
    out.embed = embed;
    out.cosyzygy = cokernel_presentation(embed).minimalized();
    ModuleMap proj;
    proj.src = Q;
    proj.dst = cokernel_presentation(embed);
    proj.cols = standard_basis(P, Q.rank());
    out.project = proj;
    return out;
}

namespace {

bool verify_short_exact(const ModuleMap& incl, const ModuleMap& proj) {
    // composite zero
    ModuleMap comp = compose(proj, incl);
    for (const VecPoly& col : comp.cols)
        if (!vec_is_zero(col)) return false;
    // incl injective
    if (!kernel_presentation(incl).is_zero()) return false;
    // proj surjective
    if (!proj.is_surjective()) return false;
    // kernel of proj inside image of incl (the reverse holds by composite==0)
    std::vector<VecPoly> ker_vecs;
    kernel_presentation(proj, &ker_vecs);
    GroebnerBasis image(incl.dst.ring()->ambient(), incl.dst.rank(), ModOrder{});
    std::vector<VecPoly> gens = incl.cols;
    auto rel = incl.dst.full_relations();
    gens.insert(gens.end(), rel.begin(), rel.end());
    image.add(gens);
    for (const VecPoly& v : ker_vecs)
        if (!image.contains(v)) return false;
    return true;
}

}  // namespace

ConeWitness cone(const ModuleMap& f) {
    const CIRingPtr& A = f.src.ring();
    const RingPtr& P = A->ambient();
    if (!is_mcm(f.src) || !is_mcm(f.dst)) throw NotMCMError("cone requires MCM modules");
    if (!f.is_well_defined()) throw StructuralError("cone input map is not well defined");
    CosyzygyData cz = cosyzygy(f.src);
    const ModulePresentation& N = f.dst;
    // the pushout lives on N + Q(-deg_shift)
    std::vector<int> degs = N.gen_degrees();
    for (int d : cz.Q.gen_degrees()) degs.push_back(d + f.deg_shift);
    std::vector<VecPoly> rels;
    for (const VecPoly& r : N.relations()) {
        VecPoly c = r;
        VecPoly pad = vec_zero(P, cz.Q.rank());
        c.insert(c.end(), pad.begin(), pad.end());
        rels.push_back(std::move(c));
    }
    // glue: (f(m_l), -i(m_l)) for every generator of M
    for (int l = 0; l < f.src.rank(); ++l) {
        VecPoly c = f.cols[size_t(l)];
        for (const Poly& q : cz.embed.cols[size_t(l)]) c.push_back(Poly::zero(P) - q);
        rels.push_back(std::move(c));
    }
    ConeWitness w;
    w.input = f;
    w.cone = ModulePresentation(A, degs, rels);
    // N -> C(f)
    w.incl.src = N;
    w.incl.dst = w.cone;
    for (int l = 0; l < N.rank(); ++l) {
        VecPoly c = vec_zero(P, w.cone.rank());
        c[size_t(l)] = Poly::constant(P, 1);
        w.incl.cols.push_back(std::move(c));
    }
    // C(f) -> Omega^{-1}(M): kill the N-part, project the Q-part; the target
    // is the (degree-adjusted) cokernel of the embedding
    {
        ModulePresentation raw_coker = cokernel_presentation(cz.embed);
        std::vector<int> cz_degs;
        for (int d : raw_coker.gen_degrees()) cz_degs.push_back(d + f.deg_shift);
        w.proj_cosyz.src = w.cone;
        w.proj_cosyz.dst = ModulePresentation(A, cz_degs, raw_coker.relations());
        for (int l = 0; l < N.rank(); ++l)
            w.proj_cosyz.cols.push_back(vec_zero(P, raw_coker.rank()));
        for (int q = 0; q < cz.Q.rank(); ++q) {
            VecPoly c = vec_zero(P, raw_coker.rank());
            c[size_t(q)] = Poly::constant(P, 1);
            w.proj_cosyz.cols.push_back(std::move(c));
        }
    }
    // C(f) -> N/f(M)
    w.coker_f = cokernel_presentation(f);
    w.onto_coker.src = w.cone;
    w.onto_coker.dst = w.coker_f;
    for (int l = 0; l < N.rank(); ++l) {
        VecPoly c = vec_zero(P, w.coker_f.rank());
        c[size_t(l)] = Poly::constant(P, 1);
        w.onto_coker.cols.push_back(std::move(c));
    }
    for (int q = 0; q < cz.Q.rank(); ++q)
        w.onto_coker.cols.push_back(vec_zero(P, w.coker_f.rank()));
    w.rows_exact = verify_short_exact(w.incl, w.proj_cosyz);
    if (!w.rows_exact)
        throw StructuralError("cone row 0 -> N -> C(f) -> cosyzygy -> 0 failed verification");
    return w;
}

McmApproxData mcm_approx(const ModulePresentation& M, const std::vector<Poly>& xs,
                         int pd_cutoff) {
    const CIRingPtr& A = M.ring();
    if (!is_mcm(M)) throw NotMCMError("mcm approximation starts from an MCM module");
    if (pd_cutoff < 0) pd_cutoff = A->dim() + 2;
    for (const Poly& x : xs) {
        // regular on A (and hence on every MCM module in the chain)
        Poly xn = A->nf(x);
        if (xn.is_zero() || !ModulePresentation::free_module(A).is_regular_element(xn))
            throw RegularSequenceError("element " + x.str() + " is not regular on the ring");
    }
    ModulePresentation V = M.minimalized();
    ModulePresentation target = V;
    ModuleMap onto = ModuleMap::identity(V);
    bool first = true;
    for (const Poly& x : xs) {
        if (!V.is_regular_element(x))
            throw RegularSequenceError("element is not regular on the approximation step");
        ConeWitness w = cone(ModuleMap::multiplication(V, x));
        // V_{i} -> V_{i-1}/x V_{i-1} is the cone-to-cokernel map; compose with
        // the previous surjection taken mod x
        ModulePresentation next_target = target.quotient_by_element(x);
        ModuleMap step = w.onto_coker;  // C -> V/xV
        ModuleMap prev_mod_x;           // V/xV -> target/x
        prev_mod_x.src = step.dst;
        prev_mod_x.dst = next_target;
        if (first) {
            // target/x = M/xM and V = M (minimalized); the map is the identity
            // on generators up to the minimalization, which kept generators
            prev_mod_x.cols = onto.cols;
        } else {
            prev_mod_x.cols = onto.cols;  // same generator images, new relations
        }
        ModuleMap down = compose(prev_mod_x, step);
        V = w.cone;
        target = next_target;
        onto = down;
        first = false;
    }
    if (!onto.is_well_defined() || !onto.is_surjective())
        throw StructuralError("approximation surjection failed verification");
    McmApproxData out;
    out.V = V;
    out.target = target;
    out.onto = onto;
    out.Y = kernel_presentation(onto).minimalized();
    if (out.Y.rank() == 0) {
        out.pd_Y = -1;
    } else {
        FreeResolution yres = minimal_resolution(out.Y, pd_cutoff + 1);
        int pd = -2;
        for (int i = 0; i <= pd_cutoff + 1; ++i)
            if (yres.betti(i) > 0) pd = i;
        if (yres.betti(pd_cutoff + 1) != 0)
            throw StructuralError("approximation kernel has projective dimension above the bound");
        out.pd_Y = pd;
    }
    return out;
}

}  // namespace cicalc
