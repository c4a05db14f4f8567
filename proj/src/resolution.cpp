#include "cicalc/resolution.hpp"

namespace cicalc {

std::vector<int> FreeResolution::betti_numbers() const {
    std::vector<int> out;
    for (int i = 0; i <= cutoff; ++i) out.push_back(betti(i));
    return out;
}

ModulePresentation FreeResolution::syzygy_module(int i) const {
    if (i == 0) return module;
    if (i < 0 || i >= cutoff)
        throw StructuralError("syzygy index exceeds resolution cutoff; resolve deeper");
    return ModulePresentation(ring, degs[size_t(i)], diff[size_t(i) + 1]);
}

void FreeResolution::verify() const {
    for (int i = 1; i + 1 <= cutoff; ++i) {
        const auto& d_i = diff[size_t(i)];
        for (const VecPoly& col : diff[size_t(i) + 1]) {
            VecPoly img = vec_zero(ring->ambient(), betti(i - 1));
            for (int l = 0; l < betti(i); ++l) img = vec_add(img, vec_scale(d_i[size_t(l)], col[size_t(l)]));
            if (!vec_is_zero(ring->nf(img)))
                throw StructuralError("resolution composite is nonzero at stage " +
                                      std::to_string(i + 1));
        }
    }
    if (minimal)
        for (int i = 1; i <= cutoff; ++i)
            for (const VecPoly& col : diff[size_t(i)])
                for (const Poly& e : col)
                    if (!e.is_zero() && e.is_constant())
                        throw StructuralError("unit entry in a minimal resolution");
}

FreeResolution minimal_resolution(const ModulePresentation& M, int cutoff, ModOrder order) {
    if (cutoff < 1) throw StructuralError("resolution cutoff must be >= 1");
    FreeResolution res;
    res.ring = M.ring();
    res.module = M.minimalized();
    res.minimal = true;
    res.cutoff = cutoff;
    res.degs.resize(size_t(cutoff) + 1);
    res.diff.resize(size_t(cutoff) + 1);
    res.degs[0] = res.module.gen_degrees();
    res.diff[1] = res.module.relations();
    const CIRingPtr& A = res.ring;
    const RingPtr& P = A->ambient();
    for (int i = 1; i <= cutoff; ++i) {
        std::vector<int>& dd = res.degs[size_t(i)];
        dd.clear();
        for (const VecPoly& col : res.diff[size_t(i)]) {
            int d = -1;
            if (!vec_is_homogeneous(col, res.degs[size_t(i) - 1], &d))
                throw StructuralError("non-homogeneous differential column");
            dd.push_back(d);
        }
        if (i == cutoff) break;
        if (res.diff[size_t(i)].empty()) {
            res.diff[size_t(i) + 1] = {};
            continue;
        }
        int prev_rank = res.betti(i - 1);
        std::vector<VecPoly> syz = syzygies_mod(P, prev_rank, res.diff[size_t(i)],
                                                A->relation_columns(prev_rank), order);
        for (VecPoly& s : syz) s = A->nf(s);
        res.diff[size_t(i) + 1] =
            minimal_generators(P, res.betti(i), syz, A->relation_columns(res.betti(i)), dd, order);
    }
    res.verify();
    return res;
}

FreeResolution nonminimal_resolution(const ModulePresentation& M, int cutoff, ModOrder order) {
    FreeResolution res = minimal_resolution(M, cutoff, order);
    res.minimal = false;
    const RingPtr& P = res.ring->ambient();
    // splice a trivial A(-a) -> A(-a) pair into every stage i >= 1
    for (int i = 1; i <= cutoff; ++i) {
        int a = res.degs[size_t(i)].empty() ? (res.degs[size_t(i) - 1].empty()
                                                   ? 0
                                                   : res.degs[size_t(i) - 1][0])
                                            : res.degs[size_t(i)][0];
        // new generator at stage i and at stage i-1
        res.degs[size_t(i) - 1].push_back(a);
        for (VecPoly& col : res.diff[size_t(i)]) col.push_back(Poly::zero(P));
        if (i >= 2)  // the new stage-(i-1) generator maps to zero
            res.diff[size_t(i) - 1].push_back(
                vec_zero(P, int(res.degs[size_t(i) - 2].size())));
        VecPoly unit_col = vec_zero(P, int(res.degs[size_t(i) - 1].size()));
        unit_col.back() = Poly::constant(P, 1);
        res.diff[size_t(i)].push_back(std::move(unit_col));
        res.degs[size_t(i)].push_back(a);
        if (i + 1 <= cutoff)
            for (VecPoly& col : res.diff[size_t(i) + 1]) col.push_back(Poly::zero(P));
    }
    res.verify();
    return res;
}

int ambient_proj_dim(const ModulePresentation& M) {
    const RingPtr& P = M.ring()->ambient();
    CIRingPtr Pring = CIRing::make(P, {}, true);
    ModulePresentation over_p(Pring, M.gen_degrees(), M.full_relations());
    ModulePresentation minimized = over_p.minimalized();
    if (minimized.rank() == 0) return -1;  // zero module
    int cutoff = P->nvars() + 1;
    FreeResolution res = minimal_resolution(minimized, cutoff);
    int pd = 0;
    for (int i = 0; i <= cutoff; ++i)
        if (res.betti(i) > 0) pd = i;
    if (res.betti(cutoff) != 0)
        throw StructuralError("projective dimension exceeds the ambient bound");
    return pd;
}

int depth(const ModulePresentation& M) {
    int pd = ambient_proj_dim(M);
    if (pd < 0) return INT32_MAX;  // zero module
    return M.ring()->ambient()->nvars() - pd;
}

bool is_mcm(const ModulePresentation& M) {
    if (M.is_zero()) return true;
    return depth(M) == M.ring()->dim();
}

}  // namespace cicalc
