#include "cmlab/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace cmlab {

namespace {

// One cohomological (or homological) spot of the complex obtained from the
// resolution of M against N. Slot (t, l) of Hom(F_n, N) resp. F_n tensor N
// is flattened to index t*g + l where g is the rank of N's minimal cover.
struct Spot {
    std::vector<int> src_twists;              // twists of the slot space at n
    std::vector<FreeVector> kernel_side;      // generators of K'
    std::vector<FreeVector> boundary_side;    // generators of B' (without I*F)
};

int slot(int t, int l, int g) { return t * g + l; }

// Images of the source basis under Hom(d): e_(t,l) -> sum_u entry(col_u at t) e_(u,l).
std::vector<FreeVector> hom_map_images(const PolyContext& cx,
                                       const std::vector<FreeVector>& cols, int src_rank,
                                       int g) {
    std::vector<FreeVector> out(static_cast<std::size_t>(src_rank) * static_cast<std::size_t>(g));
    for (int t = 0; t < src_rank; ++t) {
        for (int l = 0; l < g; ++l) {
            std::vector<Term> terms;
            for (std::size_t u = 0; u < cols.size(); ++u)
                for (const Term& e : cols[u].terms())
                    if (e.comp == t)
                        terms.push_back(Term{slot(static_cast<int>(u), l, g), e.mono, e.coeff});
            out[static_cast<std::size_t>(slot(t, l, g))] = fv_normalize(cx, std::move(terms));
        }
    }
    return out;
}

// Images of the source basis under d tensor id: e_(u,l) -> sum_t entry(col_u at t) e_(t,l).
std::vector<FreeVector> tensor_map_images(const PolyContext& cx,
                                          const std::vector<FreeVector>& cols, int g) {
    std::vector<FreeVector> out(cols.size() * static_cast<std::size_t>(g));
    for (std::size_t u = 0; u < cols.size(); ++u)
        for (int l = 0; l < g; ++l) {
            std::vector<Term> terms;
            for (const Term& e : cols[u].terms())
                terms.push_back(Term{slot(e.comp, l, g), e.mono, e.coeff});
            out[u * static_cast<std::size_t>(g) + static_cast<std::size_t>(l)] =
                fv_normalize(cx, std::move(terms));
        }
    return out;
}

// Relations of N placed in every slot block of a rank-`blocks` space.
std::vector<FreeVector> embedded_relations(const PolyContext& cx, const Module& Nmin,
                                           int blocks) {
    std::vector<FreeVector> out;
    int g = Nmin.rank();
    for (int t = 0; t < blocks; ++t)
        for (const FreeVector& v : Nmin.relations()) {
            std::vector<Term> terms;
            for (const Term& e : v.terms())
                terms.push_back(Term{slot(t, e.comp, g), e.mono, e.coeff});
            out.push_back(fv_normalize(cx, std::move(terms)));
        }
    return out;
}

std::vector<FreeVector> unit_vectors(int rank) {
    std::vector<FreeVector> out;
    out.reserve(static_cast<std::size_t>(rank));
    for (int i = 0; i < rank; ++i)
        out.push_back(FreeVector::term(i, Monomial::one(), 1));
    return out;
}

// Assembles K' and B' at spot n. `ext` selects Hom versus tensor.
Spot build_spot(const Module& M, const Module& N, int n, bool ext) {
    const Module& Mm = M.minimal();
    const Module& Nm = N.minimal();
    Ring& R = M.ring();
    const PolyContext& cx = R.ctx();
    int g = Nm.rank();

    const Resolution& res = Mm.resolution(n + 1);
    auto beta = [&](int i) { return static_cast<int>(res.betti(i)); };
    auto step_twists = [&](int i) -> const std::vector<int>& {
        return res.twists[static_cast<std::size_t>(i)];
    };
    auto step_cols = [&](int i) -> const std::vector<FreeVector>& {
        // columns of d_{i+1}, living in F_i
        return res.mats[static_cast<std::size_t>(i)];
    };

    Spot sp;
    int bn = beta(n);
    sp.src_twists.resize(static_cast<std::size_t>(bn) * static_cast<std::size_t>(g));
    for (int t = 0; t < bn; ++t)
        for (int l = 0; l < g; ++l)
            sp.src_twists[static_cast<std::size_t>(slot(t, l, g))] =
                ext ? Nm.twists()[static_cast<std::size_t>(l)] -
                          step_twists(n)[static_cast<std::size_t>(t)]
                    : Nm.twists()[static_cast<std::size_t>(l)] +
                          step_twists(n)[static_cast<std::size_t>(t)];

    int src_rank = bn * g;
    if (src_rank == 0) return sp;  // zero spot

    // outgoing map and target relations decide K'
    std::vector<FreeVector> out_images;
    int tgt_rank = 0;
    if (ext) {
        const std::vector<FreeVector>& cols = step_cols(n);  // d_{n+1}
        tgt_rank = beta(n + 1) * g;
        out_images = hom_map_images(cx, cols, bn, g);
    } else {
        if (n == 0) {
            tgt_rank = 0;
            out_images.assign(static_cast<std::size_t>(src_rank), FreeVector::zero());
        } else {
            const std::vector<FreeVector>& cols = step_cols(n - 1);  // d_n
            tgt_rank = beta(n - 1) * g;
            out_images = tensor_map_images(cx, cols, g);
        }
    }
    if (tgt_rank == 0) {
        sp.kernel_side = unit_vectors(src_rank);
    } else {
        std::vector<FreeVector> untracked = embedded_relations(cx, Nm, tgt_rank / g);
        std::vector<FreeVector> ibg = R.ideal_in_free(tgt_rank);
        untracked.insert(untracked.end(), ibg.begin(), ibg.end());
        sp.kernel_side = syzygy_basis(cx, out_images, untracked, tgt_rank, R.limits());
    }

    // incoming map images and source relations make up B'
    if (ext) {
        if (n > 0) {
            const std::vector<FreeVector>& cols = step_cols(n - 1);  // d_n
            int prev_rank = beta(n - 1);
            std::vector<FreeVector> in_images = hom_map_images(cx, cols, prev_rank, g);
            // images of the (s,l) basis of the previous spot, which are the
            // columns of the incoming map
            sp.boundary_side = std::move(in_images);
        }
    } else {
        const std::vector<FreeVector>& cols = step_cols(n);  // d_{n+1}
        sp.boundary_side = tensor_map_images(cx, cols, g);
    }
    std::vector<FreeVector> vsrc = embedded_relations(cx, Nm, bn);
    sp.boundary_side.insert(sp.boundary_side.end(), vsrc.begin(), vsrc.end());
    return sp;
}

HomologyResult spot_result(Ring& R, const Spot& sp, bool want_dim) {
    const PolyContext& cx = R.ctx();
    HomologyResult out;
    int rank = static_cast<int>(sp.src_twists.size());
    if (rank == 0 || sp.kernel_side.empty()) {
        out.vanishes = true;
        out.k_dim = 0;
        return out;
    }
    std::vector<FreeVector> bgens = sp.boundary_side;
    std::vector<FreeVector> ibg = R.ideal_in_free(rank);
    bgens.insert(bgens.end(), ibg.begin(), ibg.end());
    std::vector<FreeVector> bgb = buchberger(cx, bgens, R.limits());
    bool vanish = true;
    for (const FreeVector& k : sp.kernel_side)
        if (!normal_form(cx, k, bgb).is_zero()) {
            vanish = false;
            break;
        }
    out.vanishes = vanish;
    if (vanish) {
        out.k_dim = 0;
        return out;
    }
    if (!want_dim) return out;

    // Hilbert series of K'/B' = H(F/B') - H(F/K')
    std::vector<FreeVector> kgens = sp.kernel_side;
    kgens.insert(kgens.end(), bgb.begin(), bgb.end());
    std::vector<FreeVector> kgb = buchberger(cx, kgens, R.limits());
    auto numerator = [&](const std::vector<FreeVector>& gb) {
        LaurentPoly num;
        for (int c = 0; c < rank; ++c) {
            std::vector<Monomial> lt;
            for (const FreeVector& gvec : gb)
                if (gvec.lead().comp == c) lt.push_back(gvec.lead().mono);
            num = lp_add(num, lp_shift(monomial_ideal_numerator(std::move(lt), R.nvars()),
                                       sp.src_twists[static_cast<std::size_t>(c)]));
        }
        return num;
    };
    LaurentPoly nb = numerator(bgb);
    LaurentPoly nk = numerator(kgb);
    for (long long& c : nk.c) c = -c;
    HilbertSeries h = hilbert_from_numerator(R.nvars(), lp_add(nb, nk));
    if (h.zero)
        throw std::logic_error("homology: containment said nonzero but series is zero");
    if (h.dim == 0) out.k_dim = h.q.eval_one();
    return out;
}

} // namespace

HomologyResult tor_dim(const Module& M, const Module& N, int n, bool want_dim) {
    if (n < 0) return HomologyResult{true, 0};
    if (&M.ring() != &N.ring())
        throw std::invalid_argument("tor: modules over different rings");
    Spot sp = build_spot(M, N, n, false);
    return spot_result(M.ring(), sp, want_dim);
}

HomologyResult ext_dim(const Module& M, const Module& N, int n, bool want_dim) {
    if (n < 0) return HomologyResult{true, 0};
    if (&M.ring() != &N.ring())
        throw std::invalid_argument("ext: modules over different rings");
    Spot sp = build_spot(M, N, n, true);
    return spot_result(M.ring(), sp, want_dim);
}

ExtPresentation ext_presentation(const Module& M, const Module& N, int n, std::string label) {
    if (n < 0) throw std::invalid_argument("ext_presentation: negative degree");
    Ring& R = M.ring();
    const PolyContext& cx = R.ctx();
    Spot sp = build_spot(M, N, n, true);
    int rank = static_cast<int>(sp.src_twists.size());

    std::vector<FreeVector> bgens = sp.boundary_side;
    std::vector<FreeVector> ibg = R.ideal_in_free(rank);
    bgens.insert(bgens.end(), ibg.begin(), ibg.end());

    // minimal generators of K' modulo B'
    std::vector<std::size_t> keep =
        minimal_generator_indices(cx, sp.kernel_side, sp.src_twists, bgens, R.limits());
    std::vector<FreeVector> gens;
    gens.reserve(keep.size());
    for (std::size_t k : keep) gens.push_back(sp.kernel_side[k]);
    std::stable_sort(gens.begin(), gens.end(), [&](const FreeVector& a, const FreeVector& b) {
        return fv_degree(a, sp.src_twists) < fv_degree(b, sp.src_twists);
    });

    std::vector<int> gt;
    gt.reserve(gens.size());
    for (const FreeVector& gvec : gens) gt.push_back(fv_degree(gvec, sp.src_twists));

    // relations: coefficients c with sum c_i gens_i inside B' (+ I*F)
    std::vector<FreeVector> rels =
        syzygy_basis(cx, gens, bgens, rank, R.limits());

    ExtPresentation out{Module(R, gt, std::move(rels), std::move(label)), std::move(gens),
                        sp.src_twists};
    return out;
}

Module syzygy_module(const Module& M, int n, std::string label) {
    if (n < 0) throw std::invalid_argument("syzygy_module: negative index");
    const Module& m = M.minimal();
    if (n == 0) return Module(M.ring(), m.twists(), m.relations(), std::move(label));
    const Resolution& res = m.resolution(n + 1);
    if (static_cast<std::size_t>(n) >= res.twists.size() ||
        res.twists[static_cast<std::size_t>(n)].empty())
        return Module(M.ring(), {}, {}, std::move(label));  // zero module
    return Module(M.ring(), res.twists[static_cast<std::size_t>(n)],
                  res.mats[static_cast<std::size_t>(n)], std::move(label));
}

HomDimReport hom_dim_report(const Module& M) {
    if (M.is_zero()) throw std::invalid_argument("hom_dim_report: zero module");
    HomDimReport r;
    Ring& R = M.ring();
    int depth_R = R.as_module().depth();
    int depth_M = M.depth();
    int t = depth_R - depth_M;
    // depth M > depth R already rules out finite pd by Auslander-Buchsbaum
    r.pd_finite = t >= 0 && M.betti(t + 1) == 0;
    if (r.pd_finite) r.pd = t;
    int m = std::max(depth_R, depth_M) + 1;
    r.id_finite = M.bass(m) == 0;
    if (r.id_finite) r.id = depth_R;
    return r;
}

bool is_free(const Module& M) { return M.minimal().relations().empty(); }

} // namespace cmlab
