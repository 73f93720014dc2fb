#include "cmlab/duality.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cmlab/homology.hpp"

namespace cmlab {

namespace {

// standard monomials of the ring itself at a fixed degree
std::vector<Monomial> ring_monomials_of_degree(Ring& R, int d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    std::vector<Monomial> level{Monomial::one()};
    auto standard = [&](const Monomial& m) {
        for (const FreeVector& g : R.ideal_gb())
            if (mono_divides(g.lead().mono, m)) return false;
        return true;
    };
    if (d == 0) {
        out.push_back(Monomial::one());
        return out;
    }
    for (int step = 1; step <= d && !level.empty(); ++step) {
        std::vector<Monomial> next;
        for (const Monomial& m : level)
            for (int v = 0; v < R.nvars(); ++v) {
                bool canonical = true;
                for (int w = v + 1; w < R.nvars(); ++w)
                    if (m.e[w]) { canonical = false; break; }
                if (!canonical) continue;
                Monomial cand = mono_mul(m, Monomial::var(v));
                if (standard(cand)) next.push_back(cand);
            }
        level = std::move(next);
        if (step == d) out = level;
    }
    return out;
}

std::vector<std::uint32_t> apply_monomial(const PrimeField& fp,
                                          const std::vector<DenseMat>& actions,
                                          const Monomial& m,
                                          std::vector<std::uint32_t> v) {
    for (int var = 0; var < static_cast<int>(actions.size()); ++var)
        for (int i = 0; i < m.e[var]; ++i)
            v = mat_apply(fp, actions[static_cast<std::size_t>(var)], v);
    return v;
}

} // namespace

Module present_from_actions(Ring& R, const std::vector<int>& degrees,
                            const std::vector<DenseMat>& actions, std::string label) {
    const PrimeField& fp = R.ctx().fp;
    int dim = static_cast<int>(degrees.size());
    if (dim == 0) return Module(R, {}, {}, std::move(label));

    // order of candidate generators: by degree, then index
    std::vector<int> order(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) order[static_cast<std::size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return degrees[static_cast<std::size_t>(a)] < degrees[static_cast<std::size_t>(b)]; });

    // radical span: columns of all action matrices
    RowSpan span(fp, dim);
    for (const DenseMat& X : actions)
        for (int j = 0; j < dim; ++j) {
            std::vector<std::uint32_t> col(static_cast<std::size_t>(dim));
            for (int i = 0; i < dim; ++i) col[static_cast<std::size_t>(i)] = X.at(i, j);
            span.contains_or_insert(std::move(col));
        }
    std::vector<int> gens;  // coordinate indices of chosen generators
    for (int i : order) {
        std::vector<std::uint32_t> e(static_cast<std::size_t>(dim), 0);
        e[static_cast<std::size_t>(i)] = 1;
        if (!span.contains_or_insert(std::move(e))) gens.push_back(i);
    }
    std::vector<int> gen_deg;
    gen_deg.reserve(gens.size());
    for (int i : gens) gen_deg.push_back(degrees[static_cast<std::size_t>(i)]);

    int dmin = *std::min_element(degrees.begin(), degrees.end());
    int dmax = *std::max_element(degrees.begin(), degrees.end());

    // degreewise kernel of the free cover R^mu -> W
    std::vector<FreeVector> rels;
    for (int D = dmin + 1; D <= dmax + 1; ++D) {
        struct Slot {
            int gen;
            Monomial mono;
        };
        std::vector<Slot> slots;
        std::vector<std::vector<std::uint32_t>> images;
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            int need = D - gen_deg[gi];
            for (const Monomial& m : ring_monomials_of_degree(R, need)) {
                std::vector<std::uint32_t> v(static_cast<std::size_t>(dim), 0);
                v[static_cast<std::size_t>(gens[gi])] = 1;
                slots.push_back(Slot{static_cast<int>(gi), m});
                images.push_back(apply_monomial(fp, actions, m, std::move(v)));
            }
        }
        if (slots.empty()) continue;
        DenseMat mat(dim, static_cast<int>(slots.size()));
        for (int j = 0; j < static_cast<int>(slots.size()); ++j)
            for (int i = 0; i < dim; ++i)
                mat.at(i, j) = images[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        for (const auto& kvec : mat_kernel(fp, std::move(mat))) {
            std::vector<Term> terms;
            for (std::size_t j = 0; j < slots.size(); ++j)
                if (kvec[j])
                    terms.push_back(Term{slots[j].gen, slots[j].mono, kvec[j]});
            rels.push_back(fv_normalize(R.ctx(), std::move(terms)));
        }
    }
    return Module(R, gen_deg, std::move(rels), std::move(label));
}

Module matlis_dual(const Module& M, std::string label) {
    if (M.dim() != 0)
        throw std::invalid_argument("matlis_dual: module has infinite length");
    Ring& R = M.ring();
    const auto& basis = M.std_basis();
    int n = static_cast<int>(basis.size());
    std::vector<int> degrees(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) degrees[static_cast<std::size_t>(i)] = -basis[static_cast<std::size_t>(i)].degree;
    std::vector<DenseMat> actions;
    for (int v = 0; v < R.nvars(); ++v) {
        std::vector<std::uint32_t> flat = M.action_matrix(v);
        DenseMat X(n, n);
        // contragredient action is the transpose
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                X.at(i, j) = flat[static_cast<std::size_t>(j) * static_cast<std::size_t>(n) +
                                  static_cast<std::size_t>(i)];
        actions.push_back(std::move(X));
    }
    return present_from_actions(R, degrees, actions, std::move(label));
}

Module& canonical_module(Ring& R) {
    if (R.canonical_) return *R.canonical_;
    Module& Rmod = R.as_module();
    int d = Rmod.dim();
    if (Rmod.depth() != d)
        throw std::invalid_argument("canonical_module: ring is not Cohen-Macaulay");
    int n = R.nvars();
    int c = n - d;

    // minimal resolution of R over the ambient polynomial ring
    RingOptions opt;
    opt.p = R.characteristic();
    opt.limits = R.limits();
    Ring ambient(R.var_names(), {}, opt);
    std::vector<FreeVector> icols;
    for (const FreeVector& g : R.ideal_gens()) icols.push_back(g);
    Module RoverS(ambient, {0}, icols, "R");
    const Resolution& res = RoverS.resolution(c + 1);
    if (res.betti(c + 1) != 0)
        throw std::logic_error("canonical_module: unexpected resolution length");

    std::vector<int> gen_deg;
    for (int a : res.twists[static_cast<std::size_t>(c)]) gen_deg.push_back(n - a);
    std::vector<FreeVector> rels;
    if (c > 0) {
        const std::vector<FreeVector>& cols = res.mats[static_cast<std::size_t>(c - 1)];  // d_c
        int prev = static_cast<int>(res.twists[static_cast<std::size_t>(c - 1)].size());
        // transpose: one relation column per generator of F_{c-1}
        for (int s = 0; s < prev; ++s) {
            std::vector<Term> terms;
            for (std::size_t t = 0; t < cols.size(); ++t)
                for (const Term& e : cols[t].terms())
                    if (e.comp == s)
                        terms.push_back(Term{static_cast<std::int32_t>(t), e.mono, e.coeff});
            rels.push_back(fv_normalize(R.ctx(), std::move(terms)));
        }
    }
    R.canonical_ = std::make_unique<Module>(R, gen_deg, std::move(rels), "omega");
    return *R.canonical_;
}

Module dagger(const Module& M, std::string label) {
    Ring& R = M.ring();
    Module& omega = canonical_module(R);
    int d = R.as_module().dim();
    int r = M.dim();
    return ext_module(M, omega, d - r, std::move(label));
}

} // namespace cmlab
