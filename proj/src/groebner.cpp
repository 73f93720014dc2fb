#include "cmlab/groebner.hpp"

#include <algorithm>
#include <numeric>

namespace cmlab {

FreeVector normal_form(const PolyContext& cx, const FreeVector& f,
                       const std::vector<FreeVector>& G) {
    FreeVector h = f;
    std::vector<Term> remainder;
    while (!h.is_zero()) {
        const Term& lt = h.lead();
        bool reduced = false;
        for (const FreeVector& g : G) {
            if (g.is_zero()) continue;
            const Term& gl = g.lead();
            if (gl.comp != lt.comp || !mono_divides(gl.mono, lt.mono)) continue;
            Monomial q = mono_div(lt.mono, gl.mono);
            std::uint32_t c = cx.fp.neg(cx.fp.div(lt.coeff, gl.coeff));
            h = fv_add_scaled(cx, h, c, q, g);
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.push_back(lt);
            h.raw().erase(h.raw().begin());
        }
    }
    FreeVector r;
    r.raw() = std::move(remainder);
    return r;
}

bool GroebnerEngine::add(const FreeVector& f) {
    FreeVector nf = normal_form(cx_, f, basis_);
    if (nf.is_zero()) return false;
    nf = fv_monic(cx_, nf);
    int n = static_cast<int>(basis_.size());
    bool single = true;
    for (const Term& t : nf.terms())
        if (t.comp != nf.lead().comp) { single = false; break; }
    basis_.push_back(std::move(nf));
    single_comp_.push_back(single);
    done_.emplace_back(static_cast<std::size_t>(n), false);
    push_pairs(n);
    return true;
}

void GroebnerEngine::push_pairs(int n) {
    const Term& ln = basis_[static_cast<std::size_t>(n)].lead();
    for (int i = 0; i < n; ++i) {
        const Term& li = basis_[static_cast<std::size_t>(i)].lead();
        if (li.comp != ln.comp) {
            done_[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)] = true;
            continue;
        }
        // The product criterion is only valid when both elements are
        // supported in a single component.
        if (single_comp_[static_cast<std::size_t>(i)] && single_comp_[static_cast<std::size_t>(n)] &&
            mono_coprime(li.mono, ln.mono)) {
            done_[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)] = true;
            continue;
        }
        Pair p;
        p.i = i;
        p.j = n;
        p.lcm = mono_lcm(li.mono, ln.mono);
        p.deg = p.lcm.deg;
        queue_.push_back(p);
    }
    std::sort(queue_.begin(), queue_.end(), [](const Pair& a, const Pair& b) {
        if (a.deg != b.deg) return a.deg > b.deg;
        if (a.j != b.j) return a.j > b.j;
        return a.i > b.i;
    });
}

bool GroebnerEngine::chain_criterion(const Pair& p) const {
    for (std::size_t l = 0; l < basis_.size(); ++l) {
        int li = static_cast<int>(l);
        if (li == p.i || li == p.j) continue;
        const Term& lt = basis_[l].lead();
        if (lt.comp != basis_[static_cast<std::size_t>(p.i)].lead().comp) continue;
        if (!mono_divides(lt.mono, p.lcm)) continue;
        auto is_done = [&](int a, int b) {
            if (a == b) return true;
            int lo = std::min(a, b), hi = std::max(a, b);
            return done_[static_cast<std::size_t>(hi)][static_cast<std::size_t>(lo)];
        };
        if (is_done(p.i, li) && is_done(p.j, li)) return true;
    }
    return false;
}

void GroebnerEngine::complete() {
    while (!queue_.empty()) {
        Pair p = queue_.back();
        queue_.pop_back();
        done_[static_cast<std::size_t>(p.j)][static_cast<std::size_t>(p.i)] = true;
        if (++pairs_processed_ > lim_.max_pairs)
            throw ResourceLimitError("groebner: pair limit exceeded");
        if (p.deg > lim_.max_degree)
            throw ResourceLimitError("groebner: degree limit exceeded");
        if (chain_criterion(p)) continue;

        const FreeVector& fi = basis_[static_cast<std::size_t>(p.i)];
        const FreeVector& fj = basis_[static_cast<std::size_t>(p.j)];
        Monomial qi = mono_div(p.lcm, fi.lead().mono);
        Monomial qj = mono_div(p.lcm, fj.lead().mono);
        // both monic: S = qi*fi - qj*fj
        FreeVector s = fv_add_scaled(cx_, fv_mul_mono(fi, qi), cx_.fp.neg(1), qj, fj);
        FreeVector nf = normal_form(cx_, s, basis_);
        if (nf.is_zero()) continue;
        nf = fv_monic(cx_, nf);
        int n = static_cast<int>(basis_.size());
        bool single = true;
        for (const Term& t : nf.terms())
            if (t.comp != nf.lead().comp) { single = false; break; }
        basis_.push_back(std::move(nf));
        single_comp_.push_back(single);
        done_.emplace_back(static_cast<std::size_t>(n), false);
        push_pairs(n);
    }
}

std::vector<FreeVector> GroebnerEngine::reduced_basis() const {
    // drop elements whose lead is divisible by another lead
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis_.size(); ++j) {
            if (i == j) continue;
            const Term& li = basis_[i].lead();
            const Term& lj = basis_[j].lead();
            if (lj.comp == li.comp && mono_divides(lj.mono, li.mono) &&
                (lj.mono != li.mono || j < i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) keep.push_back(i);
    }
    std::vector<FreeVector> minimal;
    minimal.reserve(keep.size());
    for (std::size_t i : keep) minimal.push_back(basis_[i]);
    // tail-reduce each against the others
    std::vector<FreeVector> out;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<FreeVector> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        out.push_back(fv_monic(cx_, normal_form(cx_, minimal[i], others)));
    }
    std::sort(out.begin(), out.end(), [&](const FreeVector& a, const FreeVector& b) {
        return term_cmp(a.lead(), b.lead(), cx_) > 0;
    });
    return out;
}

std::vector<FreeVector> buchberger(const PolyContext& cx, const std::vector<FreeVector>& gens,
                                   const GroebnerLimits& lim) {
    GroebnerEngine eng(cx, lim);
    for (const FreeVector& g : gens) {
        eng.add(g);
        eng.complete();
    }
    return eng.reduced_basis();
}

std::vector<FreeVector> syzygy_basis(const PolyContext& cx, const std::vector<FreeVector>& tracked,
                                     const std::vector<FreeVector>& untracked, int rank,
                                     const GroebnerLimits& lim) {
    GroebnerEngine eng(cx, lim);
    for (std::size_t i = 0; i < tracked.size(); ++i) {
        FreeVector aug = fv_add(cx, tracked[i],
                                FreeVector::term(rank + static_cast<std::int32_t>(i),
                                                 Monomial::one(), 1));
        eng.add(aug);
        eng.complete();
    }
    for (const FreeVector& u : untracked) {
        eng.add(u);
        eng.complete();
    }
    std::vector<FreeVector> syz;
    for (const FreeVector& g : eng.basis()) {
        if (g.is_zero()) continue;
        if (g.lead().comp >= rank)
            syz.push_back(fv_shift_comp(g, -rank));
    }
    std::sort(syz.begin(), syz.end(), [&](const FreeVector& a, const FreeVector& b) {
        return term_cmp(a.lead(), b.lead(), cx) > 0;
    });
    return syz;
}

std::vector<std::size_t> minimal_generator_indices(const PolyContext& cx,
                                                   const std::vector<FreeVector>& gens,
                                                   const std::vector<int>& twists,
                                                   const std::vector<FreeVector>& background,
                                                   const GroebnerLimits& lim) {
    std::vector<std::size_t> order(gens.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        bool za = gens[a].is_zero(), zb = gens[b].is_zero();
        if (za != zb) return zb;  // nonzero first; zeros are dropped anyway
        if (za) return false;
        return fv_degree(gens[a], twists) < fv_degree(gens[b], twists);
    });
    GroebnerEngine eng(cx, lim);
    for (const FreeVector& b : background) {
        eng.add(b);
        eng.complete();
    }
    std::vector<std::size_t> accepted;
    for (std::size_t idx : order) {
        if (gens[idx].is_zero()) continue;
        if (eng.add(gens[idx])) {
            eng.complete();
            accepted.push_back(idx);
        }
    }
    std::sort(accepted.begin(), accepted.end());
    return accepted;
}

} // namespace cmlab
