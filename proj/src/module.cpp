#include "cmlab/module.hpp"

#include <algorithm>
#include <stdexcept>

#include "cmlab/homology.hpp"

namespace cmlab {

Module::Module(Ring& ring, std::vector<int> gen_degrees, std::vector<FreeVector> relations,
               std::string label_)
    : label(std::move(label_)), ring_(&ring), twists_(std::move(gen_degrees)) {
    rels_.reserve(relations.size());
    for (FreeVector& r : relations) {
        if (r.is_zero()) continue;
        for (const Term& t : r.terms())
            if (t.comp < 0 || t.comp >= rank())
                throw std::invalid_argument("module: relation component out of range");
        if (!fv_is_homogeneous(r, twists_))
            throw std::invalid_argument("module: inhomogeneous relation column");
        rels_.push_back(std::move(r));
    }
}

const std::vector<FreeVector>& Module::groebner() const {
    if (!gb_) {
        std::vector<FreeVector> gens = rels_;
        std::vector<FreeVector> bg = ring_->ideal_in_free(rank());
        gens.insert(gens.end(), bg.begin(), bg.end());
        gb_ = std::make_unique<std::vector<FreeVector>>(
            buchberger(ring_->ctx(), gens, ring_->limits()));
    }
    return *gb_;
}

const HilbertSeries& Module::hilbert() const {
    if (!hs_) {
        // leading-term module of the relations, one monomial ideal per component
        LaurentPoly num;
        for (int c = 0; c < rank(); ++c) {
            std::vector<Monomial> lt;
            for (const FreeVector& g : groebner())
                if (g.lead().comp == c) lt.push_back(g.lead().mono);
            LaurentPoly nc = monomial_ideal_numerator(std::move(lt), ring_->nvars());
            num = lp_add(num, lp_shift(nc, twists_[static_cast<std::size_t>(c)]));
        }
        hs_ = std::make_unique<HilbertSeries>(hilbert_from_numerator(ring_->nvars(), num));
    }
    return *hs_;
}

bool Module::is_zero() const {
    for (int c = 0; c < rank(); ++c) {
        FreeVector e = FreeVector::term(c, Monomial::one(), 1);
        if (!normal_form(ring_->ctx(), e, groebner()).is_zero()) return false;
    }
    return true;
}

const Module* Module::minimal_impl() const {
    const PolyContext& cx = ring_->ctx();
    std::vector<int> tw = twists_;
    std::vector<FreeVector> cols;
    cols.reserve(rels_.size());
    for (const FreeVector& r : rels_) {
        FreeVector v = normal_form(cx, r, ring_->ideal_in_free(rank()));
        if (!v.is_zero()) cols.push_back(v);
    }

    bool changed = cols.size() != rels_.size();
    // eliminate unit entries: a degree-zero coefficient makes a generator
    // redundant
    for (;;) {
        int hit_col = -1, hit_comp = -1;
        std::uint32_t unit = 0;
        for (std::size_t j = 0; j < cols.size() && hit_col < 0; ++j)
            for (const Term& t : cols[j].terms())
                if (t.mono.deg == 0) {
                    hit_col = static_cast<int>(j);
                    hit_comp = t.comp;
                    unit = t.coeff;
                    break;
                }
        if (hit_col < 0) break;
        changed = true;
        FreeVector pivot = cols[static_cast<std::size_t>(hit_col)];
        std::uint32_t uinv = cx.fp.inv(unit);
        std::vector<FreeVector> next;
        next.reserve(cols.size() - 1);
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (static_cast<int>(j) == hit_col) continue;
            FreeVector w = cols[j];
            FreeVector wc = fv_component(w, hit_comp);
            if (!wc.is_zero()) {
                FreeVector corr = fv_mul_poly(cx, fv_scale(cx, wc, cx.fp.neg(uinv)), pivot);
                w = fv_add(cx, w, corr);
            }
            // drop the dead component and reindex
            std::vector<Term> kept;
            for (const Term& t : w.terms()) {
                if (t.comp == hit_comp) continue;  // zero by construction mod I
                kept.push_back(Term{t.comp > hit_comp ? t.comp - 1 : t.comp, t.mono, t.coeff});
            }
            FreeVector w2 = fv_normalize(cx, std::move(kept));
            w2 = normal_form(cx, w2, ring_->ideal_in_free(static_cast<int>(tw.size()) - 1));
            if (!w2.is_zero()) next.push_back(w2);
        }
        tw.erase(tw.begin() + hit_comp);
        cols = std::move(next);
    }

    // prune relation columns to a minimal generating set
    std::vector<FreeVector> bg = ring_->ideal_in_free(static_cast<int>(tw.size()));
    std::vector<std::size_t> keep =
        minimal_generator_indices(cx, cols, tw, bg, ring_->limits());
    if (keep.size() != cols.size()) changed = true;
    if (!changed) return this;
    std::vector<FreeVector> kept_cols;
    kept_cols.reserve(keep.size());
    for (std::size_t k : keep) kept_cols.push_back(cols[k]);
    std::stable_sort(kept_cols.begin(), kept_cols.end(),
                     [&](const FreeVector& a, const FreeVector& b) {
                         return fv_degree(a, tw) < fv_degree(b, tw);
                     });
    minimal_ = std::make_unique<Module>(*ring_, tw, kept_cols, label);
    minimal_->minimal_checked_ = true;
    return minimal_.get();
}

const Module& Module::minimal() const {
    if (minimal_checked_) return minimal_ ? *minimal_ : *this;
    const Module* m = minimal_impl();
    minimal_checked_ = true;
    return *m;
}

long long Module::mu() const { return minimal().rank(); }

long long Module::mu_of_mM() const {
    if (!mu_mm_) {
        const Module& m = minimal();
        const PolyContext& cx = ring_->ctx();
        std::vector<FreeVector> gens;
        std::vector<int> degs;
        for (int c = 0; c < m.rank(); ++c)
            for (int v = 0; v < ring_->nvars(); ++v) {
                gens.push_back(FreeVector::term(c, Monomial::var(v), 1));
                degs.push_back(m.twists()[static_cast<std::size_t>(c)] + 1);
            }
        // membership against the relation module of M
        std::vector<FreeVector> bg = m.groebner();
        std::vector<std::size_t> keep =
            minimal_generator_indices(cx, gens, m.twists(), bg, ring_->limits());
        mu_mm_ = static_cast<long long>(keep.size());
    }
    return *mu_mm_;
}

const Resolution& Module::resolution(int through) const {
    const Module& m = minimal();
    if (&m != this) return m.resolution(through);
    if (!res_) {
        res_ = std::make_unique<Resolution>();
        res_->twists.push_back(twists_);
        std::vector<int> t1;
        for (const FreeVector& c : rels_) t1.push_back(fv_degree(c, twists_));
        res_->twists.push_back(t1);
        res_->mats.push_back(rels_);
        if (rels_.empty()) res_->finished = true;
    }
    if (res_->through() < through) {
        Ring* R = ring_;
        extend_resolution(
            ring_->ctx(), ring_->limits(),
            [R](int rank) { return R->ideal_in_free(rank); }, *res_, through);
    }
    return *res_;
}

long long Module::betti(int n) const {
    if (n < 0) return 0;
    return resolution(n).betti(n);
}

int Module::pd_ambient() const {
    // As an S-module the presentation acquires the I*F columns. Entries of a
    // minimal R-presentation lie in m and I sits inside m^2, so the
    // generators stay minimal over S; only the relation columns need
    // pruning. Hilbert's syzygy theorem bounds the length by nvars.
    const Module& m = minimal();
    if (&m != this) return m.pd_ambient();
    const PolyContext& cx = ring_->ctx();
    if (!res_ambient_) {
        std::vector<FreeVector> cols = rels_;
        std::vector<FreeVector> ibg = ring_->ideal_in_free(rank());
        cols.insert(cols.end(), ibg.begin(), ibg.end());
        std::vector<std::size_t> keep =
            minimal_generator_indices(cx, cols, twists_, {}, ring_->limits());
        std::vector<FreeVector> kept;
        for (std::size_t k : keep) kept.push_back(cols[k]);
        std::stable_sort(kept.begin(), kept.end(), [&](const FreeVector& a, const FreeVector& b) {
            return fv_degree(a, twists_) < fv_degree(b, twists_);
        });
        res_ambient_ = std::make_unique<Resolution>();
        res_ambient_->twists.push_back(twists_);
        std::vector<int> t1;
        for (const FreeVector& c : kept) t1.push_back(fv_degree(c, twists_));
        res_ambient_->twists.push_back(std::move(t1));
        res_ambient_->mats.push_back(std::move(kept));
        if (res_ambient_->mats[0].empty()) res_ambient_->finished = true;
    }
    extend_resolution(
        cx, ring_->limits(), [](int) { return std::vector<FreeVector>{}; }, *res_ambient_,
        ring_->nvars() + 1);
    if (!res_ambient_->finished)
        throw std::logic_error("pd_ambient: resolution exceeds the Hilbert bound");
    int pd = res_ambient_->through();
    while (pd > 0 && res_ambient_->betti(pd) == 0) --pd;
    return pd;
}

int Module::depth() const {
    if (!depth_) {
        if (is_zero()) throw std::invalid_argument("depth: zero module");
        depth_ = ring_->nvars() - pd_ambient();
    }
    return *depth_;
}

long long Module::bass(int n) const {
    if (n < 0) return 0;
    auto it = bass_.find(n);
    if (it != bass_.end()) return it->second;
    HomologyResult h = ext_dim(ring_->residue_field(), *this, n, true);
    if (!h.k_dim)
        throw std::logic_error("bass: Ext(k,M) must have finite length");
    bass_[n] = *h.k_dim;
    return *h.k_dim;
}

bool Module::radical_square_kills() const {
    const Module& m = minimal();
    const PolyContext& cx = ring_->ctx();
    for (int c = 0; c < m.rank(); ++c)
        for (int u = 0; u < ring_->nvars(); ++u)
            for (int v = u; v < ring_->nvars(); ++v) {
                FreeVector f = FreeVector::term(c, mono_mul(Monomial::var(u), Monomial::var(v)), 1);
                if (!normal_form(cx, f, m.groebner()).is_zero()) return false;
            }
    return true;
}

const std::vector<Module::BasisElem>& Module::std_basis() const {
    if (!basis_) {
        if (dim() != 0)
            throw std::invalid_argument("std_basis: module has infinite length");
        std::vector<BasisElem> basis;
        for (int c = 0; c < rank(); ++c) {
            std::vector<Monomial> lt;
            for (const FreeVector& g : groebner())
                if (g.lead().comp == c) lt.push_back(g.lead().mono);
            // enumerate standard monomials degree by degree
            std::vector<Monomial> level{Monomial::one()};
            auto standard = [&](const Monomial& m) {
                for (const Monomial& l : lt)
                    if (mono_divides(l, m)) return false;
                return true;
            };
            if (standard(Monomial::one()))
                basis.push_back(BasisElem{c, Monomial::one(), twists_[static_cast<std::size_t>(c)]});
            else
                level.clear();
            while (!level.empty()) {
                std::vector<Monomial> next;
                for (const Monomial& m : level)
                    for (int v = 0; v < ring_->nvars(); ++v) {
                        Monomial cand = mono_mul(m, Monomial::var(v));
                        // avoid duplicates: only extend by variables >= the
                        // largest variable present
                        bool canonical = true;
                        for (int w = v + 1; w < ring_->nvars(); ++w)
                            if (m.e[w]) { canonical = false; break; }
                        if (!canonical) continue;
                        if (standard(cand)) next.push_back(cand);
                    }
                for (const Monomial& m : next)
                    basis.push_back(BasisElem{c, m, twists_[static_cast<std::size_t>(c)] +
                                                        static_cast<int>(m.deg)});
                level = std::move(next);
            }
        }
        std::stable_sort(basis.begin(), basis.end(), [&](const BasisElem& a, const BasisElem& b) {
            if (a.degree != b.degree) return a.degree < b.degree;
            if (a.comp != b.comp) return a.comp < b.comp;
            return mono_cmp(a.mono, b.mono, ring_->ctx().order, ring_->nvars()) > 0;
        });
        auto len = length();
        if (!len || static_cast<long long>(basis.size()) != *len)
            throw std::logic_error("std_basis: size disagrees with Hilbert series");
        basis_ = std::make_unique<std::vector<BasisElem>>(std::move(basis));
    }
    return *basis_;
}

std::vector<std::uint32_t> Module::action_matrix(int v) const {
    const auto& basis = std_basis();
    const PolyContext& cx = ring_->ctx();
    std::size_t n = basis.size();
    std::vector<std::uint32_t> mat(n * n, 0);
    auto find_index = [&](int comp, const Monomial& m) -> std::size_t {
        for (std::size_t i = 0; i < n; ++i)
            if (basis[i].comp == comp && basis[i].mono == m) return i;
        throw std::logic_error("action_matrix: missing standard monomial");
    };
    for (std::size_t j = 0; j < n; ++j) {
        FreeVector x = FreeVector::term(basis[j].comp, mono_mul(basis[j].mono, Monomial::var(v)), 1);
        FreeVector nf = normal_form(cx, x, groebner());
        for (const Term& t : nf.terms()) {
            std::size_t i = find_index(t.comp, t.mono);
            mat[i * n + j] = t.coeff;
        }
    }
    return mat;
}

Module quotient_module(Ring& R, std::vector<FreeVector> polys, std::string label) {
    std::vector<FreeVector> rels;
    rels.reserve(polys.size());
    for (FreeVector& p : polys)
        if (!p.is_zero()) rels.push_back(std::move(p));
    return Module(R, {0}, std::move(rels), std::move(label));
}

} // namespace cmlab
