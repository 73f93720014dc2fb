#include "cmlab/freevec.hpp"

#include <algorithm>
#include <stdexcept>

namespace cmlab {

FreeVector fv_normalize(const PolyContext& cx, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return term_cmp(a, b, cx) > 0;
    });
    FreeVector out;
    auto& t = out.raw();
    for (const Term& x : terms) {
        if (!x.coeff) continue;
        if (!t.empty() && t.back().comp == x.comp && t.back().mono == x.mono) {
            t.back().coeff = cx.fp.add(t.back().coeff, x.coeff);
            if (!t.back().coeff) t.pop_back();
        } else {
            t.push_back(x);
        }
    }
    return out;
}

FreeVector fv_add(const PolyContext& cx, const FreeVector& a, const FreeVector& b) {
    return fv_add_scaled(cx, a, 1, Monomial::one(), b);
}

FreeVector fv_add_scaled(const PolyContext& cx, const FreeVector& a,
                         std::uint32_t c, const Monomial& m, const FreeVector& b) {
    FreeVector out;
    auto& t = out.raw();
    t.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    while (i < ta.size() && j < tb.size()) {
        Term shifted{tb[j].comp, mono_mul(tb[j].mono, m), cx.fp.mul(c, tb[j].coeff)};
        int cmp = term_cmp(ta[i], shifted, cx);
        if (cmp > 0) {
            t.push_back(ta[i++]);
        } else if (cmp < 0) {
            if (shifted.coeff) t.push_back(shifted);
            ++j;
        } else {
            std::uint32_t s = cx.fp.add(ta[i].coeff, shifted.coeff);
            if (s) t.push_back(Term{ta[i].comp, ta[i].mono, s});
            ++i;
            ++j;
        }
    }
    for (; i < ta.size(); ++i) t.push_back(ta[i]);
    for (; j < tb.size(); ++j) {
        Term shifted{tb[j].comp, mono_mul(tb[j].mono, m), cx.fp.mul(c, tb[j].coeff)};
        if (shifted.coeff) t.push_back(shifted);
    }
    return out;
}

FreeVector fv_scale(const PolyContext& cx, const FreeVector& a, std::uint32_t c) {
    if (!c) return FreeVector::zero();
    FreeVector out = a;
    for (Term& t : out.raw()) t.coeff = cx.fp.mul(t.coeff, c);
    return out;
}

FreeVector fv_mul_mono(const FreeVector& a, const Monomial& m) {
    FreeVector out = a;
    for (Term& t : out.raw()) t.mono = mono_mul(t.mono, m);
    return out;
}

FreeVector fv_mul_poly(const PolyContext& cx, const FreeVector& poly, const FreeVector& v) {
    FreeVector acc;
    for (const Term& p : poly.terms())
        acc = fv_add_scaled(cx, acc, p.coeff, p.mono, v);
    return acc;
}

FreeVector fv_monic(const PolyContext& cx, const FreeVector& a) {
    if (a.is_zero() || a.lead().coeff == 1) return a;
    return fv_scale(cx, a, cx.fp.inv(a.lead().coeff));
}

FreeVector fv_shift_comp(const FreeVector& a, std::int32_t shift) {
    FreeVector out = a;
    for (Term& t : out.raw()) t.comp += shift;
    return out;
}

FreeVector fv_slice_comps(const PolyContext& cx, const FreeVector& a, std::int32_t from) {
    std::vector<Term> keep;
    for (const Term& t : a.terms())
        if (t.comp >= from) keep.push_back(Term{t.comp - from, t.mono, t.coeff});
    return fv_normalize(cx, std::move(keep));
}

FreeVector fv_component(const FreeVector& a, std::int32_t comp) {
    FreeVector out;
    for (const Term& t : a.terms())
        if (t.comp == comp) out.raw().push_back(Term{0, t.mono, t.coeff});
    return out;
}

int fv_degree(const FreeVector& a, const std::vector<int>& twists) {
    if (a.is_zero()) throw std::logic_error("fv_degree: zero vector");
    const Term& l = a.lead();
    return l.mono.deg + twists.at(static_cast<std::size_t>(l.comp));
}

bool fv_is_homogeneous(const FreeVector& a, const std::vector<int>& twists) {
    if (a.is_zero()) return true;
    int d = fv_degree(a, twists);
    for (const Term& t : a.terms())
        if (t.mono.deg + twists.at(static_cast<std::size_t>(t.comp)) != d) return false;
    return true;
}

std::string fv_to_string(const FreeVector& a, const std::vector<std::string>& vars) {
    if (a.is_zero()) return "0";
    std::string s;
    for (const Term& t : a.terms()) {
        if (!s.empty()) s += " + ";
        s += std::to_string(t.coeff);
        if (!t.mono.is_one()) s += "*" + mono_to_string(t.mono, vars);
        s += "<" + std::to_string(t.comp) + ">";
    }
    return s;
}

} // namespace cmlab
