#include "cmlab/hilbert.hpp"

#include <algorithm>
#include <stdexcept>

namespace cmlab {

void LaurentPoly::trim() {
    std::size_t lead = 0;
    while (lead < c.size() && c[lead] == 0) ++lead;
    if (lead) {
        c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(lead));
        off += static_cast<int>(lead);
    }
    while (!c.empty() && c.back() == 0) c.pop_back();
    if (c.empty()) off = 0;
}

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int off = std::min(a.off, b.off);
    int top = std::max(a.off + static_cast<int>(a.c.size()), b.off + static_cast<int>(b.c.size()));
    LaurentPoly r;
    r.off = off;
    r.c.assign(static_cast<std::size_t>(top - off), 0);
    for (std::size_t i = 0; i < a.c.size(); ++i)
        r.c[static_cast<std::size_t>(a.off - off) + i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i)
        r.c[static_cast<std::size_t>(b.off - off) + i] += b.c[i];
    r.trim();
    return r;
}

LaurentPoly lp_shift(const LaurentPoly& a, int k) {
    LaurentPoly r = a;
    if (!r.is_zero()) r.off += k;
    return r;
}

LaurentPoly lp_mul_one_minus_t(const LaurentPoly& a) {
    LaurentPoly minus = lp_shift(a, 1);
    for (long long& v : minus.c) v = -v;
    return lp_add(a, minus);
}

LaurentPoly lp_div_one_minus_t(const LaurentPoly& a) {
    if (a.is_zero()) return a;
    // synthetic division: a(t) = (1-t) * q(t)
    LaurentPoly q;
    q.off = a.off;
    q.c.assign(a.c.size() ? a.c.size() - 1 : 0, 0);
    long long carry = 0;
    for (std::size_t i = 0; i + 1 < a.c.size(); ++i) {
        carry += a.c[i];
        q.c[i] = carry;
    }
    carry += a.c.empty() ? 0 : a.c.back();
    if (carry != 0) throw std::logic_error("lp_div_one_minus_t: not divisible");
    q.trim();
    return q;
}

long long HilbertSeries::coeff(int d) const {
    if (zero) return 0;
    // q(t) / (1-t)^dim
    long long s = 0;
    for (std::size_t i = 0; i < q.c.size(); ++i) {
        int e = q.off + static_cast<int>(i);
        if (e > d) break;
        if (dim == 0) {
            if (e == d) s += q.c[i];
            continue;
        }
        // binomial C(d-e+dim-1, dim-1)
        long long n = d - e + dim - 1;
        long long b = 1;
        for (int k = 1; k <= dim - 1; ++k) b = b * (n - dim + 1 + k) / k;
        s += q.c[i] * b;
    }
    return s;
}

bool HilbertSeries::operator==(const HilbertSeries& o) const {
    return nvars == o.nvars && zero == o.zero && dim == o.dim && q.off == o.q.off &&
           q.c == o.q.c;
}

HilbertSeries hilbert_from_numerator(int nvars, LaurentPoly numerator) {
    HilbertSeries h;
    h.nvars = nvars;
    numerator.trim();
    h.numerator = numerator;
    if (numerator.is_zero()) {
        h.zero = true;
        h.dim = 0;
        return h;
    }
    LaurentPoly q = numerator;
    int v = 0;
    while (q.eval_one() == 0) {
        q = lp_div_one_minus_t(q);
        ++v;
    }
    if (v > nvars) throw std::logic_error("hilbert: negative pole order");
    h.q = q;
    h.dim = nvars - v;
    return h;
}

namespace {

std::vector<Monomial> interreduce(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        return a.deg < b.deg;
    });
    std::vector<Monomial> out;
    for (const Monomial& m : gens) {
        bool redundant = false;
        for (const Monomial& g : out)
            if (mono_divides(g, m)) { redundant = true; break; }
        if (!redundant) out.push_back(m);
    }
    return out;
}

LaurentPoly numerator_rec(std::vector<Monomial> gens, int nvars) {
    gens = interreduce(std::move(gens));
    LaurentPoly one;
    one.c = {1};
    if (gens.empty()) return one;
    if (gens.front().is_one()) return LaurentPoly{};
    // all generators squarefree of degree 1: product of (1-t)
    bool all_vars = true;
    for (const Monomial& m : gens)
        if (m.deg != 1) { all_vars = false; break; }
    if (all_vars) {
        LaurentPoly r = one;
        for (std::size_t i = 0; i < gens.size(); ++i) r = lp_mul_one_minus_t(r);
        return r;
    }
    // pivot: a variable occurring in a generator of maximal degree
    const Monomial* big = &gens.front();
    for (const Monomial& m : gens)
        if (m.deg > big->deg) big = &m;
    int pv = 0;
    for (int i = 0; i < nvars; ++i)
        if (big->e[i]) { pv = i; break; }
    Monomial x = Monomial::var(pv);
    // N(J) = N(J + (x)) + t * N(J : x)
    std::vector<Monomial> plus = gens;
    plus.push_back(x);
    std::vector<Monomial> colon;
    colon.reserve(gens.size());
    for (const Monomial& m : gens) {
        if (m.e[pv]) {
            Monomial d = m;
            d.e[pv] -= 1;
            d.deg -= 1;
            colon.push_back(d);
        } else {
            colon.push_back(m);
        }
    }
    return lp_add(numerator_rec(std::move(plus), nvars),
                  lp_shift(numerator_rec(std::move(colon), nvars), 1));
}

} // namespace

LaurentPoly monomial_ideal_numerator(std::vector<Monomial> gens, int nvars) {
    return numerator_rec(std::move(gens), nvars);
}

} // namespace cmlab
