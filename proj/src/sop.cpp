#include "cmlab/sop.hpp"

#include <stdexcept>

namespace cmlab {

FreeVector random_linear_form(Ring& R, std::mt19937_64& rng) {
    if (R.nvars() == 0) throw CutError("random_linear_form: ring has no variables");
    std::uniform_int_distribution<std::uint32_t> coef(0, R.characteristic() - 1);
    for (;;) {
        std::vector<Term> terms;
        for (int v = 0; v < R.nvars(); ++v) {
            std::uint32_t c = coef(rng);
            if (c) terms.push_back(Term{0, Monomial::var(v), c});
        }
        if (!terms.empty()) return fv_normalize(R.ctx(), std::move(terms));
    }
}

namespace {

Module cut_once(const Module& M, const FreeVector& ell) {
    Ring& R = M.ring();
    std::vector<FreeVector> rels = M.relations();
    for (int c = 0; c < M.rank(); ++c) {
        FreeVector col;
        for (const Term& t : ell.terms()) col.raw().push_back(Term{c, t.mono, t.coeff});
        rels.push_back(std::move(col));
    }
    return Module(R, M.twists(), std::move(rels), M.label + "/l");
}

bool hilbert_drop_exact(const Module& M, const Module& Q) {
    // H_Q == (1 - t) H_M as rational functions over the same denominator
    LaurentPoly lhs = Q.hilbert().numerator;
    LaurentPoly rhs = lp_mul_one_minus_t(M.hilbert().numerator);
    lhs.trim();
    rhs.trim();
    return lhs.off == rhs.off && lhs.c == rhs.c;
}

} // namespace

CutResult cut_by_general_sop(const Module& M, int t, CutMode mode, std::mt19937_64& rng,
                             int retries) {
    if (t < 0 || t > M.dim())
        throw std::invalid_argument("cut_by_general_sop: t exceeds the dimension");
    if (mode == CutMode::Reduction && t != M.dim())
        throw std::invalid_argument("cut_by_general_sop: a reduction needs a full system of parameters");
    long long e = M.multiplicity();

    for (int attempt = 0; attempt < retries; ++attempt) {
        Module cur(M.ring(), M.twists(), M.relations(), M.label);
        std::vector<FreeVector> forms;
        bool ok = true;
        for (int i = 0; i < t && ok; ++i) {
            bool found = false;
            for (int tries = 0; tries < retries; ++tries) {
                FreeVector ell = random_linear_form(M.ring(), rng);
                Module q = cut_once(cur, ell);
                if (hilbert_drop_exact(cur, q)) {
                    forms.push_back(ell);
                    cur = std::move(q);
                    found = true;
                    break;
                }
            }
            if (!found) ok = false;
        }
        if (!ok) {
            if (mode == CutMode::RegularOnly)
                throw CutError("cut_by_general_sop: no regular form found (module may have depth 0)");
            continue;
        }
        if (mode == CutMode::RegularOnly)
            return CutResult{std::move(cur), std::move(forms)};
        auto len = cur.length();
        if (len && *len == e) return CutResult{std::move(cur), std::move(forms)};
        // not a reduction; resample the whole tuple
    }
    throw CutError(mode == CutMode::Reduction
                       ? "cut_by_general_sop: reduction not found (field too small or module not CM)"
                       : "cut_by_general_sop: no regular sequence found");
}

} // namespace cmlab
