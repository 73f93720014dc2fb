#ifndef CMLAB_FREEVEC_HPP
#define CMLAB_FREEVEC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cmlab/fp.hpp"
#include "cmlab/monomial.hpp"

namespace cmlab {

/// Shared context for all term-level arithmetic: the coefficient field, the
/// monomial order and the number of live variables.
struct PolyContext {
    PrimeField fp;
    MonoOrder order = MonoOrder::Grevlex;
    int nvars = 0;
};

struct Term {
    std::int32_t comp = 0;  // free-module component (row index)
    Monomial mono;
    std::uint32_t coeff = 0;
};

/// Position-over-term: lower component index wins, ties broken by the
/// monomial order. Returns +1 if a > b.
inline int term_cmp(const Term& a, const Term& b, const PolyContext& cx) {
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return mono_cmp(a.mono, b.mono, cx.order, cx.nvars);
}

/// Element of a free module over the ambient polynomial ring: a term list
/// kept strictly descending in the module order with no zero coefficients.
/// Rank-one vectors double as plain polynomials.
class FreeVector {
public:
    FreeVector() = default;

    static FreeVector zero() { return FreeVector(); }

    static FreeVector term(std::int32_t comp, const Monomial& m, std::uint32_t c) {
        FreeVector f;
        if (c) f.t_.push_back(Term{comp, m, c});
        return f;
    }

    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    const Term& lead() const { return t_.front(); }
    const std::vector<Term>& terms() const { return t_; }
    std::vector<Term>& raw() { return t_; }

    bool operator==(const FreeVector& o) const {
        if (t_.size() != o.t_.size()) return false;
        for (std::size_t i = 0; i < t_.size(); ++i)
            if (t_[i].comp != o.t_[i].comp || t_[i].coeff != o.t_[i].coeff ||
                t_[i].mono != o.t_[i].mono)
                return false;
        return true;
    }
    bool operator!=(const FreeVector& o) const { return !(*this == o); }

private:
    std::vector<Term> t_;
};

/// Builds a vector from arbitrary (possibly unsorted, repeated) terms.
FreeVector fv_normalize(const PolyContext& cx, std::vector<Term> terms);

FreeVector fv_add(const PolyContext& cx, const FreeVector& a, const FreeVector& b);

/// a + c * x^m * b, the reduction workhorse. The monomial shift applies to
/// every term of b; components are untouched.
FreeVector fv_add_scaled(const PolyContext& cx, const FreeVector& a,
                         std::uint32_t c, const Monomial& m, const FreeVector& b);

FreeVector fv_scale(const PolyContext& cx, const FreeVector& a, std::uint32_t c);
FreeVector fv_mul_mono(const FreeVector& a, const Monomial& m);

/// Product of a rank-one polynomial with a vector.
FreeVector fv_mul_poly(const PolyContext& cx, const FreeVector& poly, const FreeVector& v);

FreeVector fv_monic(const PolyContext& cx, const FreeVector& a);

/// Re-index components: comp -> comp + shift.
FreeVector fv_shift_comp(const FreeVector& a, std::int32_t shift);

/// Keep only terms with comp >= from, re-based at zero.
FreeVector fv_slice_comps(const PolyContext& cx, const FreeVector& a, std::int32_t from);

/// Entry at a single component as a rank-one polynomial.
FreeVector fv_component(const FreeVector& a, std::int32_t comp);

/// Degree of a homogeneous vector under the given twists; asserts
/// homogeneity. Zero vectors have no degree; callers must check.
int fv_degree(const FreeVector& a, const std::vector<int>& twists);
bool fv_is_homogeneous(const FreeVector& a, const std::vector<int>& twists);

std::string fv_to_string(const FreeVector& a, const std::vector<std::string>& vars);

} // namespace cmlab

#endif
