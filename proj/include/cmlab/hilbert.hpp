#ifndef CMLAB_HILBERT_HPP
#define CMLAB_HILBERT_HPP

#include <optional>
#include <vector>

#include "cmlab/monomial.hpp"

namespace cmlab {

/// Integer Laurent polynomial: coefficients c[0..] starting at exponent off.
/// Twists of Matlis duals are negative, hence Laurent rather than plain.
struct LaurentPoly {
    int off = 0;
    std::vector<long long> c;

    bool is_zero() const { return c.empty(); }
    long long at(int e) const {
        int i = e - off;
        return (i >= 0 && i < static_cast<int>(c.size())) ? c[static_cast<std::size_t>(i)] : 0;
    }
    long long eval_one() const {
        long long s = 0;
        for (long long v : c) s += v;
        return s;
    }
    void trim();
};

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_shift(const LaurentPoly& a, int k);           // * t^k
LaurentPoly lp_mul_one_minus_t(const LaurentPoly& a);        // * (1-t)
/// Exact division by (1-t); caller guarantees a(1) == 0.
LaurentPoly lp_div_one_minus_t(const LaurentPoly& a);

/// Hilbert series of a graded module presented over an ambient polynomial
/// ring in `nvars` variables: numerator over (1-t)^nvars, plus the reduced
/// form q(t)/(1-t)^dim with q(1) != 0. Pole order equals Krull dimension;
/// q(1) is the multiplicity, and the length when dim == 0.
struct HilbertSeries {
    int nvars = 0;
    LaurentPoly numerator;  // over (1-t)^nvars
    LaurentPoly q;          // reduced numerator
    int dim = 0;            // pole order; 0 for the zero module as well
    bool zero = false;

    long long multiplicity() const { return zero ? 0 : q.eval_one(); }
    std::optional<long long> length() const {
        if (zero) return 0;
        if (dim > 0) return std::nullopt;
        return q.eval_one();
    }
    /// Coefficient of t^d in the series expansion.
    long long coeff(int d) const;

    bool operator==(const HilbertSeries& o) const;
};

HilbertSeries hilbert_from_numerator(int nvars, LaurentPoly numerator);

/// Numerator of S/J over (1-t)^nvars for a monomial ideal J.
LaurentPoly monomial_ideal_numerator(std::vector<Monomial> gens, int nvars);

} // namespace cmlab

#endif
