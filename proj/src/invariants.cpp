#include "cmlab/invariants.hpp"

#include <cmath>
#include <stdexcept>

namespace cmlab {

InvariantReport invariant_report(const Module& M) {
    if (M.is_zero()) throw std::invalid_argument("invariant_report: zero module");
    InvariantReport r;
    r.dim = M.dim();
    r.depth = M.depth();
    r.isCM = r.dim == r.depth;
    r.e = M.multiplicity();
    r.mu = M.mu();
    r.mu_mM = M.mu_of_mM();
    r.lambda = M.length();
    r.type = M.type();
    r.hasMinMult = r.isCM && r.e == r.mu_mM + (1 - r.dim) * r.mu;
    r.isUlrich = r.isCM && r.e == r.mu;
    r.homdim = hom_dim_report(M);
    return r;
}

RingClass classify_ring(Ring& R) {
    if (!R.classification_allowed())
        throw std::invalid_argument(
            "classify_ring: presentation has linear generators; classification needs I in m^2");
    RingClass c;
    Module& RM = R.as_module();
    c.dim = RM.dim();
    c.embdim = R.nvars();
    c.e = RM.multiplicity();
    c.isCM = RM.depth() == c.dim;
    c.type = RM.type();
    std::size_t mu_I = R.ideal_gens().size();
    c.isRegular = mu_I == 0;
    c.isHypersurface = mu_I <= 1;
    c.isGorenstein = c.isCM && c.type == 1;
    c.hasMinMult = c.isCM && c.e == c.embdim - c.dim + 1;
    c.isField = c.dim == 0 && c.e == 1;
    return c;
}

ComplexityEstimate complexity_estimate(const std::vector<long long>& window) {
    if (window.size() < 6)
        throw std::invalid_argument("complexity_estimate: window of at least 6 values needed");
    ComplexityEstimate out;
    std::size_t n = window.size();
    if (window[n - 1] == 0) {
        // minimal resolutions stay zero once they hit zero
        out.estimate = 0;
        return out;
    }
    for (long long b : window)
        if (b <= 0)
            throw std::invalid_argument("complexity_estimate: not a Betti window");
    // geometric growth test on the tail
    bool geometric = true;
    for (std::size_t i = n / 2; i + 1 < n; ++i)
        if (4 * window[i + 1] < 5 * window[i]) { geometric = false; break; }
    if (geometric && window[n - 1] > window[n / 2]) {
        out.unbounded = true;
        return out;
    }
    // log-log slope between the middle and the end of the window
    std::size_t mid = n / 2;
    double slope = (std::log(static_cast<double>(window[n - 1])) -
                    std::log(static_cast<double>(window[mid]))) /
                   (std::log(static_cast<double>(n - 1 + 1)) -
                    std::log(static_cast<double>(mid + 1)));
    int deg = static_cast<int>(std::lround(std::max(0.0, slope)));
    out.estimate = deg + 1;
    return out;
}

} // namespace cmlab
