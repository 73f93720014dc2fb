#ifndef CMLAB_INVARIANTS_HPP
#define CMLAB_INVARIANTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "cmlab/homology.hpp"
#include "cmlab/module.hpp"

namespace cmlab {

/// Per-module invariant report. hasMinMult tests the equality case of
///   e(M) >= mu(mM) + (1 - dim M) * mu(M)
/// on CM modules; isUlrich tests e(M) = mu(M).
struct InvariantReport {
    int dim = 0;
    int depth = 0;
    bool isCM = false;
    long long e = 0;
    long long mu = 0;
    long long mu_mM = 0;
    std::optional<long long> lambda;
    long long type = 0;
    bool hasMinMult = false;
    bool isUlrich = false;
    HomDimReport homdim;
};

InvariantReport invariant_report(const Module& M);

/// Structural ring classification, valid only for the minimalized
/// presentation (I inside m^2):
///   regular      <=>  I = 0
///   hypersurface <=>  mu(I) <= 1
///   Gorenstein   <=>  CM and type(R) = 1
///   min mult     <=>  CM and e(R) = mu(m) - dim + 1
///   field        <=>  dim = 0 and e = 1
struct RingClass {
    bool isRegular = false;
    bool isHypersurface = false;
    bool isGorenstein = false;
    bool isCM = false;
    bool hasMinMult = false;
    bool isField = false;
    long long e = 0;
    int dim = 0;
    int embdim = 0;
    long long type = 0;
};

RingClass classify_ring(Ring& R);

/// Heuristic polynomial-growth estimate for a Betti window; never a
/// certificate.
struct ComplexityEstimate {
    bool unbounded = false;
    int estimate = 0;
    bool heuristic = true;
};

ComplexityEstimate complexity_estimate(const std::vector<long long>& window);

} // namespace cmlab

#endif
