#ifndef CMLAB_SOP_HPP
#define CMLAB_SOP_HPP

#include <random>
#include <string>
#include <vector>

#include "cmlab/module.hpp"

namespace cmlab {

enum class CutMode { RegularOnly, Reduction };

struct CutResult {
    Module quotient;
    std::vector<FreeVector> forms;  // the linear forms used, in order
};

class CutError : public std::runtime_error {
public:
    explicit CutError(const std::string& w) : std::runtime_error(w) {}
};

/// Cuts M by t random homogeneous linear forms, each verified M-regular by
/// the exact Hilbert-series test H_{M/lM} = (1-t) H_M. In Reduction mode
/// (which requires t = dim M and M Cohen-Macaulay) the whole tuple is
/// resampled until lambda(M/xM) = e(M), so the output realizes the
/// multiplicity. Deterministic for a fixed generator state.
CutResult cut_by_general_sop(const Module& M, int t, CutMode mode, std::mt19937_64& rng,
                             int retries = 64);

/// One random nonzero linear form with coefficients uniform in F_p.
FreeVector random_linear_form(Ring& R, std::mt19937_64& rng);

} // namespace cmlab

#endif
