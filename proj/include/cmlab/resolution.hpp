#ifndef CMLAB_RESOLUTION_HPP
#define CMLAB_RESOLUTION_HPP

#include <functional>
#include <stdexcept>
#include <vector>

#include "cmlab/freevec.hpp"
#include "cmlab/groebner.hpp"

namespace cmlab {

/// Truncated minimal free resolution
///   F_0 <- F_1 <- ... <- F_t
/// twists[i] lists the generator degrees of F_i; mats[i] holds the columns
/// of d_{i+1} as vectors in F_i. Minimality: every matrix entry lies in the
/// irrelevant maximal ideal, equivalently no entry has degree zero.
struct Resolution {
    std::vector<std::vector<int>> twists;
    std::vector<std::vector<FreeVector>> mats;
    bool finished = false;  // a zero syzygy step was reached

    int through() const { return static_cast<int>(twists.size()) - 1; }

    long long betti(int n) const {
        if (n < 0) return 0;
        if (n <= through()) return static_cast<long long>(twists[static_cast<std::size_t>(n)].size());
        if (finished) return 0;
        throw std::logic_error("resolution: betti not computed that far");
    }

    /// Graded Betti number beta_{n,d}.
    long long betti(int n, int d) const {
        if (n < 0 || (n > through() && finished)) return 0;
        long long c = 0;
        for (int t : twists.at(static_cast<std::size_t>(n)))
            if (t == d) ++c;
        return c;
    }
};

/// Extends a minimal resolution by iterated syzygies. `background` supplies
/// the defining-ideal columns for a free module of the given rank (empty for
/// a polynomial ring).
void extend_resolution(const PolyContext& cx, const GroebnerLimits& lim,
                       const std::function<std::vector<FreeVector>(int)>& background,
                       Resolution& res, int through);

} // namespace cmlab

#endif
