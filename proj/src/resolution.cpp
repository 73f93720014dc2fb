#include "cmlab/resolution.hpp"

#include <algorithm>
#include <numeric>

namespace cmlab {

// State invariant: twists holds F_0..F_t and mats holds d_1..d_t, so
// mats.size() == twists.size() - 1. The seed (F_0, F_1, d_1) comes from the
// minimal presentation; each step appends the minimal syzygies of the last
// differential.
void extend_resolution(const PolyContext& cx, const GroebnerLimits& lim,
                       const std::function<std::vector<FreeVector>(int)>& background,
                       Resolution& res, int through) {
    while (res.through() < through) {
        if (res.finished) {
            res.twists.emplace_back();
            res.mats.emplace_back();
            continue;
        }
        std::size_t t = res.twists.size() - 1;
        const std::vector<FreeVector>& cols = res.mats[t - 1];  // d_t in F_{t-1}
        int rank_prev = static_cast<int>(res.twists[t - 1].size());
        std::vector<FreeVector> syz =
            syzygy_basis(cx, cols, background(rank_prev), rank_prev, lim);
        // prune to a minimal generating set of the syzygy module
        std::vector<int> col_degrees = res.twists[t];
        std::vector<std::size_t> keep = minimal_generator_indices(
            cx, syz, col_degrees, background(static_cast<int>(cols.size())), lim);
        std::vector<FreeVector> next;
        next.reserve(keep.size());
        for (std::size_t k : keep) next.push_back(syz[k]);
        std::stable_sort(next.begin(), next.end(), [&](const FreeVector& a, const FreeVector& b) {
            int da = fv_degree(a, col_degrees), db = fv_degree(b, col_degrees);
            if (da != db) return da < db;
            return term_cmp(a.lead(), b.lead(), cx) > 0;
        });
        std::vector<int> next_twists;
        next_twists.reserve(next.size());
        for (const FreeVector& v : next) next_twists.push_back(fv_degree(v, col_degrees));
        if (next.empty()) res.finished = true;
        res.twists.push_back(std::move(next_twists));
        res.mats.push_back(std::move(next));
    }
}

} // namespace cmlab
