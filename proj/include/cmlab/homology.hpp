#ifndef CMLAB_HOMOLOGY_HPP
#define CMLAB_HOMOLOGY_HPP

#include <optional>
#include <string>
#include <vector>

#include "cmlab/module.hpp"

namespace cmlab {

/// Outcome of a Tor/Ext computation at one homological degree. Vanishing is
/// decided exactly by two-sided submodule containment; the k-dimension is
/// reported only when the homology has finite length.
struct HomologyResult {
    bool vanishes = false;
    std::optional<long long> k_dim;
};

/// Tor_n(M, N): homology of F.(M) tensor N.
HomologyResult tor_dim(const Module& M, const Module& N, int n, bool want_dim = true);

/// Ext^n(M, N): cohomology of Hom(F.(M), N).
HomologyResult ext_dim(const Module& M, const Module& N, int n, bool want_dim = true);

/// Ext^n(M, N) presented as a graded module, together with the lifts of its
/// chosen generators inside Hom(F_n, N) (needed for evaluation maps).
struct ExtPresentation {
    Module mod;
    std::vector<FreeVector> gen_lifts;   // vectors in the Hom slot space
    std::vector<int> ambient_twists;     // twists of that slot space
};

ExtPresentation ext_presentation(const Module& M, const Module& N, int n, std::string label);

inline Module ext_module(const Module& M, const Module& N, int n, std::string label) {
    return std::move(ext_presentation(M, N, n, std::move(label)).mod);
}

/// Hom(M, N) = Ext^0(M, N).
inline ExtPresentation hom_presentation(const Module& M, const Module& N, std::string label) {
    return ext_presentation(M, N, 0, std::move(label));
}

/// The n-th syzygy module in the minimal resolution (Omega^0 = M itself,
/// minimally presented).
Module syzygy_module(const Module& M, int n, std::string label);

/// Projective/injective dimension certificates.
///   pd: with t = depth R - depth M, pd is finite iff beta_{t+1}(M) = 0,
///       and then pd = t (Auslander-Buchsbaum).
///   id: with m = max(depth R, depth M) + 1, id is finite iff mu^m(M) = 0,
///       and then id = depth R; otherwise Roberts' theorem forces
///       mu^j(M) != 0 for every j >= depth M.
struct HomDimReport {
    bool pd_finite = false;
    int pd = -1;
    bool id_finite = false;
    int id = -1;
};

HomDimReport hom_dim_report(const Module& M);

/// M free <=> the minimal presentation has no relations.
bool is_free(const Module& M);

} // namespace cmlab

#endif
