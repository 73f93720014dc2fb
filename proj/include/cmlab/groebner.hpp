#ifndef CMLAB_GROEBNER_HPP
#define CMLAB_GROEBNER_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cmlab/freevec.hpp"

namespace cmlab {

/// Hard resource caps for Buchberger runs. Hitting one raises
/// ResourceLimitError; nothing is ever silently truncated.
struct GroebnerLimits {
    std::size_t max_pairs = 400000;
    int max_degree = 220;
};

class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what)
        : std::runtime_error(what) {}
};

/// Full normal form: every term of f is reduced against the leading terms
/// of G. Deterministic for a fixed order and basis sequence.
FreeVector normal_form(const PolyContext& cx, const FreeVector& f,
                       const std::vector<FreeVector>& G);

/// Incremental Buchberger over a free module with position-over-term order.
/// Generators may be added between completion calls; the basis stays a
/// Groebner basis of everything added so far after each complete().
class GroebnerEngine {
public:
    GroebnerEngine(const PolyContext& cx, GroebnerLimits lim = {})
        : cx_(cx), lim_(lim) {}

    /// Reduces f against the current basis and, if nonzero, inserts it and
    /// schedules its S-pairs. Returns true when f enlarged the basis.
    bool add(const FreeVector& f);

    /// Processes the pair queue until empty.
    void complete();

    const std::vector<FreeVector>& basis() const { return basis_; }
    const PolyContext& ctx() const { return cx_; }

    /// Minimal, tail-reduced, monic basis in a deterministic order.
    std::vector<FreeVector> reduced_basis() const;

    bool contains(const FreeVector& f) const {
        return normal_form(cx_, f, basis_).is_zero();
    }

private:
    struct Pair {
        int deg;      // degree of the S-pair lcm (monomial degree only)
        int i, j;     // basis indices, i < j
        Monomial lcm;
    };

    void push_pairs(int n);
    bool chain_criterion(const Pair& p) const;

    PolyContext cx_;
    GroebnerLimits lim_;
    std::vector<FreeVector> basis_;           // monic
    std::vector<bool> single_comp_;           // all terms in the lead component
    std::vector<Pair> queue_;                 // kept sorted, smallest last
    std::vector<std::vector<bool>> done_;     // done_[j][i], i < j
    std::size_t pairs_processed_ = 0;
};

/// Reduced Groebner basis of the submodule generated by gens.
std::vector<FreeVector> buchberger(const PolyContext& cx, const std::vector<FreeVector>& gens,
                                   const GroebnerLimits& lim = {});

/// Generators (in fact a Groebner basis) of the syzygy module
///   { c in R^t : sum_i c_i * tracked_i  lies in <untracked> }
/// where every vector lives in a free module of rank `rank`. Computed by
/// tagging each tracked generator with a fresh trailing component and
/// extracting the basis elements supported entirely on the tags.
std::vector<FreeVector> syzygy_basis(const PolyContext& cx, const std::vector<FreeVector>& tracked,
                                     const std::vector<FreeVector>& untracked, int rank,
                                     const GroebnerLimits& lim = {});

/// Indices of a minimal generating subset of <gens> modulo the submodule
/// generated by `background` (typically the defining ideal embedded in the
/// free module). Candidates are consumed in order of ascending degree, so
/// the selection is deterministic.
std::vector<std::size_t> minimal_generator_indices(const PolyContext& cx,
                                                   const std::vector<FreeVector>& gens,
                                                   const std::vector<int>& twists,
                                                   const std::vector<FreeVector>& background,
                                                   const GroebnerLimits& lim = {});

} // namespace cmlab

#endif
