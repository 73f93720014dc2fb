#ifndef CMLAB_DUALITY_HPP
#define CMLAB_DUALITY_HPP

#include <string>
#include <vector>

#include "cmlab/densemat.hpp"
#include "cmlab/module.hpp"

namespace cmlab {

/// Rebuilds a graded module presentation from a finite-dimensional graded
/// action model: basis degrees plus one commuting action matrix per
/// variable. Generators are chosen among coordinate vectors outside the
/// radical span; relations come from degreewise kernels of the free cover.
Module present_from_actions(Ring& R, const std::vector<int>& degrees,
                            const std::vector<DenseMat>& actions, std::string label);

/// Graded Matlis dual of a finite-length module: k-dual basis with
/// contragredient (transposed) action and negated degrees, re-presented as a
/// graded module. Errors on infinite length input.
Module matlis_dual(const Module& M, std::string label);

/// Canonical module  Ext^{n-d}_S(R, S(-n))  over the ambient polynomial ring
/// (n variables, d = dim R). Requires R Cohen-Macaulay; cached on the ring.
Module& canonical_module(Ring& R);

/// M-dagger = Ext^{d-r}_R(M, omega), r = dim M.
Module dagger(const Module& M, std::string label);

} // namespace cmlab

#endif
