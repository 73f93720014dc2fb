#ifndef CMLAB_ARTINIAN_HPP
#define CMLAB_ARTINIAN_HPP

#include <optional>
#include <string>
#include <vector>

#include "cmlab/densemat.hpp"
#include "cmlab/module.hpp"

namespace cmlab {

/// Finite-dimensional graded algebra given by a multiplication tensor on a
/// labelled k-basis. Serves as the brute-force oracle: everything downstream
/// is dense rank computation, deliberately independent of the Groebner
/// machinery.
struct FiniteAlgebra {
    PrimeField fp{32003};
    std::vector<std::string> labels;
    std::vector<int> deg;               // deg[0] = 0 is the unit
    std::vector<Monomial> basis_mono;   // monomial expression of each basis element
    std::vector<DenseMat> mult;         // mult[i] = left multiplication by basis i
    std::vector<int> var_index;         // basis index of each algebra generator

    int dim() const { return static_cast<int>(deg.size()); }
    const DenseMat& var_action(int v) const {
        return mult[static_cast<std::size_t>(var_index[static_cast<std::size_t>(v)])];
    }
};

struct FiniteModule {
    std::vector<int> deg;
    std::vector<DenseMat> act;  // one action matrix per algebra generator

    int dim() const { return static_cast<int>(deg.size()); }
};

/// Flattens a finite-length pair (R, M) to the dense model: basis = standard
/// monomials of the Groebner bases, actions = multiplication in normal form.
/// The ring must be Artinian; Betti/Bass numbers over a truncation would not
/// match the original ring.
FiniteAlgebra flatten_ring(Ring& R);
FiniteModule flatten_module(const FiniteAlgebra& A, const Module& M);

struct FdLimits {
    long long max_total_dim = 2000000;
};

/// Betti numbers by dense linear algebra: minimal generators are a basis of
/// M/rad M, each syzygy step is a kernel of the free cover.
std::vector<long long> fd_betti(const FiniteAlgebra& A, const FiniteModule& M, int n_max,
                                const FdLimits& lim = {});

/// k-dual with transposed actions and negated degrees.
FiniteModule fd_dual(const FiniteAlgebra& A, const FiniteModule& M);

inline std::vector<long long> fd_bass(const FiniteAlgebra& A, const FiniteModule& M, int n_max,
                                      const FdLimits& lim = {}) {
    return fd_betti(A, fd_dual(A, M), n_max, lim);
}

/// Compares graded-engine and oracle values of lambda, beta_n, mu^n for
/// n <= n_max; empty result means agreement.
struct AgreeReport {
    bool agree = true;
    std::string first_discrepancy;
};

AgreeReport agree_check(Ring& R, const Module& M, int n_max);

} // namespace cmlab

#endif
