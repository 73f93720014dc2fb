#ifndef CMLAB_MODULE_HPP
#define CMLAB_MODULE_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cmlab/hilbert.hpp"
#include "cmlab/resolution.hpp"
#include "cmlab/ring.hpp"

namespace cmlab {

/// A finitely generated graded R-module presented as the cokernel of a
/// homogeneous matrix between twisted free modules. Relation columns are
/// vectors whose component indexes the generator they constrain. Instances
/// are immutable after construction apart from internal caches.
class Module {
public:
    Module(Ring& ring, std::vector<int> gen_degrees, std::vector<FreeVector> relations,
           std::string label = "M");

    Ring& ring() const { return *ring_; }
    const std::vector<int>& twists() const { return twists_; }
    const std::vector<FreeVector>& relations() const { return rels_; }
    int rank() const { return static_cast<int>(twists_.size()); }

    /// Reduced GB of relations + I*F; decides membership in the relation
    /// submodule.
    const std::vector<FreeVector>& groebner() const;

    const HilbertSeries& hilbert() const;
    int dim() const { return hilbert().dim; }
    /// e(M); equals the length when dim == 0 (and 0 for the zero module).
    long long multiplicity() const { return hilbert().multiplicity(); }
    std::optional<long long> length() const { return hilbert().length(); }
    bool is_zero() const;

    /// Minimal presentation: all matrix entries in m, relation columns a
    /// minimal generating set. Returns *this when already minimal.
    const Module& minimal() const;
    long long mu() const;        // minimal number of generators
    long long mu_of_mM() const;  // minimal generators of the submodule mM

    /// Minimal free resolution over R, computed lazily and cached.
    const Resolution& resolution(int through) const;
    long long betti(int n) const;

    /// depth via the Auslander-Buchsbaum formula over the ambient
    /// polynomial ring; agrees with the least nonvanishing Bass number
    /// (cross-checked against Ext(k,-) in the test suite).
    int depth() const;
    int pd_ambient() const;  // projective dimension over the ambient S

    long long bass(int n) const;  // mu^n(M) = dim_k Ext^n_R(k, M)
    long long type() const { return bass(depth()); }

    /// m^2 M == 0, decided by membership of every x_u x_v g_c.
    bool radical_square_kills() const;

    struct BasisElem {
        int comp;
        Monomial mono;
        int degree;
    };
    /// Standard-monomial k-basis; requires finite length.
    const std::vector<BasisElem>& std_basis() const;
    /// Action of variable v in the standard basis (dense column-major:
    /// entry(i, j) = coefficient of basis i in x_v * basis j).
    std::vector<std::uint32_t> action_matrix(int v) const;

    std::string label;

private:
    const Module* minimal_impl() const;

    Ring* ring_;
    std::vector<int> twists_;
    std::vector<FreeVector> rels_;

    mutable std::unique_ptr<std::vector<FreeVector>> gb_;
    mutable std::unique_ptr<HilbertSeries> hs_;
    mutable std::unique_ptr<Module> minimal_;
    mutable bool minimal_checked_ = false;  // true when *this known minimal
    mutable std::unique_ptr<Resolution> res_;
    mutable std::unique_ptr<Resolution> res_ambient_;
    mutable std::optional<int> depth_;
    mutable std::map<int, long long> bass_;
    mutable std::optional<long long> mu_mm_;
    mutable std::unique_ptr<std::vector<BasisElem>> basis_;
};

/// The module R/(f1..ft) for homogeneous rank-one polynomials.
Module quotient_module(Ring& R, std::vector<FreeVector> polys, std::string label);

} // namespace cmlab

#endif
