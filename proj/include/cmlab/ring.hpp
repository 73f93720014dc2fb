#ifndef CMLAB_RING_HPP
#define CMLAB_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "cmlab/freevec.hpp"
#include "cmlab/groebner.hpp"
#include "cmlab/hilbert.hpp"

namespace cmlab {

class Module;
struct Resolution;

struct RingOptions {
    std::uint32_t p = 32003;
    GroebnerLimits limits;
    /// Permit minimal ideal generators of degree one. Classification is
    /// refused in that case, since "regular iff I = 0" needs I inside m^2.
    bool allow_linear_generators = false;
};

/// A standard graded quotient ring R = S/I of a polynomial ring over F_p,
/// together with the session caches (Groebner basis of I, Hilbert series,
/// resolution of the residue field). A Ring is confined to one task at a
/// time; everything it hands out is immutable.
class Ring {
public:
    Ring(std::vector<std::string> vars, std::vector<FreeVector> ideal_gens,
         RingOptions opt = {});
    ~Ring();

    Ring(const Ring&) = delete;
    Ring& operator=(const Ring&) = delete;

    const PolyContext& ctx() const { return cx_; }
    int nvars() const { return cx_.nvars; }
    const std::vector<std::string>& var_names() const { return vars_; }
    const GroebnerLimits& limits() const { return opt_.limits; }
    std::uint32_t characteristic() const { return cx_.fp.p(); }

    /// Minimal homogeneous generators of the defining ideal.
    const std::vector<FreeVector>& ideal_gens() const { return gens_; }
    /// Reduced Groebner basis of the defining ideal.
    const std::vector<FreeVector>& ideal_gb() const { return gb_; }
    /// GB of I copied into every component of a rank-`rank` free module.
    std::vector<FreeVector> ideal_in_free(int rank) const;

    bool classification_allowed() const { return classification_ok_; }
    bool is_polynomial_ring() const { return gens_.empty(); }

    const HilbertSeries& hilbert();

    /// Normal form of a rank-one polynomial modulo I.
    FreeVector reduce(const FreeVector& f) const {
        return normal_form(cx_, f, gb_);
    }

    Module& as_module();      // R as a module over itself
    Module& residue_field();  // k = R/m

    std::string label = "R";

private:
    PolyContext cx_;
    std::vector<std::string> vars_;
    RingOptions opt_;
    std::vector<FreeVector> gens_;
    std::vector<FreeVector> gb_;
    bool classification_ok_ = true;
    std::unique_ptr<HilbertSeries> hseries_;
    std::unique_ptr<Module> self_, k_;
    std::unique_ptr<Module> canonical_;
    friend Module& canonical_module(Ring&);
};

/// Parses a polynomial from the CLI text syntax: integer coefficients,
/// named variables, operators + - * ^; juxtaposition is rejected.
FreeVector parse_poly(const PolyContext& cx, const std::vector<std::string>& vars,
                      const std::string& text);

} // namespace cmlab

#endif
