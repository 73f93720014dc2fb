#include "cmlab/ring.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "cmlab/module.hpp"

namespace cmlab {

Ring::Ring(std::vector<std::string> vars, std::vector<FreeVector> ideal_gens, RingOptions opt)
    : vars_(std::move(vars)), opt_(opt) {
    if (static_cast<int>(vars_.size()) > Monomial::kMaxVars)
        throw std::invalid_argument("ring: too many variables");
    cx_ = PolyContext{PrimeField(opt_.p), MonoOrder::Grevlex, static_cast<int>(vars_.size())};

    std::vector<int> rank1{0};
    for (const FreeVector& g : ideal_gens) {
        if (g.is_zero()) continue;
        if (!fv_is_homogeneous(g, rank1))
            throw std::invalid_argument("ring: inhomogeneous ideal generator");
        if (fv_degree(g, rank1) == 0)
            throw std::invalid_argument("ring: ideal is the unit ideal");
    }
    gb_ = buchberger(cx_, ideal_gens, opt_.limits);
    for (const FreeVector& g : gb_)
        if (!g.is_zero() && g.lead().mono.deg == 0)
            throw std::invalid_argument("ring: ideal is the unit ideal");

    // minimal generators of I
    std::vector<FreeVector> nonzero;
    for (const FreeVector& g : ideal_gens)
        if (!g.is_zero()) nonzero.push_back(g);
    std::vector<std::size_t> keep =
        minimal_generator_indices(cx_, nonzero, rank1, {}, opt_.limits);
    for (std::size_t k : keep) gens_.push_back(nonzero[k]);
    for (const FreeVector& g : gens_) {
        if (fv_degree(g, rank1) <= 1) {
            if (!opt_.allow_linear_generators)
                throw std::invalid_argument(
                    "ring: defining ideal has a linear minimal generator; eliminate the "
                    "variable or set allow_linear_generators");
            classification_ok_ = false;
        }
    }
}

Ring::~Ring() = default;

std::vector<FreeVector> Ring::ideal_in_free(int rank) const {
    std::vector<FreeVector> out;
    out.reserve(gb_.size() * static_cast<std::size_t>(rank));
    for (int c = 0; c < rank; ++c)
        for (const FreeVector& g : gb_) out.push_back(fv_shift_comp(g, c));
    return out;
}

const HilbertSeries& Ring::hilbert() {
    if (!hseries_) hseries_ = std::make_unique<HilbertSeries>(as_module().hilbert());
    return *hseries_;
}

Module& Ring::as_module() {
    if (!self_) self_ = std::make_unique<Module>(*this, std::vector<int>{0},
                                                 std::vector<FreeVector>{}, label);
    return *self_;
}

Module& Ring::residue_field() {
    if (!k_) {
        std::vector<FreeVector> rels;
        for (int v = 0; v < nvars(); ++v)
            rels.push_back(FreeVector::term(0, Monomial::var(v), 1));
        k_ = std::make_unique<Module>(*this, std::vector<int>{0}, std::move(rels), "k");
    }
    return *k_;
}

namespace {

struct PolyParser {
    const PolyContext& cx;
    const std::vector<std::string>& vars;
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= s.size();
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("polynomial syntax error at position " +
                                    std::to_string(pos) + ": " + msg + " in '" + s + "'");
    }

    long long parse_int() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return std::stoll(s.substr(start, pos - start));
    }

    int parse_var() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (pos == start) fail("expected variable or integer");
        std::string name = s.substr(start, pos - start);
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        fail("unknown variable '" + name + "'");
    }

    // factor := integer | var ['^' integer]
    void parse_factor(std::uint32_t& coeff, Monomial& mono) {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long v = parse_int();
            if (pos < s.size() && s[pos] == '^') fail("cannot exponentiate a coefficient");
            coeff = cx.fp.mul(coeff, cx.fp.reduce(v));
            return;
        }
        int var = parse_var();
        int power = 1;
        skip_ws();
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            long long e = parse_int();
            if (e < 0 || e > 255) fail("exponent out of range");
            power = static_cast<int>(e);
        }
        for (int i = 0; i < power; ++i) mono = mono_mul(mono, Monomial::var(var));
    }

    // term := factor ('*' factor)*
    void parse_term(std::uint32_t sign, std::vector<Term>& acc) {
        std::uint32_t coeff = sign;
        Monomial mono;
        parse_factor(coeff, mono);
        while (peek() == '*') {
            ++pos;
            parse_factor(coeff, mono);
        }
        skip_ws();
        if (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' ||
                               s[pos] == '('))
            fail("juxtaposition is not allowed; use '*'");
        if (coeff) acc.push_back(Term{0, mono, coeff});
    }

    FreeVector parse() {
        std::vector<Term> acc;
        std::uint32_t sign = 1;
        skip_ws();
        if (peek() == '-') {
            ++pos;
            sign = cx.fp.neg(1);
        } else if (peek() == '+') {
            ++pos;
        }
        parse_term(sign, acc);
        while (!eof()) {
            char c = peek();
            if (c == '+') sign = 1;
            else if (c == '-') sign = cx.fp.neg(1);
            else fail("expected '+' or '-'");
            ++pos;
            parse_term(sign, acc);
        }
        return fv_normalize(cx, std::move(acc));
    }
};

} // namespace

FreeVector parse_poly(const PolyContext& cx, const std::vector<std::string>& vars,
                      const std::string& text) {
    PolyParser p{cx, vars, text};
    return p.parse();
}

} // namespace cmlab
