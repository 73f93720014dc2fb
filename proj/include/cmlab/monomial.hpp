#ifndef CMLAB_MONOMIAL_HPP
#define CMLAB_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmlab {

/// Exponent vector with cached total degree. The number of live variables is
/// carried by the enclosing context, not the monomial itself; unused slots
/// stay zero. Degrees are capped at 255 per variable, which is far beyond
/// anything reachable under the engine's resource limits.
struct Monomial {
    static constexpr int kMaxVars = 8;

    std::array<std::uint8_t, kMaxVars> e{};
    std::uint16_t deg = 0;

    static Monomial one() { return Monomial{}; }

    static Monomial var(int v, int power = 1) {
        Monomial m;
        m.e[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(power);
        m.deg = static_cast<std::uint16_t>(power);
        return m;
    }

    bool is_one() const { return deg == 0; }

    bool operator==(const Monomial& o) const { return deg == o.deg && e == o.e; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
};

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    int d = a.deg + b.deg;
    if (d > 0xffff) throw std::overflow_error("monomial degree overflow");
    for (int i = 0; i < Monomial::kMaxVars; ++i) {
        int s = a.e[i] + b.e[i];
        if (s > 0xff) throw std::overflow_error("monomial exponent overflow");
        r.e[i] = static_cast<std::uint8_t>(s);
    }
    r.deg = static_cast<std::uint16_t>(d);
    return r;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {
    // a | b
    if (a.deg > b.deg) return false;
    for (int i = 0; i < Monomial::kMaxVars; ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

/// b / a; caller guarantees divisibility.
inline Monomial mono_div(const Monomial& b, const Monomial& a) {
    Monomial r;
    for (int i = 0; i < Monomial::kMaxVars; ++i)
        r.e[i] = static_cast<std::uint8_t>(b.e[i] - a.e[i]);
    r.deg = static_cast<std::uint16_t>(b.deg - a.deg);
    return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    int d = 0;
    for (int i = 0; i < Monomial::kMaxVars; ++i) {
        r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
        d += r.e[i];
    }
    r.deg = static_cast<std::uint16_t>(d);
    return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < Monomial::kMaxVars; ++i)
        if (a.e[i] && b.e[i]) return false;
    return true;
}

enum class MonoOrder { Grevlex, Lex };

/// Returns +1 if a > b, 0 if equal, -1 if a < b.
inline int mono_cmp(const Monomial& a, const Monomial& b, MonoOrder ord, int nvars) {
    if (ord == MonoOrder::Grevlex) {
        if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
        // smaller power of the last differing variable wins
        for (int i = nvars - 1; i >= 0; --i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
        return 0;
    }
    for (int i = 0; i < nvars; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
    return 0;
}

inline std::string mono_to_string(const Monomial& m, const std::vector<std::string>& vars) {
    if (m.is_one()) return "1";
    std::string s;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (!m.e[i]) continue;
        if (!s.empty()) s += "*";
        s += vars[i];
        if (m.e[i] > 1) s += "^" + std::to_string(static_cast<int>(m.e[i]));
    }
    return s;
}

} // namespace cmlab

#endif
