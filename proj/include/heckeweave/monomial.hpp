#ifndef HECKEWEAVE_MONOMIAL_HPP
#define HECKEWEAVE_MONOMIAL_HPP

#include "heckeweave/errors.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

namespace heckeweave {

// The fixed, ordered variable universe.  `x` stands for t^(1/2); `Q`, `A`,
// `Z`, `B` are the Khovanov/HOMFLY-side variables (the paper's Q, a, z, b).
enum class Var : uint8_t { q, z, s, b, t, x, Q, A, Z, B };

inline constexpr int kVarCount = 10;

const char* var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

// Exponent vector over the fixed universe; negative exponents allowed.
// Ordering is lexicographic in universe order, which is the canonical term
// order used for serialization.
struct Monomial {
    std::array<int16_t, kVarCount> e{};

    static Monomial unit() { return Monomial{}; }
    static Monomial var(Var v, int exp = 1) {
        Monomial m;
        m.set(v, exp);
        return m;
    }

    int exp(Var v) const { return e[static_cast<size_t>(v)]; }
    void set(Var v, int exp) {
        check_internal(exp >= INT16_MIN && exp <= INT16_MAX, "monomial exponent overflow");
        e[static_cast<size_t>(v)] = static_cast<int16_t>(exp);
    }

    bool is_unit() const {
        for (auto v : e)
            if (v != 0) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kVarCount; ++i) {
            int sum = static_cast<int>(e[static_cast<size_t>(i)]) + o.e[static_cast<size_t>(i)];
            check_internal(sum >= INT16_MIN && sum <= INT16_MAX, "monomial exponent overflow");
            r.e[static_cast<size_t>(i)] = static_cast<int16_t>(sum);
        }
        return r;
    }

    Monomial inverse() const {
        Monomial r;
        for (int i = 0; i < kVarCount; ++i)
            r.e[static_cast<size_t>(i)] = static_cast<int16_t>(-e[static_cast<size_t>(i)]);
        return r;
    }

    Monomial pow(int k) const {
        Monomial r;
        for (int i = 0; i < kVarCount; ++i) {
            long long p = static_cast<long long>(e[static_cast<size_t>(i)]) * k;
            check_internal(p >= INT16_MIN && p <= INT16_MAX, "monomial exponent overflow");
            r.e[static_cast<size_t>(i)] = static_cast<int16_t>(p);
        }
        return r;
    }

    // true when `o` divides this in the polynomial (non-Laurent) sense
    bool divisible_by(const Monomial& o) const {
        for (int i = 0; i < kVarCount; ++i)
            if (e[static_cast<size_t>(i)] < o.e[static_cast<size_t>(i)]) return false;
        return true;
    }

    auto operator<=>(const Monomial&) const = default;
};

struct MonomialHash {
    size_t operator()(const Monomial& m) const {
        size_t h = 0xcbf29ce484222325ull;
        for (auto v : m.e) {
            h ^= static_cast<size_t>(static_cast<uint16_t>(v));
            h *= 0x100000001b3ull;
        }
        return h;
    }
};

} // namespace heckeweave

#endif
