#ifndef HECKEWEAVE_RATFUN_HPP
#define HECKEWEAVE_RATFUN_HPP

#include "heckeweave/laurent.hpp"

#include <map>
#include <string>

namespace heckeweave {

/// Tracked irreducible denominator factors.  Every denominator produced by
/// the substitution pipelines is a product of these, so exact single-factor
/// trial division replaces general multivariate GCD.  The single-variable
/// entries are folded into Laurent exponents on construction; only the
/// binomial factors can persist.  `one_minus_b` backs the w-faithful
/// Alexander variant.
enum class DenFactor : uint8_t {
    b,
    z,
    t,
    x,
    one_plus_t,
    one_minus_tQ2,
    Q,
    A,
    Z,
    B,
    q,
    one_minus_b,
};

const MultiLaurent& den_factor_poly(DenFactor f);
const char* den_factor_name(DenFactor f);

/// num / prod(factor^k).  Value semantics; canonicalized so that monomial
/// factors live as Laurent exponents of num and binomial factors are
/// cancelled whenever division is exact (see reduce()).
class FactoredRational {
public:
    FactoredRational() = default;
    explicit FactoredRational(MultiLaurent num) : num_(std::move(num)) {}
    explicit FactoredRational(long long c) : num_(MultiLaurent(c)) {}

    static FactoredRational from_num_den(MultiLaurent num,
                                         const std::map<DenFactor, int>& den);

    const MultiLaurent& num() const { return num_; }
    const std::map<DenFactor, int>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    FactoredRational operator-() const;
    friend FactoredRational operator+(const FactoredRational& a, const FactoredRational& b);
    friend FactoredRational operator-(const FactoredRational& a, const FactoredRational& b);
    friend FactoredRational operator*(const FactoredRational& a, const FactoredRational& b);
    FactoredRational& operator+=(const FactoredRational& o) { return *this = *this + o; }
    FactoredRational& operator-=(const FactoredRational& o) { return *this = *this - o; }
    FactoredRational& operator*=(const FactoredRational& o) { return *this = *this * o; }

    FactoredRational pow(int k) const;

    /// 1/this; requires num to be a single term.
    FactoredRational reciprocal() const;

    /// Cancel every removable factor (exact trial division); idempotent.
    FactoredRational reduced() const;

    /// Substitute one variable by an exact value.  Errors when a residual
    /// denominator factor (or a negative Laurent power of the variable)
    /// vanishes at the value.
    FactoredRational eval_var(Var v, const BigRational& value) const;

    /// Exact value equality via cross-multiplication.
    bool value_equals(const FactoredRational& o) const;

    /// The value as a plain Laurent polynomial; internal error if any
    /// binomial denominator factor remains after reduction.
    MultiLaurent as_laurent() const;

    std::string to_string() const;

private:
    void normalize();

    MultiLaurent num_;
    std::map<DenFactor, int> den_;  // binomial factors only, exponent > 0
};

/// Exact substitution of variables by factored-rational values.  Negative
/// powers of a bound variable use the binding's reciprocal, which must exist
/// (single-term numerator).  Unbound variables are carried through.
FactoredRational laurent_substitute(const MultiLaurent& p,
                                    const std::map<Var, FactoredRational>& bindings);

} // namespace heckeweave

#endif
