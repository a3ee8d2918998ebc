#ifndef HECKEWEAVE_LAURENT_HPP
#define HECKEWEAVE_LAURENT_HPP

#include "heckeweave/monomial.hpp"
#include "heckeweave/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace heckeweave {

/// Sparse exact Laurent polynomial in the fixed variable universe.
/// Representation is canonical: no zero coefficients are stored and the
/// term map is ordered by the canonical monomial order, so structural
/// equality is value equality.
class MultiLaurent {
public:
    using TermMap = std::map<Monomial, BigRational>;

    MultiLaurent() = default;
    explicit MultiLaurent(const BigRational& c) {
        if (c != 0) terms_[Monomial::unit()] = c;
    }
    explicit MultiLaurent(long long c) : MultiLaurent(BigRational(c)) {}

    static MultiLaurent zero() { return MultiLaurent(); }
    static MultiLaurent one() { return MultiLaurent(1); }
    static MultiLaurent variable(Var v, int exp = 1) {
        return term(Monomial::var(v, exp), 1);
    }
    static MultiLaurent term(const Monomial& m, const BigRational& c) {
        MultiLaurent p;
        if (c != 0) p.terms_[m] = c;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    bool is_single_term() const { return terms_.size() == 1; }
    size_t term_count() const { return terms_.size(); }

    const TermMap& terms() const { return terms_; }
    BigRational coeff(const Monomial& m) const;
    // coefficient of v^k after collecting: the sub-polynomial multiplying v^k
    MultiLaurent coeff_of(Var v, int k) const;

    void add_term(const Monomial& m, const BigRational& c);

    MultiLaurent operator-() const;
    MultiLaurent& operator+=(const MultiLaurent& o);
    MultiLaurent& operator-=(const MultiLaurent& o);
    friend MultiLaurent operator+(MultiLaurent a, const MultiLaurent& b) { return a += b; }
    friend MultiLaurent operator-(MultiLaurent a, const MultiLaurent& b) { return a -= b; }
    friend MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b);
    MultiLaurent& operator*=(const MultiLaurent& o) { return *this = *this * o; }
    void scale(const BigRational& c);
    void mul_monomial(const Monomial& m);
    // fused this += c * mono * p, the hot path of the Hecke expansions
    void add_scaled(const MultiLaurent& p, const BigRational& c,
                    const Monomial& mono = Monomial::unit());

    /// Non-negative powers always; negative powers only of single terms.
    MultiLaurent pow(int k) const;

    bool operator==(const MultiLaurent& o) const { return terms_ == o.terms_; }

    bool uses_var(Var v) const;
    std::vector<Var> vars_used() const;
    int min_exp(Var v) const; // 0 for the zero polynomial
    int max_exp(Var v) const;
    int max_total_degree() const; // over all variables; 0 for zero
    int min_total_degree() const;

    /// Exact multivariate division; nullopt when the division is not exact.
    std::optional<MultiLaurent> exact_divide(const MultiLaurent& divisor) const;

    /// Substitute a single variable by an exact rational value.  Terms with
    /// negative exponents of v require value != 0.
    MultiLaurent eval_var(Var v, const BigRational& value) const;

    /// Substitute v by a polynomial; every occurrence of v must have a
    /// non-negative exponent unless the replacement is a single term.
    MultiLaurent subst_var(Var v, const MultiLaurent& repl) const;

    /// Rename v -> w^scale (monomial image), e.g. t -> x^2.
    MultiLaurent rename_var(Var v, Var w, int scale = 1) const;

    std::string to_plain_string() const;
    std::string to_latex_string() const;

private:
    TermMap terms_;
};

MultiLaurent pow(const MultiLaurent& base, int k);

} // namespace heckeweave

#endif
