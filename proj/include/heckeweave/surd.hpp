#ifndef HECKEWEAVE_SURD_HPP
#define HECKEWEAVE_SURD_HPP

#include "heckeweave/ratfun.hpp"

namespace heckeweave {

/// u + v*S with S^2 = Z^2 + 4, over the rational function field in A, Z, B.
/// This is the working ring of the HOMFLY-PT substitution: the paper's
/// w = z + sqrt(z^2+4) is Z + S here.
struct SurdElement {
    FactoredRational u;
    FactoredRational v;

    SurdElement() = default;
    SurdElement(FactoredRational u_, FactoredRational v_) : u(std::move(u_)), v(std::move(v_)) {}

    static SurdElement from_scalar(FactoredRational s) { return {std::move(s), FactoredRational()}; }
    static SurdElement one() { return from_scalar(FactoredRational(MultiLaurent::one())); }
    static SurdElement surd() { return {FactoredRational(), FactoredRational(MultiLaurent::one())}; }

    bool is_zero() const { return u.is_zero() && v.is_zero(); }

    SurdElement conj() const { return {u, -v}; }

    friend SurdElement operator+(const SurdElement& a, const SurdElement& b) {
        return {a.u + b.u, a.v + b.v};
    }
    friend SurdElement operator-(const SurdElement& a, const SurdElement& b) {
        return {a.u - b.u, a.v - b.v};
    }
    friend SurdElement operator*(const SurdElement& a, const SurdElement& b);
    SurdElement& operator+=(const SurdElement& o) { return *this = *this + o; }
    SurdElement& operator*=(const SurdElement& o) { return *this = *this * o; }

    /// u^2 - v^2 (Z^2+4); zero exactly when the element is not invertible.
    FactoredRational norm() const;

    SurdElement inverse() const;
    SurdElement pow(int k) const;
};

} // namespace heckeweave

#endif
