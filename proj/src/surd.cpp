#include "heckeweave/surd.hpp"

namespace heckeweave {

namespace {
const FactoredRational& surd_square() {
    // Z^2 + 4
    static const FactoredRational v(MultiLaurent::variable(Var::Z, 2) + MultiLaurent(4));
    return v;
}
} // namespace

SurdElement operator*(const SurdElement& a, const SurdElement& b) {
    SurdElement r;
    r.u = a.u * b.u + a.v * b.v * surd_square();
    r.v = a.u * b.v + a.v * b.u;
    return r;
}

FactoredRational SurdElement::norm() const { return u * u - v * v * surd_square(); }

SurdElement SurdElement::inverse() const {
    FactoredRational n = norm().reduced();
    if (n.is_zero()) throw domain_error("inversion of a zero-norm surd element");
    FactoredRational ninv = n.reciprocal();
    return {u * ninv, -v * ninv};
}

SurdElement SurdElement::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    SurdElement acc = one();
    SurdElement base = *this;
    int e = k;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

} // namespace heckeweave
