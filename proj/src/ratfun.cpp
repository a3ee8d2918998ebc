#include "heckeweave/ratfun.hpp"

#include <array>
#include <sstream>

namespace heckeweave {

namespace {

MultiLaurent make_factor(DenFactor f) {
    switch (f) {
        case DenFactor::b: return MultiLaurent::variable(Var::b);
        case DenFactor::z: return MultiLaurent::variable(Var::z);
        case DenFactor::t: return MultiLaurent::variable(Var::t);
        case DenFactor::x: return MultiLaurent::variable(Var::x);
        case DenFactor::one_plus_t:
            return MultiLaurent::one() + MultiLaurent::variable(Var::t);
        case DenFactor::one_minus_tQ2: {
            Monomial m = Monomial::var(Var::t) * Monomial::var(Var::Q, 2);
            return MultiLaurent::one() - MultiLaurent::term(m, 1);
        }
        case DenFactor::Q: return MultiLaurent::variable(Var::Q);
        case DenFactor::A: return MultiLaurent::variable(Var::A);
        case DenFactor::Z: return MultiLaurent::variable(Var::Z);
        case DenFactor::B: return MultiLaurent::variable(Var::B);
        case DenFactor::q: return MultiLaurent::variable(Var::q);
        case DenFactor::one_minus_b:
            return MultiLaurent::one() - MultiLaurent::variable(Var::b);
    }
    return MultiLaurent::one();
}

bool is_monomial_factor(DenFactor f) {
    switch (f) {
        case DenFactor::one_plus_t:
        case DenFactor::one_minus_tQ2:
        case DenFactor::one_minus_b: return false;
        default: return true;
    }
}

Var factor_var(DenFactor f) {
    switch (f) {
        case DenFactor::b: return Var::b;
        case DenFactor::z: return Var::z;
        case DenFactor::t: return Var::t;
        case DenFactor::x: return Var::x;
        case DenFactor::Q: return Var::Q;
        case DenFactor::A: return Var::A;
        case DenFactor::Z: return Var::Z;
        case DenFactor::B: return Var::B;
        case DenFactor::q: return Var::q;
        default: throw internal_error("factor_var on a binomial factor");
    }
}

} // namespace

const MultiLaurent& den_factor_poly(DenFactor f) {
    static const std::array<MultiLaurent, 12> table = {
        make_factor(DenFactor::b),           make_factor(DenFactor::z),
        make_factor(DenFactor::t),           make_factor(DenFactor::x),
        make_factor(DenFactor::one_plus_t),  make_factor(DenFactor::one_minus_tQ2),
        make_factor(DenFactor::Q),           make_factor(DenFactor::A),
        make_factor(DenFactor::Z),           make_factor(DenFactor::B),
        make_factor(DenFactor::q),           make_factor(DenFactor::one_minus_b),
    };
    return table[static_cast<size_t>(f)];
}

const char* den_factor_name(DenFactor f) {
    switch (f) {
        case DenFactor::b: return "b";
        case DenFactor::z: return "z";
        case DenFactor::t: return "t";
        case DenFactor::x: return "x";
        case DenFactor::one_plus_t: return "1+t";
        case DenFactor::one_minus_tQ2: return "1-tQ^2";
        case DenFactor::Q: return "Q";
        case DenFactor::A: return "A";
        case DenFactor::Z: return "Z";
        case DenFactor::B: return "B";
        case DenFactor::q: return "q";
        case DenFactor::one_minus_b: return "1-b";
    }
    return "?";
}

FactoredRational FactoredRational::from_num_den(MultiLaurent num,
                                                const std::map<DenFactor, int>& den) {
    FactoredRational r(std::move(num));
    for (const auto& [f, k] : den) {
        check_internal(k > 0, "denominator factor with non-positive exponent");
        r.den_[f] += k;
    }
    r.normalize();
    return r;
}

void FactoredRational::normalize() {
    for (auto it = den_.begin(); it != den_.end();) {
        if (is_monomial_factor(it->first)) {
            num_.mul_monomial(Monomial::var(factor_var(it->first), -it->second));
            it = den_.erase(it);
        } else {
            ++it;
        }
    }
    if (num_.is_zero()) den_.clear();
}

FactoredRational FactoredRational::operator-() const {
    FactoredRational r = *this;
    r.num_ = -r.num_;
    return r;
}

FactoredRational operator+(const FactoredRational& a, const FactoredRational& b) {
    // common denominator over the factor multisets
    FactoredRational r;
    std::map<DenFactor, int> lcm = a.den_;
    for (const auto& [f, k] : b.den_) {
        auto& e = lcm[f];
        if (k > e) e = k;
    }
    MultiLaurent na = a.num_;
    MultiLaurent nb = b.num_;
    for (const auto& [f, k] : lcm) {
        auto ita = a.den_.find(f);
        auto itb = b.den_.find(f);
        int pada = k - (ita == a.den_.end() ? 0 : ita->second);
        int padb = k - (itb == b.den_.end() ? 0 : itb->second);
        if (pada) na *= den_factor_poly(f).pow(pada);
        if (padb) nb *= den_factor_poly(f).pow(padb);
    }
    r.num_ = na + nb;
    r.den_ = std::move(lcm);
    if (r.num_.is_zero()) r.den_.clear();
    return r;
}

FactoredRational operator-(const FactoredRational& a, const FactoredRational& b) {
    return a + (-b);
}

FactoredRational operator*(const FactoredRational& a, const FactoredRational& b) {
    FactoredRational r;
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_;
    for (const auto& [f, k] : b.den_) r.den_[f] += k;
    if (r.num_.is_zero()) r.den_.clear();
    return r;
}

FactoredRational FactoredRational::pow(int k) const {
    if (k == 0) return FactoredRational(MultiLaurent::one());
    if (k < 0) return reciprocal().pow(-k);
    FactoredRational acc(MultiLaurent::one());
    for (int i = 0; i < k; ++i) acc *= *this;
    return acc;
}

FactoredRational FactoredRational::reciprocal() const {
    check_internal(num_.is_single_term(),
                   "reciprocal requires a single-term numerator over registered factors");
    MultiLaurent n = MultiLaurent::one();
    for (const auto& [f, k] : den_) n *= den_factor_poly(f).pow(k);
    const auto& [m, c] = *num_.terms().begin();
    n.mul_monomial(m.inverse());
    n.scale(BigRational(1) / c);
    return FactoredRational(std::move(n));
}

FactoredRational FactoredRational::reduced() const {
    FactoredRational r = *this;
    if (r.num_.is_zero()) {
        r.den_.clear();
        return r;
    }
    for (auto it = r.den_.begin(); it != r.den_.end();) {
        const MultiLaurent& f = den_factor_poly(it->first);
        while (it->second > 0) {
            auto q = r.num_.exact_divide(f);
            if (!q) break;
            r.num_ = std::move(*q);
            --it->second;
        }
        it = it->second == 0 ? r.den_.erase(it) : std::next(it);
    }
    return r;
}

FactoredRational FactoredRational::eval_var(Var v, const BigRational& value) const {
    FactoredRational r = reduced();
    if (value == 0 && r.num_.min_exp(v) < 0)
        throw internal_error(std::string("residual denominator in ") + var_name(v) +
                             " when evaluating at 0");
    FactoredRational out;
    out.num_ = r.num_.eval_var(v, value);
    for (const auto& [f, k] : r.den_) {
        MultiLaurent fe = den_factor_poly(f).eval_var(v, value);
        if (fe == den_factor_poly(f)) {
            out.den_[f] += k;
            continue;
        }
        check_internal(fe.is_constant(), "denominator factor did not evaluate to a constant");
        BigRational c = fe.coeff(Monomial::unit());
        check_internal(c != 0, std::string("denominator factor ") + den_factor_name(f) +
                                   " vanishes at the evaluation point");
        BigRational inv = 1;
        for (int i = 0; i < k; ++i) inv /= c;
        out.num_.scale(inv);
    }
    return out;
}

bool FactoredRational::value_equals(const FactoredRational& o) const {
    // num_a * den_b == num_b * den_a as Laurent identities
    MultiLaurent lhs = num_;
    for (const auto& [f, k] : o.den_) lhs *= den_factor_poly(f).pow(k);
    MultiLaurent rhs = o.num_;
    for (const auto& [f, k] : den_) rhs *= den_factor_poly(f).pow(k);
    return lhs == rhs;
}

MultiLaurent FactoredRational::as_laurent() const {
    FactoredRational r = reduced();
    if (!r.den_.empty())
        throw internal_error(std::string("residual denominator factor: ") +
                             den_factor_name(r.den_.begin()->first));
    return r.num_;
}

std::string FactoredRational::to_string() const {
    if (den_.empty()) return num_.to_plain_string();
    std::ostringstream os;
    os << "(" << num_.to_plain_string() << ") / (";
    bool first = true;
    for (const auto& [f, k] : den_) {
        if (!first) os << " ";
        os << "(" << den_factor_name(f) << ")";
        if (k != 1) os << "^" << k;
        first = false;
    }
    os << ")";
    return os.str();
}

FactoredRational laurent_substitute(const MultiLaurent& p,
                                    const std::map<Var, FactoredRational>& bindings) {
    FactoredRational out;
    // cache of binding powers, keyed by (var, exponent)
    std::map<std::pair<Var, int>, FactoredRational> powers;
    auto binding_pow = [&](Var v, int e) -> const FactoredRational& {
        auto key = std::make_pair(v, e);
        auto it = powers.find(key);
        if (it != powers.end()) return it->second;
        const FactoredRational& bind = bindings.at(v);
        FactoredRational val;
        if (e >= 0) {
            val = bind.pow(e);
        } else {
            val = bind.reciprocal().pow(-e);
        }
        return powers.emplace(key, std::move(val)).first->second;
    };
    for (const auto& [m, c] : p.terms()) {
        FactoredRational term(MultiLaurent::term(Monomial::unit(), c));
        Monomial carried = Monomial::unit();
        for (int i = 0; i < kVarCount; ++i) {
            Var v = static_cast<Var>(i);
            int e = m.exp(v);
            if (e == 0) continue;
            if (bindings.count(v) == 0) {
                carried.set(v, e);
                continue;
            }
            term *= binding_pow(v, e);
        }
        if (!carried.is_unit()) {
            MultiLaurent shifted = term.num();
            shifted.mul_monomial(carried);
            term = FactoredRational::from_num_den(std::move(shifted), term.den());
        }
        out += term;
    }
    return out;
}

} // namespace heckeweave
