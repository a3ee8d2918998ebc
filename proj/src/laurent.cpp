#include "heckeweave/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace heckeweave {

bool MultiLaurent::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_unit() && terms_.begin()->second == 1;
}

bool MultiLaurent::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

BigRational MultiLaurent::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigRational(0) : it->second;
}

MultiLaurent MultiLaurent::coeff_of(Var v, int k) const {
    MultiLaurent out;
    for (const auto& [m, c] : terms_) {
        if (m.exp(v) != k) continue;
        Monomial rest = m;
        rest.set(v, 0);
        out.add_term(rest, c);
    }
    return out;
}

void MultiLaurent::add_term(const Monomial& m, const BigRational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiLaurent MultiLaurent::operator-() const {
    MultiLaurent r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiLaurent& MultiLaurent::operator+=(const MultiLaurent& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiLaurent& MultiLaurent::operator-=(const MultiLaurent& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b) {
    MultiLaurent r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

void MultiLaurent::scale(const BigRational& c) {
    if (c == 0) {
        terms_.clear();
        return;
    }
    for (auto& [m, v] : terms_) v *= c;
}

void MultiLaurent::mul_monomial(const Monomial& mono) {
    if (mono.is_unit()) return;
    TermMap shifted;
    for (const auto& [m, c] : terms_) shifted.emplace(m * mono, c);
    terms_ = std::move(shifted);
}

void MultiLaurent::add_scaled(const MultiLaurent& p, const BigRational& c, const Monomial& mono) {
    if (c == 0) return;
    for (const auto& [m, v] : p.terms_) add_term(m * mono, c * v);
}

namespace {
BigRational rational_pow(const BigRational& c, int k) {
    BigRational acc = 1;
    BigRational base = k >= 0 ? c : BigRational(1) / c;
    for (int i = 0; i < (k >= 0 ? k : -k); ++i) acc *= base;
    return acc;
}
} // namespace

MultiLaurent MultiLaurent::pow(int k) const {
    if (k == 0) return one();
    if (k < 0) {
        check_internal(is_single_term(), "non-monomial raised to a negative power");
        const auto& [m, c] = *terms_.begin();
        return term(m.pow(k), rational_pow(c, k));
    }
    MultiLaurent acc = one();
    MultiLaurent base = *this;
    int e = k;
    while (e > 0) {
        if (e & 1) acc *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return acc;
}

bool MultiLaurent::uses_var(Var v) const {
    for (const auto& [m, c] : terms_)
        if (m.exp(v) != 0) return true;
    return false;
}

std::vector<Var> MultiLaurent::vars_used() const {
    std::vector<Var> out;
    for (int i = 0; i < kVarCount; ++i) {
        Var v = static_cast<Var>(i);
        if (uses_var(v)) out.push_back(v);
    }
    return out;
}

int MultiLaurent::min_exp(Var v) const {
    int best = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        int e = m.exp(v);
        if (first || e < best) best = e;
        first = false;
    }
    return best;
}

int MultiLaurent::max_exp(Var v) const {
    int best = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        int e = m.exp(v);
        if (first || e > best) best = e;
        first = false;
    }
    return best;
}

int MultiLaurent::max_total_degree() const {
    int best = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        int d = 0;
        for (auto e : m.e) d += e;
        if (first || d > best) best = d;
        first = false;
    }
    return best;
}

int MultiLaurent::min_total_degree() const {
    int best = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        int d = 0;
        for (auto e : m.e) d += e;
        if (first || d < best) best = d;
        first = false;
    }
    return best;
}

std::optional<MultiLaurent> MultiLaurent::exact_divide(const MultiLaurent& divisor) const {
    if (divisor.is_zero()) return std::nullopt;
    if (is_zero()) return MultiLaurent();
    MultiLaurent rem = *this;
    MultiLaurent quot;
    const auto& dlead = *divisor.terms_.rbegin();  // max in canonical order
    const auto& dtrail = *divisor.terms_.begin();
    const Monomial trail_bound = terms_.begin()->first;  // min monomial of the dividend
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms_.rbegin();
        Monomial qm = rlead.first * dlead.first.inverse();
        // For an exact division every quotient term satisfies
        // qm * trailing(divisor) >= trailing(dividend); otherwise we are in
        // an infinite Laurent descent and the division is not exact.
        if (qm * dtrail.first < trail_bound) return std::nullopt;
        BigRational qc = rlead.second / dlead.second;
        quot.add_term(qm, qc);
        rem.add_scaled(divisor, -qc, qm);
    }
    return quot;
}

MultiLaurent MultiLaurent::eval_var(Var v, const BigRational& value) const {
    MultiLaurent out;
    for (const auto& [m, c] : terms_) {
        int e = m.exp(v);
        Monomial rest = m;
        rest.set(v, 0);
        if (e == 0) {
            out.add_term(rest, c);
            continue;
        }
        if (value == 0) {
            if (e > 0) continue;  // vanishes
            throw internal_error("evaluation at a pole: negative power of variable set to 0");
        }
        BigRational f = 1;
        BigRational base = e > 0 ? value : BigRational(1) / value;
        for (int i = 0; i < (e > 0 ? e : -e); ++i) f *= base;
        out.add_term(rest, c * f);
    }
    return out;
}

MultiLaurent MultiLaurent::subst_var(Var v, const MultiLaurent& repl) const {
    MultiLaurent out;
    // group by exponent of v so each power is expanded once
    std::map<int, MultiLaurent> groups;
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        rest.set(v, 0);
        groups[m.exp(v)].add_term(rest, c);
    }
    for (const auto& [e, g] : groups) {
        if (e < 0) check_internal(repl.is_single_term(), "substitution of a negative power by a non-monomial");
        out += g * repl.pow(e);
    }
    return out;
}

MultiLaurent MultiLaurent::rename_var(Var v, Var w, int scale) const {
    MultiLaurent out;
    for (const auto& [m, c] : terms_) {
        Monomial r = m;
        int e = m.exp(v);
        r.set(v, 0);
        r.set(w, r.exp(w) + e * scale);
        out.add_term(r, c);
    }
    return out;
}

namespace {

// One printed term: sign handled by the caller.
void append_term(std::ostringstream& os, const Monomial& m, const BigRational& cabs, bool latex) {
    std::vector<std::pair<Var, int>> parts;
    for (int i = 0; i < kVarCount; ++i) {
        Var v = static_cast<Var>(i);
        if (m.exp(v) != 0) parts.emplace_back(v, m.exp(v));
    }
    if (parts.empty()) {
        os << rational_to_string(cabs);
        return;
    }
    if (cabs != 1) os << rational_to_string(cabs);
    for (auto [v, e] : parts) {
        os << var_name(v);
        if (e != 1) {
            if (latex)
                os << "^{" << e << "}";
            else
                os << "^" << e;
        }
    }
}

} // namespace

std::string MultiLaurent::to_plain_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        append_term(os, m, neg ? BigRational(-c) : c, false);
        first = false;
    }
    return os.str();
}

std::string MultiLaurent::to_latex_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        append_term(os, m, neg ? BigRational(-c) : c, true);
        first = false;
    }
    return os.str();
}

MultiLaurent pow(const MultiLaurent& base, int k) { return base.pow(k); }

const char* var_name(Var v) {
    switch (v) {
        case Var::q: return "q";
        case Var::z: return "z";
        case Var::s: return "s";
        case Var::b: return "b";
        case Var::t: return "t";
        case Var::x: return "x";
        case Var::Q: return "Q";
        case Var::A: return "A";
        case Var::Z: return "Z";
        case Var::B: return "B";
    }
    return "?";
}

std::optional<Var> var_from_name(std::string_view name) {
    if (name == "q") return Var::q;
    if (name == "z") return Var::z;
    if (name == "s") return Var::s;
    if (name == "b") return Var::b;
    if (name == "t") return Var::t;
    if (name == "x") return Var::x;
    if (name == "Q") return Var::Q;
    if (name == "a" || name == "A") return Var::A;
    if (name == "Z") return Var::Z;
    if (name == "B") return Var::B;
    return std::nullopt;
}

} // namespace heckeweave
