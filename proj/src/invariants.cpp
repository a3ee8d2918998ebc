#include "heckeweave/invariants.hpp"

#include "heckeweave/surd.hpp"

#include <numeric>
#include <sstream>

namespace heckeweave {

SkeinValue skein_V(const WeavingSpec& spec) {
    SkeinValue v;
    v.n = spec.n();
    v.e = spec.e();
    v.trace_q_shift = -spec.m * spec.r();
    v.trace = weaving_trace(spec);
    return v;
}

SkeinValue skein_of_braid(const BraidWord& w) {
    SkeinValue v;
    v.n = w.strands() - 1;
    v.e = w.exponent_sum();
    v.trace_q_shift = 0;
    v.trace = trace_element(braid_to_hecke(w));
    return v;
}

bool skein_is_trivial(const SkeinValue& v) {
    if ((v.n + v.e) % 2 != 0) return false;
    const MultiLaurent w =
        MultiLaurent::one() - MultiLaurent::variable(Var::q) + MultiLaurent::variable(Var::z);
    int k = v.n_minus_e() / 2;
    MultiLaurent lhs = v.trace.value;
    MultiLaurent rhs = MultiLaurent::variable(Var::z, v.n_plus_e() / 2);
    // move negative prefactor powers to the other side
    if (k >= 0) {
        lhs *= MultiLaurent::variable(Var::q).pow(k);
        rhs *= w.pow(k);
    } else {
        lhs *= w.pow(-k);
        rhs *= MultiLaurent::variable(Var::q).pow(-k);
    }
    return lhs == rhs;
}

namespace {

// shared core: trace evaluated at q = t, z = -1/(1+t), times the
// analytically simplified prefactor (-1)^n (1+t)^n t^(-(n-e)/2).
HalfLaurent jones_pipeline(const SkeinValue& sv) {
    std::map<Var, FactoredRational> bind;
    bind.emplace(Var::q, FactoredRational(MultiLaurent::variable(Var::t)));
    bind.emplace(Var::z, FactoredRational::from_num_den(MultiLaurent(-1),
                                                        {{DenFactor::one_plus_t, 1}}));
    FactoredRational evaluated = laurent_substitute(sv.trace.value, bind);
    MultiLaurent prefactor =
        (MultiLaurent::one() + MultiLaurent::variable(Var::t)).pow(sv.n);
    if (sv.n % 2) prefactor.scale(-1);
    FactoredRational full = evaluated * FactoredRational(std::move(prefactor));
    // all (1+t) denominators cancel against the prefactor
    MultiLaurent in_t = full.as_laurent();
    MultiLaurent in_x = in_t.rename_var(Var::t, Var::x, 2);
    in_x.mul_monomial(Monomial::var(Var::x, -sv.n_minus_e()));
    return {in_x};
}

} // namespace

HalfLaurent jones(const WeavingSpec& spec) { return jones_pipeline(skein_V(spec)); }

HalfLaurent jones_of_braid(const BraidWord& w) { return jones_pipeline(skein_of_braid(w)); }

HalfLaurent alexander(const WeavingSpec& spec, AlexanderW variant) {
    SkeinValue sv = skein_V(spec);
    // clear the q-prefactor so the remaining trace is polynomial in q
    MultiLaurent poly = sv.trace.value;
    poly.mul_monomial(Monomial::var(Var::q, -sv.trace_q_shift));
    check_internal(poly.min_exp(Var::q) >= 0 && poly.min_exp(Var::z) >= 0,
                   "weaving trace is not q^shift times a polynomial");

    // substitute q = s+1, z = s/b, w = s/b; the prefactor contributes
    // (b/s)^n and a global q-power applied as t at the end.
    std::map<Var, FactoredRational> bind;
    bind.emplace(Var::q, FactoredRational(MultiLaurent::one() + MultiLaurent::variable(Var::s)));
    MultiLaurent s_over_b = MultiLaurent::variable(Var::s);
    s_over_b.mul_monomial(Monomial::var(Var::b, -1));
    bind.emplace(Var::z, FactoredRational(s_over_b));
    FactoredRational r = laurent_substitute(poly, bind);
    {
        MultiLaurent pf = MultiLaurent::term(
            Monomial::var(Var::b, sv.n) * Monomial::var(Var::s, -sv.n), 1);
        r *= FactoredRational(std::move(pf));
    }
    if (variant == AlexanderW::faithful) {
        // w = s(1-b)/b carries an extra (1-b)^(-(n-e)/2); the factor is 1 at
        // b = 0, so both variants agree there.
        int k = sv.n_minus_e();
        require(k % 2 == 0, "the faithful w-variant needs an integer prefactor exponent");
        k /= 2;
        const MultiLaurent one_minus_b = MultiLaurent::one() - MultiLaurent::variable(Var::b);
        if (k <= 0)
            r *= FactoredRational(one_minus_b.pow(-k));
        else
            r *= FactoredRational::from_num_den(MultiLaurent::one(), {{DenFactor::one_minus_b, k}});
    }
    r = r.reduced();
    if (r.num().min_exp(Var::b) < 0 || r.den().count(DenFactor::b))
        throw internal_error("residual b in the denominator of the Alexander pipeline");
    FactoredRational at_b0 = r.eval_var(Var::b, 0);
    MultiLaurent e = at_b0.as_laurent();
    check_internal(e.min_exp(Var::s) >= 0, "residual negative power of s after b -> 0");
    MultiLaurent in_t = e.subst_var(Var::s, MultiLaurent::variable(Var::t) - MultiLaurent::one());
    MultiLaurent in_x = in_t.rename_var(Var::t, Var::x, 2);
    // global q-exponent (n-e)/2 - m r becomes a power of t = x^2
    in_x.mul_monomial(Monomial::var(Var::x, sv.n_minus_e() + 2 * sv.trace_q_shift));
    return {in_x};
}

namespace {

struct HomflyConstants {
    SurdElement q;        // ((Z^2+2) + Z S)/2
    SurdElement q_inv;    // its conjugate (norm 1)
    SurdElement zskein;   // A^2 Z (Z + S) / (2B)
    SurdElement zskein_inv;
};

const HomflyConstants& homfly_constants() {
    static const HomflyConstants c = [] {
        HomflyConstants k;
        const MultiLaurent half(BigRational(1, 2));
        // q = (w z)/2 + 1 with w = Z + S: q = ((Z^2+2) + Z S)/2 = ((Z+S)/2)^2
        k.q = SurdElement(
            FactoredRational((MultiLaurent::variable(Var::Z, 2) + MultiLaurent(2)) * half),
            FactoredRational(MultiLaurent::variable(Var::Z) * half));
        check_internal(k.q.norm().value_equals(FactoredRational(MultiLaurent::one())),
                       "q substitution value must have norm 1");
        k.q_inv = k.q.conj();
        // z = a^2 w z / (2b) = A^2 Z (Z + S) / (2B)
        const MultiLaurent scale =
            MultiLaurent::term(Monomial::var(Var::A, 2) * Monomial::var(Var::B, -1),
                               BigRational(1, 2));
        k.zskein = SurdElement(FactoredRational(MultiLaurent::variable(Var::Z, 2) * scale),
                               FactoredRational(MultiLaurent::variable(Var::Z) * scale));
        k.zskein_inv = k.zskein.inverse();
        // identity behind the prefactor: z w = (A^2 Z^2 / B^2) q, so
        // sqrt(q/(zw)) = B/(AZ); w = w z/(2b) = Z(Z+S)/(2B)
        const MultiLaurent wscale =
            MultiLaurent::term(Monomial::var(Var::B, -1), BigRational(1, 2));
        SurdElement w(FactoredRational(MultiLaurent::variable(Var::Z, 2) * wscale),
                      FactoredRational(MultiLaurent::variable(Var::Z) * wscale));
        SurdElement ratio = SurdElement::from_scalar(FactoredRational(MultiLaurent::term(
            Monomial::var(Var::A, 2) * Monomial::var(Var::Z, 2) * Monomial::var(Var::B, -2), 1)));
        SurdElement diff = k.zskein * w - k.q * ratio;
        check_internal(diff.u.reduced().is_zero() && diff.v.reduced().is_zero(),
                       "q/(zw) = B^2/(A^2 Z^2) identity failed");
        return k;
    }();
    return c;
}

} // namespace

HomflyPoly homfly(const WeavingSpec& spec) {
    const auto& k = homfly_constants();
    SkeinValue sv = skein_V(spec);

    // power tables for the two substitution values
    int qmin = sv.trace.value.min_exp(Var::q);
    int qmax = sv.trace.value.max_exp(Var::q);
    int zmax = sv.trace.value.max_exp(Var::z);
    std::map<int, SurdElement> qpow;
    qpow[0] = SurdElement::one();
    for (int i = 1; i <= qmax; ++i) qpow[i] = qpow[i - 1] * k.q;
    for (int i = -1; i >= qmin; --i) qpow[i] = qpow[i + 1] * k.q_inv;
    std::vector<SurdElement> zpow(static_cast<size_t>(zmax + 1));
    zpow[0] = SurdElement::one();
    for (int i = 1; i <= zmax; ++i) zpow[static_cast<size_t>(i)] = zpow[static_cast<size_t>(i - 1)] * k.zskein;

    SurdElement acc;
    for (const auto& [mono, c] : sv.trace.value.terms()) {
        SurdElement term = qpow[mono.exp(Var::q)] * zpow[static_cast<size_t>(mono.exp(Var::z))];
        acc += term * SurdElement::from_scalar(FactoredRational(MultiLaurent(BigRational(c))));
    }
    // prefactor z^{-e} (B/(AZ))^{n-e}
    acc = acc * k.zskein_inv.pow(sv.e) *
          SurdElement::from_scalar(FactoredRational(MultiLaurent::term(
              Monomial::var(Var::B) * Monomial::var(Var::A, -1) * Monomial::var(Var::Z, -1), 1)))
              .pow(sv.n_minus_e());

    check_internal(acc.v.reduced().is_zero(), "nonvanishing surd component in the HOMFLY value");
    MultiLaurent u = acc.u.as_laurent();

    // substitute B = A^2 - 1 at the last; clear B from denominators first
    int bmin = u.min_exp(Var::B);
    int shift = bmin < 0 ? -bmin : 0;
    u.mul_monomial(Monomial::var(Var::B, shift));
    const MultiLaurent bval = MultiLaurent::variable(Var::A, 2) - MultiLaurent::one();
    MultiLaurent expanded = u.subst_var(Var::B, bval);
    if (shift > 0) {
        auto q = expanded.exact_divide(bval.pow(shift));
        check_internal(q.has_value(), "residual (A^2-1) denominator in the HOMFLY value");
        expanded = std::move(*q);
    }
    return {expanded};
}

int signature(const WeavingSpec& spec) { return (1 - spec.m) * spec.d(); }

BigInt KhovanovTable::rank(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? BigInt(0) : it->second;
}

BigInt KhovanovTable::total_rank() const {
    BigInt t = 0;
    for (const auto& [ij, r] : entries) t += r;
    return t;
}

KhovanovTable khovanov(const WeavingSpec& spec) {
    require(spec.components() == 1,
            "Khovanov ranks are computed only for gcd(N,m) = 1 (knot case)");
    SkeinValue sv = skein_V(spec);
    const int sigma = signature(spec);
    check_internal(sigma % 2 == 0, "weaving knot signature must be even");

    // Tr evaluated at q = -tQ^2, z = -1/(1 - tQ^2)
    std::map<Var, FactoredRational> bind;
    MultiLaurent mtq2 = MultiLaurent::term(Monomial::var(Var::t) * Monomial::var(Var::Q, 2), -1);
    bind.emplace(Var::q, FactoredRational(mtq2));
    bind.emplace(Var::z, FactoredRational::from_num_den(MultiLaurent(-1),
                                                        {{DenFactor::one_minus_tQ2, 1}}));
    FactoredRational tr = laurent_substitute(sv.trace.value, bind);

    // F = (-1)^(r+d) t^(-r) Q^(e-n) (1 - tQ^2)^n Tr - Q^(-sigma)
    const MultiLaurent one_minus_tq2 = den_factor_poly(DenFactor::one_minus_tQ2);
    MultiLaurent pf = one_minus_tq2.pow(sv.n);
    pf.mul_monomial(Monomial::var(Var::t, -spec.r()) * Monomial::var(Var::Q, sv.e - sv.n));
    if ((spec.r() + spec.d()) % 2) pf.scale(-1);
    FactoredRational F = tr * FactoredRational(std::move(pf)) -
                         FactoredRational(MultiLaurent::variable(Var::Q, -sigma));
    MultiLaurent f_poly = F.as_laurent();

    // Kh = Q^-sigma (Q^-1 + Q) + (Q^-1 + t Q^3) * F/(1 + tQ^2)
    const MultiLaurent one_plus_tq2 =
        MultiLaurent::one() + MultiLaurent::term(Monomial::var(Var::t) * Monomial::var(Var::Q, 2), 1);
    auto g = f_poly.exact_divide(one_plus_tq2);
    check_internal(g.has_value(), "F is not divisible by 1 + tQ^2");
    MultiLaurent kh = (MultiLaurent::variable(Var::Q, -1) +
                       MultiLaurent::term(Monomial::var(Var::t) * Monomial::var(Var::Q, 3), 1)) *
                      *g;
    kh += MultiLaurent::variable(Var::Q, -sigma - 1) + MultiLaurent::variable(Var::Q, -sigma + 1);

    KhovanovTable table;
    table.N = spec.N;
    table.m = spec.m;
    table.sigma = sigma;
    for (const auto& [mono, c] : kh.terms()) {
        check_internal(denominator(c) == 1 && c > 0,
                       "Khovanov polynomial has a non-positive or non-integer coefficient");
        int i = mono.exp(Var::t);
        int j = mono.exp(Var::Q);
        int line = j - 2 * i + sigma;
        check_internal(line == 1 || line == -1, "Khovanov rank off the support lines");
        table.entries[{i, j}] = numerator(c);
    }
    return table;
}

MultiLaurent jones_at_minus_tQ2(const HalfLaurent& v) {
    check_internal(v.integer_t_powers_only(),
                   "V(-tQ^2) needs integer powers of t (knot case)");
    MultiLaurent out;
    for (const auto& [mono, c] : v.value.terms()) {
        int k = mono.exp(Var::x) / 2;
        Monomial m = Monomial::var(Var::t, k) * Monomial::var(Var::Q, 2 * k);
        out.add_term(m, (k % 2 == 0) ? c : -c);
    }
    return out;
}

bool HalfLaurent::integer_t_powers_only() const {
    for (const auto& [m, c] : value.terms())
        if (m.exp(Var::x) % 2 != 0) return false;
    return true;
}

namespace {

// t-presentation of an x-Laurent term: exponent printed as k or k/2
void append_t_exponent(std::ostringstream& os, int xexp, bool latex) {
    if (latex) {
        os << "t^{";
        if (xexp % 2 == 0)
            os << xexp / 2;
        else
            os << xexp << "/2";
        os << "}";
        return;
    }
    os << "t";
    if (xexp == 2) return;
    os << "^";
    if (xexp % 2 == 0)
        os << xexp / 2;
    else
        os << xexp << "/2";
}

std::string half_laurent_string(const MultiLaurent& v, bool latex) {
    if (v.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : v.terms()) {
        bool neg = c < 0;
        BigRational cabs = neg ? BigRational(-c) : c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        int e = m.exp(Var::x);
        if (e == 0)
            os << rational_to_string(cabs);
        else {
            if (cabs != 1) os << rational_to_string(cabs);
            append_t_exponent(os, e, latex);
        }
        first = false;
    }
    return os.str();
}

} // namespace

std::string HalfLaurent::to_plain_string() const { return half_laurent_string(value, false); }
std::string HalfLaurent::to_latex_string() const { return half_laurent_string(value, true); }

namespace {

std::string homfly_string(const MultiLaurent& v, bool latex) {
    if (v.is_zero()) return "0";
    // z-major ascending order, matching the paper's presentation
    std::vector<std::pair<std::pair<int, int>, BigRational>> terms;
    for (const auto& [m, c] : v.terms())
        terms.push_back({{m.exp(Var::Z), m.exp(Var::A)}, c});
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::ostringstream os;
    bool first = true;
    for (const auto& [za, c] : terms) {
        auto [ze, ae] = za;
        bool neg = c < 0;
        BigRational cabs = neg ? BigRational(-c) : c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        bool printed = false;
        if (cabs != 1 || (ae == 0 && ze == 0)) {
            os << rational_to_string(cabs);
            printed = true;
        }
        auto put = [&](const char* name, int e) {
            if (e == 0) return;
            os << name;
            if (e != 1) {
                if (latex)
                    os << "^{" << e << "}";
                else
                    os << "^" << e;
            }
            printed = true;
        };
        put("a", ae);
        put("z", ze);
        (void)printed;
        first = false;
    }
    return os.str();
}

} // namespace

std::string HomflyPoly::to_plain_string() const { return homfly_string(value, false); }
std::string HomflyPoly::to_latex_string() const { return homfly_string(value, true); }

} // namespace heckeweave
