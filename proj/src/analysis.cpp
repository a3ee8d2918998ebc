#include "heckeweave/analysis.hpp"

#include <cmath>

namespace heckeweave {

BigInt TwistProfile::T(int j) const {
    check_internal(defined(j), "twist number index outside the half-span");
    BigInt lo = coeffs[static_cast<size_t>(j)];
    BigInt hi = coeffs[coeffs.size() - 1 - static_cast<size_t>(j)];
    if (lo < 0) lo = -lo;
    if (hi < 0) hi = -hi;
    return lo + hi;
}

TwistProfile twist_numbers(const HalfLaurent& v) {
    require(!v.value.is_zero(), "twist numbers of the zero polynomial");
    TwistProfile p;
    p.low_x = v.value.min_exp(Var::x);
    p.high_x = v.value.max_exp(Var::x);
    check_internal((p.high_x - p.low_x) % 2 == 0, "Jones coefficients off the t-grid");
    p.coeffs.resize(static_cast<size_t>((p.high_x - p.low_x) / 2 + 1));
    for (const auto& [m, c] : v.value.terms()) {
        check_internal((m.exp(Var::x) - p.low_x) % 2 == 0, "Jones coefficients off the t-grid");
        check_internal(denominator(c) == 1, "Jones coefficient is not an integer");
        p.coeffs[static_cast<size_t>((m.exp(Var::x) - p.low_x) / 2)] = numerator(c);
    }
    return p;
}

TwistRatio twist_ratio_from_profile(const TwistProfile& p, const WeavingSpec& spec, int k) {
    require(p.defined(k), "twist number T_k undefined for this span");
    // f_k(m) = T_k / (((r+d)^k + r^k) m^k / k!)
    BigInt denom_base = 0;
    {
        BigInt a = 1, b = 1;
        for (int i = 0; i < k; ++i) {
            a *= spec.r() + spec.d();
            b *= spec.r();
        }
        denom_base = a + b;
    }
    BigInt mk = 1;
    for (int i = 0; i < k; ++i) mk *= spec.m;
    BigInt kfact = 1;
    for (int i = 2; i <= k; ++i) kfact *= i;
    BigRational f(p.T(k) * kfact, denom_base * mk);
    TwistRatio out;
    out.f = rational_to_double(f);
    out.g = std::pow(out.f, 1.0 / k);
    return out;
}

TwistRatio twist_ratio(const WeavingSpec& spec, int k) {
    return twist_ratio_from_profile(twist_numbers(jones(spec)), spec, k);
}

double volume_lower_const(int n) { return kVOct * (n - 1) / n; }
double volume_upper_const(int n) { return (kVOct * (n - 2) + 4 * kVTet) / n; }

BoundCurves volume_bound_curves(int n, int m, int k, int variant, const TwistRatio& ratio) {
    require(variant >= 1 && variant <= 4, "bound-curve variant must be 1..4");
    require(k >= 1, "twist index must be positive");
    const double Ln = volume_lower_const(n);
    const double Un = volume_upper_const(n);
    BoundCurves out;
    const double pi = 3.14159265358979323846;
    out.lower_paper = Ln * std::pow(1.0 - 4.0 * pi * pi / (static_cast<double>(m) * m), 1.5);
    out.upper_paper = Un;
    double dev = std::abs(1.0 - (variant <= 2 ? ratio.f : ratio.g));
    if (variant % 2 == 1) {
        out.L = Ln * (1.0 + dev);
        out.U = Un * (1.0 - dev);
    } else {
        require(dev < 1.0, "refined bound undefined: |1 - f_k| >= 1");
        out.L = Ln / (1.0 - dev);
        out.U = Un / (1.0 + dev);
    }
    return out;
}

BoundCurves volume_bound_curves(const WeavingSpec& spec, int k, int variant) {
    return volume_bound_curves(spec.n(), spec.m, k, variant, twist_ratio(spec, k));
}

RankStats rank_stats(const KhovanovTable& table) {
    const WeavingSpec spec(table.N, table.m);
    const int offset = (table.m - 1) * spec.d() + 1;  // j = 2i + offset
    RankStats st;
    st.total_rank = 0;
    std::map<int, BigInt> line;
    for (const auto& [ij, r] : table.entries) {
        auto [i, j] = ij;
        if (j == 2 * i + offset) {
            line[i] = r;
            st.total_rank += r;
        }
    }
    check_internal(!line.empty(), "empty Khovanov support line");
    BigRational sum_p = 0, mu = 0, second = 0;
    for (const auto& [i, r] : line) {
        BigRational pi(r, st.total_rank);
        st.p[i] = pi;
        sum_p += pi;
        mu += pi * i;
        second += pi * i * i;
    }
    check_internal(sum_p == 1, "normalized ranks must sum to one");
    st.mu_exact = mu;
    st.sigma_sq_exact = second - mu * mu;
    check_internal(st.sigma_sq_exact >= 0, "negative rank variance");
    st.mu = rational_to_double(mu);
    st.sigma = std::sqrt(rational_to_double(st.sigma_sq_exact));
    double l1 = 0, l2 = 0;
    for (const auto& [i, pi] : st.p) {
        double diff = rational_to_double(pi) -
                      (st.sigma > 0 ? normal_pdf(st.mu, st.sigma, i) : (i == st.mu ? 1.0 : 0.0));
        l1 += std::abs(diff);
        l2 += diff * diff;
    }
    st.L1_dev = l1;
    st.L2_dev = std::sqrt(l2);
    return st;
}

double normal_pdf(double mu, double sigma, double x) {
    require(sigma > 0, "normal density needs sigma > 0");
    static const double inv_sqrt_2pi = 0.3989422804014327;
    double zscore = (x - mu) / sigma;
    return inv_sqrt_2pi / sigma * std::exp(-0.5 * zscore * zscore);
}

} // namespace heckeweave
