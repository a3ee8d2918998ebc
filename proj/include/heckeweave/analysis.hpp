#ifndef HECKEWEAVE_ANALYSIS_HPP
#define HECKEWEAVE_ANALYSIS_HPP

#include "heckeweave/invariants.hpp"

#include <map>
#include <vector>

namespace heckeweave {

/// Coefficient profile of a Jones polynomial.  The grid is indexed in x
/// (= t^(1/2)) so that half-integer-degree links line up correctly; the
/// coefficient spacing is always one full t-step (two x-steps).
struct TwistProfile {
    int low_x = 0;   // lowest x-exponent
    int high_x = 0;  // highest
    std::vector<BigInt> coeffs;  // on the grid low_x, low_x+2, ..., high_x

    /// span of the Jones polynomial in t-units (mn for weaving knots),
    /// doubled: (high_x - low_x) / 2 full steps.
    int span_t() const { return (high_x - low_x) / 2; }

    /// T_j = |lambda_{l+j}| + |lambda_{h-j}|; defined for 1 <= j < span/2.
    bool defined(int j) const { return j >= 1 && 2 * j < span_t(); }
    BigInt T(int j) const;
};

TwistProfile twist_numbers(const HalfLaurent& v);

struct TwistRatio {
    double f = 0;  // T_k / (((r+d)^k + r^k) m^k / k!)
    double g = 0;  // f^(1/k)
};

TwistRatio twist_ratio(const WeavingSpec& spec, int k);
TwistRatio twist_ratio_from_profile(const TwistProfile& p, const WeavingSpec& spec, int k);

// volumes of the regular ideal octahedron and tetrahedron
inline constexpr double kVOct = 3.663862376708876;
inline constexpr double kVTet = 1.0149416064096537;

/// L_n = v_oct (n-1)/n and U_n = (v_oct (n-2) + 4 v_tet)/n.
double volume_lower_const(int n);
double volume_upper_const(int n);

struct BoundCurves {
    double lower_paper = 0;  // L_n (1 - 4 pi^2/m^2)^(3/2), valid for m >= 7
    double upper_paper = 0;  // U_n
    double L = 0;            // refined lower bound, chosen variant
    double U = 0;            // refined upper bound, chosen variant
};

/// variant 1: L_n(1+|1-f|), U_n(1-|1-f|); 2: division instead; 3 and 4: the
/// same with g in place of f.
BoundCurves volume_bound_curves(int n, int m, int k, int variant, const TwistRatio& ratio);
BoundCurves volume_bound_curves(const WeavingSpec& spec, int k, int variant);

/// Normalized Khovanov ranks along the line j = 2i + (m-1)d + 1 and their
/// comparison against the fitted normal density.
struct RankStats {
    BigInt total_rank;              // along the line
    std::map<int, BigRational> p;   // normalized ranks, sum exactly 1
    BigRational mu_exact;
    BigRational sigma_sq_exact;
    double mu = 0;
    double sigma = 0;
    double L1_dev = 0;
    double L2_dev = 0;
};

RankStats rank_stats(const KhovanovTable& table);

double normal_pdf(double mu, double sigma, double x);

} // namespace heckeweave

#endif
