#ifndef HECKEWEAVE_REFERENCE_HPP
#define HECKEWEAVE_REFERENCE_HPP

#include "heckeweave/invariants.hpp"

#include <string>
#include <vector>

namespace heckeweave {
namespace reference {

/// Known published values for a selection of weaving knots; the `table`
/// subcommand recomputes and diffs against these.

struct TermTX {
    int x_exp;  // exponent in x = t^(1/2); even means integer t-power
    long long coeff;
};

struct TermAZ {
    int a_exp;
    int z_exp;
    long long coeff;
};

HalfLaurent make_half_laurent(const std::vector<TermTX>& terms);
HomflyPoly make_homfly(const std::vector<TermAZ>& terms);

HalfLaurent alexander_W35();
HalfLaurent alexander_W52();
HalfLaurent alexander_W65();
HalfLaurent jones_W33();
HalfLaurent jones_W43();
HalfLaurent jones_W64();
HomflyPoly homfly_W312();
HomflyPoly homfly_W42();
HomflyPoly homfly_W52();

struct KhEntry {
    int i, j;
    long long rank;
};
std::vector<KhEntry> khovanov_W43();
std::vector<KhEntry> khovanov_W53();

/// f_k(m) rows: value per k in [2, 2+values.size())
struct FkRow {
    int m;
    std::vector<double> values;
};
const std::vector<FkRow>& fk_table(int N);

struct StatsRow {
    int m;
    const char* total_rank;  // exact when all digits given, else "mantissaeEXP"
    bool total_exact;
    double mu;
    bool mu_exact_half;  // the table lists mu = 0.5 exactly
    double sigma;
    double L1;  // soft targets: order of magnitude only
    double L2;
};
const std::vector<StatsRow>& stats_table(int N);

} // namespace reference
} // namespace heckeweave

#endif
