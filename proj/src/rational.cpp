#include "heckeweave/rational.hpp"

#include "heckeweave/errors.hpp"

#include <cmath>
#include <sstream>

namespace heckeweave {

std::string rational_to_string(const BigRational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

BigRational rational_from_string(const std::string& s) {
    if (s.empty()) throw domain_error("empty rational literal");
    try {
        return BigRational(s);
    } catch (const std::exception&) {
        throw domain_error("malformed rational literal: '" + s + "'");
    }
}

std::string bigint_to_scientific(const BigInt& v, int sig_figs) {
    BigInt a = v < 0 ? BigInt(-v) : v;
    std::string digits = a.str();
    int exp10 = static_cast<int>(digits.size()) - 1;
    // round to sig_figs digits
    std::string mant = digits.substr(0, static_cast<size_t>(sig_figs));
    if (static_cast<int>(digits.size()) > sig_figs && digits[static_cast<size_t>(sig_figs)] >= '5') {
        // propagate the carry
        int i = sig_figs - 1;
        while (i >= 0) {
            if (mant[static_cast<size_t>(i)] != '9') {
                mant[static_cast<size_t>(i)]++;
                break;
            }
            mant[static_cast<size_t>(i)] = '0';
            --i;
        }
        if (i < 0) {
            mant.insert(mant.begin(), '1');
            mant.pop_back();
            ++exp10;
        }
    }
    std::string out;
    if (v < 0) out += '-';
    out += mant.substr(0, 1);
    if (sig_figs > 1) out += "." + mant.substr(1);
    out += "e" + std::to_string(exp10);
    return out;
}

double rational_to_double(const BigRational& r) {
    return static_cast<double>(r);
}

} // namespace heckeweave
