#ifndef HECKEWEAVE_RATIONAL_HPP
#define HECKEWEAVE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace heckeweave {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Exact decimal string: "-7" for integers, "3/2" otherwise.
std::string rational_to_string(const BigRational& r);

// Accepts the same forms rational_to_string emits.
BigRational rational_from_string(const std::string& s);

// "2.20703e19"-style rounding of a big integer to the given number of
// significant figures (used when comparing against the paper's tables).
std::string bigint_to_scientific(const BigInt& v, int sig_figs);

double rational_to_double(const BigRational& r);

} // namespace heckeweave

#endif
