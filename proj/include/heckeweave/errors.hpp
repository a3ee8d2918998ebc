#ifndef HECKEWEAVE_ERRORS_HPP
#define HECKEWEAVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace heckeweave {

// User-facing precondition violations (bad knot parameters, gcd > 1, ...).
// The CLI maps these to exit code 2.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Violated internal invariants (residual denominators, degree-bound failures).
// These indicate a pipeline bug, never bad input.  CLI exit code 3.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw domain_error(msg);
}

inline void check_internal(bool cond, const std::string& msg) {
    if (!cond) throw internal_error(msg);
}

} // namespace heckeweave

#endif
