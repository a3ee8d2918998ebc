#ifndef HECKEWEAVE_INVARIANTS_HPP
#define HECKEWEAVE_INVARIANTS_HPP

#include "heckeweave/braid.hpp"
#include "heckeweave/ratfun.hpp"

#include <map>

namespace heckeweave {

/// V_alpha(q,z) before any substitution: the trace together with the
/// symbolic prefactor (1/z)^((n+e)/2) (q/w)^((n-e)/2), the half-exponents
/// kept exact as the integers n+e and n-e.
struct SkeinValue {
    int n;
    int e;
    int trace_q_shift;  // -m*r for weaving braids, 0 otherwise
    TracePoly trace;    // the full trace (q-shift already applied)

    int n_plus_e() const { return n + e; }
    int n_minus_e() const { return n - e; }
};

SkeinValue skein_V(const WeavingSpec& spec);
SkeinValue skein_of_braid(const BraidWord& w);

/// True when the value is identically 1, checked without division:
/// Tr * q^((n-e)/2) == z^((n+e)/2) * w^((n-e)/2) with w = 1 - q + z.
/// Requires n+e even (knot-like closure).
bool skein_is_trivial(const SkeinValue& v);

/// Laurent polynomial in x = t^(1/2).
struct HalfLaurent {
    MultiLaurent value;

    bool operator==(const HalfLaurent& o) const { return value == o.value; }
    /// Plain text in t with "/2" exponents for odd x powers.
    std::string to_plain_string() const;
    std::string to_latex_string() const;
    bool integer_t_powers_only() const;
};

enum class AlexanderW {
    paper_literal,  // w replaced by s/b, exactly as the recipe states
    faithful,       // w replaced by s(1-b)/b = 1 - q + z
};

HalfLaurent alexander(const WeavingSpec& spec, AlexanderW variant = AlexanderW::paper_literal);
HalfLaurent jones(const WeavingSpec& spec);
HalfLaurent jones_of_braid(const BraidWord& w);

/// Laurent polynomial in the HOMFLY-PT variables (the paper's a and z,
/// carried as A and Z).
struct HomflyPoly {
    MultiLaurent value;

    bool operator==(const HomflyPoly& o) const { return value == o.value; }
    std::string to_plain_string() const;
    std::string to_latex_string() const;
};

HomflyPoly homfly(const WeavingSpec& spec);

/// (1 - m) d.
int signature(const WeavingSpec& spec);

/// Khovanov rank table of the weaving knot, supported on the two lines
/// j = 2i - sigma +- 1.
struct KhovanovTable {
    int N = 0;
    int m = 0;
    int sigma = 0;
    std::map<std::pair<int, int>, BigInt> entries;  // (i, j) -> rank > 0

    BigInt rank(int i, int j) const;
    BigInt total_rank() const;
};

KhovanovTable khovanov(const WeavingSpec& spec);

/// V(-t Q^2) as a polynomial in t, Q; defined for integer-t-power inputs.
MultiLaurent jones_at_minus_tQ2(const HalfLaurent& v);

} // namespace heckeweave

#endif
