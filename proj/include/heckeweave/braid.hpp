#ifndef HECKEWEAVE_BRAID_HPP
#define HECKEWEAVE_BRAID_HPP

#include "heckeweave/hecke.hpp"

#include <string>
#include <vector>

namespace heckeweave {

/// Braid word in B_strands as a list of (generator, exponent) letters.
/// Adjacent letters with equal generators are merged on construction and
/// zero exponents dropped, so consecutive letters always have distinct
/// generators.
class BraidWord {
public:
    BraidWord(int strands, std::vector<std::pair<int, int>> letters);

    int strands() const { return strands_; }
    const std::vector<std::pair<int, int>>& letters() const { return letters_; }
    int exponent_sum() const;
    BraidWord mirror() const;
    /// Components of the closure (cycle count of the underlying permutation).
    int closure_components() const;

    /// "1,-2,3" with optional repetition groups "(1,-2,3)^5".
    static BraidWord parse(const std::string& text, int strands);
    std::string to_string() const;

private:
    int strands_;
    std::vector<std::pair<int, int>> letters_;
};

/// Parameters of the weaving braid (sigma_1 sigma_2^-1 ... sigma_n^delta)^m
/// whose closure is W(N, m).
struct WeavingSpec {
    int N;  // strands, = n + 1
    int m;  // repetitions

    WeavingSpec(int N_, int m_);

    int n() const { return N - 1; }
    int d() const { return n() % 2; }               // (1 - (-1)^n) / 2
    int r() const { return (n() - d()) / 2; }
    int delta() const { return n() % 2 ? 1 : -1; }  // sign of the last letter
    int e() const { return m * d(); }               // exponent sum
    int components() const;                          // gcd(N, m)
};

BraidWord weaving_braid(const WeavingSpec& spec);

/// rho(alpha) in the basis B_n via the run decomposition: split into maximal
/// ascending runs, expand each run through the generator power formula, fold
/// right-to-left with M-supported left factors.
HeckeElement braid_to_hecke(const BraidWord& w);

/// rho(sigma_{n+1,m}) = q^prefactor_exponent * sum f_l^m(q) beta_n^l, with
/// the f^m computed by the weaving recursion (memoized h-tables).
struct WeavingHecke {
    int n;
    int prefactor_exponent;  // -m*r
    std::vector<std::pair<uint32_t, MultiLaurent>> coeffs;

    HeckeElement to_element() const;
};

WeavingHecke weaving_hecke(const WeavingSpec& spec);

/// Trace of the weaving braid representation; asserts the closed-form
/// degree bounds before returning.
TracePoly weaving_trace(const WeavingSpec& spec);

/// (max total degree, min total degree) = (mn - mr, r + d - mr).
std::pair<int, int> trace_degree_bounds(const WeavingSpec& spec);

} // namespace heckeweave

#endif
