#ifndef HECKEWEAVE_HECKE_HPP
#define HECKEWEAVE_HECKE_HPP

#include "heckeweave/laurent.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace heckeweave {

/// Basis index l = (l_1,...,l_n) with 0 <= l_j <= j, naming the basis
/// element beta_n^l = u_1^{l_1} ... u_n^{l_n} of H_{n+1}(q), where u_i^j is
/// the descending chain T_i T_{i-1} ... T_{i-j+1}.
using HeckeIndex = std::vector<int>;

bool index_valid(const HeckeIndex& l);
/// l_j in {0,1} for all j.
bool in_M(const HeckeIndex& l);
/// in_M and l_j = 1 for every odd j.
bool in_N(const HeckeIndex& l);

/// Mixed-radix encoding of level-i indices (radix j+1 at position j).
uint32_t index_code(const HeckeIndex& l);
HeckeIndex index_decode(uint32_t code, int n);
uint32_t level_size(int n);  // (n+1)!

/// Element of H_{n+1}(q) in the basis B_n; coefficients are Laurent
/// polynomials in q.  Immutable by convention once built.
struct HeckeElement {
    int n = 1;
    std::unordered_map<uint32_t, MultiLaurent> coeffs;

    static HeckeElement identity(int n);
    /// T_j as the singleton index with l_j = 1.
    static HeckeElement generator(int n, int j);

    void add(uint32_t code, const MultiLaurent& c);
    bool operator==(const HeckeElement& o) const;
    bool supported_on_M() const;
};

/// P_k(q) of the generator power formula T_j^k = P_k(q) T_j + q P_{k-1}(q).
MultiLaurent pk_poly(int k);

/// The two-term element P_k(q) T_j + q P_{k-1}(q).
HeckeElement generator_power(int n, int j, int k);

/// A basis expansion: list of (index code, coefficient in q).
using Expansion = std::vector<std::pair<uint32_t, MultiLaurent>>;

/// beta_i^l * u_i^s expanded in B_i (Lemma-style chain recursion; memoized).
Expansion mul_basis_right_chain(int i, const HeckeIndex& l, int s);

/// beta_n^m * beta_n^l for m in M_n, expanded in B_n (memoized).
Expansion mul_m_basis(int n, const HeckeIndex& m, const HeckeIndex& l);

/// Same expansion by code, returning a reference into the memo table (the
/// weaving recursion walks these tables once per step).
const Expansion& mul_m_basis_cached(int n, uint32_t m_code, uint32_t l_code);

/// Exact product; the left factor must be supported on M_n.
HeckeElement mul_elements(const HeckeElement& a, const HeckeElement& b);

/// Ocneanu trace of basis elements and its linear extension.  Values are
/// polynomials in q and z (z-degree = number of distinct generator
/// subscripts in the word).
struct TracePoly {
    MultiLaurent value;
    bool operator==(const TracePoly& o) const { return value == o.value; }
};

TracePoly trace_basis(int n, const HeckeIndex& l);
TracePoly trace_element(const HeckeElement& h);

/// Drop every per-n memo table (tests use this to bound memory).
void clear_hecke_caches();

} // namespace heckeweave

#endif
