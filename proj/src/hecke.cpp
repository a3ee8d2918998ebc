#include "heckeweave/hecke.hpp"

#include "heckeweave/errors.hpp"

#include <mutex>

namespace heckeweave {

bool index_valid(const HeckeIndex& l) {
    for (size_t j = 0; j < l.size(); ++j)
        if (l[j] < 0 || l[j] > static_cast<int>(j) + 1) return false;
    return true;
}

bool in_M(const HeckeIndex& l) {
    for (int v : l)
        if (v != 0 && v != 1) return false;
    return true;
}

bool in_N(const HeckeIndex& l) {
    if (!in_M(l)) return false;
    for (size_t j = 0; j < l.size(); ++j)
        if ((j + 1) % 2 == 1 && l[j] != 1) return false;
    return true;
}

uint32_t index_code(const HeckeIndex& l) {
    uint32_t code = 0;
    uint32_t radix = 1;
    for (size_t j = 0; j < l.size(); ++j) {
        code += static_cast<uint32_t>(l[j]) * radix;
        radix *= static_cast<uint32_t>(j + 2);
    }
    return code;
}

HeckeIndex index_decode(uint32_t code, int n) {
    HeckeIndex l(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        uint32_t r = static_cast<uint32_t>(j + 2);
        l[static_cast<size_t>(j)] = static_cast<int>(code % r);
        code /= r;
    }
    return l;
}

uint32_t level_size(int n) {
    uint32_t s = 1;
    for (int j = 2; j <= n + 1; ++j) s *= static_cast<uint32_t>(j);
    return s;
}

HeckeElement HeckeElement::identity(int n) {
    HeckeElement e;
    e.n = n;
    e.coeffs.emplace(0, MultiLaurent::one());
    return e;
}

HeckeElement HeckeElement::generator(int n, int j) {
    require(j >= 1 && j <= n, "generator index out of range");
    HeckeIndex l(static_cast<size_t>(n), 0);
    l[static_cast<size_t>(j - 1)] = 1;
    HeckeElement e;
    e.n = n;
    e.coeffs.emplace(index_code(l), MultiLaurent::one());
    return e;
}

void HeckeElement::add(uint32_t code, const MultiLaurent& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs.emplace(code, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs.erase(it);
    }
}

bool HeckeElement::operator==(const HeckeElement& o) const {
    return n == o.n && coeffs == o.coeffs;
}

bool HeckeElement::supported_on_M() const {
    for (const auto& [code, c] : coeffs)
        if (!in_M(index_decode(code, n))) return false;
    return true;
}

MultiLaurent pk_poly(int k) {
    if (k == 0) return MultiLaurent::zero();
    MultiLaurent sum;
    int a = k > 0 ? k : -k;
    for (int j = 0; j < a; ++j)
        sum.add_term(Monomial::var(Var::q, j), (j % 2 == 0) ? 1 : -1);
    if (k > 0) {
        if (k % 2 == 0) sum.scale(-1);
        return sum;
    }
    sum.mul_monomial(Monomial::var(Var::q, k));
    return sum;
}

HeckeElement generator_power(int n, int j, int k) {
    require(j >= 1 && j <= n, "generator index out of range");
    HeckeElement e;
    e.n = n;
    HeckeIndex l(static_cast<size_t>(n), 0);
    l[static_cast<size_t>(j - 1)] = 1;
    e.add(index_code(l), pk_poly(k));
    MultiLaurent c0 = pk_poly(k - 1);
    c0.mul_monomial(Monomial::var(Var::q));
    e.add(0, c0);
    return e;
}

namespace {

// Memoized expansion tables.  Keys pack the small prefix codes; level is the
// index into the per-level vectors.
struct Tables {
    std::mutex mu;
    // (level, l_code, s) -> expansion of beta^l * u^s at that level
    std::unordered_map<uint64_t, Expansion> chain;
    // (level, m_code, l_code) -> expansion of beta^m * beta^l
    std::unordered_map<uint64_t, Expansion> mbasis;
    // (level, l_code) -> trace polynomial
    std::unordered_map<uint64_t, MultiLaurent> trace;
};

Tables& tables() {
    static Tables t;
    return t;
}

uint64_t key3(int level, uint32_t a, uint32_t b) {
    return (static_cast<uint64_t>(level) << 56) ^ (static_cast<uint64_t>(a) << 24) ^ b;
}

const MultiLaurent& q_minus_1() {
    static const MultiLaurent v = MultiLaurent::variable(Var::q) - MultiLaurent::one();
    return v;
}

void accumulate(std::unordered_map<uint32_t, MultiLaurent>& acc, uint32_t code,
                const MultiLaurent& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = acc.emplace(code, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

Expansion to_expansion(std::unordered_map<uint32_t, MultiLaurent>&& acc) {
    Expansion out;
    out.reserve(acc.size());
    for (auto& [code, c] : acc) out.emplace_back(code, std::move(c));
    return out;
}

// appends chain value `j` as the level-i coordinate of every level-(i-1) index
uint32_t append_coord(uint32_t code_prefix, int level, int j) {
    return code_prefix + static_cast<uint32_t>(j) * level_size(level - 1);
}

Expansion chain_mul_impl(int i, uint32_t l_code, int s);

const Expansion& chain_mul(int i, uint32_t l_code, int s) {
    auto& tbl = tables();
    uint64_t key = key3(i, l_code, static_cast<uint32_t>(s));
    {
        std::lock_guard<std::mutex> lock(tbl.mu);
        auto it = tbl.chain.find(key);
        if (it != tbl.chain.end()) return it->second;
    }
    Expansion e = chain_mul_impl(i, l_code, s);
    std::lock_guard<std::mutex> lock(tbl.mu);
    return tbl.chain.emplace(key, std::move(e)).first->second;
}

// Lemma-style recursion for beta_i^l * u_i^s.
Expansion chain_mul_impl(int i, uint32_t l_code, int s) {
    HeckeIndex l = index_decode(l_code, i);
    if (s == 0) return {{l_code, MultiLaurent::one()}};
    int li = l[static_cast<size_t>(i - 1)];
    uint32_t prefix = l_code % level_size(i - 1);
    if (li == 0) {
        // beta_{i-1}^{l'} u_i^s is itself a basis element
        return {{append_coord(prefix, i, s), MultiLaurent::one()}};
    }
    std::unordered_map<uint32_t, MultiLaurent> acc;
    if (li <= s) {
        // u_i^{l_i} u_i^s = (q-1) u_{i-1}^{l_i-1} u_i^s + q u_{i-1}^{s-1} u_i^{l_i-1}
        for (const auto& [c1, p1] : chain_mul(i - 1, prefix, li - 1))
            accumulate(acc, append_coord(c1, i, s), p1 * q_minus_1());
        for (const auto& [c2, p2] : chain_mul(i - 1, prefix, s - 1)) {
            MultiLaurent p = p2;
            p.mul_monomial(Monomial::var(Var::q));
            accumulate(acc, append_coord(c2, i, li - 1), p);
        }
    } else {
        // s < l_i: u_i^{l_i} u_i^s = u_{i-1}^s u_i^{l_i}
        for (const auto& [c1, p1] : chain_mul(i - 1, prefix, s))
            accumulate(acc, append_coord(c1, i, li), p1);
    }
    return to_expansion(std::move(acc));
}

Expansion mul_m_impl(int i, uint32_t m_code, uint32_t l_code);

const Expansion& mul_m(int i, uint32_t m_code, uint32_t l_code) {
    auto& tbl = tables();
    uint64_t key = key3(i, m_code, l_code) ^ 0x5bd1e9955bd1e995ull;
    {
        std::lock_guard<std::mutex> lock(tbl.mu);
        auto it = tbl.mbasis.find(key);
        if (it != tbl.mbasis.end()) return it->second;
    }
    Expansion e = mul_m_impl(i, m_code, l_code);
    std::lock_guard<std::mutex> lock(tbl.mu);
    return tbl.mbasis.emplace(key, std::move(e)).first->second;
}

// Level-splitting recursion for beta_i^m * beta_i^l, m in M_i.
Expansion mul_m_impl(int i, uint32_t m_code, uint32_t l_code) {
    if (i == 0) return {{0u, MultiLaurent::one()}};
    HeckeIndex m = index_decode(m_code, i);
    HeckeIndex l = index_decode(l_code, i);
    int mi = m[static_cast<size_t>(i - 1)];
    int li = l[static_cast<size_t>(i - 1)];
    uint32_t m_prefix = m_code % level_size(i - 1);
    uint32_t l_prefix = l_code % level_size(i - 1);
    std::unordered_map<uint32_t, MultiLaurent> acc;
    if (mi == 0) {
        for (const auto& [c, p] : mul_m(i - 1, m_prefix, l_prefix))
            accumulate(acc, append_coord(c, i, li), p);
        return to_expansion(std::move(acc));
    }
    if (i == 1) {
        // T_1 * u_1^{l_1}
        if (li == 0) return {{1u, MultiLaurent::one()}};
        Expansion e;
        e.emplace_back(1u, q_minus_1());
        e.emplace_back(0u, MultiLaurent::variable(Var::q));
        return e;
    }
    // m_i = 1: beta_{i-1}^{m'} T_i beta_{i-2}^{l''} u_{i-1}^{l_{i-1}} u_i^{l_i}
    //        = beta_{i-1}^{m'} beta_{i-2}^{l''} u_i^{l_{i-1}+1} u_i^{l_i}
    int lim1 = l[static_cast<size_t>(i - 2)];
    uint32_t l_pp = l_code % level_size(i - 2);
    auto recurse_append = [&](int last_coord_im1, int append_i, const MultiLaurent& scale) {
        uint32_t sub_l = append_coord(l_pp, i - 1, last_coord_im1);
        for (const auto& [c, p] : mul_m(i - 1, m_prefix, sub_l))
            accumulate(acc, append_coord(c, i, append_i), p * scale);
    };
    if (li == 0) {
        recurse_append(0, lim1 + 1, MultiLaurent::one());
    } else if (lim1 < li) {
        // u_i^{l_{i-1}+1} u_i^{l_i} = (q-1) u_{i-1}^{l_{i-1}} u_i^{l_i} + q u_{i-1}^{l_i-1} u_i^{l_{i-1}}
        recurse_append(lim1, li, q_minus_1());
        recurse_append(li - 1, lim1, MultiLaurent::variable(Var::q));
    } else {
        // 1 <= l_i <= l_{i-1}: u_i^{l_{i-1}+1} u_i^{l_i} = u_{i-1}^{l_i} u_i^{l_{i-1}+1}
        recurse_append(li, lim1 + 1, MultiLaurent::one());
    }
    return to_expansion(std::move(acc));
}

const MultiLaurent& trace_code(int i, uint32_t l_code);

MultiLaurent trace_impl(int i, uint32_t l_code) {
    if (i == 0) return MultiLaurent::one();
    HeckeIndex l = index_decode(l_code, i);
    int li = l[static_cast<size_t>(i - 1)];
    uint32_t prefix = l_code % level_size(i - 1);
    if (li == 0) return trace_code(i - 1, prefix);
    // Tr(beta_{i-1}^{l'} T_i u_{i-1}^{l_i-1}) = z Tr(beta_{i-1}^{l'} u_{i-1}^{l_i-1})
    MultiLaurent sum;
    if (i == 1) {
        sum = MultiLaurent::one();
    } else {
        for (const auto& [c, p] : chain_mul(i - 1, prefix, li - 1)) sum += p * trace_code(i - 1, c);
    }
    sum.mul_monomial(Monomial::var(Var::z));
    return sum;
}

const MultiLaurent& trace_code(int i, uint32_t l_code) {
    auto& tbl = tables();
    uint64_t key = key3(i, 0, l_code);
    {
        std::lock_guard<std::mutex> lock(tbl.mu);
        auto it = tbl.trace.find(key);
        if (it != tbl.trace.end()) return it->second;
    }
    MultiLaurent v = trace_impl(i, l_code);
    std::lock_guard<std::mutex> lock(tbl.mu);
    return tbl.trace.emplace(key, std::move(v)).first->second;
}

} // namespace

Expansion mul_basis_right_chain(int i, const HeckeIndex& l, int s) {
    require(static_cast<int>(l.size()) == i && index_valid(l), "invalid basis index");
    require(s >= 0 && s <= i, "chain length out of range");
    return chain_mul(i, index_code(l), s);
}

Expansion mul_m_basis(int n, const HeckeIndex& m, const HeckeIndex& l) {
    require(static_cast<int>(m.size()) == n && index_valid(m), "invalid left index");
    require(static_cast<int>(l.size()) == n && index_valid(l), "invalid right index");
    require(in_M(m), "left multiplier index must lie in M_n");
    return mul_m(n, index_code(m), index_code(l));
}

const Expansion& mul_m_basis_cached(int n, uint32_t m_code, uint32_t l_code) {
    return mul_m(n, m_code, l_code);
}

HeckeElement mul_elements(const HeckeElement& a, const HeckeElement& b) {
    require(a.n == b.n, "mixed-level Hecke product");
    HeckeElement out;
    out.n = a.n;
    for (const auto& [ma, ca] : a.coeffs) {
        require(in_M(index_decode(ma, a.n)), "left factor not supported on M_n");
        for (const auto& [lb, cb] : b.coeffs) {
            MultiLaurent c = ca * cb;
            for (const auto& [code, p] : mul_m(a.n, ma, lb)) out.add(code, c * p);
        }
    }
    return out;
}

TracePoly trace_basis(int n, const HeckeIndex& l) {
    require(static_cast<int>(l.size()) == n && index_valid(l), "invalid basis index");
    return {trace_code(n, index_code(l))};
}

TracePoly trace_element(const HeckeElement& h) {
    MultiLaurent sum;
    for (const auto& [code, c] : h.coeffs) sum += c * trace_code(h.n, code);
    return {sum};
}

void clear_hecke_caches() {
    auto& tbl = tables();
    std::lock_guard<std::mutex> lock(tbl.mu);
    tbl.chain.clear();
    tbl.mbasis.clear();
    tbl.trace.clear();
}

} // namespace heckeweave
