#include "heckeweave/braid.hpp"

#include "heckeweave/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace heckeweave {

BraidWord::BraidWord(int strands, std::vector<std::pair<int, int>> letters) : strands_(strands) {
    require(strands >= 2, "a braid needs at least two strands");
    for (auto [g, e] : letters) {
        require(g >= 1 && g <= strands - 1, "braid generator out of range");
        if (e == 0) continue;
        if (!letters_.empty() && letters_.back().first == g) {
            letters_.back().second += e;
            if (letters_.back().second == 0) letters_.pop_back();
        } else {
            letters_.emplace_back(g, e);
        }
    }
}

int BraidWord::exponent_sum() const {
    int e = 0;
    for (auto [g, k] : letters_) e += k;
    return e;
}

BraidWord BraidWord::mirror() const {
    std::vector<std::pair<int, int>> out = letters_;
    for (auto& [g, e] : out) e = -e;
    return BraidWord(strands_, std::move(out));
}

int BraidWord::closure_components() const {
    std::vector<int> perm(static_cast<size_t>(strands_));
    std::iota(perm.begin(), perm.end(), 0);
    for (auto [g, e] : letters_)
        if (e % 2 != 0) std::swap(perm[static_cast<size_t>(g - 1)], perm[static_cast<size_t>(g)]);
    std::vector<bool> seen(static_cast<size_t>(strands_), false);
    int cycles = 0;
    for (int i = 0; i < strands_; ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        ++cycles;
        for (int j = i; !seen[static_cast<size_t>(j)]; j = perm[static_cast<size_t>(j)])
            seen[static_cast<size_t>(j)] = true;
    }
    return cycles;
}

namespace {

void parse_flat(const std::string& text, size_t& pos, std::vector<std::pair<int, int>>& out);

int parse_int(const std::string& text, size_t& pos) {
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
        throw domain_error("malformed braid word near position " + std::to_string(start));
    return std::stoi(text.substr(start, pos - start));
}

void skip_ws(const std::string& text, size_t& pos) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

void parse_item(const std::string& text, size_t& pos, std::vector<std::pair<int, int>>& out) {
    skip_ws(text, pos);
    if (pos < text.size() && text[pos] == '(') {
        ++pos;
        std::vector<std::pair<int, int>> group;
        parse_flat(text, pos, group);
        skip_ws(text, pos);
        if (pos >= text.size() || text[pos] != ')') throw domain_error("unbalanced '(' in braid word");
        ++pos;
        skip_ws(text, pos);
        int reps = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            reps = parse_int(text, pos);
            require(reps >= 1, "repetition count must be positive");
        }
        for (int i = 0; i < reps; ++i) out.insert(out.end(), group.begin(), group.end());
        return;
    }
    int v = parse_int(text, pos);
    require(v != 0, "braid letters are nonzero signed generator indices");
    out.emplace_back(std::abs(v), v > 0 ? 1 : -1);
}

void parse_flat(const std::string& text, size_t& pos, std::vector<std::pair<int, int>>& out) {
    parse_item(text, pos, out);
    skip_ws(text, pos);
    while (pos < text.size() && text[pos] == ',') {
        ++pos;
        parse_item(text, pos, out);
        skip_ws(text, pos);
    }
}

} // namespace

BraidWord BraidWord::parse(const std::string& text, int strands) {
    std::vector<std::pair<int, int>> letters;
    size_t pos = 0;
    skip_ws(text, pos);
    if (pos < text.size()) {
        parse_flat(text, pos, letters);
        skip_ws(text, pos);
    }
    if (pos != text.size()) throw domain_error("trailing characters in braid word");
    return BraidWord(strands, std::move(letters));
}

std::string BraidWord::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (auto [g, e] : letters_) {
        for (int i = 0; i < std::abs(e); ++i) {
            if (!first) os << ",";
            os << (e > 0 ? g : -g);
            first = false;
        }
    }
    return os.str();
}

WeavingSpec::WeavingSpec(int N_, int m_) : N(N_), m(m_) {
    require(N >= 2, "weaving braids need at least two strands");
    require(m >= 1, "weaving repetition must be positive");
}

int WeavingSpec::components() const { return std::gcd(N, m); }

BraidWord weaving_braid(const WeavingSpec& spec) {
    std::vector<std::pair<int, int>> letters;
    for (int rep = 0; rep < spec.m; ++rep)
        for (int g = 1; g <= spec.n(); ++g) letters.emplace_back(g, g % 2 ? 1 : -1);
    return BraidWord(spec.N, std::move(letters));
}

namespace {

// Expand one run sigma_{t_1}^{k_1} ... (ascending t) into span(C_n) by a
// right fold of the two-term generator powers.
HeckeElement expand_run(int n, const std::vector<std::pair<int, int>>& run) {
    HeckeElement acc = HeckeElement::identity(n);
    for (auto it = run.rbegin(); it != run.rend(); ++it) {
        auto [g, k] = *it;
        HeckeElement next;
        next.n = n;
        const MultiLaurent pk = pk_poly(k);
        MultiLaurent pk1 = pk_poly(k - 1);
        pk1.mul_monomial(Monomial::var(Var::q));
        if (!pk.is_zero()) {
            HeckeElement shifted = mul_elements(HeckeElement::generator(n, g), acc);
            for (auto& [code, c] : shifted.coeffs) next.add(code, c * pk);
        }
        if (!pk1.is_zero())
            for (const auto& [code, c] : acc.coeffs) next.add(code, c * pk1);
        acc = std::move(next);
    }
    return acc;
}

} // namespace

HeckeElement braid_to_hecke(const BraidWord& w) {
    const int n = w.strands() - 1;
    if (w.letters().empty()) return HeckeElement::identity(n);
    // maximal runs with strictly increasing generator subscripts
    std::vector<std::vector<std::pair<int, int>>> runs;
    for (const auto& letter : w.letters()) {
        if (runs.empty() || runs.back().back().first >= letter.first) runs.emplace_back();
        runs.back().push_back(letter);
    }
    HeckeElement acc = expand_run(n, runs.back());
    for (auto it = std::next(runs.rbegin()); it != runs.rend(); ++it)
        acc = mul_elements(expand_run(n, *it), acc);
    return acc;
}

HeckeElement WeavingHecke::to_element() const {
    HeckeElement e;
    e.n = n;
    const Monomial shift = Monomial::var(Var::q, prefactor_exponent);
    for (const auto& [code, c] : coeffs) {
        MultiLaurent v = c;
        v.mul_monomial(shift);
        e.add(code, v);
    }
    return e;
}

WeavingHecke weaving_hecke(const WeavingSpec& spec) {
    const int n = spec.n();
    const uint32_t size = level_size(n);
    const MultiLaurent one_minus_q = MultiLaurent::one() - MultiLaurent::variable(Var::q);

    // f^1 is supported exactly on N_n with coefficient (1-q)^(n - sum l)
    std::vector<MultiLaurent> f(size);
    std::vector<std::pair<uint32_t, MultiLaurent>> base;  // (code, (1-q)^...) over N_n
    for (uint32_t code = 0; code < size; ++code) {
        HeckeIndex l = index_decode(code, n);
        if (!in_N(l)) continue;
        int len = std::accumulate(l.begin(), l.end(), 0);
        base.emplace_back(code, one_minus_q.pow(n - len));
    }
    for (const auto& [code, c] : base) f[code] = c;

    // f_l^m = sum_i sum_j (1-q)^(n - sum j_s) f_i^{m-1} h_l^{ji}
    for (int step = 2; step <= spec.m; ++step) {
        std::vector<MultiLaurent> next(size);
        for (uint32_t i = 0; i < size; ++i) {
            if (f[i].is_zero()) continue;
            for (const auto& [j, cj] : base) {
                MultiLaurent w = cj * f[i];
                for (const auto& [l, h] : mul_m_basis_cached(n, j, i)) next[l] += w * h;
            }
        }
        f = std::move(next);
    }

    WeavingHecke out;
    out.n = n;
    out.prefactor_exponent = -spec.m * spec.r();
    for (uint32_t code = 0; code < size; ++code)
        if (!f[code].is_zero()) out.coeffs.emplace_back(code, std::move(f[code]));
    return out;
}

TracePoly weaving_trace(const WeavingSpec& spec) {
    WeavingHecke wh = weaving_hecke(spec);
    MultiLaurent sum;
    for (const auto& [code, c] : wh.coeffs)
        sum += c * trace_basis(wh.n, index_decode(code, wh.n)).value;
    sum.mul_monomial(Monomial::var(Var::q, wh.prefactor_exponent));
    auto [max_deg, min_deg] = trace_degree_bounds(spec);
    check_internal(sum.max_total_degree() == max_deg && sum.min_total_degree() == min_deg,
                   "weaving trace violates the closed-form degree bounds");
    return {sum};
}

std::pair<int, int> trace_degree_bounds(const WeavingSpec& spec) {
    int mr = spec.m * spec.r();
    return {spec.m * spec.n() - mr, spec.r() + spec.d() - mr};
}

} // namespace heckeweave
