#include "heckeweave/json_io.hpp"

#include <fstream>

namespace heckeweave {

Json poly_to_json(const MultiLaurent& p) {
    Json j;
    Json vars = Json::array();
    for (Var v : p.vars_used()) vars.push_back(var_name(v));
    j["vars"] = std::move(vars);
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json exp = Json::object();
        for (int i = 0; i < kVarCount; ++i) {
            Var v = static_cast<Var>(i);
            if (m.exp(v) != 0) exp[var_name(v)] = m.exp(v);
        }
        terms.push_back(Json{{"exp", std::move(exp)}, {"coef", rational_to_string(c)}});
    }
    j["terms"] = std::move(terms);
    return j;
}

MultiLaurent poly_from_json(const Json& j) {
    MultiLaurent p;
    for (const auto& term : j.at("terms")) {
        Monomial m;
        for (const auto& [name, e] : term.at("exp").items()) {
            auto v = var_from_name(name);
            require(v.has_value(), "unknown variable in polynomial JSON: " + name);
            m.set(*v, e.get<int>());
        }
        p.add_term(m, rational_from_string(term.at("coef").get<std::string>()));
    }
    return p;
}

Json hecke_to_json(const HeckeElement& h) {
    Json j;
    j["n"] = h.n;
    // deterministic order: sort by index code
    std::vector<uint32_t> codes;
    codes.reserve(h.coeffs.size());
    for (const auto& [code, c] : h.coeffs) codes.push_back(code);
    std::sort(codes.begin(), codes.end());
    Json terms = Json::array();
    for (uint32_t code : codes) {
        Json idx = Json::array();
        for (int v : index_decode(code, h.n)) idx.push_back(v);
        terms.push_back(Json{{"index", std::move(idx)}, {"coef", poly_to_json(h.coeffs.at(code))}});
    }
    j["terms"] = std::move(terms);
    return j;
}

HeckeElement hecke_from_json(const Json& j) {
    HeckeElement h;
    h.n = j.at("n").get<int>();
    for (const auto& term : j.at("terms")) {
        HeckeIndex l;
        for (const auto& v : term.at("index")) l.push_back(v.get<int>());
        require(static_cast<int>(l.size()) == h.n && index_valid(l),
                "invalid basis index in Hecke JSON");
        h.add(index_code(l), poly_from_json(term.at("coef")));
    }
    return h;
}

Json khovanov_to_json(const KhovanovTable& t) {
    Json entries = Json::array();
    for (const auto& [ij, r] : t.entries) {
        entries.push_back(Json{{"i", ij.first}, {"j", ij.second}, {"rank", r.str()}});
    }
    return Json{{"sigma", t.sigma}, {"entries", std::move(entries)}};
}

Json invariant_envelope(int N, int m, const std::string& invariant, Json result) {
    return Json{{"knot", Json{{"N", N}, {"m", m}}},
                {"invariant", invariant},
                {"result", std::move(result)}};
}

std::filesystem::path TraceCache::path_for(int N, int m) const {
    return dir_ / ("trace_" + std::to_string(N) + "_" + std::to_string(m) + ".json");
}

std::optional<TracePoly> TraceCache::load(int N, int m) const {
    std::ifstream in(path_for(N, m));
    if (!in) return std::nullopt;
    Json j;
    try {
        in >> j;
        if (j.at("version").get<int>() != kCacheFormatVersion) return std::nullopt;
        if (j.at("N").get<int>() != N || j.at("m").get<int>() != m) return std::nullopt;
        return TracePoly{poly_from_json(j.at("trace"))};
    } catch (const std::exception&) {
        return std::nullopt;  // unreadable cache entries are recomputed
    }
}

void TraceCache::store(int N, int m, const TracePoly& trace) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    Json j{{"version", kCacheFormatVersion}, {"N", N}, {"m", m}, {"trace", poly_to_json(trace.value)}};
    auto tmp = path_for(N, m);
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return;  // caching is best effort
        out << j.dump();
    }
    std::filesystem::rename(tmp, path_for(N, m), ec);
}

} // namespace heckeweave
