#ifndef HECKEWEAVE_JSON_IO_HPP
#define HECKEWEAVE_JSON_IO_HPP

#include "heckeweave/analysis.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>

namespace heckeweave {

using Json = nlohmann::ordered_json;

/// {"vars":[...], "terms":[{"exp":{var:int,...},"coef":"exact rational"}]}
/// Terms are emitted in canonical monomial order.
Json poly_to_json(const MultiLaurent& p);
MultiLaurent poly_from_json(const Json& j);

/// {"n":int, "terms":[{"index":[l1..ln], "coef":<poly JSON in q>}]}
Json hecke_to_json(const HeckeElement& h);
HeckeElement hecke_from_json(const Json& j);

Json khovanov_to_json(const KhovanovTable& t);

/// {"knot":{"N":..,"m":..}, "invariant":"...", "result":...}
Json invariant_envelope(int N, int m, const std::string& invariant, Json result);

/// Disk cache for weaving traces, keyed by (N, m); JSON files with a
/// version header.  Readers and the single writer per key may run
/// concurrently across processes (write is atomic via rename).
class TraceCache {
public:
    explicit TraceCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    std::optional<TracePoly> load(int N, int m) const;
    void store(int N, int m, const TracePoly& trace) const;

private:
    std::filesystem::path path_for(int N, int m) const;
    std::filesystem::path dir_;
};

inline constexpr int kCacheFormatVersion = 1;

} // namespace heckeweave

#endif
