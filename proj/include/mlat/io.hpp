#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"
#include "mlat/chain.hpp"
#include "mlat/filtration.hpp"
#include "mlat/homology.hpp"
#include "mlat/incremental.hpp"
#include "mlat/multicomplex.hpp"

namespace mlat {

using Json = nlohmann::ordered_json;

/// A parsed workspace file:
///
///   {"colors": [...],
///    "graphs": {"G": {"nodes": [1, 2], "edges": [{"u": 1, "v": 2, "color": "red", "mult": 2}]}},
///    "chain": "G | H"}            // optional
struct Workspace {
  ChainEnv env;
  std::optional<std::string> chain;
};

/// Raises `Schema` for structural problems and the graph errors
/// (PaletteMismatch, DanglingEndpoint, ...) for bad content. The chain's
/// atoms must name graphs.
Workspace parse_workspace(const Json& doc);
Workspace load_workspace(const std::filesystem::path& path);

Json to_json(const Multigraph& g);
Json to_json(const BettiVector& b);
/// Cells per dimension with vertices, copy, glued faces and colours.
Json to_json(const Multicomplex& x);
Json to_json(const FiltrationPoset& p);
/// Inverse of `to_json(const Multicomplex&)`; the colour of a 1-cell is its
/// single listed colour. Validation is the constructor's.
Multicomplex complex_from_json(const Json& doc);
Multicomplex load_complex(const std::filesystem::path& path);
Json to_json(const IncrementalParams& p);
Json to_json(const IncrementalReport& r);

std::string to_string(CellPolicy policy);
CellPolicy parse_policy(const std::string& name);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes);

}  // namespace mlat
