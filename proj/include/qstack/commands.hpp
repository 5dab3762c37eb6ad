#pragma once

// The operations behind the command-line tool and the Python module. Each
// returns the JSON result payload; the CLI wraps it in a report envelope.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qstack/dsl.hpp"
#include "qstack/rep.hpp"

namespace qstack {

/// kind: "tilde", "double" or "frame". `frame_at` applies to "frame" only.
nlohmann::json build_command(const QuiverDoc& doc, const std::string& kind,
                             const std::optional<std::vector<std::string>>& frame_at = std::nullopt);

/// Dimensions from the document, overridden by `dims`; every vertex needs one.
nlohmann::json count_command(const QuiverDoc& doc, std::uint32_t p, const DimVector& dims,
                             bool orbits);

struct SolveRequest {
  DimVector dims;  // overrides the document
  std::map<std::string, double> lambda;
  double tol = 1e-10;
  std::uint64_t seed = 0;
  int max_iter = 200;
  int starts = 1;
  std::optional<std::vector<std::string>> frame;
  unsigned threads = 0;
};

nlohmann::json solve_command(const QuiverDoc& doc, const SolveRequest& req);

/// datum: {n, m, phi, field?} with field a prime, "Q" (default) or "R".
nlohmann::json check_higgs_command(const nlohmann::json& datum);

/// suite may be "all". The payload carries "ok".
nlohmann::json verify_command(const std::string& suite, std::uint64_t seed, int cases);

}  // namespace qstack
