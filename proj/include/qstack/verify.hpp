#pragma once

// Seeded property suites comparing the library against the reference
// computations in oracles.hpp. Each suite reports case counts and the first
// few failures; results are deterministic for a fixed seed.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qstack/field.hpp"
#include "qstack/matrix.hpp"

namespace qstack {

struct SuiteConfig {
  std::uint64_t seed = 0;
  int cases = 0;  // 0: the suite's default
};

struct SuiteResult {
  std::string suite;
  std::int64_t cases = 0;
  std::int64_t passed = 0;
  std::int64_t required = -1;  // passes needed; -1: every case
  std::int64_t violations = 0;
  std::vector<std::string> failures;  // at most a handful
  nlohmann::json details = nlohmann::json::object();

  bool ok() const { return violations == 0 && passed >= (required < 0 ? cases : required); }
  /// A case that must pass.
  void record(bool pass, const std::string& what);
  /// A case allowed to miss, counted against `required`.
  void record_soft(bool pass, const std::string& what);
};

std::vector<std::string> suite_names();

/// Throws Error for an unknown suite name.
SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg);

nlohmann::json to_json(const SuiteResult& r);

// Individual suites, for callers that need specific instances.
SuiteResult verify_trace_composition(const SuiteConfig& cfg);
SuiteResult verify_internal_category(const SuiteConfig& cfg);
SuiteResult verify_tilde_bijection(const SuiteConfig& cfg);
SuiteResult verify_coequalizer(const SuiteConfig& cfg);
SuiteResult verify_chain_coherence(const SuiteConfig& cfg);
/// Every assignment of Delta^n over F_p with all dims in [0, max_dim]:
/// the subset-composite check agrees with the triangle constraints.
SuiteResult verify_chain_coherence_exhaustive(int n, std::size_t max_dim, std::uint32_t p);
SuiteResult verify_functoriality(const SuiteConfig& cfg);
SuiteResult verify_higgs(const SuiteConfig& cfg);
/// All pairs (n <= max_n, m = 2) over F_p plus m = 1 over F_p.
SuiteResult verify_higgs_exhaustive(std::size_t max_n, std::uint32_t p);
SuiteResult verify_moment_map(const SuiteConfig& cfg);
SuiteResult verify_nakajima(const SuiteConfig& cfg);

// Random data shared by the suites and tests.
using Rng = std::mt19937_64;

Matrix<PrimeField> random_matrix(const PrimeField& k, std::size_t rows, std::size_t cols, Rng& rng);
Matrix<RationalField> random_matrix(const RationalField& k, std::size_t rows, std::size_t cols,
                                    Rng& rng);
Matrix<RealField> random_matrix(const RealField& k, std::size_t rows, std::size_t cols, Rng& rng);

}  // namespace qstack
