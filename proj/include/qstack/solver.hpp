#pragma once

// Numerical zero loci of moment maps: damped Gauss-Newton
// (Levenberg-Marquardt) on the flattened residual mu(x) - lambda * Id.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qstack/moment_map.hpp"
#include "qstack/rep.hpp"

namespace qstack {

struct SolveConfig {
  std::map<std::string, double> lambda;  // level per regular vertex, default 0
  double tol = 1e-10;
  int max_iter = 200;
  std::uint64_t seed = 0;
  double damping = 1e-3;
};

struct SolveResult {
  Rep<RealField> rep;
  double residual;  // max over v of || mu_v - lambda_v Id ||_F
  int iterations;
  bool converged;
  int jacobian_rank;
  std::uint64_t seed;
};

inline constexpr std::size_t kMaxSolveVariables = 100000;

/// `dims` must cover every vertex of the doubled framed quiver. Failure to
/// converge is reported through `converged`, not by throwing.
SolveResult solve_zero_locus(const MomentExpr& m, const DimVector& dims, const SolveConfig& cfg);

SolveResult solve_zero_locus(const SSet2& quiver, const FramingFn& framing, const DimVector& dims,
                             const SolveConfig& cfg);

struct MultiStartResult {
  SolveResult best;
  std::vector<SolveResult> runs;  // in seed order
  int converged_count = 0;
};

/// Runs seeds cfg.seed, cfg.seed + 1, ..., cfg.seed + starts - 1 on up to
/// `threads` worker threads (0: QSTACK_THREADS or the hardware count). The
/// best run has the smallest residual, ties going to the smaller seed.
MultiStartResult solve_multistart(const MomentExpr& m, const DimVector& dims,
                                  const SolveConfig& cfg, int starts, unsigned threads = 0);

/// Worker count honoring QSTACK_THREADS.
unsigned default_thread_count();

/// max_v || mu_v(r) - lambda_v Id ||_F evaluated through eval_moment.
double moment_residual(const MomentExpr& m, const Rep<RealField>& r,
                       const std::map<std::string, double>& lambda);

}  // namespace qstack
