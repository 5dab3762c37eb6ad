#include "qstack/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <optional>
#include <random>
#include <thread>

#include <Eigen/Dense>

namespace qstack {

namespace {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Flattened problem: the variables are the entries of every non-identity
// edge matrix; the residual stacks mu_v - lambda_v Id over regular vertices.
class Problem {
 public:
  Problem(const MomentExpr& m, const DimVector& dims, const std::map<std::string, double>& lambda)
      : base_(Rep<RealField>::zero(m.shape, RealField(), dims)) {
    const SSet2& s = *m.shape;
    offset_.assign(s.edge_count(), npos);
    for (std::size_t e = 0; e < s.edge_count(); ++e) {
      if (s.edges()[e].identity) continue;
      offset_[e] = nvars_;
      nvars_ += base_.mat(e).size();
    }
    if (nvars_ > kMaxSolveVariables) {
      throw GuardExceeded("solve: " + std::to_string(nvars_) + " variables exceed the limit of " +
                          std::to_string(kMaxSolveVariables));
    }
    for (const auto& v : m.regular) {
      Block b;
      b.dim = base_.dim(v);
      b.row = nres_;
      auto it = lambda.find(v);
      b.lambda = it == lambda.end() ? 0.0 : it->second;
      for (const auto& t : m.terms.at(v)) {
        b.terms.push_back({static_cast<double>(t.sign * t.scale), *s.edge_index(t.first),
                           *s.edge_index(t.second)});
      }
      nres_ += b.dim * b.dim;
      blocks_.push_back(std::move(b));
    }
    for (const auto& [v, level] : lambda) {
      if (std::find(m.regular.begin(), m.regular.end(), v) == m.regular.end()) {
        throw Error("solve: level given for '" + v + "', which is not a regular vertex");
      }
    }
  }

  std::size_t variables() const { return nvars_; }
  std::size_t residuals() const { return nres_; }

  void residual(const Eigen::VectorXd& x, Eigen::VectorXd& r) const {
    r.setZero(static_cast<Eigen::Index>(nres_));
    for (const auto& b : blocks_) {
      RowMatrix mu = RowMatrix::Zero(b.dim, b.dim);
      for (const auto& t : b.terms) mu += t.coeff * (edge(x, t.second) * edge(x, t.first));
      mu -= b.lambda * RowMatrix::Identity(b.dim, b.dim);
      r.segment(static_cast<Eigen::Index>(b.row), mu.size()) =
          Eigen::Map<const Eigen::VectorXd>(mu.data(), mu.size());
    }
  }

  // Residual rows for block b: (i, j) -> b.row + i * dim + j.
  void jacobian(const Eigen::VectorXd& x, Eigen::MatrixXd& jac) const {
    jac.setZero(static_cast<Eigen::Index>(nres_), static_cast<Eigen::Index>(nvars_));
    for (const auto& b : blocks_) {
      const auto d = static_cast<Eigen::Index>(b.dim);
      for (const auto& t : b.terms) {
        const RowMatrix first = edge(x, t.first);
        const RowMatrix second = edge(x, t.second);
        // d/d first(i, j): coeff * second * E_ij, nonzero in column j.
        for (Eigen::Index i = 0; i < first.rows(); ++i) {
          for (Eigen::Index j = 0; j < first.cols(); ++j) {
            const auto col = static_cast<Eigen::Index>(offset_[t.first]) + i * first.cols() + j;
            for (Eigen::Index row = 0; row < d; ++row) {
              jac(static_cast<Eigen::Index>(b.row) + row * d + j, col) += t.coeff * second(row, i);
            }
          }
        }
        // d/d second(i, j): coeff * E_ij * first, nonzero in row i.
        for (Eigen::Index i = 0; i < second.rows(); ++i) {
          for (Eigen::Index j = 0; j < second.cols(); ++j) {
            const auto col = static_cast<Eigen::Index>(offset_[t.second]) + i * second.cols() + j;
            for (Eigen::Index c = 0; c < d; ++c) {
              jac(static_cast<Eigen::Index>(b.row) + i * d + c, col) += t.coeff * first(j, c);
            }
          }
        }
      }
    }
  }

  double block_residual(const Eigen::VectorXd& r) const {
    double worst = 0.0;
    for (const auto& b : blocks_) {
      const auto n = static_cast<Eigen::Index>(b.dim * b.dim);
      worst = std::max(worst, r.segment(static_cast<Eigen::Index>(b.row), n).norm());
    }
    return worst;
  }

  Rep<RealField> to_rep(const Eigen::VectorXd& x) const {
    Rep<RealField> out = base_;
    for (std::size_t e = 0; e < offset_.size(); ++e) {
      if (offset_[e] == npos) continue;
      auto& entries = out.mat(e).entries();
      for (std::size_t k = 0; k < entries.size(); ++k) {
        entries[k] = x(static_cast<Eigen::Index>(offset_[e] + k));
      }
    }
    return out;
  }

 private:
  struct Term {
    double coeff;
    std::size_t first;
    std::size_t second;
  };
  struct Block {
    std::size_t dim = 0;
    std::size_t row = 0;
    double lambda = 0.0;
    std::vector<Term> terms;
  };

  RowMatrix edge(const Eigen::VectorXd& x, std::size_t e) const {
    const auto& m = base_.mat(e);
    if (offset_[e] == npos) {
      return Eigen::Map<const RowMatrix>(m.entries().data(), static_cast<Eigen::Index>(m.rows()),
                                         static_cast<Eigen::Index>(m.cols()));
    }
    return Eigen::Map<const RowMatrix>(x.data() + offset_[e], static_cast<Eigen::Index>(m.rows()),
                                       static_cast<Eigen::Index>(m.cols()));
  }

  Rep<RealField> base_;
  std::vector<std::size_t> offset_;
  std::vector<Block> blocks_;
  std::size_t nvars_ = 0;
  std::size_t nres_ = 0;
};

int numerical_rank(const Eigen::MatrixXd& jac) {
  if (jac.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double cutoff = 1e-8 * sv(0);
  return static_cast<int>((sv.array() > cutoff).count());
}

}  // namespace

double moment_residual(const MomentExpr& m, const Rep<RealField>& r,
                       const std::map<std::string, double>& lambda) {
  double worst = 0.0;
  for (const auto& [v, mu] : eval_moment(m, r)) {
    auto it = lambda.find(v);
    const double level = it == lambda.end() ? 0.0 : it->second;
    const auto target = scale(level, Matrix<RealField>::identity(mu.field(), mu.rows()));
    worst = std::max(worst, frobenius_distance(mu, target));
  }
  return worst;
}

SolveResult solve_zero_locus(const MomentExpr& m, const DimVector& dims, const SolveConfig& cfg) {
  if (!(cfg.tol > 0.0)) throw Error("solve: tolerance must be positive");
  if (cfg.max_iter < 1) throw Error("solve: max_iter must be at least 1");
  if (!(cfg.damping > 0.0)) throw Error("solve: damping must be positive");

  const Problem problem(m, dims, cfg.lambda);
  const auto n = static_cast<Eigen::Index>(problem.variables());

  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd x(n);
  for (Eigen::Index i = 0; i < n; ++i) x(i) = normal(rng);

  Eigen::VectorXd r;
  Eigen::VectorXd r_trial;
  Eigen::MatrixXd jac;
  problem.residual(x, r);
  double cost = r.squaredNorm();
  double mu = cfg.damping;
  int iterations = 0;
  bool jac_stale = true;
  Eigen::MatrixXd normal_matrix;
  Eigen::VectorXd gradient;

  while (iterations < cfg.max_iter && problem.block_residual(r) > cfg.tol) {
    ++iterations;
    if (jac_stale) {
      problem.jacobian(x, jac);
      normal_matrix = jac.transpose() * jac;
      gradient = jac.transpose() * r;
      jac_stale = false;
    }
    Eigen::MatrixXd damped = normal_matrix;
    damped.diagonal().array() += mu;
    const Eigen::VectorXd step = damped.ldlt().solve(-gradient);
    const Eigen::VectorXd trial = x + step;
    problem.residual(trial, r_trial);
    const double trial_cost = r_trial.squaredNorm();
    if (std::isfinite(trial_cost) && trial_cost < cost) {
      x = trial;
      r = r_trial;
      cost = trial_cost;
      mu /= 10.0;
      jac_stale = true;
    } else {
      mu *= 10.0;
      if (mu > 1e20) break;  // stagnated
    }
  }

  problem.jacobian(x, jac);
  SolveResult result{problem.to_rep(x), 0.0, iterations, false, numerical_rank(jac), cfg.seed};
  result.residual = moment_residual(m, result.rep, cfg.lambda);
  result.converged = result.residual <= cfg.tol;
  return result;
}

SolveResult solve_zero_locus(const SSet2& quiver, const FramingFn& framing, const DimVector& dims,
                             const SolveConfig& cfg) {
  return solve_zero_locus(build_moment_map(quiver, framing), dims, cfg);
}

unsigned default_thread_count() {
  unsigned n = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("QSTACK_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) n = std::min(n, static_cast<unsigned>(cap));
  }
  return n;
}

MultiStartResult solve_multistart(const MomentExpr& m, const DimVector& dims,
                                  const SolveConfig& cfg, int starts, unsigned threads) {
  if (starts < 1) throw Error("solve: starts must be at least 1");
  if (threads == 0) threads = default_thread_count();
  threads = std::min<unsigned>(threads, static_cast<unsigned>(starts));

  std::vector<std::optional<SolveResult>> slots(static_cast<std::size_t>(starts));
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (auto k = static_cast<std::size_t>(w); k < slots.size(); k += threads) {
            SolveConfig c = cfg;
            c.seed = cfg.seed + k;
            slots[k] = solve_zero_locus(m, dims, c);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  MultiStartResult out{*slots.front(), {}, 0};
  for (auto& s : slots) {
    if (s->converged) ++out.converged_count;
    if (s->residual < out.best.residual) out.best = *s;
    out.runs.push_back(std::move(*s));
  }
  return out;
}

}  // namespace qstack
