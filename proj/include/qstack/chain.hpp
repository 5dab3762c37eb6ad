#pragma once

// Simplicial functoriality on chains: representations of Delta^n (coherent
// chains) or of its 1-skeleton P^n (non-commutative chains). Vertex i of the
// shape is "i" and edge i -> j is simplex_edge_id(i, j).

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qstack/error.hpp"
#include "qstack/rep.hpp"
#include "qstack/sset.hpp"

namespace qstack {

struct ChainShape {
  int n;
  bool with_triangles;  // Delta^n rather than P^n
};

/// Recognizes standard_simplex(n) and one_skeleton(n) exactly.
std::optional<ChainShape> chain_shape(const SSet2& shape);

/// Shared, cached instances so reps built from the same n share a shape.
std::shared_ptr<const SSet2> shared_simplex(int n, bool with_triangles);

inline ChainShape require_chain(const SSet2& shape, const char* op) {
  auto cs = chain_shape(shape);
  if (!cs) throw InvalidShape(std::string(op) + ": representation is not on a standard simplex");
  return *cs;
}

/// Product of the spine edges i -> i+1 -> ... -> j; the identity when i == j.
template <Field F>
Matrix<F> spine_composite(const Rep<F>& chain, int i, int j) {
  const SSet2& s = chain.shape();
  Matrix<F> acc = Matrix<F>::identity(chain.field(), chain.dim(static_cast<std::size_t>(i)));
  for (int k = i; k < j; ++k) {
    acc = multiply(chain.mat(*s.edge_index(simplex_edge_id(k, k + 1))), acc);
  }
  return acc;
}

/// Pullback along a monotone map theta: [m] -> [n]. Edge (i, j) becomes the
/// identity when theta(i) = theta(j); a consecutive edge (i, i+1) becomes the
/// composite of the spine from theta(i) to theta(i+1); any other edge (i, j)
/// is the edge (theta(i), theta(j)).
template <Field F>
Rep<F> reindex_along(const std::vector<int>& theta, const Rep<F>& chain) {
  const ChainShape cs = require_chain(chain.shape(), "reindex");
  if (theta.empty()) throw Error("reindex: map must have a non-empty domain");
  for (std::size_t i = 0; i < theta.size(); ++i) {
    if (theta[i] < 0 || theta[i] > cs.n) throw Error("reindex: value out of range");
    if (i > 0 && theta[i] < theta[i - 1]) throw Error("reindex: map is not monotone");
  }
  const int m = static_cast<int>(theta.size()) - 1;
  auto shape = shared_simplex(m, cs.with_triangles);
  const SSet2& in = chain.shape();

  std::vector<std::size_t> dims;
  for (int i = 0; i <= m; ++i) dims.push_back(chain.dim(static_cast<std::size_t>(theta[i])));
  std::vector<Matrix<F>> mats;
  for (const auto& e : shape->edges()) {
    const int i = std::stoi(e.src);
    const int j = std::stoi(e.tgt);
    const int a = theta[i];
    const int b = theta[j];
    if (a == b) {
      mats.push_back(Matrix<F>::identity(chain.field(), dims[i]));
    } else if (j == i + 1) {
      mats.push_back(spine_composite(chain, a, b));
    } else {
      mats.push_back(chain.mat(*in.edge_index(simplex_edge_id(a, b))));
    }
  }
  return Rep<F>(std::move(shape), chain.field(), std::move(dims), std::move(mats));
}

/// M_iota for a strictly monotone injection iota: [m] -> [n].
template <Field F>
Rep<F> restrict_along(const std::vector<int>& iota, const Rep<F>& chain) {
  for (std::size_t i = 1; i < iota.size(); ++i) {
    if (iota[i] <= iota[i - 1]) throw Error("restrict_along: map is not strictly monotone");
  }
  return reindex_along(iota, chain);
}

/// M_sigma for a monotone surjection sigma: [q] -> [n].
template <Field F>
Rep<F> degenerate_along(const std::vector<int>& sigma, const Rep<F>& chain) {
  const ChainShape cs = require_chain(chain.shape(), "degenerate_along");
  if (sigma.empty() || sigma.front() != 0 || sigma.back() != cs.n) {
    throw Error("degenerate_along: map is not surjective");
  }
  for (std::size_t i = 1; i < sigma.size(); ++i) {
    if (sigma[i] < sigma[i - 1]) throw Error("degenerate_along: map is not monotone");
    if (sigma[i] > sigma[i - 1] + 1) throw Error("degenerate_along: map is not surjective");
  }
  return reindex_along(sigma, chain);
}

/// True iff for every subset S = {k0 < ... < km} of [n] with m >= 1 the
/// iterated composite along S equals the direct edge (k0, km).
template <Field F>
bool check_chain_coherence(const Rep<F>& r, double tol) {
  const ChainShape cs = require_chain(r.shape(), "check_chain_coherence");
  if (!cs.with_triangles) throw InvalidShape("check_chain_coherence: expects a Delta^n representation");
  if (cs.n > 8) throw Error("check_chain_coherence: n must be at most 8");
  const int n = cs.n;
  const SSet2& s = r.shape();
  std::vector<std::vector<std::size_t>> edge(n + 1, std::vector<std::size_t>(n + 1, npos));
  for (int i = 0; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) edge[i][j] = *s.edge_index(simplex_edge_id(i, j));
  }
  std::vector<int> members;
  for (unsigned mask = 0; mask < (1U << (n + 1)); ++mask) {
    members.clear();
    for (int i = 0; i <= n; ++i) {
      if (mask & (1U << i)) members.push_back(i);
    }
    if (members.size() < 3) continue;  // |S| = 2 is the direct edge itself
    Matrix<F> acc = r.mat(edge[members[0]][members[1]]);
    for (std::size_t k = 1; k + 1 < members.size(); ++k) {
      acc = multiply(r.mat(edge[members[k]][members[k + 1]]), acc);
    }
    if (!agrees(acc, r.mat(edge[members.front()][members.back()]), tol)) return false;
  }
  return true;
}

template <Field F>
bool check_chain_coherence(const Rep<F>& r) {
  return check_chain_coherence(r, default_tolerance(r.field()));
}

}  // namespace qstack
