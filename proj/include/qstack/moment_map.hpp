#pragma once

// Moment maps on doubled framed quivers, assembled from the arrow-level
// primitives (trace composition, addition, scaling).
//
// For a regular vertex v:
//   mu_v = sum_{a : tgt(a) = v} x_a x_{a*} - sum_{a : src(a) = v} x_{a*} x_a
// with a ranging over the edges of the framed quiver and a* its reversal.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qstack/action.hpp"
#include "qstack/quiver_ops.hpp"
#include "qstack/rep.hpp"
#include "qstack/triple.hpp"

namespace qstack {

enum class SignConvention {
  in_minus_out,  // the convention above
  out_minus_in,  // every term negated
};

struct MomentMapOptions {
  /// Vertices receiving a new framing node. Unset: every vertex when the
  /// input has no framing vertices, none otherwise.
  std::optional<std::vector<std::string>> frame_vertices;
  SignConvention sign = SignConvention::in_minus_out;
};

/// sign * scale * M(second) M(first); the path first -> second starts and
/// ends at the vertex.
struct MomentTerm {
  int sign;
  std::string first;
  std::string second;
  std::int64_t scale = 1;

  friend bool operator==(const MomentTerm&, const MomentTerm&) = default;
};

struct MomentExpr {
  std::shared_ptr<const SSet2> shape;  // the doubled framed quiver
  FramingFn framing;                   // on `shape`
  std::map<std::string, std::string> star;
  std::vector<std::string> regular;  // vertices carrying a component, shape order
  std::map<std::string, std::vector<MomentTerm>> terms;
};

/// Requires a triangle-free quiver; `framing` marks vertices of `quiver` that
/// are already framing nodes.
MomentExpr build_moment_map(const SSet2& quiver, const FramingFn& framing,
                            const MomentMapOptions& options = {});

template <Field F>
void require_moment_shape(const MomentExpr& m, const Rep<F>& r) {
  if (!(r.shape() == *m.shape)) {
    throw InvalidShape("representation is not on the doubled framed quiver of the moment map");
  }
}

/// mu_v for every regular v, evaluated through compose_via_trace, add and scale.
template <Field F>
std::map<std::string, Matrix<F>> eval_moment(const MomentExpr& m, const Rep<F>& r) {
  require_moment_shape(m, r);
  const F& k = r.field();
  std::map<std::string, Matrix<F>> out;
  for (const auto& v : m.regular) {
    const std::size_t d = r.dim(v);
    Triple<F> acc{d, d, Matrix<F>(k, d, d)};
    for (const auto& term : m.terms.at(v)) {
      const Triple<F> path =
          compose_via_trace(Triple<F>::of(r.mat(term.second)), Triple<F>::of(r.mat(term.first)));
      acc = add(acc, scale(Scalar<F>{k, k.from_int(term.sign * term.scale)}, path));
    }
    out.emplace(v, std::move(acc.mat));
  }
  return out;
}

/// max_v || mu_v(g . r) - g_v mu_v(r) g_v^-1 ||_F (a mismatch count over exact rings).
template <Field F>
double equivariance_check(const MomentExpr& m, const Rep<F>& r, const GaugeElement<F>& g) {
  const auto before = eval_moment(m, r);
  const auto after = eval_moment(m, act(g, r, m.framing));
  double worst = 0.0;
  for (const auto& v : m.regular) {
    const auto& gv = g.mats.at(v);
    auto inv = inverse(gv);
    if (!inv) throw SingularMatrix("gauge matrix at '" + v + "' is singular");
    const auto expected = multiply(multiply(gv, before.at(v)), *inv);
    worst = std::max(worst, frobenius_distance(after.at(v), expected));
  }
  return worst;
}

/// Sum over regular v of tr(mu_v).
template <Field F>
typename F::Element moment_trace_sum(const MomentExpr& m, const Rep<F>& r) {
  const F& k = r.field();
  auto total = k.zero();
  for (const auto& [v, mu] : eval_moment(m, r)) {
    for (std::size_t i = 0; i < mu.rows(); ++i) total = k.add(total, mu(i, i));
  }
  return total;
}

}  // namespace qstack
