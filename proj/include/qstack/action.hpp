#pragma once

// Gauge action of prod_v GL(d_v) over the regular vertices, the encoding of
// (g, rho, psi = g . rho) as a representation of the tilde shape, and exact
// point counts for the action groupoid over F_p.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qstack/matrix.hpp"
#include "qstack/quiver_ops.hpp"
#include "qstack/rep.hpp"

namespace qstack {

/// One invertible matrix per regular vertex; framing vertices are absent
/// and act by the identity.
template <Field F>
struct GaugeElement {
  std::map<std::string, Matrix<F>> mats;

  static GaugeElement identity(const F& field, const DimVector& dims, const SSet2& shape,
                               const FramingFn& framing) {
    GaugeElement g;
    for (const auto& v : framing.regular_vertices(shape)) {
      g.mats.emplace(v, Matrix<F>::identity(field, dims.at(v)));
    }
    return g;
  }

  /// Vertexwise product (this * other).
  GaugeElement operator*(const GaugeElement& other) const {
    GaugeElement out;
    for (const auto& [v, m] : mats) out.mats.emplace(v, multiply(m, other.mats.at(v)));
    return out;
  }
};

namespace detail {

template <Field F>
std::vector<std::optional<std::pair<Matrix<F>, Matrix<F>>>> gauge_at_vertices(
    const GaugeElement<F>& g, const Rep<F>& r, const FramingFn& framing) {
  const SSet2& s = r.shape();
  std::vector<std::optional<std::pair<Matrix<F>, Matrix<F>>>> out(s.vertex_count());
  for (std::size_t v = 0; v < s.vertex_count(); ++v) {
    const std::string& id = s.vertices()[v];
    if (framing.is_framing(id)) continue;
    auto it = g.mats.find(id);
    if (it == g.mats.end()) throw DimensionMismatch("gauge element has no matrix at '" + id + "'");
    if (it->second.rows() != r.dim(v) || it->second.cols() != r.dim(v)) {
      throw DimensionMismatch("gauge matrix at '" + id + "' has the wrong size");
    }
    auto inv = inverse(it->second);
    if (!inv) throw SingularMatrix("gauge matrix at '" + id + "' is singular");
    out[v].emplace(it->second, std::move(*inv));
  }
  return out;
}

}  // namespace detail

/// x_e -> g_tgt x_e g_src^-1, with g = identity at framing vertices.
template <Field F>
Rep<F> act(const GaugeElement<F>& g, const Rep<F>& r, const FramingFn& framing) {
  const SSet2& s = r.shape();
  const auto gv = detail::gauge_at_vertices(g, r, framing);
  std::vector<Matrix<F>> mats;
  mats.reserve(s.edge_count());
  for (std::size_t e = 0; e < s.edge_count(); ++e) {
    Matrix<F> m = r.mat(e);
    if (const auto& t = gv[s.tgt_index(e)]) m = multiply(t->first, m);
    if (const auto& src = gv[s.src_index(e)]) m = multiply(m, src->second);
    mats.push_back(std::move(m));
  }
  return Rep<F>(r.shape_ptr(), r.field(), r.dims(), std::move(mats));
}

/// Representation of the tilde shape carrying (g, rho, g . rho).
template <Field F>
Rep<F> tilde_encode(const GaugeElement<F>& g, const Rep<F>& rho, const TildeQuiver& tq,
                    const FramingFn& framing) {
  const Rep<F> psi = act(g, rho, framing);
  auto shape = std::make_shared<const SSet2>(tq.shape);
  DimVector dims = rho.dim_map();
  for (const auto& [v, copy] : tq.vertex_copy) dims[copy] = dims.at(v);
  Rep<F> out = Rep<F>::zero(shape, rho.field(), dims);
  const SSet2& in = rho.shape();
  for (std::size_t e = 0; e < in.edge_count(); ++e) {
    const std::string& id = in.edges()[e].id;
    out.set(id, rho.mat(e));
    if (auto it = tq.edge_copy.find(id); it != tq.edge_copy.end()) out.set(it->second, psi.mat(e));
  }
  for (const auto& [v, edge] : tq.iso) {
    out.set(edge, g.mats.at(v));
    auto inv = inverse(g.mats.at(v));
    if (!inv) throw SingularMatrix("gauge matrix at '" + v + "' is singular");
    out.set(tq.iso_inverse.at(v), std::move(*inv));
  }
  for (const auto& [e, edge] : tq.composite) {
    const std::string& tgt = in.edges()[*in.edge_index(e)].tgt;
    out.set(edge, multiply(g.mats.at(tgt), rho.mat(e)));
  }
  return out;
}

template <Field F>
struct TildeTriple {
  GaugeElement<F> g;
  Rep<F> rho;
  Rep<F> psi;
};

/// Reads (g, rho, psi) back off a representation of the tilde shape.
template <Field F>
TildeTriple<F> tilde_decode(const Rep<F>& encoded, std::shared_ptr<const SSet2> quiver,
                            const TildeQuiver& tq) {
  if (!(encoded.shape() == tq.shape)) throw InvalidShape("tilde_decode: shape mismatch");
  DimVector dims;
  for (const auto& v : quiver->vertices()) dims[v] = encoded.dim(v);
  Rep<F> rho = Rep<F>::zero(quiver, encoded.field(), dims);
  Rep<F> psi = rho;
  for (const auto& e : quiver->edges()) {
    rho.set(e.id, encoded.mat(e.id));
    auto it = tq.edge_copy.find(e.id);
    psi.set(e.id, encoded.mat(it == tq.edge_copy.end() ? e.id : it->second));
  }
  GaugeElement<F> g;
  for (const auto& [v, edge] : tq.iso) g.mats.emplace(v, encoded.mat(edge));
  return TildeTriple<F>{std::move(g), std::move(rho), std::move(psi)};
}

/// |GL_d(F_p)| = prod_{i<d} (p^d - p^i).
mpz_class gl_order(std::uint32_t p, std::size_t d);

/// prod over regular vertices of |GL_{d_v}(F_p)|.
mpz_class gauge_order(const SSet2& shape, const DimVector& dims, const FramingFn& framing,
                      std::uint32_t p);

struct CountReport {
  std::string shape_name;
  DimVector dims;
  std::uint32_t p = 0;
  mpz_class rep_count;
  mpz_class gauge_order;
  mpq_class stacky_count;
  std::optional<mpz_class> orbit_count;
};

CountReport count_points(std::shared_ptr<const SSet2> shape, const DimVector& dims,
                         std::uint32_t p, const FramingFn& framing,
                         const std::string& shape_name = "");

struct Orbit {
  Rep<PrimeField> representative;
  mpz_class size;
  mpz_class stabilizer_order;
};

struct OrbitCensus {
  std::vector<Orbit> orbits;
  mpz_class rep_count;
  mpz_class group_order;
  mpq_class stacky_sum;  // sum over orbits of 1 / |Stab|
};

/// Orbits of the gauge action by exhaustive enumeration; requires
/// |Rep| * |G| <= 2^24.
OrbitCensus orbit_census(std::shared_ptr<const SSet2> shape, const DimVector& dims,
                         std::uint32_t p, const FramingFn& framing);

/// Every gauge element over F_p (cartesian product of GL groups).
std::vector<GaugeElement<PrimeField>> all_gauge_elements(const SSet2& shape, const DimVector& dims,
                                                         const FramingFn& framing,
                                                         const PrimeField& field);

}  // namespace qstack
