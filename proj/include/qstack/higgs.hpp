#pragma once

// K-twisted Higgs data over a point, K = k^m with basis e_1..e_m.
//
// V (x) K is flattened with the K index fastest, so phi : V -> V (x) K is the
// (n m) x n matrix whose row i*m + k is row i of phi_k. Lambda^2 K has basis
// e_i ^ e_j (i < j) in lexicographic order, and the wedge sends
// e_i (x) e_j to e_i ^ e_j for i < j, to -(e_j ^ e_i) for i > j, to 0 for i = j.

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "qstack/error.hpp"
#include "qstack/matrix.hpp"
#include "qstack/quiver_ops.hpp"
#include "qstack/rep.hpp"
#include "qstack/triple.hpp"

namespace qstack {

template <Field F>
struct HiggsDatum {
  std::size_t n;
  std::size_t m;
  std::vector<Matrix<F>> phi;  // m matrices, n x n

  void require_well_formed() const {
    if (phi.size() != m) throw DimensionMismatch("Higgs field must have m components");
    for (const auto& p : phi) {
      if (p.rows() != n || p.cols() != n) {
        throw DimensionMismatch("Higgs field components must be n x n");
      }
    }
  }
};

template <Field F>
struct HiggsMorphismDatum {
  HiggsDatum<F> source;
  HiggsDatum<F> target;
  Matrix<F> f;  // target.n x source.n
};

inline std::size_t wedge_rank(std::size_t m) { return m * (m - (m == 0 ? 0 : 1)) / 2; }

/// phi as a single map V -> V (x) K.
template <Field F>
Matrix<F> stacked_higgs_field(const F& field, const HiggsDatum<F>& h) {
  Matrix<F> out(field, h.n * h.m, h.n);
  for (std::size_t i = 0; i < h.n; ++i) {
    for (std::size_t k = 0; k < h.m; ++k) {
      for (std::size_t j = 0; j < h.n; ++j) out(i * h.m + k, j) = h.phi[k](i, j);
    }
  }
  return out;
}

/// The wedge K (x) K -> Lambda^2 K in the fixed bases.
template <Field F>
Matrix<F> wedge_matrix(const F& field, std::size_t m) {
  Matrix<F> out(field, wedge_rank(m), m * m);
  std::size_t row = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j, ++row) {
      out(row, i * m + j) = field.one();
      out(row, j * m + i) = field.neg(field.one());
    }
  }
  return out;
}

/// The diagram of shape P: dims (n, nm, nm^2, n C(m,2), 0) at (a, b, c, d, b'),
/// e_ab = phi, e_bc = phi (x) id_K, e_cd = id_E (x) wedge, zero maps through b'.
/// The witness edge e_ac carries e_bc e_ab and e_ad carries the composite
/// through b' (zero), so the diagram validates iff h is integrable.
template <Field F>
Rep<F> higgs_to_diagram(const F& field, const HiggsDatum<F>& h) {
  h.require_well_formed();
  static const auto shape = std::make_shared<const SSet2>(higgs_shape().shape);
  const std::size_t n = h.n;
  const std::size_t m = h.m;
  Rep<F> r = Rep<F>::zero(shape, field,
                          {{"a", n}, {"b", n * m}, {"c", n * m * m}, {"d", n * wedge_rank(m)},
                           {"b'", 0}});
  const auto e_ab = stacked_higgs_field(field, h);
  const auto e_bc = tensor1(Triple<F>::of(e_ab), triple_e(field, m)).mat;
  const auto e_cd =
      tensor1(triple_e(field, n), Triple<F>::of(wedge_matrix(field, m))).mat;
  r.set("e_ac", multiply(e_bc, e_ab));
  r.set("e_ab", e_ab);
  r.set("e_bc", e_bc);
  r.set("e_cd", e_cd);
  r.set("e_ad", multiply(r.mat("e_b'd"), r.mat("e_ab'")));
  return r;
}

/// [phi_i, phi_j] = 0 for all i < j.
template <Field F>
bool integrability_check(const HiggsDatum<F>& h, double tol) {
  h.require_well_formed();
  for (std::size_t i = 0; i < h.m; ++i) {
    for (std::size_t j = i + 1; j < h.m; ++j) {
      if (!agrees(multiply(h.phi[i], h.phi[j]), multiply(h.phi[j], h.phi[i]), tol)) return false;
    }
  }
  return true;
}

template <Field F>
bool integrability_check(const HiggsDatum<F>& h) {
  if (h.phi.empty()) return true;
  return integrability_check(h, default_tolerance(h.phi.front().field()));
}

/// f phi_i = psi_i f for every i, the componentwise form of
/// (f (x) id_K) phi = psi f.
template <Field F>
bool higgs_morphism_check(const HiggsMorphismDatum<F>& d, double tol) {
  d.source.require_well_formed();
  d.target.require_well_formed();
  if (d.source.m != d.target.m) throw DimensionMismatch("Higgs morphism: twist ranks differ");
  if (d.f.rows() != d.target.n || d.f.cols() != d.source.n) {
    throw DimensionMismatch("Higgs morphism: matrix has the wrong shape");
  }
  for (std::size_t i = 0; i < d.source.m; ++i) {
    if (!agrees(multiply(d.f, d.source.phi[i]), multiply(d.target.phi[i], d.f), tol)) return false;
  }
  return true;
}

template <Field F>
bool higgs_morphism_check(const HiggsMorphismDatum<F>& d) {
  return higgs_morphism_check(d, default_tolerance(d.f.field()));
}

template <Field F>
HiggsMorphismDatum<F> higgs_identity(const F& field, const HiggsDatum<F>& h) {
  return {h, h, Matrix<F>::identity(field, h.n)};
}

template <Field F>
const HiggsDatum<F>& higgs_source(const HiggsMorphismDatum<F>& d) {
  return d.source;
}

template <Field F>
const HiggsDatum<F>& higgs_target(const HiggsMorphismDatum<F>& d) {
  return d.target;
}

/// g . f; requires target(f) = source(g).
template <Field F>
HiggsMorphismDatum<F> compose_higgs_morphisms(const HiggsMorphismDatum<F>& g,
                                              const HiggsMorphismDatum<F>& f) {
  if (f.target.n != g.source.n || f.target.m != g.source.m || f.target.phi != g.source.phi) {
    throw DimensionMismatch("Higgs morphisms are not composable");
  }
  return {f.source, g.target, triple_c(Triple<F>::of(g.f), Triple<F>::of(f.f)).mat};
}

}  // namespace qstack
