#pragma once

// Points of the arrow moduli over a field: triples (source dim, target dim,
// matrix), with the internal-category maps s, t, e, c and the additive and
// monoidal operations used to assemble moment maps and Higgs diagrams.

#include <cstddef>
#include <string>
#include <vector>

#include "qstack/error.hpp"
#include "qstack/field.hpp"
#include "qstack/matrix.hpp"

namespace qstack {

template <Field F>
struct Triple {
  std::size_t src_dim;
  std::size_t tgt_dim;
  Matrix<F> mat;

  static Triple of(Matrix<F> m) {
    const std::size_t s = m.cols();
    const std::size_t t = m.rows();
    return Triple{s, t, std::move(m)};
  }

  friend bool operator==(const Triple&, const Triple&) = default;
};

template <Field F>
void require_well_formed(const Triple<F>& t) {
  if (t.mat.rows() != t.tgt_dim || t.mat.cols() != t.src_dim) {
    throw DimensionMismatch("triple matrix is " + std::to_string(t.mat.rows()) + "x" +
                            std::to_string(t.mat.cols()) + " but dims are " +
                            std::to_string(t.src_dim) + " -> " + std::to_string(t.tgt_dim));
  }
}

/// Composite g . f computed by forming f (x) g in U* (x) V (x) V* (x) W and
/// contracting the middle V (x) V* pair with the trace pairing.
template <Field F>
Triple<F> compose_via_trace(const Triple<F>& g, const Triple<F>& f) {
  require_well_formed(f);
  require_well_formed(g);
  require_same_ring(f.mat.field(), g.mat.field());
  if (f.tgt_dim != g.src_dim) {
    throw DimensionMismatch("compose: target " + std::to_string(f.tgt_dim) +
                            " does not match source " + std::to_string(g.src_dim));
  }
  const F& k = f.mat.field();
  const std::size_t u = f.src_dim;
  const std::size_t v = f.tgt_dim;
  const std::size_t w = g.tgt_dim;

  // tensor[a][b][c][d] = f(b, a) * g(d, c), a in U, b in V, c in V, d in W.
  std::vector<typename F::Element> tensor(u * v * v * w, k.zero());
  auto at = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) -> std::size_t {
    return ((a * v + b) * v + c) * w + d;
  };
  for (std::size_t a = 0; a < u; ++a) {
    for (std::size_t b = 0; b < v; ++b) {
      for (std::size_t c = 0; c < v; ++c) {
        for (std::size_t d = 0; d < w; ++d) tensor[at(a, b, c, d)] = k.mul(f.mat(b, a), g.mat(d, c));
      }
    }
  }

  Matrix<F> out(k, w, u);
  for (std::size_t a = 0; a < u; ++a) {
    for (std::size_t d = 0; d < w; ++d) {
      auto acc = k.zero();
      for (std::size_t b = 0; b < v; ++b) acc = k.add(acc, tensor[at(a, b, b, d)]);
      out(d, a) = acc;
    }
  }
  return Triple<F>{u, w, std::move(out)};
}

template <Field F>
std::size_t triple_s(const Triple<F>& t) {
  return t.src_dim;
}

template <Field F>
std::size_t triple_t(const Triple<F>& t) {
  return t.tgt_dim;
}

template <Field F>
Triple<F> triple_e(const F& field, std::size_t dim) {
  return Triple<F>{dim, dim, Matrix<F>::identity(field, dim)};
}

/// The composition map c of the internal category.
template <Field F>
Triple<F> triple_c(const Triple<F>& g, const Triple<F>& f) {
  return compose_via_trace(g, f);
}

template <Field F>
Triple<F> oplus1(const Triple<F>& a, const Triple<F>& b) {
  require_well_formed(a);
  require_well_formed(b);
  return Triple<F>{a.src_dim + b.src_dim, a.tgt_dim + b.tgt_dim, direct_sum(a.mat, b.mat)};
}

template <Field F>
Triple<F> scale(const Scalar<F>& lambda, const Triple<F>& t) {
  require_same_ring(lambda.field, t.mat.field());
  return Triple<F>{t.src_dim, t.tgt_dim, scale(lambda.value, t.mat)};
}

template <Field F>
Triple<F> add(const Triple<F>& a, const Triple<F>& b) {
  if (a.src_dim != b.src_dim || a.tgt_dim != b.tgt_dim) {
    throw DimensionMismatch("add: triples have different source or target dimension");
  }
  return Triple<F>{a.src_dim, a.tgt_dim, add(a.mat, b.mat)};
}

/// Kronecker product on morphisms; the second factor's index runs fastest.
template <Field F>
Triple<F> tensor1(const Triple<F>& a, const Triple<F>& b) {
  require_well_formed(a);
  require_well_formed(b);
  return Triple<F>{a.src_dim * b.src_dim, a.tgt_dim * b.tgt_dim, kronecker(a.mat, b.mat)};
}

inline std::size_t tensor0(std::size_t m, std::size_t n) { return m * n; }

}  // namespace qstack
