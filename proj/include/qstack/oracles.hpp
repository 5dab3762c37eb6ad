#pragma once

// Reference computations kept deliberately naive and separate from the
// production code paths they check: entrywise products, Leibniz
// determinants, odometer enumeration without propagation, Burnside counts.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qstack/field.hpp"
#include "qstack/matrix.hpp"
#include "qstack/rep.hpp"
#include "qstack/sset.hpp"

namespace qstack::oracle {

template <Field F>
Matrix<F> product(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("oracle product: inner sizes differ");
  const F& k = a.field();
  Matrix<F> out(k, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      auto s = k.zero();
      for (std::size_t l = 0; l < a.cols(); ++l) s = k.add(s, k.mul(a(i, l), b(l, j)));
      out(i, j) = s;
    }
  }
  return out;
}

template <Field F>
bool equal(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!(a(i, j) == b(i, j))) return false;
    }
  }
  return true;
}

/// Leibniz expansion over permutations; n <= 6.
template <Field F>
typename F::Element determinant(const Matrix<F>& a) {
  const F& k = a.field();
  const std::size_t n = a.rows();
  if (n != a.cols() || n > 6) throw Error("oracle determinant: square matrices up to 6x6 only");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  auto total = k.zero();
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    auto term = k.one();
    for (std::size_t i = 0; i < n; ++i) term = k.mul(term, a(i, perm[i]));
    total = inversions % 2 ? k.sub(total, term) : k.add(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Every matrix over F_p of the given size, entries as base-p digits.
inline Matrix<PrimeField> matrix_from_code(const PrimeField& k, std::size_t rows, std::size_t cols,
                                           std::uint64_t code) {
  Matrix<PrimeField> m(k, rows, cols);
  for (std::size_t i = 0; i < rows * cols; ++i) {
    m.entries()[i] = static_cast<std::uint32_t>(code % k.characteristic());
    code /= k.characteristic();
  }
  return m;
}

inline std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

/// |GL_d(F_p)| by counting matrices with non-zero determinant.
inline std::uint64_t gl_count(std::uint32_t p, std::size_t d) {
  const PrimeField k(p);
  std::uint64_t n = 0;
  const std::uint64_t total = ipow(p, d * d);
  for (std::uint64_t c = 0; c < total; ++c) {
    if (!k.is_zero(determinant(matrix_from_code(k, d, d, c)))) ++n;
  }
  return n;
}

/// All matrix tuples of the shape, one per edge (identity edges fixed),
/// filtered by every triangle. No propagation.
template <class Visit>
void for_each_rep(std::shared_ptr<const SSet2> shape, const DimVector& dims, const PrimeField& k,
                  Visit&& visit) {
  const SSet2& s = *shape;
  Rep<PrimeField> r = Rep<PrimeField>::zero(shape, k, dims);
  std::vector<std::size_t> free;
  std::size_t entries = 0;
  for (std::size_t e = 0; e < s.edge_count(); ++e) {
    if (s.edges()[e].identity) continue;
    free.push_back(e);
    entries += r.mat(e).size();
  }
  const std::uint64_t total = ipow(k.characteristic(), entries);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t e : free) {
      auto& m = r.mat(e);
      for (auto& x : m.entries()) {
        x = static_cast<std::uint32_t>(c % k.characteristic());
        c /= k.characteristic();
      }
    }
    bool ok = true;
    for (std::size_t t = 0; t < s.triangle_count() && ok; ++t) {
      const auto& ix = s.triangle_edges(t);
      ok = equal(product(r.mat(ix.second), r.mat(ix.first)), r.mat(ix.long_edge));
    }
    if (ok) visit(r);
  }
}

inline std::uint64_t rep_count(std::shared_ptr<const SSet2> shape, const DimVector& dims,
                               std::uint32_t p) {
  std::uint64_t n = 0;
  for_each_rep(std::move(shape), dims, PrimeField(p), [&](const Rep<PrimeField>&) { ++n; });
  return n;
}

/// mu_v for a doubled quiver whose reversed edges are named "<id>*".
template <Field F>
std::map<std::string, Matrix<F>> moment(const Rep<F>& r, const std::vector<std::string>& regular) {
  const SSet2& s = r.shape();
  const F& k = r.field();
  std::map<std::string, Matrix<F>> out;
  for (const auto& v : regular) {
    const std::size_t d = r.dim(v);
    Matrix<F> mu(k, d, d);
    for (const auto& a : s.edges()) {
      if (a.identity) continue;
      auto star = s.edge_index(a.id + "*");
      if (!star) continue;
      const auto& x = r.mat(a.id);
      const auto& xs = r.mat(*star);
      if (a.tgt == v) mu = add(mu, product(x, xs));
      if (a.src == v) mu = subtract(mu, product(xs, x));
    }
    out.emplace(v, std::move(mu));
  }
  return out;
}

}  // namespace qstack::oracle
