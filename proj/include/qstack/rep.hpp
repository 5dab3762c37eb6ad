#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qstack/error.hpp"
#include "qstack/matrix.hpp"
#include "qstack/sset.hpp"

namespace qstack {

using DimVector = std::map<std::string, std::size_t>;

/// A representation of a shape: a vector space dimension per vertex and a
/// matrix per edge, dims(tgt) x dims(src). The data is not required to
/// satisfy the triangle constraints; validate_rep() reports violations.
template <Field F>
class Rep {
 public:
  Rep(std::shared_ptr<const SSet2> shape, F field, std::vector<std::size_t> dims,
      std::vector<Matrix<F>> mats)
      : shape_(std::move(shape)), field_(std::move(field)), dims_(std::move(dims)),
        mats_(std::move(mats)) {
    if (dims_.size() != shape_->vertex_count() || mats_.size() != shape_->edge_count()) {
      throw DimensionMismatch("representation data does not match its shape");
    }
  }

  /// Zero matrices on ordinary edges, identities on identity edges.
  static Rep zero(std::shared_ptr<const SSet2> shape, const F& field, const DimVector& dims) {
    std::vector<std::size_t> d;
    d.reserve(shape->vertex_count());
    for (const auto& v : shape->vertices()) {
      auto it = dims.find(v);
      if (it == dims.end()) throw DimensionMismatch("no dimension given for vertex '" + v + "'");
      d.push_back(it->second);
    }
    std::vector<Matrix<F>> mats;
    mats.reserve(shape->edge_count());
    for (std::size_t e = 0; e < shape->edge_count(); ++e) {
      const std::size_t rows = d[shape->tgt_index(e)];
      const std::size_t cols = d[shape->src_index(e)];
      mats.push_back(shape->edges()[e].identity ? Matrix<F>::identity(field, rows)
                                                : Matrix<F>(field, rows, cols));
    }
    return Rep(std::move(shape), field, std::move(d), std::move(mats));
  }

  const SSet2& shape() const noexcept { return *shape_; }
  const std::shared_ptr<const SSet2>& shape_ptr() const noexcept { return shape_; }
  const F& field() const noexcept { return field_; }

  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::size_t dim(std::size_t vertex) const { return dims_[vertex]; }
  std::size_t dim(const std::string& vertex) const { return dims_[vertex_ix(vertex)]; }
  DimVector dim_map() const {
    DimVector out;
    for (std::size_t i = 0; i < dims_.size(); ++i) out[shape_->vertices()[i]] = dims_[i];
    return out;
  }

  const std::vector<Matrix<F>>& mats() const noexcept { return mats_; }
  const Matrix<F>& mat(std::size_t edge) const { return mats_[edge]; }
  const Matrix<F>& mat(const std::string& edge) const { return mats_[edge_ix(edge)]; }
  Matrix<F>& mat(std::size_t edge) { return mats_[edge]; }
  Matrix<F>& mat(const std::string& edge) { return mats_[edge_ix(edge)]; }

  /// Replaces an edge matrix, checking its shape.
  void set(const std::string& edge, Matrix<F> m) {
    const std::size_t e = edge_ix(edge);
    const std::size_t rows = dims_[shape_->tgt_index(e)];
    const std::size_t cols = dims_[shape_->src_index(e)];
    if (m.rows() != rows || m.cols() != cols) {
      throw DimensionMismatch("matrix for edge '" + edge + "' must be " + std::to_string(rows) +
                              "x" + std::to_string(cols));
    }
    require_same_ring(field_, m.field());
    mats_[e] = std::move(m);
  }

  friend bool operator==(const Rep& a, const Rep& b) {
    return *a.shape_ == *b.shape_ && a.dims_ == b.dims_ && a.mats_ == b.mats_;
  }

 private:
  std::size_t vertex_ix(const std::string& v) const {
    auto ix = shape_->vertex_index(v);
    if (!ix) throw InvalidShape("unknown vertex '" + v + "'");
    return *ix;
  }
  std::size_t edge_ix(const std::string& e) const {
    auto ix = shape_->edge_index(e);
    if (!ix) throw InvalidShape("unknown edge '" + e + "'");
    return *ix;
  }

  std::shared_ptr<const SSet2> shape_;
  F field_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix<F>> mats_;
};

template <Field F>
double default_tolerance(const F&) {
  if constexpr (F::exact) {
    return 0.0;
  } else {
    return RealField::kDefaultTolerance;
  }
}

/// Residual of one triangle: Frobenius distance between M(second) M(first)
/// and M(long). Exact rings report 0 or a positive mismatch count.
template <Field F>
double triangle_residual(const Rep<F>& r, std::size_t t) {
  const auto& ix = r.shape().triangle_edges(t);
  return frobenius_distance(multiply(r.mat(ix.second), r.mat(ix.first)), r.mat(ix.long_edge));
}

/// Empty iff every matrix has the right shape, identity edges carry
/// identities, and every triangle commutes (exactly, or to within `tol` in
/// Frobenius norm over doubles).
template <Field F>
std::vector<std::string> validate_rep(const Rep<F>& r, double tol) {
  std::vector<std::string> out;
  const SSet2& s = r.shape();
  for (const auto& d : validate(s)) out.push_back("shape: " + d);
  if (!out.empty()) return out;
  bool shapes_ok = true;
  for (std::size_t e = 0; e < s.edge_count(); ++e) {
    const auto& m = r.mat(e);
    const std::size_t rows = r.dim(s.tgt_index(e));
    const std::size_t cols = r.dim(s.src_index(e));
    if (m.rows() != rows || m.cols() != cols) {
      out.push_back("edge '" + s.edges()[e].id + "' carries a " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()) + " matrix, expected " + std::to_string(rows) + "x" +
                    std::to_string(cols));
      shapes_ok = false;
      continue;
    }
    if (s.edges()[e].identity && !agrees(m, Matrix<F>::identity(r.field(), rows), tol)) {
      out.push_back("identity edge '" + s.edges()[e].id + "' does not carry the identity");
    }
  }
  if (!shapes_ok) return out;
  for (std::size_t t = 0; t < s.triangle_count(); ++t) {
    const auto& ix = s.triangle_edges(t);
    if (!agrees(multiply(r.mat(ix.second), r.mat(ix.first)), r.mat(ix.long_edge), tol)) {
      out.push_back("triangle '" + s.triangles()[t].id + "' does not commute (residual " +
                    std::to_string(triangle_residual(r, t)) + ")");
    }
  }
  return out;
}

template <Field F>
std::vector<std::string> validate_rep(const Rep<F>& r) {
  return validate_rep(r, default_tolerance(r.field()));
}

/// Triangle constraints only, without building diagnostics. Assumes matrix
/// shapes are already consistent.
template <Field F>
bool triangles_commute(const Rep<F>& r, double tol) {
  const SSet2& s = r.shape();
  for (std::size_t t = 0; t < s.triangle_count(); ++t) {
    const auto& ix = s.triangle_edges(t);
    if (!agrees(multiply(r.mat(ix.second), r.mat(ix.first)), r.mat(ix.long_edge), tol)) {
      return false;
    }
  }
  return true;
}

}  // namespace qstack
