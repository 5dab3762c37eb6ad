#pragma once

// JSON forms of matrices, representations and reports. Matrices are arrays
// of rows: F_p entries as integers in [0, p), rationals as "num/den"
// strings, reals as numbers. Big integers are decimal strings.

#include <memory>
#include <string>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "qstack/action.hpp"
#include "qstack/error.hpp"
#include "qstack/field.hpp"
#include "qstack/higgs.hpp"
#include "qstack/matrix.hpp"
#include "qstack/rep.hpp"
#include "qstack/solver.hpp"

namespace qstack {

using nlohmann::json;

json element_to_json(const PrimeField& k, PrimeField::Element a);
json element_to_json(const RationalField& k, const RationalField::Element& a);
json element_to_json(const RealField& k, RealField::Element a);

/// Integers are reduced mod p.
PrimeField::Element element_from_json(const PrimeField& k, const json& j);
/// Accepts integers and "num" / "num/den" strings.
RationalField::Element element_from_json(const RationalField& k, const json& j);
RealField::Element element_from_json(const RealField& k, const json& j);

template <Field F>
json to_json(const Matrix<F>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(element_to_json(m.field(), m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// `rows` and `cols` are required because an empty array does not fix a shape.
template <Field F>
Matrix<F> matrix_from_json(const F& field, const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) {
    throw DimensionMismatch("matrix must have " + std::to_string(rows) + " rows");
  }
  Matrix<F> m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) {
      throw DimensionMismatch("matrix row " + std::to_string(i) + " must have " +
                              std::to_string(cols) + " entries");
    }
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = element_from_json(field, j[i][c]);
  }
  return m;
}

/// Shape of a square matrix given as nested arrays.
std::size_t square_size(const json& j);

template <Field F>
json to_json(const Rep<F>& r, const std::string& shape_ref) {
  json dims = json::object();
  json mats = json::object();
  const SSet2& s = r.shape();
  for (std::size_t v = 0; v < s.vertex_count(); ++v) dims[s.vertices()[v]] = r.dim(v);
  for (std::size_t e = 0; e < s.edge_count(); ++e) mats[s.edges()[e].id] = to_json(r.mat(e));
  return {{"shape_ref", shape_ref}, {"field", r.field().name()}, {"dims", dims}, {"mats", mats}};
}

template <Field F>
Rep<F> rep_from_json(const json& j, std::shared_ptr<const SSet2> shape, const F& field) {
  DimVector dims;
  for (const auto& v : shape->vertices()) dims[v] = j.at("dims").at(v).get<std::size_t>();
  Rep<F> r = Rep<F>::zero(shape, field, dims);
  for (std::size_t e = 0; e < shape->edge_count(); ++e) {
    const std::string& id = shape->edges()[e].id;
    const std::size_t rows = r.dim(shape->tgt_index(e));
    const std::size_t cols = r.dim(shape->src_index(e));
    r.set(id, matrix_from_json(field, j.at("mats").at(id), rows, cols));
  }
  return r;
}

inline std::string big_to_string(const mpz_class& z) { return z.get_str(); }
inline std::string big_to_string(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

json to_json(const CountReport& r);
json to_json(const OrbitCensus& c, const std::string& shape_ref);
json to_json(const SolveResult& r, const std::string& shape_ref);

template <Field F>
json to_json(const HiggsDatum<F>& h) {
  json phi = json::array();
  for (const auto& p : h.phi) phi.push_back(to_json(p));
  return {{"n", h.n}, {"m", h.m}, {"phi", phi}};
}

template <Field F>
HiggsDatum<F> higgs_from_json(const F& field, const json& j) {
  HiggsDatum<F> h{j.at("n").get<std::size_t>(), j.at("m").get<std::size_t>(), {}};
  const json& phi = j.at("phi");
  if (!phi.is_array() || phi.size() != h.m) {
    throw DimensionMismatch("Higgs datum: 'phi' must list m matrices");
  }
  for (const auto& p : phi) h.phi.push_back(matrix_from_json(field, p, h.n, h.n));
  return h;
}

/// Deterministic serialization: sorted keys, compact, shortest round-trip floats.
std::string dump_canonical(const json& j);

}  // namespace qstack
