#include "qstack/enumerate.hpp"

#include <algorithm>
#include <string>

#include "qstack/error.hpp"

namespace qstack {

std::uint64_t saturating_power(std::uint64_t p, std::size_t k) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (p != 0 && out > UINT64_MAX / p) return UINT64_MAX;
    out *= p;
  }
  return out;
}

RepStream::RepStream(std::shared_ptr<const SSet2> shape, const DimVector& dims, PrimeField field,
                     EnumerationMode mode, std::uint64_t guard)
    : rep_([&] {
        require_valid(*shape, "enumerate");
        return Rep<PrimeField>::zero(shape, field, dims);
      }()),
      mode_(mode) {
  const SSet2& s = rep_.shape();
  const std::size_t ne = s.edge_count();
  std::vector<bool> known(ne, false);
  std::vector<bool> is_long(ne, false);
  for (std::size_t e = 0; e < ne; ++e) known[e] = s.edges()[e].identity;
  for (std::size_t t = 0; t < s.triangle_count(); ++t) is_long[s.triangle_edges(t).long_edge] = true;

  std::vector<std::size_t> by_id(ne);
  for (std::size_t e = 0; e < ne; ++e) by_id[e] = e;
  std::sort(by_id.begin(), by_id.end(),
            [&](std::size_t a, std::size_t b) { return s.edges()[a].id < s.edges()[b].id; });

  std::vector<bool> used(s.triangle_count(), false);
  if (mode_ == EnumerationMode::all_assignments) {
    for (std::size_t e : by_id) {
      if (!known[e]) free_edges_.push_back(e);
    }
  } else {
    for (;;) {
      for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t t = 0; t < s.triangle_count(); ++t) {
          const auto& ix = s.triangle_edges(t);
          if (!used[t] && known[ix.first] && known[ix.second] && !known[ix.long_edge]) {
            known[ix.long_edge] = true;
            used[t] = true;
            forced_.push_back(t);
            changed = true;
          }
        }
      }
      std::optional<std::size_t> pick;
      for (std::size_t e : by_id) {
        if (known[e]) continue;
        if (!pick) pick = e;
        if (!is_long[e]) {
          pick = e;
          break;
        }
      }
      if (!pick) break;
      known[*pick] = true;
      free_edges_.push_back(*pick);
    }
    std::sort(free_edges_.begin(), free_edges_.end(),
              [&](std::size_t a, std::size_t b) { return s.edges()[a].id < s.edges()[b].id; });
    for (std::size_t t = 0; t < s.triangle_count(); ++t) {
      if (!used[t]) checks_.push_back(t);
    }
  }

  for (std::size_t e : free_edges_) {
    for (std::size_t k = 0; k < rep_.mat(e).size(); ++k) digits_.push_back({e, k});
  }
  assignments_ = saturating_power(field.characteristic(), digits_.size());
  if (assignments_ > guard) {
    throw GuardExceeded("enumeration needs " + std::to_string(field.characteristic()) + "^" +
                        std::to_string(digits_.size()) + " assignments, above the limit of " +
                        std::to_string(guard) + "; reduce the dimensions or the field size");
  }
}

bool RepStream::advance_odometer() {
  const auto p = rep_.field().characteristic();
  for (std::size_t k = digits_.size(); k-- > 0;) {
    auto& x = rep_.mat(digits_[k].edge).entries()[digits_[k].entry];
    if (++x < p) return true;
    x = 0;
  }
  return false;
}

bool RepStream::complete_assignment() {
  const SSet2& s = rep_.shape();
  for (std::size_t t : forced_) {
    const auto& ix = s.triangle_edges(t);
    multiply_into(rep_.mat(ix.long_edge), rep_.mat(ix.second), rep_.mat(ix.first));
  }
  Matrix<PrimeField> scratch(rep_.field(), 0, 0);
  for (std::size_t t : checks_) {
    const auto& ix = s.triangle_edges(t);
    const auto& lhs = rep_.mat(ix.long_edge);
    if (scratch.rows() != lhs.rows() || scratch.cols() != lhs.cols()) {
      scratch = Matrix<PrimeField>(rep_.field(), lhs.rows(), lhs.cols());
    }
    multiply_into(scratch, rep_.mat(ix.second), rep_.mat(ix.first));
    if (scratch.entries() != lhs.entries()) return false;
  }
  return true;
}

bool RepStream::next() {
  if (done_) return false;
  for (;;) {
    if (!started_) {
      started_ = true;
    } else if (!advance_odometer()) {
      done_ = true;
      return false;
    }
    if (complete_assignment()) return true;
  }
}

std::uint64_t count_reps(std::shared_ptr<const SSet2> shape, const DimVector& dims,
                         const PrimeField& field) {
  RepStream stream(std::move(shape), dims, field);
  std::uint64_t n = 0;
  while (stream.next()) ++n;
  return n;
}

std::vector<Matrix<PrimeField>> all_matrices(const PrimeField& field, std::size_t rows,
                                             std::size_t cols) {
  const std::size_t k = rows * cols;
  const std::uint64_t total = saturating_power(field.characteristic(), k);
  if (total > kEnumerationGuard) throw GuardExceeded("too many matrices to enumerate");
  std::vector<Matrix<PrimeField>> out;
  out.reserve(total);
  Matrix<PrimeField> m(field, rows, cols);
  for (std::uint64_t i = 0; i < total; ++i) {
    out.push_back(m);
    for (std::size_t d = k; d-- > 0;) {
      auto& x = m.entries()[d];
      if (++x < field.characteristic()) break;
      x = 0;
    }
  }
  return out;
}

std::vector<Matrix<PrimeField>> general_linear_group(const PrimeField& field, std::size_t n) {
  std::vector<Matrix<PrimeField>> out;
  for (auto& m : all_matrices(field, n, n)) {
    if (inverse(m)) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace qstack
