#pragma once

// Brute-force enumeration of representations over F_p.
//
// Free edges are chosen greedily: an edge that is the long side of a triangle
// whose other two sides are already known is computed instead of enumerated.
// The remaining triangles are checked on every assignment. Free edges are
// enumerated in id order, entries row-major, lexicographically.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "qstack/field.hpp"
#include "qstack/rep.hpp"
#include "qstack/sset.hpp"

namespace qstack {

enum class EnumerationMode {
  constrained,      // only assignments satisfying every triangle
  all_assignments,  // every matrix tuple, triangles ignored
};

inline constexpr std::uint64_t kEnumerationGuard = std::uint64_t{1} << 24;

/// p^k, saturating at UINT64_MAX.
std::uint64_t saturating_power(std::uint64_t p, std::size_t k);

class RepStream {
 public:
  RepStream(std::shared_ptr<const SSet2> shape, const DimVector& dims, PrimeField field,
            EnumerationMode mode = EnumerationMode::constrained,
            std::uint64_t guard = kEnumerationGuard);

  /// Advances to the next representation; false once exhausted.
  bool next();
  const Rep<PrimeField>& current() const { return rep_; }

  std::size_t free_entries() const noexcept { return digits_.size(); }
  std::uint64_t assignment_count() const noexcept { return assignments_; }
  const std::vector<std::size_t>& free_edges() const noexcept { return free_edges_; }

 private:
  bool advance_odometer();
  bool complete_assignment();

  Rep<PrimeField> rep_;
  EnumerationMode mode_;
  std::vector<std::size_t> free_edges_;
  std::vector<std::size_t> forced_;  // triangle indices, in evaluation order
  std::vector<std::size_t> checks_;  // triangle indices verified per assignment
  struct Digit {
    std::size_t edge;
    std::size_t entry;
  };
  std::vector<Digit> digits_;
  std::uint64_t assignments_ = 1;
  bool started_ = false;
  bool done_ = false;
};

/// Exact number of representations with the given dimensions.
std::uint64_t count_reps(std::shared_ptr<const SSet2> shape, const DimVector& dims,
                         const PrimeField& field);

/// Every matrix of the given size (rows x cols) over the field, row-major lex order.
std::vector<Matrix<PrimeField>> all_matrices(const PrimeField& field, std::size_t rows,
                                             std::size_t cols);

/// GL_n(F_p) by brute force.
std::vector<Matrix<PrimeField>> general_linear_group(const PrimeField& field, std::size_t n);

}  // namespace qstack
