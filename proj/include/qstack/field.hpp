#pragma once

// Scalar rings used for representations: prime fields F_p (p <= 64), exact
// rationals, and doubles compared under a tolerance.
//
// A field object carries the ring parameters and performs all arithmetic on
// plain element values, so matrices store raw residues / mpq_class / double.

#include <cmath>
#include <concepts>
#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "qstack/error.hpp"

namespace qstack {

class PrimeField {
 public:
  using Element = std::uint32_t;
  static constexpr bool exact = true;
  static constexpr std::uint32_t kMaxPrime = 64;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p < 2 || p > kMaxPrime || !is_prime(p)) {
      throw Error("field characteristic must be a prime <= 64, got " + std::to_string(p));
    }
  }

  std::uint32_t characteristic() const noexcept { return p_; }
  std::string name() const { return "F_" + std::to_string(p_); }

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }
  Element from_int(std::int64_t v) const noexcept {
    auto r = v % static_cast<std::int64_t>(p_);
    return static_cast<Element>(r < 0 ? r + p_ : r);
  }

  Element add(Element a, Element b) const noexcept { return (a + b) % p_; }
  Element sub(Element a, Element b) const noexcept { return (a + p_ - b) % p_; }
  Element neg(Element a) const noexcept { return (p_ - a) % p_; }
  Element mul(Element a, Element b) const noexcept { return (a * b) % p_; }
  Element inv(Element a) const {
    if (a % p_ == 0) throw SingularMatrix("division by zero in " + name());
    // Fermat: a^(p-2).
    Element result = 1;
    Element base = a % p_;
    for (std::uint32_t e = p_ - 2; e != 0; e >>= 1) {
      if (e & 1U) result = mul(result, base);
      base = mul(base, base);
    }
    return result;
  }
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  bool is_zero(Element a) const noexcept { return a == 0; }
  bool equal(Element a, Element b) const noexcept { return a == b; }
  double magnitude(Element a) const noexcept { return a == 0 ? 0.0 : 1.0; }
  std::string to_string(Element a) const { return std::to_string(a); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept {
    return a.p_ == b.p_;
  }

  static constexpr bool is_prime(std::uint32_t n) noexcept {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) return false;
    }
    return true;
  }

 private:
  std::uint32_t p_;
};

class RationalField {
 public:
  using Element = mpq_class;
  static constexpr bool exact = true;

  std::string name() const { return "Q"; }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(std::int64_t v) const { return Element(static_cast<long>(v)); }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const {
    if (sgn(a) == 0) throw SingularMatrix("division by zero in Q");
    return 1 / a;
  }
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  double magnitude(const Element& a) const { return std::abs(a.get_d()); }
  std::string to_string(const Element& a) const {
    return a.get_num().get_str() + "/" + a.get_den().get_str();
  }

  friend bool operator==(const RationalField&, const RationalField&) noexcept { return true; }
};

/// Doubles. `tolerance` governs `equal` and matrix residual checks.
class RealField {
 public:
  using Element = double;
  static constexpr bool exact = false;
  static constexpr double kDefaultTolerance = 1e-9;

  explicit RealField(double tolerance = kDefaultTolerance) : tol_(tolerance) {
    if (!(tolerance >= 0.0)) throw Error("tolerance must be non-negative");
  }

  double tolerance() const noexcept { return tol_; }
  std::string name() const { return "R"; }

  Element zero() const noexcept { return 0.0; }
  Element one() const noexcept { return 1.0; }
  Element from_int(std::int64_t v) const noexcept { return static_cast<double>(v); }

  Element add(Element a, Element b) const noexcept { return a + b; }
  Element sub(Element a, Element b) const noexcept { return a - b; }
  Element neg(Element a) const noexcept { return -a; }
  Element mul(Element a, Element b) const noexcept { return a * b; }
  Element inv(Element a) const {
    if (a == 0.0) throw SingularMatrix("division by zero in R");
    return 1.0 / a;
  }
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  bool is_zero(Element a) const noexcept { return std::abs(a) <= tol_; }
  bool equal(Element a, Element b) const noexcept { return std::abs(a - b) <= tol_; }
  double magnitude(Element a) const noexcept { return std::abs(a); }
  std::string to_string(Element a) const { return std::to_string(a); }

  // Tolerance is a comparison setting, not part of the ring.
  friend bool operator==(const RealField&, const RealField&) noexcept { return true; }

 private:
  double tol_;
};

template <class F>
concept Field = std::equality_comparable<F> && requires(const F f, const typename F::Element a) {
  { F::exact } -> std::convertible_to<bool>;
  { f.zero() } -> std::convertible_to<typename F::Element>;
  { f.one() } -> std::convertible_to<typename F::Element>;
  { f.from_int(std::int64_t{}) } -> std::convertible_to<typename F::Element>;
  { f.add(a, a) } -> std::convertible_to<typename F::Element>;
  { f.sub(a, a) } -> std::convertible_to<typename F::Element>;
  { f.mul(a, a) } -> std::convertible_to<typename F::Element>;
  { f.neg(a) } -> std::convertible_to<typename F::Element>;
  { f.inv(a) } -> std::convertible_to<typename F::Element>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.equal(a, a) } -> std::same_as<bool>;
  { f.magnitude(a) } -> std::convertible_to<double>;
  { f.to_string(a) } -> std::convertible_to<std::string>;
};

/// A field element tagged with its ring; used where a scalar crosses an API
/// boundary and ring agreement must be checked.
template <Field F>
struct Scalar {
  F field;
  typename F::Element value;
};

template <Field F>
void require_same_ring(const F& a, const F& b) {
  if (!(a == b)) throw RingMismatch("ring mismatch: " + a.name() + " vs " + b.name());
}

}  // namespace qstack
