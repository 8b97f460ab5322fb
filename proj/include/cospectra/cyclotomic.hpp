#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "cospectra/errors.hpp"

namespace cospectra {

/// Coefficients of the N-th cyclotomic polynomial Phi_N, constant term first.
/// Computed by exact division of x^N - 1 by the product of Phi_d over the
/// proper divisors d of N. Results are memoized.
std::vector<int64_t> cyclotomic_polynomial(uint64_t n);

/// An exact element of Z[zeta_N]: an integer coefficient vector holding the
/// canonical representative modulo Phi_N. The canonical form has fixed length
/// deg(Phi_N), so equality at a common conductor is plain vector equality.
/// For N <= 2 the type degenerates to a single machine integer. Arithmetic
/// between different conductors lifts both operands to the lcm first. All
/// coefficient arithmetic is 64-bit with overflow checks.
class CyclotomicInteger {
 public:
  CyclotomicInteger();  // zero at conductor 1

  static CyclotomicInteger integer(int64_t value);
  static CyclotomicInteger root_of_unity(uint64_t conductor, uint64_t exponent);
  /// Reduces an arbitrary coefficient vector (constant term first) mod Phi_N.
  static CyclotomicInteger from_poly(uint64_t conductor, std::vector<int64_t> coeffs);

  uint64_t conductor() const { return conductor_; }
  const std::vector<int64_t>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// The constant value; NonRationalValueError if the canonical form is not
  /// a constant polynomial.
  int64_t as_integer() const;

  /// Re-expresses this value at a larger conductor m (conductor() must
  /// divide m): zeta_N = zeta_m^(m/N).
  CyclotomicInteger lifted(uint64_t m) const;

  friend CyclotomicInteger operator+(const CyclotomicInteger&, const CyclotomicInteger&);
  friend CyclotomicInteger operator-(const CyclotomicInteger&, const CyclotomicInteger&);
  friend CyclotomicInteger operator*(const CyclotomicInteger&, const CyclotomicInteger&);
  CyclotomicInteger operator-() const;

  bool operator==(const CyclotomicInteger& other) const;
  bool operator!=(const CyclotomicInteger& other) const { return !(*this == other); }

 private:
  CyclotomicInteger(uint64_t conductor, std::vector<int64_t> canonical);

  uint64_t conductor_;
  std::vector<int64_t> coeffs_;  // length deg(Phi_N)
};

}  // namespace cospectra
