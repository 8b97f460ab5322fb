#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cospectra/cyclotomic.hpp"
#include "cospectra/errors.hpp"

namespace cospectra {

/// Element of a finite abelian group, written additively: one residue per
/// cyclic factor. Comparison is lexicographic on the coordinate vector.
struct GroupElement {
  std::vector<uint32_t> coords;

  bool operator==(const GroupElement&) const = default;
  auto operator<=>(const GroupElement&) const = default;
};

/// Characters of a finite abelian group are indexed by the group elements
/// themselves: a indexes psi_a(g) = zeta_N ^ (sum_i a_i g_i N/m_i mod N).
using CharacterIndex = GroupElement;

/// Direct product of cyclic groups Z_{m_1} x ... x Z_{m_k}. Immutable after
/// construction; safe to share between threads.
class FiniteAbelianGroup {
 public:
  /// Factor orders m_1..m_k, each >= 2. The empty list gives the trivial
  /// group. Rejects any order <= 1.
  explicit FiniteAbelianGroup(std::vector<uint32_t> orders);

  /// Parses literals like "Z2^5", "Z4^2", "Z2^5xZ3" (case-insensitive;
  /// '^' repeats a factor, 'x' separates factors).
  static FiniteAbelianGroup parse(std::string_view literal);

  std::size_t rank() const { return orders_.size(); }
  const std::vector<uint32_t>& orders() const { return orders_; }
  uint64_t order() const { return order_; }
  uint64_t exponent() const { return exponent_; }

  GroupElement zero() const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;
  bool is_involution(const GroupElement& a) const;  // 2a = 0
  uint64_t element_order(const GroupElement& a) const;

  /// Elements are ranked 0..order()-1 in lexicographic coordinate order
  /// (first coordinate most significant).
  uint64_t rank_of(const GroupElement& a) const;
  GroupElement element_at(uint64_t rank) const;

  /// Exponent e in [0, N) with psi_a(g) = zeta_N^e, N = exponent().
  uint64_t character_exponent(const CharacterIndex& a, const GroupElement& g) const;
  /// psi_a(g) as a sign; g must be an involution.
  int character_sign(const CharacterIndex& a, const GroupElement& g) const;

  /// Ranks of all elements with 2g = 0, ascending (includes 0).
  std::vector<uint64_t> involution_ranks() const;

  /// Canonical literal, e.g. "Z2^5xZ3"; "Z1" for the trivial group.
  std::string to_string() const;

  bool operator==(const FiniteAbelianGroup& other) const {
    return orders_ == other.orders_;
  }

  void check_element(const GroupElement& a) const;

 private:
  std::vector<uint32_t> orders_;
  uint64_t order_ = 1;
  uint64_t exponent_ = 1;
  std::vector<uint64_t> char_weights_;  // N / m_i
};

/// psi_a(g) as an exact cyclotomic integer at conductor exponent().
CyclotomicInteger char_value(const FiniteAbelianGroup& group, const CharacterIndex& a,
                             const GroupElement& g);

}  // namespace cospectra
