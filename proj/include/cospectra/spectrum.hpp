#pragma once

#include <cstdint>
#include <vector>

#include "cospectra/cayley.hpp"
#include "cospectra/cyclotomic.hpp"

namespace cospectra {

struct SpectrumEntry {
  CyclotomicInteger eigenvalue;
  std::vector<uint64_t> characters;  // ranks of the indexing elements, ascending

  uint64_t multiplicity() const { return characters.size(); }
};

/// Eigenvalues of a Cayley graph grouped by exact equality, with the
/// characters attaining each one. Entries are sorted canonically: rational
/// eigenvalues first in ascending order, then irrational ones by
/// lexicographic canonical coefficient vector.
class SpectrumTable {
 public:
  explicit SpectrumTable(std::vector<SpectrumEntry> entries);

  const std::vector<SpectrumEntry>& entries() const { return entries_; }
  uint64_t total_multiplicity() const;

 private:
  std::vector<SpectrumEntry> entries_;
};

/// The eigenvalue psi_a(C) = sum over c in C of psi_a(c), exactly.
CyclotomicInteger eigenvalue_for_character(const CayleyGraph& x, const CharacterIndex& a);

/// Evaluates all |G| characters by direct summation over the connection set
/// and groups them by exact eigenvalue equality.
SpectrumTable spectrum(const CayleyGraph& x, const Limits& limits = {});

/// In-place Walsh-Hadamard butterfly on a vector whose length is a power of
/// two (natural order, no bit-reversal permutation).
void walsh_hadamard_inplace(std::vector<int64_t>& values);

/// Fast path for groups of exponent <= 2: the Walsh-Hadamard transform of
/// the 0/1 indicator of C. Entry a equals the integer eigenvalue of the
/// character indexed by the element of rank a. NotCubelikeError otherwise.
std::vector<int64_t> wht_spectrum(const CayleyGraph& x, const Limits& limits = {});

/// Exact trace identity for cubelike graphs: sum of squared eigenvalues
/// equals |V| * degree.
bool check_cube_identity(const CayleyGraph& x, const Limits& limits = {});

uint64_t max_multiplicity(const SpectrumTable& table);

}  // namespace cospectra
