#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "cospectra/cayley.hpp"
#include "cospectra/cospectral.hpp"

namespace cospectra {

/// A generated graph together with the elements its construction certifies
/// to be strongly cospectral to 0.
struct ConstructedGraph {
  CayleyGraph graph;
  GroupElement sigma;                    // coordinatewise sum of the connection set
  std::vector<GroupElement> guaranteed;  // certified subset of H, ascending
};

/// Cubelike graph on Z_2^d (d odd, >= 5) whose strongly cospectral subgroup
/// contains {0, e1+e2+e3, sigma, e1+e2+e3+sigma} with sigma = e1+...+ed.
/// Connection set: the basis vectors, the three pair sums within {e1,e2,e3},
/// all pair sums within {e4..ed}, and e1+e2+e3+ei for i >= 4.
ConstructedGraph construct_odd(uint32_t d);

/// Even-dimension variant on Z_2^(d+1) (parameter d odd, >= 5): the odd
/// construction plus e_{d+1} and e_1+...+e_d. sigma = e_{d+1}; the second
/// certified generator is e1+e2+e3 when d+1 = 2 (mod 4) and e4+...+ed when
/// d+1 = 0 (mod 4).
ConstructedGraph construct_even(uint32_t d);

/// Standard-basis Cayley graph of Z_2^d, d >= 1.
CayleyGraph hypercube(uint32_t d);

/// Cartesian product of a cubelike graph with the m-cycle (m odd, >= 3):
/// the Cayley graph of Z_2^d x Z_m with connection set
/// {(c,0) : c in C} u {(0,1),(0,-1)}. Strong cospectrality of (0, g) pairs
/// carries over to ((0,0), (g,0)).
CayleyGraph cycle_product(const CayleyGraph& cubelike, uint32_t m);

/// The six catalog graphs on Z_2^5 of degrees 10..15 (CLI ids
/// "appendixA:1".."appendixA:6"); each has a strongly cospectral set of
/// size four, as do their complements.
std::vector<CayleyGraph> appendix_catalog();

/// Parses a connection-set description. Accepted formats:
///   - multiplicative tokens "f0, f2*f4, ..." (fi = generator i),
///   - digit strings "10101" (leftmost digit = coordinate 1),
///   - a JSON array of coordinate lists.
/// ParseError carries the offending position; set-level violations raise
/// ValidationError.
ConnectionSet parse_connection_set(const FiniteAbelianGroup& group, std::string_view text);

struct SearchHit {
  ConnectionSet conn;
  uint64_t h_size = 0;
};

/// Samples `trials` pseudo-random nonempty connection sets in Z_2^d and
/// returns those whose strongly cospectral subgroup reaches target_size.
/// Fully determined by the seed: trial t uses mt19937_64 seeded with
/// splitmix64(seed + t).
std::vector<SearchHit> search_random(uint32_t d, uint64_t trials, uint64_t target_size,
                                     uint64_t seed);

}  // namespace cospectra
