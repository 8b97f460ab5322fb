#pragma once

#include <cstdint>
#include <vector>

#include "cospectra/group.hpp"

namespace cospectra {

/// Caps on dense computations. The CLI lets COSPECTRA_MAX_VERTICES override
/// both fields.
struct Limits {
  uint64_t max_dense_vertices = uint64_t{1} << 22;  // character enumeration
  uint64_t max_matrix_vertices = 4096;              // dense adjacency matrices

  static Limits from_env();
};

/// Inverse-closed subset of G \ {0}. Elements are kept sorted and unique.
class ConnectionSet {
 public:
  ConnectionSet(const FiniteAbelianGroup& group, std::vector<GroupElement> elements);

  const std::vector<GroupElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(const GroupElement& g) const;

 private:
  std::vector<GroupElement> elements_;
};

/// Cayley graph X(G, C): vertices are the group elements, g ~ h iff h - g
/// lies in the connection set. Regular of degree |C|.
class CayleyGraph {
 public:
  CayleyGraph(FiniteAbelianGroup group, ConnectionSet conn);

  const FiniteAbelianGroup& group() const { return group_; }
  const ConnectionSet& connection_set() const { return conn_; }
  /// Connection set as element ranks, ascending. For cubelike graphs the
  /// rank is the coordinate bitmask (first coordinate = highest bit).
  const std::vector<uint64_t>& connection_ranks() const { return conn_ranks_; }

  uint64_t degree() const { return conn_.size(); }
  uint64_t vertex_count() const { return group_.order(); }

  /// True when the group has exponent <= 2 (a cubelike graph).
  bool is_cubelike() const { return group_.exponent() <= 2; }
  /// Number of Z_2 factors; NotCubelikeError when exponent > 2.
  uint32_t cube_dimension() const;

  bool adjacent(const GroupElement& g, const GroupElement& h) const;

 private:
  FiniteAbelianGroup group_;
  ConnectionSet conn_;
  std::vector<uint64_t> conn_ranks_;
};

/// Cayley graph on the same group with connection set G \ (C u {0}).
CayleyGraph complement(const CayleyGraph& x, const Limits& limits = {});

}  // namespace cospectra
