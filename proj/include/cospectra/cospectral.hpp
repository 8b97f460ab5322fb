#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cospectra/spectrum.hpp"

namespace cospectra {

/// Bound checks that only apply to some graphs; an unset optional means the
/// check was skipped (precondition not met), never that it failed.
struct CubelikeVerdicts {
  std::optional<bool> cube_mult;    // max multiplicity > 2^(d/2); exponent <= 2, d >= 3
  std::optional<bool> cube_size;    // |H| <= 2^(ceil(d/2)-1);     exponent <= 2, d >= 3
  std::optional<bool> third_bound;  // |H| <= |V|/3;               |V| >= 5
};

struct BoundVerdicts {
  bool mult_bound = false;  // |H| <= |G| / maxMultiplicity
  CubelikeVerdicts cube;
};

/// Detection result for one graph: the subgroup of vertices strongly
/// cospectral to 0, plus every applicable bound verdict. Bound failures are
/// reported here, never raised.
struct CospectralReport {
  FiniteAbelianGroup group;
  uint64_t degree = 0;
  std::vector<GroupElement> members;     // H, ascending; always contains 0
  std::vector<GroupElement> generators;  // row-reduced GF(2) basis of H
  uint64_t max_multiplicity = 0;
  BoundVerdicts verdicts;

  uint64_t h_size() const { return members.size(); }
};

/// Exactly the involutions g such that every eigenvalue class of characters
/// takes a constant value at g. Always contains 0; ascending order.
std::vector<GroupElement> strongly_cospectral_to_zero(const CayleyGraph& x,
                                                      const Limits& limits = {});

/// Runs detection, subgroup reduction and every applicable bound check.
CospectralReport build_report(const CayleyGraph& x, const Limits& limits = {});

/// True iff h contains 0, is closed under addition, and every nonzero
/// element has order two.
bool verify_subgroup(const FiniteAbelianGroup& group, const std::vector<GroupElement>& h);

/// |H| * maxMultiplicity <= |G|, exactly.
bool check_multiplicity_bound(const CospectralReport& report);

CubelikeVerdicts check_cubelike_bounds(const CospectralReport& report);

/// The coordinatewise sum sigma of the connection set of a cubelike graph;
/// empty when sigma = 0. When present there is perfect state transfer from
/// 0 to sigma at time pi/2.
std::optional<GroupElement> pst_pair(const CayleyGraph& x);

}  // namespace cospectra
