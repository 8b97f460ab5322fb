#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <utility>
#include <vector>

#include "cospectra/cospectral.hpp"

namespace cospectra {

/// Exact Gaussian integer; houses quantum-walk amplitude numerators at
/// time pi/2, where every eigenvalue phase i^lambda is a Gaussian unit.
struct GaussianInteger {
  int64_t re = 0;
  int64_t im = 0;

  uint64_t norm_sq() const;  // re^2 + im^2, overflow-checked
  bool operator==(const GaussianInteger&) const = default;
};

/// Dense symmetric 0/1 adjacency matrix, entry (g, h) = 1 iff h - g in C.
/// TooLargeError above limits.max_matrix_vertices.
Eigen::MatrixXd adjacency_matrix(const CayleyGraph& x, const Limits& limits = {});

/// Numeric eigendecomposition with eigenvalues clustered by gap; the cluster
/// column ranges partition the orthonormal eigenvector basis.
struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd eigenvectors;  // orthonormal columns, same order
  std::vector<std::pair<Eigen::Index, Eigen::Index>> clusters;  // [begin, end)
  double spectral_radius = 0.0;
};

/// Clusters eigenvalues whose gaps fall below 1e-6 * max(1, spectral radius).
/// ClusterAmbiguityError when an adjacent gap lands between tol and 10*tol.
SpectralDecomposition decompose_symmetric(const Eigen::MatrixXd& a, double tol);

/// The orthogonal projectors onto the clustered eigenspaces.
std::vector<Eigen::MatrixXd> spectral_projectors(const Eigen::MatrixXd& a,
                                                 double tol = 1e-8);

/// Floating-point test of E_r e_u = +-E_r e_v for every spectral idempotent
/// E_r, with the sign free per idempotent. Independent of the character
/// route: works directly on the adjacency matrix.
bool idempotent_strong_cospectrality(const CayleyGraph& x, const GroupElement& u,
                                     const GroupElement& v, double tol = 1e-8,
                                     const Limits& limits = {});

/// True iff the idempotent test agrees with the character detector on every
/// involution of the group.
bool oracle_agreement(const CayleyGraph& x, double tol = 1e-8,
                      const Limits& limits = {});

/// Exact amplitude numerator A_g = sum_a i^(lambda_a) (-1)^(a.g) for a
/// cubelike graph; U(pi/2)_{0,g} = A_g / 2^d. Perfect state transfer at
/// pi/2 iff |A_g| = 2^d.
GaussianInteger pst_amplitude_exact(const CayleyGraph& x, const GroupElement& g);

/// All 2^d amplitude numerators at once via two integer transforms.
std::vector<GaussianInteger> pst_amplitudes(const CayleyGraph& x);

}  // namespace cospectra
