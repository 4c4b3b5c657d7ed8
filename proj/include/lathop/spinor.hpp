#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "lathop/spectral.hpp"

namespace lathop {

// Slowly varying component fields of a staggered solution. Four sectors carry
// the sign factors {1, (-1)^x, (-1)^y, (-1)^{x+y}} (sector index A + 2B);
// eight sectors add (-1)^z (index A + 2B + 4C). Each sector field lives on
// the full lattice and is band-limited to the reduced momentum zone
// (-pi/2, pi/2] along the sign-carrying axes.
class ComponentFields {
 public:
  ComponentFields(LatticeSpec lat, int sector_count);

  const LatticeSpec& lattice() const { return lat_; }
  int sector_count() const { return static_cast<int>(sectors_.size()); }
  Eigen::VectorXcd& sector(int i) { return sectors_[i]; }
  const Eigen::VectorXcd& sector(int i) const { return sectors_[i]; }
  double total_norm() const;

 private:
  LatticeSpec lat_;
  std::vector<Eigen::VectorXcd> sectors_;
};

// Splits psi by momentum: each mode is assigned to the sector whose pi-shifts
// along the sign-carrying axes (x,y for 4 sectors; x,y,z for 8) bring it into
// the reduced zone. Exact unitary partition: norms add up and recompose
// inverts it. Requires even dims; sector_count in {4, 8}.
ComponentFields project_components(const WaveFunction& psi, int sector_count);

// psi(s) = sum over sectors of field * sign factor. Rejects sector fields
// with relative momentum leakage outside the reduced zone above leak_tol.
WaveFunction recompose(const ComponentFields& c, double leak_tol = 1e-10);

// Largest relative out-of-zone momentum weight over the sectors.
double bandlimit_leakage(const ComponentFields& c);

enum class MassKind { none, susskind, alternating };

// First-order operator on component fields equivalent to the Dirac-gauge
// hopping Hamiltonian: D = ax (i Dx) + ay (i Dy) + az (i Dz) + mass block,
// with Df = f(.+1) - f(.-1) and sector-space matrices
//   4 sectors: ax = s3 x 1, ay = s1 x s3, az = s1 x s1   (first factor on A)
//   8 sectors: ax = s3 x 1 x 1, ay = s1 x s3 x 1, az = s1 x s1 x s3.
// Mass blocks: susskind (8 sectors) mu * s1 x s1 x s1; alternating
// (4 sectors) mu * (s2 x 1) acting through the symmetric shift f(.+1)+f(.-1),
// i.e. the exact lattice symbol 2 cos(kx) * mu * s2 x 1.
class DiracOperator {
 public:
  DiracOperator(int sector_count, MassKind mass, double mu);

  int sector_count() const { return sector_count_; }
  MassKind mass() const { return mass_; }
  double mu() const { return mu_; }

  const Eigen::MatrixXcd& alpha(int axis) const { return alpha_[axis]; }
  const Eigen::MatrixXcd& beta() const { return beta_; }

  ComponentFields apply(const ComponentFields& c) const;

  // Momentum-space matrix: sum_i alpha_i * (-2 sin k_i) + mass symbol.
  Eigen::MatrixXcd symbol(std::array<double, 3> k) const;

 private:
  int sector_count_;
  MassKind mass_;
  double mu_;
  std::array<Eigen::MatrixXcd, 3> alpha_;
  Eigen::MatrixXcd beta_;
};

// Validates the sector-count/mass pairing (susskind needs 8 sectors, the
// alternating mass 4) and builds the operator.
DiracOperator assemble_dirac(int sector_count, MassKind mass, double mu);

// || H psi - recompose(D(project(psi))) || / || psi ||. Exact (to rounding)
// when k is the Dirac-gauge field matching D; order one for mismatched pairs.
double equivalence_residual(const HoppingField& k, const WaveFunction& psi,
                            const DiracOperator& d);

// P psi(s) = (-1)^{x+y+z} psi(-s). Returns the induced 1-norm of
// P H P^{-1} - H (max column abs sum). Requires even dims.
double parity_residual(const HoppingField& k);

// Max-norm check that P P = identity on a basis sweep.
double parity_squared_residual(const LatticeSpec& lat);

// Evolves one smooth packet (sector 00, spinor component 0, momentum k0 along
// x) under the lattice symbol -2 sum alpha_i sin k_i and under the continuum
// symbol -2 sum alpha_i k_i for time t, in momentum space on an L^3 grid, and
// returns the fidelity deficit 1 - |<psi_lat|psi_cont>|. Third order in k0.
// Requires lambda >= 2, 0 <= k0 <= pi/4, even L >= 8.
double continuum_error(double k0, double lambda, int extent, double t);

}  // namespace lathop
