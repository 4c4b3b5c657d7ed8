#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <array>
#include <cstdint>
#include <vector>

#include "lathop/hopping.hpp"

namespace lathop {

class WaveFunction {
 public:
  WaveFunction(LatticeSpec lat, Eigen::VectorXcd data);

  static WaveFunction zero(const LatticeSpec& lat);
  static WaveFunction random(const LatticeSpec& lat, std::uint64_t seed);  // unit norm

  const LatticeSpec& lattice() const { return lat_; }
  const Eigen::VectorXcd& data() const { return data_; }
  Eigen::VectorXcd& data() { return data_; }
  cplx at(Site s) const { return data_[lat_.index(s)]; }
  double norm() const { return data_.norm(); }

 private:
  LatticeSpec lat_;
  Eigen::VectorXcd data_;
};

// Sparse Hermitian matrix of the hopping equation: H[s, s+n] = kappa(s, n)
// accumulated over directions (parallel links on extent-2 axes add), plus the
// on-site term on the diagonal. At most 7 entries per row.
class Hamiltonian {
 public:
  Hamiltonian(LatticeSpec lat, Eigen::SparseMatrix<cplx> mat);

  const LatticeSpec& lattice() const { return lat_; }
  int dimension() const { return static_cast<int>(mat_.rows()); }
  const Eigen::SparseMatrix<cplx>& matrix() const { return mat_; }
  Eigen::MatrixXcd dense() const { return Eigen::MatrixXcd(mat_); }
  Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const { return mat_ * v; }
  // Max row sum of absolute values; bounds the spectral radius.
  double gershgorin_bound() const;

 private:
  LatticeSpec lat_;
  Eigen::SparseMatrix<cplx> mat_;
};

// Rejects non-hermitian fields.
Hamiltonian build_hamiltonian(const HoppingField& k);

// All eigenvalues, ascending. Dense path; refuses dimension > 8192.
std::vector<double> spectrum_dense(const Hamiltonian& h);

// Band structure over a fixed 2x2x2 cell. Requires a 2-periodic field and
// even dims. k_i = 2*pi*m_i/L_i with m_i = 0 .. L_i/2 - 1 (x fastest), eight
// bands per k, ascending. The union over k reproduces the dense spectrum.
struct BlochSpectrum {
  struct Entry {
    std::array<double, 3> k;
    std::array<double, 8> bands;
  };
  std::vector<Entry> entries;

  std::vector<double> all_bands_sorted() const;
  // Smallest |E| over all entries and bands.
  double min_abs_energy() const;
};

BlochSpectrum bloch_bands(const HoppingField& k);

enum class EvolveMethod { exact, chebyshev };

// psi(t) = exp(-i H t) psi0. Exact uses the full eigendecomposition
// (dimension <= 8192); chebyshev expands the propagator with Bessel
// coefficients truncated at machine precision and checks norm conservation.
WaveFunction evolve(const Hamiltonian& h, const WaveFunction& psi0, double t,
                    EvolveMethod method);

// Cached eigendecomposition for sampling many times along one trajectory.
class ExactPropagator {
 public:
  explicit ExactPropagator(const Hamiltonian& h);
  WaveFunction at(const WaveFunction& psi0, double t) const;
  const Eigen::VectorXd& eigenvalues() const { return evals_; }

 private:
  LatticeSpec lat_;
  Eigen::VectorXd evals_;
  Eigen::MatrixXcd evecs_;
};

// Normalized Gaussian packet exp(-|s-center|^2/(4 lambda^2)) e^{i k0 . s} with
// periodic images folded in. Requires 2 <= lambda <= min(L)/4.
WaveFunction gaussian_packet(const LatticeSpec& lat, std::array<double, 3> center,
                             double lambda, std::array<double, 3> k0);

// Gaussian along x only, uniform over y and z; the 1D-effective probe used by
// the staticity experiment. Requires 2 <= lambda <= Lx/4.
WaveFunction axial_packet(const LatticeSpec& lat, double center_x, double lambda,
                          double k0);

double energy_expectation(const Hamiltonian& h, const WaveFunction& psi);

// Centroid along an axis via the circular mean of |psi|^2, in [0, L).
double centroid_axis(const WaveFunction& psi, int axis);

// Wrapped difference to - from, in (-L/2, L/2].
double circular_displacement(double from, double to, int extent);

struct StaticityResult {
  double ratio = 0.0;  // |scalar displacement| / |staggered displacement|
  double scalar_displacement = 0.0;
  double staggered_displacement = 0.0;
  double elapsed_time = 0.0;
  bool conclusive = false;  // false when both displacements are under 0.1 sites
};

// Evolves the same axial packet under the uniform field and under the
// staggered solution (in its Dirac gauge, where a smooth packet rides a
// single band) for T = Lx/8, and compares centroid drifts. Requires dims
// divisible by 4. time_override > 0 replaces T; used for diagnostics.
StaticityResult staticity_ratio(const LatticeSpec& lat, double lambda, double k0,
                                double time_override = -1.0);

}  // namespace lathop
