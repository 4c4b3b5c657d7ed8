#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>

#include "lathop/lattice.hpp"

namespace lathop {

// Unitary DFT over the lattice, separable per axis. Momentum m lives on the
// same index grid as sites: entry index = mx + Lx*(my + Ly*mz), and
// k_i = 2*pi*m_i/L_i.
Eigen::VectorXcd dft_forward(const LatticeSpec& lat, const Eigen::VectorXcd& f);
Eigen::VectorXcd dft_inverse(const LatticeSpec& lat, const Eigen::VectorXcd& fhat);

// Wraps m in [0, L) to the signed window (-L/2, L/2].
int signed_mode(int m, int extent);

// Signed momentum value 2*pi*signed_mode/L in (-pi, pi].
double momentum_value(int m, int extent);

}  // namespace lathop
