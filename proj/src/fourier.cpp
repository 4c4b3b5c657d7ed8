#include "lathop/fourier.hpp"

#include <cmath>

#include "lathop/errors.hpp"

namespace lathop {

namespace {

// One-axis transform applied in place over all lines along `axis`.
// sign = -1 for the forward transform, +1 for the inverse.
void axis_dft(const LatticeSpec& lat, Eigen::VectorXcd& f, int axis, double sign) {
  const int n = lat.extent(axis);
  std::vector<std::complex<double>> twiddle(n);
  for (int j = 0; j < n; ++j)
    twiddle[j] = std::polar(1.0, sign * 2.0 * M_PI * j / n);

  int stride = 1;
  for (int a = 0; a < axis; ++a) stride *= lat.extent(a);
  const int lines = lat.volume() / n;

  std::vector<std::complex<double>> line(n), out(n);
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  for (int l = 0; l < lines; ++l) {
    // Decompose the line id into the coordinates below and above `axis`.
    int low = l % stride;
    int high = l / stride;
    int base = low + high * stride * n;
    for (int j = 0; j < n; ++j) line[j] = f[base + j * stride];
    for (int m = 0; m < n; ++m) {
      std::complex<double> acc(0, 0);
      for (int j = 0; j < n; ++j) acc += twiddle[(static_cast<long>(m) * j) % n] * line[j];
      out[m] = acc * norm;
    }
    for (int m = 0; m < n; ++m) f[base + m * stride] = out[m];
  }
}

}  // namespace

Eigen::VectorXcd dft_forward(const LatticeSpec& lat, const Eigen::VectorXcd& f) {
  if (f.size() != lat.volume())
    throw precondition_error("transform input size does not match lattice volume");
  Eigen::VectorXcd out = f;
  for (int axis = 0; axis < 3; ++axis) axis_dft(lat, out, axis, -1.0);
  return out;
}

Eigen::VectorXcd dft_inverse(const LatticeSpec& lat, const Eigen::VectorXcd& fhat) {
  if (fhat.size() != lat.volume())
    throw precondition_error("transform input size does not match lattice volume");
  Eigen::VectorXcd out = fhat;
  for (int axis = 0; axis < 3; ++axis) axis_dft(lat, out, axis, 1.0);
  return out;
}

int signed_mode(int m, int extent) {
  int r = ((m % extent) + extent) % extent;
  return (2 * r > extent) ? r - extent : r;
}

double momentum_value(int m, int extent) {
  return 2.0 * M_PI * signed_mode(m, extent) / extent;
}

}  // namespace lathop
