#include "lathop/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "lathop/errors.hpp"

namespace lathop {

namespace {
constexpr int dense_limit = 8192;
}

WaveFunction::WaveFunction(LatticeSpec lat, Eigen::VectorXcd data)
    : lat_(lat), data_(std::move(data)) {
  if (data_.size() != lat_.volume())
    throw precondition_error("wave function size does not match lattice volume");
}

WaveFunction WaveFunction::zero(const LatticeSpec& lat) {
  return WaveFunction(lat, Eigen::VectorXcd::Zero(lat.volume()));
}

WaveFunction WaveFunction::random(const LatticeSpec& lat, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd v(lat.volume());
  for (int i = 0; i < lat.volume(); ++i) v[i] = cplx(gauss(rng), gauss(rng));
  v /= v.norm();
  return WaveFunction(lat, std::move(v));
}

Hamiltonian::Hamiltonian(LatticeSpec lat, Eigen::SparseMatrix<cplx> mat)
    : lat_(lat), mat_(std::move(mat)) {
  if (mat_.rows() != lat_.volume() || mat_.cols() != lat_.volume())
    throw precondition_error("matrix dimension does not match lattice volume");
}

double Hamiltonian::gershgorin_bound() const {
  // Column sums equal row sums in absolute value for a hermitian matrix.
  double worst = 0.0;
  for (int c = 0; c < mat_.outerSize(); ++c) {
    double acc = 0.0;
    for (Eigen::SparseMatrix<cplx>::InnerIterator it(mat_, c); it; ++it)
      acc += std::abs(it.value());
    worst = std::max(worst, acc);
  }
  return worst;
}

Hamiltonian build_hamiltonian(const HoppingField& k) {
  if (!check_hermiticity(k))
    throw precondition_error("hopping field is not hermitian");
  const LatticeSpec& lat = k.lattice();
  std::vector<Eigen::Triplet<cplx>> trips;
  trips.reserve(static_cast<std::size_t>(lat.volume()) * 7);
  for (int i = 0; i < lat.volume(); ++i) {
    Site s = lat.site_at(i);
    for (Direction d : link_directions)
      trips.emplace_back(i, lat.index(lat.neighbor(s, d)), k.amp(i, d));
    if (k.onsite(i) != cplx(0, 0)) trips.emplace_back(i, i, k.onsite(i));
  }
  Eigen::SparseMatrix<cplx> mat(lat.volume(), lat.volume());
  mat.setFromTriplets(trips.begin(), trips.end());  // duplicates accumulate
  return Hamiltonian(lat, std::move(mat));
}

std::vector<double> spectrum_dense(const Hamiltonian& h) {
  if (h.dimension() > dense_limit)
    throw precondition_error("dense spectrum is limited to dimension 8192");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.dense(),
                                                         Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw numerical_error("eigenvalue iteration failed to converge");
  const Eigen::VectorXd& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

std::vector<double> BlochSpectrum::all_bands_sorted() const {
  std::vector<double> all;
  all.reserve(entries.size() * 8);
  for (const Entry& e : entries)
    all.insert(all.end(), e.bands.begin(), e.bands.end());
  std::sort(all.begin(), all.end());
  return all;
}

double BlochSpectrum::min_abs_energy() const {
  double best = std::numeric_limits<double>::infinity();
  for (const Entry& e : entries)
    for (double b : e.bands) best = std::min(best, std::abs(b));
  return best;
}

BlochSpectrum bloch_bands(const HoppingField& k) {
  const LatticeSpec& lat = k.lattice();
  if (!lat.all_even())
    throw precondition_error("cell reduction needs even extents");
  for (int i = 0; i < lat.volume(); ++i) {
    Site s = lat.site_at(i);
    for (int axis = 0; axis < 3; ++axis) {
      Site shifted = s;
      shifted[axis] += 2;
      shifted = lat.wrap(shifted);
      for (Direction d : link_directions)
        if (std::abs(k.amp(s, d) - k.amp(shifted, d)) > 1e-12)
          throw precondition_error("cell reduction needs a 2-periodic field");
      if (std::abs(k.onsite(s) - k.onsite(shifted)) > 1e-12)
        throw precondition_error("cell reduction needs a 2-periodic field");
    }
  }

  const int mx_max = lat.extent(0) / 2;
  const int my_max = lat.extent(1) / 2;
  const int mz_max = lat.extent(2) / 2;
  BlochSpectrum out;
  out.entries.reserve(static_cast<std::size_t>(mx_max) * my_max * mz_max);

  for (int mz = 0; mz < mz_max; ++mz)
    for (int my = 0; my < my_max; ++my)
      for (int mx = 0; mx < mx_max; ++mx) {
        std::array<double, 3> kv = {2.0 * M_PI * mx / lat.extent(0),
                                    2.0 * M_PI * my / lat.extent(1),
                                    2.0 * M_PI * mz / lat.extent(2)};
        Eigen::Matrix<cplx, 8, 8> block = Eigen::Matrix<cplx, 8, 8>::Zero();
        for (int r = 0; r < 8; ++r) {
          Site cs{r & 1, (r >> 1) & 1, (r >> 2) & 1};
          for (Direction d : link_directions) {
            Site t = cs + direction_step(d);
            int off[3] = {0, 0, 0};
            Site rp = t;
            for (int axis = 0; axis < 3; ++axis) {
              if (t[axis] < 0) off[axis] = -1;
              if (t[axis] > 1) off[axis] = 1;
              rp[axis] = t[axis] - 2 * off[axis];
            }
            // Bloch phase for hopping into the neighboring 2-cell.
            double phase = 2.0 * (kv[0] * off[0] + kv[1] * off[1] + kv[2] * off[2]);
            int col = rp.x + 2 * rp.y + 4 * rp.z;
            block(r, col) += k.amp(cs, d) * std::polar(1.0, phase);
          }
          block(r, r) += k.onsite(cs);
        }
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix<cplx, 8, 8>> solver(
            block, Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success)
          throw numerical_error("cell block eigenvalue iteration failed");
        BlochSpectrum::Entry entry;
        entry.k = kv;
        for (int b = 0; b < 8; ++b) entry.bands[b] = solver.eigenvalues()[b];
        out.entries.push_back(entry);
      }
  return out;
}

namespace {

WaveFunction evolve_chebyshev(const Hamiltonian& h, const WaveFunction& psi0, double t) {
  const double a = h.gershgorin_bound();
  const double z = std::abs(a * t);
  if (z < 1e-300) return psi0;

  const double input_norm = psi0.data().norm();
  // exp(-iHt) = sum_k (2 - delta_k0) (-i)^k J_k(at) T_k(H/a); for t < 0 use
  // J_k(-z) = (-1)^k J_k(z).
  const cplx unit = (t >= 0) ? cplx(0, -1) : cplx(0, 1);

  Eigen::VectorXcd prev = psi0.data();
  Eigen::VectorXcd cur = h.apply(prev) / a;
  Eigen::VectorXcd acc = std::cyl_bessel_j(0, z) * prev;
  cplx phase = unit;
  int tail = 0;
  const int max_order = 200000;
  int order = 1;
  for (; order <= max_order; ++order) {
    double coeff = std::cyl_bessel_j(order, z);
    acc += (2.0 * coeff) * (phase * cur).eval();
    phase *= unit;
    if (std::abs(coeff) < 1e-17 && order > z)
      ++tail;
    else
      tail = 0;
    if (tail >= 3) break;
    Eigen::VectorXcd next = (2.0 / a) * h.apply(cur) - prev;
    prev.swap(cur);
    cur.swap(next);
  }
  if (order > max_order)
    throw numerical_error("propagator expansion failed to converge");

  if (std::abs(acc.norm() - input_norm) > 1e-10 * std::max(input_norm, 1.0))
    throw numerical_error("propagator lost unitarity beyond tolerance");
  return WaveFunction(psi0.lattice(), std::move(acc));
}

}  // namespace

WaveFunction evolve(const Hamiltonian& h, const WaveFunction& psi0, double t,
                    EvolveMethod method) {
  if (!(h.lattice() == psi0.lattice()))
    throw precondition_error("state lattice does not match the operator");
  if (method == EvolveMethod::chebyshev) return evolve_chebyshev(h, psi0, t);
  return ExactPropagator(h).at(psi0, t);
}

ExactPropagator::ExactPropagator(const Hamiltonian& h) : lat_(h.lattice()) {
  if (h.dimension() > dense_limit)
    throw precondition_error("exact propagator is limited to dimension 8192");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.dense());
  if (solver.info() != Eigen::Success)
    throw numerical_error("eigenvalue iteration failed to converge");
  evals_ = solver.eigenvalues();
  evecs_ = solver.eigenvectors();
}

WaveFunction ExactPropagator::at(const WaveFunction& psi0, double t) const {
  if (!(psi0.lattice() == lat_))
    throw precondition_error("state lattice does not match the propagator");
  Eigen::VectorXcd coeff = evecs_.adjoint() * psi0.data();
  for (int j = 0; j < coeff.size(); ++j)
    coeff[j] *= std::polar(1.0, -evals_[j] * t);
  return WaveFunction(lat_, evecs_ * coeff);
}

WaveFunction gaussian_packet(const LatticeSpec& lat, std::array<double, 3> center,
                             double lambda, std::array<double, 3> k0) {
  int min_extent = std::min({lat.extent(0), lat.extent(1), lat.extent(2)});
  if (lambda < 2.0 || lambda > min_extent / 4.0)
    throw precondition_error("packet width must satisfy 2 <= lambda <= min(L)/4");
  Eigen::VectorXcd v(lat.volume());
  for (int i = 0; i < lat.volume(); ++i) {
    Site s = lat.site_at(i);
    cplx acc(0, 0);
    for (int wx = -1; wx <= 1; ++wx)
      for (int wy = -1; wy <= 1; ++wy)
        for (int wz = -1; wz <= 1; ++wz) {
          double dx = s.x + wx * lat.extent(0) - center[0];
          double dy = s.y + wy * lat.extent(1) - center[1];
          double dz = s.z + wz * lat.extent(2) - center[2];
          double r2 = dx * dx + dy * dy + dz * dz;
          acc += std::polar(std::exp(-r2 / (4.0 * lambda * lambda)),
                            k0[0] * dx + k0[1] * dy + k0[2] * dz);
        }
    v[i] = acc;
  }
  v /= v.norm();
  return WaveFunction(lat, std::move(v));
}

WaveFunction axial_packet(const LatticeSpec& lat, double center_x, double lambda,
                          double k0) {
  if (lambda < 2.0 || lambda > lat.extent(0) / 4.0)
    throw precondition_error("packet width must satisfy 2 <= lambda <= Lx/4");
  Eigen::VectorXcd v(lat.volume());
  for (int i = 0; i < lat.volume(); ++i) {
    Site s = lat.site_at(i);
    cplx acc(0, 0);
    for (int wx = -1; wx <= 1; ++wx) {
      double dx = s.x + wx * lat.extent(0) - center_x;
      acc += std::polar(std::exp(-dx * dx / (4.0 * lambda * lambda)), k0 * dx);
    }
    v[i] = acc;
  }
  v /= v.norm();
  return WaveFunction(lat, std::move(v));
}

double energy_expectation(const Hamiltonian& h, const WaveFunction& psi) {
  if (!(h.lattice() == psi.lattice()))
    throw precondition_error("state lattice does not match the operator");
  double n2 = psi.data().squaredNorm();
  if (n2 <= 0.0) throw precondition_error("energy of the zero state is undefined");
  return std::real(psi.data().dot(h.apply(psi.data()))) / n2;
}

double centroid_axis(const WaveFunction& psi, int axis) {
  const LatticeSpec& lat = psi.lattice();
  const int extent = lat.extent(axis);
  cplx m(0, 0);
  for (int i = 0; i < lat.volume(); ++i) {
    Site s = lat.site_at(i);
    m += std::norm(psi.data()[i]) * std::polar(1.0, 2.0 * M_PI * s[axis] / extent);
  }
  double c = std::arg(m) * extent / (2.0 * M_PI);
  return std::fmod(c + extent, extent);
}

double circular_displacement(double from, double to, int extent) {
  double d = std::remainder(to - from, static_cast<double>(extent));
  if (d <= -extent / 2.0) d += extent;
  return d;
}

StaticityResult staticity_ratio(const LatticeSpec& lat, double lambda, double k0,
                                double time_override) {
  if (!lat.divisible_by(4))
    throw precondition_error("staticity comparison needs extents divisible by 4");
  const double center = lat.extent(0) / 2.0;
  WaveFunction psi0 = axial_packet(lat, center, lambda, k0);

  StaticityResult res;
  res.elapsed_time =
      (time_override > 0) ? time_override : lat.extent(0) / 8.0;

  Hamiltonian h_uniform = build_hamiltonian(make_scalar(lat));
  Hamiltonian h_moving = build_hamiltonian(make_dirac_gauge(lat));

  double start = centroid_axis(psi0, 0);
  WaveFunction psi_u = evolve(h_uniform, psi0, res.elapsed_time, EvolveMethod::chebyshev);
  WaveFunction psi_m = evolve(h_moving, psi0, res.elapsed_time, EvolveMethod::chebyshev);
  res.scalar_displacement = circular_displacement(start, centroid_axis(psi_u, 0),
                                                  lat.extent(0));
  res.staggered_displacement = circular_displacement(start, centroid_axis(psi_m, 0),
                                                     lat.extent(0));

  double ds = std::abs(res.scalar_displacement);
  double dm = std::abs(res.staggered_displacement);
  res.conclusive = std::max(ds, dm) >= 0.1;
  if (dm > 0.0)
    res.ratio = ds / dm;
  else
    res.ratio = (ds > 0.0) ? std::numeric_limits<double>::infinity() : 0.0;
  return res;
}

}  // namespace lathop
