#include "lathop/spinor.hpp"

#include <cmath>

#include "lathop/errors.hpp"
#include "lathop/fourier.hpp"

namespace lathop {

namespace {

void check_sector_count(int n) {
  if (n != 4 && n != 8)
    throw precondition_error("sector count must be 4 or 8");
}

// Axes whose sign factors shift momentum by pi: x,y for four sectors and
// x,y,z for eight.
int sign_axis_count(int sector_count) { return sector_count == 4 ? 2 : 3; }

// k in (-pi/2, pi/2] as an integer test on the signed mode.
bool mode_in_zone(int m, int extent) {
  int ms = signed_mode(m, extent);
  return -extent < 4 * ms && 4 * ms <= extent;
}

double sector_sign(int sector, Site s) {
  int e = (sector & 1) * s.x + ((sector >> 1) & 1) * s.y + ((sector >> 2) & 1) * s.z;
  return (e % 2 == 0) ? 1.0 : -1.0;
}

using Mat2 = Eigen::Matrix2cd;

Mat2 pauli(int which) {
  const cplx i_(0, 1);
  Mat2 m;
  switch (which) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -i_, i_, 0; break;
    case 3: m << 1, 0, 0, -1; break;
    default: throw precondition_error("bad pauli index");
  }
  return m;
}

// Product over slots, slot 0 acting on the fastest sector bit:
// M[(bits'),(bits)] = prod_s slots[s](bit'_s, bit_s).
Eigen::MatrixXcd slot_product(const std::vector<Mat2>& slots) {
  const int n = 1 << slots.size();
  Eigen::MatrixXcd m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      cplx v(1, 0);
      for (std::size_t s = 0; s < slots.size(); ++s)
        v *= slots[s]((r >> s) & 1, (c >> s) & 1);
      m(r, c) = v;
    }
  return m;
}

Eigen::VectorXcd shift_field(const LatticeSpec& lat, const Eigen::VectorXcd& f,
                             Direction d) {
  Eigen::VectorXcd out(f.size());
  for (int i = 0; i < lat.volume(); ++i)
    out[i] = f[lat.index(lat.neighbor(lat.site_at(i), d))];
  return out;
}

}  // namespace

ComponentFields::ComponentFields(LatticeSpec lat, int sector_count) : lat_(lat) {
  check_sector_count(sector_count);
  if (!lat_.all_even())
    throw precondition_error("component fields need even extents");
  sectors_.assign(sector_count, Eigen::VectorXcd::Zero(lat_.volume()));
}

double ComponentFields::total_norm() const {
  double acc = 0.0;
  for (const Eigen::VectorXcd& f : sectors_) acc += f.squaredNorm();
  return std::sqrt(acc);
}

ComponentFields project_components(const WaveFunction& psi, int sector_count) {
  check_sector_count(sector_count);
  const LatticeSpec& lat = psi.lattice();
  ComponentFields out(lat, sector_count);
  const int axes = sign_axis_count(sector_count);

  Eigen::VectorXcd hat = dft_forward(lat, psi.data());
  std::vector<Eigen::VectorXcd> sector_hat(sector_count,
                                           Eigen::VectorXcd::Zero(lat.volume()));
  for (int i = 0; i < lat.volume(); ++i) {
    Site m = lat.site_at(i);
    Site folded = m;
    int sector = 0;
    for (int axis = 0; axis < axes; ++axis) {
      int extent = lat.extent(axis);
      if (!mode_in_zone(m[axis], extent)) {
        sector |= 1 << axis;
        folded[axis] = (m[axis] + extent / 2) % extent;
      }
    }
    sector_hat[sector][lat.index(folded)] = hat[i];
  }
  for (int j = 0; j < sector_count; ++j)
    out.sector(j) = dft_inverse(lat, sector_hat[j]);
  return out;
}

double bandlimit_leakage(const ComponentFields& c) {
  const LatticeSpec& lat = c.lattice();
  const int axes = sign_axis_count(c.sector_count());
  const double total = c.total_norm();
  if (total == 0.0) return 0.0;
  double worst = 0.0;
  for (int j = 0; j < c.sector_count(); ++j) {
    Eigen::VectorXcd hat = dft_forward(lat, c.sector(j));
    double out_weight = 0.0;
    for (int i = 0; i < lat.volume(); ++i) {
      Site m = lat.site_at(i);
      for (int axis = 0; axis < axes; ++axis)
        if (!mode_in_zone(m[axis], lat.extent(axis))) {
          out_weight += std::norm(hat[i]);
          break;
        }
    }
    worst = std::max(worst, std::sqrt(out_weight) / total);
  }
  return worst;
}

WaveFunction recompose(const ComponentFields& c, double leak_tol) {
  if (bandlimit_leakage(c) > leak_tol)
    throw precondition_error("sector fields are not band limited to the reduced zone");
  const LatticeSpec& lat = c.lattice();
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(lat.volume());
  for (int j = 0; j < c.sector_count(); ++j)
    for (int i = 0; i < lat.volume(); ++i)
      v[i] += sector_sign(j, lat.site_at(i)) * c.sector(j)[i];
  return WaveFunction(lat, std::move(v));
}

DiracOperator::DiracOperator(int sector_count, MassKind mass, double mu)
    : sector_count_(sector_count), mass_(mass), mu_(mu) {
  check_sector_count(sector_count);
  const Mat2 one = pauli(0), s1 = pauli(1), s2 = pauli(2), s3 = pauli(3);
  if (sector_count == 4) {
    alpha_[0] = slot_product({s3, one});
    alpha_[1] = slot_product({s1, s3});
    alpha_[2] = slot_product({s1, s1});
  } else {
    alpha_[0] = slot_product({s3, one, one});
    alpha_[1] = slot_product({s1, s3, one});
    alpha_[2] = slot_product({s1, s1, s3});
  }
  switch (mass_) {
    case MassKind::none:
      beta_ = Eigen::MatrixXcd::Zero(sector_count, sector_count);
      break;
    case MassKind::susskind:
      beta_ = slot_product({s1, s1, s1});
      break;
    case MassKind::alternating:
      beta_ = slot_product({s2, one});
      break;
  }
}

ComponentFields DiracOperator::apply(const ComponentFields& c) const {
  if (c.sector_count() != sector_count_)
    throw precondition_error("sector count does not match the operator");
  const LatticeSpec& lat = c.lattice();
  ComponentFields out(lat, sector_count_);
  const cplx i_(0, 1);

  for (int axis = 0; axis < 3; ++axis) {
    std::vector<Eigen::VectorXcd> diff(sector_count_);
    for (int j = 0; j < sector_count_; ++j)
      diff[j] = shift_field(lat, c.sector(j), axis_direction(axis, true)) -
                shift_field(lat, c.sector(j), axis_direction(axis, false));
    for (int r = 0; r < sector_count_; ++r)
      for (int j = 0; j < sector_count_; ++j) {
        cplx a = alpha_[axis](r, j);
        if (a != cplx(0, 0)) out.sector(r) += (i_ * a) * diff[j];
      }
  }

  if (mass_ == MassKind::susskind) {
    for (int r = 0; r < sector_count_; ++r)
      for (int j = 0; j < sector_count_; ++j) {
        cplx b = beta_(r, j);
        if (b != cplx(0, 0)) out.sector(r) += (mu_ * b) * c.sector(j);
      }
  } else if (mass_ == MassKind::alternating) {
    std::vector<Eigen::VectorXcd> sym(sector_count_);
    for (int j = 0; j < sector_count_; ++j)
      sym[j] = shift_field(lat, c.sector(j), Direction::plus_x) +
               shift_field(lat, c.sector(j), Direction::minus_x);
    for (int r = 0; r < sector_count_; ++r)
      for (int j = 0; j < sector_count_; ++j) {
        cplx b = beta_(r, j);
        if (b != cplx(0, 0)) out.sector(r) += (mu_ * b) * sym[j];
      }
  }
  return out;
}

Eigen::MatrixXcd DiracOperator::symbol(std::array<double, 3> k) const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(sector_count_, sector_count_);
  for (int axis = 0; axis < 3; ++axis) m += alpha_[axis] * (-2.0 * std::sin(k[axis]));
  if (mass_ == MassKind::susskind) m += mu_ * beta_;
  if (mass_ == MassKind::alternating) m += (2.0 * mu_ * std::cos(k[0])) * beta_;
  return m;
}

DiracOperator assemble_dirac(int sector_count, MassKind mass, double mu) {
  check_sector_count(sector_count);
  if (mass == MassKind::susskind && sector_count != 8)
    throw precondition_error("the staggered mass term needs eight sectors");
  if (mass == MassKind::alternating && sector_count != 4)
    throw precondition_error("the alternating mass term needs four sectors");
  return DiracOperator(sector_count, mass, mu);
}

double equivalence_residual(const HoppingField& k, const WaveFunction& psi,
                            const DiracOperator& d) {
  double n = psi.data().norm();
  if (n <= 0.0) throw precondition_error("equivalence residual of the zero state");
  Hamiltonian h = build_hamiltonian(k);
  ComponentFields c = project_components(psi, d.sector_count());
  WaveFunction rebuilt = recompose(d.apply(c));
  return (h.apply(psi.data()) - rebuilt.data()).norm() / n;
}

namespace {

Eigen::VectorXcd apply_parity(const LatticeSpec& lat, const Eigen::VectorXcd& v) {
  Eigen::VectorXcd out(v.size());
  for (int i = 0; i < lat.volume(); ++i) {
    Site s = lat.site_at(i);
    double sign = ((s.x + s.y + s.z) % 2 == 0) ? 1.0 : -1.0;
    out[i] = sign * v[lat.index({-s.x, -s.y, -s.z})];
  }
  return out;
}

}  // namespace

double parity_residual(const HoppingField& k) {
  const LatticeSpec& lat = k.lattice();
  if (!lat.all_even())
    throw precondition_error("parity check needs even extents");
  if (lat.volume() > 8192)
    throw precondition_error("parity check is limited to dimension 8192");
  Eigen::MatrixXcd h = build_hamiltonian(k).dense();

  Eigen::MatrixXcd conj = h;
  for (int j = 0; j < lat.volume(); ++j) {
    // Column j of P H P^{-1}: P applied to the column of H at the mirrored
    // index, times the sign of j.
    Site sj = lat.site_at(j);
    double sign_j = ((sj.x + sj.y + sj.z) % 2 == 0) ? 1.0 : -1.0;
    int mj = lat.index({-sj.x, -sj.y, -sj.z});
    conj.col(j) = sign_j * apply_parity(lat, h.col(mj));
  }
  double worst = 0.0;
  for (int j = 0; j < lat.volume(); ++j)
    worst = std::max(worst, (conj.col(j) - h.col(j)).cwiseAbs().sum());
  return worst;
}

double parity_squared_residual(const LatticeSpec& lat) {
  double worst = 0.0;
  for (int i = 0; i < lat.volume(); ++i) {
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(lat.volume());
    e[i] = cplx(1, 0);
    Eigen::VectorXcd twice = apply_parity(lat, apply_parity(lat, e));
    worst = std::max(worst, (twice - e).cwiseAbs().maxCoeff());
  }
  return worst;
}

double continuum_error(double k0, double lambda, int extent, double t) {
  if (lambda < 2.0)
    throw precondition_error("packet width must be at least 2");
  if (k0 < 0.0 || k0 > M_PI / 4.0 + 1e-12)
    throw precondition_error("packet momentum must lie in [0, pi/4]");
  if (extent < 8 || extent % 2 != 0)
    throw precondition_error("extent must be even and at least 8");

  DiracOperator d(4, MassKind::none, 0.0);
  auto propagator_column = [&](const std::array<double, 3>& s) {
    // exp(-i t D) u0 with D = sum alpha_i s_i; D^2 = |s|^2, so the
    // exponential closes after one power.
    double e = std::sqrt(s[0] * s[0] + s[1] * s[1] + s[2] * s[2]);
    Eigen::Vector4cd u0 = Eigen::Vector4cd::Zero();
    u0[0] = cplx(1, 0);
    if (e == 0.0) return u0;
    Eigen::Matrix4cd dm = Eigen::Matrix4cd::Zero();
    for (int axis = 0; axis < 3; ++axis) dm += d.alpha(axis) * s[axis];
    Eigen::Vector4cd out = std::cos(e * t) * u0;
    out -= cplx(0, 1) * (std::sin(e * t) / e) * (dm * u0);
    return out;
  };

  double weight_sum = 0.0;
  cplx overlap(0, 0);
  for (int mz = 0; mz < extent; ++mz)
    for (int my = 0; my < extent; ++my)
      for (int mx = 0; mx < extent; ++mx) {
        double kx = momentum_value(mx, extent);
        double ky = momentum_value(my, extent);
        double kz = momentum_value(mz, extent);
        double dk2 = (kx - k0) * (kx - k0) + ky * ky + kz * kz;
        double w = std::exp(-2.0 * lambda * lambda * dk2);
        if (w < 1e-300) continue;
        std::array<double, 3> s_lat = {-2.0 * std::sin(kx), -2.0 * std::sin(ky),
                                       -2.0 * std::sin(kz)};
        std::array<double, 3> s_cont = {-2.0 * kx, -2.0 * ky, -2.0 * kz};
        overlap += w * propagator_column(s_lat).dot(propagator_column(s_cont));
        weight_sum += w;
      }
  if (weight_sum <= 0.0) throw numerical_error("packet weight vanished");
  return 1.0 - std::abs(overlap / weight_sum);
}

}  // namespace lathop
