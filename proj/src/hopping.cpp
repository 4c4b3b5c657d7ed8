#include "lathop/hopping.hpp"

#include <cmath>
#include <random>

#include "lathop/errors.hpp"

namespace lathop {

GaugeTransform::GaugeTransform(LatticeSpec lat, std::vector<cplx> phases, double tol)
    : lat_(lat), phases_(std::move(phases)) {
  if (static_cast<int>(phases_.size()) != lat_.volume())
    throw precondition_error("gauge transform size does not match lattice volume");
  for (const cplx& g : phases_)
    if (std::abs(std::abs(g) - 1.0) > tol)
      throw precondition_error("gauge transform entries must be unit modulus");
}

GaugeTransform GaugeTransform::identity(const LatticeSpec& lat) {
  return GaugeTransform(lat, std::vector<cplx>(lat.volume(), cplx(1.0, 0.0)));
}

GaugeTransform GaugeTransform::constant(const LatticeSpec& lat, cplx phase) {
  if (std::abs(std::abs(phase) - 1.0) > 1e-12)
    throw precondition_error("constant gauge phase must be unit modulus");
  return GaugeTransform(lat, std::vector<cplx>(lat.volume(), phase));
}

GaugeTransform GaugeTransform::random(const LatticeSpec& lat, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  std::vector<cplx> g(lat.volume());
  for (cplx& v : g) v = std::polar(1.0, angle(rng));
  return GaugeTransform(lat, std::move(g));
}

GaugeTransform GaugeTransform::quarter_wave(const LatticeSpec& lat) {
  if (!lat.divisible_by(4))
    throw precondition_error("quarter-wave gauge needs extents divisible by 4");
  static const cplx table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::vector<cplx> g(lat.volume());
  for (int i = 0; i < lat.volume(); ++i) {
    Site s = lat.site_at(i);
    g[i] = table[(s.x + s.y + s.z) % 4];
  }
  return GaugeTransform(lat, std::move(g));
}

HoppingField::HoppingField(LatticeSpec lat)
    : lat_(lat), links_(static_cast<std::size_t>(lat.volume()) * 6, cplx(0, 0)),
      onsite_(lat.volume(), cplx(0, 0)) {}

HoppingField make_scalar(const LatticeSpec& lat) {
  HoppingField k(lat);
  for (int i = 0; i < lat.volume(); ++i)
    for (Direction d : link_directions) k.set_amp(i, d, cplx(1, 0));
  return k;
}

HoppingField make_staggered(const LatticeSpec& lat) {
  if (!lat.all_even())
    throw precondition_error("staggered field needs even extents");
  HoppingField k(lat);
  for (int i = 0; i < lat.volume(); ++i) {
    Site s = lat.site_at(i);
    double sx = (s.x % 2 == 0) ? 1.0 : -1.0;
    double sxy = ((s.x + s.y) % 2 == 0) ? 1.0 : -1.0;
    k.set_amp(i, Direction::plus_x, cplx(1, 0));
    k.set_amp(i, Direction::minus_x, cplx(1, 0));
    k.set_amp(i, Direction::plus_y, cplx(sx, 0));
    k.set_amp(i, Direction::minus_y, cplx(sx, 0));
    k.set_amp(i, Direction::plus_z, cplx(sxy, 0));
    k.set_amp(i, Direction::minus_z, cplx(sxy, 0));
  }
  return k;
}

HoppingField make_dirac_gauge(const LatticeSpec& lat) {
  if (!lat.divisible_by(4))
    throw precondition_error("Dirac-gauge field needs extents divisible by 4");
  HoppingField k(lat);
  const cplx i_(0, 1);
  for (int idx = 0; idx < lat.volume(); ++idx) {
    Site s = lat.site_at(idx);
    double sx = (s.x % 2 == 0) ? 1.0 : -1.0;
    double sxy = ((s.x + s.y) % 2 == 0) ? 1.0 : -1.0;
    k.set_amp(idx, Direction::plus_x, i_);
    k.set_amp(idx, Direction::minus_x, -i_);
    k.set_amp(idx, Direction::plus_y, i_ * sx);
    k.set_amp(idx, Direction::minus_y, -i_ * sx);
    k.set_amp(idx, Direction::plus_z, i_ * sxy);
    k.set_amp(idx, Direction::minus_z, -i_ * sxy);
  }
  return k;
}

HoppingField apply_gauge(const HoppingField& k, const GaugeTransform& g) {
  const LatticeSpec& lat = k.lattice();
  if (!(g.lattice() == lat))
    throw precondition_error("gauge transform lattice does not match field");
  HoppingField out(lat);
  for (int i = 0; i < lat.volume(); ++i) {
    Site s = lat.site_at(i);
    for (Direction d : link_directions) {
      Site t = lat.neighbor(s, d);
      out.set_amp(i, d, g.at(t) * k.amp(i, d) / g.at(s));
    }
    out.set_onsite(i, k.onsite(i));
  }
  return out;
}

HoppingField add_susskind_mass(const HoppingField& k, double mu) {
  const LatticeSpec& lat = k.lattice();
  if (!lat.all_even())
    throw precondition_error("staggered mass needs even extents");
  HoppingField out = k;
  for (int i = 0; i < lat.volume(); ++i) {
    Site s = lat.site_at(i);
    double sign = ((s.x + s.y + s.z) % 2 == 0) ? 1.0 : -1.0;
    out.set_onsite(i, k.onsite(i) + mu * sign);
  }
  return out;
}

HoppingField add_alternating_mass(const HoppingField& k, double mu) {
  const LatticeSpec& lat = k.lattice();
  HoppingField reference = make_dirac_gauge(lat);
  if (field_distance(k, reference) > 1e-12)
    throw precondition_error(
        "alternating mass is defined on the massless Dirac-gauge field only");
  HoppingField out = k;
  const cplx i_(0, 1);
  for (int idx = 0; idx < lat.volume(); ++idx) {
    Site s = lat.site_at(idx);
    double sign = (s.x % 2 == 0) ? 1.0 : -1.0;
    out.set_amp(idx, Direction::plus_x, i_ + i_ * mu * sign);
    out.set_amp(idx, Direction::minus_x, -i_ + i_ * mu * sign);
  }
  return out;
}

bool check_hermiticity(const HoppingField& k, double tol) {
  const LatticeSpec& lat = k.lattice();
  for (int i = 0; i < lat.volume(); ++i) {
    Site s = lat.site_at(i);
    if (std::abs(k.onsite(i).imag()) > tol) return false;
    for (Direction d : link_directions) {
      Site back = lat.neighbor(s, opposite(d));
      if (std::abs(k.amp(s, opposite(d)) - std::conj(k.amp(back, d))) > tol)
        return false;
    }
  }
  return true;
}

bool links_unimodular(const HoppingField& k, double tol) {
  const LatticeSpec& lat = k.lattice();
  for (int i = 0; i < lat.volume(); ++i)
    for (Direction d : link_directions)
      if (std::abs(std::abs(k.amp(i, d)) - 1.0) > tol) return false;
  return true;
}

double field_distance(const HoppingField& a, const HoppingField& b) {
  if (!(a.lattice() == b.lattice()))
    throw precondition_error("field distance needs matching lattices");
  double worst = 0.0;
  for (int i = 0; i < a.lattice().volume(); ++i) {
    worst = std::max(worst, std::abs(a.onsite(i) - b.onsite(i)));
    for (Direction d : link_directions)
      worst = std::max(worst, std::abs(a.amp(i, d) - b.amp(i, d)));
  }
  return worst;
}

cplx path_amplitude(const HoppingField& k, const std::vector<DirectedLink>& path) {
  cplx acc(1, 0);
  for (const DirectedLink& l : path) acc *= k.amp(l.site, l.dir);
  return acc;
}

cplx plaquette(const HoppingField& k, Site corner, int axis_a, int axis_b) {
  const LatticeSpec& lat = k.lattice();
  Direction da = axis_direction(axis_a, true);
  Direction db = axis_direction(axis_b, true);
  Site s0 = lat.wrap(corner);
  Site s1 = lat.neighbor(s0, da);
  Site s2 = lat.neighbor(s1, db);
  Site s3 = lat.neighbor(s2, opposite(da));
  return path_amplitude(k, {{s0, da}, {s1, db}, {s2, opposite(da)}, {s3, opposite(db)}});
}

cplx axis_holonomy(const HoppingField& k, int axis, Site start) {
  const LatticeSpec& lat = k.lattice();
  Direction d = axis_direction(axis, true);
  Site s = lat.wrap(start);
  cplx acc(1, 0);
  for (int step = 0; step < lat.extent(axis); ++step) {
    acc *= k.amp(s, d);
    s = lat.neighbor(s, d);
  }
  return acc;
}

}  // namespace lathop
