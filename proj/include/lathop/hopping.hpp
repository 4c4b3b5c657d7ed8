#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "lathop/lattice.hpp"

namespace lathop {

using cplx = std::complex<double>;

// Per-site phases g(s). |g(s)| = 1 is enforced at construction.
class GaugeTransform {
 public:
  GaugeTransform(LatticeSpec lat, std::vector<cplx> phases, double tol = 1e-12);

  static GaugeTransform identity(const LatticeSpec& lat);
  static GaugeTransform constant(const LatticeSpec& lat, cplx phase);
  static GaugeTransform random(const LatticeSpec& lat, std::uint64_t seed);
  // g(s) = i^{x+y+z}; single-valued on the torus only when all dims are
  // divisible by 4.
  static GaugeTransform quarter_wave(const LatticeSpec& lat);

  const LatticeSpec& lattice() const { return lat_; }
  cplx at(int site_index) const { return phases_[site_index]; }
  cplx at(Site s) const { return phases_[lat_.index(s)]; }
  const std::vector<cplx>& phases() const { return phases_; }

 private:
  LatticeSpec lat_;
  std::vector<cplx> phases_;
};

// Hopping amplitudes kappa(s, n) on every directed link plus an on-site term.
// Both directions of each link are stored explicitly, so hermiticity is a
// property one checks rather than a convention baked into the storage.
class HoppingField {
 public:
  explicit HoppingField(LatticeSpec lat);

  const LatticeSpec& lattice() const { return lat_; }

  cplx amp(int site_index, Direction n) const {
    return links_[site_index * 6 + static_cast<int>(n)];
  }
  cplx amp(Site s, Direction n) const { return amp(lat_.index(s), n); }
  cplx onsite(int site_index) const { return onsite_[site_index]; }
  cplx onsite(Site s) const { return onsite_[lat_.index(s)]; }

  void set_amp(int site_index, Direction n, cplx v) {
    links_[site_index * 6 + static_cast<int>(n)] = v;
  }
  void set_amp(Site s, Direction n, cplx v) { set_amp(lat_.index(s), n, v); }
  void set_onsite(int site_index, cplx v) { onsite_[site_index] = v; }
  void set_onsite(Site s, cplx v) { set_onsite(lat_.index(s), v); }

 private:
  LatticeSpec lat_;
  std::vector<cplx> links_;   // volume * 6, direction fastest
  std::vector<cplx> onsite_;  // volume
};

// Uniform field: kappa = 1 on every link, zero on-site.
HoppingField make_scalar(const LatticeSpec& lat);

// Sign field kappa(s,±x)=1, kappa(s,±y)=(-1)^x, kappa(s,±z)=(-1)^{x+y}.
// Requires even dims.
HoppingField make_staggered(const LatticeSpec& lat);

// The same solution class written with pure phases: kappa(s,±x)=±i,
// kappa(s,±y)=±i(-1)^x, kappa(s,±z)=±i(-1)^{x+y}. Equals the staggered field
// regauged by i^{x+y+z}; requires dims divisible by 4.
HoppingField make_dirac_gauge(const LatticeSpec& lat);

// kappa'(s,n) = g(s+n) kappa(s,n) g(s)^{-1}; on-site unchanged (static g).
HoppingField apply_gauge(const HoppingField& k, const GaugeTransform& g);

// Adds mu*(-1)^{x+y+z} to the on-site term. Requires even dims.
HoppingField add_susskind_mass(const HoppingField& k, double mu);

// Replaces the x links by kappa(s,+x) = i + i*mu*(-1)^x and
// kappa(s,-x) = -i + i*mu*(-1)^x. Input must be the massless Dirac-gauge
// field.
HoppingField add_alternating_mass(const HoppingField& k, double mu);

// kappa(s,-n) == conj(kappa(s-n, n)) on all links and Im(onsite) == 0,
// within tol.
bool check_hermiticity(const HoppingField& k, double tol = 1e-12);

// |kappa| == 1 on all links within tol (on-site not constrained).
bool links_unimodular(const HoppingField& k, double tol = 1e-12);

// max |a - b| over links and on-site entries; lattices must agree.
double field_distance(const HoppingField& a, const HoppingField& b);

struct DirectedLink {
  Site site;
  Direction dir;
  friend bool operator==(const DirectedLink&, const DirectedLink&) = default;
};

// Product of kappa over the steps of a path; gauge invariant on closed loops.
cplx path_amplitude(const HoppingField& k, const std::vector<DirectedLink>& path);

// Elementary square loop spanned by two axes, anchored at `corner`.
cplx plaquette(const HoppingField& k, Site corner, int axis_a, int axis_b);

// Straight wrap loop along an axis through `start`.
cplx axis_holonomy(const HoppingField& k, int axis, Site start);

}  // namespace lathop
