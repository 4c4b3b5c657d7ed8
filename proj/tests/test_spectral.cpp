#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "lathop/spectral.hpp"

using namespace lathop;

namespace {

// Multiset comparison after sorting, elementwise within tol.
void check_spectra_match(const std::vector<double>& a, const std::vector<double>& b,
                         double tol) {
  REQUIRE(a.size() == b.size());
  std::vector<double> sa = a, sb = b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  double worst = 0;
  for (std::size_t i = 0; i < sa.size(); ++i)
    worst = std::max(worst, std::abs(sa[i] - sb[i]));
  CHECK(worst < tol);
}

std::vector<double> staggered_4cubed_spectrum() {
  // 64 eigenvalues: 0 with multiplicity 8, then +-2, +-2*sqrt2, +-2*sqrt3
  // with multiplicities 12, 12, 4 per sign.
  std::vector<double> ev(8, 0.0);
  auto add = [&](double v, int mult) {
    for (int i = 0; i < mult; ++i) {
      ev.push_back(v);
      ev.push_back(-v);
    }
  };
  add(2.0, 12);
  add(2.0 * std::sqrt(2.0), 12);
  add(2.0 * std::sqrt(3.0), 4);
  return ev;
}

}  // namespace

TEST_SUITE("spectral") {

TEST_CASE("hamiltonian accumulates parallel links on small tori") {
  LatticeSpec lat(2, 2, 2);
  Hamiltonian h = build_hamiltonian(make_scalar(lat));
  Eigen::MatrixXcd m = h.dense();
  // +x and -x from the same site reach the same neighbor when L=2
  CHECK(m(0, lat.index({1, 0, 0})) == cplx(2, 0));
  CHECK(m(0, 0) == cplx(0, 0));
  check_spectra_match(spectrum_dense(h), {-6, -2, -2, -2, 2, 2, 2, 6}, 1e-12);
}

TEST_CASE("non-hermitian inputs are rejected") {
  LatticeSpec lat(4, 4, 4);
  HoppingField broken = make_scalar(lat);
  broken.set_amp(Site{0, 0, 0}, Direction::plus_x, cplx(0, 1));
  CHECK_THROWS_AS(build_hamiltonian(broken), precondition_error);
}

TEST_CASE("dense paths refuse oversized problems before allocating") {
  LatticeSpec lat(32, 32, 16);  // 16384 sites
  Hamiltonian h = build_hamiltonian(make_scalar(lat));
  CHECK_THROWS_AS(spectrum_dense(h), precondition_error);
  CHECK_THROWS_AS(ExactPropagator{h}, precondition_error);
}

TEST_CASE("gershgorin bound covers the hopping strength") {
  LatticeSpec lat(4, 4, 4);
  CHECK(build_hamiltonian(make_scalar(lat)).gershgorin_bound() == doctest::Approx(6));
  CHECK(build_hamiltonian(add_susskind_mass(make_staggered(lat), 0.5))
            .gershgorin_bound() == doctest::Approx(6.5));
}

TEST_CASE("staggered spectrum on 4x4x4 matches the closed form") {
  LatticeSpec lat(4, 4, 4);
  std::vector<double> ev = spectrum_dense(build_hamiltonian(make_staggered(lat)));
  check_spectra_match(ev, staggered_4cubed_spectrum(), 1e-9);
}

TEST_CASE("spectra are gauge invariant") {
  LatticeSpec lat(4, 4, 4);
  HoppingField k = make_staggered(lat);
  std::vector<double> ref = spectrum_dense(build_hamiltonian(k));
  HoppingField moved = apply_gauge(k, GaugeTransform::random(lat, 17));
  check_spectra_match(spectrum_dense(build_hamiltonian(moved)), ref, 1e-9);
  // same spectrum in the pure-phase writing
  check_spectra_match(spectrum_dense(build_hamiltonian(make_dirac_gauge(lat))), ref,
                      1e-9);
}

TEST_CASE("cell reduction requires a two-periodic field") {
  LatticeSpec lat(4, 4, 4);
  CHECK_THROWS_AS(bloch_bands(make_scalar(LatticeSpec(4, 3, 4))), precondition_error);
  HoppingField scrambled = apply_gauge(make_staggered(lat),
                                       GaugeTransform::random(lat, 1));
  CHECK_THROWS_AS(bloch_bands(scrambled), precondition_error);
}

TEST_CASE("band union reproduces the dense spectrum") {
  LatticeSpec lat(4, 4, 4);
  for (const HoppingField& k :
       {make_scalar(lat), make_staggered(lat), make_dirac_gauge(lat),
        add_susskind_mass(make_dirac_gauge(lat), 1.0),
        add_alternating_mass(make_dirac_gauge(lat), 0.3)}) {
    BlochSpectrum bands = bloch_bands(k);
    CHECK(bands.entries.size() == 8);
    check_spectra_match(bands.all_bands_sorted(),
                        spectrum_dense(build_hamiltonian(k)), 1e-9);
  }
}

TEST_CASE("pure-phase bands follow the sine dispersion") {
  LatticeSpec lat(4, 4, 4);
  BlochSpectrum bands = bloch_bands(make_dirac_gauge(lat));
  for (const BlochSpectrum::Entry& e : bands.entries) {
    double s2 = 0;
    for (double kv : e.k) s2 += std::sin(kv) * std::sin(kv);
    double expect = 2.0 * std::sqrt(s2);
    for (int b = 0; b < 4; ++b) CHECK(e.bands[b] == doctest::Approx(-expect).epsilon(1e-9));
    for (int b = 4; b < 8; ++b) CHECK(e.bands[b] == doctest::Approx(expect).epsilon(1e-9));
  }
  // zone center carries the eightfold zero mode
  for (double b : bands.entries[0].bands) CHECK(std::abs(b) < 1e-9);
}

TEST_CASE("the staggered mass opens a gap of exactly mu") {
  LatticeSpec lat(4, 4, 4);
  for (double mu : {0.5, 1.0}) {
    HoppingField k = add_susskind_mass(make_dirac_gauge(lat), mu);
    BlochSpectrum bands = bloch_bands(k);
    CHECK(bands.min_abs_energy() == doctest::Approx(mu).epsilon(1e-9));
    for (const BlochSpectrum::Entry& e : bands.entries) {
      double s2 = 0;
      for (double kv : e.k) s2 += std::sin(kv) * std::sin(kv);
      double expect = std::sqrt(4.0 * s2 + mu * mu);
      CHECK(e.bands[0] == doctest::Approx(-expect).epsilon(1e-9));
      CHECK(e.bands[7] == doctest::Approx(expect).epsilon(1e-9));
    }
  }
}

TEST_CASE("the alternating mass gaps the spectrum at twice mu") {
  LatticeSpec lat(4, 4, 4);
  double mu = 0.3;
  HoppingField k = add_alternating_mass(make_dirac_gauge(lat), mu);
  std::vector<double> ev = spectrum_dense(build_hamiltonian(k));
  // chiral pairing survives the mass term
  for (std::size_t i = 0; i < ev.size(); ++i)
    CHECK(ev[i] == doctest::Approx(-ev[ev.size() - 1 - i]).epsilon(1e-9));
  double min_abs = 1e9;
  for (double e : ev) min_abs = std::min(min_abs, std::abs(e));
  CHECK(min_abs == doctest::Approx(2.0 * mu).epsilon(1e-9));
}

TEST_CASE("both propagators agree and conserve norm and energy") {
  LatticeSpec lat(4, 4, 4);
  Hamiltonian h = build_hamiltonian(make_staggered(lat));
  WaveFunction psi = WaveFunction::random(lat, 42);
  double e0 = energy_expectation(h, psi);
  ExactPropagator prop(h);
  for (double t : {3.7, 100.0}) {
    WaveFunction a = prop.at(psi, t);
    WaveFunction b = evolve(h, psi, t, EvolveMethod::chebyshev);
    CHECK((a.data() - b.data()).norm() < 1e-9);
    for (const WaveFunction& w : {a, b}) {
      CHECK(std::abs(w.norm() - 1.0) < 1e-10);
      CHECK(std::abs(energy_expectation(h, w) - e0) < 1e-10);
    }
  }
  // backwards evolution undoes forwards
  WaveFunction fwd = evolve(h, psi, 7.3, EvolveMethod::chebyshev);
  WaveFunction back = evolve(h, fwd, -7.3, EvolveMethod::chebyshev);
  CHECK((back.data() - psi.data()).norm() < 1e-10);
  // t = 0 is the identity for both
  CHECK((prop.at(psi, 0).data() - psi.data()).norm() < 1e-12);
  CHECK((evolve(h, psi, 0, EvolveMethod::chebyshev).data() - psi.data()).norm() <
        1e-12);
}

TEST_CASE("propagator eigenvalues match the dense spectrum") {
  LatticeSpec lat(4, 4, 4);
  Hamiltonian h = build_hamiltonian(make_dirac_gauge(lat));
  ExactPropagator prop(h);
  std::vector<double> ev = spectrum_dense(h);
  REQUIRE(prop.eigenvalues().size() == static_cast<int>(ev.size()));
  for (std::size_t i = 0; i < ev.size(); ++i)
    CHECK(prop.eigenvalues()[i] == doctest::Approx(ev[i]).epsilon(1e-12));
}

TEST_CASE("state and operator lattices must agree") {
  Hamiltonian h = build_hamiltonian(make_scalar(LatticeSpec(4, 4, 4)));
  WaveFunction psi = WaveFunction::zero(LatticeSpec(4, 4, 2));
  CHECK_THROWS_AS(evolve(h, psi, 1.0, EvolveMethod::chebyshev), precondition_error);
  CHECK_THROWS_AS(energy_expectation(h, psi), precondition_error);
}

TEST_CASE("packet construction and width bounds") {
  LatticeSpec lat(8, 8, 8);
  CHECK_THROWS_AS(gaussian_packet(lat, {4, 4, 4}, 1.5, {0, 0, 0}), precondition_error);
  CHECK_THROWS_AS(gaussian_packet(lat, {4, 4, 4}, 2.5, {0, 0, 0}), precondition_error);
  WaveFunction psi = gaussian_packet(lat, {4, 4, 4}, 2.0, {0, 0, 0});
  CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(centroid_axis(psi, 0) == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(centroid_axis(psi, 1) == doctest::Approx(4.0).epsilon(1e-9));

  LatticeSpec slab(16, 4, 4);
  WaveFunction ax = axial_packet(slab, 5.5, 4.0, 0.3);
  CHECK(ax.norm() == doctest::Approx(1.0).epsilon(1e-12));
  // off-site centers are recovered only up to the sampling bias of the
  // circular mean (a few 1e-5 at this width)
  CHECK(centroid_axis(ax, 0) == doctest::Approx(5.5).epsilon(1e-4));
  // uniform over the transverse plane
  for (int i = 0; i < slab.volume(); ++i) {
    Site s = slab.site_at(i);
    CHECK(std::abs(ax.at(s) - ax.at({s.x, 0, 0})) < 1e-14);
  }
  CHECK_THROWS_AS(axial_packet(slab, 5.5, 8.0, 0.0), precondition_error);
}

TEST_CASE("circular displacement wraps into the half-open window") {
  CHECK(circular_displacement(15, 1, 16) == doctest::Approx(2));
  CHECK(circular_displacement(1, 15, 16) == doctest::Approx(-2));
  CHECK(circular_displacement(0, 8, 16) == doctest::Approx(8));
  CHECK(circular_displacement(8, 0, 16) == doctest::Approx(8));
  CHECK(circular_displacement(3.25, 3.5, 16) == doctest::Approx(0.25));
}

TEST_CASE("packet drift separates the uniform and moving solutions") {
  LatticeSpec lat(32, 4, 4);
  StaticityResult r = staticity_ratio(lat, 4.0, M_PI / 16.0);
  CHECK(r.conclusive);
  CHECK(r.elapsed_time == doctest::Approx(4.0));
  CHECK(r.ratio == doctest::Approx(0.198961727).epsilon(1e-6));

  StaticityResult half = staticity_ratio(lat, 4.0, M_PI / 32.0);
  CHECK(half.ratio == doctest::Approx(0.098521414).epsilon(1e-6));
  CHECK(half.ratio / r.ratio == doctest::Approx(0.5).epsilon(0.25));

  StaticityResult still = staticity_ratio(lat, 4.0, 0.0);
  CHECK(std::abs(still.scalar_displacement) < 1e-9);
  CHECK(std::abs(still.staggered_displacement) > 1.0);

  // too short a horizon is flagged rather than reported as a ratio
  StaticityResult fast = staticity_ratio(lat, 4.0, M_PI / 16.0, 1e-4);
  CHECK_FALSE(fast.conclusive);

  CHECK_THROWS_AS(staticity_ratio(LatticeSpec(6, 6, 6), 4.0, 0.1), precondition_error);
  CHECK_THROWS_AS(staticity_ratio(lat, 1.0, 0.1), precondition_error);
}

}  // TEST_SUITE
