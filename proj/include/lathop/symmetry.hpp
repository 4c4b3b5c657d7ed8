#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lathop/hopping.hpp"

namespace lathop {

// Pullback of the field under a lattice symmetry:
// kappa'(s, n) = kappa(S^{-1} s, S^{-1} n), onsite'(s) = onsite(S^{-1} s).
HoppingField transform_field(const HoppingField& k, const SymmetryOp& op);

struct EquivalenceResult {
  bool equivalent = false;
  // Set when equivalent: g with g(s+n) a(s,n) g(s)^{-1} = b(s,n), g(origin)=1.
  std::optional<GaugeTransform> gauge;
  double max_residual = 0.0;
  // Set when inequivalent: a closed loop whose amplitude differs between the
  // two fields. Starts and ends at the origin.
  std::vector<DirectedLink> witness_loop;
};

// Decides whether two unimodular fields differ by a site-local phase change.
// Phases are propagated over a spanning tree from the origin; every off-tree
// link then either closes consistently or yields a witness loop.
EquivalenceResult find_gauge_equivalence(const HoppingField& a, const HoppingField& b,
                                         double tol = 1e-10);

EquivalenceResult verify_symmetry_mod_gauge(const HoppingField& k, const SymmetryOp& op,
                                            double tol = 1e-10);

// Tree links carrying the gauge fixing: all +x links except the wrap, +y links
// in the x=0 plane except the wrap, +z links on the x=y=0 line except the wrap.
std::vector<DirectedLink> spanning_tree_links(const LatticeSpec& lat);
bool is_gauge_fixed(const HoppingField& k, double tol = 1e-10);

struct GaugeFixResult {
  HoppingField field;
  GaugeTransform gauge;
};

// Gauges all spanning-tree links to 1. Loop amplitudes are untouched, so the
// result is a canonical form: gauge-equivalent inputs map to the same field.
GaugeFixResult maximal_gauge_fix(const HoppingField& k);

struct StabilizerReport {
  bool only_global_phase = false;
  std::string description;
};

// Any gauge transform preserving the fixed tree links is constant along the
// tree, and the tree spans every site. Input must be gauge fixed.
StabilizerReport residual_gauge_stabilizer(const HoppingField& k, double tol = 1e-10);

// One-parameter family kappa(s,+x)=1, kappa(s,+y)=e^{i alpha x},
// kappa(s,+z)=e^{i(beta x + gamma y)}; negative directions by hermiticity.
// alpha, beta quantized in 2*pi/Lx, gamma in 2*pi/Ly for single-valuedness.
HoppingField make_phase_ansatz(const LatticeSpec& lat, double alpha, double beta,
                               double gamma);

struct SolutionClass {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  HoppingField representative;
};

// Filters every torus-consistent ansatz triple through the five symmetry
// generators and groups the survivors into gauge-equivalence classes.
// Requires even dims. Expected outcome: the uniform class and the sign class.
std::vector<SolutionClass> classify_symmetric_configs(const LatticeSpec& lat);

struct OnsiteViolation {
  std::string generator;
  Site site;
  Site mapped_site;
  cplx value;
  cplx mapped_value;
};

struct OnsiteReport {
  bool invariant = false;
  double constant = 0.0;  // meaningful when invariant
  std::vector<OnsiteViolation> violations;
};

// Strict (not mod-gauge) invariance of the on-site field under the given
// generators; unit translations alone force a constant.
OnsiteReport classify_onsite(const HoppingField& k, const std::vector<SymmetryOp>& generators,
                             double tol = 1e-12);

struct OnsiteRemoval {
  HoppingField field;
  double constant = 0.0;
  std::string prescription;  // the time-dependent phase that absorbs it
};

// A constant on-site term c is absorbed by g(t) = exp(-i c t); the returned
// field has zero on-site and an otherwise identical spectrum shifted by -c.
OnsiteRemoval gauge_away_onsite(const HoppingField& k, double tol = 1e-12);

}  // namespace lathop
