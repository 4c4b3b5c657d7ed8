#include "lathop/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>

#include "lathop/errors.hpp"
#include "lathop/parallel.hpp"

namespace lathop {

HoppingField transform_field(const HoppingField& k, const SymmetryOp& op) {
  const LatticeSpec& lat = k.lattice();
  HoppingField out(lat);
  for (int i = 0; i < lat.volume(); ++i) {
    Site s = lat.site_at(i);
    Site pre = op.apply_site_inverse(s, lat);
    for (Direction d : link_directions)
      out.set_amp(i, d, k.amp(pre, op.apply_direction_inverse(d)));
    out.set_onsite(i, k.onsite(pre));
  }
  return out;
}

namespace {

// Tree path from the origin to `target`, following recorded BFS parents.
std::vector<DirectedLink> path_from_origin(const LatticeSpec& lat,
                                           const std::vector<int>& parent_site,
                                           const std::vector<Direction>& parent_dir,
                                           int target) {
  std::vector<DirectedLink> path;
  int cur = target;
  while (parent_site[cur] >= 0) {
    path.push_back({lat.site_at(parent_site[cur]), parent_dir[cur]});
    cur = parent_site[cur];
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<DirectedLink> path_to_origin(const LatticeSpec& lat,
                                         const std::vector<int>& parent_site,
                                         const std::vector<Direction>& parent_dir,
                                         int from) {
  std::vector<DirectedLink> path;
  int cur = from;
  while (parent_site[cur] >= 0) {
    path.push_back({lat.site_at(cur), opposite(parent_dir[cur])});
    cur = parent_site[cur];
  }
  return path;
}

}  // namespace

EquivalenceResult find_gauge_equivalence(const HoppingField& a, const HoppingField& b,
                                         double tol) {
  const LatticeSpec& lat = a.lattice();
  if (!(b.lattice() == lat))
    throw precondition_error("gauge equivalence needs matching lattices");
  if (!links_unimodular(a, 1e-9) || !links_unimodular(b, 1e-9))
    throw precondition_error("gauge equivalence solver needs unit-modulus links");

  EquivalenceResult res;

  // A static phase change leaves the on-site term alone, so it must match as is.
  for (int i = 0; i < lat.volume(); ++i)
    res.max_residual = std::max(res.max_residual, std::abs(a.onsite(i) - b.onsite(i)));
  if (res.max_residual > tol) return res;

  const int vol = lat.volume();
  std::vector<cplx> g(vol, cplx(0, 0));
  std::vector<char> seen(vol, 0);
  std::vector<int> parent_site(vol, -1);
  std::vector<Direction> parent_dir(vol, Direction::plus_x);

  std::deque<int> queue;
  g[0] = cplx(1, 0);
  seen[0] = 1;
  queue.push_back(0);
  while (!queue.empty()) {
    int si = queue.front();
    queue.pop_front();
    Site s = lat.site_at(si);
    for (Direction d : link_directions) {
      int ti = lat.index(lat.neighbor(s, d));
      if (seen[ti]) continue;
      cplx v = b.amp(si, d) * g[si] / a.amp(si, d);
      g[ti] = v / std::abs(v);
      seen[ti] = 1;
      parent_site[ti] = si;
      parent_dir[ti] = d;
      queue.push_back(ti);
    }
  }

  int worst_site = -1;
  Direction worst_dir = Direction::plus_x;
  double worst = res.max_residual;
  for (int si = 0; si < vol; ++si) {
    Site s = lat.site_at(si);
    for (Direction d : link_directions) {
      int ti = lat.index(lat.neighbor(s, d));
      double r = std::abs(b.amp(si, d) - g[ti] * a.amp(si, d) / g[si]);
      if (r > worst) {
        worst = r;
        worst_site = si;
        worst_dir = d;
      }
    }
  }
  res.max_residual = worst;

  if (worst > tol) {
    // Closed loop through the offending link; its amplitude is gauge invariant
    // and differs between the two fields.
    Site s = lat.site_at(worst_site);
    int ti = lat.index(lat.neighbor(s, worst_dir));
    res.witness_loop = path_from_origin(lat, parent_site, parent_dir, worst_site);
    res.witness_loop.push_back({s, worst_dir});
    auto back = path_to_origin(lat, parent_site, parent_dir, ti);
    res.witness_loop.insert(res.witness_loop.end(), back.begin(), back.end());
    return res;
  }

  res.equivalent = true;
  res.gauge = GaugeTransform(lat, std::move(g));
  return res;
}

EquivalenceResult verify_symmetry_mod_gauge(const HoppingField& k, const SymmetryOp& op,
                                            double tol) {
  return find_gauge_equivalence(k, transform_field(k, op), tol);
}

std::vector<DirectedLink> spanning_tree_links(const LatticeSpec& lat) {
  std::vector<DirectedLink> tree;
  for (int z = 0; z + 1 < lat.extent(2); ++z)
    tree.push_back({{0, 0, z}, Direction::plus_z});
  for (int z = 0; z < lat.extent(2); ++z)
    for (int y = 0; y + 1 < lat.extent(1); ++y)
      tree.push_back({{0, y, z}, Direction::plus_y});
  for (int z = 0; z < lat.extent(2); ++z)
    for (int y = 0; y < lat.extent(1); ++y)
      for (int x = 0; x + 1 < lat.extent(0); ++x)
        tree.push_back({{x, y, z}, Direction::plus_x});
  return tree;
}

bool is_gauge_fixed(const HoppingField& k, double tol) {
  for (const DirectedLink& l : spanning_tree_links(k.lattice()))
    if (std::abs(k.amp(l.site, l.dir) - cplx(1, 0)) > tol) return false;
  return true;
}

GaugeFixResult maximal_gauge_fix(const HoppingField& k) {
  const LatticeSpec& lat = k.lattice();
  if (!links_unimodular(k, 1e-9))
    throw precondition_error("gauge fixing needs unit-modulus links");
  std::vector<cplx> g(lat.volume(), cplx(0, 0));
  g[lat.index({0, 0, 0})] = cplx(1, 0);
  // Tree links are ordered so the source phase is always known already.
  for (const DirectedLink& l : spanning_tree_links(lat)) {
    Site t = lat.neighbor(l.site, l.dir);
    cplx v = g[lat.index(l.site)] / k.amp(l.site, l.dir);
    g[lat.index(t)] = v / std::abs(v);
  }
  GaugeTransform gauge(lat, std::move(g));
  return {apply_gauge(k, gauge), gauge};
}

StabilizerReport residual_gauge_stabilizer(const HoppingField& k, double tol) {
  if (!is_gauge_fixed(k, tol))
    throw precondition_error("stabilizer analysis expects a gauge-fixed field");
  const LatticeSpec& lat = k.lattice();
  StabilizerReport rep;
  rep.only_global_phase = true;
  rep.description =
      "the " + std::to_string(spanning_tree_links(lat).size()) +
      " fixed tree links connect all " + std::to_string(lat.volume()) +
      " sites, so any phase change preserving them is constant along the tree; "
      "the residual freedom is a single global phase";
  return rep;
}

HoppingField make_phase_ansatz(const LatticeSpec& lat, double alpha, double beta,
                               double gamma) {
  const double two_pi = 2.0 * M_PI;
  auto quantized = [](double phi, int extent) {
    double q = phi * extent / (2.0 * M_PI);
    return std::abs(q - std::round(q)) < 1e-9;
  };
  if (!quantized(alpha, lat.extent(0)) || !quantized(beta, lat.extent(0)) ||
      !quantized(gamma, lat.extent(1)))
    throw precondition_error(
        "phase ansatz parameters must be multiples of 2*pi over the relevant extent");
  (void)two_pi;

  HoppingField k(lat);
  for (int i = 0; i < lat.volume(); ++i) {
    Site s = lat.site_at(i);
    cplx py = std::polar(1.0, alpha * s.x);
    cplx pz = std::polar(1.0, beta * s.x + gamma * s.y);
    k.set_amp(i, Direction::plus_x, cplx(1, 0));
    k.set_amp(i, Direction::minus_x, cplx(1, 0));
    k.set_amp(i, Direction::plus_y, py);
    k.set_amp(i, Direction::minus_y, std::conj(py));
    k.set_amp(i, Direction::plus_z, pz);
    k.set_amp(i, Direction::minus_z, std::conj(pz));
  }
  return k;
}

std::vector<SolutionClass> classify_symmetric_configs(const LatticeSpec& lat) {
  if (!lat.all_even())
    throw precondition_error("classification needs even extents");
  const int lx = lat.extent(0);
  const int ly = lat.extent(1);
  const int n_candidates = lx * lx * ly;
  const auto generators = symmetry_generators();

  std::vector<char> survives(n_candidates, 0);
  parallel_for(n_candidates, [&](int idx) {
    int a = idx % lx;
    int b = (idx / lx) % lx;
    int c = idx / (lx * lx);
    double alpha = 2.0 * M_PI * a / lx;
    double beta = 2.0 * M_PI * b / lx;
    double gamma = 2.0 * M_PI * c / ly;
    HoppingField k = make_phase_ansatz(lat, alpha, beta, gamma);
    for (const SymmetryOp& op : generators)
      if (!verify_symmetry_mod_gauge(k, op).equivalent) return;
    survives[idx] = 1;
  });

  std::vector<SolutionClass> classes;
  for (int idx = 0; idx < n_candidates; ++idx) {
    if (!survives[idx]) continue;
    int a = idx % lx;
    int b = (idx / lx) % lx;
    int c = idx / (lx * lx);
    double alpha = 2.0 * M_PI * a / lx;
    double beta = 2.0 * M_PI * b / lx;
    double gamma = 2.0 * M_PI * c / ly;
    HoppingField k = make_phase_ansatz(lat, alpha, beta, gamma);
    bool merged = false;
    for (const SolutionClass& cls : classes)
      if (find_gauge_equivalence(cls.representative, k).equivalent) {
        merged = true;
        break;
      }
    if (!merged) classes.push_back({alpha, beta, gamma, std::move(k)});
  }
  std::sort(classes.begin(), classes.end(), [](const SolutionClass& u, const SolutionClass& v) {
    if (u.alpha != v.alpha) return u.alpha < v.alpha;
    if (u.beta != v.beta) return u.beta < v.beta;
    return u.gamma < v.gamma;
  });
  return classes;
}

OnsiteReport classify_onsite(const HoppingField& k, const std::vector<SymmetryOp>& generators,
                             double tol) {
  const LatticeSpec& lat = k.lattice();
  OnsiteReport rep;
  for (const SymmetryOp& op : generators)
    for (int i = 0; i < lat.volume(); ++i) {
      Site s = lat.site_at(i);
      Site pre = op.apply_site_inverse(s, lat);
      cplx v = k.onsite(s);
      cplx w = k.onsite(pre);
      if (std::abs(v - w) > tol) rep.violations.push_back({op.name, s, pre, v, w});
    }
  rep.invariant = rep.violations.empty();
  if (rep.invariant) rep.constant = k.onsite(0).real();
  return rep;
}

OnsiteRemoval gauge_away_onsite(const HoppingField& k, double tol) {
  const LatticeSpec& lat = k.lattice();
  cplx c0 = k.onsite(0);
  if (std::abs(c0.imag()) > tol)
    throw precondition_error("on-site term must be real to be a phase");
  for (int i = 0; i < lat.volume(); ++i)
    if (std::abs(k.onsite(i) - c0) > tol)
      throw precondition_error("only a constant on-site term can be gauged away");

  OnsiteRemoval out{k, c0.real(), ""};
  for (int i = 0; i < lat.volume(); ++i) out.field.set_onsite(i, cplx(0, 0));
  char buf[128];
  std::snprintf(buf, sizeof(buf), "psi(s,t) -> exp(-i*%.17g*t) * psi(s,t)", c0.real());
  out.prescription = buf;
  return out;
}

}  // namespace lathop
