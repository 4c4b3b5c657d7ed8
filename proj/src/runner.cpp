#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lathop/errors.hpp"
#include "lathop/json_io.hpp"
#include "lathop/parallel.hpp"
#include "lathop/run_config.hpp"
#include "lathop/spectral.hpp"
#include "lathop/spinor.hpp"
#include "lathop/symmetry.hpp"
#include "lathop/version.hpp"

namespace lathop::cli {

namespace {

using nlohmann::json;

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string fmt(bool b) { return b ? "true" : "false"; }

HoppingField make_model(const RunConfig& cfg) {
  LatticeSpec lat(cfg.dims);
  HoppingField k = [&] {
    if (cfg.model == "scalar") return make_scalar(lat);
    if (cfg.model == "staggered") return make_staggered(lat);
    return make_dirac_gauge(lat);
  }();
  if (cfg.mass == "susskind") k = add_susskind_mass(k, cfg.mu);
  if (cfg.mass == "alternating") k = add_alternating_mass(k, cfg.mu);
  return k;
}

MassKind mass_kind(const std::string& name) {
  if (name == "none") return MassKind::none;
  if (name == "susskind") return MassKind::susskind;
  return MassKind::alternating;
}

SymmetryOp symmetry_from_name(const std::string& name) {
  if (name == "Rx") return SymmetryOp::rotation_x();
  if (name == "Rz") return SymmetryOp::rotation_z();
  if (name == "Tx") return SymmetryOp::translation({1, 0, 0});
  if (name == "Ty") return SymmetryOp::translation({0, 1, 0});
  return SymmetryOp::translation({0, 0, 1});
}

// Output document that renders to CSV (meta as comment lines) or JSON.
class ResultDoc {
 public:
  ResultDoc(const RunConfig& cfg) : cfg_(cfg) {
    meta_["tool"] = "lathop";
    meta_["version"] = version;
    meta_["experiment"] = experiment_name(cfg.experiment);
    meta_["config"] = cfg.config_digest;
    meta_["seed"] = cfg.seed;
  }

  void set_header(std::vector<std::string> columns) { header_ = std::move(columns); }
  void add_row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }
  // For JSON output the rows are mirrored as structured values.
  void set_results(json j) { results_ = std::move(j); }

  std::string render() const {
    if (cfg_.format == "json") {
      json doc;
      doc["meta"] = meta_;
      doc["results"] = results_;
      return doc.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "# tool=lathop\n# version=" << version
        << "\n# experiment=" << experiment_name(cfg_.experiment)
        << "\n# config=" << cfg_.config_digest << "\n# seed=" << cfg_.seed << "\n";
    bool first = true;
    for (const std::string& c : header_) {
      out << (first ? "" : ",") << c;
      first = false;
    }
    out << "\n";
    for (const auto& row : rows_) {
      first = true;
      for (const std::string& c : row) {
        out << (first ? "" : ",") << c;
        first = false;
      }
      out << "\n";
    }
    return out.str();
  }

 private:
  const RunConfig& cfg_;
  json meta_;
  json results_;
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

std::string run_spectrum(const RunConfig& cfg) {
  Hamiltonian h = build_hamiltonian(make_model(cfg));
  std::vector<double> ev = spectrum_dense(h);
  ResultDoc doc(cfg);
  doc.set_header({"index", "energy"});
  json energies = json::array();
  for (std::size_t i = 0; i < ev.size(); ++i) {
    doc.add_row({std::to_string(i), fmt(ev[i])});
    energies.push_back(ev[i]);
  }
  doc.set_results({{"energies", energies}});
  return doc.render();
}

std::string run_bands(const RunConfig& cfg) {
  BlochSpectrum sp = bloch_bands(make_model(cfg));
  ResultDoc doc(cfg);
  doc.set_header({"kx", "ky", "kz", "band0", "band1", "band2", "band3", "band4",
                  "band5", "band6", "band7"});
  json entries = json::array();
  for (const BlochSpectrum::Entry& e : sp.entries) {
    std::vector<std::string> row = {fmt(e.k[0]), fmt(e.k[1]), fmt(e.k[2])};
    for (double b : e.bands) row.push_back(fmt(b));
    doc.add_row(std::move(row));
    entries.push_back({{"k", e.k}, {"bands", e.bands}});
  }
  doc.set_results({{"entries", entries}});
  return doc.render();
}

std::string run_evolve(const RunConfig& cfg) {
  if (cfg.time < 0)
    throw config_error("evolve needs a nonnegative time");
  LatticeSpec lat(cfg.dims);
  Hamiltonian h = build_hamiltonian(make_model(cfg));
  WaveFunction psi0 = gaussian_packet(
      lat, {lat.extent(0) / 2.0, lat.extent(1) / 2.0, lat.extent(2) / 2.0},
      cfg.lambda, cfg.k0);

  ResultDoc doc(cfg);
  doc.set_header({"t", "norm", "energy", "centroid_x", "centroid_y", "centroid_z"});
  json samples = json::array();

  const bool exact = cfg.method == "exact";
  std::unique_ptr<ExactPropagator> prop;
  if (exact) prop = std::make_unique<ExactPropagator>(h);
  for (int j = 0; j <= cfg.steps; ++j) {
    double t = cfg.time * j / cfg.steps;
    WaveFunction psi = exact ? prop->at(psi0, t)
                             : evolve(h, psi0, t, EvolveMethod::chebyshev);
    double cx = centroid_axis(psi, 0);
    double cy = centroid_axis(psi, 1);
    double cz = centroid_axis(psi, 2);
    double en = energy_expectation(h, psi);
    double nn = psi.norm();
    doc.add_row({fmt(t), fmt(nn), fmt(en), fmt(cx), fmt(cy), fmt(cz)});
    samples.push_back({{"t", t},
                       {"norm", nn},
                       {"energy", en},
                       {"centroid", {cx, cy, cz}}});
  }
  doc.set_results({{"samples", samples}});
  return doc.render();
}

std::string run_verify_symmetry(const RunConfig& cfg) {
  HoppingField k = make_model(cfg);
  SymmetryOp op = symmetry_from_name(cfg.symmetry);
  EquivalenceResult r = verify_symmetry_mod_gauge(k, op);

  ResultDoc doc(cfg);
  doc.set_header({"key", "value"});
  doc.add_row({"generator", cfg.symmetry});
  doc.add_row({"equivalent", fmt(r.equivalent)});
  doc.add_row({"max_residual", fmt(r.max_residual)});
  json res = equivalence_to_json(r);
  res["generator"] = cfg.symmetry;
  if (!r.witness_loop.empty()) {
    HoppingField moved = transform_field(k, op);
    cplx a = path_amplitude(k, r.witness_loop);
    cplx b = path_amplitude(moved, r.witness_loop);
    doc.add_row({"witness_length", std::to_string(r.witness_loop.size())});
    doc.add_row({"witness_amp_re", fmt(a.real())});
    doc.add_row({"witness_amp_im", fmt(a.imag())});
    doc.add_row({"witness_amp_mapped_re", fmt(b.real())});
    doc.add_row({"witness_amp_mapped_im", fmt(b.imag())});
    res["witness_amplitude"] = {{"re", a.real()}, {"im", a.imag()}};
    res["witness_amplitude_mapped"] = {{"re", b.real()}, {"im", b.imag()}};
  }
  doc.set_results(std::move(res));
  return doc.render();
}

std::string run_classify(const RunConfig& cfg) {
  LatticeSpec lat(cfg.dims);
  std::vector<SolutionClass> classes = classify_symmetric_configs(lat);
  ResultDoc doc(cfg);
  doc.set_header({"alpha", "beta", "gamma"});
  json arr = json::array();
  for (const SolutionClass& c : classes) {
    doc.add_row({fmt(c.alpha), fmt(c.beta), fmt(c.gamma)});
    arr.push_back({{"alpha", c.alpha}, {"beta", c.beta}, {"gamma", c.gamma}});
  }
  doc.set_results({{"count", classes.size()}, {"classes", arr}});
  return doc.render();
}

std::string run_gauge_fix(const RunConfig& cfg) {
  HoppingField k = make_model(cfg);
  HoppingField input = cfg.scramble_seed
                           ? apply_gauge(k, GaugeTransform::random(k.lattice(),
                                                                   *cfg.scramble_seed))
                           : k;
  bool already = is_gauge_fixed(input);
  GaugeFixResult fixed = maximal_gauge_fix(input);
  GaugeFixResult reference = maximal_gauge_fix(k);
  double tree_residual = 0.0;
  for (const DirectedLink& l : spanning_tree_links(k.lattice()))
    tree_residual = std::max(tree_residual,
                             std::abs(fixed.field.amp(l.site, l.dir) - cplx(1, 0)));
  double canonical_distance = field_distance(fixed.field, reference.field);
  StabilizerReport stab = residual_gauge_stabilizer(fixed.field);

  ResultDoc doc(cfg);
  doc.set_header({"key", "value"});
  doc.add_row({"input_gauge_fixed", fmt(already)});
  doc.add_row({"tree_residual", fmt(tree_residual)});
  doc.add_row({"canonical_distance", fmt(canonical_distance)});
  doc.add_row({"stabilizer_global_phase_only", fmt(stab.only_global_phase)});
  json res;
  res["input_gauge_fixed"] = already;
  res["tree_residual"] = tree_residual;
  res["canonical_distance"] = canonical_distance;
  res["stabilizer"] = {{"only_global_phase", stab.only_global_phase},
                       {"description", stab.description}};
  res["gauge"] = gauge_to_json(fixed.gauge);
  res["field"] = hopping_to_json(fixed.field);
  doc.set_results(std::move(res));
  return doc.render();
}

std::string run_staticity(const RunConfig& cfg) {
  LatticeSpec lat(cfg.dims);
  StaticityResult r = staticity_ratio(lat, cfg.lambda, cfg.k0_magnitude, cfg.time);
  ResultDoc doc(cfg);
  doc.set_header({"key", "value"});
  doc.add_row({"ratio", fmt(r.ratio)});
  doc.add_row({"scalar_displacement", fmt(r.scalar_displacement)});
  doc.add_row({"staggered_displacement", fmt(r.staggered_displacement)});
  doc.add_row({"elapsed_time", fmt(r.elapsed_time)});
  doc.add_row({"conclusive", fmt(r.conclusive)});
  doc.set_results({{"ratio", r.ratio},
                   {"scalar_displacement", r.scalar_displacement},
                   {"staggered_displacement", r.staggered_displacement},
                   {"elapsed_time", r.elapsed_time},
                   {"conclusive", r.conclusive}});
  return doc.render();
}

std::string run_spinor_check(const RunConfig& cfg) {
  LatticeSpec lat(cfg.dims);
  HoppingField k = make_model(cfg);
  DiracOperator d = assemble_dirac(cfg.sectors, mass_kind(cfg.mass), cfg.mu);
  double worst = 0.0;
  double mean = 0.0;
  for (int i = 0; i < cfg.count; ++i) {
    WaveFunction psi = WaveFunction::random(lat, cfg.seed + i);
    double r = equivalence_residual(k, psi, d);
    worst = std::max(worst, r);
    mean += r;
  }
  mean /= cfg.count;
  ResultDoc doc(cfg);
  doc.set_header({"key", "value"});
  doc.add_row({"samples", std::to_string(cfg.count)});
  doc.add_row({"max_residual", fmt(worst)});
  doc.add_row({"mean_residual", fmt(mean)});
  doc.set_results({{"samples", cfg.count},
                   {"max_residual", worst},
                   {"mean_residual", mean}});
  return doc.render();
}

std::string run_parity(const RunConfig& cfg) {
  LatticeSpec lat(cfg.dims);
  double hr = parity_residual(make_model(cfg));
  double pr = parity_squared_residual(lat);
  ResultDoc doc(cfg);
  doc.set_header({"key", "value"});
  doc.add_row({"commutator_norm", fmt(hr)});
  doc.add_row({"involution_residual", fmt(pr)});
  doc.set_results({{"commutator_norm", hr}, {"involution_residual", pr}});
  return doc.render();
}

}  // namespace

std::string run_experiment(const RunConfig& cfg) {
  switch (cfg.experiment) {
    case Experiment::spectrum: return run_spectrum(cfg);
    case Experiment::bands: return run_bands(cfg);
    case Experiment::evolve: return run_evolve(cfg);
    case Experiment::verify_symmetry: return run_verify_symmetry(cfg);
    case Experiment::classify: return run_classify(cfg);
    case Experiment::gauge_fix: return run_gauge_fix(cfg);
    case Experiment::staticity: return run_staticity(cfg);
    case Experiment::spinor_check: return run_spinor_check(cfg);
    case Experiment::parity: return run_parity(cfg);
  }
  throw config_error("unknown experiment");
}

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"quantum hopping on a cubic periodic lattice"};
  app.set_version_flag("--version", std::string(version));
  app.require_subcommand(0, 1);

  struct Flags {
    std::string config_path;
    std::string out_path;
    std::string format;
    std::uint64_t seed = 0;
    bool seed_set = false;
    int threads = 0;
  } flags;

  static const char* const subcommand_help[] = {
      "all eigenvalues of the hopping Hamiltonian",
      "eight-band reduction over the doubled cell",
      "propagate a Gaussian packet and sample observables",
      "check one symmetry generator modulo a phase change",
      "enumerate the symmetric solution classes",
      "canonical gauge fixing over a spanning tree",
      "packet drift under the uniform field vs the moving solution",
      "residual of the component-field rewriting",
      "parity conjugation residuals",
  };

  std::vector<CLI::App*> subs;
  for (int i = 0; i < 9; ++i) {
    CLI::App* sub = app.add_subcommand(experiment_name(static_cast<Experiment>(i)),
                                       subcommand_help[i]);
    sub->add_option("--config", flags.config_path, "JSON config file");
    sub->add_option("--out", flags.out_path, "output file (default stdout)");
    sub->add_option("--format", flags.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--seed", flags.seed, "override the config seed")
        ->trigger_on_parse()
        ->each([&flags](const std::string&) { flags.seed_set = true; });
    sub->add_option("--threads", flags.threads, "worker threads (0 = hardware)");
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  CLI::App* active = nullptr;
  for (CLI::App* sub : subs)
    if (sub->parsed()) active = sub;
  if (!active) {
    std::cerr << app.help() << std::flush;
    return 1;
  }

  try {
    std::string raw = flags.config_path.empty() ? std::string("{}")
                                                : read_text_file(flags.config_path);
    RunConfig cfg = load_run_config(raw, active->get_name());
    if (!flags.out_path.empty()) cfg.out_path = flags.out_path;
    if (!flags.format.empty()) cfg.format = flags.format;
    if (flags.seed_set) cfg.seed = flags.seed;
    set_max_threads(flags.threads);

    std::string text = run_experiment(cfg);
    if (cfg.out_path.empty())
      std::cout << text << std::flush;
    else
      write_text_file(cfg.out_path, text);
    return 0;
  } catch (const config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const precondition_error& e) {
    std::cerr << "precondition error: " << e.what() << "\n";
    return 2;
  } catch (const numerical_error& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace lathop::cli
