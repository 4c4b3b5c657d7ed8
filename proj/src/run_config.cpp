#include "lathop/run_config.hpp"

#include <json.hpp>

#include <cstdio>
#include <set>

#include "lathop/errors.hpp"

namespace lathop::cli {

namespace {

const char* const experiment_names[] = {
    "spectrum", "bands",     "evolve",    "verify-symmetry", "classify",
    "gauge-fix", "staticity", "spinor-check", "parity",
};

constexpr int experiment_count = 9;

using nlohmann::json;

int require_int(const json& j, const std::string& key) {
  if (!j.is_number_integer())
    throw config_error(key + " must be an integer");
  return j.get<int>();
}

double require_double(const json& j, const std::string& key) {
  if (!j.is_number())
    throw config_error(key + " must be a number");
  return j.get<double>();
}

std::string require_string(const json& j, const std::string& key) {
  if (!j.is_string())
    throw config_error(key + " must be a string");
  return j.get<std::string>();
}

std::uint64_t require_seed(const json& j, const std::string& key) {
  if (!j.is_number_integer() || (j.is_number_integer() && j.get<long long>() < 0 &&
                                 !j.is_number_unsigned()))
    throw config_error(key + " must be a nonnegative integer");
  return j.get<std::uint64_t>();
}

void require_choice(const std::string& value, std::initializer_list<const char*> allowed,
                    const std::string& key) {
  for (const char* a : allowed)
    if (value == a) return;
  std::string msg = key + " must be one of {";
  bool first = true;
  for (const char* a : allowed) {
    if (!first) msg += ", ";
    msg += a;
    first = false;
  }
  throw config_error(msg + "}");
}

}  // namespace

std::string experiment_name(Experiment e) {
  return experiment_names[static_cast<int>(e)];
}

Experiment experiment_from_name(const std::string& name) {
  for (int i = 0; i < experiment_count; ++i)
    if (name == experiment_names[i]) return static_cast<Experiment>(i);
  throw config_error("unknown experiment: " + name);
}

std::string fingerprint(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

RunConfig load_run_config(const std::string& raw_json, const std::string& subcommand) {
  json doc;
  try {
    doc = json::parse(raw_json);
  } catch (const json::parse_error& e) {
    throw config_error(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw config_error("config must be a JSON object");

  static const std::set<std::string> known = {
      "experiment", "dims",   "model",  "mass",    "mu",           "time",
      "steps",      "method", "lambda", "k0",      "k0_magnitude", "symmetry",
      "seed",       "count",  "sectors", "scramble_seed", "out",   "format"};
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (!known.count(it.key()))
      throw config_error("unknown config key: " + it.key());

  RunConfig cfg;
  cfg.experiment = experiment_from_name(subcommand);
  cfg.config_digest = fingerprint(raw_json);

  if (doc.contains("experiment")) {
    std::string e = require_string(doc["experiment"], "experiment");
    if (e != subcommand)
      throw config_error("config is for experiment '" + e + "' but the '" +
                         subcommand + "' command was invoked");
  }
  if (doc.contains("dims")) {
    const json& d = doc["dims"];
    if (!d.is_array() || d.size() != 3)
      throw config_error("dims must be an array of three integers");
    for (int i = 0; i < 3; ++i) {
      cfg.dims[i] = require_int(d[i], "dims");
      if (cfg.dims[i] < 2) throw config_error("dims entries must be at least 2");
    }
  }
  if (doc.contains("model")) {
    cfg.model = require_string(doc["model"], "model");
    require_choice(cfg.model, {"scalar", "staggered", "dirac-gauge"}, "model");
  }
  if (doc.contains("mass")) {
    cfg.mass = require_string(doc["mass"], "mass");
    require_choice(cfg.mass, {"none", "susskind", "alternating"}, "mass");
  }
  if (doc.contains("mu")) cfg.mu = require_double(doc["mu"], "mu");
  if (doc.contains("time")) cfg.time = require_double(doc["time"], "time");
  if (doc.contains("steps")) {
    cfg.steps = require_int(doc["steps"], "steps");
    if (cfg.steps < 1) throw config_error("steps must be at least 1");
  }
  if (doc.contains("method")) {
    cfg.method = require_string(doc["method"], "method");
    require_choice(cfg.method, {"exact", "chebyshev"}, "method");
  }
  if (doc.contains("lambda")) cfg.lambda = require_double(doc["lambda"], "lambda");
  if (doc.contains("k0")) {
    const json& k = doc["k0"];
    if (!k.is_array() || k.size() != 3)
      throw config_error("k0 must be an array of three numbers");
    for (int i = 0; i < 3; ++i) cfg.k0[i] = require_double(k[i], "k0");
  }
  if (doc.contains("k0_magnitude"))
    cfg.k0_magnitude = require_double(doc["k0_magnitude"], "k0_magnitude");
  if (doc.contains("symmetry")) {
    cfg.symmetry = require_string(doc["symmetry"], "symmetry");
    require_choice(cfg.symmetry, {"Rx", "Rz", "Tx", "Ty", "Tz"}, "symmetry");
  }
  if (doc.contains("seed")) cfg.seed = require_seed(doc["seed"], "seed");
  if (doc.contains("count")) {
    cfg.count = require_int(doc["count"], "count");
    if (cfg.count < 1) throw config_error("count must be at least 1");
  }
  if (doc.contains("sectors")) {
    cfg.sectors = require_int(doc["sectors"], "sectors");
    if (cfg.sectors != 4 && cfg.sectors != 8)
      throw config_error("sectors must be 4 or 8");
  }
  if (doc.contains("scramble_seed"))
    cfg.scramble_seed = require_seed(doc["scramble_seed"], "scramble_seed");
  if (doc.contains("out")) cfg.out_path = require_string(doc["out"], "out");
  if (doc.contains("format")) {
    cfg.format = require_string(doc["format"], "format");
    require_choice(cfg.format, {"csv", "json"}, "format");
  }
  return cfg;
}

}  // namespace lathop::cli
