#include "lathop/json_io.hpp"

#include <fstream>
#include <sstream>

#include "lathop/errors.hpp"

namespace lathop {

namespace {

nlohmann::json site_to_json(Site s) { return nlohmann::json::array({s.x, s.y, s.z}); }

Site site_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 3)
    throw config_error("site must be an array of three integers");
  return {j[0].get<int>(), j[1].get<int>(), j[2].get<int>()};
}

cplx value_from_json(const nlohmann::json& j) {
  return {j.value("re", 0.0), j.value("im", 0.0)};
}

}  // namespace

nlohmann::json hopping_to_json(const HoppingField& k) {
  const LatticeSpec& lat = k.lattice();
  nlohmann::json j;
  j["dims"] = {lat.extent(0), lat.extent(1), lat.extent(2)};
  nlohmann::json links = nlohmann::json::array();
  for (int i = 0; i < lat.volume(); ++i) {
    Site s = lat.site_at(i);
    for (Direction d : link_directions) {
      cplx v = k.amp(i, d);
      links.push_back({{"site", site_to_json(s)},
                       {"dir", direction_name(d)},
                       {"re", v.real()},
                       {"im", v.imag()}});
    }
  }
  j["links"] = std::move(links);
  nlohmann::json onsite = nlohmann::json::array();
  for (int i = 0; i < lat.volume(); ++i) {
    cplx v = k.onsite(i);
    if (v != cplx(0, 0))
      onsite.push_back({{"site", site_to_json(lat.site_at(i))},
                        {"re", v.real()},
                        {"im", v.imag()}});
  }
  j["onsite"] = std::move(onsite);
  return j;
}

HoppingField hopping_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dims"))
    throw config_error("field file needs a dims entry");
  const nlohmann::json& dims = j["dims"];
  if (!dims.is_array() || dims.size() != 3)
    throw config_error("dims must be an array of three integers");
  LatticeSpec lat(
      std::array<int, 3>{dims[0].get<int>(), dims[1].get<int>(), dims[2].get<int>()});
  HoppingField k(lat);
  if (j.contains("links")) {
    if (!j["links"].is_array()) throw config_error("links must be an array");
    for (const nlohmann::json& e : j["links"]) {
      if (!e.is_object() || !e.contains("site") || !e.contains("dir"))
        throw config_error("each link needs site and dir entries");
      k.set_amp(lat.wrap(site_from_json(e["site"])),
                direction_from_name(e["dir"].get<std::string>()),
                value_from_json(e));
    }
  }
  if (j.contains("onsite")) {
    if (!j["onsite"].is_array()) throw config_error("onsite must be an array");
    for (const nlohmann::json& e : j["onsite"]) {
      if (!e.is_object() || !e.contains("site"))
        throw config_error("each onsite entry needs a site");
      k.set_onsite(lat.wrap(site_from_json(e["site"])), value_from_json(e));
    }
  }
  return k;
}

nlohmann::json gauge_to_json(const GaugeTransform& g) {
  const LatticeSpec& lat = g.lattice();
  nlohmann::json j;
  j["dims"] = {lat.extent(0), lat.extent(1), lat.extent(2)};
  nlohmann::json phases = nlohmann::json::array();
  for (int i = 0; i < lat.volume(); ++i) {
    cplx v = g.at(i);
    phases.push_back({{"site", site_to_json(lat.site_at(i))},
                      {"re", v.real()},
                      {"im", v.imag()}});
  }
  j["phases"] = std::move(phases);
  return j;
}

nlohmann::json equivalence_to_json(const EquivalenceResult& r, double constant_tol) {
  nlohmann::json j;
  j["equivalent"] = r.equivalent;
  j["max_residual"] = r.max_residual;
  if (r.equivalent && r.gauge) {
    j["gauge"] = gauge_to_json(*r.gauge);
    bool constant = true;
    for (const cplx& p : r.gauge->phases())
      if (std::abs(p - r.gauge->at(0)) > constant_tol) {
        constant = false;
        break;
      }
    j["gauge_is_constant"] = constant;
  }
  if (!r.witness_loop.empty()) {
    nlohmann::json loop = nlohmann::json::array();
    for (const DirectedLink& l : r.witness_loop)
      loop.push_back({{"site", site_to_json(l.site)}, {"dir", direction_name(l.dir)}});
    j["witness_loop"] = std::move(loop);
  }
  return j;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw config_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (!in.good() && !in.eof()) throw config_error("failed reading " + path);
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw config_error("cannot open " + path + " for writing");
  out << text;
  if (!out.good()) throw config_error("failed writing " + path);
}

}  // namespace lathop
