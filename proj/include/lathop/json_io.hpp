#pragma once

#include <json.hpp>
#include <string>

#include "lathop/symmetry.hpp"

namespace lathop {

// Field files: {"dims": [Lx,Ly,Lz], "links": [{"site":[x,y,z], "dir":"+x",
// "re":..., "im":...}, ...], "onsite": [{"site":[x,y,z], "re":..., "im":...}]}
// with sites ordered x fastest and directions +x,-x,+y,-y,+z,-z.
nlohmann::json hopping_to_json(const HoppingField& k);
HoppingField hopping_from_json(const nlohmann::json& j);

nlohmann::json gauge_to_json(const GaugeTransform& g);
nlohmann::json equivalence_to_json(const EquivalenceResult& r, double constant_tol = 1e-10);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace lathop
