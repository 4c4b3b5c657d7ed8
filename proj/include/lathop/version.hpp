#pragma once

namespace lathop {

inline constexpr const char* version = "0.1.0";

}  // namespace lathop
