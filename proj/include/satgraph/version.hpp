#pragma once

namespace satgraph {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace satgraph
