#pragma once

namespace extremal {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace extremal
