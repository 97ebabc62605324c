#pragma once

namespace mstinfer {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace mstinfer
