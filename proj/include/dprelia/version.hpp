#pragma once

namespace dprelia {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace dprelia
