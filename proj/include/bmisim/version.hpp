#pragma once

namespace bmisim {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace bmisim
