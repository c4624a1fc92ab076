#pragma once

namespace wbalg {

inline constexpr const char* version = "1.0.0";

}  // namespace wbalg
