#pragma once

namespace zipftk {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace zipftk
