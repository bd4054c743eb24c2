#pragma once

namespace matchdecay {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace matchdecay
