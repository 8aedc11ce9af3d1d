#pragma once

namespace crosscap {

inline constexpr const char* kVersion = "0.1.0";

} // namespace crosscap
