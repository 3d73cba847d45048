#pragma once

namespace fvm {

inline constexpr const char* kVersion = "0.1.0";

} // namespace fvm
