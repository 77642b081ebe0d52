#pragma once

namespace spectra {

inline constexpr const char* kVersion = "0.1.0";
// Bumped whenever a JSON record changes shape.
inline constexpr int kSchemaVersion = 1;

}  // namespace spectra
