#pragma once

namespace rstre {

inline constexpr const char* kArtifactVersion = "0.1.0";

}  // namespace rstre
