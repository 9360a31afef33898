#pragma once

namespace lenscs {

inline constexpr const char* kToolVersion = "0.1.0";

}
