#pragma once

namespace hypersplit {

inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace hypersplit
