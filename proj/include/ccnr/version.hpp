#pragma once

namespace ccnr {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ccnr
