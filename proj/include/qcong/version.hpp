#pragma once

namespace qcong {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr long kDefaultSeed = 42;
inline constexpr int kDefaultTruncation = 40;

} // namespace qcong
