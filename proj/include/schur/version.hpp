#pragma once

namespace schur {

inline constexpr const char* kToolName = "schur-triples";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace schur
