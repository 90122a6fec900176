#pragma once

namespace csrec {

inline constexpr const char* kToolVersion = "csrec 0.1.0";
inline constexpr int kFormatVersion = 1;

}  // namespace csrec
