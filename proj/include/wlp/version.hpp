#pragma once

namespace wlp {

// Version reported in every CLI record. Fixed per build, never a timestamp,
// so identical invocations stay byte-identical.
inline constexpr const char* kVersion = "0.1.0";

}  // namespace wlp
