#pragma once

namespace fdrseq {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace fdrseq
