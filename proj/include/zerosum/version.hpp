#pragma once

namespace zerosum {

//bump on any change to result semantics, certificates, or the JSON layout;
//caches from other versions are ignored wholesale
inline constexpr const char* kVersion = "1.0.0";

}  // namespace zerosum
