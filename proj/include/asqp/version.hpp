#pragma once

namespace asqp {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace asqp
