#pragma once

namespace ferrers {

inline constexpr const char kVersion[] = "1.0.0";

}  // namespace ferrers
