#pragma once

namespace holonomy {

inline constexpr const char* kToolName = "holonomy";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kReportSchemaVersion = 1;

}  // namespace holonomy
