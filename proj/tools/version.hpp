#pragma once

namespace quandlescope {

inline constexpr const char* kToolName = "quandlescope";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

}  // namespace quandlescope
