#pragma once

namespace fanocert {

inline constexpr const char* kToolkitVersion = "0.1.0";
inline constexpr const char* kReportSchemaVersion = "1";

}  // namespace fanocert
