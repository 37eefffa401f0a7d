#ifndef TGS_REPORT_HPP
#define TGS_REPORT_HPP

#include <string>

#include "tgs/kgroup.hpp"

namespace tgs {

inline constexpr unsigned kReportSchemaVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";

// Stable digest of the input group: degree plus generator image arrays.
std::string input_digest(const Group& g);

struct ReportRecord {
  unsigned schema_version = kReportSchemaVersion;
  std::string tool_version = kToolVersion;
  std::string mode;
  std::string digest;
  Caps caps;
  KReport report;
};

// Machine format; identical runs serialize identically apart from the
// timing field.
std::string record_to_json(const ReportRecord& rec);
ReportRecord record_from_json(const std::string& text);

std::string report_text(const KReport& rep);

}  // namespace tgs

#endif
