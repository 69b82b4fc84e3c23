#pragma once

// Reports shared by the command-line tool and the acceptance binary. A
// report is a table plus optional structured extras; it renders as CSV or
// as a versioned JSON document.

#include "dlab/modcheck.hpp"
#include "dlab/multiplicity.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace dlab {

inline constexpr const char* kReportFormat = "drinfeld-lab/report/v1";

struct Report {
  std::string command;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();
  bool ok = true;
  std::vector<std::string> failures; ///< names of failed hard assertions
};

std::string to_csv(const Report& r);
std::string to_structured(const Report& r);

/// Each runs in the currently configured field.
Report report_expand(long N);
Report report_battery(long N);
Report report_verify(const HarnessOptions& opt, const std::vector<Identity>& ids);
Report report_scan(long wmax, long lmax, long N);
Report report_certify(const std::string& form, const CertifyOptions& opt);
/// mu < 0 skips the M-dagger part.
Report report_spaces(long w, long m, int l, long mu, long nu);

nlohmann::ordered_json to_json(const CertificateReport& c);
nlohmann::ordered_json to_json(const BoundReport& b);

} // namespace dlab
