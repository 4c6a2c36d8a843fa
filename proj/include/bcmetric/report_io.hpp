#pragma once

#include <ostream>
#include <string>

#include "bcmetric/harness.hpp"

namespace bcmetric {

/// Machine-readable report (JSON). Reals carry 12 significant digits, field
/// order is fixed, and wall time is left out so that identical runs produce
/// identical bytes.
std::string report_to_json(const VerificationReport& report);

/// Human summary, one line per check, including wall time.
void write_report_text(std::ostream& out, const VerificationReport& report);

std::string status_name(CheckStatus status);

/// Rounds to 12 significant digits.
double round12(double v);

}  // namespace bcmetric
