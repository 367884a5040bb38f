#pragma once

#include <string>

#include "fpd/core.hpp"
#include "fpd/reducer.hpp"
#include "fpd/validator.hpp"

namespace fpd {

/// Parses "SIGN W1 W2 W3" (e.g. "+ 3 2 1"); weights are unbounded decimal
/// integers. Throws ParseError.
FixedPoint parse_point(const std::string& text);
std::string print_point(const FixedPoint& p);

/// One point per non-blank, non-comment ('#') line; duplicates accumulate
/// multiplicity. Throws ParseError with the offending line number.
FixedPointData parse_data(const std::string& text);

/// Canonical order, one point per line, newline-terminated; empty data
/// prints as the empty string. parse_data is a left inverse.
std::string print_data(const FixedPointData& data);

/// Decimal string -> Int (optional leading '-'). Throws ParseError.
Int parse_int(const std::string& text);

std::string certificate_to_json(const CobordismCertificate& cert, bool pretty = true);
CobordismCertificate certificate_from_json(const std::string& text);  // throws ParseError

std::string report_to_json(const ValidationReport& report, bool pretty = true);
std::string report_to_text(const ValidationReport& report);

}  // namespace fpd
