#pragma once

#include <string>

#include "minorkit/classify.hpp"

namespace minorkit {

// Stable JSON form of a report (schema 1). Key order and number formatting
// are fixed, so equal reports serialize to identical bytes.
std::string report_to_json(const Report& r);

// Inverse of report_to_json. The witness, when present, is rebuilt over the
// serialized ring, including its target generators.
Report report_from_json(const std::string& text);

bool same_report(const Report& a, const Report& b);

// Human-oriented rendering of the same content.
std::string report_to_text(const Report& r);

} // namespace minorkit
