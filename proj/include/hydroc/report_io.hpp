// This file is part of hydroc, released under the MIT License.

#ifndef HYDROC_REPORT_IO_HPP
#define HYDROC_REPORT_IO_HPP

#include <string>
#include <vector>

#include "hydroc/complexity.hpp"
#include "hydroc/states.hpp"

namespace hydroc {

struct StateRecord {
  StateSpec spec;
  MeasureReport report;
};

std::string space_name(Space space);
std::string method_name(Method method);

/// Fixed CSV schema; the column order never depends on how flags were given.
/// The mu list is semicolon-joined so rows stay comma-clean.
std::string csv_header();
std::string csv_row(const StateRecord& record, int digits = 17);

/// One JSON object per state/space record: the CSV fields plus a
/// `paper_refs` array naming the formulas the chosen method evaluated
/// (IDs are documented in the README formula table).
std::string json_object(const StateRecord& record);
std::string json_array(const std::vector<StateRecord>& records);

std::string text_block(const StateRecord& record);

std::vector<std::string> formula_refs(const StateRecord& record);

}  // namespace hydroc

#endif
