#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "hampow/families.hpp"
#include "hampow/theorem.hpp"

namespace hampow {

/// One line of the record stream. Field order is insertion order and stable.
using Record = nlohmann::ordered_json;

Record to_record(const BoundReport& r);
/// Throws kParse on missing or mistyped fields.
BoundReport bound_report_from_record(const Record& rec);

Record to_record(const ThresholdScan& scan);
Record to_record(const GkCertificate& cert);

/// One compact JSON object per line.
void write_records(std::ostream& out, const std::vector<Record>& records);
std::vector<Record> read_records(std::istream& in);

/// Aligned text table with columns name, n, m, lhs, rhs, holds.
void write_bound_table(std::ostream& out, const std::vector<BoundReport>& reports);

/// Aligned two-column "field  value" rendering of one record.
void write_record_table(std::ostream& out, const Record& rec);

}  // namespace hampow
