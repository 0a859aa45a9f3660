#include "hampow/report.hpp"

#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "hampow/error.hpp"

namespace hampow {

Record to_record(const BoundReport& r) {
  Record rec;
  rec["name"] = std::string(to_string(r.name));
  rec["n"] = r.n;
  rec["m"] = r.m;
  rec["p_sharp"] = r.p_sharp ? Record(*r.p_sharp) : Record(nullptr);
  rec["k"] = r.k ? Record(*r.k) : Record(nullptr);
  rec["lhs"] = r.lhs;
  rec["rhs"] = r.rhs;
  rec["holds"] = r.holds;
  return rec;
}

BoundReport bound_report_from_record(const Record& rec) {
  try {
    BoundReport r;
    const auto name = bound_name_from_string(rec.at("name").get<std::string>());
    if (!name) throw Error(ErrorCode::kParse, "unknown bound name in record");
    r.name = *name;
    r.n = rec.at("n").get<std::size_t>();
    r.m = rec.at("m").get<std::size_t>();
    if (!rec.at("p_sharp").is_null()) r.p_sharp = rec.at("p_sharp").get<std::size_t>();
    if (!rec.at("k").is_null()) r.k = rec.at("k").get<std::size_t>();
    r.lhs = rec.at("lhs").get<double>();
    r.rhs = rec.at("rhs").get<double>();
    r.holds = rec.at("holds").get<bool>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("bound record: ") + e.what());
  }
}

Record to_record(const ThresholdScan& scan) {
  Record rec;
  rec["name"] = "threshold";
  rec["limit"] = scan.limit;
  rec["claimed_through"] = kThresholdClaim;
  rec["violations"] = scan.violations;
  rec["first_failure"] = scan.first_failure ? Record(*scan.first_failure) : Record(nullptr);
  rec["holds"] = scan.violations.empty();
  return rec;
}

Record to_record(const GkCertificate& cert) {
  Record rec;
  rec["name"] = "certify-gk";
  rec["k"] = cert.params.k;
  rec["n"] = cert.params.n;
  rec["m"] = cert.params.m;
  rec["counts_match"] = cert.counts_match;
  rec["minimally_eulerian"] = std::string(to_string(cert.minimally_eulerian));
  rec["v_degrees_unit"] = cert.v_degrees_unit;
  rec["u_subgraph_acyclic"] = cert.u_subgraph_acyclic;
  rec["min_v_distance"] = cert.min_v_distance;
  rec["distance_claim"] = cert.distance_claim;
  rec["half_k_claim"] = cert.half_k_claim;
  rec["sqrt_claim"] = cert.sqrt_claim;
  rec["pigeonhole"] = cert.pigeonhole;
  rec["lower_bound"] = cert.lower_bound;
  rec["exact"] = std::string(to_string(cert.exact));
  rec["exponent"] = cert.exponent ? Record(*cert.exponent) : Record(nullptr);
  rec["certificate_verified"] = cert.certificate_verified;
  rec["bracket"] = {cert.bracket_lo, cert.bracket_hi};
  rec["holds"] = cert.claims_hold();
  return rec;
}

void write_records(std::ostream& out, const std::vector<Record>& records) {
  for (const auto& rec : records) out << rec.dump() << '\n';
}

std::vector<Record> read_records(std::istream& in) {
  std::vector<Record> records;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      records.push_back(Record::parse(line));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kParse, std::string("record line: ") + e.what());
    }
  }
  return records;
}

void write_bound_table(std::ostream& out, const std::vector<BoundReport>& reports) {
  std::ostringstream table;
  table << std::left << std::setw(12) << "name" << std::right << std::setw(8) << "n" << std::setw(10) << "m"
        << std::setw(14) << "lhs" << std::setw(14) << "rhs" << std::setw(7) << "holds" << '\n';
  table << std::fixed << std::setprecision(3);
  for (const auto& r : reports) {
    table << std::left << std::setw(12) << to_string(r.name) << std::right << std::setw(8) << r.n << std::setw(10)
          << r.m << std::setw(14) << r.lhs << std::setw(14) << r.rhs << std::setw(7) << (r.holds ? "yes" : "NO")
          << '\n';
  }
  out << table.str();
}

void write_record_table(std::ostream& out, const Record& rec) {
  std::size_t width = 0;
  for (const auto& [key, value] : rec.items()) width = std::max(width, key.size());
  for (const auto& [key, value] : rec.items()) {
    out << std::left << std::setw(static_cast<int>(width) + 2) << key
        << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
}

}  // namespace hampow
