#include "mzparity/scan_io.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "mzparity/version.hpp"

namespace mzparity {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_scan_csv(std::ostream& os, std::span<const ScanRecord> records,
                    const std::string& x_name, bool with_flag) {
  os << x_name;
  if (!records.empty()) {
    for (const auto& [name, value] : records.front().columns) os << ',' << name;
  }
  if (with_flag) os << ",flag";
  os << ",cutoff,tail_bound\n";
  for (const auto& rec : records) {
    os << format_double(rec.x);
    for (const auto& [name, value] : rec.columns) os << ',' << format_double(value);
    if (with_flag) os << ',' << (rec.divergent ? "divergent" : "ok");
    os << ',' << rec.cutoff << ',' << format_double(rec.tail_bound) << '\n';
  }
}

namespace {

nlohmann::json record_to_json(const ScanRecord& rec, bool with_flag) {
  nlohmann::json row;
  row["x"] = rec.x;
  auto cols = nlohmann::json::array();
  for (const auto& [name, value] : rec.columns) {
    nlohmann::json entry;
    entry["name"] = name;
    if (std::isnan(value)) {
      entry["value"] = nullptr; // JSON has no NaN
    } else {
      entry["value"] = value;
    }
    cols.push_back(std::move(entry));
  }
  row["columns"] = std::move(cols);
  if (with_flag) row["divergent"] = rec.divergent;
  row["family"] = rec.family;
  row["param"] = rec.param;
  row["cutoff"] = rec.cutoff;
  row["tail_bound"] = rec.tail_bound;
  return row;
}

} // namespace

void write_scan_json(std::ostream& os, std::span<const ScanRecord> records,
                     const std::string& x_name, bool with_flag) {
  nlohmann::json doc;
  doc["meta"] = {
      {"x_name", x_name},
      {"family", records.empty() ? "" : records.front().family},
      {"param", records.empty() ? 0.0 : records.front().param},
      {"with_flag", with_flag},
      {"tool_version", kVersion},
  };
  auto rows = nlohmann::json::array();
  for (const auto& rec : records) rows.push_back(record_to_json(rec, with_flag));
  doc["rows"] = std::move(rows);
  os << doc.dump(2) << '\n';
}

std::vector<ScanRecord> read_scan_json(std::istream& is) {
  const auto doc = nlohmann::json::parse(is);
  std::vector<ScanRecord> records;
  for (const auto& row : doc.at("rows")) {
    ScanRecord rec;
    rec.x = row.at("x").get<double>();
    for (const auto& entry : row.at("columns")) {
      const auto& v = entry.at("value");
      rec.columns.emplace_back(entry.at("name").get<std::string>(),
                               v.is_null() ? std::numeric_limits<double>::quiet_NaN()
                                           : v.get<double>());
    }
    rec.divergent = row.value("divergent", false);
    rec.family = row.at("family").get<std::string>();
    rec.param = row.at("param").get<double>();
    rec.cutoff = row.at("cutoff").get<int>();
    rec.tail_bound = row.at("tail_bound").get<double>();
    records.push_back(std::move(rec));
  }
  return records;
}

void write_joint_csv(std::ostream& os, const JointScan& joint) {
  os << "n1,n2,p\n";
  const int dim = joint.dist.cutoff + 1;
  for (int n1 = 0; n1 < dim; ++n1) {
    for (int n2 = 0; n2 < dim; ++n2) {
      os << n1 << ',' << n2 << ',' << format_double(joint.dist.at(n1, n2)) << '\n';
    }
  }
}

void write_joint_json(std::ostream& os, const JointScan& joint) {
  nlohmann::json doc;
  doc["meta"] = {
      {"family", joint.family}, {"param", joint.param},
      {"stage", joint.stage},   {"cutoff", joint.coeff_cutoff},
      {"tail_bound", joint.tail_bound}, {"grid_cutoff", joint.dist.cutoff},
      {"tool_version", kVersion},
  };
  auto rows = nlohmann::json::array();
  const int dim = joint.dist.cutoff + 1;
  for (int n1 = 0; n1 < dim; ++n1) {
    for (int n2 = 0; n2 < dim; ++n2) {
      rows.push_back({n1, n2, joint.dist.at(n1, n2)});
    }
  }
  doc["rows"] = std::move(rows);
  os << doc.dump(2) << '\n';
}

} // namespace mzparity
