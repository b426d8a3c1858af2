#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "supercong/congruence.hpp"
#include "supercong/highprec.hpp"
#include "supercong/qseries.hpp"
#include "supercong/quadforms.hpp"

namespace supercong {

using ojson = nlohmann::ordered_json;

struct ReportRow {
  std::string spec_id;
  std::optional<std::uint64_t> p;
  std::string outcome;  // pass | fail | skip
  std::string status = "proven";
  bool anomaly = false;
  std::optional<std::string> lhs, rhs;
  std::optional<std::int64_t> x, y;
  ojson details = ojson::object();
};

struct ReportSummary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skip = 0;
  std::size_t anomalies = 0;
  std::size_t gating_failures = 0;
  std::size_t nongating_failures = 0;
};

struct Report {
  ojson run = ojson::object();
  std::vector<ReportRow> rows;

  ReportSummary summary() const;
  void append(const Report& other);
};

enum class Format { Table, Json, Csv };
std::optional<Format> parse_format(const std::string& s);

void emit_report(const Report& report, Format format, std::ostream& out);
ojson to_json(const Report& report);
/// Counts recovered from emitted JSON.
ReportSummary summary_from_json(const ojson& j);

/// 0 when no proven check failed (and, when strict, no check at all).
int exit_code(const ReportSummary& s, bool strict);

Report congruence_report(const SweepReport& sweep);
Report qseries_report(const std::vector<IdentityCheck>& checks);
Report numeric_report(const std::vector<NumericResult>& results);
Report identity_report(const std::vector<IdentityResult>& results);
Report lemma23_report(const std::vector<Lemma23Case>& cases);

}  // namespace supercong
