#include "supercong/report.hpp"

#include <algorithm>
#include <sstream>

namespace supercong {

ReportSummary Report::summary() const {
  ReportSummary s;
  for (const auto& r : rows) {
    const bool gating = r.status == "proven";
    if (r.outcome == "pass") {
      ++s.pass;
    } else if (r.outcome == "fail") {
      ++s.fail;
      ++(gating ? s.gating_failures : s.nongating_failures);
    } else {
      ++s.skip;
      if (r.anomaly) {
        ++s.anomalies;
        ++(gating ? s.gating_failures : s.nongating_failures);
      }
    }
  }
  return s;
}

void Report::append(const Report& other) {
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
  for (const auto& [k, v] : other.run.items())
    if (!run.contains(k)) run[k] = v;
}

std::optional<Format> parse_format(const std::string& s) {
  if (s == "table") return Format::Table;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  return std::nullopt;
}

namespace {

ojson summary_json(const ReportSummary& s) {
  return ojson{{"pass", s.pass},
               {"fail", s.fail},
               {"skip", s.skip},
               {"anomalies", s.anomalies},
               {"gating_failures", s.gating_failures},
               {"nongating_failures", s.nongating_failures}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

template <typename T>
std::string opt_str(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_same_v<T, std::string>)
    return *v;
  else
    return std::to_string(*v);
}

std::string details_text(const ReportRow& r) {
  std::ostringstream os;
  bool first = true;
  auto put = [&](const std::string& k, const std::string& v) {
    if (!first) os << ' ';
    first = false;
    os << k << '=' << v;
  };
  if (r.lhs) put("lhs", *r.lhs);
  if (r.rhs) put("rhs", *r.rhs);
  if (r.x) put("x", std::to_string(*r.x));
  if (r.y) put("y", std::to_string(*r.y));
  for (const auto& [k, v] : r.details.items()) put(k, v.is_string() ? v.get<std::string>() : v.dump());
  return os.str();
}

}  // namespace

ojson to_json(const Report& report) {
  ojson rows = ojson::array();
  for (const auto& r : report.rows) {
    ojson row{{"spec_id", r.spec_id}};
    if (r.p) row["p"] = *r.p;
    row["outcome"] = r.outcome;
    ojson d{{"status", r.status}};
    if (r.lhs) d["lhs"] = *r.lhs;
    if (r.rhs) d["rhs"] = *r.rhs;
    if (r.x) d["x"] = *r.x;
    if (r.y) d["y"] = *r.y;
    for (const auto& [k, v] : r.details.items()) d[k] = v;
    row["details"] = std::move(d);
    rows.push_back(std::move(row));
  }
  return ojson{{"run", report.run}, {"rows", std::move(rows)}, {"summary", summary_json(report.summary())}};
}

ReportSummary summary_from_json(const ojson& j) {
  const auto& s = j.at("summary");
  ReportSummary r;
  r.pass = s.at("pass").get<std::size_t>();
  r.fail = s.at("fail").get<std::size_t>();
  r.skip = s.at("skip").get<std::size_t>();
  r.anomalies = s.value("anomalies", std::size_t{0});
  r.gating_failures = s.value("gating_failures", std::size_t{0});
  r.nongating_failures = s.value("nongating_failures", std::size_t{0});
  return r;
}

void emit_report(const Report& report, Format format, std::ostream& out) {
  switch (format) {
    case Format::Json: out << to_json(report).dump(2) << '\n'; return;
    case Format::Csv:
      out << "spec_id,p,outcome,lhs,rhs,x,y\n";
      for (const auto& r : report.rows)
        out << csv_field(r.spec_id) << ',' << opt_str(r.p) << ',' << r.outcome << ',' << opt_str(r.lhs) << ','
            << opt_str(r.rhs) << ',' << opt_str(r.x) << ',' << opt_str(r.y) << '\n';
      return;
    case Format::Table: {
      std::size_t w_id = 7, w_p = 1, w_out = 7, w_st = 6;
      for (const auto& r : report.rows) {
        w_id = std::max(w_id, r.spec_id.size());
        w_p = std::max(w_p, opt_str(r.p).size());
        w_st = std::max(w_st, r.status.size());
      }
      auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - std::min(w, s.size()), ' '); };
      out << pad("spec_id", w_id) << "  " << pad("p", w_p) << "  " << pad("outcome", w_out) << "  "
          << pad("status", w_st) << "  details\n";
      for (const auto& r : report.rows)
        out << pad(r.spec_id, w_id) << "  " << pad(opt_str(r.p), w_p) << "  " << pad(r.outcome, w_out) << "  "
            << pad(r.status, w_st) << "  " << details_text(r) << '\n';
      const auto s = report.summary();
      out << "summary: pass=" << s.pass << " fail=" << s.fail << " skip=" << s.skip << " anomalies=" << s.anomalies
          << " gating_failures=" << s.gating_failures << " nongating_failures=" << s.nongating_failures << '\n';
      return;
    }
  }
}

int exit_code(const ReportSummary& s, bool strict) {
  if (s.gating_failures > 0) return 1;
  if (strict && s.nongating_failures > 0) return 1;
  return 0;
}

Report congruence_report(const SweepReport& sweep) {
  Report rep;
  for (const auto& v : sweep.rows) {
    ReportRow r;
    r.spec_id = v.spec_id;
    r.p = v.p;
    r.outcome = std::string(to_string(v.outcome));
    r.status = std::string(to_string(v.status));
    r.anomaly = v.anomaly();
    if (v.lhs) r.lhs = std::to_string(*v.lhs);
    if (v.rhs) r.rhs = std::to_string(*v.rhs);
    r.x = v.x;
    r.y = v.y;
    if (v.reason != SkipReason::None) r.details["reason"] = std::string(to_string(v.reason));
    rep.rows.push_back(std::move(r));
  }
  return rep;
}

Report qseries_report(const std::vector<IdentityCheck>& checks) {
  Report rep;
  for (const auto& c : checks) {
    ReportRow r;
    r.spec_id = c.name;
    r.outcome = c.pass ? "pass" : "fail";
    r.details["terms"] = c.terms;
    if (c.first_mismatch) r.details["first_mismatch"] = *c.first_mismatch;
    rep.rows.push_back(std::move(r));
  }
  return rep;
}

Report numeric_report(const std::vector<NumericResult>& results) {
  Report rep;
  for (const auto& c : results) {
    ReportRow r;
    r.spec_id = c.name;
    r.outcome = c.pass ? "pass" : "fail";
    std::ostringstream res;
    res << c.residual;
    r.details["residual"] = res.str();
    r.details["value"] = c.value;
    rep.rows.push_back(std::move(r));
  }
  return rep;
}

Report identity_report(const std::vector<IdentityResult>& results) {
  Report rep;
  for (const auto& c : results) {
    ReportRow r;
    r.spec_id = c.name;
    r.outcome = c.pass ? "pass" : "fail";
    r.details["samples"] = c.samples;
    std::ostringstream res;
    res << c.max_residual;
    r.details["max_residual"] = res.str();
    rep.rows.push_back(std::move(r));
  }
  return rep;
}

Report lemma23_report(const std::vector<Lemma23Case>& cases) {
  Report rep;
  for (const auto& c : cases) {
    ReportRow r;
    const auto& f = c.rep.form;
    r.spec_id = "lemma23 (" + std::to_string(f.a) + "," + std::to_string(f.d) + "," + std::to_string(f.c) + ")";
    r.p = c.rep.p;
    r.outcome = c.result.pass ? "pass" : "fail";
    r.x = c.rep.x;
    r.y = c.rep.y;
    r.details["diff_linear"] = c.result.diff_linear.value();
    r.details["diff_square"] = c.result.diff_square.value();
    rep.rows.push_back(std::move(r));
  }
  return rep;
}

}  // namespace supercong
