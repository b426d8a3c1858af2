#include <sstream>

#include "doctest.h"
#include "supercong/report.hpp"

using namespace supercong;

TEST_CASE("empty report") {
  const Report r;
  const auto j = to_json(r);
  CHECK(j.at("rows").empty());
  const auto s = summary_from_json(j);
  CHECK(s.pass + s.fail + s.skip == 0);
  CHECK(exit_code(s, true) == 0);
}

TEST_CASE("gating and strict exit codes") {
  Report r;
  r.rows.push_back({"A", 5, "skip", "proven", false, {}, {}, {}, {}, {}});
  CHECK(exit_code(r.summary(), true) == 0);
  r.rows.push_back({"B", 7, "fail", "conjectural", false, "1", "2", {}, {}, {}});
  CHECK(exit_code(r.summary(), false) == 0);
  CHECK(exit_code(r.summary(), true) == 1);
  r.rows.push_back({"C", 7, "skip", "proven", true, {}, {}, {}, {}, {}});
  const auto s = r.summary();
  CHECK(s.anomalies == 1);
  CHECK(s.gating_failures == 1);
  CHECK(exit_code(s, false) == 1);
}

TEST_CASE("json round trip") {
  const auto rep = congruence_report(sweep(std::vector<std::string>{"T1.5", "T1.9"}, 3, 60));
  std::ostringstream os;
  emit_report(rep, Format::Json, os);
  const auto j = ojson::parse(os.str());
  const auto a = summary_from_json(j), b = rep.summary();
  CHECK(a.pass == b.pass);
  CHECK(a.fail == b.fail);
  CHECK(a.skip == b.skip);
  CHECK(j.at("rows").size() == rep.rows.size());
  CHECK(j.at("rows")[0].at("details").at("status") == "proven");
  CHECK(b.fail == 1);
}

TEST_CASE("csv and table") {
  Report r;
  r.rows.push_back({"x,y", 11, "pass", "proven", false, "3", "3", 1, 2, {}});
  std::ostringstream csv, table;
  emit_report(r, Format::Csv, csv);
  CHECK(csv.str() == "spec_id,p,outcome,lhs,rhs,x,y\n\"x,y\",11,pass,3,3,1,2\n");
  emit_report(r, Format::Table, table);
  CHECK(table.str().find("summary: pass=1") != std::string::npos);
  CHECK(parse_format("csv") == Format::Csv);
  CHECK(!parse_format("xml"));
}
