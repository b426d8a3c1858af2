#include <set>

#include "doctest.h"
#include "supercong/congruence.hpp"

using namespace supercong;

namespace {

void check_pass(const std::string& id, std::uint64_t p, std::uint64_t value, std::int64_t x) {
  const auto r = verify(lookup(id), p);
  INFO(id, " p=", p);
  CHECK(r.outcome == Outcome::Pass);
  REQUIRE(r.lhs);
  CHECK(*r.lhs == value);
  CHECK(*r.rhs == value);
  CHECK(r.x == x);
}

}  // namespace

TEST_CASE("catalog shape") {
  const auto& c = catalog();
  CHECK(c.size() >= 40);
  std::set<std::string> ids;
  for (const auto& s : c) {
    CHECK(ids.insert(s.id).second);
    CHECK(&lookup(s.id) == &s);
    CHECK(!s.branches.empty());
    CHECK(!describe(s).empty());
  }
  CHECK_THROWS_AS(lookup("T9.99"), std::invalid_argument);
}

TEST_CASE("worked values") {
  check_pass("T1.5", 11, 861, 3);
  check_pass("T1.29", 7, 149, 2);
  check_pass("T1.29", 13, 485, 1);
  check_pass("T1.1", 11, 236, 2);
  check_pass("T1.13", 13, 1531, 3);
  const auto b = verify(lookup("I1.1-b"), 3);
  CHECK(b.outcome == Outcome::Pass);
  CHECK(*b.lhs == 9);
  const auto s = verify(lookup("T1.5"), 5);
  CHECK(s.outcome == Outcome::Skip);
  CHECK(s.reason == SkipReason::Predicate);
}

TEST_CASE("p = 3 counterexamples") {
  // both statements fail at p = 3 under direct evaluation
  const auto t = verify(lookup("T1.9"), 3);
  CHECK(t.outcome == Outcome::Fail);
  CHECK(*t.lhs == 7);
  CHECK(*t.rhs == 16);
  const auto e = verify(lookup("E9.4"), 3);
  CHECK(e.outcome == Outcome::Fail);
  CHECK(*e.lhs == 25);
  CHECK(*e.rhs == 16);
}

TEST_CASE("branches are exclusive and representations exist") {
  for (const auto& s : catalog())
    for (std::uint64_t p : primes_in(5, 2000)) {
      if (!s.predicate.holds(p) || divides_m(s, p)) continue;
      const auto br = matching_branches(s, p);
      INFO(s.id, " p=", p);
      REQUIRE(br.size() == 1);
      const auto& b = s.branches[br[0]];
      if (b.rep) CHECK(represent(p, *b.rep).has_value());
    }
}

TEST_CASE("cached lhs agrees with direct lhs") {
  for (const auto& s : catalog())
    for (std::uint64_t p : primes_in(5, 200)) {
      if (divides_m(s, p)) continue;
      const Modulus m(p, s.mod_exp + 1);
      const FactorialTable t(factorial_bound(s.sequence, p), m);
      const auto terms = terms_mod_raw(s.sequence, p, t);
      CHECK(lhs_sum(s, p, terms, m) == lhs_sum(s, p));
    }
}

TEST_CASE("parallel sweep matches serial reference") {
  const auto a = sweep_serial(catalog(), 3, 400);
  const auto b = sweep(catalog(), 3, 400, 4);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].spec_id == b.rows[i].spec_id);
    CHECK(a.rows[i].p == b.rows[i].p);
    CHECK(a.rows[i].outcome == b.rows[i].outcome);
    CHECK(a.rows[i].lhs == b.rows[i].lhs);
    CHECK(a.rows[i].rhs == b.rows[i].rhs);
  }
  CHECK(a.summary.fail == b.summary.fail);
}

TEST_CASE("sweep rows are ordered by catalog then p") {
  const auto r = sweep(std::vector<std::string>{"T1.29", "T1.1"}, 5, 100);
  REQUIRE(!r.rows.empty());
  CHECK(r.rows.front().spec_id == "T1.1");
  for (std::size_t i = 1; i < r.rows.size(); ++i)
    if (r.rows[i].spec_id == r.rows[i - 1].spec_id) CHECK(r.rows[i].p > r.rows[i - 1].p);
  CHECK_THROWS_AS(sweep(std::vector<std::string>{"nope"}, 5, 100), std::invalid_argument);
}

TEST_CASE("proven sweep is clean") {
  std::vector<CongruenceSpec> proven;
  for (const auto& s : catalog())
    if (s.status == Status::Proven) proven.push_back(s);
  const auto r = sweep(proven, 5, 1000);
  CHECK(r.summary.fail == 0);
  CHECK(r.summary.anomalies == 0);
  CHECK(r.summary.gating_failures == 0);
  CHECK(r.summary.pass > 1000);
}

TEST_CASE("corrupted coefficient is caught") {
  for (const auto& s : catalog()) {
    bool has_qf = false;
    CongruenceSpec bad = s;
    for (auto& b : bad.branches)
      if (auto* q = std::get_if<QfRhs>(&b.rhs)) {
        q->r[0] += 1;
        has_qf = true;
      }
    if (!has_qf) continue;
    const auto r = sweep_serial({bad}, 5, 200);
    INFO(s.id);
    CHECK(r.summary.fail > 0);
  }
}
