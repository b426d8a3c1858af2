#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "supercong/congruence.hpp"
#include "supercong/highprec.hpp"
#include "supercong/qseries.hpp"
#include "supercong/quadforms.hpp"
#include "supercong/sequences.hpp"

using namespace supercong;

namespace {

constexpr std::uint64_t kProvenLo = 5, kProvenHi = 1000;
constexpr std::uint64_t kOpenHi = 500;
constexpr std::size_t kSeriesTerms = 200;
constexpr int kCmDigits = 60, kCmWorking = 80;
constexpr unsigned kLemmaTrials = 100;
constexpr std::uint64_t kLemmaMaxP = 10000;
constexpr std::size_t kIdentitySamples = 50;
constexpr mpfr_prec_t kIdentityBits = 256;
constexpr double kIdentityTol = 1e-30;
constexpr unsigned kFormulaMaxN = 100;
constexpr std::uint64_t kHalfFullMaxP = 500, kBranchMaxP = 2000;

std::vector<CongruenceSpec> by_status(bool proven) {
  std::vector<CongruenceSpec> out;
  for (const auto& s : catalog())
    if ((s.status == Status::Proven) == proven) out.push_back(s);
  return out;
}

std::string sweep_text(const SweepSummary& s) {
  return "pass=" + std::to_string(s.pass) + " fail=" + std::to_string(s.fail) + " skip=" + std::to_string(s.skip) +
         " anomalies=" + std::to_string(s.anomalies);
}

bool criterion1(std::string& msg) {
  const auto r = sweep(by_status(true), kProvenLo, kProvenHi);
  msg = sweep_text(r.summary);
  return r.summary.fail == 0 && r.summary.anomalies == 0 && r.summary.pass > 0;
}

bool criterion2(std::string& msg) {
  const auto r = sweep(by_status(false), kProvenLo, kOpenHi);
  msg = sweep_text(r.summary);
  return r.summary.fail == 0 && r.summary.anomalies == 0 && r.summary.pass > 0;
}

bool criterion3(std::string& msg) {
  const auto checks = qseries_suite(kSeriesTerms);
  std::size_t ok = 0;
  for (const auto& c : checks) {
    const bool fixed_window = c.name.rfind("j(2tau)", 0) == 0;  // q^-2..q^2 only
    ok += c.pass && (fixed_window || c.terms >= kSeriesTerms);
  }
  msg = std::to_string(ok) + "/" + std::to_string(checks.size()) + " identities through " +
        std::to_string(kSeriesTerms) + " coefficients";
  return ok == checks.size();
}

bool criterion4(std::string& msg) {
  const auto cm = cm_check_all(kCmDigits, kCmWorking);
  const auto inv = class_invariant_checks(kCmDigits, kCmWorking);
  std::size_t ok = 0;
  for (const auto& r : cm) ok += r.pass;
  for (const auto& r : inv) ok += r.pass;
  msg = std::to_string(ok) + "/" + std::to_string(cm.size() + inv.size()) + " at " + std::to_string(kCmDigits) +
        " digits";
  return ok == cm.size() + inv.size() && cm.size() >= 28;
}

bool criterion5(std::string& msg) {
  const auto cases = lemma23_sample(catalog_forms(), kLemmaTrials, 2024, kLemmaMaxP);
  std::size_t ok = 0;
  for (const auto& c : cases) ok += c.result.pass && c.rep.p < kLemmaMaxP;
  msg = std::to_string(ok) + "/" + std::to_string(cases.size()) + " mod p^4";
  return ok == kLemmaTrials && cases.size() == kLemmaTrials;
}

bool criterion6(std::string& msg) {
  std::size_t bad_formula = 0;
  for (auto id : kAllSequences)
    for (unsigned n = 0; n <= kFormulaMaxN; ++n) {
      const auto v = alternate_formulas(id, n);
      for (std::size_t i = 1; i < v.size(); ++i) bad_formula += v[i] != v[0];
    }

  std::size_t bad_half = 0, half_checked = 0;
  for (const auto& s : catalog()) {
    if (s.sequence != SequenceId::CB3) continue;
    CongruenceSpec half = s, full = s;
    half.limit = Limit::Half;
    full.limit = Limit::Full;
    half.mod_exp = full.mod_exp = 3;
    for (std::uint64_t p : primes_in(5, kHalfFullMaxP - 1)) {
      if (!s.predicate.holds(p) || divides_m(s, p)) continue;
      ++half_checked;
      bad_half += !(lhs_sum(half, p) == lhs_sum(full, p));
    }
  }

  std::size_t bad_branch = 0;
  for (const auto& s : catalog())
    for (std::uint64_t p : primes_in(5, kBranchMaxP - 1)) {
      if (!s.predicate.holds(p) || divides_m(s, p)) continue;
      const auto br = matching_branches(s, p);
      if (br.size() != 1) {
        ++bad_branch;
        continue;
      }
      const auto& b = s.branches[br[0]];
      if (b.rep && !represent(p, *b.rep)) ++bad_branch;
    }

  const auto ids = identity_suite(kIdentitySamples, kIdentityBits, 1, kIdentityTol);
  double worst = 0;
  std::size_t bad_id = 0;
  for (const auto& r : ids) {
    worst = std::max(worst, r.max_residual);
    bad_id += !(r.pass && r.max_residual < kIdentityTol);
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2e", worst);
  msg = "formula mismatches=" + std::to_string(bad_formula) + " half/full mismatches=" + std::to_string(bad_half) +
        "/" + std::to_string(half_checked) + " branch issues=" + std::to_string(bad_branch) +
        " identity max residual=" + buf;
  return bad_formula == 0 && bad_half == 0 && half_checked > 0 && bad_branch == 0 && bad_id == 0;
}

bool criterion7(std::string& msg) {
  bool qf_caught = false;
  for (const auto& s : catalog()) {
    if (s.id != "T1.5") continue;
    CongruenceSpec bad = s;
    for (auto& b : bad.branches)
      if (auto* q = std::get_if<QfRhs>(&b.rhs)) q->r[0] += 1;
    qf_caught = sweep_serial({bad}, kProvenLo, 200).summary.fail > 0;
  }

  CMTarget t = cm_table().front();
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, 30);
  t.expected.a += mpq_class(1, scale);
  const bool cm_caught = !cm_check(t, kCmDigits, kCmWorking).pass;

  std::vector<mpq_class> a;
  for (unsigned n = 0; n <= 40; ++n) a.emplace_back(exact_term(SequenceId::CB3, n));
  a[17] += 1;
  const auto g = genfun_identity_check(HauptmodulId::t, a, 40);
  const bool series_caught = !g.pass && g.first_mismatch == 17;

  msg = std::string("catalog coefficient ") + (qf_caught ? "caught" : "missed") + ", CM target " +
        (cm_caught ? "caught" : "missed") + ", series coefficient " + (series_caught ? "caught" : "missed");
  return qf_caught && cm_caught && series_caught;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<bool(std::string&)>> criteria[] = {
      {"proven congruence sweep [5, 1000]", criterion1},
      {"conjectural and cited sweep [5, 500]", criterion2},
      {"q-series identities", criterion3},
      {"CM values and class invariants", criterion4},
      {"fourth-order expansion cases", criterion5},
      {"property suites", criterion6},
      {"negative controls", criterion7},
  };
  int failed = 0, n = 0;
  for (const auto& [name, fn] : criteria) {
    ++n;
    std::string msg;
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = fn(msg);
    } catch (const std::exception& e) {
      msg = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %d %s: %s (%.1fs)\n", ok ? "PASS" : "FAIL", n, name, msg.c_str(), secs);
    std::fflush(stdout);
    failed += !ok;
  }
  return failed == 0 ? 0 : 1;
}
