#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "supercong/congruence.hpp"

namespace supercong {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Proven: return "proven";
    case Status::Conjectural: return "conjectural";
    case Status::Cited: return "cited";
  }
  return "?";
}

std::string_view to_string(Limit l) { return l == Limit::Half ? "half" : "full"; }

bool PrimePredicate::holds(std::uint64_t p) const {
  if (p < min_prime) return false;
  for (const auto& c : classes) {
    const int r = static_cast<int>(p % static_cast<std::uint64_t>(c.modulus));
    if (std::find(c.residues.begin(), c.residues.end(), r) == c.residues.end()) return false;
  }
  for (const auto& j : jacobi)
    if (supercong::jacobi(j.u, static_cast<std::int64_t>(p)) != j.value) return false;
  return true;
}

std::int64_t FloorExpr::eval(std::uint64_t p) const {
  const std::int64_t n = num * static_cast<std::int64_t>(p) + off;
  std::int64_t q = n / den;
  if (n % den != 0 && n < 0) --q;
  return q;
}

int CharSpec::eval(std::uint64_t p) const {
  int s = 1;
  for (std::int64_t u : jacobi) s *= supercong::jacobi(u, static_cast<std::int64_t>(p));
  for (int e : parity) {
    if ((p - 1) % static_cast<std::uint64_t>(e) != 0) throw std::domain_error("parity exponent not integral");
    if (((p - 1) / static_cast<std::uint64_t>(e)) % 2 == 1) s = -s;
  }
  return s;
}

std::string CongruenceSpec::m_text() const {
  std::ostringstream os;
  if (m_exp == 1) {
    os << m_base;
  } else if (m_base < 0) {
    os << "(" << m_base << ")^" << m_exp;
  } else {
    os << m_base << "^" << m_exp;
  }
  return os.str();
}

std::string describe(const CongruenceSpec& spec) {
  std::ostringstream os;
  os << "sum_{k<=" << (spec.limit == Limit::Half ? "(p-1)/2" : "p-1") << "} " << to_string(spec.sequence)
     << "(k)/(" << spec.m_text() << ")^k mod p^" << spec.mod_exp;
  return os.str();
}

namespace {

constexpr std::array<int, 4> kStd{4, -2, -1, 4};

PrimePredicate mod(int M, std::vector<int> r, std::uint64_t min_p = 3) { return {{{M, std::move(r)}}, {}, min_p}; }

PrimePredicate jac(std::vector<JacobiCondition> j) { return {{}, std::move(j), 3}; }

// Nonzero quadratic residues mod an odd prime q, i.e. (p/q) = 1.
PrimePredicate qr_mod(int q) {
  std::vector<int> r;
  for (int x = 1; x < q; ++x) r.push_back(x * x % q);
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  return mod(q, r);
}

Branch qf(FormSpec f, std::array<int, 4> r = kStd, CharSpec c = {}) { return {{}, f, QfRhs{r}, std::move(c)}; }

Branch with_condition(Branch b, PrimePredicate cond) {
  b.condition = std::move(cond);
  return b;
}

Branch inv_binom(PrimePredicate cond, std::int64_t num, std::int64_t den, FloorExpr top, FloorExpr bottom,
                 CharSpec c = {}) {
  return {std::move(cond), std::nullopt, InvBinomSqRhs{num, den, top, bottom}, std::move(c)};
}

CongruenceSpec row(std::string id, Status st, SequenceId seq, std::int64_t base, unsigned exp, Limit lim,
                   PrimePredicate pred, std::vector<Branch> branches, unsigned mod_exp = 3) {
  return {std::move(id), st, seq, base, exp, lim, mod_exp, std::move(pred), std::move(branches)};
}

CharSpec parity(int e) { return {{}, {e}}; }
CharSpec chi(std::int64_t u) { return {{u}, {}}; }

std::vector<CongruenceSpec> build() {
  using S = SequenceId;
  const auto P = Status::Proven;
  const auto Cj = Status::Conjectural;
  const auto Ci = Status::Cited;
  const auto H = Limit::Half;
  const auto F = Limit::Full;

  const FormSpec f7{1, 7, 1}, f3{1, 3, 1}, f4{1, 4, 1}, f2{1, 2, 1};
  const std::array<int, 4> half2{-2, 2, 1, 2};
  const std::array<int, 4> quart{1, -2, -1, 1};

  std::vector<CongruenceSpec> c;

  c.push_back(row("T1.1", P, S::CB3, 1, 1, H, mod(7, {1, 2, 4}), {qf(f7)}));
  c.push_back(row("T1.1b", P, S::CB3, 4096, 1, H, mod(7, {1, 2, 4}), {qf(f7, kStd, parity(2))}));
  c.push_back(row("T1.2", P, S::CB3, 16, 1, H, mod(3, {1}), {qf(f3)}));
  c.push_back(row("T1.2b", P, S::CB3, 256, 1, H, mod(3, {1}), {qf(f3, kStd, parity(2))}));
  c.push_back(row("T1.3", P, S::CB3, -8, 1, H, mod(4, {1}), {qf(f4)}));
  c.push_back(row("T1.4", P, S::CB3, -64, 1, H, mod(8, {1, 3}), {qf(f2, kStd, parity(2))}));

  c.push_back(row("T1.5", P, S::CB4, 256, 1, F, mod(8, {1, 3}), {qf(f2)}));
  c.push_back(row("T1.6", P, S::CB4, -144, 1, F, mod(3, {1}), {qf(f3)}));
  c.push_back(row("T1.7", P, S::CB4, 648, 1, F, mod(4, {1}), {qf(f4)}));
  c.push_back(row("T1.8", P, S::CB4, 81, 1, F, mod(7, {1, 2, 4}), {qf(f7)}));
  c.push_back(row("T1.8b", P, S::CB4, -3969, 1, F, mod(7, {1, 2, 4}), {qf(f7)}));
  c.push_back(row("T1.9", P, S::CB4, 28, 4, F, mod(8, {1, 3}), {qf(f2)}));
  c.push_back(row("T1.10", P, S::CB4, -12288, 1, F, mod(4, {1}),
                  {with_condition(qf({1, 9, 1}), mod(12, {1})),
                   with_condition(qf({1, 9, 2}, half2), mod(12, {5}))}));
  c.push_back(row("T1.10b", P, S::CB4, -6635520, 1, F, mod(4, {1}),
                  {with_condition(qf({1, 25, 1}), mod(20, {1, 9})),
                   with_condition(qf({1, 25, 2}, half2), mod(20, {13, 17}))}));

  const struct {
    const char* id;
    std::int64_t m;
    std::int64_t D;
  } t111[] = {{"T1.11", 5, -1024}, {"T1.11b", 13, -82944}, {"T1.11c", 37, -14112LL * 14112LL}};
  for (const auto& r : t111) {
    c.push_back(row(r.id, P, S::CB4, r.D, 1, F, jac({{-r.m, 1}}),
                    {with_condition(qf({1, r.m, 1}), jac({{-1, 1}, {r.m, 1}})),
                     with_condition(qf({1, r.m, 2}, half2), jac({{-1, -1}, {r.m, -1}}))}));
  }

  const struct {
    const char* id;
    std::int64_t m;
    std::int64_t base;
    unsigned exp;
  } t112[] = {{"T1.12", 3, 48, 2}, {"T1.12b", 5, 12, 4}, {"T1.12c", 11, 1584, 2}, {"T1.12d", 29, 396, 4}};
  for (const auto& r : t112) {
    const std::int64_t eps = ((r.m - 1) / 2) % 2 == 0 ? 1 : -1;
    c.push_back(row(r.id, P, S::CB4, r.base, r.exp, F, jac({{-2 * r.m, 1}}),
                    {with_condition(qf({1, 2 * r.m, 1}), jac({{-2 * eps, 1}, {eps * r.m, 1}})),
                     with_condition(qf({2, r.m, 1}, {-8, 2, 1, 8}), jac({{-2 * eps, -1}, {eps * r.m, -1}}))}));
  }

  c.push_back(row("T1.13", P, S::CB6, 12, 3, F, mod(4, {1}), {qf(f4, kStd, chi(-3))}));
  c.push_back(row("T1.13b", P, S::CB6, 66, 3, F, mod(4, {1}), {qf(f4, kStd, chi(33))}));
  c.push_back(row("T1.14", P, S::CB6, 54000, 1, F, mod(3, {1}), {qf(f3, kStd, chi(5))}));
  c.push_back(row("T1.15", P, S::CB6, 20, 3, F, mod(8, {1, 3}), {qf(f2, kStd, chi(-5))}));
  c.push_back(row("T1.16", P, S::CB6, -15, 3, F, mod(7, {1, 2, 4}), {qf(f7, kStd, chi(-15))}));
  c.push_back(row("T1.16b", P, S::CB6, 255, 3, F, mod(7, {1, 2, 4}), {qf(f7, kStd, chi(-255))}));
  c.push_back(row("T1.17", P, S::CB6, -12288000, 1, F, mod(3, {1}), {qf({1, 27, 4}, quart, chi(10))}));

  const struct {
    const char* id;
    int q;
    std::int64_t base;
    std::int64_t chr;
  } heeg[] = {{"T1.18", 11, -32, -2},
              {"T1.19", 19, -96, -6},
              {"T1.20", 43, -960, -15},
              {"T1.21", 67, -5280, -330},
              {"T1.22", 163, -640320, -10005}};
  for (const auto& r : heeg)
    c.push_back(row(r.id, P, S::CB6, r.base, 3, F, qr_mod(r.q), {qf({1, r.q, 4}, quart, chi(r.chr))}));

  c.push_back(row("T1.23", P, S::V, 8, 1, F, mod(4, {1}), {qf(f4)}));
  c.push_back(row("T1.23b", P, S::V, -16, 1, F, mod(4, {1}), {qf(f4)}));
  c.push_back(row("T1.24", P, S::T, -4, 1, F, mod(8, {1, 3}), {qf(f2)}));
  c.push_back(row("T1.25", P, S::T, 1, 1, F, mod(7, {1, 2, 4}), {qf(f7)}));
  c.push_back(row("T1.25b", P, S::T, 16, 1, F, mod(7, {1, 2, 4}), {qf(f7)}));
  c.push_back(row("T1.26", P, S::D, 8, 1, F, mod(8, {1}), {qf(f2)}));
  c.push_back(row("T1.27", P, S::D, -2, 1, F, mod(12, {1}), {qf(f3)}));
  c.push_back(row("T1.27b", P, S::D, -32, 1, F, mod(24, {1}), {qf(f3)}));
  c.push_back(row("T1.28", P, S::D, -8, 1, F, mod(24, {1, 5}),
                  {with_condition(qf({1, 6, 1}), mod(24, {1})),
                   with_condition(qf({2, 3, 1}, {8, -2, -1, 8}), mod(24, {5}))}));
  c.push_back(row("T1.29", P, S::A, -1, 1, F, mod(3, {1}), {qf(f3)}));

  // Introductory congruences and results quoted from earlier work.
  const FloorExpr p3_7{3, 0, 7}, p_7{1, 0, 7}, p_4{1, 0, 4}, p_8{1, 0, 8};
  const FloorExpr pm1_2{1, -1, 2}, pm3_2{1, -3, 2}, pm3_4{1, -3, 4};

  c.push_back(row("I1.1-a", P, S::CB3, 1, 1, F, mod(7, {1, 2, 4}), {qf(f7)}));
  c.push_back(row("I1.1-b", Cj, S::CB3, 1, 1, F, mod(7, {3}), {inv_binom({}, -11, 1, p3_7, p_7)}));
  c.push_back(row("I1.1-c", Cj, S::CB3, 1, 1, F, mod(7, {5}), {inv_binom({}, -11, 16, p3_7, p_7)}));
  c.push_back(row("I1.1-d", Cj, S::CB3, 1, 1, F, mod(7, {6}), {inv_binom({}, -11, 4, p3_7, p_7)}));
  c.push_back(row("I1.2", Ci, S::CB3, 64, 1, H, {},
                  {with_condition(qf(f4), mod(4, {1})), inv_binom(mod(4, {3}), -1, 1, pm1_2, pm3_4)}));
  c.push_back(row("I1.3", Ci, S::CB3, -512, 1, H, mod(4, {1}), {qf(f4, kStd, parity(4))}));
  c.push_back(row("I1.4-a", P, S::CB4, 256, 1, F, mod(8, {1, 3}), {qf(f2)}));
  c.push_back(row("I1.4-b", Cj, S::CB4, 256, 1, F, mod(8, {5}), {inv_binom({}, 1, 3, p_4, p_8)}));
  c.push_back(row("I1.4-c", Cj, S::CB4, 256, 1, F, mod(8, {7}), {inv_binom({}, -3, 2, p_4, p_8)}));
  c.push_back(row("I1.5-a", P, S::CB6, 12, 3, F, mod(4, {1}), {qf(f4, kStd, chi(-3))}));
  c.push_back(row("I1.5-b", Cj, S::CB6, 12, 3, F, mod(4, {3}, 5), {inv_binom({}, 5, 12, pm3_2, pm3_4, chi(-3))}));
  c.push_back(row("C22.29-a", Cj, S::V, 8, 1, F, mod(4, {3}, 5), {inv_binom({}, 3, 4, pm3_2, pm3_4)}));
  c.push_back(row("C22.29-b", Cj, S::V, -16, 1, F, mod(4, {3}, 5), {inv_binom({}, 3, 4, pm3_2, pm3_4)}));
  c.push_back(row("R20.1", Ci, S::T, 4, 1, F, {},
                  {with_condition(qf(f4), mod(4, {1})), inv_binom(mod(4, {3}), -1, 4, pm3_2, pm3_4)}));
  c.push_back(row("R20.2", Ci, S::T, 1, 1, F, mod(7, {1, 2, 3, 4, 5, 6}),
                  {with_condition(qf(f7), mod(7, {1, 2, 4})), {mod(7, {3, 5, 6}), std::nullopt, ZeroRhs{}, {}}},
                  2));
  c.push_back(row("E9.4", Ci, S::A, 1, 1, F, mod(8, {1, 3}), {qf(f2)}));
  return c;
}

}  // namespace

const std::vector<CongruenceSpec>& catalog() {
  static const std::vector<CongruenceSpec> table = build();
  return table;
}

const CongruenceSpec& lookup(const std::string& id) {
  for (const auto& s : catalog())
    if (s.id == id) return s;
  throw std::invalid_argument("unknown congruence id: " + id);
}

std::vector<FormSpec> catalog_forms() {
  std::vector<FormSpec> out;
  for (const auto& s : catalog())
    for (const auto& b : s.branches)
      if (b.rep && std::find(out.begin(), out.end(), *b.rep) == out.end()) out.push_back(*b.rep);
  return out;
}

std::vector<std::size_t> matching_branches(const CongruenceSpec& spec, std::uint64_t p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < spec.branches.size(); ++i)
    if (spec.branches[i].condition.holds(p)) out.push_back(i);
  return out;
}

bool divides_m(const CongruenceSpec& spec, std::uint64_t p) {
  std::int64_t b = spec.m_base < 0 ? -spec.m_base : spec.m_base;
  return static_cast<std::uint64_t>(b) % p == 0;
}

}  // namespace supercong
