#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "supercong/arith.hpp"
#include "supercong/quadforms.hpp"
#include "supercong/sequences.hpp"

namespace supercong {

enum class Status { Proven, Conjectural, Cited };
enum class Limit { Half, Full };

std::string_view to_string(Status s);
std::string_view to_string(Limit l);

/// p mod modulus lies in residues.
struct ClassCondition {
  int modulus;
  std::vector<int> residues;
};

/// (u/p) == value
struct JacobiCondition {
  std::int64_t u;
  int value;
};

struct PrimePredicate {
  std::vector<ClassCondition> classes;
  std::vector<JacobiCondition> jacobi;
  std::uint64_t min_prime = 3;

  bool holds(std::uint64_t p) const;
};

/// floor((num*p + off) / den)
struct FloorExpr {
  std::int64_t num;
  std::int64_t off;
  std::int64_t den;

  std::int64_t eval(std::uint64_t p) const;
};

/// r1*x^2 + r2*p + r3*p^2/(r4*x^2)
struct QfRhs {
  std::array<int, 4> r;
};

/// (rho_num/rho_den) * p^2 * C(top, bottom)^-2
struct InvBinomSqRhs {
  std::int64_t rho_num;
  std::int64_t rho_den;
  FloorExpr top;
  FloorExpr bottom;
};

struct ZeroRhs {};

using RhsTemplate = std::variant<QfRhs, InvBinomSqRhs, ZeroRhs>;

/// prod (u/p) * prod (-1)^((p-1)/e)
struct CharSpec {
  std::vector<std::int64_t> jacobi;
  std::vector<int> parity;

  int eval(std::uint64_t p) const;
};

struct Branch {
  PrimePredicate condition;
  std::optional<FormSpec> rep;
  RhsTemplate rhs;
  CharSpec character;
};

struct CongruenceSpec {
  std::string id;
  Status status;
  SequenceId sequence;
  std::int64_t m_base;  // m = m_base^m_exp
  unsigned m_exp;
  Limit limit;
  unsigned mod_exp;
  PrimePredicate predicate;
  std::vector<Branch> branches;

  std::string m_text() const;
  std::uint64_t upper(std::uint64_t p) const { return limit == Limit::Half ? (p - 1) / 2 : p - 1; }
};

const std::vector<CongruenceSpec>& catalog();
/// One-line formula, e.g. "sum_{k<=p-1} CB4(k)/256^k mod p^3".
std::string describe(const CongruenceSpec& spec);
const CongruenceSpec& lookup(const std::string& id);
std::vector<FormSpec> catalog_forms();

/// Indices of branches whose condition holds at p.
std::vector<std::size_t> matching_branches(const CongruenceSpec& spec, std::uint64_t p);

/// True when p divides m.
bool divides_m(const CongruenceSpec& spec, std::uint64_t p);

/// sum_{k <= limit} a_k * m^{-k} mod p^mod_exp.
Residue lhs_sum(const CongruenceSpec& spec, std::uint64_t p);
/// Same, from precomputed a_k mod a power of p at least p^mod_exp.
Residue lhs_sum(const CongruenceSpec& spec, std::uint64_t p, const std::vector<std::uint64_t>& terms,
                const Modulus& terms_modulus);

Residue rhs_value(const CongruenceSpec& spec, const Branch& branch, std::uint64_t p,
                  const std::optional<QuadRep>& rep);

enum class Outcome { Pass, Fail, Skip };
enum class SkipReason { None, Predicate, DividesM, RepresentationAnomaly, BranchAnomaly };

std::string_view to_string(Outcome o);
std::string_view to_string(SkipReason r);

struct VerifyResult {
  std::string spec_id;
  Status status;
  std::uint64_t p;
  Outcome outcome;
  SkipReason reason = SkipReason::None;
  std::optional<std::uint64_t> lhs;
  std::optional<std::uint64_t> rhs;
  std::optional<std::int64_t> x;
  std::optional<std::int64_t> y;

  bool anomaly() const {
    return reason == SkipReason::RepresentationAnomaly || reason == SkipReason::BranchAnomaly;
  }
};

VerifyResult verify(const CongruenceSpec& spec, std::uint64_t p);

struct SweepSummary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skip = 0;
  std::size_t anomalies = 0;
  std::size_t gating_failures = 0;  // failures and anomalies among proven rows
  std::size_t nongating_failures = 0;
};

struct SweepReport {
  std::vector<VerifyResult> rows;  // catalog order, then p
  SweepSummary summary;
};

SweepSummary summarize(const std::vector<VerifyResult>& rows);

/// Direct per-(spec, prime) verification; the reference implementation.
SweepReport sweep_serial(const std::vector<CongruenceSpec>& specs, std::uint64_t lo, std::uint64_t hi);
/// Parallel over primes with per-prime caches of sequence terms.
SweepReport sweep(const std::vector<CongruenceSpec>& specs, std::uint64_t lo, std::uint64_t hi, int workers = 0);
/// Resolves ids against the catalog; unknown ids throw std::invalid_argument.
SweepReport sweep(const std::vector<std::string>& spec_ids, std::uint64_t lo, std::uint64_t hi, int workers = 0);

}  // namespace supercong
