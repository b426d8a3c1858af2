#include <algorithm>
#include <map>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "supercong/congruence.hpp"

namespace supercong {

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Skip: return "skip";
  }
  return "?";
}

std::string_view to_string(SkipReason r) {
  switch (r) {
    case SkipReason::None: return "";
    case SkipReason::Predicate: return "predicate";
    case SkipReason::DividesM: return "p-divides-m";
    case SkipReason::RepresentationAnomaly: return "representability-anomaly";
    case SkipReason::BranchAnomaly: return "branch-anomaly";
  }
  return "?";
}

namespace {

std::uint64_t m_residue(const CongruenceSpec& spec, const Modulus& m) {
  return m.pow(m.reduce(spec.m_base), spec.m_exp);
}

}  // namespace

Residue lhs_sum(const CongruenceSpec& spec, std::uint64_t p, const std::vector<std::uint64_t>& terms,
                const Modulus& terms_modulus) {
  const Modulus m(p, spec.mod_exp);
  if (terms_modulus.p() != p || terms_modulus.k() < spec.mod_exp)
    throw std::invalid_argument("terms are not known to enough precision");
  const std::uint64_t upper = spec.upper(p);
  if (terms.size() <= upper) throw std::invalid_argument("too few terms");
  const std::uint64_t minv = m.inverse(m_residue(spec, m));
  std::uint64_t s = 0, w = 1 % m.pk();
  for (std::uint64_t k = 0; k <= upper; ++k) {
    s = m.add(s, m.mul(terms[k] % m.pk(), w));
    w = m.mul(w, minv);
  }
  return Residue(s, m);
}

Residue lhs_sum(const CongruenceSpec& spec, std::uint64_t p) {
  if (divides_m(spec, p)) throw not_invertible("p divides m");
  const Modulus m(p, spec.mod_exp);
  const std::size_t count = spec.upper(p) + 1;
  const FactorialTable table(factorial_bound(spec.sequence, count), m);
  return lhs_sum(spec, p, terms_mod_raw(spec.sequence, count, table), m);
}

Residue rhs_value(const CongruenceSpec& spec, const Branch& branch, std::uint64_t p,
                  const std::optional<QuadRep>& rep) {
  const Modulus m(p, spec.mod_exp);
  Residue v(0, m);
  if (const auto* q = std::get_if<QfRhs>(&branch.rhs)) {
    if (!rep) throw std::invalid_argument("quadratic right-hand side needs a representation");
    v = rhs_quadratic(*rep, q->r, m);
  } else if (const auto* b = std::get_if<InvBinomSqRhs>(&branch.rhs)) {
    const std::int64_t top = b->top.eval(p), bottom = b->bottom.eval(p);
    if (top < 0 || bottom < 0 || bottom > top || top >= static_cast<std::int64_t>(p))
      throw std::logic_error("binomial arguments out of range");
    const FactorialTable table(static_cast<std::size_t>(top), m);
    const ValUnit c = binomial_vu(top, bottom, table);
    if (c.v != 0) throw std::logic_error("binomial divisible by p");
    const Residue cinv = inv(c.u);
    const Residue pp = Residue::from_int(static_cast<std::int64_t>(p), m);
    v = Residue::from_int(b->rho_num, m) * inv(Residue::from_int(b->rho_den, m)) * pp * pp * cinv * cinv;
  }
  return branch.character.eval(p) == 1 ? v : -v;
}

namespace {

// Everything about (spec, p) except the left-hand side.
struct Prepared {
  VerifyResult result;
  const Branch* branch = nullptr;
  std::optional<QuadRep> rep;
};

Prepared prepare(const CongruenceSpec& spec, std::uint64_t p) {
  Prepared out{{spec.id, spec.status, p, Outcome::Skip, SkipReason::None, {}, {}, {}, {}}, nullptr, std::nullopt};
  auto skip = [&](SkipReason r) {
    out.result.reason = r;
    return out;
  };
  if (p % 2 == 0 || !is_prime(p) || !spec.predicate.holds(p)) return skip(SkipReason::Predicate);
  if (divides_m(spec, p)) return skip(SkipReason::DividesM);
  const auto idx = matching_branches(spec, p);
  if (idx.size() != 1) return skip(SkipReason::BranchAnomaly);
  const Branch& b = spec.branches[idx.front()];
  if (b.rep) {
    if ((2 * static_cast<std::uint64_t>(b.rep->a * b.rep->d)) % p == 0) return skip(SkipReason::Predicate);
    out.rep = represent(p, *b.rep);
    if (!out.rep) return skip(SkipReason::RepresentationAnomaly);
    out.result.x = out.rep->x;
    out.result.y = out.rep->y;
  }
  out.branch = &b;
  return out;
}

VerifyResult finish(Prepared prep, const CongruenceSpec& spec, const Residue& lhs) {
  VerifyResult r = std::move(prep.result);
  const Residue rhs = rhs_value(spec, *prep.branch, r.p, prep.rep);
  r.lhs = lhs.value();
  r.rhs = rhs.value();
  r.outcome = lhs == rhs ? Outcome::Pass : Outcome::Fail;
  return r;
}

}  // namespace

VerifyResult verify(const CongruenceSpec& spec, std::uint64_t p) {
  Prepared prep = prepare(spec, p);
  if (!prep.branch) return prep.result;
  return finish(std::move(prep), spec, lhs_sum(spec, p));
}

SweepSummary summarize(const std::vector<VerifyResult>& rows) {
  SweepSummary s;
  for (const auto& r : rows) {
    const bool gating = r.status == Status::Proven;
    switch (r.outcome) {
      case Outcome::Pass: ++s.pass; break;
      case Outcome::Fail:
        ++s.fail;
        ++(gating ? s.gating_failures : s.nongating_failures);
        break;
      case Outcome::Skip:
        ++s.skip;
        if (r.anomaly()) {
          ++s.anomalies;
          ++(gating ? s.gating_failures : s.nongating_failures);
        }
        break;
    }
  }
  return s;
}

namespace {

void check_range(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw std::invalid_argument("empty prime range");
}

std::vector<std::uint64_t> odd_primes(std::uint64_t lo, std::uint64_t hi) {
  return primes_in(std::max<std::uint64_t>(lo, 3), hi);
}

}  // namespace

SweepReport sweep_serial(const std::vector<CongruenceSpec>& specs, std::uint64_t lo, std::uint64_t hi) {
  check_range(lo, hi);
  SweepReport rep;
  const auto ps = odd_primes(lo, hi);
  for (const auto& s : specs)
    for (std::uint64_t p : ps) rep.rows.push_back(verify(s, p));
  rep.summary = summarize(rep.rows);
  return rep;
}

SweepReport sweep(const std::vector<CongruenceSpec>& specs, std::uint64_t lo, std::uint64_t hi, int workers) {
  check_range(lo, hi);
  const auto ps = odd_primes(lo, hi);
  const std::size_t P = ps.size(), S = specs.size();
  std::vector<VerifyResult> rows(P * S);

  unsigned max_exp = 1;
  for (const auto& s : specs) max_exp = std::max(max_exp, s.mod_exp);

#ifdef _OPENMP
  const int threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#else
  (void)workers;
#endif
  for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(P) - 1; i >= 0; --i) {
    const std::uint64_t p = ps[static_cast<std::size_t>(i)];
    const Modulus m(p, max_exp);
    std::vector<Prepared> prepared;
    prepared.reserve(S);
    std::map<SequenceId, std::size_t> counts;
    for (const auto& s : specs) {
      prepared.push_back(prepare(s, p));
      if (prepared.back().branch) {
        auto& c = counts[s.sequence];
        c = std::max<std::size_t>(c, s.upper(p) + 1);
      }
    }
    std::size_t need = 0;
    for (const auto& [seq, count] : counts) need = std::max(need, factorial_bound(seq, count));
    std::optional<FactorialTable> table;
    std::map<SequenceId, std::vector<std::uint64_t>> cache;
    for (std::size_t j = 0; j < S; ++j) {
      const auto& s = specs[j];
      auto& slot = rows[j * P + static_cast<std::size_t>(i)];
      if (!prepared[j].branch) {
        slot = std::move(prepared[j].result);
        continue;
      }
      if (!table) table.emplace(need, m);
      auto it = cache.find(s.sequence);
      if (it == cache.end()) it = cache.emplace(s.sequence, terms_mod_raw(s.sequence, counts[s.sequence], *table)).first;
      slot = finish(std::move(prepared[j]), s, lhs_sum(s, p, it->second, m));
    }
  }

  SweepReport rep{std::move(rows), {}};
  rep.summary = summarize(rep.rows);
  return rep;
}

SweepReport sweep(const std::vector<std::string>& spec_ids, std::uint64_t lo, std::uint64_t hi, int workers) {
  std::vector<bool> wanted(catalog().size(), false);
  for (const auto& id : spec_ids) wanted[static_cast<std::size_t>(&lookup(id) - catalog().data())] = true;
  std::vector<CongruenceSpec> specs;
  for (std::size_t i = 0; i < wanted.size(); ++i)
    if (wanted[i]) specs.push_back(catalog()[i]);
  return sweep(specs, lo, hi, workers);
}

}  // namespace supercong
