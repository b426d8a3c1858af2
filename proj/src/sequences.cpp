#include "supercong/sequences.hpp"

#include <stdexcept>

namespace supercong {

std::string_view to_string(SequenceId id) {
  switch (id) {
    case SequenceId::CB3: return "CB3";
    case SequenceId::CB4: return "CB4";
    case SequenceId::CB6: return "CB6";
    case SequenceId::V: return "V";
    case SequenceId::T: return "T";
    case SequenceId::D: return "D";
    case SequenceId::A: return "A";
  }
  return "?";
}

std::optional<SequenceId> parse_sequence(std::string_view name) {
  for (SequenceId id : kAllSequences)
    if (to_string(id) == name) return id;
  return std::nullopt;
}

namespace {

mpz_class C(unsigned long n, unsigned long r) {
  mpz_class b;
  if (r > n) return 0;
  mpz_bin_uiui(b.get_mpz_t(), n, r);
  return b;
}

mpz_class pw(long base, unsigned long e) {
  mpz_class r;
  mpz_class b = base;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

mpz_class sq(const mpz_class& a) { return a * a; }

}  // namespace

mpz_class exact_term(SequenceId id, unsigned n) {
  mpz_class s = 0;
  switch (id) {
    case SequenceId::CB3: return C(2 * n, n) * C(2 * n, n) * C(2 * n, n);
    case SequenceId::CB4: return sq(C(2 * n, n)) * C(4 * n, 2 * n);
    case SequenceId::CB6: return C(2 * n, n) * C(3 * n, n) * C(6 * n, 3 * n);
    case SequenceId::V:
      for (unsigned k = 0; k <= n; ++k) s += sq(C(2 * k, k)) * sq(C(2 * n - 2 * k, n - k));
      return s;
    case SequenceId::T:
      for (unsigned k = 0; k <= n; ++k) s += sq(C(n, k)) * sq(C(2 * k, n));
      return s;
    case SequenceId::D:
      for (unsigned k = 0; k <= n; ++k) s += sq(C(n, k)) * C(2 * k, k) * C(2 * n - 2 * k, n - k);
      return s;
    case SequenceId::A:
      for (unsigned k = 0; k <= n; ++k) s += sq(C(n, k)) * sq(C(n + k, k));
      return s;
  }
  throw std::logic_error("unknown sequence");
}

std::vector<mpz_class> alternate_formulas(SequenceId id, unsigned n) {
  std::vector<mpz_class> out{exact_term(id, n)};
  if (id == SequenceId::V) {
    mpz_class b = 0, c = 0;
    for (unsigned k = 0; k <= n; ++k) {
      mpz_class t = C(n, k) * C(n + k, k) * sq(C(2 * k, k)) * pw(16, n - k);
      b += (k % 2 ? -t : t);
      c += sq(C(2 * k, k)) * C(2 * k, k) * C(k, n - k) * pw(-16, n - k);
    }
    out.push_back(b);
    out.push_back(c);
  } else if (id == SequenceId::T) {
    mpz_class b = 0;
    for (unsigned k = 0; 2 * k <= n; ++k)
      b += sq(C(2 * k, k)) * C(4 * k, 2 * k) * C(n + 2 * k, 4 * k) * pw(4, n - 2 * k);
    out.push_back(b);
  }
  return out;
}

std::size_t factorial_bound(SequenceId id, std::size_t count) {
  const std::size_t n = count == 0 ? 0 : count - 1;
  switch (id) {
    case SequenceId::CB4: return 4 * n;
    case SequenceId::CB6: return 6 * n;
    default: return 2 * n;
  }
}

namespace {

// Accumulates products of binomials as (valuation, unit) in machine words.
class Kernel {
 public:
  explicit Kernel(const FactorialTable& t) : t_(t), m_(t.modulus()) {
    ppow_.push_back(1 % m_.pk());
    for (unsigned i = 1; i < m_.k(); ++i) ppow_.push_back(m_.mul(ppow_.back(), m_.p()));
  }

  struct VU {
    int v;
    std::uint64_t u;
  };

  VU binom(std::size_t n, std::size_t r) const {
    return {t_.valuation(n) - t_.valuation(r) - t_.valuation(n - r),
            m_.mul(t_.unit(n), m_.mul(t_.inverse_unit(r), t_.inverse_unit(n - r)))};
  }
  VU mul(VU a, VU b) const { return {a.v + b.v, m_.mul(a.u, b.u)}; }
  VU sq(VU a) const { return mul(a, a); }
  std::uint64_t value(VU a) const {
    return a.v >= static_cast<int>(m_.k()) ? 0 : m_.mul(ppow_[static_cast<std::size_t>(a.v)], a.u);
  }
  const Modulus& modulus() const { return m_; }

 private:
  const FactorialTable& t_;
  const Modulus& m_;
  std::vector<std::uint64_t> ppow_;
};

}  // namespace

std::vector<std::uint64_t> terms_mod_raw(SequenceId id, std::size_t count, const FactorialTable& table) {
  if (table.max_n() < factorial_bound(id, count)) throw std::out_of_range("factorial table too short");
  const Kernel K(table);
  const Modulus& m = K.modulus();
  std::vector<std::uint64_t> out(count);
  for (std::size_t n = 0; n < count; ++n) {
    std::uint64_t s = 0;
    switch (id) {
      case SequenceId::CB3: {
        auto b = K.binom(2 * n, n);
        s = K.value(K.mul(K.sq(b), b));
        break;
      }
      case SequenceId::CB4:
        s = K.value(K.mul(K.sq(K.binom(2 * n, n)), K.binom(4 * n, 2 * n)));
        break;
      case SequenceId::CB6:
        s = K.value(K.mul(K.mul(K.binom(2 * n, n), K.binom(3 * n, n)), K.binom(6 * n, 3 * n)));
        break;
      case SequenceId::V:
        for (std::size_t k = 0; k <= n; ++k)
          s = m.add(s, K.value(K.sq(K.mul(K.binom(2 * k, k), K.binom(2 * n - 2 * k, n - k)))));
        break;
      case SequenceId::T:
        for (std::size_t k = (n + 1) / 2; k <= n; ++k)
          s = m.add(s, K.value(K.sq(K.mul(K.binom(n, k), K.binom(2 * k, n)))));
        break;
      case SequenceId::D:
        for (std::size_t k = 0; k <= n; ++k)
          s = m.add(s, K.value(K.mul(K.mul(K.sq(K.binom(n, k)), K.binom(2 * k, k)),
                                     K.binom(2 * n - 2 * k, n - k))));
        break;
      case SequenceId::A:
        for (std::size_t k = 0; k <= n; ++k)
          s = m.add(s, K.value(K.sq(K.mul(K.binom(n, k), K.binom(n + k, k)))));
        break;
    }
    out[n] = s;
  }
  return out;
}

std::vector<Residue> terms_mod(SequenceId id, std::size_t count, const FactorialTable& table) {
  std::vector<Residue> out;
  out.reserve(count);
  for (std::uint64_t r : terms_mod_raw(id, count, table)) out.emplace_back(r, table.modulus());
  return out;
}

std::vector<Residue> terms_mod(SequenceId id, std::size_t count, const Modulus& m) {
  return terms_mod(id, count, FactorialTable(factorial_bound(id, count), m));
}

}  // namespace supercong
