#pragma once

// Exact arithmetic modulo prime powers p^k with explicit p-adic valuation
// tracking, plus the small number-theoretic helpers the verifier needs
// (Jacobi symbols, square roots mod p^k, deterministic primality).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace supercong {

class not_invertible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Modulus p^k for an odd prime p. p^k must stay below 2^63 so that residues
/// fit a machine word; every modulus the verifier uses (p < 10^4, k <= 4)
/// satisfies this.
class Modulus {
 public:
  Modulus(std::uint64_t p, unsigned k);

  std::uint64_t p() const noexcept { return p_; }
  unsigned k() const noexcept { return k_; }
  std::uint64_t pk() const noexcept { return pk_; }
  mpz_class pk_big() const;

  /// Same prime, different exponent.
  Modulus with_exponent(unsigned k) const { return Modulus(p_, k); }

  std::uint64_t reduce(std::int64_t a) const noexcept;
  std::uint64_t reduce(const mpz_class& a) const;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    std::uint64_t s = a + b;
    return s >= pk_ ? s - pk_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
    return a >= b ? a - b : a + pk_ - b;
  }
  std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : pk_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
    if (small_) return (a * b) % pk_;
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % pk_);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept;
  /// Inverse of a unit; throws not_invertible when p | a.
  std::uint64_t inverse(std::uint64_t a) const;

  friend bool operator==(const Modulus& a, const Modulus& b) noexcept {
    return a.p_ == b.p_ && a.k_ == b.k_;
  }

 private:
  std::uint64_t p_;
  unsigned k_;
  std::uint64_t pk_;
  bool small_;  // pk < 2^32, products fit in 64 bits
};

/// Least nonnegative residue modulo p^k.
class Residue {
 public:
  Residue(std::uint64_t value, const Modulus& m) : m_(m), v_(value % m.pk()) {}

  static Residue from_int(std::int64_t a, const Modulus& m) { return Residue(m.reduce(a), m); }
  static Residue from_mpz(const mpz_class& a, const Modulus& m) { return Residue(m.reduce(a), m); }

  std::uint64_t value() const noexcept { return v_; }
  const Modulus& modulus() const noexcept { return m_; }

  /// Representative in (-p^k/2, p^k/2]; formatting only.
  std::int64_t symmetric() const noexcept;
  bool is_unit() const noexcept { return v_ % m_.p() != 0; }
  bool is_zero() const noexcept { return v_ == 0; }

  Residue pow(std::uint64_t e) const { return Residue(m_.pow(v_, e), m_); }
  /// Reduction to a smaller exponent of the same prime.
  Residue reduced(const Modulus& coarser) const;

  friend Residue operator+(const Residue& a, const Residue& b);
  friend Residue operator-(const Residue& a, const Residue& b);
  friend Residue operator*(const Residue& a, const Residue& b);
  friend Residue operator-(const Residue& a) { return Residue(a.m_.neg(a.v_), a.m_); }
  Residue& operator+=(const Residue& o) { return *this = *this + o; }
  Residue& operator-=(const Residue& o) { return *this = *this - o; }
  Residue& operator*=(const Residue& o) { return *this = *this * o; }

  friend bool operator==(const Residue& a, const Residue& b) noexcept {
    return a.m_ == b.m_ && a.v_ == b.v_;
  }

 private:
  Modulus m_;
  std::uint64_t v_;
};

/// Multiplicative inverse mod p^k; throws not_invertible when p | a.
Residue inv(const Residue& a);

/// p-adic number p^v * u with u a unit modulo p^k.
struct ValUnit {
  int v;
  Residue u;

  friend ValUnit operator*(const ValUnit& a, const ValUnit& b) { return {a.v + b.v, a.u * b.u}; }
  friend ValUnit operator/(const ValUnit& a, const ValUnit& b) { return {a.v - b.v, a.u * inv(b.u)}; }
  ValUnit pow(unsigned e) const { return {v * static_cast<int>(e), u.pow(e)}; }
};

/// Splits a nonzero integer into valuation and unit part.
ValUnit to_valunit(const mpz_class& a, const Modulus& m);

/// p^v * u reduced modulo p^k (zero once v >= k). Negative valuations are
/// not residues and throw std::domain_error.
Residue to_residue(const ValUnit& x);
/// Same, reduced to `m`, which must share the prime and not exceed the
/// exponent x is known to.
Residue to_residue(const ValUnit& x, const Modulus& m);

/// n! for n = 0..N as valuation/unit pairs, built in one pass, with inverse
/// units kept alongside so binomials cost two multiplications.
class FactorialTable {
 public:
  FactorialTable(std::size_t max_n, const Modulus& m);

  const Modulus& modulus() const noexcept { return m_; }
  std::size_t max_n() const noexcept { return val_.size() - 1; }

  ValUnit operator[](std::size_t n) const { return {val_.at(n), Residue(unit_.at(n), m_)}; }

  /// Raw-word access for inner loops.
  int valuation(std::size_t n) const noexcept { return val_[n]; }
  std::uint64_t unit(std::size_t n) const noexcept { return unit_[n]; }
  std::uint64_t inverse_unit(std::size_t n) const noexcept { return inv_unit_[n]; }

  /// C(n, r); zero-valued (v = 0, u = 0) never occurs since C(n, r) > 0.
  ValUnit binomial(std::size_t n, std::size_t r) const;

 private:
  Modulus m_;
  std::vector<int> val_;
  std::vector<std::uint64_t> unit_;
  std::vector<std::uint64_t> inv_unit_;
};

std::vector<ValUnit> factorial_table(std::size_t max_n, const Modulus& m);
ValUnit binomial_vu(std::int64_t n, std::int64_t r, const FactorialTable& table);

/// Jacobi symbol (a/n) for odd n >= 1; (a/1) = 1.
int jacobi(std::int64_t a, std::int64_t n);

/// Square root of a modulo p^k (Tonelli-Shanks mod p, then Hensel lifting).
/// Returns the lesser of the two roots, or nullopt when a is a non-residue.
std::optional<Residue> sqrt_mod_pk(std::int64_t a, const Modulus& m);

/// Deterministic Miller-Rabin for all 64-bit inputs.
bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi);

/// p-adic valuation of a nonzero integer.
int valuation(const mpz_class& a, std::uint64_t p);

}  // namespace supercong
