#include "supercong/arith.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace supercong {

namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t n) {
  std::uint64_t r = 1 % n;
  a %= n;
  while (e) {
    if (e & 1) r = mulmod64(r, a, n);
    a = mulmod64(a, a, n);
    e >>= 1;
  }
  return r;
}

}  // namespace

// ---------------------------------------------------------------- Modulus

Modulus::Modulus(std::uint64_t p, unsigned k) : p_(p), k_(k), pk_(1) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("modulus base must be an odd prime");
  if (k < 1) throw std::invalid_argument("modulus exponent must be >= 1");
  constexpr std::uint64_t limit = std::uint64_t{1} << 63;
  for (unsigned i = 0; i < k; ++i) {
    if (pk_ > limit / p) throw std::invalid_argument("p^k does not fit below 2^63");
    pk_ *= p;
  }
  small_ = pk_ < (std::uint64_t{1} << 32);
}

mpz_class Modulus::pk_big() const {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p_, k_);
  return r;
}

std::uint64_t Modulus::reduce(std::int64_t a) const noexcept {
  const auto n = static_cast<std::int64_t>(pk_);
  std::int64_t r = a % n;
  return static_cast<std::uint64_t>(r < 0 ? r + n : r);
}

std::uint64_t Modulus::reduce(const mpz_class& a) const {
  mpz_class r;
  mpz_class n = pk_big();
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  return r.get_ui();
}

std::uint64_t Modulus::pow(std::uint64_t a, std::uint64_t e) const noexcept {
  std::uint64_t r = 1 % pk_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t Modulus::inverse(std::uint64_t a) const {
  a %= pk_;
  if (a % p_ == 0) throw not_invertible("residue " + std::to_string(a) + " is divisible by " + std::to_string(p_));
  // Extended Euclid on signed 128-bit to avoid overflow of the cofactors.
  __int128 r0 = static_cast<__int128>(pk_), r1 = a;
  __int128 s0 = 0, s1 = 1;
  while (r1 != 0) {
    __int128 q = r0 / r1;
    __int128 t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  __int128 n = static_cast<__int128>(pk_);
  s0 %= n;
  if (s0 < 0) s0 += n;
  return static_cast<std::uint64_t>(s0);
}

// ---------------------------------------------------------------- Residue

std::int64_t Residue::symmetric() const noexcept {
  const std::uint64_t half = m_.pk() / 2;
  return v_ > half ? static_cast<std::int64_t>(v_) - static_cast<std::int64_t>(m_.pk())
                   : static_cast<std::int64_t>(v_);
}

Residue Residue::reduced(const Modulus& coarser) const {
  if (coarser.p() != m_.p() || coarser.k() > m_.k())
    throw std::invalid_argument("can only reduce to a smaller power of the same prime");
  return Residue(v_ % coarser.pk(), coarser);
}

namespace {
void require_same(const Modulus& a, const Modulus& b) {
  if (!(a == b)) throw std::invalid_argument("residues live modulo different prime powers");
}
}  // namespace

Residue operator+(const Residue& a, const Residue& b) {
  require_same(a.m_, b.m_);
  return Residue(a.m_.add(a.v_, b.v_), a.m_);
}

Residue operator-(const Residue& a, const Residue& b) {
  require_same(a.m_, b.m_);
  return Residue(a.m_.sub(a.v_, b.v_), a.m_);
}

Residue operator*(const Residue& a, const Residue& b) {
  require_same(a.m_, b.m_);
  return Residue(a.m_.mul(a.v_, b.v_), a.m_);
}

Residue inv(const Residue& a) { return Residue(a.modulus().inverse(a.value()), a.modulus()); }

// ---------------------------------------------------------------- ValUnit

int valuation(const mpz_class& a, std::uint64_t p) {
  if (a == 0) throw std::domain_error("valuation of zero");
  mpz_class t = abs(a);
  int v = 0;
  while (mpz_divisible_ui_p(t.get_mpz_t(), p)) {
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), p);
    ++v;
  }
  return v;
}

ValUnit to_valunit(const mpz_class& a, const Modulus& m) {
  const int v = valuation(a, m.p());
  mpz_class pv;
  mpz_ui_pow_ui(pv.get_mpz_t(), m.p(), static_cast<unsigned long>(v));
  mpz_class u = a / pv;
  return {v, Residue::from_mpz(u, m)};
}

Residue to_residue(const ValUnit& x) { return to_residue(x, x.u.modulus()); }

Residue to_residue(const ValUnit& x, const Modulus& m) {
  if (x.v < 0) throw std::domain_error("negative valuation has no residue");
  const Residue u = x.u.modulus() == m ? x.u : x.u.reduced(m);
  if (static_cast<unsigned>(x.v) >= m.k()) return Residue(0, m);
  return Residue(m.mul(m.pow(m.p(), static_cast<std::uint64_t>(x.v)), u.value()), m);
}

// --------------------------------------------------------- FactorialTable

FactorialTable::FactorialTable(std::size_t max_n, const Modulus& m)
    : m_(m), val_(max_n + 1), unit_(max_n + 1), inv_unit_(max_n + 1) {
  const std::uint64_t p = m.p();
  val_[0] = 0;
  unit_[0] = 1 % m.pk();
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::uint64_t c = n;
    int v = 0;
    while (c % p == 0) {
      c /= p;
      ++v;
    }
    val_[n] = val_[n - 1] + v;
    unit_[n] = m.mul(unit_[n - 1], c % m.pk());
  }
  inv_unit_[max_n] = m.inverse(unit_[max_n]);
  for (std::size_t n = max_n; n > 0; --n) {
    std::uint64_t c = n;
    while (c % p == 0) c /= p;
    inv_unit_[n - 1] = m.mul(inv_unit_[n], c % m.pk());
  }
}

ValUnit FactorialTable::binomial(std::size_t n, std::size_t r) const {
  if (r > n) throw std::invalid_argument("binomial requires r <= n");
  if (n > max_n()) throw std::out_of_range("factorial table too short");
  const int v = val_[n] - val_[r] - val_[n - r];
  const std::uint64_t u = m_.mul(unit_[n], m_.mul(inv_unit_[r], inv_unit_[n - r]));
  return {v, Residue(u, m_)};
}

std::vector<ValUnit> factorial_table(std::size_t max_n, const Modulus& m) {
  FactorialTable t(max_n, m);
  std::vector<ValUnit> out;
  out.reserve(max_n + 1);
  for (std::size_t n = 0; n <= max_n; ++n) out.push_back(t[n]);
  return out;
}

ValUnit binomial_vu(std::int64_t n, std::int64_t r, const FactorialTable& table) {
  if (n < 0 || r < 0 || r > n) throw std::invalid_argument("binomial requires 0 <= r <= n");
  return table.binomial(static_cast<std::size_t>(n), static_cast<std::size_t>(r));
}

// ----------------------------------------------------------------- jacobi

int jacobi(std::int64_t a, std::int64_t n) {
  if (n <= 0 || n % 2 == 0) throw std::invalid_argument("jacobi symbol needs odd n >= 1");
  std::uint64_t nn = static_cast<std::uint64_t>(n);
  std::int64_t r = a % n;
  std::uint64_t aa = static_cast<std::uint64_t>(r < 0 ? r + n : r);
  int result = 1;
  while (aa != 0) {
    while (aa % 2 == 0) {
      aa /= 2;
      const std::uint64_t m8 = nn % 8;
      if (m8 == 3 || m8 == 5) result = -result;
    }
    std::swap(aa, nn);
    if (aa % 4 == 3 && nn % 4 == 3) result = -result;
    aa %= nn;
  }
  return nn == 1 ? result : 0;
}

// ------------------------------------------------------------ square root

namespace {

// Tonelli-Shanks modulo the prime p; a must be a nonzero quadratic residue.
std::uint64_t sqrt_mod_prime(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (p % 4 == 3) return powmod64(a, (p + 1) / 4, p);
  std::uint64_t q = p - 1;
  unsigned s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::uint64_t z = 2;
  while (jacobi(static_cast<std::int64_t>(z), static_cast<std::int64_t>(p)) != -1) ++z;
  std::uint64_t c = powmod64(z, q, p);
  std::uint64_t x = powmod64(a, (q + 1) / 2, p);
  std::uint64_t t = powmod64(a, q, p);
  unsigned m = s;
  while (t != 1) {
    unsigned i = 0;
    std::uint64_t t2 = t;
    while (t2 != 1) {
      t2 = mulmod64(t2, t2, p);
      ++i;
    }
    std::uint64_t b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b = mulmod64(b, b, p);
    x = mulmod64(x, b, p);
    c = mulmod64(b, b, p);
    t = mulmod64(t, c, p);
    m = i;
  }
  return x;
}

}  // namespace

std::optional<Residue> sqrt_mod_pk(std::int64_t a, const Modulus& m) {
  const auto p = static_cast<std::int64_t>(m.p());
  if (a % p == 0) throw std::invalid_argument("sqrt_mod_pk requires p not dividing a");
  if (jacobi(a, p) != 1) return std::nullopt;
  const std::uint64_t target = m.reduce(a);
  std::uint64_t r = sqrt_mod_prime(target % m.p(), m.p()) % m.pk();
  // Newton/Hensel: r <- r - (r^2 - a) / (2r); each step at least doubles the
  // number of correct p-adic digits, so k steps is always enough.
  for (unsigned i = 0; i < m.k(); ++i) {
    const std::uint64_t f = m.sub(m.mul(r, r), target);
    if (f == 0) break;
    r = m.sub(r, m.mul(f, m.inverse(m.add(r, r))));
  }
  const std::uint64_t other = m.neg(r);
  return Residue(std::min(r, other), m);
}

// ------------------------------------------------------------- primality

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> witnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t w : witnesses) {
    if (n % w == 0) return n == w;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (std::uint64_t w : witnesses) {
    std::uint64_t x = powmod64(w, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi < lo) return out;
  for (std::uint64_t n = lo;; ++n) {
    if (is_prime(n)) out.push_back(n);
    if (n == hi) break;
  }
  return out;
}

}  // namespace supercong
