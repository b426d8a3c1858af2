#include <random>

#include "doctest.h"
#include "supercong/arith.hpp"

using namespace supercong;

TEST_CASE("modulus validation") {
  CHECK_THROWS_AS(Modulus(9, 2), std::invalid_argument);
  CHECK_THROWS_AS(Modulus(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(Modulus(3, 0), std::invalid_argument);
  CHECK_THROWS(Modulus(1000003, 4));
  CHECK(Modulus(7, 3).pk() == 343);
  CHECK(Modulus(46337, 4).pk_big() == mpz_class(46337) * 46337 * 46337 * 46337);
}

TEST_CASE("inverse") {
  const Modulus m(3, 3);
  CHECK(inv(Residue(2, m)).value() == 14);
  CHECK_THROWS_AS(inv(Residue(6, m)), not_invertible);
  CHECK(Residue::from_int(-1, m).value() == 26);
  CHECK(Residue::from_int(-1, m).symmetric() == -1);
}

TEST_CASE("mixed moduli are rejected") {
  CHECK_THROWS(Residue(1, Modulus(5, 2)) + Residue(1, Modulus(5, 3)));
  CHECK_THROWS(Residue(1, Modulus(5, 2)) * Residue(1, Modulus(7, 2)));
}

TEST_CASE("residue arithmetic agrees with mpz") {
  std::mt19937_64 rng(7);
  for (auto [p, k] : {std::pair{3ull, 3u}, {101ull, 4u}, {65521ull, 3u}, {2147483647ull, 2u}}) {
    const Modulus m(p, k);
    const mpz_class M = m.pk_big();
    for (int i = 0; i < 200; ++i) {
      const std::uint64_t a = rng() % m.pk(), b = rng() % m.pk();
      const mpz_class A = mpz_class(std::to_string(a)), B = mpz_class(std::to_string(b));
      auto ref = [&](mpz_class x) {
        mpz_class r;
        mpz_mod(r.get_mpz_t(), x.get_mpz_t(), M.get_mpz_t());
        return std::stoull(r.get_str());
      };
      CHECK(m.mul(a, b) == ref(A * B));
      CHECK(m.add(a, b) == ref(A + B));
      CHECK(m.sub(a, b) == ref(A - B));
      if (a % p != 0) CHECK(m.mul(a, m.inverse(a)) == 1);
    }
  }
}

TEST_CASE("valuation-unit factorials") {
  const Modulus m(3, 3);
  const FactorialTable t(10, m);
  CHECK(t[3].v == 1);
  CHECK(t[3].u.value() == 2);
  const ValUnit c42 = binomial_vu(4, 2, t);
  CHECK(c42.v == 1);
  CHECK(c42.u.value() == 2);
  CHECK(to_residue(c42).value() == 6);
  CHECK(to_residue(ValUnit{3, Residue(5, m)}).value() == 0);
  CHECK_THROWS(to_residue(ValUnit{-1, Residue(1, m)}));
  CHECK_THROWS(binomial_vu(3, 4, t));

  const FactorialTable t7(20, Modulus(7, 3));
  const ValUnit c84 = binomial_vu(8, 4, t7);
  CHECK(c84.v == 1);
  CHECK(c84.u.value() == 10);
}

TEST_CASE("factorial table agrees with exact binomials") {
  for (std::uint64_t p : {3ull, 5ull, 13ull, 101ull}) {
    const Modulus m(p, 3);
    const FactorialTable t(300, m);
    for (unsigned n = 0; n <= 300; n += 7)
      for (unsigned r = 0; r <= n; r += 3) {
        mpz_class c;
        mpz_bin_uiui(c.get_mpz_t(), n, r);
        const ValUnit vu = t.binomial(n, r);
        CHECK(vu.v == valuation(c, p));
        CHECK(to_valunit(c, m).u == vu.u);
      }
  }
}

TEST_CASE("jacobi symbol") {
  CHECK(jacobi(3, 7) == -1);
  CHECK(jacobi(2, 7) == 1);
  CHECK(jacobi(5, 1) == 1);
  CHECK(jacobi(0, 9) == 0);
  CHECK_THROWS(jacobi(3, 8));
  CHECK_THROWS(jacobi(3, -5));
  for (std::uint64_t p : primes_in(3, 400))
    for (std::int64_t a = -30; a <= 30; ++a) {
      const Modulus m(p, 1);
      const std::uint64_t e = m.pow(m.reduce(a), (p - 1) / 2);
      const int euler = e == 0 ? 0 : (e == 1 ? 1 : -1);
      CHECK(jacobi(a, static_cast<std::int64_t>(p)) == euler);
    }
}

TEST_CASE("square roots modulo prime powers") {
  const auto r = sqrt_mod_pk(2, Modulus(7, 2));
  REQUIRE(r);
  CHECK((r->value() == 10 || r->value() == 39));
  CHECK(!sqrt_mod_pk(3, Modulus(7, 3)));
  CHECK_THROWS(sqrt_mod_pk(14, Modulus(7, 3)));
  for (std::uint64_t p : primes_in(3, 300)) {
    const Modulus m(p, 4);
    for (std::int64_t a : {-7, -3, -2, -1, 2, 5, 6, 13, 29}) {
      if (a % static_cast<std::int64_t>(p) == 0) continue;
      const auto s = sqrt_mod_pk(a, m);
      CHECK(s.has_value() == (jacobi(a, static_cast<std::int64_t>(p)) == 1));
      if (s) CHECK(*s * *s == Residue::from_int(a, m));
    }
  }
}

TEST_CASE("primality") {
  CHECK(primes_in(90, 100) == std::vector<std::uint64_t>{97});
  std::vector<bool> sieve(5000, true);
  sieve[0] = sieve[1] = false;
  for (std::size_t i = 2; i * i < sieve.size(); ++i)
    if (sieve[i])
      for (std::size_t j = i * i; j < sieve.size(); j += i) sieve[j] = false;
  for (std::uint64_t n = 0; n < sieve.size(); ++n) CHECK(is_prime(n) == sieve[n]);
  CHECK(is_prime(18446744073709551557ull));
  CHECK(!is_prime(3215031751ull));
}
