#include <cmath>

#include "doctest.h"
#include "supercong/highprec.hpp"

using namespace supercong;

namespace {

constexpr mpfr_prec_t kBits = 320;

BigComplex at(long a_num, long a_den, long b_num, long b_den, std::int64_t D) {
  return QuadPoint{mpq_class(a_num, a_den), mpq_class(b_num, b_den), D}.to_complex(kBits);
}

double err(const BigComplex& a, const BigComplex& b) { return rel_diff(a, b).to_double(); }

BigComplex real(const QuadValue& v) { return BigComplex(v.to_float(kBits), BigFloat(0L, kBits)); }

}  // namespace

TEST_CASE("eta functional equations") {
  const BigComplex tau = at(1, 7, 9, 10, 1);
  const BigComplex e = eta_num(tau, kBits);
  const BigComplex one(1, 0, kBits);
  CHECK(err(eta_num(tau + one, kBits), BigComplex::root_of_unity(1, 24, kBits) * e) < 1e-80);
  const BigComplex i(0, 1, kBits);
  const BigComplex s = eta_num(-(one / tau), kBits);
  CHECK(err(s, sqrt(-(i * tau)) * e) < 1e-80);
}

TEST_CASE("j at classical points") {
  const auto [g_i, j_i] = gamma2_j(at(0, 1, 1, 1, 1), kBits);
  CHECK(err(j_i, BigComplex(1728, 0, kBits)) < 1e-80);
  CHECK(err(g_i * g_i * g_i, j_i) < 1e-80);
  const auto [g7, j7] = gamma2_j(at(0, 1, 1, 1, 7), kBits);
  CHECK(err(g7, BigComplex(255, 0, kBits)) < 1e-80);
  const auto [g3, j3] = gamma2_j(at(1, 2, 1, 2, 3), kBits);
  CHECK(abs(j3).to_double() < 1e-70);
}

TEST_CASE("Weber values at sqrt(-7)") {
  const BigComplex tau = at(0, 1, 1, 1, 7);
  const BigComplex f8 = pow(weber(tau, Weber::f, kBits), 8);
  const BigComplex f18 = pow(weber(tau, Weber::f1, kBits), 8);
  const BigComplex f28 = pow(weber(tau, Weber::f2, kBits), 8);
  CHECK(err(f8, BigComplex(16, 0, kBits)) < 1e-80);
  const BigComplex hi = real({8, 3, 7}), lo = real({8, -3, 7});
  CHECK(err(f18, hi) < 1e-80);
  CHECK(err(f28, lo) < 1e-80);
  CHECK(err(f18, f28) > 1);
  // -16 is the spurious root of x^3 - 255x + 16
  CHECK(err(f18, BigComplex(-16, 0, kBits)) > 1);
}

TEST_CASE("CM table") {
  CHECK(cm_table().size() >= 32);
  for (const auto& r : cm_check_all(60, 80)) {
    INFO(r.name, " residual=", r.residual);
    CHECK(r.pass);
    CHECK(r.residual < 1e-60);
  }
  for (const auto& r : class_invariant_checks(60, 80)) {
    INFO(r.name);
    CHECK(r.pass);
  }
}

TEST_CASE("perturbed target fails by the perturbation") {
  CMTarget t = cm_table().front();
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 30);
  t.expected.a += mpq_class(1, big);
  const auto r = cm_check(t, 60, 80);
  CHECK(!r.pass);
  CHECK(r.residual > 1e-31);
  CHECK(r.residual < 1e-29);
}

TEST_CASE("doubling precision is stable") {
  for (const auto& t : cm_table()) {
    const BigComplex a = cm_evaluate(t, 256);
    const BigComplex b = cm_evaluate(t, 512);
    INFO(t.name);
    CHECK(err(a, b) < 1e-60);
  }
}

TEST_CASE("Gamma_0(4) multiplier") {
  CHECK_THROWS(eta_multiplier(1, 1, 4, 4));
  CHECK_THROWS(eta_multiplier(1, 0, 2, 1));
  CHECK_THROWS(eta_multiplier(1, 0, -4, 1));
  for (auto [a, b, c, d] : {std::array<long, 4>{1, 0, 4, 1}, {3, 1, 8, 3}, {-1, 1, 4, -5}, {5, 2, 12, 5}}) {
    const auto [e, s] = eta_multiplier(a, b, c, d);
    CHECK(e >= 0);
    CHECK(e < 24);
    CHECK(std::abs(s) == 1);
  }
}

TEST_CASE("identity suite") {
  const auto res = identity_suite(20, 256, 5);
  CHECK(res.size() == 11);
  for (const auto& r : res) {
    INFO(r.name, " ", r.max_residual);
    CHECK(r.pass);
    CHECK(r.max_residual < 1e-30);
  }
}
