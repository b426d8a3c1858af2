#pragma once

// Arbitrary-precision evaluation of eta, the Weber functions, gamma_2, j and
// the six Hauptmoduls at points of the upper half-plane.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <mpfr.h>

#include "supercong/qseries.hpp"

namespace supercong {

class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 128);
  BigFloat(long x, mpfr_prec_t prec);
  BigFloat(double x, mpfr_prec_t prec);
  BigFloat(const mpq_class& x, mpfr_prec_t prec);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// log10 |x|, -inf for zero.
  double log10_abs() const;
  std::string str(int digits) const;
  int sign() const { return mpfr_sgn(v_); }

  static BigFloat pi(mpfr_prec_t prec);

 private:
  mpfr_t v_;
};

BigFloat operator+(const BigFloat& a, const BigFloat& b);
BigFloat operator-(const BigFloat& a, const BigFloat& b);
BigFloat operator*(const BigFloat& a, const BigFloat& b);
BigFloat operator/(const BigFloat& a, const BigFloat& b);
BigFloat operator-(const BigFloat& a);
bool operator<(const BigFloat& a, const BigFloat& b);
BigFloat abs(const BigFloat& a);
BigFloat sqrt(const BigFloat& a);
BigFloat exp(const BigFloat& a);
BigFloat cos(const BigFloat& a);
BigFloat sin(const BigFloat& a);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat max(const BigFloat& a, const BigFloat& b);

class BigComplex {
 public:
  explicit BigComplex(mpfr_prec_t prec = 128) : re_(prec), im_(prec) {}
  BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
  BigComplex(long re, long im, mpfr_prec_t prec) : re_(re, prec), im_(im, prec) {}

  const BigFloat& re() const { return re_; }
  const BigFloat& im() const { return im_; }
  mpfr_prec_t prec() const { return std::max(re_.prec(), im_.prec()); }

  /// e^{2 pi i k/n}
  static BigComplex root_of_unity(long k, long n, mpfr_prec_t prec);

 private:
  BigFloat re_, im_;
};

BigComplex operator+(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigComplex& b);
BigComplex operator/(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigFloat& r);
BigComplex operator-(const BigComplex& a);
BigComplex conj(const BigComplex& a);
BigFloat abs(const BigComplex& a);
BigComplex exp(const BigComplex& a);
/// Principal branch, argument in (-pi/2, pi/2].
BigComplex sqrt(const BigComplex& a);
BigComplex pow(const BigComplex& a, long e);
/// |a - b| / max(1, |b|)
BigFloat rel_diff(const BigComplex& a, const BigComplex& b);

/// a + b*sqrt(D), D >= 0.
struct QuadValue {
  mpq_class a;
  mpq_class b = 0;
  std::int64_t D = 0;

  BigFloat to_float(mpfr_prec_t prec) const;
  std::string str() const;
};

/// a + b*sqrt(-D), b > 0, D > 0.
struct QuadPoint {
  mpq_class a;
  mpq_class b;
  std::int64_t D;

  BigComplex to_complex(mpfr_prec_t prec) const;
  std::string str() const;
};

mpfr_prec_t digits_to_bits(int digits);

BigComplex eta_num(const BigComplex& tau, mpfr_prec_t prec);

enum class Weber { f, f1, f2 };
std::string to_string(Weber w);
BigComplex weber(const BigComplex& tau, Weber which, mpfr_prec_t prec);

std::pair<BigComplex, BigComplex> gamma2_j(const BigComplex& tau, mpfr_prec_t prec);

BigComplex hauptmodul_num(HauptmodulId id, const BigComplex& tau, mpfr_prec_t prec);

enum class CMFunction { Hauptmodul, Gamma2, J, WeberPower };

struct CMTarget {
  std::string name;
  QuadPoint tau;
  CMFunction function;
  HauptmodulId hauptmodul = HauptmodulId::t;
  Weber weber = Weber::f;
  int power = 1;
  QuadValue expected;
};

const std::vector<CMTarget>& cm_table();

struct NumericResult {
  std::string name;
  bool pass;
  double residual;  // 0 when below double range
  std::string value;
};

BigComplex cm_evaluate(const CMTarget& target, mpfr_prec_t prec);
/// Agreement within 10^-digits at working_digits of precision.
NumericResult cm_check(const CMTarget& target, int digits, int working_digits = 0);
std::vector<NumericResult> cm_check_all(int digits, int working_digits = 0);

struct InvariantTarget {
  std::string name;
  unsigned n;
  bool big;  // G_n from f, otherwise g_n from f1
  int power;
  QuadValue expected;
};

const std::vector<InvariantTarget>& class_invariant_table();
NumericResult class_invariant_check(const InvariantTarget& t, int digits, int working_digits = 0);
std::vector<NumericResult> class_invariant_checks(int digits, int working_digits = 0);

struct IdentityResult {
  std::string name;
  std::size_t samples;
  double max_residual;
  bool pass;
};

/// Random-sample checks of the eta/Weber/gamma_2 identities. tolerance
/// defaults to 2^(-prec/2).
std::vector<IdentityResult> identity_suite(std::size_t samples, mpfr_prec_t prec, std::uint64_t seed = 1,
                                           std::optional<double> tolerance = std::nullopt);

/// Exponent of zeta_24 in the Gamma_0(4) eta transformation, and the
/// Jacobi-symbol sign (a/c_0).
std::pair<long, int> eta_multiplier(long a, long b, long c, long d);

}  // namespace supercong
