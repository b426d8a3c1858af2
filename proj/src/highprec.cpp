#include "supercong/highprec.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "supercong/arith.hpp"

namespace supercong {

// ------------------------------------------------------------ BigFloat

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long x, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_si(v_, x, MPFR_RNDN);
}

BigFloat::BigFloat(double x, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_d(v_, x, MPFR_RNDN);
}

BigFloat::BigFloat(const mpq_class& x, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, o.prec());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

double BigFloat::log10_abs() const {
  if (mpfr_zero_p(v_)) return -INFINITY;
  mpfr_t t;
  mpfr_init2(t, 64);
  mpfr_abs(t, v_, MPFR_RNDN);
  mpfr_log10(t, t, MPFR_RNDN);
  const double r = mpfr_get_d(t, MPFR_RNDN);
  mpfr_clear(t);
  return r;
}

std::string BigFloat::str(int digits) const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rg", digits, v_);
  std::string r(s);
  mpfr_free_str(s);
  return r;
}

BigFloat BigFloat::pi(mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

namespace {

mpfr_prec_t pmax(const BigFloat& a, const BigFloat& b) { return std::max(a.prec(), b.prec()); }

template <typename F>
BigFloat binop(const BigFloat& a, const BigFloat& b, F f) {
  BigFloat r(pmax(a, b));
  f(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

template <typename F>
BigFloat unop(const BigFloat& a, F f) {
  BigFloat r(a.prec());
  f(r.get(), a.get(), MPFR_RNDN);
  return r;
}

BigFloat widen(const BigFloat& a, mpfr_prec_t prec) {
  BigFloat r(std::max(prec, a.prec()));
  mpfr_set(r.get(), a.get(), MPFR_RNDN);
  return r;
}

BigComplex widen(const BigComplex& z, mpfr_prec_t prec) { return {widen(z.re(), prec), widen(z.im(), prec)}; }

}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) { return binop(a, b, mpfr_add); }
BigFloat operator-(const BigFloat& a, const BigFloat& b) { return binop(a, b, mpfr_sub); }
BigFloat operator*(const BigFloat& a, const BigFloat& b) { return binop(a, b, mpfr_mul); }
BigFloat operator/(const BigFloat& a, const BigFloat& b) { return binop(a, b, mpfr_div); }
BigFloat operator-(const BigFloat& a) { return unop(a, mpfr_neg); }
bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.get(), b.get()) != 0; }
BigFloat abs(const BigFloat& a) { return unop(a, mpfr_abs); }
BigFloat sqrt(const BigFloat& a) { return unop(a, mpfr_sqrt); }
BigFloat exp(const BigFloat& a) { return unop(a, mpfr_exp); }
BigFloat cos(const BigFloat& a) { return unop(a, mpfr_cos); }
BigFloat sin(const BigFloat& a) { return unop(a, mpfr_sin); }
BigFloat atan2(const BigFloat& y, const BigFloat& x) { return binop(y, x, mpfr_atan2); }
BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

// ------------------------------------------------------------ BigComplex

BigComplex BigComplex::root_of_unity(long k, long n, mpfr_prec_t prec) {
  const BigFloat theta = BigFloat::pi(prec + 8) * BigFloat(2 * k, prec + 8) / BigFloat(n, prec + 8);
  return {cos(theta), sin(theta)};
}

BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re() + b.re(), a.im() + b.im()}; }
BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re() - b.re(), a.im() - b.im()}; }
BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  return {a.re() * b.re() - a.im() * b.im(), a.re() * b.im() + a.im() * b.re()};
}
BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  const BigFloat d = b.re() * b.re() + b.im() * b.im();
  return {(a.re() * b.re() + a.im() * b.im()) / d, (a.im() * b.re() - a.re() * b.im()) / d};
}
BigComplex operator*(const BigComplex& a, const BigFloat& r) { return {a.re() * r, a.im() * r}; }
BigComplex operator-(const BigComplex& a) { return {-a.re(), -a.im()}; }
BigComplex conj(const BigComplex& a) { return {a.re(), -a.im()}; }

BigFloat abs(const BigComplex& a) { return binop(a.re(), a.im(), mpfr_hypot); }

BigComplex exp(const BigComplex& a) {
  const BigFloat m = exp(a.re());
  return {m * cos(a.im()), m * sin(a.im())};
}

BigComplex sqrt(const BigComplex& a) {
  const BigFloat r = sqrt(abs(a));
  BigFloat half_theta = atan2(a.im(), a.re());
  mpfr_div_2ui(half_theta.get(), half_theta.get(), 1, MPFR_RNDN);
  return {r * cos(half_theta), r * sin(half_theta)};
}

BigComplex pow(const BigComplex& a, long e) {
  if (e < 0) return BigComplex(1, 0, a.prec()) / pow(a, -e);
  BigComplex r(1, 0, a.prec()), b = a;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e > 0) b = b * b;
  }
  return r;
}

BigFloat rel_diff(const BigComplex& a, const BigComplex& b) {
  return abs(a - b) / max(BigFloat(1L, b.prec()), abs(b));
}

// ------------------------------------------------------------ exact points

BigFloat QuadValue::to_float(mpfr_prec_t prec) const {
  BigFloat r(a, prec);
  if (sgn(b) != 0) r = r + BigFloat(b, prec) * sqrt(BigFloat(static_cast<long>(D), prec));
  return r;
}

std::string QuadValue::str() const {
  std::ostringstream os;
  if (sgn(b) == 0 || sgn(a) != 0) os << a.get_str();
  if (sgn(b) != 0) {
    if (sgn(a) != 0) os << (sgn(b) > 0 ? "+" : "-");
    else if (sgn(b) < 0) os << "-";
    mpq_class ab = abs(b);
    if (ab != 1) os << ab.get_str() << "*";
    os << "sqrt(" << D << ")";
  }
  return os.str();
}

BigComplex QuadPoint::to_complex(mpfr_prec_t prec) const {
  return {BigFloat(a, prec), BigFloat(b, prec) * sqrt(BigFloat(static_cast<long>(D), prec))};
}

std::string QuadPoint::str() const {
  std::ostringstream os;
  if (sgn(a) != 0) os << a.get_str() << "+";
  if (b != 1) os << b.get_str() << "*";
  os << "sqrt(-" << D << ")";
  return os.str();
}

mpfr_prec_t digits_to_bits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + 1;
}

// ------------------------------------------------------------ eta & co

BigComplex eta_num(const BigComplex& tau, mpfr_prec_t prec) {
  if (tau.im().sign() <= 0) throw std::invalid_argument("tau must lie in the upper half-plane");
  const double y = std::max(tau.im().to_double(), 1e-300);
  const double x = std::abs(tau.re().to_double());
  constexpr double kPi = 3.141592653589793, kLn2 = 0.6931471805599453;
  const double guard = 16;
  const double loss = y < 1 ? kPi / (12 * y * kLn2) + 8 : 0;
  const double target = static_cast<double>(prec) + guard + loss + 4;
  const double e_max = target * kLn2 / (2 * kPi * y);
  const auto wp = static_cast<mpfr_prec_t>(prec + guard + std::ceil(loss) +
                                           std::ceil(std::log2(1 + 2 * kPi * (x + y) * (e_max + 1))) + 8);

  const BigComplex t = widen(tau, wp);
  const BigFloat twopi = BigFloat::pi(wp) * BigFloat(2L, wp);
  const BigComplex z(-(t.im() * twopi), t.re() * twopi);  // 2 pi i tau

  auto q_pow = [&](long e) { return exp(z * BigFloat(e, wp)); };
  BigComplex sum(1, 0, wp);
  for (long k = 1;; ++k) {
    const long e1 = k * (3 * k - 1) / 2;
    if (static_cast<double>(e1) > e_max) break;
    const long e2 = k * (3 * k + 1) / 2;
    BigComplex term = q_pow(e1);
    if (static_cast<double>(e2) <= e_max) term = term + q_pow(e2);
    sum = (k % 2 == 0) ? sum + term : sum - term;
  }
  return exp(z * BigFloat(mpq_class(1, 24), wp)) * sum;
}

std::string to_string(Weber w) {
  switch (w) {
    case Weber::f: return "f";
    case Weber::f1: return "f1";
    case Weber::f2: return "f2";
  }
  return "?";
}

namespace {

BigComplex scale(const BigComplex& z, const mpq_class& r) {
  const BigFloat s(r, z.prec());
  return z * s;
}

BigComplex shift(const BigComplex& z, long n) { return {z.re() + BigFloat(n, z.re().prec()), z.im()}; }

BigComplex minus_inverse(const BigComplex& z) { return -(BigComplex(1, 0, z.prec()) / z); }

}  // namespace

BigComplex weber(const BigComplex& tau, Weber which, mpfr_prec_t prec) {
  const mpfr_prec_t wp = prec + 8;
  const BigComplex t = widen(tau, wp);
  const BigComplex e = eta_num(t, wp);
  switch (which) {
    case Weber::f:
      return BigComplex::root_of_unity(-1, 48, wp) * eta_num(scale(shift(t, 1), mpq_class(1, 2)), wp) / e;
    case Weber::f1: return eta_num(scale(t, mpq_class(1, 2)), wp) / e;
    case Weber::f2: return eta_num(scale(t, 2), wp) / e * sqrt(BigFloat(2L, wp));
  }
  throw std::logic_error("unknown Weber function");
}

std::pair<BigComplex, BigComplex> gamma2_j(const BigComplex& tau, mpfr_prec_t prec) {
  const mpfr_prec_t wp = prec + 16;
  const BigComplex f8 = pow(weber(tau, Weber::f, wp), 8);
  const BigComplex g2 = (pow(f8, 3) - BigComplex(16, 0, wp)) / f8;
  return {g2, pow(g2, 3)};
}

namespace {

BigComplex eta_product(const BigComplex& tau, const std::vector<std::pair<long, int>>& factors, mpfr_prec_t prec) {
  BigComplex r(1, 0, prec);
  for (const auto& [m, e] : factors) r = r * pow(eta_num(scale(tau, m), prec), e);
  return r;
}

}  // namespace

BigComplex hauptmodul_num(HauptmodulId id, const BigComplex& tau, mpfr_prec_t prec) {
  const mpfr_prec_t wp = prec + 16;
  const BigComplex t = widen(tau, wp);
  switch (id) {
    case HauptmodulId::t: return eta_product(t, {{1, 24}, {4, 24}, {2, -48}}, wp);
    case HauptmodulId::u: {
      const BigComplex X = eta_product(t, {{2, 24}, {1, -24}}, wp);
      return X / pow(BigComplex(1, 0, wp) + X * BigFloat(64L, wp), 2);
    }
    case HauptmodulId::s: return eta_product(t, {{4, 8}, {1, -8}}, wp);
    case HauptmodulId::w: return eta_product(t, {{1, 8}, {8, 8}, {2, -8}, {4, -8}}, wp);
    case HauptmodulId::v: return eta_product(t, {{1, 6}, {3, 6}, {4, 6}, {12, 6}, {2, -12}, {6, -12}}, wp);
    case HauptmodulId::h: return eta_product(t, {{1, 12}, {6, 12}, {2, -12}, {3, -12}}, wp);
  }
  throw std::logic_error("unknown Hauptmodul");
}

// ------------------------------------------------------------ CM table

const std::vector<CMTarget>& cm_table() {
  static const std::vector<CMTarget> table = [] {
    using H = HauptmodulId;
    std::vector<CMTarget> t;
    auto hm = [&](H id, QuadPoint tau, QuadValue v) {
      CMTarget c{to_string(id) + "(" + tau.str() + ")", tau, CMFunction::Hauptmodul, id, Weber::f, 1, v};
      t.push_back(std::move(c));
    };
    auto q = [](long n, long d = 1) { return QuadValue{mpq_class(n, d)}; };
    auto pt = [](long a_num, long a_den, long b_num, long b_den, std::int64_t D) {
      return QuadPoint{mpq_class(a_num, a_den), mpq_class(b_num, b_den), D};
    };

    hm(H::t, pt(3, 8, 1, 8, 7), q(1));
    hm(H::t, pt(0, 1, 1, 2, 7), q(1, 4096));
    hm(H::t, pt(3, 4, 1, 4, 3), q(1, 16));
    hm(H::t, pt(0, 1, 1, 2, 3), q(1, 256));
    hm(H::t, pt(1, 2, 1, 2, 1), q(-1, 8));
    hm(H::t, pt(1, 2, 1, 2, 2), q(-1, 64));

    hm(H::u, pt(0, 1, 1, 2, 2), q(1, 256));
    hm(H::u, pt(1, 2, 1, 2, 3), q(-1, 144));
    hm(H::u, pt(1, 4, 1, 4, 1), q(1, 648));
    hm(H::u, pt(1, 2, 1, 2, 7), q(-1, 3969));
    hm(H::u, pt(1, 4, 1, 4, 7), q(1, 81));
    hm(H::u, pt(1, 2, 3, 2, 1), q(-1, 12288));
    hm(H::u, pt(1, 2, 5, 2, 1), q(-1, 6635520));
    hm(H::u, pt(1, 2, 1, 2, 5), q(-1, 1024));
    hm(H::u, pt(1, 2, 1, 2, 13), q(-1, 82944));
    hm(H::u, pt(1, 2, 1, 2, 37), q(-1, 14112L * 14112L));
    hm(H::u, pt(0, 1, 1, 2, 6), q(1, 48 * 48));
    hm(H::u, pt(0, 1, 1, 2, 10), q(1, 12 * 12 * 12 * 12));
    hm(H::u, pt(0, 1, 3, 2, 2), q(1, 28L * 28 * 28 * 28));
    hm(H::u, pt(0, 1, 1, 2, 22), q(1, 1584L * 1584));
    hm(H::u, pt(0, 1, 1, 2, 58), q(1, 396L * 396 * 396 * 396));

    hm(H::s, pt(0, 1, 1, 2, 1), q(1, 16));
    hm(H::s, pt(-1, 4, 1, 4, 1), q(-1, 8));

    hm(H::w, pt(1, 2, 1, 4, 2), q(-1, 4));
    hm(H::w, pt(5, 16, 1, 16, 7), q(1));
    hm(H::w, pt(1, 8, 1, 8, 7), q(1, 16));

    hm(H::v, pt(1, 6, 1, 6, 2), q(1, 8));
    hm(H::v, pt(1, 2, 1, 6, 3), q(-1, 2));
    hm(H::v, pt(1, 2, 1, 3, 3), q(-1, 32));
    hm(H::v, pt(1, 2, 1, 6, 6), q(-1, 8));

    hm(H::h, pt(1, 3, 1, 6, 2), q(1));
    hm(H::h, pt(1, 2, 1, 6, 3), q(-1));

    auto other = [&](std::string name, QuadPoint tau, CMFunction fn, Weber w, int power, QuadValue v) {
      t.push_back(CMTarget{std::move(name) + "(" + tau.str() + ")", tau, fn, HauptmodulId::t, w, power, v});
    };
    other("gamma2", pt(0, 1, 1, 1, 7), CMFunction::Gamma2, Weber::f, 1, q(255));
    other("gamma2", pt(1, 2, 1, 2, 3), CMFunction::Gamma2, Weber::f, 1, q(0));
    other("j", pt(0, 1, 1, 1, 1), CMFunction::J, Weber::f, 1, q(1728));
    other("j", pt(1, 2, 1, 2, 3), CMFunction::J, Weber::f, 1, q(0));
    other("j", pt(3, 2, 1, 2, 7), CMFunction::J, Weber::f, 1, q(-3375));
    other("f1^2", pt(0, 1, 1, 1, 2), CMFunction::WeberPower, Weber::f1, 2, QuadValue{0, 1, 2});
    other("f2^24", pt(0, 1, 1, 2, 2), CMFunction::WeberPower, Weber::f2, 24, q(64));
    other("f^24", pt(0, 1, 1, 1, 3), CMFunction::WeberPower, Weber::f, 24, q(256));
    return t;
  }();
  return table;
}

BigComplex cm_evaluate(const CMTarget& target, mpfr_prec_t prec) {
  const BigComplex tau = target.tau.to_complex(prec + 16);
  switch (target.function) {
    case CMFunction::Hauptmodul: return hauptmodul_num(target.hauptmodul, tau, prec);
    case CMFunction::Gamma2: return gamma2_j(tau, prec).first;
    case CMFunction::J: return gamma2_j(tau, prec).second;
    case CMFunction::WeberPower: return pow(weber(tau, target.weber, prec + 16), target.power);
  }
  throw std::logic_error("unknown CM function");
}

namespace {

NumericResult compare_real(const std::string& name, const BigComplex& value, const QuadValue& expected, int digits,
                           mpfr_prec_t prec) {
  const BigComplex e(expected.to_float(prec), BigFloat(prec));
  const BigFloat r = abs(value - e);
  BigFloat bound = BigFloat(10L, prec);
  mpfr_pow_si(bound.get(), bound.get(), -digits, MPFR_RNDN);
  return {name, r < bound, r.to_double(), value.re().str(30)};
}

int working(int digits, int working_digits) { return working_digits > 0 ? working_digits : digits + 20; }

}  // namespace

NumericResult cm_check(const CMTarget& target, int digits, int working_digits) {
  if (digits < 10) throw std::invalid_argument("digits must be at least 10");
  const mpfr_prec_t prec = digits_to_bits(working(digits, working_digits));
  return compare_real(target.name + " = " + target.expected.str(), cm_evaluate(target, prec), target.expected, digits,
                      prec);
}

std::vector<NumericResult> cm_check_all(int digits, int working_digits) {
  const auto& table = cm_table();
  std::vector<NumericResult> out(table.size());
  const auto n = static_cast<std::ptrdiff_t>(table.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] = cm_check(table[static_cast<std::size_t>(i)], digits, working_digits);
  return out;
}

const std::vector<InvariantTarget>& class_invariant_table() {
  static const std::vector<InvariantTarget> table = {
      {"G5^4", 5, true, 4, {mpq_class(1, 2), mpq_class(1, 2), 5}},
      {"G9^6", 9, true, 6, {2, 1, 3}},
      {"G13^4", 13, true, 4, {mpq_class(3, 2), mpq_class(1, 2), 13}},
      {"G25", 25, true, 1, {mpq_class(1, 2), mpq_class(1, 2), 5}},
      {"G37^4", 37, true, 4, {6, 1, 37}},
      {"g6^6", 6, false, 6, {1, 1, 2}},
      {"g6^12", 6, false, 12, {3, 2, 2}},
      {"g10^2", 10, false, 2, {mpq_class(1, 2), mpq_class(1, 2), 5}},
      {"g10^12", 10, false, 12, {9, 4, 5}},
      {"g18^12", 18, false, 12, {49, 20, 6}},
      {"g22^2", 22, false, 2, {1, 1, 2}},
      {"g22^12", 22, false, 12, {99, 70, 2}},
      {"g58^2", 58, false, 2, {mpq_class(5, 2), mpq_class(1, 2), 29}},
      {"g58^12", 58, false, 12, {9801, 1820, 29}},
  };
  return table;
}

NumericResult class_invariant_check(const InvariantTarget& t, int digits, int working_digits) {
  if (digits < 10) throw std::invalid_argument("digits must be at least 10");
  const mpfr_prec_t prec = digits_to_bits(working(digits, working_digits));
  const mpfr_prec_t wp = prec + 32;
  const BigComplex tau(BigFloat(wp), sqrt(BigFloat(static_cast<long>(t.n), wp)));
  BigFloat two_quarter(2L, wp);
  mpfr_rootn_ui(two_quarter.get(), two_quarter.get(), 4, MPFR_RNDN);
  const BigComplex g = weber(tau, t.big ? Weber::f : Weber::f1, wp) / BigComplex(two_quarter, BigFloat(wp));
  return compare_real(t.name + " = " + t.expected.str(), pow(g, t.power), t.expected, digits, prec);
}

std::vector<NumericResult> class_invariant_checks(int digits, int working_digits) {
  std::vector<NumericResult> out;
  for (const auto& t : class_invariant_table()) out.push_back(class_invariant_check(t, digits, working_digits));
  return out;
}

// ------------------------------------------------------------ identities

std::pair<long, int> eta_multiplier(long a, long b, long c, long d) {
  if (a * d - b * c != 1) throw std::invalid_argument("matrix must have determinant 1");
  if (c <= 0 || c % 4 != 0) throw std::invalid_argument("need c > 0 with 4 | c");
  long r = 0, c0 = c;
  while (c0 % 2 == 0) {
    c0 /= 2;
    ++r;
  }
  long e = a * b + c * d * (1 - a * a) - c * a + 3 * c0 * (a - 1) + r * 3 * (a * a - 1) / 2;
  e %= 24;
  if (e < 0) e += 24;
  return {e, jacobi(a, c0)};
}

namespace {

struct Matrix {
  long a, b, c, d;
};

// a*d - b*c = 1 for the given (c, d).
Matrix complete(long c, long d, long shift) {
  long old_r = d, r = c, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const long qt = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - qt * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - qt * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - qt * t);
  }
  // old_s*d + old_t*c = old_r = +-1
  long a = old_s, b = -old_t;
  if (old_r < 0) {
    a = -a;
    b = -b;
  }
  return {a + shift * c, b + shift * d, c, d};
}

BigComplex mobius(const Matrix& m, const BigComplex& tau) {
  const mpfr_prec_t p = tau.prec();
  const BigComplex num = tau * BigFloat(m.a, p) + BigComplex(BigFloat(m.b, p), BigFloat(p));
  const BigComplex den = tau * BigFloat(m.c, p) + BigComplex(BigFloat(m.d, p), BigFloat(p));
  return num / den;
}

class Tracker {
 public:
  explicit Tracker(std::string name) : name_(std::move(name)) {}
  void add(const BigFloat& r) {
    worst_ = std::max(worst_, r.to_double());
    ++n_;
  }
  void add(const BigComplex& a, const BigComplex& b) { add(rel_diff(a, b)); }
  IdentityResult result(double tol) const { return {name_, n_, worst_, n_ > 0 && worst_ < tol}; }

 private:
  std::string name_;
  std::size_t n_ = 0;
  double worst_ = 0;
};

}  // namespace

std::vector<IdentityResult> identity_suite(std::size_t samples, mpfr_prec_t prec, std::uint64_t seed,
                                           std::optional<double> tolerance) {
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  const double tol = tolerance ? *tolerance : std::ldexp(1.0, -static_cast<int>(prec / 2));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re(-0.5, 0.5), im(0.5, 1.5);
  std::uniform_int_distribution<long> small(-9, 9), cmul(1, 3), lift(-2, 2);

  Tracker t_shift("eta(tau+1) = zeta24 eta(tau)"), t_inv("eta(-1/tau) = sqrt(-i tau) eta(tau)"),
      t_g04("eta transformation on Gamma0(4), c > 0"), t_conj("conj f_i(a+sqrt(-b)) = f_i(-a+sqrt(-b))"),
      t_prod("f f1 f2 = f1(2tau) f2(tau) = sqrt2"), t_s("f(-1/tau) = f, f1(-1/tau) = f2, f2(-1/tau) = f1"),
      t_t("f(tau+1) = zeta48^-1 f1, f1(tau+1) = zeta48^-1 f, f2(tau+1) = zeta24 f2"),
      t_cubic("-f^8, f1^8, f2^8 are the roots of x^3 - gamma2 x + 16"),
      t_g2forms("gamma2 from f, f1, f2 agree"), t_g2("gamma2 transformation under SL2(Z)"),
      t_period("|eta(tau+24)| = |eta(tau)|");

  const mpfr_prec_t wp = prec + 8;
  const BigComplex one(1, 0, wp), sqrt2(sqrt(BigFloat(2L, wp)), BigFloat(wp));
  const BigComplex minus_i(0, -1, wp);

  for (std::size_t i = 0; i < samples; ++i) {
    const BigComplex tau(BigFloat(re(rng), wp), BigFloat(im(rng), wp));
    const BigComplex eta = eta_num(tau, wp);

    t_shift.add(eta_num(shift(tau, 1), wp), BigComplex::root_of_unity(1, 24, wp) * eta);
    t_inv.add(eta_num(minus_inverse(tau), wp), sqrt(minus_i * tau) * eta);
    t_period.add(abs(abs(eta_num(shift(tau, 24), wp)) - abs(eta)) / abs(eta));

    {
      long d;
      const long c = 4 * cmul(rng);
      do d = small(rng);
      while (std::gcd(c, d) != 1);
      const Matrix m = complete(c, d, lift(rng));
      const auto [e, sign] = eta_multiplier(m.a, m.b, m.c, m.d);
      const BigComplex ctd = tau * BigFloat(c, wp) + BigComplex(BigFloat(d, wp), BigFloat(wp));
      BigComplex rhs = BigComplex::root_of_unity(e, 24, wp) * sqrt(ctd) * eta;
      if (sign < 0) rhs = -rhs;
      t_g04.add(eta_num(mobius(m, tau), wp), rhs);
    }

    const BigComplex f = weber(tau, Weber::f, wp), f1 = weber(tau, Weber::f1, wp), f2 = weber(tau, Weber::f2, wp);

    {
      const BigComplex mirror(-tau.re(), tau.im());
      for (Weber w : {Weber::f, Weber::f1, Weber::f2}) t_conj.add(conj(weber(tau, w, wp)), weber(mirror, w, wp));
    }

    t_prod.add(f * f1 * f2, sqrt2);
    t_prod.add(weber(scale(tau, 2), Weber::f1, wp) * f2, sqrt2);

    const BigComplex it = minus_inverse(tau);
    t_s.add(weber(it, Weber::f, wp), f);
    t_s.add(weber(it, Weber::f1, wp), f2);
    t_s.add(weber(it, Weber::f2, wp), f1);

    const BigComplex tp1 = shift(tau, 1);
    const BigComplex z48inv = BigComplex::root_of_unity(-1, 48, wp);
    t_t.add(weber(tp1, Weber::f, wp), z48inv * f1);
    t_t.add(weber(tp1, Weber::f1, wp), z48inv * f);
    t_t.add(weber(tp1, Weber::f2, wp), BigComplex::root_of_unity(1, 24, wp) * f2);

    {
      const BigComplex x0 = -pow(f, 8), x1 = pow(f1, 8), x2 = pow(f2, 8);
      const BigComplex g2 = gamma2_j(tau, wp).first;
      const BigFloat scale_ = max(max(abs(x0), abs(x1)), max(abs(x2), BigFloat(1L, wp)));
      t_cubic.add(abs(x0 + x1 + x2) / scale_);
      t_cubic.add(x0 * x1 * x2, BigComplex(-16, 0, wp));
      t_cubic.add(x0 * x1 + x0 * x2 + x1 * x2, -g2);
      const BigComplex sixteen(16, 0, wp);
      t_g2forms.add((pow(f1, 24) + sixteen) / pow(f1, 8), g2);
      t_g2forms.add((pow(f2, 24) + sixteen) / pow(f2, 8), g2);
    }

    {
      long c, d;
      do {
        c = small(rng) % 5;
        d = small(rng) % 5;
      } while (std::gcd(c, d) != 1);
      const Matrix m = complete(c, d, lift(rng));
      const long e = ((m.a * m.c - m.a * m.b + m.a * m.a * m.c * m.d - m.c * m.d) % 3 + 3) % 3;
      const BigComplex lhs = gamma2_j(mobius(m, tau), wp).first;
      t_g2.add(lhs, BigComplex::root_of_unity(e, 3, wp) * gamma2_j(tau, wp).first);
    }
  }

  std::vector<IdentityResult> out;
  for (const Tracker* t : {&t_shift, &t_inv, &t_period, &t_g04, &t_conj, &t_prod, &t_s, &t_t, &t_cubic, &t_g2forms,
                           &t_g2})
    out.push_back(t->result(tol));
  return out;
}

}  // namespace supercong
