#pragma once

// Truncated q-expansions q^offset * sum c_n q^n with exact rational
// coefficients. A series is known modulo q^precision, precision being
// offset + length; the zero series is an empty coefficient list whose offset
// records how far it is known to vanish.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace supercong {

class QSeries {
 public:
  QSeries() = default;
  QSeries(mpq_class offset, std::vector<mpq_class> coeffs);

  static QSeries zero(const mpq_class& precision);
  /// 1 + O(q^length)
  static QSeries one(std::size_t length);

  const mpq_class& offset() const noexcept { return offset_; }
  const std::vector<mpq_class>& coeffs() const noexcept { return c_; }
  std::size_t length() const noexcept { return c_.size(); }
  mpq_class precision() const { return offset_ + static_cast<unsigned long>(c_.size()); }
  bool is_zero() const noexcept { return c_.empty(); }
  bool integral_offset() const { return offset_.get_den() == 1; }

  /// Coefficient of q^e; throws std::out_of_range when e >= precision.
  mpq_class at(const mpq_class& e) const;
  bool integral_coefficients() const;

  /// Keeps the first n coefficients.
  QSeries truncated(std::size_t n) const;
  /// Multiplies by q^s.
  QSeries shifted(const mpq_class& s) const;

 private:
  void normalize();

  mpq_class offset_ = 0;
  std::vector<mpq_class> c_;
};

/// Truncated product of dense coefficient lists, first len terms.
std::vector<mpq_class> mul_dense(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b, std::size_t len);
std::vector<mpq_class> mul_dense_serial(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b,
                                        std::size_t len);

QSeries mul(const QSeries& a, const QSeries& b);
QSeries mul_serial(const QSeries& a, const QSeries& b);
QSeries inv(const QSeries& a);
QSeries div(const QSeries& a, const QSeries& b);
QSeries pow(const QSeries& a, long e);
QSeries add(const QSeries& a, const QSeries& b);
QSeries sub(const QSeries& a, const QSeries& b);
QSeries scale(const QSeries& a, const mpq_class& r);
/// a + r (r placed at exponent 0; needs an integral offset).
QSeries add_constant(const QSeries& a, const mpq_class& r);
/// q d/dq
QSeries theta(const QSeries& a);

inline QSeries operator*(const QSeries& a, const QSeries& b) { return mul(a, b); }
inline QSeries operator/(const QSeries& a, const QSeries& b) { return div(a, b); }
inline QSeries operator+(const QSeries& a, const QSeries& b) { return add(a, b); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return sub(a, b); }

/// sum outer[n] * inner^n. inner must start at a positive integral exponent.
QSeries compose(const std::vector<mpq_class>& outer, const QSeries& inner);

/// eta(mult*tau) with coefficients c_0..c_N.
QSeries eta_q(unsigned mult, std::size_t N);
/// prod eta(m*tau)^e over (m, e).
QSeries eta_quotient(const std::vector<std::pair<unsigned, int>>& factors, std::size_t N);
/// E_2(mult*tau) through q^N.
QSeries e2_q(unsigned mult, std::size_t N);

/// prod_{n >= 1} (1 + sign*q^(a*n + b))^e
struct ProductFactor {
  unsigned a;
  int b;
  int sign;
  int e;
};
/// q^shift * prod of factors, coefficients c_0..c_N.
QSeries product_q(const std::vector<ProductFactor>& factors, int shift, std::size_t N);

enum class HauptmodulId { t, u, s, w, v, h };
std::string to_string(HauptmodulId id);

/// The Hauptmodul as an eta quotient, known through at least q^(N+1).
QSeries hauptmodul_q(HauptmodulId id, std::size_t N);

struct IdentityCheck {
  std::string name;
  bool pass;
  std::optional<long> first_mismatch;  // exponent of the first differing coefficient
  std::size_t terms;
};

/// Compares coefficients of q^e for integral e <= N.
IdentityCheck compare_through(const std::string& name, const QSeries& a, const QSeries& b, long N);

/// sum a_n x^n (x = the Hauptmodul, or -s for V) against the weight-2 form.
IdentityCheck genfun_identity_check(HauptmodulId id, std::size_t N);
IdentityCheck genfun_identity_check(HauptmodulId id, const std::vector<mpq_class>& outer, std::size_t N);

/// (16t - 1)^3 + j(2 tau) t^2 = 0, t taken from the Weber product and from
/// the eta quotient, and the constant term 744 of j.
std::vector<IdentityCheck> t_j_relation_check(std::size_t N);

/// Third-order equation satisfied by Y = sum V_n (-s)^n, cleared of
/// denominators, checked through s^N.
IdentityCheck v_ode_check(std::size_t N);
IdentityCheck v_ode_check(const std::vector<mpz_class>& V, std::size_t N);

/// Independent product/Weber/Eisenstein constructions of the Hauptmoduls.
std::vector<IdentityCheck> dual_construction_checks(std::size_t N);

/// Everything above.
std::vector<IdentityCheck> qseries_suite(std::size_t N);

}  // namespace supercong
