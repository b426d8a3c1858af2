#include "supercong/qseries.hpp"

#include <algorithm>
#include <stdexcept>

#include "supercong/sequences.hpp"

namespace supercong {

namespace {

bool is_integer(const mpq_class& x) { return mpz_cmp_ui(x.get_den_mpz_t(), 1) == 0; }

bool all_integer(const std::vector<mpq_class>& v) {
  return std::all_of(v.begin(), v.end(), [](const mpq_class& x) { return is_integer(x); });
}

long as_long(const mpq_class& x) {
  if (!is_integer(x)) throw std::invalid_argument("exponent is not integral");
  return mpz_get_si(x.get_num_mpz_t());
}

}  // namespace

QSeries::QSeries(mpq_class offset, std::vector<mpq_class> coeffs) : offset_(std::move(offset)), c_(std::move(coeffs)) {
  offset_.canonicalize();
  if (!is_integer(offset_ * 24)) throw std::invalid_argument("offset must be a multiple of 1/24");
  normalize();
}

QSeries QSeries::zero(const mpq_class& precision) { return QSeries(precision, {}); }

QSeries QSeries::one(std::size_t length) {
  std::vector<mpq_class> c(length);
  if (length > 0) c[0] = 1;
  return QSeries(0, std::move(c));
}

void QSeries::normalize() {
  std::size_t z = 0;
  while (z < c_.size() && sgn(c_[z]) == 0) ++z;
  if (z == 0) return;
  c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(z));
  offset_ += static_cast<unsigned long>(z);
}

mpq_class QSeries::at(const mpq_class& e) const {
  if (e >= precision()) throw std::out_of_range("coefficient beyond known precision");
  mpq_class i = e - offset_;
  if (sgn(i) < 0 || !is_integer(i)) return 0;
  return c_[static_cast<std::size_t>(mpz_get_ui(i.get_num_mpz_t()))];
}

bool QSeries::integral_coefficients() const { return all_integer(c_); }

QSeries QSeries::truncated(std::size_t n) const {
  QSeries r = *this;
  if (r.c_.size() > n) r.c_.resize(n);
  return r;
}

QSeries QSeries::shifted(const mpq_class& s) const {
  QSeries r = *this;
  r.offset_ += s;
  return r;
}

// ------------------------------------------------------------ arithmetic

namespace {

std::vector<mpq_class> mul_dense_impl(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b,
                                      std::size_t len, bool parallel) {
  std::vector<mpq_class> c(len);
  const bool ints = all_integer(a) && all_integer(b);
  const std::size_t na = a.size(), nb = b.size();
  auto body = [&](std::size_t n) {
    const std::size_t i0 = n >= nb ? n - nb + 1 : 0;
    const std::size_t i1 = std::min(n, na == 0 ? 0 : na - 1);
    if (na == 0 || i0 > i1) return;
    if (ints) {
      mpz_class s = 0;
      for (std::size_t i = i0; i <= i1; ++i) {
        if (sgn(a[i]) == 0) continue;
        mpz_addmul(s.get_mpz_t(), a[i].get_num_mpz_t(), b[n - i].get_num_mpz_t());
      }
      c[n] = mpq_class(s);
    } else {
      mpq_class s = 0;
      for (std::size_t i = i0; i <= i1; ++i) {
        if (sgn(a[i]) == 0) continue;
        s += a[i] * b[n - i];
      }
      c[n] = s;
    }
  };
  if (parallel) {
    const auto L = static_cast<std::ptrdiff_t>(len);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t n = L - 1; n >= 0; --n) body(static_cast<std::size_t>(n));
  } else {
    for (std::size_t n = 0; n < len; ++n) body(n);
  }
  return c;
}

QSeries mul_impl(const QSeries& a, const QSeries& b, bool parallel) {
  const std::size_t len = std::min(a.length(), b.length());
  return QSeries(a.offset() + b.offset(), mul_dense_impl(a.coeffs(), b.coeffs(), len, parallel));
}

}  // namespace

std::vector<mpq_class> mul_dense(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b, std::size_t len) {
  return mul_dense_impl(a, b, len, true);
}

std::vector<mpq_class> mul_dense_serial(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b,
                                        std::size_t len) {
  return mul_dense_impl(a, b, len, false);
}

QSeries mul(const QSeries& a, const QSeries& b) { return mul_impl(a, b, true); }
QSeries mul_serial(const QSeries& a, const QSeries& b) { return mul_impl(a, b, false); }

QSeries inv(const QSeries& a) {
  if (a.is_zero()) throw std::domain_error("division by a series known only to vanish");
  const auto& c = a.coeffs();
  const std::size_t n = c.size();
  std::vector<mpq_class> r(n);
  const mpq_class c0inv = 1 / c[0];
  r[0] = c0inv;
  for (std::size_t k = 1; k < n; ++k) {
    mpq_class s = 0;
    for (std::size_t i = 1; i <= k; ++i)
      if (sgn(c[i]) != 0) s += c[i] * r[k - i];
    r[k] = -s * c0inv;
  }
  return QSeries(-a.offset(), std::move(r));
}

QSeries div(const QSeries& a, const QSeries& b) { return mul(a, inv(b)); }

QSeries pow(const QSeries& a, long e) {
  if (e < 0) return pow(inv(a), -e);
  QSeries result = QSeries::one(a.is_zero() ? 0 : a.length());
  if (e == 0) return result;
  QSeries base = a;
  bool first = true;
  while (e > 0) {
    if (e & 1) {
      result = first ? base : mul(result, base);
      first = false;
    }
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

namespace {

QSeries combine(const QSeries& a, const QSeries& b, int sign) {
  const mpq_class d = b.offset() - a.offset();
  if (!is_integer(d)) throw std::invalid_argument("offsets differ by a non-integer");
  const mpq_class lo = std::min(a.offset(), b.offset());
  const mpq_class hi = std::min(a.precision(), b.precision());
  if (hi <= lo) return QSeries::zero(hi);
  const auto n = static_cast<std::size_t>(as_long(hi - lo));
  std::vector<mpq_class> c(n);
  const auto ia = static_cast<std::size_t>(as_long(a.offset() - lo));
  const auto ib = static_cast<std::size_t>(as_long(b.offset() - lo));
  for (std::size_t i = 0; i < a.length() && ia + i < n; ++i) c[ia + i] += a.coeffs()[i];
  for (std::size_t i = 0; i < b.length() && ib + i < n; ++i) {
    if (sign > 0)
      c[ib + i] += b.coeffs()[i];
    else
      c[ib + i] -= b.coeffs()[i];
  }
  return QSeries(lo, std::move(c));
}

}  // namespace

QSeries add(const QSeries& a, const QSeries& b) { return combine(a, b, 1); }
QSeries sub(const QSeries& a, const QSeries& b) { return combine(a, b, -1); }

QSeries scale(const QSeries& a, const mpq_class& r) {
  if (sgn(r) == 0) return QSeries::zero(a.precision());
  std::vector<mpq_class> c = a.coeffs();
  for (auto& x : c) x *= r;
  return QSeries(a.offset(), std::move(c));
}

QSeries add_constant(const QSeries& a, const mpq_class& r) {
  if (!a.integral_offset()) throw std::invalid_argument("constant added to a series with fractional offset");
  if (a.precision() <= 0) return a;
  if (a.offset() > 0) {
    const auto lead = static_cast<std::size_t>(as_long(a.offset()));
    std::vector<mpq_class> c(lead + a.length());
    c[0] = r;
    std::copy(a.coeffs().begin(), a.coeffs().end(), c.begin() + static_cast<std::ptrdiff_t>(lead));
    return QSeries(0, std::move(c));
  }
  std::vector<mpq_class> c = a.coeffs();
  c[static_cast<std::size_t>(-as_long(a.offset()))] += r;
  return QSeries(a.offset(), std::move(c));
}

QSeries theta(const QSeries& a) {
  std::vector<mpq_class> c = a.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] *= a.offset() + static_cast<unsigned long>(i);
  return QSeries(a.offset(), std::move(c));
}

QSeries compose(const std::vector<mpq_class>& outer, const QSeries& inner) {
  if (outer.empty()) throw std::invalid_argument("empty outer series");
  if (inner.is_zero()) throw std::invalid_argument("inner series must be nonzero");
  if (!inner.integral_offset() || inner.offset() < 1)
    throw std::invalid_argument("inner series must start at a positive integral exponent");
  const long l = as_long(inner.offset());
  const long M = static_cast<long>(outer.size()) - 1;
  const long P = std::min(l + static_cast<long>(inner.length()), (M + 1) * l);
  const auto len = static_cast<std::size_t>(P);
  std::vector<mpq_class> D(len);
  for (std::size_t i = 0; i < inner.length() && static_cast<std::size_t>(l) + i < len; ++i)
    D[static_cast<std::size_t>(l) + i] = inner.coeffs()[i];
  std::vector<mpq_class> R(len);
  R[0] = outer.back();
  for (long k = M - 1; k >= 0; --k) {
    R = mul_dense(R, D, len);
    R[0] += outer[static_cast<std::size_t>(k)];
  }
  return QSeries(0, std::move(R));
}

// ------------------------------------------------------------ builders

QSeries eta_q(unsigned mult, std::size_t N) {
  if (mult == 0) throw std::invalid_argument("eta multiplier must be positive");
  std::vector<mpq_class> c(N + 1);
  for (long k = 0;; ++k) {
    bool any = false;
    for (long s : {k, -k}) {
      if (k == 0 && s != 0) continue;
      const long e = static_cast<long>(mult) * (s * (3 * s - 1) / 2);
      if (e <= static_cast<long>(N)) {
        c[static_cast<std::size_t>(e)] = (k % 2 == 0) ? 1 : -1;
        any = true;
      }
    }
    if (!any) break;
  }
  return QSeries(mpq_class(mult, 24), std::move(c));
}

QSeries eta_quotient(const std::vector<std::pair<unsigned, int>>& factors, std::size_t N) {
  QSeries r = QSeries::one(N + 1);
  for (const auto& [m, e] : factors) r = mul(r, pow(eta_q(m, N), e));
  return r;
}

QSeries e2_q(unsigned mult, std::size_t N) {
  if (mult == 0) throw std::invalid_argument("multiplier must be positive");
  std::vector<mpq_class> c(N + 1);
  c[0] = 1;
  for (std::size_t n = 1; n * mult <= N; ++n) {
    unsigned long sigma = 0;
    for (std::size_t d = 1; d * d <= n; ++d)
      if (n % d == 0) sigma += d + (d * d == n ? 0 : n / d);
    c[n * mult] = -24 * mpq_class(sigma);
  }
  return QSeries(0, std::move(c));
}

QSeries product_q(const std::vector<ProductFactor>& factors, int shift, std::size_t N) {
  QSeries r = QSeries::one(N + 1);
  for (const auto& f : factors) {
    std::vector<mpz_class> c(N + 1);
    c[0] = 1;
    for (long n = 1;; ++n) {
      const long k = static_cast<long>(f.a) * n + f.b;
      if (k < 1) throw std::invalid_argument("product exponents must be positive");
      if (k > static_cast<long>(N)) break;
      for (long i = static_cast<long>(N); i >= k; --i) {
        if (f.sign > 0)
          c[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(i - k)];
        else
          c[static_cast<std::size_t>(i)] -= c[static_cast<std::size_t>(i - k)];
      }
    }
    std::vector<mpq_class> q(c.begin(), c.end());
    r = mul(r, pow(QSeries(0, std::move(q)), f.e));
  }
  return r.shifted(shift);
}

std::string to_string(HauptmodulId id) {
  switch (id) {
    case HauptmodulId::t: return "t";
    case HauptmodulId::u: return "u";
    case HauptmodulId::s: return "s";
    case HauptmodulId::w: return "w";
    case HauptmodulId::v: return "v";
    case HauptmodulId::h: return "h";
  }
  return "?";
}

QSeries hauptmodul_q(HauptmodulId id, std::size_t N) {
  const std::size_t M = N + 1;
  switch (id) {
    case HauptmodulId::t: return eta_quotient({{1, 24}, {4, 24}, {2, -48}}, M);
    case HauptmodulId::u: {
      const QSeries X = eta_quotient({{2, 24}, {1, -24}}, M);
      return div(X, pow(add_constant(scale(X, 64), 1), 2));
    }
    case HauptmodulId::s: return eta_quotient({{4, 8}, {1, -8}}, M);
    case HauptmodulId::w: return eta_quotient({{1, 8}, {8, 8}, {2, -8}, {4, -8}}, M);
    case HauptmodulId::v: return eta_quotient({{1, 6}, {3, 6}, {4, 6}, {12, 6}, {2, -12}, {6, -12}}, M);
    case HauptmodulId::h: return eta_quotient({{1, 12}, {6, 12}, {2, -12}, {3, -12}}, M);
  }
  throw std::logic_error("unknown Hauptmodul");
}

// ------------------------------------------------------------ identities

IdentityCheck compare_through(const std::string& name, const QSeries& a, const QSeries& b, long N) {
  const QSeries d = sub(a, b);
  if (d.precision() <= N) throw std::logic_error(name + ": series not known through the requested order");
  const mpq_class lo = std::min(a.offset(), b.offset());
  IdentityCheck r{name, true, std::nullopt, 0};
  mpq_class first = lo;
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), first.get_num_mpz_t(), first.get_den_mpz_t());
  r.terms = static_cast<std::size_t>(std::max(0L, N - mpz_get_si(fl.get_mpz_t()) + 1));
  if (!d.is_zero() && d.offset() <= N) {
    r.pass = false;
    mpz_class e;
    mpz_fdiv_q(e.get_mpz_t(), d.offset().get_num_mpz_t(), d.offset().get_den_mpz_t());
    r.first_mismatch = mpz_get_si(e.get_mpz_t());
  }
  return r;
}

namespace {

SequenceId paired_sequence(HauptmodulId id) {
  switch (id) {
    case HauptmodulId::t: return SequenceId::CB3;
    case HauptmodulId::u: return SequenceId::CB4;
    case HauptmodulId::s: return SequenceId::V;
    case HauptmodulId::w: return SequenceId::T;
    case HauptmodulId::v: return SequenceId::D;
    case HauptmodulId::h: return SequenceId::A;
  }
  throw std::logic_error("unknown Hauptmodul");
}

QSeries weight2_form(HauptmodulId id, std::size_t N) {
  switch (id) {
    case HauptmodulId::t: return eta_quotient({{2, 20}, {1, -8}, {4, -8}}, N);
    case HauptmodulId::u: return sub(scale(e2_q(2, N), 2), e2_q(1, N));
    case HauptmodulId::s: return eta_quotient({{1, 8}, {2, -4}}, N);
    case HauptmodulId::w: return eta_quotient({{2, 6}, {4, 6}, {1, -4}, {8, -4}}, N);
    case HauptmodulId::v: return eta_quotient({{2, 10}, {6, 10}, {1, -4}, {3, -4}, {4, -4}, {12, -4}}, N);
    case HauptmodulId::h: return eta_quotient({{2, 7}, {3, 7}, {1, -5}, {6, -5}}, N);
  }
  throw std::logic_error("unknown Hauptmodul");
}

}  // namespace

IdentityCheck genfun_identity_check(HauptmodulId id, const std::vector<mpq_class>& outer, std::size_t N) {
  QSeries x = hauptmodul_q(id, N);
  if (id == HauptmodulId::s) x = scale(x, -1);
  std::vector<mpq_class> a(outer.begin(), outer.begin() + static_cast<std::ptrdiff_t>(std::min(outer.size(), N + 1)));
  const QSeries lhs = compose(a, x);
  const std::string name = "sum " + std::string(to_string(paired_sequence(id))) + "(n) " +
                           (id == HauptmodulId::s ? "(-s)" : to_string(id)) + "^n = weight-2 form";
  return compare_through(name, lhs, weight2_form(id, N), static_cast<long>(N));
}

IdentityCheck genfun_identity_check(HauptmodulId id, std::size_t N) {
  std::vector<mpq_class> a;
  a.reserve(N + 1);
  for (std::size_t n = 0; n <= N; ++n) a.emplace_back(exact_term(paired_sequence(id), static_cast<unsigned>(n)));
  return genfun_identity_check(id, a, N);
}

std::vector<IdentityCheck> t_j_relation_check(std::size_t N) {
  const std::size_t L = N + 3;
  const QSeries F = product_q({{2, -1, 1, 24}}, -1, L);  // f(2 tau)^24
  const QSeries j = div(pow(add_constant(F, -16), 3), F);
  const long NN = static_cast<long>(N);
  std::vector<IdentityCheck> out;
  const std::pair<const char*, QSeries> ts[] = {{"Weber product", inv(F)},
                                                {"eta quotient", hauptmodul_q(HauptmodulId::t, N + 2)}};
  for (const auto& [label, t] : ts) {
    const QSeries rel = add(pow(add_constant(scale(t, 16), -1), 3), mul(j, pow(t, 2)));
    IdentityCheck c = compare_through(std::string("(16t-1)^3 + j(2tau) t^2 = 0, t from ") + label, rel,
                                      QSeries::zero(rel.precision()), NN);
    c.terms = N + 1;
    out.push_back(std::move(c));
  }
  IdentityCheck c{"j(2tau) = q^-2 + 744 + 196884 q^2 + ...", true, std::nullopt, 5};
  const std::pair<long, long> expect[] = {{-2, 1}, {-1, 0}, {0, 744}, {1, 0}, {2, 196884}};
  for (const auto& [e, v] : expect) {
    if (j.at(e) != v) {
      c.pass = false;
      c.first_mismatch = e;
      break;
    }
  }
  out.push_back(c);
  return out;
}

IdentityCheck v_ode_check(const std::vector<mpz_class>& V, std::size_t N) {
  if (V.size() < N + 2) throw std::invalid_argument("need V_0..V_{N+1}");
  auto y = [&](long m) -> mpz_class {
    if (m < 0) return 0;
    return (m % 2 == 0) ? V[static_cast<std::size_t>(m)] : mpz_class(-V[static_cast<std::size_t>(m)]);
  };
  IdentityCheck r{"symmetric-square ODE for sum V_n (-s)^n", true, std::nullopt, N + 1};
  for (long n = 0; n <= static_cast<long>(N); ++n) {
    mpz_class c = 0;
    c += y(n + 1) * ((n + 1) * n * (n - 1)) + 32 * y(n) * (n * (n - 1) * (n - 2)) +
         256 * y(n - 1) * ((n - 1) * (n - 2) * (n - 3));
    c += 3 * y(n + 1) * ((n + 1) * n) + 144 * y(n) * (n * (n - 1)) + 1536 * y(n - 1) * ((n - 1) * (n - 2));
    c += y(n + 1) * (n + 1) + 112 * y(n) * n + 1792 * y(n - 1) * (n - 1);
    c += 8 * y(n) + 256 * y(n - 1);
    if (c != 0) {
      r.pass = false;
      r.first_mismatch = n;
      break;
    }
  }
  return r;
}

IdentityCheck v_ode_check(std::size_t N) {
  std::vector<mpz_class> V;
  for (std::size_t n = 0; n <= N + 3; ++n) V.push_back(exact_term(SequenceId::V, static_cast<unsigned>(n)));
  return v_ode_check(V, N);
}

std::vector<IdentityCheck> dual_construction_checks(std::size_t N) {
  using H = HauptmodulId;
  const long NN = static_cast<long>(N);
  const std::size_t M = N + 1;
  std::vector<IdentityCheck> out;
  auto check = [&](const std::string& name, const QSeries& a, const QSeries& b) {
    out.push_back(compare_through(name, a, b, NN));
  };

  const QSeries t = hauptmodul_q(H::t, N);
  check("t: Weber product = eta quotient", t, product_q({{2, -1, 1, -24}}, 1, M));

  const QSeries u = hauptmodul_q(H::u, N);
  const QSeries e2form = sub(scale(e2_q(2, M), 8), scale(e2_q(1, M), 4));
  const QSeries u_e2 = scale(pow(div(eta_quotient({{1, 2}, {2, 2}}, M), e2form), 4), 256);
  check("u: Weber form = 4^4 (eta^2 eta(2tau)^2/(8E2(2tau)-4E2(tau)))^4", u, u_e2);

  const QSeries s = hauptmodul_q(H::s, N);
  check("s: product = eta quotient", s, product_q({{1, 0, 1, 8}, {2, 0, 1, 8}}, 1, M));
  const QSeries dlog = div(theta(s), mul(s, add_constant(scale(s, 16), 1)));
  check("s: q ds/dq / (s(1+16s)) = eta^8/eta(2tau)^4", dlog, eta_quotient({{1, 8}, {2, -4}}, N));

  const QSeries w = hauptmodul_q(H::w, N);
  check("w: f2(4tau)^8/f2(tau)^8 = eta quotient", w, product_q({{4, 0, 1, 8}, {1, 0, 1, -8}}, 1, M));
  check("w: f1(2tau)^8/f1(8tau)^8 = eta quotient", w, product_q({{2, -1, -1, 8}, {8, -4, -1, -8}}, 1, M));

  const QSeries v = hauptmodul_q(H::v, N);
  check("v: 1/(f(2tau) f(6tau))^6 = eta quotient", v, product_q({{2, -1, 1, -6}, {6, -3, 1, -6}}, 1, M));

  const QSeries h = hauptmodul_q(H::h, N);
  check("h: (f2(3tau)/f2(tau))^12 = eta quotient", h, product_q({{3, 0, 1, 12}, {1, 0, 1, -12}}, 1, M));
  check("h: (f1(2tau)/f1(6tau))^12 = eta quotient", h, product_q({{2, -1, -1, 12}, {6, -3, -1, -12}}, 1, M));

  for (H id : {H::t, H::u, H::s, H::w, H::v, H::h}) {
    const QSeries x = hauptmodul_q(id, N);
    const bool ok = x.integral_coefficients() && x.offset() == 1 && x.coeffs()[0] == 1;
    out.push_back({to_string(id) + ": q + O(q^2) with integer coefficients", ok,
                   ok ? std::nullopt : std::optional<long>(1), x.length()});
  }
  return out;
}

std::vector<IdentityCheck> qseries_suite(std::size_t N) {
  std::vector<IdentityCheck> out;
  for (HauptmodulId id : {HauptmodulId::t, HauptmodulId::u, HauptmodulId::s, HauptmodulId::w, HauptmodulId::v,
                          HauptmodulId::h})
    out.push_back(genfun_identity_check(id, N));
  for (auto& c : t_j_relation_check(N)) out.push_back(std::move(c));
  out.push_back(v_ode_check(N));
  for (auto& c : dual_construction_checks(N)) out.push_back(std::move(c));
  return out;
}

}  // namespace supercong
