#include "supercong/quadforms.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace supercong {

namespace {

std::optional<std::int64_t> exact_sqrt(std::int64_t n) {
  if (n < 0) return std::nullopt;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  if (r * r != n) return std::nullopt;
  return r;
}

}  // namespace

std::optional<QuadRep> represent(std::uint64_t p, const FormSpec& f) {
  if (f.a <= 0 || f.d <= 0 || f.c <= 0) throw std::invalid_argument("form coefficients must be positive");
  const auto pp = static_cast<std::int64_t>(p);
  if ((2 * f.a * f.d) % pp == 0) throw std::invalid_argument("represent requires p not dividing 2ad");
  const std::int64_t target = f.c * pp;
  for (std::int64_t y = 0; f.d * y * y <= target; ++y) {
    const std::int64_t rest = target - f.d * y * y;
    if (rest == 0 || rest % f.a != 0) continue;
    if (auto x = exact_sqrt(rest / f.a)) return QuadRep{*x, y, f, p};
  }
  return std::nullopt;
}

Residue padic_root_select(const QuadRep& rep, const Modulus& m) {
  const std::int64_t radicand = -static_cast<std::int64_t>(rep.form.a) * rep.form.d;
  auto root = sqrt_mod_pk(radicand, m);
  if (!root) throw std::logic_error("-a*d is not a square mod p although a representation exists");
  const Residue X = Residue::from_int(rep.form.a * rep.x, m);
  const Residue y = Residue::from_int(rep.y, m);
  if ((X + y * *root).is_unit()) return *root;
  const Residue other = -*root;
  if ((X + y * other).is_unit()) return other;
  throw std::logic_error("neither square root gives a unit");
}

Lemma23Result lemma23_check(const QuadRep& rep, const Modulus& m) {
  if (m.k() != 4) throw std::invalid_argument("lemma23_check works modulo p^4");
  const auto R = [&](std::int64_t v) { return Residue::from_int(v, m); };
  const Residue X = R(rep.form.a * rep.x);
  if (!X.is_unit()) throw std::invalid_argument("p divides x");
  const Residue r = padic_root_select(rep, m);
  const Residue A = X + R(rep.y) * r;

  const Residue p = R(static_cast<std::int64_t>(rep.p));
  const Residue Cp = R(rep.form.a * rep.form.c) * p;
  const Residue Cp2 = Cp * Cp;
  const Residue Cp3 = Cp2 * Cp;
  const Residue X2 = X * X;
  const Residue X3 = X2 * X;

  const Residue lin = R(2) * X - Cp * inv(R(2) * X) - Cp2 * inv(R(8) * X3) - Cp3 * inv(R(16) * X3 * X2);
  const Residue quad = R(4) * X2 - R(2) * Cp - Cp2 * inv(R(4) * X2) - Cp3 * inv(R(8) * X2 * X2);

  const Residue d1 = A - lin;
  const Residue d2 = A * A - quad;
  return {d1.is_zero() && d2.is_zero(), d1, d2};
}

Residue rhs_quadratic(const QuadRep& rep, const std::array<int, 4>& r, const Modulus& m) {
  const auto R = [&](std::int64_t v) { return Residue::from_int(v, m); };
  const Residue x2 = R(rep.x) * R(rep.x);
  const Residue p = R(static_cast<std::int64_t>(rep.p));
  return R(r[0]) * x2 + R(r[1]) * p + R(r[2]) * p * p * inv(R(r[3]) * x2);
}

std::vector<Lemma23Case> lemma23_sample(const std::vector<FormSpec>& forms, unsigned trials, std::uint64_t seed,
                                        std::uint64_t max_p) {
  if (forms.empty()) throw std::invalid_argument("no forms to sample from");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_form(0, forms.size() - 1);
  std::uniform_int_distribution<std::uint64_t> pick_p(3, max_p - 1);
  std::vector<Lemma23Case> out;
  while (out.size() < trials) {
    const FormSpec& f = forms[pick_form(rng)];
    const std::uint64_t p = pick_p(rng);
    if (!is_prime(p) || (2 * static_cast<std::uint64_t>(f.a * f.d)) % p == 0) continue;
    auto rep = represent(p, f);
    if (!rep || rep->x % static_cast<std::int64_t>(p) == 0) continue;
    out.push_back({*rep, lemma23_check(*rep, Modulus(p, 4))});
  }
  return out;
}

}  // namespace supercong
