#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "supercong/arith.hpp"

namespace supercong {

/// c*p = a*x^2 + d*y^2
struct FormSpec {
  int a = 1;
  std::int64_t d = 1;
  int c = 1;

  friend bool operator==(const FormSpec&, const FormSpec&) = default;
};

struct QuadRep {
  std::int64_t x;  // > 0
  std::int64_t y;  // >= 0
  FormSpec form;
  std::uint64_t p;
};

/// Least-y solution with x > 0, or nullopt. Requires p not dividing 2ad.
std::optional<QuadRep> represent(std::uint64_t p, const FormSpec& f);

/// Square root r of -a*d mod p^k chosen so that a*x + y*r is a p-adic unit.
Residue padic_root_select(const QuadRep& rep, const Modulus& m);

struct Lemma23Result {
  bool pass;
  Residue diff_linear;  // A - expansion
  Residue diff_square;  // A^2 - expansion
};

/// Both fourth-order expansions for A = X + y*sqrt(-a*d), X = a*x, applied
/// to a*c*p = X^2 + (a*d)*y^2. Requires m.k() == 4.
Lemma23Result lemma23_check(const QuadRep& rep, const Modulus& m);

/// r1*x^2 + r2*p + r3*p^2 / (r4*x^2) mod p^k.
Residue rhs_quadratic(const QuadRep& rep, const std::array<int, 4>& r, const Modulus& m);

struct Lemma23Case {
  QuadRep rep;
  Lemma23Result result;
};

/// Random representable (p, form) pairs with p < max_p, drawn from `forms`.
std::vector<Lemma23Case> lemma23_sample(const std::vector<FormSpec>& forms, unsigned trials, std::uint64_t seed,
                                        std::uint64_t max_p);

}  // namespace supercong
