#include <map>

#include "doctest.h"
#include "supercong/sequences.hpp"

using namespace supercong;

namespace {

const std::map<SequenceId, std::vector<const char*>> kHead = {
    {SequenceId::CB3, {"1", "8", "216", "8000", "343000", "16003008", "788889024", "40424237568"}},
    {SequenceId::CB4,
     {"1", "24", "2520", "369600", "63063000", "11732745024", "2308743493056", "472518347558400"}},
    {SequenceId::CB6,
     {"1", "120", "83160", "81681600", "93699005400", "117386113965120", "155667030019300800",
      "214804163196079142400"}},
    {SequenceId::V, {"1", "8", "88", "1088", "14296", "195008", "2728384", "38879744"}},
    {SequenceId::T, {"1", "4", "40", "544", "8536", "145504", "2618176", "48943360"}},
    {SequenceId::D, {"1", "4", "28", "256", "2716", "31504", "387136", "4951552"}},
    {SequenceId::A, {"1", "5", "73", "1445", "33001", "819005", "21460825", "584307365"}},
};

const std::map<SequenceId, const char*> kAt30 = {
    {SequenceId::CB3, "1654108900854182142227825516519618764191130741633024"},
    {SequenceId::CB4, "1351305509675462567298580067504357834633146991896278787780793878573056"},
    {SequenceId::CB6,
     "7245283940414656589013633380808839150949921433655175512133557813514004747848115257854173900800"},
    {SequenceId::V, "59763794138310626525470477143568384"},
    {SequenceId::T, "165030202332921183756607309765050290176"},
    {SequenceId::D, "2869841574963193288053914091483136"},
    {SequenceId::A, "11320115195385966907843180411829810312080825"},
};

}  // namespace

TEST_CASE("names round trip") {
  for (auto id : kAllSequences) CHECK(parse_sequence(to_string(id)) == id);
  CHECK(!parse_sequence("CB5"));
}

TEST_CASE("initial terms") {
  for (const auto& [id, vals] : kHead)
    for (unsigned n = 0; n < vals.size(); ++n) {
      INFO(to_string(id), " n=", n);
      CHECK(exact_term(id, n) == mpz_class(vals[n]));
    }
}

TEST_CASE("term 30") {
  for (const auto& [id, v] : kAt30) {
    INFO(to_string(id));
    CHECK(exact_term(id, 30) == mpz_class(v));
  }
}

TEST_CASE("defining formulas agree") {
  CHECK(alternate_formulas(SequenceId::V, 3).size() == 3);
  CHECK(alternate_formulas(SequenceId::T, 3).size() == 2);
  for (auto id : kAllSequences)
    for (unsigned n = 0; n <= 100; n += (n < 20 ? 1 : 9)) {
      const auto all = alternate_formulas(id, n);
      const mpz_class ref = exact_term(id, n);
      for (const auto& v : all) {
        INFO(to_string(id), " n=", n);
        CHECK(v == ref);
      }
    }
}

TEST_CASE("residues match exact terms") {
  for (std::uint64_t p : {3ull, 5ull, 7ull, 31ull, 97ull})
    for (unsigned k : {1u, 3u, 4u}) {
      const Modulus m(p, k);
      for (auto id : kAllSequences) {
        const std::size_t count = 2 * p + 3;
        const auto r = terms_mod(id, count, m);
        REQUIRE(r.size() == count);
        for (std::size_t n = 0; n < count; ++n) {
          INFO(to_string(id), " p=", p, " k=", k, " n=", n);
          CHECK(r[n] == Residue::from_mpz(exact_term(id, static_cast<unsigned>(n)), m));
        }
      }
    }
}

TEST_CASE("shared factorial table") {
  const Modulus m(101, 3);
  for (auto id : kAllSequences) {
    const FactorialTable t(factorial_bound(id, 101), m);
    const auto a = terms_mod(id, 101, t);
    const auto b = terms_mod(id, 101, m);
    const auto raw = terms_mod_raw(id, 101, t);
    for (std::size_t n = 0; n < 101; ++n) {
      CHECK(a[n] == b[n]);
      CHECK(raw[n] == b[n].value());
    }
  }
}

TEST_CASE("upper half of CB3 vanishes mod p^3") {
  for (std::uint64_t p : primes_in(5, 500)) {
    const auto r = terms_mod(SequenceId::CB3, p, Modulus(p, 3));
    for (std::size_t k = (p + 1) / 2; k < p; ++k) CHECK(r[k].is_zero());
  }
}
