#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "supercong/arith.hpp"

namespace supercong {

enum class SequenceId { CB3, CB4, CB6, V, T, D, A };

inline constexpr std::array<SequenceId, 7> kAllSequences{SequenceId::CB3, SequenceId::CB4, SequenceId::CB6,
                                                         SequenceId::V,   SequenceId::T,   SequenceId::D,
                                                         SequenceId::A};

std::string_view to_string(SequenceId id);
std::optional<SequenceId> parse_sequence(std::string_view name);

/// a_n by the first defining summation, exact.
mpz_class exact_term(SequenceId id, unsigned n);

/// a_n by every defining formula (three for V, two for T, one otherwise).
std::vector<mpz_class> alternate_formulas(SequenceId id, unsigned n);

/// Largest factorial argument needed for a_0..a_{count-1}.
std::size_t factorial_bound(SequenceId id, std::size_t count);

/// a_0..a_{count-1} mod p^k through valuation-tracked binomials.
std::vector<Residue> terms_mod(SequenceId id, std::size_t count, const Modulus& m);
/// Same, reusing a caller-owned table (must cover factorial_bound).
std::vector<Residue> terms_mod(SequenceId id, std::size_t count, const FactorialTable& table);
/// Raw residues, for the sweep's inner loops.
std::vector<std::uint64_t> terms_mod_raw(SequenceId id, std::size_t count, const FactorialTable& table);

}  // namespace supercong
