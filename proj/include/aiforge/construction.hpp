#pragma once

// Symmetric functions on n = 2k variables with AI >= d, for d a binary
// suffix of k.
//
// Weights are split into classes by the lowest bit at which they differ from
// k. Inside the two bands [0, d-1] and [n-d+1, n] every class takes one free
// value m_t on the low band and its complement on the high band; weights in
// [d, n-d] are unconstrained.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aiforge/boolfun.hpp"

namespace aiforge {

unsigned floor_log2(std::uint64_t x);

/// a ⪯' b: the binary digits of a are the low-order digits of b.
/// 0 is treated as the one-digit string "0".
bool suffix_of(std::uint64_t a, std::uint64_t b);

/// The p with x ∈ C_p: the lowest bit where x and k differ, or m+1 when x
/// agrees with k on all of k's bits (m = index of k's highest set bit).
unsigned class_index(std::uint64_t x, std::uint64_t k);

/// Throws ContractViolation naming the first violated condition among
/// k >= 1, 2 <= d <= k, d ⪯' k.
void validate_construction_pair(unsigned k, unsigned d);

struct ConstructionParams {
  unsigned k = 0;
  unsigned d = 0;
  std::vector<std::uint8_t> m_bits;     // m_0 … m_{⌊log2 d⌋}
  std::vector<std::uint8_t> free_bits;  // v(d) … v(n-d)

  unsigned n() const { return 2 * k; }
  static std::size_t m_length(unsigned d) { return floor_log2(d) + 1; }
  static std::size_t free_length(unsigned k, unsigned d) { return 2 * std::size_t{k} - 2 * d + 1; }

  /// Parses '0'/'1' strings (m_0 and v(d) leftmost) and validates.
  static ConstructionParams from_strings(unsigned k, unsigned d, std::string_view m, std::string_view free);
  /// Free bits from a big-endian counter: position d is the most significant bit.
  static std::vector<std::uint8_t> free_bits_from_index(std::uint64_t index, std::size_t length);

  std::string m_string() const;
  std::string free_string() const;
  void validate() const;

  friend bool operator==(const ConstructionParams&, const ConstructionParams&) = default;
};

bool check_theorem_condition(const SymmetricFunction& f, unsigned k, unsigned d);

SymmetricFunction construct_function(const ConstructionParams& p);

/// Lazily walks every parameter choice for (k, d) in lexicographic order of
/// (m_bits, free_bits), m_bits being the high-order counter.
class ConstructionEnumerator {
 public:
  ConstructionEnumerator(unsigned k, unsigned d);

  /// The next parameter set, or nullopt once the family is exhausted.
  std::optional<ConstructionParams> next();

 private:
  ConstructionParams current_;
  bool started_ = false;
  bool done_ = false;
};

/// ⌊log2 d⌋ + 2(k - d + 1).
unsigned count_exponent(unsigned k, unsigned d);
/// 2^count_exponent(k, d); CapacityError when it does not fit in 64 bits.
std::uint64_t count_formula(unsigned k, unsigned d);

}  // namespace aiforge
