#pragma once

// Boolean function representations and the exact transforms between them.
//
// Input points are integer masks: variable x_i lives at bit i-1. Weight
// indexed vectors (SVV, SANF) are printed with entry 0 leftmost.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "aiforge/gf2.hpp"

namespace aiforge {

using Mask = std::uint64_t;

/// Largest n for which a dense truth table (2^n bits) is materialized.
inline constexpr unsigned kMaxTruthTableVars = 24;

inline unsigned weight(Mask a) { return static_cast<unsigned>(std::popcount(a)); }

/// a ⪯ b: every set bit of a is set in b.
inline constexpr bool subset_order(std::uint64_t a, std::uint64_t b) { return (a & b) == a; }

/// C(m, r) mod 2, via Lucas: odd iff r ⪯ m.
inline constexpr bool lucas_parity(std::uint64_t m, std::uint64_t r) { return r <= m && subset_order(r, m); }

/// Exact binomial coefficient for n <= 64 (0 when r > n).
std::uint64_t binomial(unsigned n, unsigned r);

/// Σ_{i<=e} C(n, i).
std::uint64_t binomial_prefix_sum(unsigned n, unsigned e);

/// Next larger mask with the same popcount (Gosper's hack). x must be nonzero.
inline Mask next_same_weight(Mask x) {
  const Mask c = x & (~x + 1);
  const Mask r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

/// Calls fn(mask) for every n-bit mask of weight w in increasing order (n <= 63).
template <class Fn>
void for_each_mask_of_weight(unsigned n, unsigned w, Fn&& fn) {
  if (w > n) return;
  if (w == 0) {
    fn(Mask{0});
    return;
  }
  const Mask first = (Mask{1} << w) - 1;
  const Mask last = first << (n - w);
  for (Mask x = first;; x = next_same_weight(x)) {
    fn(x);
    if (x == last) break;
  }
}

namespace detail {

// n+1 bits indexed by weight 0..n.
class WeightBits {
 public:
  unsigned n() const { return n_; }
  bool operator[](unsigned i) const { return bits_[i] != 0; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }
  std::string to_string() const;

  friend bool operator==(const WeightBits&, const WeightBits&) = default;

 protected:
  WeightBits() = default;
  WeightBits(unsigned n, std::vector<std::uint8_t> bits);
  static std::vector<std::uint8_t> parse(std::string_view s, const char* what);

  unsigned n_ = 0;
  std::vector<std::uint8_t> bits_;
};

}  // namespace detail

/// A symmetric function, stored as its simplified value vector: entry i is
/// the output on every input of weight i.
class SymmetricFunction : public detail::WeightBits {
 public:
  SymmetricFunction() = default;
  SymmetricFunction(unsigned n, std::vector<std::uint8_t> svv) : WeightBits(n, std::move(svv)) {}
  static SymmetricFunction from_string(std::string_view svv);

  bool evaluate(Mask alpha) const { return (*this)[weight(alpha)]; }
  const std::vector<std::uint8_t>& svv() const { return bits_; }
};

/// Coefficients of the elementary symmetric polynomials σ_0 … σ_n.
class SanfVector : public detail::WeightBits {
 public:
  SanfVector() = default;
  SanfVector(unsigned n, std::vector<std::uint8_t> lambda) : WeightBits(n, std::move(lambda)) {}
  static SanfVector from_string(std::string_view lambda);

  const std::vector<std::uint8_t>& lambda() const { return bits_; }
  /// Highest i with λ(i) = 1; 0 for the zero function.
  unsigned degree() const;
};

/// Dense table of an n-variable function; bit α is f(α).
class TruthTable {
 public:
  TruthTable() = default;
  /// The constant-zero function. Throws CapacityError for n > kMaxTruthTableVars.
  explicit TruthTable(unsigned n);
  TruthTable(unsigned n, gf2::BitRow bits);

  unsigned n() const { return n_; }
  Mask size() const { return Mask{1} << n_; }
  bool operator()(Mask alpha) const { return bits_.test(alpha); }
  void set(Mask alpha, bool v) { bits_.assign(alpha, v); }
  std::size_t weight() const { return bits_.popcount(); }
  const gf2::BitRow& bits() const { return bits_; }
  gf2::BitRow& bits() { return bits_; }

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  unsigned n_ = 0;
  gf2::BitRow bits_;
};

/// ANF coefficients; bit β is the coefficient of the monomial x^β.
class AnfVector {
 public:
  AnfVector() = default;
  explicit AnfVector(unsigned n);
  AnfVector(unsigned n, gf2::BitRow coeffs);

  unsigned n() const { return n_; }
  bool coefficient(Mask beta) const { return coeffs_.test(beta); }
  void set(Mask beta, bool v) { coeffs_.assign(beta, v); }
  bool is_zero() const { return coeffs_.none(); }
  /// Largest weight of a monomial with nonzero coefficient; 0 when zero.
  unsigned degree() const;
  /// Monomials with nonzero coefficient, ascending.
  std::vector<Mask> monomials() const;
  const gf2::BitRow& coeffs() const { return coeffs_; }

  friend bool operator==(const AnfVector&, const AnfVector&) = default;

 private:
  unsigned n_ = 0;
  gf2::BitRow coeffs_;
};

SanfVector svv_to_sanf(const SymmetricFunction& f);
SymmetricFunction sanf_to_svv(const SanfVector& g);

TruthTable expand_truth_table(const SymmetricFunction& f);

/// coeffs[β] = ⊕_{α ⪯ β} bits[α]. The transform is its own inverse.
AnfVector mobius_transform(const TruthTable& t);
TruthTable mobius_transform(const AnfVector& a);
/// In-place subset-sum transform of a packed 2^n-bit vector.
void mobius_in_place(gf2::BitRow& bits, unsigned n);

SymmetricFunction complement(const SymmetricFunction& f);
SymmetricFunction input_complement(const SymmetricFunction& f);
TruthTable complement(const TruthTable& t);

}  // namespace aiforge
