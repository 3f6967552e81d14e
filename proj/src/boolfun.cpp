#include "aiforge/boolfun.hpp"

#include <array>

#include "aiforge/errors.hpp"

namespace aiforge {

namespace {

constexpr std::array<gf2::Word, 6> kUpperHalf = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
};

constexpr auto kBinomials = [] {
  std::array<std::array<std::uint64_t, 65>, 65> c{};
  for (unsigned n = 0; n <= 64; ++n) {
    c[n][0] = 1;
    for (unsigned r = 1; r <= n; ++r) c[n][r] = c[n - 1][r - 1] + (r <= n - 1 ? c[n - 1][r] : 0);
  }
  return c;
}();

void check_table_vars(unsigned n) {
  if (n > kMaxTruthTableVars) {
    throw CapacityError("truth tables are limited to n <= " + std::to_string(kMaxTruthTableVars) +
                        " (got n = " + std::to_string(n) + ")");
  }
}

std::vector<std::uint8_t> subset_xor(const std::vector<std::uint8_t>& in) {
  std::vector<std::uint8_t> out(in.size(), 0);
  for (std::size_t i = 0; i < in.size(); ++i) {
    std::uint8_t acc = 0;
    for (std::size_t j = 0; j <= i; ++j) {
      if (subset_order(j, i)) acc ^= in[j];
    }
    out[i] = acc;
  }
  return out;
}

}  // namespace

std::uint64_t binomial(unsigned n, unsigned r) {
  require(n <= 64, "binomial: n must be <= 64");
  return r > n ? 0 : kBinomials[n][r];
}

std::uint64_t binomial_prefix_sum(unsigned n, unsigned e) {
  std::uint64_t total = 0;
  for (unsigned i = 0; i <= e && i <= n; ++i) total += binomial(n, i);
  return total;
}

namespace detail {

WeightBits::WeightBits(unsigned n, std::vector<std::uint8_t> bits) : n_(n), bits_(std::move(bits)) {
  require(bits_.size() == static_cast<std::size_t>(n) + 1, "weight vector must have n+1 entries");
  for (auto& b : bits_) require(b <= 1, "weight vector entries must be 0 or 1");
}

std::vector<std::uint8_t> WeightBits::parse(std::string_view s, const char* what) {
  if (s.empty()) throw ContractViolation(std::string(what) + ": empty bit string");
  std::vector<std::uint8_t> bits;
  bits.reserve(s.size());
  for (char ch : s) {
    if (ch != '0' && ch != '1') {
      throw ContractViolation(std::string(what) + ": expected only '0'/'1' characters");
    }
    bits.push_back(ch == '1' ? 1 : 0);
  }
  return bits;
}

std::string WeightBits::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

}  // namespace detail

SymmetricFunction SymmetricFunction::from_string(std::string_view svv) {
  auto bits = parse(svv, "SVV");
  const auto n = static_cast<unsigned>(bits.size() - 1);
  return {n, std::move(bits)};
}

SanfVector SanfVector::from_string(std::string_view lambda) {
  auto bits = parse(lambda, "SANF");
  const auto n = static_cast<unsigned>(bits.size() - 1);
  return {n, std::move(bits)};
}

unsigned SanfVector::degree() const {
  for (unsigned i = n_ + 1; i-- > 0;) {
    if (bits_[i]) return i;
  }
  return 0;
}

TruthTable::TruthTable(unsigned n) : n_(n) {
  check_table_vars(n);
  bits_ = gf2::BitRow(std::size_t{1} << n);
}

TruthTable::TruthTable(unsigned n, gf2::BitRow bits) : n_(n), bits_(std::move(bits)) {
  check_table_vars(n);
  require(bits_.width() == (std::size_t{1} << n), "truth table must have 2^n bits");
}

AnfVector::AnfVector(unsigned n) : n_(n) {
  check_table_vars(n);
  coeffs_ = gf2::BitRow(std::size_t{1} << n);
}

AnfVector::AnfVector(unsigned n, gf2::BitRow coeffs) : n_(n), coeffs_(std::move(coeffs)) {
  check_table_vars(n);
  require(coeffs_.width() == (std::size_t{1} << n), "ANF vector must have 2^n coefficients");
}

unsigned AnfVector::degree() const {
  // Scan weight slices from the top; the first nonzero slice is the degree.
  for (unsigned w = n_ + 1; w-- > 1;) {
    bool found = false;
    for_each_mask_of_weight(n_, w, [&](Mask m) { found = found || coeffs_.test(m); });
    if (found) return w;
  }
  return 0;
}

std::vector<Mask> AnfVector::monomials() const {
  std::vector<Mask> out;
  const auto words = coeffs_.words();
  for (std::size_t wi = 0; wi < words.size(); ++wi) {
    for (gf2::Word w = words[wi]; w != 0; w &= w - 1) {
      out.push_back(wi * gf2::kWordBits + static_cast<Mask>(std::countr_zero(w)));
    }
  }
  return out;
}

SanfVector svv_to_sanf(const SymmetricFunction& f) { return {f.n(), subset_xor(f.svv())}; }

SymmetricFunction sanf_to_svv(const SanfVector& g) { return {g.n(), subset_xor(g.lambda())}; }

TruthTable expand_truth_table(const SymmetricFunction& f) {
  TruthTable t(f.n());
  auto words = t.bits().words();
  const Mask size = t.size();
  for (Mask alpha = 0; alpha < size; ++alpha) {
    if (f.evaluate(alpha)) words[alpha / gf2::kWordBits] |= gf2::Word{1} << (alpha % gf2::kWordBits);
  }
  return t;
}

void mobius_in_place(gf2::BitRow& bits, unsigned n) {
  require(bits.width() == (std::size_t{1} << n), "mobius: vector must have 2^n bits");
  auto words = bits.words();
  const unsigned inner = n < 6 ? n : 6;
  for (gf2::Word& w : words) {
    for (unsigned i = 0; i < inner; ++i) w ^= (w << (1U << i)) & kUpperHalf[i];
  }
  for (unsigned i = 6; i < n; ++i) {
    const std::size_t stride = std::size_t{1} << (i - 6);
    for (std::size_t j = 0; j < words.size(); ++j) {
      if (j & stride) words[j] ^= words[j ^ stride];
    }
  }
  bits.trim();
}

AnfVector mobius_transform(const TruthTable& t) {
  gf2::BitRow bits = t.bits();
  mobius_in_place(bits, t.n());
  return {t.n(), std::move(bits)};
}

TruthTable mobius_transform(const AnfVector& a) {
  gf2::BitRow bits = a.coeffs();
  mobius_in_place(bits, a.n());
  return {a.n(), std::move(bits)};
}

SymmetricFunction complement(const SymmetricFunction& f) {
  auto bits = f.svv();
  for (auto& b : bits) b ^= 1;
  return {f.n(), std::move(bits)};
}

SymmetricFunction input_complement(const SymmetricFunction& f) {
  return {f.n(), std::vector<std::uint8_t>(f.svv().rbegin(), f.svv().rend())};
}

TruthTable complement(const TruthTable& t) { return {t.n(), ~t.bits()}; }

}  // namespace aiforge
