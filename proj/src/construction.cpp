#include "aiforge/construction.hpp"

#include <bit>

#include "aiforge/errors.hpp"

namespace aiforge {

namespace {

std::vector<std::uint8_t> parse_bits(std::string_view s, const char* what) {
  std::vector<std::uint8_t> bits;
  bits.reserve(s.size());
  for (char ch : s) {
    if (ch != '0' && ch != '1') throw ContractViolation(std::string(what) + " must contain only '0'/'1'");
    bits.push_back(ch == '1');
  }
  return bits;
}

std::string format_bits(const std::vector<std::uint8_t>& bits) {
  std::string s;
  for (auto b : bits) s.push_back(b ? '1' : '0');
  return s;
}

// Binary increment, last element least significant. Returns false on wrap.
bool increment(std::vector<std::uint8_t>& bits) {
  for (std::size_t i = bits.size(); i-- > 0;) {
    bits[i] ^= 1;
    if (bits[i]) return true;
  }
  return false;
}

}  // namespace

unsigned floor_log2(std::uint64_t x) {
  require(x != 0, "floor_log2 of 0");
  return 63U - static_cast<unsigned>(std::countl_zero(x));
}

bool suffix_of(std::uint64_t a, std::uint64_t b) {
  if (a == 0) return (b & 1U) == 0;
  const unsigned len = floor_log2(a) + 1;
  const std::uint64_t mask = len == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << len) - 1;
  return (b & mask) == a;
}

unsigned class_index(std::uint64_t x, std::uint64_t k) {
  require(k != 0, "class_index: k must be positive");
  const unsigned m = floor_log2(k);
  const std::uint64_t low = m == 63 ? ~std::uint64_t{0} : (std::uint64_t{2} << m) - 1;
  const std::uint64_t diff = (x ^ k) & low;
  return diff == 0 ? m + 1 : static_cast<unsigned>(std::countr_zero(diff));
}

void validate_construction_pair(unsigned k, unsigned d) {
  if (k < 1) throw ContractViolation("k must be at least 1");
  if (d < 2) throw ContractViolation("d must be at least 2 (got d = " + std::to_string(d) + ")");
  if (d > k) {
    throw ContractViolation("d must not exceed k (got d = " + std::to_string(d) +
                            ", k = " + std::to_string(k) + ")");
  }
  if (!suffix_of(d, k)) {
    throw ContractViolation("d = " + std::to_string(d) + " is not a binary suffix of k = " + std::to_string(k));
  }
}

ConstructionParams ConstructionParams::from_strings(unsigned k, unsigned d, std::string_view m,
                                                    std::string_view free) {
  ConstructionParams p{k, d, parse_bits(m, "m bits"), parse_bits(free, "free bits")};
  p.validate();
  return p;
}

std::vector<std::uint8_t> ConstructionParams::free_bits_from_index(std::uint64_t index, std::size_t length) {
  if (length < 64 && (index >> length) != 0) {
    throw ContractViolation("free index " + std::to_string(index) + " does not fit in " +
                            std::to_string(length) + " free bits");
  }
  std::vector<std::uint8_t> bits(length, 0);
  for (std::size_t i = 0; i < length && i < 64; ++i) bits[length - 1 - i] = (index >> i) & 1U;
  return bits;
}

std::string ConstructionParams::m_string() const { return format_bits(m_bits); }
std::string ConstructionParams::free_string() const { return format_bits(free_bits); }

void ConstructionParams::validate() const {
  validate_construction_pair(k, d);
  if (m_bits.size() != m_length(d)) {
    throw ContractViolation("expected " + std::to_string(m_length(d)) + " m bits for d = " + std::to_string(d) +
                            ", got " + std::to_string(m_bits.size()));
  }
  if (free_bits.size() != free_length(k, d)) {
    throw ContractViolation("expected " + std::to_string(free_length(k, d)) + " free bits, got " +
                            std::to_string(free_bits.size()));
  }
  for (auto b : m_bits) require(b <= 1, "m bits must be 0/1");
  for (auto b : free_bits) require(b <= 1, "free bits must be 0/1");
}

bool check_theorem_condition(const SymmetricFunction& f, unsigned k, unsigned d) {
  require(f.n() == 2 * k, "check_theorem_condition: f must have 2k variables");
  validate_construction_pair(k, d);
  const unsigned n = f.n();
  const unsigned top_class = floor_log2(d);
  for (unsigned i = 0; i < d; ++i) {
    const unsigned ti = class_index(i, k);
    for (unsigned j = n - d + 1; j <= n; ++j) {
      if (class_index(j, k) == ti && ti <= top_class && f[i] == f[j]) return false;
    }
  }
  return true;
}

SymmetricFunction construct_function(const ConstructionParams& p) {
  p.validate();
  const unsigned n = p.n();
  const unsigned d = p.d;
  std::vector<std::uint8_t> svv(n + 1, 0);
  for (unsigned i = 0; i < d; ++i) {
    const unsigned t = class_index(i, p.k);
    if (t >= p.m_bits.size()) throw std::logic_error("low band weight outside the covered classes");
    svv[i] = p.m_bits[t];
  }
  for (unsigned i = n - d + 1; i <= n; ++i) {
    const unsigned t = class_index(i, p.k);
    if (t >= p.m_bits.size()) throw std::logic_error("high band weight outside the covered classes");
    svv[i] = p.m_bits[t] ^ 1U;
  }
  for (unsigned i = d; i <= n - d; ++i) svv[i] = p.free_bits[i - d];
  return {n, std::move(svv)};
}

ConstructionEnumerator::ConstructionEnumerator(unsigned k, unsigned d) {
  validate_construction_pair(k, d);
  current_ = ConstructionParams{k, d, std::vector<std::uint8_t>(ConstructionParams::m_length(d), 0),
                                std::vector<std::uint8_t>(ConstructionParams::free_length(k, d), 0)};
}

std::optional<ConstructionParams> ConstructionEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return current_;
  }
  if (!increment(current_.free_bits) && !increment(current_.m_bits)) {
    done_ = true;
    return std::nullopt;
  }
  return current_;
}

unsigned count_exponent(unsigned k, unsigned d) {
  validate_construction_pair(k, d);
  return floor_log2(d) + 2 * (k - d + 1);
}

std::uint64_t count_formula(unsigned k, unsigned d) {
  const unsigned e = count_exponent(k, d);
  if (e >= 64) throw CapacityError("2^" + std::to_string(e) + " does not fit in 64 bits");
  return std::uint64_t{1} << e;
}

}  // namespace aiforge
