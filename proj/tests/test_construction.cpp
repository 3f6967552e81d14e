#include <gtest/gtest.h>

#include <set>
#include <string>

#include "aiforge/annihilator.hpp"
#include "aiforge/construction.hpp"
#include "aiforge/errors.hpp"
#include "oracles.hpp"

using namespace aiforge;

namespace {

std::string binary(std::uint64_t x) {
  if (x == 0) return "0";
  std::string s;
  for (; x; x >>= 1) s.insert(s.begin(), static_cast<char>('0' + (x & 1U)));
  return s;
}

// x ∈ C_p straight from the modular definition.
bool in_class(std::int64_t x, std::int64_t k, unsigned p) {
  const unsigned m = floor_log2(static_cast<std::uint64_t>(k));
  auto mod = [](std::int64_t a, std::int64_t q) { return ((a % q) + q) % q; };
  if (p <= m) return mod(x - k, std::int64_t{2} << p) == (std::int64_t{1} << p);
  return mod(x - k, std::int64_t{2} << m) == 0;
}

std::vector<std::pair<unsigned, unsigned>> valid_pairs(unsigned max_k) {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned k = 2; k <= max_k; ++k) {
    for (unsigned d = 2; d <= k; ++d) {
      if (suffix_of(d, k)) out.emplace_back(k, d);
    }
  }
  return out;
}

}  // namespace

TEST(SuffixOf, Examples) {
  EXPECT_TRUE(suffix_of(5, 13));
  EXPECT_TRUE(suffix_of(6, 6));
  EXPECT_FALSE(suffix_of(2, 5));
  EXPECT_TRUE(suffix_of(0, 6));
  EXPECT_FALSE(suffix_of(0, 5));
}

TEST(SuffixOf, MatchesBinaryStringSuffix) {
  for (std::uint64_t a = 1; a < 300; ++a) {
    for (std::uint64_t b = 0; b < 300; ++b) {
      const auto sa = binary(a);
      const auto sb = binary(b);
      const bool expected = sa.size() <= sb.size() && sb.compare(sb.size() - sa.size(), sa.size(), sa) == 0;
      ASSERT_EQ(suffix_of(a, b), expected) << a << " " << b;
    }
  }
}

TEST(ClassIndex, PublishedExamples) {
  for (unsigned x : {1u, 3u, 5u, 7u, 9u, 11u}) EXPECT_EQ(class_index(x, 6), 0u);
  for (unsigned x : {0u, 4u, 8u, 12u}) EXPECT_EQ(class_index(x, 6), 1u);
  for (unsigned x : {2u, 10u}) EXPECT_EQ(class_index(x, 6), 2u);
  for (unsigned x : {0u, 2u, 4u, 6u}) EXPECT_EQ(class_index(x, 13), 0u);
  for (unsigned x : {3u, 7u}) EXPECT_EQ(class_index(x, 13), 1u);
  for (unsigned x : {1u, 9u}) EXPECT_EQ(class_index(x, 13), 2u);
  EXPECT_EQ(class_index(6, 6), 3u);
  EXPECT_EQ(class_index(13, 13), 4u);
  EXPECT_THROW(class_index(3, 0), ContractViolation);
}

TEST(ClassIndex, PartitionLaw) {
  for (std::int64_t k = 1; k <= 64; ++k) {
    const unsigned m = floor_log2(static_cast<std::uint64_t>(k));
    for (std::int64_t x = 0; x <= 2 * k; ++x) {
      unsigned hits = 0;
      unsigned which = 0;
      for (unsigned p = 0; p <= m + 1; ++p) {
        if (in_class(x, k, p)) {
          ++hits;
          which = p;
        }
      }
      ASSERT_EQ(hits, 1u) << "k=" << k << " x=" << x;
      ASSERT_EQ(class_index(static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(k)), which);
    }
  }
}

TEST(ClassIndex, BandsAreCoveredAndLowBandHitsEveryClass) {
  for (unsigned k = 2; k <= 64; ++k) {
    for (unsigned d = 2; d <= k; ++d) {
      if (!suffix_of(d, k)) continue;
      const unsigned top = floor_log2(d);
      std::set<unsigned> low_classes;
      for (unsigned x = 0; x < d; ++x) {
        ASSERT_LE(class_index(x, k), top);
        low_classes.insert(class_index(x, k));
      }
      for (unsigned x = 2 * k - d + 1; x <= 2 * k; ++x) ASSERT_LE(class_index(x, k), top);
      EXPECT_EQ(low_classes.size(), top + 1) << "k=" << k << " d=" << d;
    }
  }
}

TEST(Validation, RejectsBadPairs) {
  EXPECT_THROW(validate_construction_pair(6, 5), ContractViolation);
  EXPECT_THROW(validate_construction_pair(6, 1), ContractViolation);
  EXPECT_THROW(validate_construction_pair(6, 0), ContractViolation);
  EXPECT_THROW(validate_construction_pair(6, 14), ContractViolation);
  EXPECT_NO_THROW(validate_construction_pair(13, 5));
  EXPECT_THROW(ConstructionParams::from_strings(6, 6, "00", "0"), ContractViolation);
  EXPECT_THROW(ConstructionParams::from_strings(6, 6, "000", "00"), ContractViolation);
  EXPECT_THROW(ConstructionParams::from_strings(6, 6, "0a0", "0"), ContractViolation);
}

TEST(FreeIndex, IsBigEndian) {
  EXPECT_EQ(ConstructionParams::free_bits_from_index(1, 4), (std::vector<std::uint8_t>{0, 0, 0, 1}));
  EXPECT_EQ(ConstructionParams::free_bits_from_index(8, 4), (std::vector<std::uint8_t>{1, 0, 0, 0}));
  EXPECT_THROW(ConstructionParams::free_bits_from_index(16, 4), ContractViolation);
}

TEST(Construct, PublishedExamples) {
  EXPECT_EQ(construct_function(ConstructionParams::from_strings(6, 6, "000", "0")).to_string(), "0000000111111");
  EXPECT_EQ(construct_function(ConstructionParams::from_strings(6, 6, "111", "1")).to_string(), "1111111000000");
  const auto f = construct_function(ConstructionParams::from_strings(13, 5, "100", std::string(17, '0')));
  const auto s = f.to_string();
  EXPECT_EQ(s.substr(0, 5), "10101");
  EXPECT_EQ(s.substr(22), "01010");
}

TEST(TheoremCondition, Examples) {
  EXPECT_TRUE(check_theorem_condition(SymmetricFunction::from_string("0000000111111"), 6, 6));
  EXPECT_FALSE(check_theorem_condition(SymmetricFunction::from_string("0000000000000"), 6, 6));
  EXPECT_THROW(check_theorem_condition(SymmetricFunction::from_string("0000"), 6, 6), ContractViolation);
}

TEST(Enumerate, CountsDistinctnessAndCondition) {
  for (auto [k, d] : valid_pairs(8)) {
    std::set<std::string> seen;
    std::uint64_t count = 0;
    std::string prev_key;
    ConstructionEnumerator en(k, d);
    while (auto p = en.next()) {
      const auto f = construct_function(*p);
      ASSERT_TRUE(check_theorem_condition(f, k, d));
      seen.insert(f.to_string());
      const std::string key = p->m_string() + p->free_string();
      if (count > 0) ASSERT_LT(prev_key, key);
      prev_key = key;
      ++count;
    }
    EXPECT_EQ(count, count_formula(k, d)) << k << " " << d;
    EXPECT_EQ(seen.size(), count);
  }
}

TEST(Enumerate, TableOneOrder) {
  ConstructionEnumerator en(6, 6);
  std::vector<std::string> labels;
  while (auto p = en.next()) labels.push_back(p->m_string() + "/" + p->free_string());
  ASSERT_EQ(labels.size(), 16u);
  EXPECT_EQ(labels.front(), "000/0");
  EXPECT_EQ(labels[1], "000/1");
  EXPECT_EQ(labels[2], "001/0");
  EXPECT_EQ(labels.back(), "111/1");
}

TEST(Enumerate, FourVariableFamilyAgainstExhaustiveAi) {
  ConstructionEnumerator en(2, 2);
  int count = 0;
  while (auto p = en.next()) {
    const auto t = expand_truth_table(construct_function(*p));
    oracle::Bits bits(t.size());
    for (Mask a = 0; a < t.size(); ++a) bits[a] = t(a);
    const unsigned ai = oracle::ai_by_enumeration(bits);
    EXPECT_GE(ai, 2u);
    EXPECT_EQ(compute_ai_exact(t).ai, ai);
    ++count;
  }
  EXPECT_EQ(count, 8);
}

TEST(Enumerate, SmallFamiliesReachTheirBound) {
  for (auto [k, d] : valid_pairs(5)) {
    ConstructionEnumerator en(k, d);
    while (auto p = en.next()) {
      const auto f = construct_function(*p);
      const auto ai = compute_ai_exact(expand_truth_table(f)).ai;
      ASSERT_GE(ai, d) << f.to_string();
      if (d == k) ASSERT_EQ(ai, k);
      ASSERT_TRUE(certify_ai_lower_bound(f, d).certified);
    }
  }
}

TEST(CountFormula, Examples) {
  EXPECT_EQ(count_formula(6, 6), 16u);
  EXPECT_EQ(count_formula(13, 5), std::uint64_t{1} << 20);
  EXPECT_EQ(count_formula(7, 7), 16u);
  EXPECT_EQ(count_formula(2, 2), 8u);
  EXPECT_THROW(count_formula(66, 2), CapacityError);
  EXPECT_THROW(count_formula(6, 5), ContractViolation);
}

TEST(Enumerate, LargeFamilyCountsLazily) {
  std::uint64_t count = 0;
  ConstructionEnumerator en(13, 5);
  while (en.next()) ++count;
  EXPECT_EQ(count, count_formula(13, 5));
}
