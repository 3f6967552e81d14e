#pragma once

// Published reference tables, embedded as text and checked against the
// construction.

#include <string>
#include <string_view>
#include <vector>

#include "aiforge/gf2.hpp"

namespace aiforge {

struct Table1Row {
  std::string label;  // m_0 m_1 m_2
  std::string svv;
  std::string sanf;
};

struct Table2Row {
  std::string label;
  std::string printed;  // as published, with the elided middle
  std::string pattern;  // expanded to n+1 characters, '?' = unconstrained
};

/// Maximum-AI functions for k = d = 6 (n = 12), 16 rows.
std::string_view table1_text();
/// Pattern rows for k = 13, d = 5 (n = 26), 8 rows.
std::string_view table2_text();

std::vector<Table1Row> table1_rows();
std::vector<Table2Row> table2_rows();

/// Expands "00000???⋯???11111" to `length` characters by filling the elided
/// middle with '?'.
std::string expand_pattern(std::string_view printed, std::size_t length);

struct TableVerification {
  bool pass = false;
  std::size_t matched = 0;
  std::size_t total = 0;
  std::vector<std::string> lines;     // one per table row
  std::vector<std::string> failures;  // offending rows
};

/// Enumerates (6, 6), matches SVV/SANF/labels and brute-forces AI = 6.
TableVerification verify_table1(gf2::Parallelism par = {});

/// Checks fixed positions and wildcards of every (13, 5) pattern and the
/// lazily enumerated family size. `deep` additionally certifies the m = 000,
/// all-zero-free function at d = 5.
TableVerification verify_table2(bool deep, gf2::Parallelism par = {});

}  // namespace aiforge
