#include "aiforge/golden_tables.hpp"

#include <map>
#include <sstream>

#include "aiforge/annihilator.hpp"
#include "aiforge/boolfun.hpp"
#include "aiforge/construction.hpp"
#include "aiforge/errors.hpp"

namespace aiforge {

namespace {

constexpr std::string_view kTable1 = R"(000 | 0000000111111 | 0000000110000
000 | 0000001111111 | 0000001010000
001 | 0010000111011 | 0011001010000
001 | 0010001111011 | 0011000110000
010 | 1000100101110 | 1111000110000
010 | 1000101101110 | 1111001010000
011 | 1010100101010 | 1100001010000
011 | 1010101101010 | 1100000110000
100 | 0101010010101 | 0100000110000
100 | 0101011010101 | 0100001010000
101 | 0111010010001 | 0111001010000
101 | 0111011010001 | 0111000110000
110 | 1101110000100 | 1011000110000
110 | 1101111000100 | 1011001010000
111 | 1111110000000 | 1000001010000
111 | 1111111000000 | 1000000110000
)";

constexpr std::string_view kTable2 = R"(000 | 00000???⋯???11111
001 | 01000???⋯???11101
010 | 00010???⋯???10111
011 | 01010???⋯???10101
100 | 10101???⋯???01010
101 | 11101???⋯???01000
110 | 10111???⋯???00010
111 | 11111???⋯???00000
)";

constexpr std::string_view kEllipsis = "⋯";

std::vector<std::vector<std::string>> split_rows(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
      const auto bar = line.find(" | ", start);
      cells.push_back(line.substr(start, bar - start));
      if (bar == std::string::npos) break;
      start = bar + 3;
    }
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace

std::string_view table1_text() { return kTable1; }
std::string_view table2_text() { return kTable2; }

std::vector<Table1Row> table1_rows() {
  std::vector<Table1Row> out;
  for (auto& cells : split_rows(kTable1)) out.push_back({cells.at(0), cells.at(1), cells.at(2)});
  return out;
}

std::vector<Table2Row> table2_rows() {
  std::vector<Table2Row> out;
  for (auto& cells : split_rows(kTable2)) {
    out.push_back({cells.at(0), cells.at(1), expand_pattern(cells.at(1), 27)});
  }
  return out;
}

std::string expand_pattern(std::string_view printed, std::size_t length) {
  const auto pos = printed.find(kEllipsis);
  if (pos == std::string_view::npos) {
    require(printed.size() == length, "pattern has the wrong length");
    return std::string(printed);
  }
  const auto head = printed.substr(0, pos);
  const auto tail = printed.substr(pos + kEllipsis.size());
  require(head.size() + tail.size() <= length, "pattern is longer than the requested length");
  require(!head.empty() && head.back() == '?' && !tail.empty() && tail.front() == '?',
          "elided middle must be surrounded by wildcards");
  return std::string(head) + std::string(length - head.size() - tail.size(), '?') + std::string(tail);
}

TableVerification verify_table1(gf2::Parallelism par) {
  TableVerification result;
  const auto fixture = table1_rows();
  result.total = fixture.size();

  struct Built {
    std::string label;
    std::string sanf;
  };
  std::map<std::string, Built> built;
  std::size_t produced = 0;
  ConstructionEnumerator en(6, 6);
  while (auto p = en.next()) {
    const auto f = construct_function(*p);
    built[f.to_string()] = {p->m_string(), svv_to_sanf(f).to_string()};
    ++produced;
  }
  if (produced != fixture.size() || built.size() != fixture.size()) {
    result.failures.push_back("enumeration of (6, 6) produced " + std::to_string(produced) + " functions (" +
                              std::to_string(built.size()) + " distinct), expected " +
                              std::to_string(fixture.size()));
  }

  for (const auto& row : fixture) {
    std::string line = row.label + " | " + row.svv + " | " + row.sanf;
    const auto it = built.find(row.svv);
    if (it == built.end()) {
      result.failures.push_back(line + " : SVV not produced by the construction");
      result.lines.push_back(line + " | FAIL");
      continue;
    }
    std::vector<std::string> problems;
    if (it->second.sanf != row.sanf) problems.push_back("SANF computed as " + it->second.sanf);
    if (SanfVector::from_string(row.sanf) != svv_to_sanf(SymmetricFunction::from_string(row.svv))) {
      problems.push_back("printed SANF is not the transform of the printed SVV");
    }
    if (it->second.label != row.label) problems.push_back("constructed with m = " + it->second.label);
    const auto report = compute_ai_exact(expand_truth_table(SymmetricFunction::from_string(row.svv)), par);
    if (report.ai != 6) problems.push_back("AI = " + std::to_string(report.ai));
    line += " | ai=" + std::to_string(report.ai);
    if (problems.empty()) {
      ++result.matched;
      result.lines.push_back(line + " | ok");
    } else {
      std::string msg = line + " :";
      for (const auto& p : problems) msg += " " + p + ";";
      result.failures.push_back(msg);
      result.lines.push_back(line + " | FAIL");
    }
  }
  result.pass = result.failures.empty() && result.matched == result.total;
  return result;
}

TableVerification verify_table2(bool deep, gf2::Parallelism par) {
  constexpr unsigned k = 13;
  constexpr unsigned d = 5;
  constexpr unsigned n = 2 * k;
  TableVerification result;
  const auto fixture = table2_rows();
  result.total = fixture.size();

  std::map<std::string, std::string> pattern_of;
  for (const auto& row : fixture) pattern_of[row.label] = row.pattern;

  for (const auto& row : fixture) {
    std::vector<std::string> problems;
    const std::size_t free_len = ConstructionParams::free_length(k, d);
    const auto lo = construct_function(ConstructionParams::from_strings(k, d, row.label, std::string(free_len, '0')));
    const auto hi = construct_function(ConstructionParams::from_strings(k, d, row.label, std::string(free_len, '1')));
    const std::string slo = lo.to_string();
    const std::string shi = hi.to_string();
    std::size_t wildcards = 0;
    for (unsigned i = 0; i <= n; ++i) {
      const char want = row.pattern[i];
      if (want == '?') {
        ++wildcards;
        if (i < d || i > n - d) problems.push_back("wildcard at fixed position " + std::to_string(i));
        if (slo[i] == shi[i]) problems.push_back("position " + std::to_string(i) + " is not free");
      } else if (slo[i] != want || shi[i] != want) {
        problems.push_back("position " + std::to_string(i) + " is " + std::string(1, slo[i]) + ", printed " +
                           std::string(1, want));
      }
    }
    if (wildcards != free_len) {
      problems.push_back(std::to_string(wildcards) + " wildcards, expected " + std::to_string(free_len));
    }
    const std::string line = row.label + " | " + slo.substr(0, d) + "…" + slo.substr(n - d + 1);
    if (problems.empty()) {
      ++result.matched;
      result.lines.push_back(line + " | ok");
    } else {
      std::string msg = row.label + " | " + row.printed + " :";
      for (const auto& p : problems) msg += " " + p + ";";
      result.failures.push_back(msg);
      result.lines.push_back(line + " | FAIL");
    }
  }

  // Walk the whole family lazily: count it and check every member's fixed
  // positions against the pattern of its m label.
  std::uint64_t count = 0;
  std::uint64_t mismatches = 0;
  ConstructionEnumerator en(k, d);
  while (auto p = en.next()) {
    ++count;
    const auto f = construct_function(*p);
    const auto& pattern = pattern_of[p->m_string()];
    for (unsigned i = 0; i <= n; ++i) {
      if (pattern[i] != '?' && (pattern[i] == '1') != f[i]) {
        ++mismatches;
        break;
      }
    }
  }
  const std::uint64_t expected = count_formula(k, d);
  result.lines.push_back("family size " + std::to_string(count) + " (formula " + std::to_string(expected) + ")");
  if (count != expected) result.failures.push_back("enumerated " + std::to_string(count) + " functions");
  if (mismatches != 0) result.failures.push_back(std::to_string(mismatches) + " functions break their pattern");

  if (deep) {
    const auto f = construct_function(
        ConstructionParams::from_strings(k, d, "000", std::string(ConstructionParams::free_length(k, d), '0')));
    const auto cert = certify_ai_lower_bound(f, d, par);
    result.lines.push_back("deep certificate d=5: certified=" + std::string(cert.certified ? "true" : "false") +
                           " rank_f=" + std::to_string(cert.rank_f) + " rank_fc=" + std::to_string(cert.rank_fc) +
                           " columns=" + std::to_string(cert.columns));
    if (!cert.certified) result.failures.push_back("deep certificate failed");
  }

  result.pass = result.failures.empty() && result.matched == result.total;
  return result;
}

}  // namespace aiforge
