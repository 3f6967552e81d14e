#pragma once

// One function as printed by the CLI, in JSON or table-style text.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace aiforge {

struct RecordParams {
  unsigned k = 0;
  unsigned d = 0;
  std::string m;
  std::string free;
  friend bool operator==(const RecordParams&, const RecordParams&) = default;
};

struct RecordWitness {
  std::string side;                  // "f" or "f+1"
  std::vector<std::uint64_t> monomials;  // ANF masks, ascending
  friend bool operator==(const RecordWitness&, const RecordWitness&) = default;
};

struct RecordCertificate {
  unsigned d = 0;
  bool certified = false;
  std::uint64_t columns = 0;
  std::uint64_t rank_f = 0;
  std::uint64_t rank_fc = 0;
  std::uint64_t rows_f = 0;
  std::uint64_t rows_fc = 0;
  friend bool operator==(const RecordCertificate&, const RecordCertificate&) = default;
};

struct FunctionRecord {
  unsigned n = 0;
  std::string svv;
  std::optional<std::string> sanf;
  std::optional<unsigned> ai;
  std::optional<std::string> ai_kind;  // "exact" | "lower_bound"
  std::optional<RecordParams> params;
  std::optional<RecordWitness> witness;
  std::optional<RecordCertificate> certificate;

  /// Throws ContractViolation on a length or ai_kind inconsistency.
  void validate() const;

  /// Compact JSON with fields in a fixed order; absent optionals are omitted.
  std::string to_json() const;
  static FunctionRecord from_json(std::string_view text);

  /// "m | svv | sanf | ai" in the published table layout, plus detail lines.
  std::string to_text() const;

  friend bool operator==(const FunctionRecord&, const FunctionRecord&) = default;
};

}  // namespace aiforge
