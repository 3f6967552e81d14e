#include "aiforge/record.hpp"

#include <json.hpp>

#include "aiforge/errors.hpp"

namespace aiforge {

using ordered_json = nlohmann::ordered_json;

void FunctionRecord::validate() const {
  require(svv.size() == static_cast<std::size_t>(n) + 1, "record: svv length must be n+1");
  if (sanf) require(sanf->size() == static_cast<std::size_t>(n) + 1, "record: sanf length must be n+1");
  if (ai_kind) require(*ai_kind == "exact" || *ai_kind == "lower_bound", "record: unknown ai_kind");
  require(ai.has_value() == ai_kind.has_value(), "record: ai and ai_kind go together");
}

std::string FunctionRecord::to_json() const {
  validate();
  ordered_json j;
  j["n"] = n;
  j["svv"] = svv;
  if (sanf) j["sanf"] = *sanf;
  if (ai) j["ai"] = *ai;
  if (ai_kind) j["ai_kind"] = *ai_kind;
  if (params) {
    j["params"] = ordered_json{{"k", params->k}, {"d", params->d}, {"m", params->m}, {"free", params->free}};
  }
  if (witness) j["witness"] = ordered_json{{"side", witness->side}, {"monomials", witness->monomials}};
  if (certificate) {
    const auto& c = *certificate;
    j["certificate"] = ordered_json{{"d", c.d},           {"certified", c.certified}, {"columns", c.columns},
                                    {"rank_f", c.rank_f}, {"rank_fc", c.rank_fc},     {"rows_f", c.rows_f},
                                    {"rows_fc", c.rows_fc}};
  }
  return j.dump();
}

FunctionRecord FunctionRecord::from_json(std::string_view text) {
  FunctionRecord r;
  try {
    const auto j = ordered_json::parse(text);
    r.n = j.at("n").get<unsigned>();
    r.svv = j.at("svv").get<std::string>();
    if (j.contains("sanf")) r.sanf = j["sanf"].get<std::string>();
    if (j.contains("ai")) r.ai = j["ai"].get<unsigned>();
    if (j.contains("ai_kind")) r.ai_kind = j["ai_kind"].get<std::string>();
    if (j.contains("params")) {
      const auto& p = j["params"];
      r.params = RecordParams{p.at("k").get<unsigned>(), p.at("d").get<unsigned>(), p.at("m").get<std::string>(),
                              p.at("free").get<std::string>()};
    }
    if (j.contains("witness")) {
      const auto& w = j["witness"];
      r.witness = RecordWitness{w.at("side").get<std::string>(), w.at("monomials").get<std::vector<std::uint64_t>>()};
    }
    if (j.contains("certificate")) {
      const auto& c = j["certificate"];
      r.certificate = RecordCertificate{c.at("d").get<unsigned>(),       c.at("certified").get<bool>(),
                                        c.at("columns").get<std::uint64_t>(), c.at("rank_f").get<std::uint64_t>(),
                                        c.at("rank_fc").get<std::uint64_t>(), c.at("rows_f").get<std::uint64_t>(),
                                        c.at("rows_fc").get<std::uint64_t>()};
    }
  } catch (const nlohmann::json::exception& e) {
    throw ContractViolation(std::string("record: malformed JSON: ") + e.what());
  }
  r.validate();
  return r;
}

std::string FunctionRecord::to_text() const {
  validate();
  std::string line;
  if (params) line += params->m + " | ";
  line += svv;
  if (sanf) line += " | " + *sanf;
  if (ai) line += (*ai_kind == "exact" ? " | ai=" : " | ai>=") + std::to_string(*ai);
  line += '\n';
  if (params) {
    line += "  k=" + std::to_string(params->k) + " d=" + std::to_string(params->d) + " free=" + params->free + '\n';
  }
  if (witness) {
    line += "  witness (" + witness->side + "):";
    for (auto m : witness->monomials) line += ' ' + std::to_string(m);
    line += '\n';
  }
  if (certificate) {
    const auto& c = *certificate;
    line += "  certified=" + std::string(c.certified ? "true" : "false") + " d=" + std::to_string(c.d) +
            " columns=" + std::to_string(c.columns) + " rank_f=" + std::to_string(c.rank_f) +
            " rank_fc=" + std::to_string(c.rank_fc) + " rows_f=" + std::to_string(c.rows_f) +
            " rows_fc=" + std::to_string(c.rows_fc) + '\n';
  }
  return line;
}

}  // namespace aiforge
