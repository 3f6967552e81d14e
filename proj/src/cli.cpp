#include "aiforge/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <json.hpp>
#include <ostream>

#include "aiforge/annihilator.hpp"
#include "aiforge/boolfun.hpp"
#include "aiforge/construction.hpp"
#include "aiforge/errors.hpp"
#include "aiforge/golden_tables.hpp"
#include "aiforge/record.hpp"

namespace aiforge {

namespace {

constexpr unsigned kMaxVerifyVars = 14;

gf2::Parallelism parallelism_from_env() {
  gf2::Parallelism par;
  if (const char* env = std::getenv("AIFORGE_THREADS")) {
    try {
      par.threads = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      throw ContractViolation("AIFORGE_THREADS must be a nonnegative integer");
    }
  }
  return par;
}

RecordParams to_record(const ConstructionParams& p) { return {p.k, p.d, p.m_string(), p.free_string()}; }

FunctionRecord base_record(const SymmetricFunction& f) {
  FunctionRecord r;
  r.n = f.n();
  r.svv = f.to_string();
  return r;
}

void emit(std::ostream& out, const FunctionRecord& r, bool json) {
  if (json) {
    out << r.to_json() << '\n';
  } else {
    out << r.to_text();
  }
}

void attach_ai(FunctionRecord& r, const AiReport& report, bool with_witness) {
  r.ai = report.ai;
  r.ai_kind = "exact";
  if (with_witness && report.witness) r.witness = RecordWitness{to_string(report.side), report.witness->monomials()};
}

struct Options {
  bool json = false;

  unsigned k = 0;
  unsigned d = 0;
  std::string m;
  std::string free;
  std::optional<std::uint64_t> free_index;
  bool sanf_flag = false;

  std::string svv;
  std::string sanf;
  bool witness = false;

  bool verify_ai = false;
  std::optional<std::uint64_t> limit;
  bool count_only = false;

  int table = 0;
  bool deep = false;
};

int cmd_construct(const Options& o, std::ostream& out) {
  validate_construction_pair(o.k, o.d);
  const std::string m = o.m.empty() ? std::string(ConstructionParams::m_length(o.d), '0') : o.m;
  std::string free = o.free;
  if (o.free_index) {
    free.clear();
    for (auto b : ConstructionParams::free_bits_from_index(*o.free_index, ConstructionParams::free_length(o.k, o.d))) {
      free.push_back(b ? '1' : '0');
    }
  } else if (free.empty()) {
    free = std::string(ConstructionParams::free_length(o.k, o.d), '0');
  }
  const auto params = ConstructionParams::from_strings(o.k, o.d, m, free);
  const auto f = construct_function(params);
  auto r = base_record(f);
  if (o.sanf_flag) r.sanf = svv_to_sanf(f).to_string();
  r.params = to_record(params);
  emit(out, r, o.json);
  return 0;
}

int cmd_transform(const Options& o, std::ostream& out) {
  FunctionRecord r;
  if (!o.svv.empty()) {
    const auto f = SymmetricFunction::from_string(o.svv);
    r = base_record(f);
    r.sanf = svv_to_sanf(f).to_string();
  } else {
    const auto f = sanf_to_svv(SanfVector::from_string(o.sanf));
    r = base_record(f);
    r.sanf = o.sanf;
  }
  emit(out, r, o.json);
  return 0;
}

int cmd_ai(const Options& o, std::ostream& out, std::ostream& err, gf2::Parallelism par) {
  const auto f = SymmetricFunction::from_string(o.svv);
  if (f.n() > kMaxTruthTableVars) {
    err << "error: exact AI needs a truth table and is limited to n <= " << kMaxTruthTableVars << " (got n = " << f.n()
        << "); use `certify --svv ... --d D` for a lower bound\n";
    return 1;
  }
  auto r = base_record(f);
  attach_ai(r, compute_ai_exact(expand_truth_table(f), par), o.witness);
  emit(out, r, o.json);
  return 0;
}

int cmd_certify(const Options& o, std::ostream& out, std::ostream& err, gf2::Parallelism par) {
  const auto f = SymmetricFunction::from_string(o.svv);
  if (o.d < 1 || 2 * o.d > f.n()) {
    err << "error: certify needs 1 <= d <= n/2 (got d = " << o.d << ", n = " << f.n() << ")\n";
    return 1;
  }
  const auto c = certify_ai_lower_bound(f, o.d, par);
  auto r = base_record(f);
  if (c.certified) {
    r.ai = c.d;
    r.ai_kind = "lower_bound";
  }
  r.certificate = RecordCertificate{c.d, c.certified, c.columns, c.rank_f, c.rank_fc, c.rows_f, c.rows_fc};
  emit(out, r, o.json);
  return 0;
}

int cmd_enumerate(const Options& o, std::ostream& out, std::ostream& err, gf2::Parallelism par) {
  validate_construction_pair(o.k, o.d);
  if (o.count_only) {
    const auto formula = count_formula(o.k, o.d);
    if (count_exponent(o.k, o.d) > 32) {
      err << "error: family of 2^" << count_exponent(o.k, o.d) << " is too large to count lazily\n";
      return 1;
    }
    std::uint64_t lazy = 0;
    ConstructionEnumerator en(o.k, o.d);
    while (en.next()) ++lazy;
    if (lazy != formula) {
      err << "error: lazy enumeration counted " << lazy << " functions, formula gives " << formula << '\n';
      return 1;
    }
    if (o.json) {
      out << nlohmann::ordered_json{{"k", o.k}, {"d", o.d}, {"count", formula}}.dump() << '\n';
    } else {
      out << formula << '\n';
    }
    return 0;
  }
  if (o.verify_ai && 2 * o.k > kMaxVerifyVars) {
    err << "error: --verify-ai is limited to n <= " << kMaxVerifyVars << " (got n = " << 2 * o.k << ")\n";
    return 1;
  }

  std::uint64_t emitted = 0;
  std::uint64_t below = 0;
  ConstructionEnumerator en(o.k, o.d);
  while (auto p = en.next()) {
    if (o.limit && emitted >= *o.limit) break;
    const auto f = construct_function(*p);
    auto r = base_record(f);
    r.sanf = svv_to_sanf(f).to_string();
    r.params = to_record(*p);
    if (o.verify_ai) {
      const auto report = compute_ai_exact(expand_truth_table(f), par);
      attach_ai(r, report, false);
      if (report.ai < o.d) {
        ++below;
        err << "error: " << r.svv << " has AI " << report.ai << " < d = " << o.d << '\n';
      }
    }
    emit(out, r, o.json);
    ++emitted;
  }
  return below == 0 ? 0 : 1;
}

int cmd_verify_table(const Options& o, std::ostream& out, std::ostream& err, gf2::Parallelism par) {
  const auto v = o.table == 1 ? verify_table1(par) : verify_table2(o.deep, par);
  const char* unit = o.table == 1 ? "rows" : "patterns";
  if (o.json) {
    out << nlohmann::ordered_json{{"table", o.table},  {"pass", v.pass},         {"matched", v.matched},
                                  {"total", v.total},  {"lines", v.lines},       {"failures", v.failures}}
               .dump()
        << '\n';
  } else {
    for (const auto& line : v.lines) out << line << '\n';
    out << (v.pass ? "PASS" : "FAIL") << ", " << v.matched << '/' << v.total << ' ' << unit << '\n';
  }
  for (const auto& f : v.failures) err << "mismatch: " << f << '\n';
  return v.pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct symmetric Boolean functions with high algebraic immunity and verify their AI"};
  app.name(args.empty() ? "aiforge" : args.front());
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_flag("--json", o.json, "Machine-readable JSON output, one record per line");

  auto* construct = app.add_subcommand("construct", "Build one function from its parameters");
  construct->add_option("--k", o.k, "Half the variable count (n = 2k)")->required();
  construct->add_option("--d", o.d, "AI bound; must be a binary suffix of k and >= 2")->required();
  construct->add_option("--m", o.m, "m_0 ... m_floor(log2 d) as a bit string (default all zero)");
  auto* free_opt = construct->add_option("--free", o.free, "Values on weights d..n-d as a bit string (default zero)");
  construct->add_option("--free-index", o.free_index, "Free bits as a big-endian counter")->excludes(free_opt);
  construct->add_flag("--sanf", o.sanf_flag, "Also print the SANF vector");

  auto* transform = app.add_subcommand("transform", "Convert between SVV and SANF");
  auto* svv_opt = transform->add_option("--svv", o.svv, "Simplified value vector");
  auto* sanf_opt = transform->add_option("--sanf", o.sanf, "Simplified ANF vector");
  svv_opt->excludes(sanf_opt);
  transform->require_option(1);

  auto* ai = app.add_subcommand("ai", "Exact algebraic immunity by annihilator search (n <= 24)");
  ai->add_option("--svv", o.svv, "Simplified value vector")->required();
  ai->add_flag("--witness", o.witness, "Print a minimal-degree annihilator as ANF monomial masks");

  auto* certify = app.add_subcommand("certify", "Rank certificate for AI >= d");
  certify->add_option("--svv", o.svv, "Simplified value vector")->required();
  certify->add_option("--d", o.d, "Claimed lower bound")->required();

  auto* enumerate = app.add_subcommand("enumerate", "Stream every constructed function for (k, d)");
  enumerate->add_option("--k", o.k, "Half the variable count (n = 2k)")->required();
  enumerate->add_option("--d", o.d, "AI bound; binary suffix of k, >= 2")->required();
  enumerate->add_flag("--verify-ai", o.verify_ai, "Brute-force the AI of each function (n <= 14)");
  enumerate->add_option("--limit", o.limit, "Stop after N records");
  enumerate->add_flag("--count-only", o.count_only, "Print the family size and check it by lazy enumeration");

  auto* verify = app.add_subcommand("verify-table", "Check the embedded reference tables");
  verify->add_option("--table", o.table, "1 (n = 12) or 2 (n = 26)")->required()->check(CLI::IsMember({1, 2}));
  verify->add_flag("--deep", o.deep, "Table 2: also run the n = 26 certificate");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    const auto par = parallelism_from_env();
    if (*construct) return cmd_construct(o, out);
    if (*transform) return cmd_transform(o, out);
    if (*ai) return cmd_ai(o, out, err, par);
    if (*certify) return cmd_certify(o, out, err, par);
    if (*enumerate) return cmd_enumerate(o, out, err, par);
    if (*verify) return cmd_verify_table(o, out, err, par);
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace aiforge
