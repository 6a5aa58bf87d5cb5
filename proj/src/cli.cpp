#include "gwb/cli.hpp"

#include "gwb/oracle.hpp"
#include "gwb/parse.hpp"
#include "gwb/report.hpp"
#include "gwb/rules.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

namespace gwb::cli {

namespace {

constexpr const char* kClassSyntax =
    "Classes are whitespace-free sums of signed integer coefficients on basis letters: "
    "l on P<n>; f (total transform of a line) and e (line in E) on BlP<n>. Examples: 2l, 3f-1e, f-e.";

constexpr const char* kInsertionSyntax =
    "Insertions: 1, pt, H, H^k (P<n>), h, E, PD(E) (BlP<n>), p*<P<n> class> (BlP<n>); append @away to mark a "
    "class supported away from the blow-up locus.";

std::filesystem::path default_cache_path() {
  if (const char* env = std::getenv("GW_CACHE"); env && *env) return env;
  return "gw_cache.json";
}

struct QueryArgs {
  std::string manifold;
  std::string curve_class;
  std::string insert;
  int points = 0;
  int genus = 0;
};

InvariantQuery build_query(const QueryArgs& a) {
  if (a.points < 0) throw parse::ParseError("--points must be >= 0");
  if (a.genus < 0) throw parse::ParseError("--genus must be >= 0");
  const Manifold m = parse::manifold(a.manifold);
  InvariantQuery q{m, parse::curve(m, a.curve_class), a.genus, parse::insertions(m, a.insert)};
  for (int i = 0; i < a.points; ++i) q.insertions.push_back(Insertion::point(m.n()));
  return q;
}

std::string result_kind(const EvalResult& r) {
  if (std::holds_alternative<Exact>(r)) return "exact";
  if (std::holds_alternative<Zero>(r)) return "zero";
  return "symbolic";
}

void emit_invariant(const RunConfig& cfg, const InvariantQuery& q, const EvalResult& r, std::ostream& out) {
  const auto value = numeric_value(r);
  std::string reason;
  if (const auto* z = std::get_if<Zero>(&r)) reason = z->reason;
  std::string residual;
  if (std::holds_alternative<Symbolic>(r)) residual = describe(r);
  switch (cfg.output) {
    case OutputFormat::text:
      if (std::holds_alternative<Exact>(r))
        out << value->to_string() << '\n';
      else if (!reason.empty())
        out << "0 (" << reason << ")\n";
      else
        out << residual << '\n';
      break;
    case OutputFormat::json: {
      nlohmann::ordered_json j;
      j["query"] = q.to_string();
      j["kind"] = result_kind(r);
      j["value"] = value ? nlohmann::ordered_json(value->to_string()) : nlohmann::ordered_json(nullptr);
      if (!reason.empty()) j["reason"] = reason;
      if (!residual.empty()) j["residual"] = residual;
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "query,kind,value,reason\n";
      out << '"' << q.to_string() << "\"," << result_kind(r) << ',' << (value ? value->to_string() : "-") << ','
          << (reason.empty() ? residual : reason) << '\n';
      break;
  }
}

void emit_rows(const RunConfig& cfg, const std::vector<rules::RuleApplication>& rows, std::ostream& out) {
  switch (cfg.output) {
    case OutputFormat::text:
      report::write_text(out, rows);
      break;
    case OutputFormat::json:
      report::write_json_lines(out, rows);
      break;
    case OutputFormat::csv:
      report::write_csv(out, rows);
      break;
  }
}

// private memo copy per worker, merged at the end
std::vector<rules::RuleApplication> run_verify(rules::Rule rule, const rules::VerifyRange& range, int jobs,
                                               Oracle& oracle) {
  const auto params = rules::verify_parameters(rule, range);
  std::vector<std::vector<rules::RuleApplication>> per_param(params.size());
  if (jobs <= 1 || params.size() <= 1) {
    for (std::size_t i = 0; i < params.size(); ++i) per_param[i] = rules::verify_rows(rule, params[i], oracle);
  } else {
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), params.size());
    std::vector<std::shared_ptr<MemoTable>> tables(workers);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) {
      tables[w] = std::make_shared<MemoTable>(oracle.memo());
      threads.emplace_back([&, w] {
        try {
          Oracle local(tables[w]);
          for (std::size_t i = w; i < params.size(); i += workers)
            per_param[i] = rules::verify_rows(rule, params[i], local);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
    for (const auto& t : tables) oracle.memo().merge(*t);
  }
  std::vector<rules::RuleApplication> rows;
  for (auto& batch : per_param) std::move(batch.begin(), batch.end(), std::back_inserter(rows));
  return rows;
}

void emit_table(const RunConfig& cfg, const std::string& which, Oracle& oracle, std::ostream& out) {
  struct Row {
    std::string cls;
    ExactRational value;
  };
  std::vector<Row> rows;
  if (which == "kontsevich") {
    for (int d = 1; d <= cfg.max_degree; ++d) rows.push_back({std::to_string(d) + "l", oracle.kontsevich_p2(d)});
  } else if (which == "blowup") {
    const Manifold blown = blowup_point(2);
    rows.push_back({"e", oracle.wdvv_f1(0, 1)});
    for (std::int64_t a = 1; a <= cfg.max_degree; ++a)
      for (std::int64_t b = 0; b >= -a; --b)
        rows.push_back({format_curve(blown, CurveClass{a, b}), oracle.wdvv_f1(a, b)});
  } else {
    throw parse::ParseError("unknown table '" + which + "' (expected kontsevich or blowup)");
  }
  switch (cfg.output) {
    case OutputFormat::text:
      for (const auto& r : rows) out << r.cls << ' ' << r.value << '\n';
      break;
    case OutputFormat::json: {
      nlohmann::ordered_json j = nlohmann::ordered_json::array();
      for (const auto& r : rows) j.push_back({{"class", r.cls}, {"value", r.value.to_string()}});
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "class,value\n";
      for (const auto& r : rows) out << r.cls << ',' << r.value << '\n';
      break;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact genus-zero Gromov-Witten invariants under blow-ups", "gwb"};
  app.require_subcommand(1);
  app.fallthrough();
  app.footer(std::string(kClassSyntax) + "\n" + kInsertionSyntax);

  RunConfig cfg;
  bool as_json = false;
  bool as_csv = false;
  std::string cache_opt;
  app.add_flag("--json", as_json, "Emit JSON (one object per line for reports)");
  app.add_flag("--csv", as_csv, "Emit CSV");
  app.add_option("--cache", cache_opt, "Memo cache file (default $GW_CACHE or ./gw_cache.json)");
  app.add_flag("--no-cache", [&](std::int64_t) { cfg.use_cache = false; }, "Do not read or write the memo cache");
  app.add_option("--jobs", cfg.jobs, "Worker count for verify")->check(CLI::PositiveNumber);
  app.add_option("--max-degree", cfg.max_degree, "Largest degree for verify/table")->check(CLI::PositiveNumber);

  QueryArgs qa;
  auto* inv = app.add_subcommand("invariant", "Evaluate one invariant");
  inv->add_option("manifold", qa.manifold, "P<n> or BlP<n>")->required();
  inv->add_option("class", qa.curve_class, "Curve class, e.g. 3l or 3f-1e")->required();
  inv->add_option("--points", qa.points, "Append this many point insertions");
  inv->add_option("--insert", qa.insert, "Comma-separated insertions");
  inv->add_option("--genus", qa.genus, "Genus (numeric values for genus 0)");

  std::string rule_name;
  std::string locus_text;
  auto* tr = app.add_subcommand("transform", "Apply one blow-up rule to a query");
  tr->add_option("rule", rule_name, "thm1-2, thm1-3, thm1-4, thm1-5, thm1-6, lemma1-1")->required();
  tr->add_option("manifold", qa.manifold, "P<n> or BlP<n>")->required();
  tr->add_option("class", qa.curve_class, "Curve class")->required();
  tr->add_option("--points", qa.points, "Append this many point insertions");
  tr->add_option("--insert", qa.insert, "Comma-separated insertions");
  tr->add_option("--genus", qa.genus, "Genus");
  tr->add_option("--locus", locus_text, "curve:g0=G,c1=C | surface:K3 | surface:torus | surface:product:G1xG2");

  std::string verify_rule;
  std::string r_range;
  auto* ver = app.add_subcommand("verify", "Verify a rule over a parameter range");
  ver->add_option("rule", verify_rule, "Rule name or 'all'")->required();
  ver->add_option("--r", r_range, "Parameter range lo..hi (default 1..max-degree; lemma1-1 defaults to 1..5)");

  std::string table_name;
  auto* tab = app.add_subcommand("table", "Tabulate an oracle");
  tab->add_option("which", table_name, "kontsevich or blowup")->required();

  std::string cache_action;
  std::string cache_file;
  auto* cache = app.add_subcommand("cache", "Inspect or move the memo cache");
  cache->add_option("action", cache_action, "show, export, import or clear")->required();
  cache->add_option("file", cache_file, "File for export/import");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (as_json && as_csv) {
    err << "error: --json and --csv are exclusive\n";
    return kUsage;
  }
  cfg.output = as_json ? OutputFormat::json : as_csv ? OutputFormat::csv : OutputFormat::text;
  cfg.cache_path = cache_opt.empty() ? default_cache_path() : std::filesystem::path(cache_opt);

  auto memo = std::make_shared<MemoTable>();
  if (cfg.use_cache) {
    try {
      memo->load(cfg.cache_path);
    } catch (const std::exception& e) {
      err << "warning: " << e.what() << "; starting with an empty cache\n";
      memo = std::make_shared<MemoTable>();
    }
  }
  Oracle oracle(memo);

  int status = kOk;
  try {
    if (*inv) {
      cfg.command = Command::invariant;
      const auto q = build_query(qa);
      emit_invariant(cfg, q, oracle.evaluate(q), out);
    } else if (*tr) {
      cfg.command = Command::transform;
      const auto rule = rules::rule_from_string(rule_name);
      const auto q = build_query(qa);
      rules::RuleApplication app_row;
      switch (rule) {
        case rules::Rule::thm_1_2:
          app_row = rules::transform_1_2(q, oracle);
          break;
        case rules::Rule::thm_1_3:
          app_row = rules::transform_1_3(q, oracle);
          break;
        case rules::Rule::thm_1_4:
          app_row = rules::transform_1_4(q, oracle);
          break;
        case rules::Rule::thm_1_5:
        case rules::Rule::thm_1_6:
          if (locus_text.empty()) throw parse::ParseError("--locus is required for " + rule_name);
          app_row = rule == rules::Rule::thm_1_5
                        ? rules::transform_1_5(q, parse::locus(locus_text, q.manifold.n()), oracle)
                        : rules::transform_1_6(q, parse::locus(locus_text, q.manifold.n()), oracle);
          break;
        case rules::Rule::lemma_1_1:
          app_row = rules::lemma_1_1_row(q, oracle);
          break;
        case rules::Rule::corollary_e:
          app_row = rules::corollary_e(q.manifold.n(), oracle);
          break;
      }
      emit_rows(cfg, {app_row}, out);
      if (app_row.verdict == rules::Verdict::mismatch) status = kVerificationFailed;
    } else if (*ver) {
      cfg.command = Command::verify;
      std::vector<rules::Rule> selected;
      if (verify_rule == "all")
        selected.assign(std::begin(rules::kAllRules), std::end(rules::kAllRules));
      else
        selected.push_back(rules::rule_from_string(verify_rule));
      std::vector<rules::RuleApplication> rows;
      for (auto rule : selected) {
        rules::VerifyRange range{1, cfg.max_degree};
        if (!r_range.empty())
          range = parse::range(r_range);
        else if (rule == rules::Rule::lemma_1_1)
          range = {1, 5};
        auto batch = run_verify(rule, range, cfg.jobs, oracle);
        std::move(batch.begin(), batch.end(), std::back_inserter(rows));
      }
      emit_rows(cfg, rows, out);
      const bool pass = std::none_of(rows.begin(), rows.end(), [](const rules::RuleApplication& r) {
        return r.verdict == rules::Verdict::mismatch;
      });
      if (!pass) status = kVerificationFailed;
    } else if (*tab) {
      cfg.command = Command::table;
      emit_table(cfg, table_name, oracle, out);
    } else if (*cache) {
      cfg.command = Command::cache;
      if (cache_action == "show") {
        for (const auto& [k, v] : memo->entries()) out << k << ' ' << v.to_fraction_string() << '\n';
      } else if (cache_action == "export") {
        if (cache_file.empty()) throw parse::ParseError("cache export needs a file");
        std::ofstream f(cache_file, std::ios::trunc);
        if (!f) throw std::runtime_error("cannot write " + cache_file);
        f << memo->to_json_string();
        out << "exported " << memo->size() << " entries\n";
      } else if (cache_action == "import") {
        if (cache_file.empty()) throw parse::ParseError("cache import needs a file");
        if (!std::filesystem::exists(cache_file)) throw std::runtime_error("no such file " + cache_file);
        MemoTable incoming;
        incoming.load(cache_file);
        memo->merge(incoming);
        out << "imported " << incoming.size() << " entries\n";
      } else if (cache_action == "clear") {
        memo->clear();
        if (cfg.use_cache) {
          std::error_code ec;
          std::filesystem::remove(cfg.cache_path, ec);
        }
        out << "cleared\n";
        return kOk;
      } else {
        throw parse::ParseError("unknown cache action '" + cache_action + "'");
      }
    }
  } catch (const parse::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (cfg.use_cache && memo->dirty()) {
    try {
      memo->save(cfg.cache_path);
    } catch (const std::exception& e) {
      err << "warning: cache not saved: " << e.what() << '\n';
    }
  }
  return status;
}

}  // namespace gwb::cli
