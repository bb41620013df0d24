// Command-line surface: theorem suites, entailment/satisfiability on theory
// files, predicate classification, and the demos.
//
// Exit codes: 0 all pass, 1 check failure, 2 usage or parse error.

#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wellfound/harness.hpp"

namespace {

using namespace wellfound;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

struct CommonOptions {
  int alphabet = 2;
  int depth = 3;
  std::string boundary = "open";
  std::string format = "human";
  std::string split = "lowest";
  unsigned seed = 0x5eedu;
};

Boundary parse_boundary(const std::string& name) {
  if (name == "open") return Boundary::Open;
  if (name == "closed") return Boundary::Closed;
  throw UnknownNameError("unknown boundary convention: " + name);
}

SplitHeuristic parse_split(const std::string& name) {
  if (name == "lowest") return SplitHeuristic::LowestIndex;
  if (name == "frequent") return SplitHeuristic::MostFrequent;
  if (name == "unit") return SplitHeuristic::UnitPropagation;
  throw UnknownNameError("unknown split heuristic: " + name);
}

json report_json(const Report& rep) {
  return json{{"check", rep.check},     {"universe", rep.universe},
              {"pass", rep.pass},       {"instances", rep.instances},
              {"failures", rep.failures}, {"detail", rep.detail},
              {"millis", rep.millis}};
}

void print_report(const Report& rep, const std::string& format) {
  if (format == "json-lines") {
    std::cout << report_json(rep).dump() << "\n";
    return;
  }
  std::cout << (rep.pass ? "[pass] " : "[FAIL] ") << rep.check << "  (" << rep.universe << ", "
            << rep.instances << " instances, " << rep.millis << " ms)";
  if (!rep.detail.empty()) std::cout << "  " << rep.detail;
  std::cout << "\n";
}

int run_check(const std::string& suite, const CommonOptions& opt) {
  RunConfig config;
  config.alphabet = opt.alphabet;
  config.depth = opt.depth;
  config.boundary = parse_boundary(opt.boundary);
  config.split = parse_split(opt.split);
  config.seed = opt.seed;
  bool ok = run_suite(suite, config, [&](const Report& rep) { print_report(rep, opt.format); });
  return ok ? kExitPass : kExitCheckFailure;
}

int run_solve(const std::string& path, const std::string& format) {
  ClauseTheory t = load_theory_file(path);
  if (derivable(t, Sequent{})) {
    auto d = derive(t, Sequent{});
    if (!d || !recheck_derivation(t, Sequent{}, *d)) {
      std::cerr << "internal error: derivation failed to re-check\n";
      return kExitCheckFailure;
    }
    std::string payload = derivation_to_json(t, Sequent{}, *d);
    if (format == "json-lines") {
      std::cout << json{{"verdict", "INCONSISTENT"}, {"derivation", json::parse(payload)}}.dump()
                << "\n";
    } else {
      std::cout << "INCONSISTENT\nderivation: " << payload << "\n";
    }
    return kExitPass;
  }
  auto model = find_model(t);
  if (!model || !satisfies(*model, t)) {
    std::cerr << "internal error: underivable theory without a re-checkable model\n";
    return kExitCheckFailure;
  }
  if (format == "json-lines") {
    std::cout << json{{"verdict", "CONSISTENT"}, {"model", json::parse(valuation_to_json(t, *model))}}
                     .dump()
              << "\n";
  } else {
    std::cout << "CONSISTENT\nmodel: " << valuation_to_json(t, *model) << "\n";
  }
  return kExitPass;
}

int run_sat(const std::string& path, const std::string& format) {
  ClauseTheory t = load_theory_file(path);
  auto model = find_model(t);
  if (model && !satisfies(*model, t)) {
    std::cerr << "internal error: model failed to re-check\n";
    return kExitCheckFailure;
  }
  if (format == "json-lines") {
    json doc{{"verdict", model ? "SAT" : "UNSAT"}};
    if (model) doc["model"] = json::parse(valuation_to_json(t, *model));
    std::cout << doc.dump() << "\n";
  } else if (model) {
    std::cout << "SAT\nmodel: " << valuation_to_json(t, *model) << "\n";
  } else {
    std::cout << "UNSAT\n";
  }
  return kExitPass;
}

bool reverify_classification(const Pred& t, const FoundReport& rep, Boundary b) {
  if (rep.witness_branch) {
    const Branch& alpha = *rep.witness_branch;
    for (int n = 0; n <= alpha.depth(); ++n) {
      bool in = t.member(branch_prefix(alpha, n));
      if (rep.property == "infinite-branch" && !in) return false;
      if (rep.property == "barred" && in) return false;  // escape branch
    }
  }
  if (rep.witness_level) {
    const Universe& u = t.universe();
    // holding bar levels certify full levels; failing path levels certify
    // empty ones
    bool expect_full = rep.holds;
    Pred m = t;
    if (rep.property == "uniformly-barred") m = up_monotonise(t);
    if (rep.property == "unbounded-paths") m = down_arborify(t);
    for (std::size_t r = u.level_begin(*rep.witness_level); r < u.level_end(*rep.witness_level);
         ++r) {
      if (m.member(r) != expect_full) return false;
    }
  }
  if (rep.witness_node && rep.property == "spread") {
    if (progressing_at(t, *rep.witness_node, b)) return false;
  }
  if (rep.fixpoint_table) {
    Pred expect = rep.property == "productive" ? pruning(t, b) : hereditary_closure(t, b);
    if (!(expect == *rep.fixpoint_table)) return false;
  }
  return true;
}

int run_classify(const std::string& path, const CommonOptions& opt) {
  Universe u(Alphabet(opt.alphabet), opt.depth);
  Boundary b = parse_boundary(opt.boundary);
  Pred t = load_predicate_file(path, u);
  std::vector<FoundReport> reports = classify(t, b);
  for (const FoundReport& rep : reports) {
    if (!reverify_classification(t, rep, b)) {
      std::cerr << "internal error: witness for " << rep.property << " failed to re-check\n";
      return kExitCheckFailure;
    }
  }
  if (opt.format == "json-lines") {
    for (const FoundReport& rep : reports) {
      json doc{{"property", rep.property}, {"holds", rep.holds}};
      if (rep.witness_branch) doc["witness_branch"] = rep.witness_branch->to_string();
      if (rep.witness_level) doc["witness_level"] = *rep.witness_level;
      if (rep.witness_node) doc["witness_node"] = rep.witness_node->to_string();
      std::cout << doc.dump() << "\n";
    }
    return kExitPass;
  }
  std::cout << "predicate: " << t.count() << " members over B=" << opt.alphabet
            << ", d=" << opt.depth << "\n";
  for (const FoundReport& rep : reports) {
    std::cout << "  " << rep.property;
    for (std::size_t i = rep.property.size(); i < 20; ++i) std::cout << ' ';
    std::cout << (rep.holds ? "yes" : "no ");
    if (rep.witness_branch) {
      std::cout << (rep.property == "barred" ? "  escape " : "  witness ")
                << rep.witness_branch->to_string();
    }
    if (rep.witness_level) {
      std::cout << (rep.holds ? "  at level " : "  empty level ") << *rep.witness_level;
    }
    if (rep.witness_node) std::cout << "  stuck at " << rep.witness_node->to_string();
    std::cout << "\n";
  }
  return kExitPass;
}

int run_demo_pigeonhole(int m, int n, const std::string& format) {
  PigeonholeReport rep = pigeonhole_demo(m, n);
  if (format == "json-lines") {
    std::cout << json{{"demo", "pigeonhole"},
                      {"m", rep.domain_size},
                      {"n", rep.codomain_size},
                      {"max_stage", rep.max_stage},
                      {"approximable", rep.approximable},
                      {"choice_function", rep.has_choice_function},
                      {"narrative", rep.narrative}}
                     .dump()
              << "\n";
    return kExitPass;
  }
  std::cout << "pigeonhole demo (m=" << m << ", n=" << n << ")\n"
            << "  approximable:              " << (rep.approximable ? "yes" : "no") << "\n"
            << "  survives extension rounds: " << rep.max_stage << "\n"
            << "  choice function:           " << (rep.has_choice_function ? "yes" : "none")
            << "\n  " << rep.narrative << "\n";
  return kExitPass;
}

int run_demo_realiser(int depth, int alphabet, const std::string& format) {
  Alphabet a(alphabet);
  Universe u(a, depth);
  std::size_t count = 0, good = 0;
  for (const ITree& t : enumerate_itrees(a, depth)) {
    ++count;
    Pred ext = itree_to_extensional(t, u);
    if (realises(t, ext) && is_barred(complement(ext))) ++good;
  }
  if (format == "json-lines") {
    std::cout << json{{"demo", "realiser"}, {"trees", count}, {"verified", good}}.dump() << "\n";
  } else {
    std::cout << "realiser demo: " << good << "/" << count << " intensional trees realise their "
              << "extensionalization (each leaves every depth-" << depth << " branch)\n";
  }
  return count == good ? kExitPass : kExitCheckFailure;
}

int run_expr(const std::string& text, const std::string& theory_path, const std::string& format) {
  if (!theory_path.empty()) {
    ClauseTheory t = load_theory_file(theory_path);
    std::vector<std::string> names = t.atom_names();
    BoolExpr e = parse_bool_expr(text, names);
    if (names.size() != t.atom_names().size()) {
      throw FileParseError("expression mentions a generator outside the theory's atoms");
    }
    TruthTable table = canon(e, t.atom_count());
    FilterSpec filter = FilterSpec::from_theory(t, Polarity::Filter);
    FilterSpec ideal = FilterSpec::from_theory(t, Polarity::Ideal);
    bool in_f = in_filter(filter, table);
    bool in_i = in_filter(ideal, table);
    if (format == "json-lines") {
      std::cout << json{{"expr", text},
                        {"tautology", table.is_top()},
                        {"contradiction", table.is_bottom()},
                        {"in_theory_filter", in_f},
                        {"in_theory_ideal", in_i}}
                       .dump()
                << "\n";
    } else {
      std::cout << "in F_T: " << (in_f ? "yes" : "no") << "\nin I_T: " << (in_i ? "yes" : "no")
                << "\n";
    }
    return kExitPass;
  }
  std::vector<std::string> names;
  BoolExpr e = parse_bool_expr(text, names);
  TruthTable table = canon(e, static_cast<int>(names.size()));
  std::string bits;
  for (std::size_t v = 0; v < table.size(); ++v) {
    bits += table.value_at(static_cast<AtomSet>(v)) ? '1' : '0';
  }
  if (format == "json-lines") {
    json doc{{"expr", text},
             {"generators", names},
             {"truth_table", bits},
             {"tautology", table.is_top()},
             {"contradiction", table.is_bottom()}};
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << "generators:";
    for (const auto& n : names) std::cout << ' ' << n;
    std::cout << "\ntruth table (valuations in binary order): " << bits << "\n";
    if (table.is_top()) std::cout << "tautology\n";
    if (table.is_bottom()) std::cout << "contradiction\n";
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wellfound: executable finite-depth semantics for choice and bar induction"};
  app.require_subcommand(1);

  CommonOptions opt;

  auto add_universe_opts = [&](CLI::App* cmd) {
    cmd->add_option("--alphabet", opt.alphabet, "alphabet size (>= 1)")->check(CLI::PositiveNumber);
    cmd->add_option("--depth", opt.depth, "universe depth (>= 1)")->check(CLI::PositiveNumber);
    cmd->add_option("--boundary", opt.boundary, "fixpoint convention at depth d")
        ->check(CLI::IsMember({"open", "closed"}));
  };
  auto add_format_opt = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"human", "json-lines"}));
  };

  std::string suite, path, expr_text, theory_path, demo_name;
  int demo_m = 3, demo_n = 2, demo_depth = 2;

  CLI::App* check = app.add_subcommand("check", "run a theorem suite");
  check->add_option("suite", suite, "one of: foundedness dc-bi kl-ft cc-ac gdc-gbi completeness bpf all")
      ->required();
  add_universe_opts(check);
  add_format_opt(check);
  check->add_option("--split", opt.split, "split-atom selection")
      ->check(CLI::IsMember({"lowest", "frequent", "unit"}));
  check->add_option("--seed", opt.seed, "sampling seed");

  CLI::App* solve = app.add_subcommand("solve", "decide a theory file: derivation or model");
  solve->add_option("file", path, "theory file (JSON)")->required();
  add_format_opt(solve);

  CLI::App* sat = app.add_subcommand("sat", "satisfiability of a theory file");
  sat->add_option("file", path, "theory file (JSON)")->required();
  add_format_opt(sat);

  CLI::App* classify_cmd = app.add_subcommand("classify", "classify a predicate file");
  classify_cmd->add_option("file", path, "predicate file (one digit string per line)")->required();
  add_universe_opts(classify_cmd);
  add_format_opt(classify_cmd);

  CLI::App* demo = app.add_subcommand("demo", "run a demo: pigeonhole or realiser");
  demo->add_option("name", demo_name, "pigeonhole|realiser")->required();
  demo->add_option("--m", demo_m, "pigeonhole domain size");
  demo->add_option("--n", demo_n, "pigeonhole codomain size");
  demo->add_option("--depth", demo_depth, "realiser tree depth")->check(CLI::PositiveNumber);
  demo->add_option("--alphabet", opt.alphabet, "realiser alphabet size")->check(CLI::PositiveNumber);
  add_format_opt(demo);

  CLI::App* expr = app.add_subcommand("expr", "canonicalize a Boolean expression");
  expr->add_option("text", expr_text, "expression, e.g. \"a & (b | !c)\"")->required();
  expr->add_option("--theory", theory_path, "report membership in F_T / I_T of this theory");
  add_format_opt(expr);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (check->parsed()) return run_check(suite, opt);
    if (solve->parsed()) return run_solve(path, opt.format);
    if (sat->parsed()) return run_sat(path, opt.format);
    if (classify_cmd->parsed()) return run_classify(path, opt);
    if (demo->parsed()) {
      if (demo_name == "pigeonhole") return run_demo_pigeonhole(demo_m, demo_n, opt.format);
      if (demo_name == "realiser") return run_demo_realiser(demo_depth, opt.alphabet, opt.format);
      throw UnknownNameError("unknown demo: " + demo_name);
    }
    if (expr->parsed()) return run_expr(expr_text, theory_path, opt.format);
  } catch (const FileParseError& e) {
    std::cerr << "parse error";
    if (e.line() >= 0) std::cerr << " at line " << e.line() << ", column " << e.column();
    std::cerr << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnknownNameError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
