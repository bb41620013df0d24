// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Universe sizes, sample counts, and time budgets are pinned here.

#include <chrono>
#include <iostream>
#include <map>
#include <vector>

#include "wellfound/harness.hpp"

using namespace wellfound;

namespace {

struct Criterion {
  int id;
  std::string name;
  bool pass = true;
  std::size_t instances = 0;
  double seconds = 0;
  std::string detail;
};

class Runner {
 public:
  Runner() {
    config_.alphabet = 2;
    config_.depth = 3;
    config_.boundary = Boundary::Open;
  }

  void collect() {
    ReportSink sink = [this](const Report& rep) { reports_[rep.check].push_back(rep); };
    run_suite("all", config_, sink);
  }

  Criterion from_reports(int id, const std::string& name, std::vector<std::string> checks,
                         double budget_seconds) {
    Criterion c{id, name};
    for (const std::string& check : checks) {
      auto it = reports_.find(check);
      if (it == reports_.end()) {
        c.pass = false;
        c.detail = "missing check: " + check;
        continue;
      }
      for (const Report& rep : it->second) {
        c.instances += rep.instances;
        c.seconds += rep.millis / 1000.0;
        if (!rep.pass) {
          c.pass = false;
          if (c.detail.empty()) c.detail = check + ": " + rep.detail;
        }
      }
    }
    if (budget_seconds > 0 && c.seconds > budget_seconds) {
      c.pass = false;
      c.detail = "time budget exceeded (" + std::to_string(c.seconds) + " s > " +
                 std::to_string(budget_seconds) + " s)";
    }
    return c;
  }

 private:
  RunConfig config_;
  std::map<std::string, std::vector<Report>> reports_;
};

Criterion pigeonhole_criterion() {
  Criterion c{9, "pigeonhole demo: stage n, no choice function, < 1 s each"};
  for (auto [m, n] : {std::pair{2, 1}, std::pair{3, 2}, std::pair{4, 3}}) {
    auto start = std::chrono::steady_clock::now();
    PigeonholeReport rep = pigeonhole_demo(m, n);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ++c.instances;
    c.seconds += secs;
    if (rep.max_stage != n || rep.has_choice_function || rep.approximable || secs >= 1.0) {
      c.pass = false;
      c.detail = "(m,n)=(" + std::to_string(m) + "," + std::to_string(n) + ")";
    }
  }
  return c;
}

}  // namespace

int main() {
  Runner runner;
  runner.collect();

  std::vector<Criterion> criteria;
  criteria.push_back(runner.from_reports(
      1,
      "foundedness equivalences over all predicates on U(B=2,d=3): tree-unbounded, "
      "productive-pruning-spread, spread-productive, productive-unbounded, converse; < 60 s",
      {"prop-tree-unbounded", "prop-productive-pruning-spread", "prop-spread-productive",
       "prop-productive-unbounded", "thm-converse", "duality-tree-monotone", "closure-laws"},
      60.0));
  criteria.push_back(runner.from_reports(
      2, "spread-prod and kl-ft-variants verdict agreement over U(B=2,d=3)",
      {"thm-spread-prod", "prop-kl-ft-variants"}, 0));
  criteria.push_back(runner.from_reports(
      3, "thm-dc / thm-cc / thm-ac transports, |B| <= 3 (|A| <= 3 for AC); < 60 s",
      {"thm-dc-serial", "thm-dc-reverse", "thm-cc", "thm-ac"}, 60.0));
  criteria.push_back(runner.from_reports(
      4, "thm-dc-bi encodings: ord/ordered/lift round trips and transport lemmas",
      {"thm-dc-bi-encodings", "approx-ordered-transport"}, 0));
  criteria.push_back(runner.from_reports(
      5, "GDC/GBI hold on every instance with |A| <= 2, |B| <= 2",
      {"gdc-gbi-finite-instances"}, 0));
  criteria.push_back(runner.from_reports(
      6, "completeness coincidences: exhaustive |A| <= 2 plus 10^4 samples at |A| in {3,4}",
      {"thm-compl-exhaustive", "thm-compl-sampled"}, 0));
  criteria.push_back(runner.from_reports(
      7, "splitting prover vs model enumeration, 10^5 samples, witnesses re-check",
      {"prover-vs-enumeration"}, 0));
  criteria.push_back(runner.from_reports(
      8, "BPF instance suite: proper <-> model <-> prime extension; T_{F_T} round trip",
      {"thm-bpf-exhaustive", "thm-bpf-sampled"}, 0));
  criteria.push_back(pigeonhole_criterion());
  criteria.push_back(runner.from_reports(
      10, "weakening admissibility and ~-invariance property tests, 10^4 cases each",
      {"weakening-admissible", "approx-equivalence-invariance"}, 0));

  bool all_pass = true;
  for (const Criterion& c : criteria) {
    all_pass = all_pass && c.pass;
    std::cout << (c.pass ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.name << " ("
              << c.instances << " instances, " << c.seconds << " s)";
    if (!c.detail.empty()) std::cout << "  -- " << c.detail;
    std::cout << "\n";
  }
  std::cout << (all_pass ? "acceptance: all criteria passed\n"
                         : "acceptance: at least one criterion FAILED\n");
  return all_pass ? 0 : 1;
}
