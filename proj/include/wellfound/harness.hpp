#pragma once

#include <functional>

#include "wellfound/theory_io.hpp"

namespace wellfound {

struct RunConfig {
  int alphabet = 2;
  int depth = 3;
  Boundary boundary = Boundary::Open;
  SplitHeuristic split = SplitHeuristic::LowestIndex;
  unsigned seed = 0x5eedu;
};

struct Report {
  std::string check;
  std::string universe;
  bool pass = true;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string detail;  // first counterexample, or extra context
  double millis = 0;
};

using ReportSink = std::function<void(const Report&)>;

std::vector<std::string> suite_names();

// Runs one suite (or "all"), streaming one Report per theorem instance.
// Returns true when every report passed.  Throws UnknownNameError for an
// unknown suite name.
bool run_suite(const std::string& suite, const RunConfig& config, const ReportSink& sink);

bool run_foundedness_suite(const RunConfig& config, const ReportSink& sink);
bool run_klft_suite(const RunConfig& config, const ReportSink& sink);
bool run_dcbi_suite(const RunConfig& config, const ReportSink& sink);
bool run_ccac_suite(const RunConfig& config, const ReportSink& sink);
bool run_gdcgbi_suite(const RunConfig& config, const ReportSink& sink);
bool run_completeness_suite(const RunConfig& config, const ReportSink& sink);
bool run_bpf_suite(const RunConfig& config, const ReportSink& sink);

}  // namespace wellfound
