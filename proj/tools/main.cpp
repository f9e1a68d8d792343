#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <thread>

#include "germ/cli/report.hpp"

namespace fs = std::filesystem;

namespace {

int analyze_command(const std::string& path, germ::AnalyzeOptions opts, const std::string& format,
                    std::optional<std::uint64_t> seed) {
  germ::GermSpec spec = germ::load_germ_file(path);
  opts.numeric_config = germ::numeric_config(spec, opts.numeric_config);
  if (seed) opts.numeric_config.seed = *seed;
  opts.stratification = germ::stratification(spec, opts.seed);
  germ::VerdictReport report = germ::analyze(spec.germ(), opts);
  if (format == "json") {
    std::cout << germ::to_json(report).dump(2) << "\n";
  } else {
    std::cout << germ::render_text(report);
  }
  for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
  auto violations = germ::check_invariants(report);
  for (const auto& v : violations) std::cerr << "invariant violated: " << v << "\n";
  return violations.empty() ? 0 : 2;
}

int corpus_command(const std::string& dir, const std::string& only, const germ::AnalyzeOptions& base) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".germ") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<germ::GermSpec> specs;
  bool parse_failed = false;
  for (const auto& f : files) {
    try {
      germ::GermSpec s = germ::load_germ_file(f.string());
      if (only.empty() || s.name == only) specs.push_back(std::move(s));
    } catch (const germ::Error& e) {
      std::cerr << e.what() << "\n";
      parse_failed = true;
    }
  }
  if (!only.empty() && specs.empty() && !parse_failed) {
    std::cerr << "no fixture named " << only << "\n";
    return 1;
  }
  germ::AnalyzeOptions opts = base;
  opts.auto_numeric = true;
  std::vector<germ::FixtureResult> results(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      try {
        results[i] = germ::run_fixture(specs[i], opts);
      } catch (const germ::Error& e) {
        results[i].name = specs[i].name;
        results[i].passed = false;
        results[i].mismatches.push_back(std::string("error: ") + e.what());
      }
    }
  };
  const unsigned pool = std::max(1U, std::min<unsigned>(std::thread::hardware_concurrency(), 4));
  std::vector<std::thread> threads;
  for (unsigned t = 0; t < pool; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();

  int failed = parse_failed ? 1 : 0;
  std::printf("%-16s %-6s %8s  %s\n", "fixture", "result", "seconds", "verdicts");
  for (const auto& r : results) {
    std::string summary;
    if (r.report) {
      summary = "image=" + r.report->image_germ.value + " nmg=" + r.report->nmg.value +
                " tame=" + r.report->tame.value + " tube=" + r.report->fibration.tube.value;
    }
    std::printf("%-16s %-6s %8.2f  %s\n", r.name.c_str(), r.passed ? "pass" : "FAIL", r.seconds, summary.c_str());
    for (const auto& m : r.mismatches) std::printf("    %s\n", m.c_str());
    if (!r.passed) failed = 1;
  }
  return failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Image germs, tameness and Milnor fibrations of polynomial map germs"};
  app.require_subcommand(1);

  germ::AnalyzeOptions opts;
  std::size_t pair_budget = germ::default_pair_budget();

  auto* analyze = app.add_subcommand("analyze", "Analyze one germ file");
  std::string file;
  std::string format = "text";
  analyze->add_option("file", file, "Germ file")->required()->check(CLI::ExistingFile);
  analyze->add_flag("--numeric", opts.numeric, "Run every numeric stage");
  analyze->add_flag("--auto-numeric", opts.auto_numeric, "Run numeric stages where symbolic verdicts are indeterminate");
  std::optional<std::uint64_t> seed;
  analyze->add_option("--seed", seed, "Numeric seed (overrides the file)");
  analyze->add_option("--depth", opts.puiseux_depth, "Puiseux expansion depth")->check(CLI::PositiveNumber);
  analyze->add_option("--report", format, "Report format")->check(CLI::IsMember({"json", "text"}));
  analyze->add_option("--pair-budget", pair_budget, "S-pair budget per Groebner run")->check(CLI::PositiveNumber);

  auto* corpus = app.add_subcommand("corpus", "Run the fixture corpus");
  std::string only;
  std::string dir = GERM_CORPUS_DIR;
  corpus->add_option("--only", only, "Run a single fixture by name");
  corpus->add_option("--dir", dir, "Corpus directory")->check(CLI::ExistingDirectory);
  corpus->add_option("--pair-budget", pair_budget, "S-pair budget per Groebner run")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);
  germ::set_default_pair_budget(pair_budget);
  try {
    if (analyze->parsed()) return analyze_command(file, opts, format, seed);
    return corpus_command(dir, only, opts);
  } catch (const germ::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
