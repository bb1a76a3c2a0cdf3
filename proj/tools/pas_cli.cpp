// Command-line harness: parameter sweeps over the placement schemes, dense
// per-step traces, and the verification suite.
//
//   pas run    --config sweep.json --out results.csv
//   pas trace  --config sweep.json --step 2 --out trace.csv
//   pas verify [--seed N]

#include <cstdio>
#include <fstream>
#include <string>

#include <CLI11.hpp>

#include "pas/config_json.hpp"
#include "pas/verify.hpp"

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw pas::config_error("", "cannot open output file '" + path + "'");
  out << content;
  if (!out) throw pas::config_error("", "failed writing output file '" + path + "'");
}

std::string resolve_output(const std::string& cli_out, const pas::SweepConfig& config) {
  if (!cli_out.empty()) return cli_out;
  if (!config.output_path.empty()) return config.output_path;
  throw pas::config_error("output_path", "no output path given (--out or output_path)");
}

int run_command(const std::string& config_path, const std::string& out_path) {
  const pas::SweepConfig config = pas::load_sweep_config(config_path);
  const std::string path = resolve_output(out_path, config);
  const pas::SweepTable table = pas::run_sweep(config);
  write_file(path, pas::to_csv(table));
  std::size_t failed_rows = 0;
  for (const auto& row : table.rows) {
    if (!row.ok) ++failed_rows;
  }
  std::printf("wrote %zu rows to %s", table.rows.size(), path.c_str());
  if (failed_rows > 0) std::printf(" (%zu rows failed)", failed_rows);
  std::printf("\n");
  return failed_rows == 0 ? 0 : 1;
}

int trace_command(const std::string& config_path, int step, const std::string& out_path) {
  const pas::SweepConfig config = pas::load_sweep_config(config_path);
  const std::string path = resolve_output(out_path, config);
  const pas::StepTrace trace =
      pas::trace_step(config.base, step, config.candidates_per_antenna);
  write_file(path, pas::to_csv(trace));
  std::printf("step %d places antenna %d %s of the center\n", trace.step,
              trace.pa_index, trace.rightward ? "right" : "left");
  std::printf("reference x = %.9g m, chosen x = %.9g m (span %.3g m%s)\n",
              trace.reference_x_m, trace.chosen_x_m, trace.selection.span_m,
              trace.clamped ? ", clamped to the reference" : "");
  std::printf("wrote %zu grid rows to %s\n", trace.x_m.size(), path.c_str());
  return 0;
}

int verify_command(std::uint64_t seed) {
  const auto results = pas::run_acceptance_checks(seed);
  int failures = 0;
  for (const auto& result : results) {
    std::printf("[%s] %d. %s — %s [%.2f s]\n", result.passed ? "PASS" : "FAIL",
                result.index, result.name.c_str(), result.detail.c_str(),
                result.seconds);
    if (!result.passed) ++failures;
  }
  std::printf("%d of %zu checks failed\n", failures, results.size());
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pinching-antenna placement experiments"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  int step = 2;
  std::uint64_t seed = 20260810ull;

  auto* run = app.add_subcommand("run", "run a sweep and write a CSV table");
  run->add_option("--config", config_path, "JSON sweep config")->required();
  run->add_option("--out", out_path, "output CSV path (overrides output_path)");

  auto* trace = app.add_subcommand("trace", "dense per-position trace of one step");
  trace->add_option("--config", config_path, "JSON config (scenario is used)")->required();
  trace->add_option("--step", step, "deployment step to trace (2..N)")->required();
  trace->add_option("--out", out_path, "output CSV path (overrides output_path)");

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--seed", seed, "seed for the randomized suites");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return run_command(config_path, out_path);
    if (trace->parsed()) return trace_command(config_path, step, out_path);
    return verify_command(seed);
  } catch (const pas::config_error& e) {
    if (e.field.empty()) {
      std::fprintf(stderr, "error: config: %s\n", e.what());
    } else {
      std::fprintf(stderr, "error: config: %s: %s\n", e.field.c_str(), e.what());
    }
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: runtime: %s\n", e.what());
    return 2;
  }
}
