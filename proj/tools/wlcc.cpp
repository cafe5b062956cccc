// Command-line front end: run spec files, list example families, dump and
// replay configurations.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "wlcc/errors.hpp"
#include "wlcc/experiment.hpp"

namespace {

int write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << path << '\n';
    return wlcc::kExitSpecError;
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weisfeiler-Leman refinement of Schreier and Cayley configurations"};
  app.require_subcommand(1);

  std::string spec_path, out_path, csv_path, checks_arg;
  std::size_t max_iter = 0;
  bool no_snapshots = false, no_timestamp = false;
  auto* run = app.add_subcommand("run", "Run the instances of a spec file");
  run->add_option("--spec", spec_path, "Spec JSON file")->required();
  run->add_option("--out", out_path, "Report path (default stdout)");
  run->add_option("--csv", csv_path, "Also write a CSV summary here");
  run->add_option("--max-iter", max_iter, "Cap on refining steps");
  run->add_option("--checks", checks_arg, "Comma separated checks overriding the spec");
  run->add_flag("--no-snapshots", no_snapshots, "Omit per-iteration color matrices");
  run->add_flag("--no-timestamp", no_timestamp, "Omit the timestamp for reproducible output");

  auto* examples = app.add_subcommand("examples", "List the instance families");

  std::string dump_spec, dump_out;
  auto* dump = app.add_subcommand("dump", "Write the initial configuration of a spec");
  dump->add_option("--spec", dump_spec, "Spec JSON file")->required();
  dump->add_option("--out", dump_out, "Configuration JSON path")->required();

  std::string replay_path;
  std::size_t replay_iter = 0;
  auto* replay = app.add_subcommand("replay", "Refine a dumped configuration");
  replay->add_option("--config", replay_path, "Configuration JSON file")->required();
  replay->add_option("--max-iter", replay_iter, "Cap on refining steps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : wlcc::kExitSpecError;
  }

  if (*run) {
    wlcc::RunFlags flags;
    if (max_iter > 0) flags.max_iter = max_iter;
    flags.snapshots = !no_snapshots;
    flags.timestamp = !no_timestamp;
    if (!checks_arg.empty()) {
      std::vector<std::string> checks;
      std::stringstream ss(checks_arg);
      for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) checks.push_back(item);
      flags.checks = checks;
    }
    const wlcc::ExperimentOutcome outcome = wlcc::run_experiment_file(spec_path, flags);
    if (outcome.report.contains("error"))
      std::cerr << outcome.report.at("error").at("message").get<std::string>() << '\n';
    if (int rc = write_text(out_path, outcome.report.dump(2) + "\n")) return rc;
    if (!csv_path.empty())
      if (int rc = write_text(csv_path, wlcc::summary_csv(outcome.report))) return rc;
    return outcome.exit_code;
  }
  if (*examples) {
    std::cout << wlcc::list_examples().dump(2) << '\n';
    return 0;
  }
  try {
    if (*dump) {
      wlcc::dump_config(dump_spec, dump_out);
      return 0;
    }
    if (*replay) {
      std::optional<std::size_t> cap;
      if (replay_iter > 0) cap = replay_iter;
      std::cout << wlcc::replay_configuration(replay_path, cap).dump(2) << '\n';
      return 0;
    }
  } catch (const wlcc::Error& e) {
    std::cerr << e.what() << '\n';
    return wlcc::is_resource_cap(e.kind()) ? wlcc::kExitResourceCap : wlcc::kExitSpecError;
  }
  return 0;
}
