#pragma once

// Spec-file driven experiments: build an instance, refine it, analyze it and
// check the iteration-count theorems, producing a JSON report.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wlcc/configuration.hpp"
#include "wlcc/schreier.hpp"
#include "wlcc/theorems.hpp"

namespace wlcc {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kSoftwareName = "wlcc";
inline constexpr const char* kSoftwareVersion = "0.1.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitSpecError = 2,
  kExitResourceCap = 3,
};

struct Caps {
  std::size_t vertices = 5000;
  std::size_t group = 5000;
  std::optional<std::size_t> iterations;
};

struct InstanceSpec {
  std::string name;
  std::string kind;
  // "schreier" or "cayley".
  std::string construction;
  nlohmann::json parameters;
  std::vector<std::string> checks;
  Caps caps;
};

struct RunFlags {
  std::optional<std::size_t> max_iter;
  bool snapshots = true;
  bool timestamp = true;
  std::optional<std::vector<std::string>> checks;
};

struct ExperimentOutcome {
  nlohmann::json report;
  int exit_code = kExitOk;
};

// Parses a spec document holding either one instance or an "instances" list.
// Throws Error(SpecParseError) on schema violations.
std::vector<InstanceSpec> parse_spec(const nlohmann::json& document);

// Never throws for spec, check or resource problems: those are reflected in
// the exit code and an "error" member of the report.
ExperimentOutcome run_experiment(const std::string& spec_text, const RunFlags& flags);
ExperimentOutcome run_experiment_file(const std::string& path, const RunFlags& flags);

// One CSV row per instance of a report.
std::string summary_csv(const nlohmann::json& report);

nlohmann::json list_examples();

struct BuiltInstance {
  ActionSpec action;
  Configuration config;
  // Present for Cayley constructions; vertex i is group element i.
  std::optional<GroupClosure> group;
  std::optional<SlAction> sl;
  // Scalars for SL actions, right multiplications for Cayley constructions,
  // plus any user-supplied permutations.
  std::vector<AutomorphismWitness> witnesses;
  bool cayley = false;
};

BuiltInstance build_instance(const InstanceSpec& instance);

// Iteration-0 configuration of an instance.
Configuration build_configuration(const InstanceSpec& instance);

nlohmann::json configuration_to_json(const Configuration& config);
Configuration configuration_from_json(const nlohmann::json& document);

// Writes the iteration-0 configuration of the spec's first instance.
void dump_config(const std::string& spec_path, const std::string& out_path);

// Loads a dumped configuration and refines it to coherence.
nlohmann::json replay_configuration(const std::string& config_path,
                                    std::optional<std::size_t> max_iter);

std::string sha256_hex(const std::string& bytes);

}  // namespace wlcc
