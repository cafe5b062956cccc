#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <sys/wait.h>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "test_util.hpp"
#include "wlcc/experiment.hpp"
#include "wlcc/wl.hpp"

namespace wlcc {
namespace {

using nlohmann::json;

RunFlags Quiet() {
  RunFlags flags;
  flags.timestamp = false;
  flags.snapshots = false;
  return flags;
}

std::filesystem::path TempFile(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("wlcc_test_" + name);
  std::ofstream(path) << text;
  return path;
}

TEST(RunExperimentTest, Heptagon) {
  const auto out = run_experiment(R"({"schema_version":1,"kind":"heptagon_pair",
                                      "checks":["upper","coherence"]})",
                                   Quiet());
  EXPECT_EQ(out.exit_code, kExitOk);
  const json& inst = out.report.at("instances").at(0);
  EXPECT_EQ(inst.at("diameter"), 4);
  EXPECT_EQ(inst.at("wl_count"), 3);
  EXPECT_EQ(inst.at("point_labels").at(4), "5");
  EXPECT_TRUE(inst.at("all_checks_hold").get<bool>());
  EXPECT_EQ(out.report.at("software").at("name"), "wlcc");
  EXPECT_EQ(out.report.at("spec_digest").get<std::string>().rfind("sha256:", 0), 0u);
  EXPECT_FALSE(out.report.contains("timestamp"));
  bool has_digest = false;
  for (const auto& c : inst.at("checks"))
    if (c.at("theorem") == "coherence") has_digest = c.contains("digest");
  EXPECT_TRUE(has_digest);
}

TEST(RunExperimentTest, SpecErrors) {
  for (const char* text :
       {R"({"schema_version":1,"kind":"unknown"})", R"({"kind":"cycle","n":5})",
        R"({"schema_version":2,"kind":"cycle","n":5})", R"({"schema_version":1,"kind":"cycle"})",
        R"({"schema_version":1,"kind":"cycle","n":5,"colour":1})",
        R"({"schema_version":1,"kind":"cycle","n":5,"checks":["nope"]})",
        R"({"schema_version":1,"kind":"sl_tuples","n":2,"q":6,"k":1})",
        R"({"schema_version":1,"kind":"explicit","points":3,"generators":{"s":[1,2,0]}})",
        "not json"}) {
    const auto out = run_experiment(text, Quiet());
    EXPECT_EQ(out.exit_code, kExitSpecError) << text;
    EXPECT_TRUE(out.report.contains("error")) << text;
  }
}

TEST(RunExperimentTest, ResourceCaps) {
  const auto vertices = run_experiment(
      R"({"schema_version":1,"kind":"sl_tuples","n":2,"q":7,"k":1,"caps":{"vertices":20}})",
      Quiet());
  EXPECT_EQ(vertices.exit_code, kExitResourceCap);
  const auto group = run_experiment(
      R"({"schema_version":1,"kind":"cycle","n":50,"caps":{"group":10}})", Quiet());
  EXPECT_EQ(group.exit_code, kExitResourceCap);
  RunFlags flags = Quiet();
  flags.max_iter = 1;
  EXPECT_EQ(run_experiment(R"({"schema_version":1,"kind":"heptagon_pair"})", flags).exit_code,
            kExitResourceCap);
}

TEST(RunExperimentTest, FailedCheckExitsOne) {
  // A fixed-point-free permutation that is not an automorphism.
  const auto out = run_experiment(R"({"schema_version":1,"kind":"cycle","n":6,
      "witnesses":{"bad":[1,0,3,2,5,4]},"checks":["automorphism"]})",
                                  Quiet());
  EXPECT_EQ(out.exit_code, kExitCheckFailed);
  EXPECT_FALSE(out.report.at("all_checks_hold").get<bool>());
}

TEST(RunExperimentTest, InapplicableChecksDoNotFail) {
  const auto out = run_experiment(R"({"schema_version":1,"kind":"sl_tuples","n":2,"q":2,"k":1,
      "checks":["lower_sl","cayley_exact","bartholdi","lower_general"]})",
                                  Quiet());
  EXPECT_EQ(out.exit_code, kExitOk);
  for (const auto& c : out.report.at("instances").at(0).at("checks"))
    if (c.at("theorem") != "lower_general") EXPECT_FALSE(c.at("applicable").get<bool>());
  const auto sym = run_experiment(
      R"({"schema_version":1,"kind":"sym_adjacent","n":6,"checks":["lower_general"]})", Quiet());
  const json& check = sym.report.at("instances").at(0).at("checks").at(0);
  EXPECT_EQ(check.at("note"), "no witness available");
}

TEST(RunExperimentTest, ChecksOverride) {
  RunFlags flags = Quiet();
  flags.checks = std::vector<std::string>{"cayley_exact"};
  const auto out = run_experiment(R"({"schema_version":1,"kind":"cycle","n":8})", flags);
  ASSERT_EQ(out.exit_code, kExitOk);
  const json& checks = out.report.at("instances").at(0).at("checks");
  ASSERT_EQ(checks.size(), 1u);
  EXPECT_EQ(checks.at(0).at("theorem"), "cayley_exact");
  flags.checks = std::vector<std::string>{"bogus"};
  EXPECT_EQ(run_experiment(R"({"schema_version":1,"kind":"cycle","n":8})", flags).exit_code,
            kExitSpecError);
}

TEST(RunExperimentTest, Deterministic) {
  RunFlags flags;
  flags.timestamp = false;
  const auto a = run_experiment_file(WLCC_CORPUS_PATH, flags);
  const auto b = run_experiment_file(WLCC_CORPUS_PATH, flags);
  EXPECT_EQ(a.exit_code, kExitOk);
  EXPECT_EQ(a.report.dump(), b.report.dump());
  RunFlags stamped;
  const auto c = run_experiment(R"({"schema_version":1,"kind":"cycle","n":4})", stamped);
  EXPECT_TRUE(c.report.contains("timestamp"));
  EXPECT_TRUE(c.report.at("instances").at(0).contains("snapshots"));
}

TEST(RunExperimentTest, Csv) {
  const auto out = run_experiment(
      R"({"schema_version":1,"instances":[{"kind":"cycle","n":5},{"kind":"heptagon_pair"}]})",
      Quiet());
  const std::string csv = summary_csv(out.report);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
  EXPECT_NE(csv.find("heptagon_pair,heptagon_pair,schreier,14,4,4,false,3,"), std::string::npos);
}

TEST(CatalogTest, ListsBuilders) {
  std::set<std::string> kinds;
  for (const auto& e : list_examples()) kinds.insert(e.at("kind").get<std::string>());
  EXPECT_TRUE(kinds.count("heptagon_pair"));
  EXPECT_EQ(kinds.size(), 6u);
}

TEST(DumpTest, CycleFive) {
  const auto spec = TempFile("c5.json", R"({"schema_version":1,"kind":"cycle","n":5})");
  const auto out = std::filesystem::temp_directory_path() / "wlcc_test_c5_config.json";
  dump_config(spec, out);
  const json doc = oracle::load_json(out);
  std::set<std::string> origins;
  for (const auto& c : doc.at("color_table")) origins.insert(c.at("origin").get<std::string>());
  EXPECT_EQ(origins, (std::set<std::string>{"{e}", "{+1}", "{-1}", "∅"}));
  EXPECT_EQ(replay_configuration(out, std::nullopt).at("wl_count"), 1);
}

TEST(DumpTest, CorpusRoundTrip) {
  for (const InstanceSpec& inst : oracle::corpus()) {
    const Configuration c = build_configuration(inst);
    const Configuration back = configuration_from_json(json::parse(configuration_to_json(c).dump()));
    EXPECT_EQ(back.colors(), c.colors()) << inst.name;
    EXPECT_EQ(wl_run(back).wl_count, wl_run(c).wl_count) << inst.name;
  }
}

TEST(DumpTest, MalformedConfiguration) {
  EXPECT_WLCC_ERROR(configuration_from_json(json::parse(R"({"schema_version":1,"m":2})")),
                    ErrorKind::SpecParseError);
  // Inverse pairing broken.
  EXPECT_WLCC_ERROR(configuration_from_json(json::parse(R"({"schema_version":1,"m":2,
      "colors":[[0,1],[1,0]],"color_table":[
      {"id":0,"is_vertex":true,"inverse":0,"empty_lineage":false,"origin":"e"},
      {"id":1,"is_vertex":false,"inverse":0,"empty_lineage":false,"origin":"s"}]})")),
                    ErrorKind::InvalidConfiguration);
}

TEST(DigestTest, Sha256) {
  EXPECT_EQ(sha256_hex("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

int RunCli(const std::string& args) {
  const int status = std::system((std::string(WLCC_CLI_PATH) + " " + args + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(CliTest, ExitCodes) {
  const auto good = TempFile("good.json", R"({"schema_version":1,"kind":"cycle","n":9,
      "checks":["upper","cayley_exact"]})");
  const auto bad = TempFile("bad.json", R"({"schema_version":1,"kind":"unknown"})");
  const auto capped = TempFile("cap.json", R"({"schema_version":1,"kind":"cycle","n":99,
      "caps":{"group":5}})");
  const auto out = std::filesystem::temp_directory_path() / "wlcc_test_report.json";
  EXPECT_EQ(RunCli("run --spec " + good.string() + " --no-timestamp --out " + out.string()), 0);
  EXPECT_EQ(oracle::load_json(out).at("instances").at(0).at("wl_count"), 2);
  EXPECT_EQ(RunCli("run --spec " + bad.string()), 2);
  EXPECT_EQ(RunCli("run --spec " + capped.string()), 3);
  EXPECT_EQ(RunCli("run --spec /nonexistent.json"), 2);
  EXPECT_EQ(RunCli("run --spec " + good.string() + " --checks upper,bogus"), 2);
  EXPECT_EQ(RunCli("examples"), 0);
  EXPECT_EQ(RunCli("frobnicate"), 2);
}

TEST(CliTest, ReportsAreByteIdentical) {
  const auto a = std::filesystem::temp_directory_path() / "wlcc_test_a.json";
  const auto b = std::filesystem::temp_directory_path() / "wlcc_test_b.json";
  const std::string spec = WLCC_CORPUS_PATH;
  ASSERT_EQ(RunCli("run --spec " + spec + " --no-timestamp --out " + a.string()), 0);
  ASSERT_EQ(RunCli("run --spec " + spec + " --no-timestamp --out " + b.string()), 0);
  std::ifstream fa(a), fb(b);
  const std::string ta((std::istreambuf_iterator<char>(fa)), {});
  const std::string tb((std::istreambuf_iterator<char>(fb)), {});
  EXPECT_FALSE(ta.empty());
  EXPECT_EQ(ta, tb);
}

}  // namespace
}  // namespace wlcc
