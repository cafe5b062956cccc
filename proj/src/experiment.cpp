#include "wlcc/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include <openssl/evp.h>

#include "wlcc/analysis.hpp"
#include "wlcc/errors.hpp"
#include "wlcc/schreier.hpp"
#include "wlcc/theorems.hpp"
#include "wlcc/wl.hpp"

namespace wlcc {

using nlohmann::json;

namespace {

const std::set<std::string> kKinds{"explicit",      "cycle",      "sym_adjacent",
                                   "heptagon_pair", "sl_tuples",  "cayley_of"};
const std::set<std::string> kChecks{"upper",  "lower_sl",  "lower_general", "cayley_exact",
                                    "coherence", "bartholdi", "automorphism", "far_pairs"};
const std::set<std::string> kInstanceKeys{"kind",  "name",      "n",         "q",
                                          "k",     "steps",     "modulus",   "points",
                                          "degree", "generators", "construction", "checks",
                                          "caps",  "witnesses", "generator_set"};

[[noreturn]] void parse_error(const std::string& message) {
  throw Error(ErrorKind::SpecParseError, message);
}

int require_int(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) parse_error(where + ": missing integer '" + key + "'");
  const json& v = obj.at(key);
  if (!v.is_number_integer()) parse_error(where + ": '" + key + "' must be an integer");
  return v.get<int>();
}

std::vector<std::uint32_t> parse_images(const json& v, const std::string& where) {
  if (!v.is_array()) parse_error(where + ": permutation must be an array of images");
  std::vector<std::uint32_t> images;
  for (const auto& x : v) {
    if (!x.is_number_unsigned() && !(x.is_number_integer() && x.get<long long>() >= 0))
      parse_error(where + ": images must be nonnegative integers");
    images.push_back(x.get<std::uint32_t>());
  }
  return images;
}

std::map<std::string, std::vector<std::uint32_t>> parse_generators(const json& obj,
                                                                   const std::string& where) {
  if (!obj.contains("generators") || !obj.at("generators").is_object())
    parse_error(where + ": 'generators' must be an object of label -> images");
  std::map<std::string, std::vector<std::uint32_t>> gens;
  for (const auto& [label, images] : obj.at("generators").items())
    gens[label] = parse_images(images, where + ".generators." + label);
  return gens;
}

InstanceSpec parse_instance(const json& obj, std::size_t index) {
  const std::string where = "instance " + std::to_string(index);
  if (!obj.is_object()) parse_error(where + ": must be an object");
  for (const auto& [key, value] : obj.items())
    if (!kInstanceKeys.count(key)) parse_error(where + ": unknown key '" + key + "'");
  if (!obj.contains("kind") || !obj.at("kind").is_string())
    parse_error(where + ": missing string 'kind'");
  InstanceSpec spec;
  spec.kind = obj.at("kind").get<std::string>();
  if (!kKinds.count(spec.kind)) parse_error(where + ": unknown kind '" + spec.kind + "'");

  spec.parameters = json::object();
  for (const auto& [key, value] : obj.items())
    if (key != "kind" && key != "name" && key != "checks" && key != "caps" &&
        key != "construction")
      spec.parameters[key] = value;

  // Parameter shape validation, before any computation.
  if (spec.kind == "cycle" || spec.kind == "sym_adjacent") {
    const int n = require_int(obj, "n", where);
    if (n < 3) parse_error(where + ": n must be >= 3");
    if (obj.contains("steps")) {
      if (!obj.at("steps").is_array()) parse_error(where + ": 'steps' must be an array");
      for (const auto& s : obj.at("steps"))
        if (!s.is_number_integer()) parse_error(where + ": steps must be integers");
    }
  } else if (spec.kind == "sl_tuples") {
    const int n = require_int(obj, "n", where);
    const int q = require_int(obj, "q", where);
    const int k = require_int(obj, "k", where);
    if (n < 1 || k < 1 || k > n) parse_error(where + ": need 1 <= k <= n");
    if (q < 2) parse_error(where + ": q must be >= 2");
    if (obj.contains("modulus") && !obj.at("modulus").is_array())
      parse_error(where + ": 'modulus' must be a coefficient array");
    if (obj.contains("generator_set") && obj.at("generator_set") != "transvections")
      parse_error(where + ": only the 'transvections' generator set is supported");
  } else if (spec.kind == "explicit") {
    const int points = require_int(obj, "points", where);
    if (points < 1) parse_error(where + ": points must be positive");
    parse_generators(obj, where);
  } else if (spec.kind == "cayley_of") {
    const int degree = require_int(obj, "degree", where);
    if (degree < 1) parse_error(where + ": degree must be positive");
    parse_generators(obj, where);
  }
  if (obj.contains("witnesses")) {
    if (!obj.at("witnesses").is_object())
      parse_error(where + ": 'witnesses' must be an object of label -> images");
    for (const auto& [label, images] : obj.at("witnesses").items())
      parse_images(images, where + ".witnesses." + label);
  }

  const bool cayley_default = spec.kind == "cycle" || spec.kind == "cayley_of";
  spec.construction = cayley_default ? "cayley" : "schreier";
  if (obj.contains("construction")) {
    if (!obj.at("construction").is_string()) parse_error(where + ": 'construction' must be a string");
    spec.construction = obj.at("construction").get<std::string>();
    if (spec.construction != "cayley" && spec.construction != "schreier")
      parse_error(where + ": construction must be 'cayley' or 'schreier'");
  }
  if (spec.kind == "cayley_of" && spec.construction != "cayley")
    parse_error(where + ": cayley_of only supports the cayley construction");

  spec.checks = {"upper", "coherence"};
  if (obj.contains("checks")) {
    if (!obj.at("checks").is_array()) parse_error(where + ": 'checks' must be an array");
    spec.checks.clear();
    for (const auto& c : obj.at("checks")) {
      if (!c.is_string() || !kChecks.count(c.get<std::string>()))
        parse_error(where + ": unknown check " + c.dump());
      spec.checks.push_back(c.get<std::string>());
    }
  }
  if (obj.contains("caps")) {
    const json& caps = obj.at("caps");
    if (!caps.is_object()) parse_error(where + ": 'caps' must be an object");
    for (const auto& [key, value] : caps.items()) {
      if (!value.is_number_unsigned()) parse_error(where + ": caps must be nonnegative integers");
      if (key == "vertices") spec.caps.vertices = value.get<std::size_t>();
      else if (key == "group") spec.caps.group = value.get<std::size_t>();
      else if (key == "iterations") spec.caps.iterations = value.get<std::size_t>();
      else parse_error(where + ": unknown cap '" + key + "'");
    }
  }
  if (obj.contains("name")) {
    if (!obj.at("name").is_string()) parse_error(where + ": 'name' must be a string");
    spec.name = obj.at("name").get<std::string>();
  } else {
    spec.name = spec.kind;
    for (const char* key : {"n", "q", "k"})
      if (obj.contains(key)) spec.name += "_" + std::string(key) + obj.at(key).dump();
  }
  return spec;
}

std::map<std::size_t, std::vector<std::string>> generator_connection(const GroupClosure& g) {
  std::map<std::size_t, std::vector<std::string>> connection;
  for (std::size_t i = 0; i < g.generator_labels().size(); ++i)
    connection[g.generator_elements()[i]].push_back(g.generator_labels()[i]);
  return connection;
}

}  // namespace

BuiltInstance build_instance(const InstanceSpec& spec) {
  const json& p = spec.parameters;
  BuiltInstance built;
  if (spec.kind == "cycle") {
    std::optional<std::vector<int>> steps;
    if (p.contains("steps")) steps = p.at("steps").get<std::vector<int>>();
    built.action = cycle_cayley(p.at("n").get<int>(), steps);
  } else if (spec.kind == "sym_adjacent") {
    built.action = sym_adjacent(p.at("n").get<int>());
  } else if (spec.kind == "heptagon_pair") {
    built.action = heptagon_pair();
  } else if (spec.kind == "sl_tuples") {
    std::optional<std::vector<int>> modulus;
    if (p.contains("modulus")) modulus = p.at("modulus").get<std::vector<int>>();
    built.sl = sl_tuples(p.at("n").get<int>(), p.at("q").get<int>(), p.at("k").get<int>(),
                         SlGenerators::Transvections, modulus, spec.caps.vertices);
    built.action = built.sl->action;
  } else if (spec.kind == "explicit") {
    built.action = genset_validate(make_action(p.at("points").get<std::size_t>(),
                                               parse_generators(p, spec.name), "explicit"));
  } else if (spec.kind == "cayley_of") {
    built.action = genset_validate(make_action(p.at("degree").get<std::size_t>(),
                                               parse_generators(p, spec.name), "cayley_of"));
  }

  built.cayley = spec.construction == "cayley";
  if (built.cayley) {
    built.group = GroupClosure::generate(built.action, spec.caps.group);
    built.config = cayley_config(*built.group, generator_connection(*built.group));
  } else {
    if (built.action.points > spec.caps.vertices)
      throw Error(ErrorKind::SizeCap, "action exceeds the vertex cap");
    built.config = schreier_config(built.action);
  }
  if (built.config.size() > spec.caps.vertices)
    throw Error(ErrorKind::SizeCap, "configuration exceeds the vertex cap");

  if (built.sl) {
    built.witnesses = scalar_witnesses(*built.sl);
  } else if (built.group) {
    const GroupClosure& g = *built.group;
    if (g.size() <= 200) {
      for (std::size_t h = 0; h < g.size(); ++h)
        if (h != g.identity()) built.witnesses.push_back(right_multiplication(g, h));
    } else {
      std::set<std::size_t> seen;
      for (std::size_t h : g.generator_elements())
        if (h != g.identity() && seen.insert(h).second)
          built.witnesses.push_back(right_multiplication(g, h));
    }
  }
  if (p.contains("witnesses"))
    for (const auto& [label, images] : p.at("witnesses").items())
      built.witnesses.push_back(
          make_witness(Permutation(parse_images(images, label)), "user " + label));
  return built;
}

namespace {

json bound_json(const BoundReport& r) {
  json j{{"theorem", r.theorem}, {"lhs", r.lhs},           {"rhs", r.rhs},
         {"holds", r.holds},     {"wl_count", r.wl_count}, {"diameter", r.diameter},
         {"applicable", true}};
  if (r.p) j["p"] = *r.p;
  if (r.witness_order) j["witness_order"] = *r.witness_order;
  if (r.antipode_unique) j["antipode_unique"] = *r.antipode_unique;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

json inapplicable(const std::string& theorem, const std::string& note) {
  return json{{"theorem", theorem}, {"applicable", false}, {"holds", true}, {"note", note}};
}

std::string certificate_digest(const CoherenceCertificate& cert) {
  std::ostringstream text;
  for (const auto& [key, value] : cert.gamma)
    text << key[0] << ' ' << key[1] << ' ' << key[2] << ' ' << value << '\n';
  return "sha256:" + sha256_hex(text.str());
}

std::string timestamp_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json run_instance(const InstanceSpec& spec, const RunFlags& flags, bool& all_hold) {
  BuiltInstance built = build_instance(spec);
  const Configuration& initial = built.config;

  WLOptions options;
  options.max_iter = flags.max_iter ? flags.max_iter : spec.caps.iterations;
  const std::vector<std::string>& requested = flags.checks ? *flags.checks : spec.checks;
  const bool needs_history =
      std::any_of(requested.begin(), requested.end(), [](const std::string& c) {
        return c == "bartholdi" || c == "far_pairs" || c == "automorphism" ||
               c == "lower_general";
      });
  options.keep_snapshots = flags.snapshots || needs_history;
  const WLTrace trace = wl_run(initial, options);

  const DistanceTable generator_distances = all_pairs_distances(generator_graph(initial));
  const AntipodeReport antipode = antipodes(generator_distances);
  const int diam = antipode.diameter;
  const int diam_gamma = diameter(gamma_graph(initial));

  json out;
  out["name"] = spec.name;
  out["kind"] = spec.kind;
  out["construction"] = spec.construction;
  out["parameters"] = spec.parameters;
  out["origin"] = built.action.origin;
  out["notes"] = built.action.notes;
  out["vertex_count"] = initial.size();
  out["action_points"] = built.action.points;
  json labels = json::array();
  for (const auto& g : built.action.generators) labels.push_back(g.label);
  out["generators"] = labels;
  if (!built.action.point_labels.empty() && !built.cayley)
    out["point_labels"] = built.action.point_labels;
  out["diameter"] = diam;
  out["gamma_diameter"] = diam_gamma;
  out["antipode_unique"] = antipode.unique;
  out["wl_count"] = trace.wl_count;
  out["class_counts"] = trace.class_counts;
  out["initial_colors"] = initial.color_count();
  json nonempty = json::array();
  for (Color c : nonempty_colors(initial)) nonempty.push_back(initial.info(c).origin);
  out["nonempty_colors"] = nonempty;

  json reports = json::array();
  bool instance_holds = true;
  auto record = [&](json r) {
    if (!r.at("holds").get<bool>()) instance_holds = false;
    reports.push_back(std::move(r));
  };

  for (const std::string& check : requested) {
    if (check == "coherence") {
      const CoherenceResult coherence = check_coherent(trace.final());
      json j{{"theorem", "coherence"}, {"applicable", true}, {"holds", coherence.coherent()}};
      if (coherence.coherent()) {
        j["gamma_entries"] = coherence.certificate->gamma.size();
        j["digest"] = certificate_digest(*coherence.certificate);
      } else {
        const auto& v = *coherence.violation;
        j["violation"] = {{"c0", v.c0},         {"c1", v.c1},         {"c2", v.c2},
                          {"pair_a", v.pair_a}, {"pair_b", v.pair_b}, {"count_a", v.count_a},
                          {"count_b", v.count_b}};
      }
      record(j);
    } else if (check == "upper") {
      record(bound_json(verify_upper(trace.wl_count, diam)));
      BoundReport gamma = verify_upper(trace.wl_count, diam_gamma);
      gamma.theorem = "upper_gamma";
      record(bound_json(gamma));
    } else if (check == "lower_sl") {
      if (!built.sl) {
        record(inapplicable("lower_sl", "instance is not an SL tuple action"));
      } else if (spec.parameters.at("q").get<int>() <= 2) {
        record(inapplicable("lower_sl", "q=2: lower bound theorem inapplicable"));
      } else {
        record(bound_json(verify_lower_sl(trace.wl_count, diam, spec.parameters.at("q").get<int>())));
      }
    } else if (check == "lower_general") {
      if (built.witnesses.empty()) {
        record(inapplicable("lower_general", "no witness available"));
      } else {
        record(bound_json(verify_lower_general(trace.wl_count, diam_gamma, built.witnesses, trace)));
      }
    } else if (check == "cayley_exact") {
      if (!built.cayley) {
        record(inapplicable("cayley_exact", "not a Cayley configuration"));
      } else {
        record(bound_json(cayley_exact(trace.wl_count, diam, antipode.unique)));
      }
    } else if (check == "bartholdi") {
      if (!built.cayley || !trace.complete) {
        record(inapplicable("bartholdi", "not a Cayley configuration"));
      } else {
        json per_k = json::array();
        bool ok = true;
        for (std::size_t k = 0; k <= static_cast<std::size_t>(trace.wl_count); ++k) {
          const BartholdiResult b = bartholdi_check(*built.group, trace, k);
          ok = ok && b.pass;
          json e{{"k", k}, {"pass", b.pass}, {"connection_size", b.connection_size}};
          if (b.witness) e["witness"] = *b.witness;
          per_k.push_back(e);
        }
        record(json{{"theorem", "bartholdi"}, {"applicable", true}, {"holds", ok}, {"per_k", per_k}});
      }
    } else if (check == "automorphism") {
      if (built.witnesses.empty()) {
        record(inapplicable("automorphism", "no witness available"));
      } else {
        bool ok = true;
        json failures = json::array();
        for (const auto& w : built.witnesses) {
          const AutomorphismCheck a = verify_automorphism(trace, w.phi);
          if (!a.pass) {
            ok = false;
            failures.push_back({{"witness", w.provenance}, {"iteration", a.iteration},
                                {"pair", {a.v1, a.v2}}});
          }
        }
        record(json{{"theorem", "automorphism"}, {"applicable", true}, {"holds", ok},
                    {"witnesses", built.witnesses.size()}, {"failures", failures}});
      }
    } else if (check == "far_pairs") {
      if (!built.cayley || !trace.complete) {
        record(inapplicable("far_pairs", "not a Cayley configuration"));
      } else {
        const auto bad = far_pairs_uniform(trace, generator_distances);
        json j{{"theorem", "far_pairs"}, {"applicable", true}, {"holds", !bad}};
        if (bad) j["failing_iteration"] = *bad;
        record(j);
      }
    }
  }
  out["checks"] = reports;
  out["all_checks_hold"] = instance_holds;
  if (!instance_holds) all_hold = false;

  if (flags.snapshots) {
    json snaps = json::array();
    for (const auto& s : trace.snapshots) snaps.push_back(configuration_to_json(s));
    out["snapshots"] = snaps;
  }
  return out;
}

}  // namespace

std::vector<InstanceSpec> parse_spec(const json& document) {
  if (!document.is_object()) parse_error("spec must be a JSON object");
  if (!document.contains("schema_version") || !document.at("schema_version").is_number_integer())
    parse_error("missing integer 'schema_version'");
  if (document.at("schema_version").get<int>() != kSchemaVersion)
    parse_error("unsupported schema_version " + document.at("schema_version").dump());
  std::vector<InstanceSpec> out;
  if (document.contains("instances")) {
    for (const auto& [key, value] : document.items())
      if (key != "schema_version" && key != "instances")
        parse_error("unknown top-level key '" + key + "'");
    const json& list = document.at("instances");
    if (!list.is_array() || list.empty()) parse_error("'instances' must be a nonempty array");
    for (std::size_t i = 0; i < list.size(); ++i) out.push_back(parse_instance(list[i], i));
  } else {
    json instance = document;
    instance.erase("schema_version");
    out.push_back(parse_instance(instance, 0));
  }
  return out;
}

ExperimentOutcome run_experiment(const std::string& spec_text, const RunFlags& flags) {
  ExperimentOutcome outcome;
  json& report = outcome.report;
  report["schema_version"] = kSchemaVersion;
  report["software"] = {{"name", kSoftwareName}, {"version", kSoftwareVersion}};
  report["spec_digest"] = "sha256:" + sha256_hex(spec_text);
  if (flags.timestamp) report["timestamp"] = timestamp_now();
  try {
    if (flags.checks)
      for (const auto& c : *flags.checks)
        if (!kChecks.count(c)) parse_error("unknown check '" + c + "'");
    json document;
    try {
      document = json::parse(spec_text);
    } catch (const json::exception& e) {
      parse_error(std::string("invalid JSON: ") + e.what());
    }
    const std::vector<InstanceSpec> instances = parse_spec(document);
    bool all_hold = true;
    json results = json::array();
    for (const auto& instance : instances) {
      try {
        results.push_back(run_instance(instance, flags, all_hold));
      } catch (const Error& e) {
        if (is_resource_cap(e.kind())) throw;
        if (e.kind() == ErrorKind::SpecParseError) throw;
        // Builder preconditions and parameter errors are spec errors.
        throw Error(ErrorKind::SpecParseError, instance.name + ": " + e.what());
      }
    }
    report["instances"] = results;
    report["all_checks_hold"] = all_hold;
    outcome.exit_code = all_hold ? kExitOk : kExitCheckFailed;
  } catch (const Error& e) {
    report["error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
    outcome.exit_code = is_resource_cap(e.kind()) ? kExitResourceCap : kExitSpecError;
  }
  return outcome;
}

ExperimentOutcome run_experiment_file(const std::string& path, const RunFlags& flags) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    ExperimentOutcome outcome;
    outcome.report = {{"schema_version", kSchemaVersion},
                      {"error", {{"kind", "SpecParseError"}, {"message", "cannot read " + path}}}};
    outcome.exit_code = kExitSpecError;
    return outcome;
  }
  std::ostringstream text;
  text << in.rdbuf();
  return run_experiment(text.str(), flags);
}

std::string summary_csv(const json& report) {
  std::ostringstream out;
  out << "name,kind,construction,vertices,diameter,gamma_diameter,antipode_unique,wl_count,"
         "final_classes,all_checks_hold\n";
  if (!report.contains("instances")) return out.str();
  for (const auto& inst : report.at("instances")) {
    out << inst.at("name").get<std::string>() << ',' << inst.at("kind").get<std::string>()
        << ',' << inst.at("construction").get<std::string>() << ','
        << inst.at("vertex_count") << ',' << inst.at("diameter") << ','
        << inst.at("gamma_diameter") << ',' << inst.at("antipode_unique") << ','
        << inst.at("wl_count") << ',' << inst.at("class_counts").back() << ','
        << inst.at("all_checks_hold") << '\n';
  }
  return out.str();
}

json list_examples() {
  return json::array({
      {{"kind", "cycle"},
       {"parameters", {{"n", ">= 3"}, {"steps", "optional integer list, default [1]"}}},
       {"construction", "cayley (default) or schreier"},
       {"description", "Z/nZ with connection set {0, +-s}"}},
      {{"kind", "sym_adjacent"},
       {"parameters", {{"n", ">= 3"}}},
       {"construction", "schreier"},
       {"description", "Sym(n) on Z/nZ generated by the transpositions (i i+1)"}},
      {{"kind", "heptagon_pair"},
       {"parameters", json::object()},
       {"construction", "schreier"},
       {"description", "14 points, sigma two 7-cycles, tau linking them"}},
      {{"kind", "sl_tuples"},
       {"parameters",
        {{"n", ">= 1"}, {"q", "prime power, field order <= 1024"}, {"k", "1..n"},
         {"modulus", "required for q not prime unless q in {4, 8, 9}"},
         {"generator_set", "transvections"}}},
       {"construction", "schreier"},
       {"description", "SL_n(F_q) on linearly independent k-tuples"}},
      {{"kind", "explicit"},
       {"parameters", {{"points", ">= 1"}, {"generators", "label -> 0-indexed images"}}},
       {"construction", "schreier (default) or cayley"},
       {"description", "user supplied permutation action"}},
      {{"kind", "cayley_of"},
       {"parameters", {{"degree", ">= 1"}, {"generators", "label -> 0-indexed images"}}},
       {"construction", "cayley"},
       {"description", "Cayley graph of the group generated by the permutations"}},
  });
}

Configuration build_configuration(const InstanceSpec& instance) {
  return build_instance(instance).config;
}

json configuration_to_json(const Configuration& config) {
  json table = json::array();
  for (Color c = 0; c < config.color_count(); ++c) {
    const ColorInfo& info = config.info(c);
    table.push_back({{"id", c},
                     {"is_vertex", info.is_vertex},
                     {"inverse", info.inverse},
                     {"empty_lineage", info.empty_lineage},
                     {"origin", info.origin}});
  }
  json rows = json::array();
  for (Vertex v = 0; v < config.size(); ++v) {
    json row = json::array();
    for (Vertex w = 0; w < config.size(); ++w) row.push_back(config.at(v, w));
    rows.push_back(std::move(row));
  }
  return json{{"schema_version", kSchemaVersion},
              {"m", config.size()},
              {"iteration", config.iteration()},
              {"colors", rows},
              {"color_table", table}};
}

Configuration configuration_from_json(const json& doc) {
  try {
    if (doc.at("schema_version").get<int>() != kSchemaVersion)
      parse_error("unsupported configuration schema_version");
    const std::size_t m = doc.at("m").get<std::size_t>();
    std::vector<Color> colors;
    colors.reserve(m * m);
    const json& rows = doc.at("colors");
    if (!rows.is_array() || rows.size() != m) parse_error("color matrix must have m rows");
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != m) parse_error("color matrix must be square");
      for (const auto& c : row) colors.push_back(c.get<Color>());
    }
    ColorTable table;
    for (const auto& entry : doc.at("color_table")) {
      if (entry.at("id").get<std::size_t>() != table.size())
        parse_error("color table ids must be dense and ordered");
      table.push_back({entry.at("is_vertex").get<bool>(), entry.at("inverse").get<Color>(),
                       entry.at("empty_lineage").get<bool>(),
                       entry.at("origin").get<std::string>()});
    }
    Configuration config(m, std::move(colors), std::move(table), doc.value("iteration", 0));
    if (auto violation = find_violation(config))
      throw Error(ErrorKind::InvalidConfiguration,
                  "loaded configuration violates condition " +
                      std::to_string(violation->condition) + ": " + violation->detail);
    return config;
  } catch (const json::exception& e) {
    parse_error(std::string("malformed configuration: ") + e.what());
  }
}

void dump_config(const std::string& spec_path, const std::string& out_path) {
  std::ifstream in(spec_path, std::ios::binary);
  if (!in) throw Error(ErrorKind::SpecParseError, "cannot read " + spec_path);
  json document;
  try {
    document = json::parse(in);
  } catch (const json::exception& e) {
    parse_error(std::string("invalid JSON: ") + e.what());
  }
  const auto instances = parse_spec(document);
  const Configuration config = build_configuration(instances.front());
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + out_path);
  out << configuration_to_json(config).dump(1) << '\n';
}

json replay_configuration(const std::string& config_path, std::optional<std::size_t> max_iter) {
  std::ifstream in(config_path, std::ios::binary);
  if (!in) throw Error(ErrorKind::SpecParseError, "cannot read " + config_path);
  json document;
  try {
    document = json::parse(in);
  } catch (const json::exception& e) {
    parse_error(std::string("invalid JSON: ") + e.what());
  }
  const Configuration config = configuration_from_json(document);
  WLOptions options;
  options.max_iter = max_iter;
  options.keep_snapshots = false;
  const WLTrace trace = wl_run(config, options);
  return json{{"schema_version", kSchemaVersion},
              {"vertex_count", config.size()},
              {"wl_count", trace.wl_count},
              {"class_counts", trace.class_counts},
              {"coherent", check_coherent(trace.final()).coherent()}};
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr);
  std::ostringstream out;
  for (unsigned int i = 0; i < length; ++i)
    out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return out.str();
}

}  // namespace wlcc
