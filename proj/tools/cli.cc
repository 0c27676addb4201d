// Copyright 2026 The Zagreb Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "zagreb/zagreb.h"

namespace zagreb::cli {
namespace {

using nlohmann::json;

// A library call failed; carries the status for the diagnostic.
struct ApiError : std::runtime_error {
  ApiError(zg_status s, const std::string& what)
      : std::runtime_error(what), status(s) {}
  zg_status status;
};

void Check(zg_status s) {
  if (s == ZG_OK) return;
  // Parse messages already carry the line or column.
  throw ApiError(s, std::string(zg_status_name(s)) + ": " + zg_last_error());
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using IntVec = std::unique_ptr<zg_intvec, Deleter<zg_intvec, zg_intvec_free>>;
using Graph = std::unique_ptr<zg_graph, Deleter<zg_graph, zg_graph_free>>;
using Degrees =
    std::unique_ptr<zg_degrees, Deleter<zg_degrees, zg_degrees_free>>;
using Moments =
    std::unique_ptr<zg_moments, Deleter<zg_moments, zg_moments_free>>;
using Regime = std::unique_ptr<zg_regime, Deleter<zg_regime, zg_regime_free>>;
using Samples =
    std::unique_ptr<zg_samples, Deleter<zg_samples, zg_samples_free>>;
using VerifyReport =
    std::unique_ptr<zg_verify_report,
                    Deleter<zg_verify_report, zg_verify_free>>;

json Strings(const zg_intvec* v) {
  json a = json::array();
  for (size_t i = 0; i < zg_intvec_size(v); ++i) {
    a.push_back(zg_intvec_string(v, i));
  }
  return a;
}

json Number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json TestJson(const zg_test_result& t) {
  return {{"name", t.name},           {"statistic", Number(t.statistic)},
          {"p_value", Number(t.p_value)}, {"alpha", t.alpha},
          {"pass", t.pass != 0},      {"flagged", t.flagged != 0}};
}

json MomentsJson(const zg_moments* m) {
  const size_t d = zg_moments_dim(m);
  json labels = json::array(), mean = json::array(), var = json::array(),
       cov = json::array();
  for (size_t i = 0; i < d; ++i) {
    labels.push_back(zg_moments_label(m, i));
    mean.push_back(Number(zg_moments_mean(m, i)));
    var.push_back(Number(zg_moments_cov(m, i, i)));
    json row = json::array();
    for (size_t j = 0; j < d; ++j) row.push_back(Number(zg_moments_cov(m, i, j)));
    cov.push_back(std::move(row));
  }
  return {{"source", zg_moments_source(m)},
          {"labels", labels},
          {"mean", mean},
          {"var", var},
          {"cov", cov}};
}

json Report(const std::string& command, json params, json results,
            json tests = json::array(), json seed = nullptr) {
  return {{"command", command}, {"params", std::move(params)},
          {"results", std::move(results)}, {"tests", std::move(tests)},
          {"version", zg_version()}, {"seed", std::move(seed)}};
}

// JSON config files: either flat {"flag": value} (applied to the active
// subcommand) or {"subcommand": {"flag": value}}.
class JsonConfig : public CLI::Config {
 public:
  explicit JsonConfig(std::string subcommand)
      : subcommand_(std::move(subcommand)) {}

  std::string to_config(const CLI::App*, bool, bool,
                        std::string) const override {
    return {};
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& in) const override {
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw CLI::ConversionError(std::string("config file: ") + e.what());
    }
    if (!j.is_object()) {
      throw CLI::ConversionError("config file must hold a JSON object");
    }
    std::vector<CLI::ConfigItem> items;
    for (const auto& [key, value] : j.items()) {
      if (value.is_object()) {
        if (key != subcommand_) continue;  // settings for another command
        for (const auto& [k2, v2] : value.items()) Add(items, key, k2, v2);
      } else {
        Add(items, subcommand_, key, value);
      }
    }
    return items;
  }

 private:
  static void Add(std::vector<CLI::ConfigItem>& items,
                  const std::string& parent, const std::string& name,
                  const json& value) {
    CLI::ConfigItem item;
    if (!parent.empty()) item.parents = {parent};
    item.name = name;
    if (value.is_array()) {
      for (const auto& v : value) item.inputs.push_back(Scalar(v));
    } else {
      item.inputs.push_back(Scalar(value));
    }
    items.push_back(std::move(item));
  }

  static std::string Scalar(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_unsigned()) return std::to_string(v.get<std::uint64_t>());
    if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
    if (v.is_number_float()) return v.dump();
    throw CLI::ConversionError("unsupported config value " + v.dump());
  }

  std::string subcommand_;
};

std::string FirstSubcommand(const std::vector<std::string>& args) {
  static const char* kNames[] = {"stirling", "index",  "moments",
                                 "sample",   "regime", "verify"};
  for (const auto& a : args) {
    for (const char* n : kNames) {
      if (a == n) return a;
    }
  }
  return {};
}

unsigned DefaultWorkers() {
  if (const char* env = std::getenv("ZAGREB_WORKERS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 256) {
      return static_cast<unsigned>(v);
    }
    throw CLI::ValidationError("ZAGREB_WORKERS",
                               "must be an integer in 1..256");
  }
  return 1;
}

// Option values, filled by CLI11.
struct Flags {
  unsigned k = 1;
  std::optional<unsigned> m;
  bool as_json = false;
  std::string input;
  bool stars = false;
  std::optional<std::uint64_t> n;
  double p = 0.0;
  std::string plaw;
  std::string mode = "exact";
  std::uint64_t replicates = 1;
  std::uint64_t seed = 0;
  std::string out;
  unsigned workers = 1;
  std::string tests;
  double alpha = 0.01;
  std::string suite;
};

int CmdStirling(const Flags& f, std::ostream& out) {
  IntVec v;
  zg_intvec* raw = nullptr;
  if (f.m) {
    Check(zg_stirling2(f.k, *f.m, &raw));
  } else {
    Check(zg_stirling2_row(f.k, &raw));
  }
  v.reset(raw);
  if (f.as_json) {
    json params = {{"k", f.k}};
    json results;
    if (f.m) {
      params["m"] = *f.m;
      results = {{"value", zg_intvec_string(v.get(), 0)}};
    } else {
      results = {{"row", Strings(v.get())}};
    }
    out << Report("stirling", params, results).dump(2) << '\n';
    return kExitOk;
  }
  for (size_t i = 0; i < zg_intvec_size(v.get()); ++i) {
    out << (i ? " " : "") << zg_intvec_string(v.get(), i);
  }
  out << '\n';
  return kExitOk;
}

int CmdIndex(const Flags& f, std::ostream& out) {
  zg_graph* g_raw = nullptr;
  Check(zg_graph_read_edge_list(f.input.c_str(), f.n.value_or(0), &g_raw));
  Graph g(g_raw);
  zg_degrees* d_raw = nullptr;
  Check(zg_degrees_of(g.get(), &d_raw));
  Degrees d(d_raw);
  zg_intvec* z_raw = nullptr;
  Check(zg_zagreb_vector(d.get(), f.k, &z_raw));
  IntVec z(z_raw);
  int holds = 0;
  Check(zg_check_star_identity(d.get(), f.k, &holds));

  json params = {{"input", f.input}, {"k", f.k}, {"stars", f.stars}};
  if (f.n) params["n"] = *f.n;
  json results = {{"n", zg_graph_vertex_count(g.get())},
                  {"edges", zg_graph_edge_count(g.get())},
                  {"zagreb", Strings(z.get())}};
  if (f.stars) {
    zg_intvec* s_raw = nullptr;
    Check(zg_star_vector(d.get(), f.k, &s_raw));
    IntVec s(s_raw);
    results["stars"] = Strings(s.get());
  }
  results["identity_check"] = holds != 0;
  out << Report("index", params, results).dump(2) << '\n';
  return kExitOk;
}

int CmdMoments(const Flags& f, std::ostream& out) {
  zg_moment_mode mode = ZG_MOMENTS_EXACT;
  if (f.mode == "asymptotic") mode = ZG_MOMENTS_ASYMPTOTIC;
  if (f.mode == "enumerate") mode = ZG_MOMENTS_ENUMERATE;
  zg_moments* raw = nullptr;
  Check(zg_moments_compute(*f.n, f.p, f.k, mode,
                           f.stars ? ZG_VECTOR_STARS : ZG_VECTOR_ZAGREB, &raw));
  Moments m(raw);
  json params = {{"n", *f.n}, {"p", f.p}, {"k", f.k}, {"mode", f.mode},
                 {"stars", f.stars}};
  out << Report("moments", params, MomentsJson(m.get())).dump(2) << '\n';
  return kExitOk;
}

int CmdSample(const Flags& f, std::ostream& out) {
  zg_mc_config c{};
  c.n = *f.n;
  c.p = f.p;
  c.plaw = f.plaw.empty() ? nullptr : f.plaw.c_str();
  c.k = f.k;
  c.replicates = f.replicates;
  c.master_seed = f.seed;
  c.collect_zagreb = 1;
  c.collect_stars = f.stars ? 1 : 0;
  c.workers = f.workers;
  c.tests = f.tests.empty() ? nullptr : f.tests.c_str();
  c.alpha = f.alpha;
  zg_samples* raw = nullptr;
  Check(zg_sample_run(&c, &raw));
  Samples s(raw);
  if (!f.out.empty()) Check(zg_samples_write_csv(s.get(), f.out.c_str()));
  zg_moments* m_raw = nullptr;
  Check(zg_samples_moments(s.get(), &m_raw));
  Moments m(m_raw);

  json params = {{"n", *f.n},
                 {"k", f.k},
                 {"replicates", f.replicates},
                 {"stars", f.stars},
                 {"alpha", f.alpha}};
  if (f.plaw.empty()) {
    params["p"] = f.p;
  } else {
    params["plaw"] = f.plaw;
  }
  if (!f.out.empty()) params["out"] = f.out;
  if (!f.tests.empty()) params["tests"] = f.tests;
  json results = MomentsJson(m.get());
  results["p"] = zg_samples_p(s.get());
  results["replicates"] = zg_samples_rows(s.get());
  results["csv"] = f.out.empty() ? json(nullptr) : json(f.out);
  json tests = json::array();
  for (size_t i = 0; i < zg_samples_test_count(s.get()); ++i) {
    zg_test_result t{};
    Check(zg_samples_test(s.get(), i, &t));
    tests.push_back(TestJson(t));
  }
  out << Report("sample", params, results, tests, f.seed).dump(2) << '\n';
  return kExitOk;
}

int CmdRegime(const Flags& f, std::ostream& out) {
  zg_regime* raw = nullptr;
  Check(zg_regime_classify(f.plaw.c_str(), f.k, &raw));
  Regime r(raw);
  double param = 0.0;
  const bool has_param = zg_regime_parameter(r.get(), &param) != 0;
  json also = json::array();
  for (size_t i = 0; i < zg_regime_also_holds_count(r.get()); ++i) {
    also.push_back(zg_regime_also_holds(r.get(), i));
  }
  json results = {
      {"law", zg_regime_law(r.get())},
      {"n0", zg_regime_n0(r.get())},
      {"regime", zg_regime_name(r.get())},
      {"parameter", has_param ? json(param) : json(nullptr)},
      {"limit_law", zg_regime_limit_law(r.get())},
      {"normalization", zg_regime_normalization(r.get())},
      {"single_index_normal", zg_regime_single_index_normal(r.get()) != 0},
      {"joint_law_open", zg_regime_joint_law_open(r.get()) != 0},
      {"also_holds", also}};
  out << Report("regime", {{"plaw", f.plaw}, {"k", f.k}}, results).dump(2)
      << '\n';
  return kExitOk;
}

int CmdVerify(const Flags& f, std::ostream& out) {
  zg_verify_report* raw = nullptr;
  Check(zg_verify_run(f.suite.c_str(), f.seed, f.workers, &raw));
  VerifyReport r(raw);
  bool all_pass = true;
  json suites = json::array();
  json tests = json::array();
  for (size_t i = 0; i < zg_verify_suite_count(r.get()); ++i) {
    json checks = json::array();
    for (size_t j = 0; j < zg_verify_check_count(r.get(), i); ++j) {
      zg_check c{};
      Check(zg_verify_check(r.get(), i, j, &c));
      checks.push_back({{"name", c.name},
                        {"pass", c.pass != 0},
                        {"value", Number(c.value)},
                        {"threshold", Number(c.threshold)},
                        {"detail", c.detail}});
    }
    for (size_t j = 0; j < zg_verify_test_count(r.get(), i); ++j) {
      zg_test_result t{};
      Check(zg_verify_test(r.get(), i, j, &t));
      tests.push_back(TestJson(t));
    }
    const bool pass = zg_verify_pass(r.get(), i) != 0;
    all_pass = all_pass && pass;
    suites.push_back({{"suite", zg_verify_suite(r.get(), i)},
                      {"criterion", zg_verify_criterion(r.get(), i)},
                      {"pass", pass},
                      {"seconds", zg_verify_seconds(r.get(), i)},
                      {"checks", checks}});
  }
  json results = {{"pass", all_pass}, {"suites", suites}};
  out << Report("verify", {{"suite", f.suite}, {"workers", f.workers}},
                results, tests, f.seed)
             .dump(2)
      << '\n';
  return all_pass ? kExitOk : kExitVerifyFailed;
}

std::vector<std::string> SuiteChoices() {
  std::vector<std::string> names;
  for (size_t i = 0; const char* n = zg_verify_suite_name_at(i); ++i) {
    names.emplace_back(n);
  }
  names.emplace_back("all");
  return names;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Generalized Zagreb indices of G(n, p): exact moments, "
               "limit regimes and Monte Carlo checks",
               "zagreb"};
  app.require_subcommand(1);
  app.set_config("--config", "", "JSON file of default flag values");
  app.config_formatter(std::make_shared<JsonConfig>(FirstSubcommand(args)));
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.set_version_flag("--version", std::string(zg_version()));

  Flags f;
  unsigned workers_flag = 0;
  const auto positive = CLI::PositiveNumber;

  auto* stirling = app.add_subcommand("stirling", "Stirling numbers {k m}");
  stirling->add_option("--k", f.k, "order k")->required();
  stirling->add_option("--m", f.m, "block count m (omit for the row)");
  stirling->add_flag("--json", f.as_json, "emit a JSON report");

  auto* index = app.add_subcommand("index", "indices of an edge-list graph");
  index->add_option("--input", f.input, "edge list file")
      ->required()
      ->check(CLI::ExistingFile);
  index->add_option("--k", f.k, "largest index order")->required()->check(positive);
  index->add_flag("--stars", f.stars, "also report S2..S(k+1)");
  index->add_option("--n", f.n, "vertex count (at least the largest label)")
      ->check(positive);

  auto* moments = app.add_subcommand("moments", "moments under G(n, p)");
  moments->add_option("--n", f.n, "vertices")->required()->check(positive);
  moments->add_option("--p", f.p, "edge probability")->required();
  moments->add_option("--k", f.k, "largest index order")
      ->required()
      ->check(positive);
  moments->add_option("--mode", f.mode, "exact, asymptotic or enumerate")
      ->required()
      ->check(CLI::IsMember({"exact", "asymptotic", "enumerate"}));
  moments->add_flag("--stars", f.stars, "star counts instead of indices");

  auto* sample = app.add_subcommand("sample", "Monte Carlo replicates");
  sample->add_option("--n", f.n, "vertices")->required()->check(positive);
  auto* p_opt = sample->add_option("--p", f.p, "edge probability");
  auto* law_opt = sample->add_option("--plaw", f.plaw, "p(n) law");
  p_opt->excludes(law_opt);
  law_opt->excludes(p_opt);
  sample->add_option("--k", f.k, "largest index order")
      ->required()
      ->check(positive);
  sample->add_option("--replicates", f.replicates, "replicates")
      ->required()
      ->check(positive);
  sample->add_option("--seed", f.seed, "master seed")->required();
  sample->add_option("--out", f.out, "CSV output path");
  sample->add_option("--workers", workers_flag, "threads (default "
                                                "$ZAGREB_WORKERS or 1)")
      ->check(CLI::Range(1, 256));
  sample->add_flag("--stars", f.stars, "also collect S2..S(k+1)");
  sample->add_option("--tests", f.tests, "comma list of ks, poisson");
  sample->add_option("--alpha", f.alpha, "test level")
      ->check(CLI::Range(0.0, 1.0));

  auto* regime = app.add_subcommand("regime", "classify a p(n) law");
  regime->add_option("--plaw", f.plaw, "p(n) law")->required();
  regime->add_option("--k", f.k, "largest index order")
      ->required()
      ->check(positive);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", f.suite, "suite name")
      ->required()
      ->check(CLI::IsMember(SuiteChoices()));
  f.seed = 42;
  verify->add_option("--seed", f.seed, "master seed")->capture_default_str();
  verify->add_option("--workers", workers_flag, "threads")
      ->check(CLI::Range(1, 256));

  for (auto* sub : app.get_subcommands({})) sub->configurable(false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (sample->parsed() && p_opt->count() == 0 && law_opt->count() == 0) {
      throw CLI::RequiredError("--p or --plaw");
    }
    f.workers = workers_flag != 0 ? workers_flag : DefaultWorkers();
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (stirling->parsed()) return CmdStirling(f, out);
    if (index->parsed()) return CmdIndex(f, out);
    if (moments->parsed()) return CmdMoments(f, out);
    if (sample->parsed()) return CmdSample(f, out);
    if (regime->parsed()) return CmdRegime(f, out);
    if (verify->parsed()) return CmdVerify(f, out);
  } catch (const ApiError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace zagreb::cli
