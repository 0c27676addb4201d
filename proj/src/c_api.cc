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

#include "zagreb/zagreb.h"

#include <cmath>
#include <fstream>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "combinatorics.h"
#include "error.h"
#include "gof.h"
#include "graph.h"
#include "indices.h"
#include "moments.h"
#include "montecarlo.h"
#include "plaw.h"
#include "regimes.h"
#include "verify.h"

struct zg_intvec {
  zagreb::ExactVector values;
  std::vector<std::string> text;
};

struct zg_graph {
  zagreb::graph::SimpleGraph graph;
};

struct zg_degrees {
  zagreb::graph::DegreeSequence degrees;
};

struct zg_moments {
  zagreb::moments::MomentReport report;
};

struct zg_regime {
  zagreb::limits::RegimeReport report;
  std::string law_text;
  std::vector<std::string> also;
};

struct zg_samples {
  zagreb::montecarlo::Experiment experiment;
  std::vector<zagreb::montecarlo::TestResult> tests;
  double p = 0.0;
  std::string scratch;
};

struct zg_verify_report {
  std::vector<zagreb::verify::SuiteResult> suites;
};

namespace {

using zagreb::Error;
using zagreb::ErrorCode;
using zagreb::ParseError;

struct LastError {
  std::string message;
  long line = -1;
  long column = -1;
};

LastError& Last() {
  thread_local LastError last;
  return last;
}

zg_status Code(ErrorCode code) { return static_cast<zg_status>(code); }

// Runs `body`, translating exceptions into a status and the thread's error
// record.
template <typename F>
zg_status Guard(F&& body) {
  LastError& last = Last();
  last = LastError{};
  try {
    body();
    return ZG_OK;
  } catch (const ParseError& e) {
    last = {e.what(), e.line(), e.column()};
    return ZG_ERR_PARSE;
  } catch (const Error& e) {
    last.message = e.what();
    return Code(e.code());
  } catch (const std::bad_alloc&) {
    last.message = "out of memory";
    return ZG_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last.message = e.what();
    return ZG_ERR_INTERNAL;
  }
}

void Require(bool ok, const char* what) {
  if (!ok) zagreb::Fail(ErrorCode::kInvalidArgument, what);
}

zg_intvec* MakeIntVec(zagreb::ExactVector values) {
  auto* v = new zg_intvec{std::move(values), {}};
  v->text.reserve(v->values.size());
  for (const auto& x : v->values) v->text.push_back(zagreb::ToString(x));
  return v;
}

zg_status ReturnInt(zagreb::ExactInt value, zg_intvec** out) {
  return Guard([&] {
    Require(out != nullptr, "null output pointer");
    *out = MakeIntVec({std::move(value)});
  });
}

void CopyMatrix(const Eigen::MatrixXd& m, double* out) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[i * m.cols() + j] = m(i, j);
  }
}

void FillTest(const zagreb::montecarlo::TestResult& t, zg_test_result* out) {
  *out = {t.name.c_str(), t.statistic, t.p_value, t.alpha, t.pass ? 1 : 0,
          t.flagged ? 1 : 0};
}

const char* StaticTestName(const std::string& name) {
  if (name == "ks-normal") return "ks-normal";
  if (name == "chisq-poisson") return "chisq-poisson";
  return "test";
}

std::vector<std::string> SplitTests(const char* text) {
  std::vector<std::string> out;
  if (text == nullptr) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

}  // namespace

extern "C" {

const char* zg_version(void) { return ZAGREB_VERSION_STRING; }

const char* zg_status_name(zg_status status) {
  switch (status) {
    case ZG_OK:
      return "ok";
    case ZG_ERR_INVALID_ARGUMENT:
      return "invalid_argument";
    case ZG_ERR_DOMAIN:
      return "domain";
    case ZG_ERR_PARSE:
      return "parse";
    case ZG_ERR_OVERFLOW:
      return "overflow";
    case ZG_ERR_SIZE_GUARD:
      return "size_guard";
    case ZG_ERR_IO:
      return "io";
    case ZG_ERR_REGIME:
      return "regime";
    case ZG_ERR_INTERNAL:
      return "internal";
  }
  return "unknown";
}

const char* zg_last_error(void) { return Last().message.c_str(); }
long zg_last_error_line(void) { return Last().line; }
long zg_last_error_column(void) { return Last().column; }

// Integer vectors.

size_t zg_intvec_size(const zg_intvec* v) { return v ? v->values.size() : 0; }

const char* zg_intvec_string(const zg_intvec* v, size_t i) {
  return (v && i < v->text.size()) ? v->text[i].c_str() : nullptr;
}

double zg_intvec_double(const zg_intvec* v, size_t i) {
  return (v && i < v->values.size()) ? zagreb::ToDouble(v->values[i]) : NAN;
}

void zg_intvec_free(zg_intvec* v) { delete v; }

// Combinatorics.

zg_status zg_stirling2(unsigned k, unsigned m, zg_intvec** out) {
  zagreb::ExactInt value;
  const zg_status s =
      Guard([&] { value = zagreb::combinatorics::Stirling2(k, m); });
  return s != ZG_OK ? s : ReturnInt(std::move(value), out);
}

zg_status zg_stirling2_row(unsigned k, zg_intvec** out) {
  return Guard([&] {
    Require(out != nullptr, "null output pointer");
    *out = MakeIntVec(zagreb::combinatorics::Stirling2Row(k));
  });
}

zg_status zg_binomial(uint64_t n, uint64_t r, zg_intvec** out) {
  return ReturnInt(zagreb::combinatorics::Binomial(n, r), out);
}

zg_status zg_falling_factorial(uint64_t n, uint64_t j, zg_intvec** out) {
  zagreb::ExactInt value;
  const zg_status s =
      Guard([&] { value = zagreb::combinatorics::FallingFactorial(n, j); });
  return s != ZG_OK ? s : ReturnInt(std::move(value), out);
}

zg_status zg_multinomial(uint64_t n, const uint64_t* parts, size_t count,
                         zg_intvec** out) {
  zagreb::ExactInt value;
  const zg_status s = Guard([&] {
    Require(parts != nullptr || count == 0, "null parts");
    value = zagreb::combinatorics::Multinomial(
        n, std::span<const std::uint64_t>(parts, count));
  });
  return s != ZG_OK ? s : ReturnInt(std::move(value), out);
}

// Graphs.

zg_status zg_graph_from_edges(uint64_t n, const uint64_t* endpoints,
                              size_t edge_count, zg_graph** out) {
  return Guard([&] {
    Require(out != nullptr, "null output pointer");
    Require(endpoints != nullptr || edge_count == 0, "null edge array");
    std::vector<zagreb::graph::Edge> edges(edge_count);
    for (size_t e = 0; e < edge_count; ++e) {
      edges[e] = {endpoints[2 * e], endpoints[2 * e + 1]};
    }
    *out = new zg_graph{zagreb::graph::SimpleGraph(n, std::move(edges))};
  });
}

zg_status zg_graph_read_edge_list(const char* path, uint64_t n_override,
                                  zg_graph** out) {
  return Guard([&] {
    Require(out != nullptr && path != nullptr, "null argument");
    std::ifstream in(path);
    if (!in) zagreb::Fail(ErrorCode::kIo, std::string("cannot open ") + path);
    std::optional<std::uint64_t> n;
    if (n_override != 0) n = n_override;
    *out = new zg_graph{zagreb::graph::ReadEdgeList(in, n)};
  });
}

zg_status zg_graph_sample(uint64_t n, double p, uint64_t master_seed,
                          uint64_t stream, zg_graph** out) {
  return Guard([&] {
    Require(out != nullptr, "null output pointer");
    *out = new zg_graph{zagreb::graph::SampleGnpGraph(
        {n, p}, zagreb::Seed{master_seed, stream})};
  });
}

uint64_t zg_graph_vertex_count(const zg_graph* g) {
  return g ? g->graph.vertex_count() : 0;
}
uint64_t zg_graph_edge_count(const zg_graph* g) {
  return g ? g->graph.edge_count() : 0;
}
void zg_graph_free(zg_graph* g) { delete g; }

zg_status zg_degrees_of(const zg_graph* g, zg_degrees** out) {
  return Guard([&] {
    Require(g != nullptr && out != nullptr, "null argument");
    *out = new zg_degrees{zagreb::graph::DegreesOf(g->graph)};
  });
}

zg_status zg_degrees_from_array(uint64_t n, const uint64_t* degrees,
                                zg_degrees** out) {
  return Guard([&] {
    Require(out != nullptr, "null output pointer");
    Require(degrees != nullptr || n == 0, "null degree array");
    *out = new zg_degrees{zagreb::graph::DegreeSequence(
        n, std::vector<std::uint64_t>(degrees, degrees + n))};
  });
}

zg_status zg_degrees_sample(uint64_t n, double p, uint64_t master_seed,
                            uint64_t stream, zg_degrees** out) {
  return Guard([&] {
    Require(out != nullptr, "null output pointer");
    *out = new zg_degrees{zagreb::graph::SampleGnpDegrees(
        {n, p}, zagreb::Seed{master_seed, stream})};
  });
}

zg_status zg_degrees_complement(const zg_degrees* d, zg_degrees** out) {
  return Guard([&] {
    Require(d != nullptr && out != nullptr, "null argument");
    *out = new zg_degrees{zagreb::graph::ComplementDegrees(d->degrees)};
  });
}

uint64_t zg_degrees_count(const zg_degrees* d) {
  return d ? d->degrees.vertex_count() : 0;
}
uint64_t zg_degrees_get(const zg_degrees* d, size_t i) {
  return (d && i < d->degrees.degrees().size()) ? d->degrees[i] : 0;
}
void zg_degrees_free(zg_degrees* d) { delete d; }

// Indices.

zg_status zg_zagreb_vector(const zg_degrees* d, unsigned k, zg_intvec** out) {
  return Guard([&] {
    Require(d != nullptr && out != nullptr, "null argument");
    *out = MakeIntVec(zagreb::indices::ZagrebVector(d->degrees, k).values);
  });
}

zg_status zg_star_vector(const zg_degrees* d, unsigned k, zg_intvec** out) {
  return Guard([&] {
    Require(d != nullptr && out != nullptr, "null argument");
    *out = MakeIntVec(zagreb::indices::StarVectorOf(d->degrees, k).values);
  });
}

zg_status zg_check_star_identity(const zg_degrees* d, unsigned k, int* holds) {
  return Guard([&] {
    Require(d != nullptr && holds != nullptr, "null argument");
    *holds = zagreb::indices::CheckStarIdentity(d->degrees, k).holds ? 1 : 0;
  });
}

zg_status zg_check_complement_identity(const zg_degrees* d, unsigned k,
                                       int* holds) {
  return Guard([&] {
    Require(d != nullptr && holds != nullptr, "null argument");
    *holds =
        zagreb::indices::CheckComplementIdentity(d->degrees, k).holds ? 1 : 0;
  });
}

// Moments.

zg_status zg_moments_compute(uint64_t n, double p, unsigned k,
                             zg_moment_mode mode, zg_vector_kind kind,
                             zg_moments** out) {
  namespace mo = zagreb::moments;
  return Guard([&] {
    Require(out != nullptr, "null output pointer");
    Require(kind == ZG_VECTOR_ZAGREB || kind == ZG_VECTOR_STARS,
            "unknown vector kind");
    const zagreb::graph::GnpParams params{n, p};
    const bool stars = kind == ZG_VECTOR_STARS;
    mo::MomentReport r;
    switch (mode) {
      case ZG_MOMENTS_EXACT:
        r = stars ? mo::ExactStarMoments(params, k)
                  : mo::ExactZagrebMoments(params, k);
        break;
      case ZG_MOMENTS_ASYMPTOTIC:
        r = stars ? mo::AsymptoticStarMoments(params, k)
                  : mo::AsymptoticZagrebMoments(params, k);
        break;
      case ZG_MOMENTS_ENUMERATE: {
        auto oracle = mo::EnumerateOracle(params, k);
        r = stars ? std::move(oracle.stars) : std::move(oracle.zagreb);
        break;
      }
      default:
        zagreb::Fail(ErrorCode::kInvalidArgument, "unknown moment mode");
    }
    *out = new zg_moments{std::move(r)};
  });
}

size_t zg_moments_dim(const zg_moments* m) {
  return m ? m->report.labels.size() : 0;
}
const char* zg_moments_label(const zg_moments* m, size_t i) {
  return (m && i < m->report.labels.size()) ? m->report.labels[i].c_str()
                                            : nullptr;
}
const char* zg_moments_source(const zg_moments* m) {
  return m ? zagreb::moments::SourceName(m->report.source).data() : nullptr;
}
double zg_moments_mean(const zg_moments* m, size_t i) {
  return (m && i < static_cast<size_t>(m->report.mean.size()))
             ? m->report.mean(i)
             : NAN;
}
double zg_moments_cov(const zg_moments* m, size_t i, size_t j) {
  const size_t d = zg_moments_dim(m);
  return (i < d && j < d) ? m->report.cov(i, j) : NAN;
}
void zg_moments_free(zg_moments* m) { delete m; }

// Laws and regimes.

zg_status zg_plaw_evaluate(const char* law, uint64_t n, double* p) {
  return Guard([&] {
    Require(law != nullptr && p != nullptr, "null argument");
    *p = zagreb::limits::ParsePLaw(law).Evaluate(n);
  });
}

zg_status zg_regime_classify(const char* law, unsigned k, zg_regime** out) {
  return Guard([&] {
    Require(law != nullptr && out != nullptr, "null argument");
    const auto parsed = zagreb::limits::ParsePLaw(law);
    auto* r = new zg_regime{zagreb::limits::ClassifyRegime(parsed, k),
                            zagreb::limits::FormatPLaw(parsed), {}};
    for (auto l : r->report.also_holds) {
      r->also.emplace_back(zagreb::limits::LimitLawName(l));
    }
    *out = r;
  });
}

const char* zg_regime_law(const zg_regime* r) {
  return r ? r->law_text.c_str() : nullptr;
}
const char* zg_regime_name(const zg_regime* r) {
  return r ? zagreb::limits::RegimeName(r->report.regime).data() : nullptr;
}
const char* zg_regime_limit_law(const zg_regime* r) {
  return r ? zagreb::limits::LimitLawName(r->report.limit_law).data()
           : nullptr;
}
const char* zg_regime_normalization(const zg_regime* r) {
  return r ? r->report.normalization.c_str() : nullptr;
}
int zg_regime_parameter(const zg_regime* r, double* value) {
  if (!r || !r->report.parameter) return 0;
  if (value) *value = *r->report.parameter;
  return 1;
}
int zg_regime_single_index_normal(const zg_regime* r) {
  return r && r->report.single_index_normal ? 1 : 0;
}
int zg_regime_joint_law_open(const zg_regime* r) {
  return r && r->report.joint_law_open ? 1 : 0;
}
uint64_t zg_regime_n0(const zg_regime* r) { return r ? r->report.law.n0 : 0; }
size_t zg_regime_also_holds_count(const zg_regime* r) {
  return r ? r->also.size() : 0;
}
const char* zg_regime_also_holds(const zg_regime* r, size_t i) {
  return (r && i < r->also.size()) ? r->also[i].c_str() : nullptr;
}
void zg_regime_free(zg_regime* r) { delete r; }

zg_status zg_sigma_star(double c, unsigned k, double* out) {
  return Guard([&] {
    Require(out != nullptr, "null output pointer");
    CopyMatrix(zagreb::limits::SigmaStar(c, k).matrix, out);
  });
}

zg_status zg_sigma_zagreb(double c, unsigned k, double* out) {
  return Guard([&] {
    Require(out != nullptr, "null output pointer");
    CopyMatrix(zagreb::limits::SigmaZagreb(c, k).matrix, out);
  });
}

zg_status zg_sigma_star_det(double c, unsigned k, double* out) {
  return Guard([&] {
    Require(out != nullptr, "null output pointer");
    *out = zagreb::limits::SigmaStarDet(c, k);
  });
}

zg_status zg_standardizer(const char* law, uint64_t n, unsigned k,
                          double* centers, double* scales, double* target,
                          const char** target_kind) {
  return Guard([&] {
    Require(law != nullptr, "null law");
    const auto parsed = zagreb::limits::ParsePLaw(law);
    const auto regime = zagreb::limits::ClassifyRegime(parsed, k);
    const auto st =
        zagreb::limits::Standardizer(regime, {n, parsed.Evaluate(n)}, k);
    for (unsigned m = 0; m < k; ++m) {
      if (centers) centers[m] = st.norms[m].center;
      if (scales) scales[m] = st.norms[m].scale;
    }
    if (target) CopyMatrix(st.target.matrix, target);
    if (target_kind) {
      *target_kind = zagreb::limits::CovKindName(st.target.kind).data();
    }
  });
}

// Goodness of fit.

zg_status zg_ks_test_normal(const double* sample, size_t size, double alpha,
                            zg_test_result* out) {
  return Guard([&] {
    Require(sample != nullptr && out != nullptr, "null argument");
    const auto t = zagreb::montecarlo::KsTestNormal(
        std::span<const double>(sample, size), alpha);
    FillTest(t, out);
    out->name = StaticTestName(t.name);
  });
}

zg_status zg_chisq_test_poisson(const uint64_t* histogram, size_t size,
                                double lambda, double alpha,
                                zg_test_result* out) {
  return Guard([&] {
    Require(histogram != nullptr && out != nullptr, "null argument");
    const auto t = zagreb::montecarlo::ChiSquarePoisson(
        std::span<const std::uint64_t>(histogram, size), lambda, alpha);
    FillTest(t, out);
    out->name = StaticTestName(t.name);
  });
}

// Monte Carlo.

zg_status zg_sample_run(const zg_mc_config* config, zg_samples** out) {
  return Guard([&] {
    Require(config != nullptr && out != nullptr, "null argument");
    zagreb::montecarlo::McConfig c;
    c.n = config->n;
    if (config->plaw != nullptr) {
      c.p_source = zagreb::limits::ParsePLaw(config->plaw);
    } else {
      c.p_source = config->p;
    }
    c.k = config->k;
    c.replicates = config->replicates;
    c.master_seed = config->master_seed;
    c.collect_zagreb = config->collect_zagreb != 0;
    c.collect_stars = config->collect_stars != 0;
    c.workers = config->workers == 0 ? 1 : config->workers;
    c.tests = SplitTests(config->tests);
    const double alpha = config->alpha > 0.0 ? config->alpha : 0.01;
    auto s = std::make_unique<zg_samples>();
    s->p = c.EvaluatedP();
    c.Validate();
    s->experiment = zagreb::montecarlo::RunExperiment(c);
    s->tests = zagreb::montecarlo::RunRequestedTests(c, s->experiment, alpha);
    *out = s.release();
  });
}

uint64_t zg_samples_rows(const zg_samples* s) {
  return s ? s->experiment.samples.rows() : 0;
}
size_t zg_samples_cols(const zg_samples* s) {
  return s ? s->experiment.samples.cols() : 0;
}
const char* zg_samples_label(const zg_samples* s, size_t j) {
  return (s && j < s->experiment.samples.labels.size())
             ? s->experiment.samples.labels[j].c_str()
             : nullptr;
}
double zg_samples_p(const zg_samples* s) { return s ? s->p : NAN; }

const char* zg_samples_exact(zg_samples* s, uint64_t r, size_t j) {
  if (!s || r >= zg_samples_rows(s) || j >= zg_samples_cols(s)) return nullptr;
  const auto& m = s->experiment.samples;
  s->scratch = zagreb::ToString(m.exact[r * m.cols() + j]);
  return s->scratch.c_str();
}

double zg_samples_value(const zg_samples* s, uint64_t r, size_t j) {
  if (!s || r >= zg_samples_rows(s) || j >= zg_samples_cols(s)) return NAN;
  return s->experiment.samples.values(r, j);
}

zg_status zg_samples_write_csv(const zg_samples* s, const char* path) {
  return Guard([&] {
    Require(s != nullptr && path != nullptr, "null argument");
    std::ofstream out(path, std::ios::binary);
    if (!out) zagreb::Fail(ErrorCode::kIo, std::string("cannot write ") + path);
    zagreb::montecarlo::WriteCsv(s->experiment.samples, out);
    out.flush();
    if (!out) zagreb::Fail(ErrorCode::kIo, std::string("write failed: ") + path);
  });
}

zg_status zg_samples_moments(const zg_samples* s, zg_moments** out) {
  return Guard([&] {
    Require(s != nullptr && out != nullptr, "null argument");
    *out = new zg_moments{s->experiment.moments};
  });
}

size_t zg_samples_test_count(const zg_samples* s) {
  return s ? s->tests.size() : 0;
}

zg_status zg_samples_test(const zg_samples* s, size_t i, zg_test_result* out) {
  return Guard([&] {
    Require(s != nullptr && out != nullptr, "null argument");
    Require(i < s->tests.size(), "test index out of range");
    FillTest(s->tests[i], out);
  });
}

void zg_samples_free(zg_samples* s) { delete s; }

// Verification.

const char* zg_verify_suite_name_at(size_t i) {
  const auto& names = zagreb::verify::SuiteNames();
  return i < names.size() ? names[i].c_str() : nullptr;
}

zg_status zg_verify_run(const char* suite, uint64_t seed, unsigned workers,
                        zg_verify_report** out) {
  return Guard([&] {
    Require(suite != nullptr && out != nullptr, "null argument");
    zagreb::verify::VerifyOptions options;
    options.seed = seed;
    options.workers = workers == 0 ? 1 : workers;
    *out = new zg_verify_report{zagreb::verify::RunSuite(suite, options)};
  });
}

size_t zg_verify_suite_count(const zg_verify_report* r) {
  return r ? r->suites.size() : 0;
}
const char* zg_verify_suite(const zg_verify_report* r, size_t i) {
  return (r && i < r->suites.size()) ? r->suites[i].suite.c_str() : nullptr;
}
int zg_verify_criterion(const zg_verify_report* r, size_t i) {
  return (r && i < r->suites.size()) ? r->suites[i].criterion : 0;
}
double zg_verify_seconds(const zg_verify_report* r, size_t i) {
  return (r && i < r->suites.size()) ? r->suites[i].seconds : NAN;
}
int zg_verify_pass(const zg_verify_report* r, size_t i) {
  return (r && i < r->suites.size() && r->suites[i].pass()) ? 1 : 0;
}
size_t zg_verify_check_count(const zg_verify_report* r, size_t i) {
  return (r && i < r->suites.size()) ? r->suites[i].checks.size() : 0;
}

zg_status zg_verify_check(const zg_verify_report* r, size_t i, size_t j,
                          zg_check* out) {
  return Guard([&] {
    Require(r != nullptr && out != nullptr, "null argument");
    Require(i < r->suites.size() && j < r->suites[i].checks.size(),
            "check index out of range");
    const auto& c = r->suites[i].checks[j];
    *out = {c.name.c_str(), c.pass ? 1 : 0, c.value, c.threshold,
            c.detail.c_str()};
  });
}

size_t zg_verify_test_count(const zg_verify_report* r, size_t i) {
  return (r && i < r->suites.size()) ? r->suites[i].tests.size() : 0;
}

zg_status zg_verify_test(const zg_verify_report* r, size_t i, size_t j,
                         zg_test_result* out) {
  return Guard([&] {
    Require(r != nullptr && out != nullptr, "null argument");
    Require(i < r->suites.size() && j < r->suites[i].tests.size(),
            "test index out of range");
    FillTest(r->suites[i].tests[j], out);
  });
}

void zg_verify_free(zg_verify_report* r) { delete r; }

}  // extern "C"
