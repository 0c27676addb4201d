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
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "gtest/gtest.h"

namespace {

std::string DataPath(const std::string& name) {
  return std::string(ZAGREB_TEST_DATA_DIR) + "/" + name;
}

TEST(CApiTest, VersionAndStatusNames) {
  EXPECT_STREQ(zg_version(), "1.0.0");
  EXPECT_STREQ(zg_status_name(ZG_OK), "ok");
  EXPECT_STREQ(zg_status_name(ZG_ERR_PARSE), "parse");
  EXPECT_STREQ(zg_status_name(ZG_ERR_REGIME), "regime");
  EXPECT_STREQ(zg_status_name(ZG_ERR_INTERNAL), "internal");
}

TEST(CApiTest, Combinatorics) {
  zg_intvec* v = nullptr;
  ASSERT_EQ(zg_stirling2(4, 2, &v), ZG_OK);
  EXPECT_EQ(zg_intvec_size(v), 1u);
  EXPECT_STREQ(zg_intvec_string(v, 0), "7");
  EXPECT_EQ(zg_intvec_double(v, 0), 7.0);
  EXPECT_EQ(zg_intvec_string(v, 1), nullptr);
  EXPECT_TRUE(std::isnan(zg_intvec_double(v, 1)));
  zg_intvec_free(v);

  ASSERT_EQ(zg_stirling2_row(3, &v), ZG_OK);
  ASSERT_EQ(zg_intvec_size(v), 3u);
  EXPECT_STREQ(zg_intvec_string(v, 1), "3");
  zg_intvec_free(v);

  ASSERT_EQ(zg_binomial(100, 50, &v), ZG_OK);
  EXPECT_STREQ(zg_intvec_string(v, 0), "100891344545564193334812497256");
  zg_intvec_free(v);

  ASSERT_EQ(zg_falling_factorial(5, 3, &v), ZG_OK);
  EXPECT_STREQ(zg_intvec_string(v, 0), "60");
  zg_intvec_free(v);

  const uint64_t parts[] = {2, 1, 1};
  ASSERT_EQ(zg_multinomial(4, parts, 3, &v), ZG_OK);
  EXPECT_STREQ(zg_intvec_string(v, 0), "12");
  zg_intvec_free(v);

  EXPECT_EQ(zg_stirling2(65, 2, &v), ZG_ERR_DOMAIN);
  EXPECT_NE(std::string(zg_last_error()), "");
  EXPECT_EQ(zg_stirling2(3, 1, nullptr), ZG_ERR_INVALID_ARGUMENT);
}

TEST(CApiTest, GraphAndIdentities) {
  const uint64_t path[] = {1, 2, 2, 3};
  zg_graph* g = nullptr;
  ASSERT_EQ(zg_graph_from_edges(3, path, 2, &g), ZG_OK);
  EXPECT_EQ(zg_graph_vertex_count(g), 3u);
  EXPECT_EQ(zg_graph_edge_count(g), 2u);
  zg_degrees* d = nullptr;
  ASSERT_EQ(zg_degrees_of(g, &d), ZG_OK);
  ASSERT_EQ(zg_degrees_count(d), 3u);
  EXPECT_EQ(zg_degrees_get(d, 1), 2u);

  zg_intvec* z = nullptr;
  ASSERT_EQ(zg_zagreb_vector(d, 2, &z), ZG_OK);
  EXPECT_STREQ(zg_intvec_string(z, 0), "4");
  EXPECT_STREQ(zg_intvec_string(z, 1), "6");
  zg_intvec_free(z);
  ASSERT_EQ(zg_star_vector(d, 2, &z), ZG_OK);
  EXPECT_STREQ(zg_intvec_string(z, 0), "4");
  EXPECT_STREQ(zg_intvec_string(z, 1), "1");
  zg_intvec_free(z);

  int holds = 0;
  ASSERT_EQ(zg_check_star_identity(d, 5, &holds), ZG_OK);
  EXPECT_EQ(holds, 1);
  holds = 0;
  ASSERT_EQ(zg_check_complement_identity(d, 5, &holds), ZG_OK);
  EXPECT_EQ(holds, 1);

  zg_degrees* c = nullptr;
  ASSERT_EQ(zg_degrees_complement(d, &c), ZG_OK);
  EXPECT_EQ(zg_degrees_get(c, 0), 1u);
  EXPECT_EQ(zg_degrees_get(c, 1), 0u);
  zg_degrees_free(c);
  zg_degrees_free(d);
  zg_graph_free(g);

  const uint64_t loop[] = {1, 1};
  EXPECT_EQ(zg_graph_from_edges(3, loop, 1, &g), ZG_ERR_INVALID_ARGUMENT);
  const uint64_t odd[] = {1, 0, 0};
  EXPECT_EQ(zg_degrees_from_array(3, odd, &d), ZG_ERR_INVALID_ARGUMENT);
}

TEST(CApiTest, EdgeListFiles) {
  zg_graph* g = nullptr;
  ASSERT_EQ(zg_graph_read_edge_list(DataPath("k4.txt").c_str(), 0, &g), ZG_OK);
  EXPECT_EQ(zg_graph_edge_count(g), 6u);
  zg_graph_free(g);
  ASSERT_EQ(zg_graph_read_edge_list(DataPath("p3.txt").c_str(), 5, &g), ZG_OK);
  EXPECT_EQ(zg_graph_vertex_count(g), 5u);
  zg_graph_free(g);

  EXPECT_EQ(zg_graph_read_edge_list(DataPath("malformed.txt").c_str(), 0, &g),
            ZG_ERR_PARSE);
  EXPECT_EQ(zg_last_error_line(), 2);
  EXPECT_EQ(zg_graph_read_edge_list(DataPath("duplicate.txt").c_str(), 0, &g),
            ZG_ERR_PARSE);
  EXPECT_EQ(zg_last_error_line(), 2);
  EXPECT_EQ(zg_graph_read_edge_list(DataPath("missing.txt").c_str(), 0, &g),
            ZG_ERR_IO);
}

TEST(CApiTest, SamplersAgree) {
  zg_graph* g = nullptr;
  zg_degrees* d = nullptr;
  zg_degrees* from_graph = nullptr;
  ASSERT_EQ(zg_graph_sample(200, 0.05, 42, 3, &g), ZG_OK);
  ASSERT_EQ(zg_degrees_sample(200, 0.05, 42, 3, &d), ZG_OK);
  ASSERT_EQ(zg_degrees_of(g, &from_graph), ZG_OK);
  for (size_t i = 0; i < 200; ++i) {
    EXPECT_EQ(zg_degrees_get(d, i), zg_degrees_get(from_graph, i));
  }
  zg_degrees_free(from_graph);
  zg_degrees_free(d);
  zg_graph_free(g);
  EXPECT_EQ(zg_degrees_sample(10, 1.0, 1, 1, &d), ZG_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(zg_graph_sample(200000, 1e-6, 1, 1, &g), ZG_ERR_SIZE_GUARD);
}

TEST(CApiTest, Moments) {
  zg_moments* m = nullptr;
  ASSERT_EQ(zg_moments_compute(3, 0.5, 2, ZG_MOMENTS_EXACT, ZG_VECTOR_ZAGREB, &m),
            ZG_OK);
  EXPECT_EQ(zg_moments_dim(m), 2u);
  EXPECT_STREQ(zg_moments_label(m, 1), "Z2");
  EXPECT_DOUBLE_EQ(zg_moments_mean(m, 1), 4.5);
  EXPECT_DOUBLE_EQ(zg_moments_cov(m, 0, 0), 3.0);
  EXPECT_DOUBLE_EQ(zg_moments_cov(m, 1, 1), 12.75);
  zg_moments_free(m);

  zg_moments* e = nullptr;
  ASSERT_EQ(zg_moments_compute(3, 0.5, 2, ZG_MOMENTS_ENUMERATE,
                               ZG_VECTOR_STARS, &e),
            ZG_OK);
  EXPECT_STREQ(zg_moments_label(e, 0), "S2");
  EXPECT_DOUBLE_EQ(zg_moments_mean(e, 0), 3.0);
  EXPECT_EQ(std::string(zg_moments_source(e)).empty(), false);
  zg_moments_free(e);

  EXPECT_EQ(zg_moments_compute(8, 0.5, 2, ZG_MOMENTS_ENUMERATE,
                               ZG_VECTOR_ZAGREB, &e),
            ZG_ERR_SIZE_GUARD);
  EXPECT_EQ(zg_moments_compute(3, 0.5, 2, static_cast<zg_moment_mode>(9),
                               ZG_VECTOR_ZAGREB, &e),
            ZG_ERR_INVALID_ARGUMENT);
}

TEST(CApiTest, RegimesAndLaws) {
  double p = 0.0;
  ASSERT_EQ(zg_plaw_evaluate("1*n^-1", 2000, &p), ZG_OK);
  EXPECT_DOUBLE_EQ(p, 5e-4);
  EXPECT_EQ(zg_plaw_evaluate("2*n^", 10, &p), ZG_ERR_PARSE);
  EXPECT_EQ(zg_last_error_column(), 4);
  EXPECT_EQ(zg_plaw_evaluate("1.5", 10, &p), ZG_ERR_DOMAIN);

  zg_regime* r = nullptr;
  ASSERT_EQ(zg_regime_classify("1-2*n^-1", 2, &r), ZG_OK);
  EXPECT_STREQ(zg_regime_name(r), "CLT-Single");
  EXPECT_STREQ(zg_regime_law(r), "1-2*n^-1");
  EXPECT_EQ(zg_regime_joint_law_open(r), 1);
  EXPECT_EQ(zg_regime_single_index_normal(r), 1);
  EXPECT_EQ(zg_regime_n0(r), 3u);
  EXPECT_EQ(zg_regime_parameter(r, &p), 0);
  EXPECT_GT(zg_regime_also_holds_count(r), 0u);
  EXPECT_EQ(zg_regime_also_holds(r, 1000), nullptr);
  zg_regime_free(r);

  ASSERT_EQ(zg_regime_classify("2*n^-2", 3, &r), ZG_OK);
  EXPECT_STREQ(zg_regime_name(r), "PoissonHalfLambda");
  EXPECT_EQ(zg_regime_parameter(r, &p), 1);
  EXPECT_EQ(p, 2.0);
  zg_regime_free(r);

  double sigma[9];
  ASSERT_EQ(zg_sigma_zagreb(1.0, 3, sigma), ZG_OK);
  EXPECT_DOUBLE_EQ(sigma[8], 278.0);
  EXPECT_DOUBLE_EQ(sigma[1], 6.0);
  ASSERT_EQ(zg_sigma_star(1.0, 2, sigma), ZG_OK);
  EXPECT_DOUBLE_EQ(sigma[3], 2.5);
  double det = 0.0;
  ASSERT_EQ(zg_sigma_star_det(1.0, 2, &det), ZG_OK);
  EXPECT_DOUBLE_EQ(det, 1.0);
  EXPECT_EQ(zg_sigma_star(0.0, 2, sigma), ZG_ERR_DOMAIN);

  double centers[1], scales[1], target[1];
  const char* kind = nullptr;
  ASSERT_EQ(zg_standardizer("0.5", 1000, 1, centers, scales, target, &kind),
            ZG_OK);
  EXPECT_NEAR(scales[0], 707.1, 0.05);
  EXPECT_STREQ(kind, "Ones");
  EXPECT_EQ(target[0], 1.0);
  EXPECT_EQ(zg_standardizer("2*n^-2", 1000, 1, centers, scales, target, &kind),
            ZG_ERR_REGIME);
}

TEST(CApiTest, GoodnessOfFit) {
  std::vector<double> zeros(100, 0.0);
  zg_test_result t{};
  ASSERT_EQ(zg_ks_test_normal(zeros.data(), zeros.size(), 0.01, &t), ZG_OK);
  EXPECT_STREQ(t.name, "ks-normal");
  EXPECT_EQ(t.pass, 0);
  EXPECT_DOUBLE_EQ(t.statistic, 0.5);
  EXPECT_EQ(zg_ks_test_normal(zeros.data(), 10, 0.01, &t),
            ZG_ERR_INVALID_ARGUMENT);

  const uint64_t hist[] = {10000};
  ASSERT_EQ(zg_chisq_test_poisson(hist, 1, 1.0, 0.01, &t), ZG_OK);
  EXPECT_STREQ(t.name, "chisq-poisson");
  EXPECT_EQ(t.pass, 0);
}

zg_mc_config BaseConfig() {
  zg_mc_config c{};
  c.n = 60;
  c.p = 0.1;
  c.k = 2;
  c.replicates = 200;
  c.master_seed = 42;
  c.collect_zagreb = 1;
  c.collect_stars = 1;
  return c;
}

TEST(CApiTest, SampleRunAndCsv) {
  zg_mc_config c = BaseConfig();
  zg_samples* s = nullptr;
  ASSERT_EQ(zg_sample_run(&c, &s), ZG_OK);
  EXPECT_EQ(zg_samples_rows(s), 200u);
  ASSERT_EQ(zg_samples_cols(s), 4u);
  EXPECT_STREQ(zg_samples_label(s, 3), "S3");
  EXPECT_DOUBLE_EQ(zg_samples_p(s), 0.1);
  EXPECT_EQ(std::string(zg_samples_exact(s, 5, 0)),
            std::string(zg_samples_exact(s, 5, 2)));
  EXPECT_EQ(zg_samples_exact(s, 200, 0), nullptr);
  EXPECT_EQ(zg_samples_test_count(s), 0u);

  zg_degrees* d = nullptr;
  ASSERT_EQ(zg_degrees_sample(60, 0.1, 42, 5, &d), ZG_OK);
  zg_intvec* z = nullptr;
  ASSERT_EQ(zg_zagreb_vector(d, 2, &z), ZG_OK);
  EXPECT_STREQ(zg_samples_exact(s, 5, 1), zg_intvec_string(z, 1));
  zg_intvec_free(z);
  zg_degrees_free(d);

  zg_moments* m = nullptr;
  ASSERT_EQ(zg_samples_moments(s, &m), ZG_OK);
  EXPECT_EQ(zg_moments_dim(m), 4u);
  EXPECT_STREQ(zg_moments_source(m), "montecarlo");
  zg_moments_free(m);

  const std::string path = testing::TempDir() + "/zg_capi_samples.csv";
  ASSERT_EQ(zg_samples_write_csv(s, path.c_str()), ZG_OK);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "replicate,Z1,Z2,S2,S3");
  EXPECT_EQ(zg_samples_write_csv(s, "/nonexistent/dir/x.csv"), ZG_ERR_IO);
  zg_samples_free(s);
}

TEST(CApiTest, SampleRunWorkersAndTests) {
  zg_mc_config c = BaseConfig();
  zg_samples* one = nullptr;
  zg_samples* many = nullptr;
  ASSERT_EQ(zg_sample_run(&c, &one), ZG_OK);
  c.workers = 8;
  ASSERT_EQ(zg_sample_run(&c, &many), ZG_OK);
  for (uint64_t r = 0; r < 200; ++r) {
    for (size_t j = 0; j < 4; ++j) {
      ASSERT_EQ(zg_samples_value(one, r, j), zg_samples_value(many, r, j));
    }
  }
  zg_samples_free(one);
  zg_samples_free(many);

  zg_mc_config law = BaseConfig();
  law.n = 100;
  law.plaw = "2*n^-2";
  law.k = 1;
  law.collect_stars = 0;
  law.replicates = 10000;
  law.workers = 4;
  law.tests = "poisson";
  zg_samples* s = nullptr;
  ASSERT_EQ(zg_sample_run(&law, &s), ZG_OK);
  EXPECT_DOUBLE_EQ(zg_samples_p(s), 2e-4);
  ASSERT_EQ(zg_samples_test_count(s), 1u);
  zg_test_result t{};
  ASSERT_EQ(zg_samples_test(s, 0, &t), ZG_OK);
  EXPECT_STREQ(t.name, "chisq-poisson:Z1/2");
  EXPECT_EQ(t.pass, 1);
  EXPECT_EQ(t.alpha, 0.01);
  EXPECT_EQ(zg_samples_test(s, 1, &t), ZG_ERR_INVALID_ARGUMENT);
  zg_samples_free(s);

  law.tests = "poisson,bogus";
  EXPECT_EQ(zg_sample_run(&law, &s), ZG_ERR_INVALID_ARGUMENT);
  law.tests = nullptr;
  law.plaw = "2*n^";
  EXPECT_EQ(zg_sample_run(&law, &s), ZG_ERR_PARSE);
}

TEST(CApiTest, Verify) {
  std::vector<std::string> names;
  for (size_t i = 0; zg_verify_suite_name_at(i) != nullptr; ++i) {
    names.push_back(zg_verify_suite_name_at(i));
  }
  ASSERT_EQ(names.size(), 10u);
  EXPECT_EQ(names[0], "identity");

  zg_verify_report* r = nullptr;
  ASSERT_EQ(zg_verify_run("matrices", 42, 1, &r), ZG_OK);
  ASSERT_EQ(zg_verify_suite_count(r), 1u);
  EXPECT_STREQ(zg_verify_suite(r, 0), "matrices");
  EXPECT_EQ(zg_verify_criterion(r, 0), 3);
  EXPECT_EQ(zg_verify_pass(r, 0), 1);
  EXPECT_GE(zg_verify_seconds(r, 0), 0.0);
  ASSERT_GT(zg_verify_check_count(r, 0), 0u);
  zg_check check{};
  ASSERT_EQ(zg_verify_check(r, 0, 0, &check), ZG_OK);
  EXPECT_NE(check.name, nullptr);
  EXPECT_EQ(zg_verify_check(r, 0, 10000, &check), ZG_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(zg_verify_test_count(r, 0), 0u);
  zg_verify_free(r);

  EXPECT_EQ(zg_verify_run("nope", 42, 1, &r), ZG_ERR_INVALID_ARGUMENT);
}

TEST(CApiTest, NullHandlesAreSafe) {
  zg_intvec_free(nullptr);
  zg_graph_free(nullptr);
  zg_degrees_free(nullptr);
  zg_moments_free(nullptr);
  zg_regime_free(nullptr);
  zg_samples_free(nullptr);
  zg_verify_free(nullptr);
  EXPECT_EQ(zg_intvec_size(nullptr), 0u);
  EXPECT_EQ(zg_graph_edge_count(nullptr), 0u);
  EXPECT_EQ(zg_degrees_count(nullptr), 0u);
  EXPECT_EQ(zg_moments_dim(nullptr), 0u);
  EXPECT_EQ(zg_regime_name(nullptr), nullptr);
  EXPECT_EQ(zg_samples_rows(nullptr), 0u);
  EXPECT_EQ(zg_verify_suite_count(nullptr), 0u);
  zg_degrees* d = nullptr;
  EXPECT_EQ(zg_degrees_of(nullptr, &d), ZG_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(zg_sample_run(nullptr, nullptr), ZG_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(zg_plaw_evaluate(nullptr, 3, nullptr), ZG_ERR_INVALID_ARGUMENT);
}

TEST(CApiTest, LastErrorIsPerThreadAndResetOnSuccess) {
  zg_intvec* v = nullptr;
  EXPECT_EQ(zg_stirling2(100, 2, &v), ZG_ERR_DOMAIN);
  const std::string main_error = zg_last_error();
  EXPECT_FALSE(main_error.empty());
  std::string other;
  std::thread([&] { other = zg_last_error(); }).join();
  EXPECT_EQ(other, "");
  EXPECT_EQ(zg_last_error(), main_error);
  ASSERT_EQ(zg_stirling2(3, 2, &v), ZG_OK);
  EXPECT_STREQ(zg_last_error(), "");
  EXPECT_EQ(zg_last_error_line(), -1);
  zg_intvec_free(v);
}

}  // namespace
