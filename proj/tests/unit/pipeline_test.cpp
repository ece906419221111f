// Copyright 2026 The blognet Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "blognet/errors.hpp"
#include "blognet/pipeline.hpp"
#include "json.hpp"

namespace blognet::pipeline {
namespace {

namespace fs = std::filesystem;

const fs::path kFixture = BLOGNET_FIXTURE_DIR;

class PipelineTest : public ::testing::Test {
 protected:
  void SetUp() override {
    out_ = fs::temp_directory_path() /
           ("blognet_pipeline_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(out_);
    config_ = load_config(kFixture / "config.json");
    config_.out_dir = out_.string();
  }
  void TearDown() override { fs::remove_all(out_); }

  nlohmann::json manifest(Stage stage) const {
    std::ifstream in(stage_dir(config_, stage) / "manifest.json");
    return nlohmann::json::parse(in);
  }

  fs::path out_;
  PipelineConfig config_;
};

TEST_F(PipelineTest, DownstreamStageNeedsUpstream) {
  try {
    run_stage(Stage::kRank, config_);
    FAIL() << "expected StageDependencyError";
  } catch (const StageDependencyError& e) {
    EXPECT_NE(e.missing_file().find("clean"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("manifest.json"), std::string::npos);
  }
}

TEST_F(PipelineTest, InvalidConfigIsRejectedBeforeWork) {
  config_.ranking.damping = 2.0;
  EXPECT_THROW(run_stage(Stage::kIngest, config_), ConfigError);
  EXPECT_FALSE(fs::exists(out_));
}

TEST_F(PipelineTest, ManifestCountersBalance) {
  run_all(config_);
  const auto ingest = manifest(Stage::kIngest)["counts"];
  for (const char* file : {"posts", "comments", "blogroll", "profiles"}) {
    const auto& c = ingest[file];
    EXPECT_EQ(c["lines"].get<int>(), c["accepted"].get<int>() + c["quarantined"].get<int>()) << file;
  }
  const auto build = manifest(Stage::kBuild)["counts"]["layers"];
  for (const auto& [name, c] : build.items()) {
    EXPECT_EQ(c["edges_extracted"].get<int>(),
              c["edges_kept"].get<int>() + c["edges_dropped_external"].get<int>() +
                  c["edges_dropped_self_loop"].get<int>())
        << name;
  }
  const auto clean = manifest(Stage::kClean)["counts"];
  EXPECT_EQ(clean["nodes_in"].get<int>(), clean["nodes_out"].get<int>() +
                                              clean["nodes_dropped_isolated"].get<int>() +
                                              clean["nodes_dropped_small_components"].get<int>());
  EXPECT_EQ(clean["arcs_in"].get<int>(), clean["arcs_out"].get<int>() + clean["arcs_dropped_isolated"].get<int>() +
                                             clean["arcs_dropped_small_components"].get<int>());
  const auto prep = manifest(Stage::kPrep)["counts"];
  EXPECT_EQ(prep["posts_in"].get<int>(), prep["posts_used"].get<int>() + prep["posts_dropped_inactive"].get<int>());
}

TEST_F(PipelineTest, ManifestEchoesConfigAndHashes) {
  run_stage(Stage::kIngest, config_);
  const auto m = manifest(Stage::kIngest);
  EXPECT_EQ(m["stage"], "ingest");
  EXPECT_EQ(m["format_version"], 1);
  EXPECT_EQ(m["config"]["ranking"]["damping"], 0.85);
  EXPECT_EQ(m["config"]["graph"]["min_component_size"], 10);
  ASSERT_EQ(m["inputs"].size(), 4u);
  EXPECT_EQ(m["inputs"][0]["sha256"].get<std::string>().size(), 64u);
}

TEST_F(PipelineTest, ReportHasBeforeAfterTable) {
  run_all(config_);
  std::ifstream in(stage_dir(config_, Stage::kReport) / "report.md");
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_NE(text.str().find("| primary | 20 | 16 | 1.6000 | 0.042105 |"), std::string::npos);
  EXPECT_NE(text.str().find("| preprocessed | 11 | 12 | 2.1818 | 0.109091 |"), std::string::npos);
  for (const char* h : {"scc_histogram", "indegree_distribution", "posts_by_hour", "posts_by_month",
                        "comments_per_post", "age_histogram"}) {
    EXPECT_TRUE(fs::exists(stage_dir(config_, Stage::kReport) / (std::string(h) + ".csv"))) << h;
  }
}

TEST_F(PipelineTest, MissingInputIsDataError) {
  config_.ingest.posts = (out_ / "absent.jsonl").string();
  EXPECT_THROW(run_stage(Stage::kIngest, config_), MissingFileError);
}

int cli(const std::string& args) {
  const int status = std::system((std::string(BLOGNET_CLI) + " " + args + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST_F(PipelineTest, CliExitCodes) {
  const std::string config = "--config " + (kFixture / "config.json").string();
  const std::string out = " --out-dir " + out_.string();
  EXPECT_EQ(cli("rank " + config + out), 2);
  EXPECT_EQ(cli("ingest " + config + out + " --damping 7"), 1);
  EXPECT_EQ(cli("ingest " + config + out + " --no-such-flag 1"), 1);
  EXPECT_EQ(cli("frobnicate"), 1);
  EXPECT_EQ(cli("ingest " + config + out), 0);
  EXPECT_EQ(cli("all " + config + out + " --min-component-size 3"), 0);
  EXPECT_EQ(manifest(Stage::kClean)["counts"]["nodes_out"], 14);
}

}  // namespace
}  // namespace blognet::pipeline
