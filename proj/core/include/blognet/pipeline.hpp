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

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "blognet/config.hpp"

namespace blognet::pipeline {

enum class Stage { kIngest, kPrep, kBuild, kClean, kRank, kStats, kReport };

inline constexpr Stage kAllStages[] = {Stage::kIngest, Stage::kPrep,  Stage::kBuild, Stage::kClean,
                                       Stage::kRank,   Stage::kStats, Stage::kReport};

std::string_view to_string(Stage stage);
std::optional<Stage> parse_stage(std::string_view name);

// <out_dir>/<stage name>
std::filesystem::path stage_dir(const PipelineConfig& config, Stage stage);

// Manifest files a stage reads before it can run.
std::vector<std::filesystem::path> stage_requirements(const PipelineConfig& config, Stage stage);

struct StageOutcome {
  Stage stage;
  std::filesystem::path manifest;
  std::string summary;  // one line for the console
};

// Runs one stage and writes its artifacts plus manifest.json under stage_dir().
// Throws StageDependencyError when an upstream manifest is missing, ConfigError on
// invalid configuration and the ingest/data errors of the underlying modules.
StageOutcome run_stage(Stage stage, const PipelineConfig& config);

// Every stage in order.
std::vector<StageOutcome> run_all(const PipelineConfig& config);

}  // namespace blognet::pipeline
