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

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "blognet/config.hpp"
#include "blognet/errors.hpp"
#include "blognet/pipeline.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitData = 2;

struct CommandLine {
  std::string config_path;
  std::optional<std::string> out_dir;
  std::map<std::string, std::optional<std::string>> overrides;  // key -> value
};

void add_common_options(CLI::App& cmd, CommandLine& cl) {
  cmd.add_option("-c,--config", cl.config_path, "JSON configuration file");
  cmd.add_option("-o,--out-dir", cl.out_dir, "Directory receiving stage outputs");
  for (const auto& key : blognet::config_keys()) {
    if (blognet::flag_for_key(key) == "out-dir") continue;
    auto& slot = cl.overrides[key];
    cmd.add_option("--" + blognet::flag_for_key(key), slot, "Overrides " + key)->group("Overrides");
  }
}

blognet::PipelineConfig resolve_config(const CommandLine& cl) {
  blognet::PipelineConfig config =
      cl.config_path.empty() ? blognet::PipelineConfig{} : blognet::load_config(cl.config_path);
  std::vector<std::string> problems;
  for (const auto& [key, value] : cl.overrides) {
    if (value) blognet::apply_override(config, key, *value, problems);
  }
  if (cl.out_dir) config.out_dir = *cl.out_dir;
  blognet::ensure_valid(config, std::move(problems));
  return config;
}

int run(const std::vector<blognet::pipeline::Stage>& stages, const CommandLine& cl) {
  const auto config = resolve_config(cl);
  for (const auto stage : stages) {
    const auto outcome = blognet::pipeline::run_stage(stage, config);
    std::cout << outcome.summary << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Blog network preprocessing and analysis pipeline", "blognet"};
  app.require_subcommand(1);

  CommandLine cl;
  std::vector<blognet::pipeline::Stage> selected;
  for (const auto stage : blognet::pipeline::kAllStages) {
    const std::string name(blognet::pipeline::to_string(stage));
    auto* cmd = app.add_subcommand(name, "Run the " + name + " stage");
    add_common_options(*cmd, cl);
    cmd->callback([&selected, stage] { selected = {stage}; });
  }
  auto* all = app.add_subcommand("all", "Run every stage in order");
  add_common_options(*all, cl);
  all->callback([&selected] {
    selected.assign(std::begin(blognet::pipeline::kAllStages), std::end(blognet::pipeline::kAllStages));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    return run(selected, cl);
  } catch (const blognet::ConfigError& e) {
    std::cerr << "configuration error:\n";
    for (const auto& p : e.problems()) std::cerr << "  " << p << '\n';
    return kExitValidation;
  } catch (const blognet::InvalidArgumentError& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kExitValidation;
  } catch (const blognet::StageDependencyError& e) {
    std::cerr << "stage dependency error: " << e.what() << '\n';
    return kExitData;
  } catch (const blognet::Error& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "filesystem error: " << e.what() << '\n';
    return kExitData;
  }
}
