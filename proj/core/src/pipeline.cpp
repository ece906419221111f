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

#include "blognet/pipeline.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include <openssl/evp.h>

#include "blognet/documents.hpp"
#include "blognet/errors.hpp"
#include "blognet/graphbuild.hpp"
#include "blognet/graphclean.hpp"
#include "blognet/ingest.hpp"
#include "blognet/profilestats.hpp"
#include "blognet/ranking.hpp"
#include "csv_util.hpp"
#include "json.hpp"

namespace blognet::pipeline {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

constexpr int kFormatVersion = 1;

std::string sha256_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingFileError(path.string());
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  char buf[1 << 16];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) {
    EVP_DigestUpdate(ctx, buf, static_cast<std::size_t>(in.gcount()));
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx, digest, &len);
  EVP_MD_CTX_free(ctx);
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int{digest[i]};
  return hex.str();
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  return out;
}

void write_json(const fs::path& path, const ordered_json& doc) {
  auto out = open_output(path);
  out << doc.dump(2) << '\n';
}

ordered_json read_json(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingFileError(path.string());
  ordered_json doc = ordered_json::parse(in, nullptr, false);
  if (doc.is_discarded()) throw DataError("corrupt JSON artifact: " + path.string());
  return doc;
}

// Shortest round-trip decimal.
std::string fmt_double(double x) {
  char buf[32];
  for (int precision = 15; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

std::string fmt_fixed(double x, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  return buf;
}

// Manifest skeleton shared by every stage.
class Manifest {
 public:
  Manifest(Stage stage, const PipelineConfig& config) : config_(config) {
    doc_["stage"] = std::string(to_string(stage));
    doc_["format_version"] = kFormatVersion;
    doc_["inputs"] = ordered_json::array();
    doc_["config"] = ordered_json::parse(config_snapshot(config));
    doc_["counts"] = ordered_json::object();
  }

  // Upstream artifacts are named relative to out_dir; raw inputs by their configured path.
  void add_input(const fs::path& path) {
    std::string name = path.string();
    const auto rel = path.lexically_relative(config_.out_dir);
    if (!rel.empty() && !rel.string().starts_with("..")) name = rel.generic_string();
    doc_["inputs"].push_back({{"path", name}, {"sha256", sha256_file(path)}});
  }

  ordered_json& counts() { return doc_["counts"]; }
  ordered_json& doc() { return doc_; }

  fs::path write(const fs::path& dir) const {
    const fs::path path = dir / "manifest.json";
    write_json(path, doc_);
    return path;
  }

 private:
  const PipelineConfig& config_;
  ordered_json doc_;
};

void require_upstream(Stage stage, const PipelineConfig& config) {
  for (const auto& path : stage_requirements(config, stage)) {
    if (!fs::exists(path)) throw StageDependencyError(std::string(to_string(stage)), path.string());
  }
}

fs::path prepare_dir(const PipelineConfig& config, Stage stage) {
  const fs::path dir = stage_dir(config, stage);
  fs::create_directories(dir);
  return dir;
}

UtcOffset configured_offset(const PipelineConfig& config) {
  return parse_utc_offset(config.ingest.utc_offset).value();
}

profilestats::ActivityWindow configured_window(const PipelineConfig& config) {
  const UtcOffset offset = configured_offset(config);
  profilestats::ActivityWindow w;
  w.start = parse_rfc3339(config.stats.window_start, offset).value();
  w.end = parse_rfc3339(config.stats.window_end, offset).value();
  w.min_posts = config.stats.min_posts;
  w.require_monthly = config.stats.require_monthly;
  w.offset = offset;
  return w;
}

graphbuild::UrlResolver configured_resolver(const PipelineConfig& config) {
  std::vector<graphbuild::HostPattern> patterns;
  for (const auto& p : config.graph.host_patterns) patterns.push_back(graphbuild::HostPattern::parse(p));
  return graphbuild::UrlResolver(std::move(patterns));
}

// ---------------------------------------------------------------- ingest

struct Ingested {
  std::vector<RawPost> posts;
  std::vector<RawComment> comments;
  std::vector<BlogrollRecord> blogroll;
  std::vector<ProfileRecord> profiles;
};

const char* const kIngestFiles[] = {"posts.jsonl", "comments.jsonl", "blogroll.jsonl", "profiles.jsonl"};

template <typename Record>
ordered_json load_counts(const ingest::LoadResult<Record>& r) {
  return {{"lines", r.lines}, {"accepted", r.records.size()}, {"quarantined", r.quarantined.size()}};
}

template <typename Record>
ingest::LoadResult<Record> empty_result() {
  return {};
}

StageOutcome run_ingest(const PipelineConfig& config) {
  const fs::path dir = prepare_dir(config, Stage::kIngest);
  Manifest manifest(Stage::kIngest, config);
  const ingest::IngestOptions options{configured_offset(config)};

  const auto optional_path = [](const std::string& p) { return p.empty() ? std::optional<fs::path>{} : fs::path(p); };

  auto posts = ingest::load_posts(fs::path(config.ingest.posts), options);
  manifest.add_input(config.ingest.posts);
  const auto ids = ingest::post_ids(posts.records);

  auto comments = empty_result<RawComment>();
  if (auto p = optional_path(config.ingest.comments)) {
    comments = ingest::load_comments(*p, ids, options);
    manifest.add_input(*p);
  }
  auto blogroll = empty_result<BlogrollRecord>();
  if (auto p = optional_path(config.ingest.blogroll)) {
    blogroll = ingest::load_blogroll(*p);
    manifest.add_input(*p);
  }
  auto profiles = empty_result<ProfileRecord>();
  if (auto p = optional_path(config.ingest.profiles)) {
    profiles = ingest::load_profiles(*p);
    manifest.add_input(*p);
  }

  { auto out = open_output(dir / kIngestFiles[0]); ingest::write_records(out, posts.records); }
  { auto out = open_output(dir / kIngestFiles[1]); ingest::write_records(out, comments.records); }
  { auto out = open_output(dir / kIngestFiles[2]); ingest::write_records(out, blogroll.records); }
  { auto out = open_output(dir / kIngestFiles[3]); ingest::write_records(out, profiles.records); }
  {
    auto out = open_output(dir / "quarantine.jsonl");
    ingest::write_quarantine(out, posts.quarantined);
    ingest::write_quarantine(out, comments.quarantined);
    ingest::write_quarantine(out, blogroll.quarantined);
    ingest::write_quarantine(out, profiles.quarantined);
  }

  auto& counts = manifest.counts();
  counts["posts"] = load_counts(posts);
  counts["comments"] = load_counts(comments);
  counts["blogroll"] = load_counts(blogroll);
  counts["profiles"] = load_counts(profiles);
  const std::size_t quarantined = posts.quarantined.size() + comments.quarantined.size() +
                                  blogroll.quarantined.size() + profiles.quarantined.size();
  counts["quarantined_total"] = quarantined;

  std::ostringstream summary;
  summary << "ingest: " << posts.records.size() << " posts, " << comments.records.size() << " comments, "
          << blogroll.records.size() << " blogroll links, " << profiles.records.size() << " profiles; "
          << quarantined << " quarantined";
  return {Stage::kIngest, manifest.write(dir), summary.str()};
}

Ingested load_ingested(const PipelineConfig& config, Manifest& manifest) {
  const fs::path dir = stage_dir(config, Stage::kIngest);
  Ingested data;
  data.posts = ingest::load_posts(dir / kIngestFiles[0]).records;
  data.comments = ingest::load_comments(dir / kIngestFiles[1], ingest::post_ids(data.posts)).records;
  data.blogroll = ingest::load_blogroll(dir / kIngestFiles[2]).records;
  data.profiles = ingest::load_profiles(dir / kIngestFiles[3]).records;
  for (const char* f : kIngestFiles) manifest.add_input(dir / f);
  return data;
}

// ---------------------------------------------------------------- prep

textprep::TfIdfVariant configured_variant(const PipelineConfig& config) {
  if (config.textprep.tfidf_variant == "log-ln") return textprep::TfIdfVariant::kLogTfLnIdf;
  if (config.textprep.tfidf_variant == "raw-smooth") return textprep::TfIdfVariant::kRawTfSmoothIdf;
  return textprep::TfIdfVariant::kRawTfLnIdf;
}

StageOutcome run_prep(const PipelineConfig& config) {
  const fs::path dir = prepare_dir(config, Stage::kPrep);
  Manifest manifest(Stage::kPrep, config);
  const Ingested data = load_ingested(config, manifest);

  const textprep::NormalizeOptions norm_options{config.textprep.unify_alef};
  textprep::EquivalenceDictionary dictionary;
  if (!config.textprep.equivalences.empty()) {
    dictionary = textprep::EquivalenceDictionary::load(config.textprep.equivalences, norm_options);
    manifest.add_input(config.textprep.equivalences);
  }
  textprep::Normalizer normalizer(norm_options, std::move(dictionary));
  textprep::StopList stoplist;
  if (config.textprep.stopwords.empty()) {
    stoplist = textprep::bundled_stopwords(normalizer);
  } else {
    stoplist = textprep::load_stopwords(config.textprep.stopwords, normalizer);
    manifest.add_input(config.textprep.stopwords);
  }
  const textprep::TextPipeline text(std::move(normalizer), std::move(stoplist));

  std::optional<std::set<BlogId>> active;
  if (config.textprep.active_only) active = profilestats::active_bloggers(data.posts, configured_window(config));
  const auto docs = textprep::build_documents(data.posts, text, active);

  textprep::VocabularyOptions vocab_options;
  vocab_options.min_df = config.textprep.min_df;
  vocab_options.max_df_ratio = config.textprep.max_df_ratio;
  if (config.textprep.vocabulary_top_k > 0) vocab_options.top_k = config.textprep.vocabulary_top_k;
  const auto vocab = textprep::build_vocabulary(docs, vocab_options);

  std::vector<textprep::DocumentVector> vectors;
  vectors.reserve(docs.size());
  for (const auto& doc : docs) vectors.push_back(textprep::vectorize_tfidf(doc, vocab, configured_variant(config)));
  const auto sim = textprep::similarity_matrix(vectors, static_cast<unsigned>(config.textprep.threads));

  {
    auto out = open_output(dir / "vocabulary.tsv");
    out << "term\tdf\n";
    for (std::size_t i = 0; i < vocab.size(); ++i) out << vocab.terms()[i] << '\t' << vocab.df()[i] << '\n';
  }
  {
    auto out = open_output(dir / "vectors.jsonl");
    for (const auto& v : vectors) {
      ordered_json j;
      j["blog_id"] = v.blog_id;
      j["terms"] = ordered_json::array();
      for (const auto& [index, w] : v.weights) j["terms"].push_back({index, w});
      out << j.dump() << '\n';
    }
  }
  {
    auto out = open_output(dir / "similarity.csv");
    out << "blog_id";
    for (const auto& id : sim.blog_ids()) out << ',' << detail::csv_field(id);
    out << '\n';
    for (std::size_t i = 0; i < sim.size(); ++i) {
      out << detail::csv_field(sim.blog_ids()[i]);
      for (std::size_t j = 0; j < sim.size(); ++j) out << ',' << fmt_double(sim.at(i, j));
      out << '\n';
    }
  }

  std::size_t tokens = 0;
  std::size_t posts_used = 0;
  for (const auto& d : docs) tokens += d.tokens.size();
  for (const auto& p : data.posts) {
    if (!active || active->contains(p.blog_id)) ++posts_used;
  }
  auto& counts = manifest.counts();
  counts["posts_in"] = data.posts.size();
  counts["posts_used"] = posts_used;
  counts["posts_dropped_inactive"] = data.posts.size() - posts_used;
  counts["active_blogs"] = active ? ordered_json(active->size()) : ordered_json(nullptr);
  counts["documents"] = docs.size();
  counts["tokens"] = tokens;
  counts["stopwords"] = text.stoplist().size();
  counts["vocabulary_size"] = vocab.size();

  std::ostringstream summary;
  summary << "prep: " << docs.size() << " documents, vocabulary of " << vocab.size() << " terms";
  return {Stage::kPrep, manifest.write(dir), summary.str()};
}

// ---------------------------------------------------------------- build

StageOutcome run_build(const PipelineConfig& config) {
  const fs::path dir = prepare_dir(config, Stage::kBuild);
  Manifest manifest(Stage::kBuild, config);
  const Ingested data = load_ingested(config, manifest);
  const auto resolver = configured_resolver(config);
  const auto universe = graphbuild::dataset_blogs(data.posts, data.comments, data.blogroll, data.profiles);
  const auto direction = config.graph.comment_direction == "author-to-commenter"
                             ? graphbuild::CommentDirection::kAuthorToCommenter
                             : graphbuild::CommentDirection::kCommenterToAuthor;

  std::vector<graphbuild::LayerEdges> extracted;
  extracted.push_back(graphbuild::extract_blogroll_edges(data.blogroll, resolver));
  extracted.push_back(graphbuild::extract_comment_edges(data.comments, data.posts, direction));
  extracted.push_back(graphbuild::extract_citation_edges(data.posts, resolver));
  extracted.push_back({graphbuild::LayerTag::kTrackback, {}, {}});

  auto& counts = manifest.counts();
  counts["dataset_blogs"] = universe.size();
  counts["layers"] = ordered_json::object();
  std::vector<std::vector<graphbuild::Edge>> cleaned_layers;
  for (auto& layer : extracted) {
    const std::string name(graphbuild::to_string(layer.layer));
    const std::size_t extracted_edges = layer.edges.size();
    auto external = graphbuild::drop_external_links(std::move(layer.edges), universe);
    auto loops = graphbuild::drop_self_loops(std::move(external.edges));
    {
      auto out = open_output(dir / ("edges_" + name + ".csv"));
      graphbuild::write_edges_csv(out, loops.edges);
    }
    const auto& s = layer.stats;
    counts["layers"][name] = {
        {"records", s.records},
        {"links", s.links},
        {"links_internal", s.internal},
        {"links_external", s.external},
        {"links_malformed", s.malformed},
        {"links_anonymous", s.anonymous},
        {"links_self_reference", s.self_references},
        {"edges_extracted", extracted_edges},
        {"edges_dropped_external", external.removed},
        {"edges_dropped_self_loop", loops.removed},
        {"edges_kept", loops.edges.size()},
    };
    cleaned_layers.push_back(std::move(loops.edges));
  }

  const auto graph = graphbuild::merge_layers(cleaned_layers, universe);
  const auto collapsed = graph.collapsed();
  {
    auto out = open_output(dir / "edges_merged.csv");
    graphbuild::write_edges_csv(out, graph.edges());
  }
  {
    auto out = open_output(dir / "nodes.txt");
    for (const auto& n : graph.nodes()) out << n << '\n';
  }
  {
    auto out = open_output(dir / "graph.dot");
    graphbuild::write_dot(out, collapsed);
  }
  {
    auto out = open_output(dir / "provenance.jsonl");
    for (const auto& e : graph.edges()) {
      ordered_json j;
      j["src"] = e.src;
      j["dst"] = e.dst;
      j["layer"] = std::string(graphbuild::to_string(e.layer));
      j["sources"] = e.provenance;
      out << j.dump() << '\n';
    }
  }
  counts["merged_nodes"] = graph.nodes().size();
  counts["merged_edges"] = graph.edges().size();
  counts["collapsed_arcs"] = collapsed.arc_count();

  std::ostringstream summary;
  summary << "build: " << graph.nodes().size() << " blogs, " << graph.edges().size() << " layered edges, "
          << collapsed.arc_count() << " arcs";
  return {Stage::kBuild, manifest.write(dir), summary.str()};
}

// ---------------------------------------------------------------- clean

graphclean::ClusteringVariant configured_clustering(const PipelineConfig& config) {
  return config.graph.clustering == "global-transitivity" ? graphclean::ClusteringVariant::kGlobalTransitivity
                                                          : graphclean::ClusteringVariant::kAverageLocal;
}

ordered_json metrics_json(const std::string& name, const graphclean::GraphMetrics& m) {
  return {{"network", name},
          {"nodes", m.nodes},
          {"edges", m.edges},
          {"degree_avg", m.degree_avg},
          {"density", m.density},
          {"clustering_coefficient", m.clustering_coefficient},
          {"scc_count", m.scc_count}};
}

std::vector<BlogId> read_lines(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingFileError(path.string());
  std::vector<BlogId> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

void write_arcs_csv(const fs::path& path, const SimpleDigraph& g) {
  auto out = open_output(path);
  out << "src,dst,weight\n";
  for (const Arc& a : g.arcs()) {
    out << detail::csv_field(g.label(a.src)) << ',' << detail::csv_field(g.label(a.dst)) << ','
        << fmt_double(a.weight) << '\n';
  }
}

SimpleDigraph read_arcs(const fs::path& nodes_path, const fs::path& arcs_path) {
  auto labels = read_lines(nodes_path);
  std::map<BlogId, NodeId> index;
  for (NodeId i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
  std::ifstream in(arcs_path, std::ios::binary);
  if (!in) throw MissingFileError(arcs_path.string());
  std::vector<Arc> arcs;
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = detail::split_csv_line(line);
    if (f.size() != 3 || !index.contains(f[0]) || !index.contains(f[1]))
      throw DataError("corrupt arc list: " + arcs_path.string());
    arcs.push_back({index.at(f[0]), index.at(f[1]), std::stod(f[2])});
  }
  const std::size_t n = labels.size();
  return SimpleDigraph::from_arcs(n, std::move(arcs), std::move(labels));
}

StageOutcome run_clean(const PipelineConfig& config) {
  const fs::path build = stage_dir(config, Stage::kBuild);
  const fs::path dir = prepare_dir(config, Stage::kClean);
  Manifest manifest(Stage::kClean, config);

  std::ifstream edges_in(build / "edges_merged.csv", std::ios::binary);
  if (!edges_in) throw MissingFileError((build / "edges_merged.csv").string());
  const graphbuild::LayeredGraph layered(read_lines(build / "nodes.txt"), graphbuild::read_edges_csv(edges_in));
  manifest.add_input(build / "nodes.txt");
  manifest.add_input(build / "edges_merged.csv");
  const auto variant = configured_clustering(config);

  ordered_json metrics;
  metrics["networks"] = ordered_json::array();
  for (const auto layer : graphbuild::kAllLayers) {
    metrics["networks"].push_back(
        metrics_json(std::string(graphbuild::to_string(layer)), graphclean::graph_metrics(layered.layer_view(layer), variant)));
  }
  const SimpleDigraph before = layered.collapsed();
  const auto before_metrics = graphclean::graph_metrics(before, variant);
  metrics["networks"].push_back(metrics_json("merged", before_metrics));

  const auto full_labeling = graphclean::strongly_connected_components(before);
  {
    auto out = open_output(dir / "scc_histogram.csv");
    out << "size,count\n";
    for (const auto& [size, count] : graphclean::scc_size_distribution(full_labeling)) out << size << ',' << count << '\n';
  }
  std::size_t giant_id = 0;
  for (std::size_t c = 0; c < full_labeling.sizes.size(); ++c) {
    if (full_labeling.sizes[c] > full_labeling.sizes[giant_id]) giant_id = c;
  }
  std::vector<bool> in_giant(before.node_count(), false);
  for (NodeId u = 0; u < before.node_count(); ++u) in_giant[u] = full_labeling.comp_id[u] == giant_id;
  const auto giant = before.induced_subgraph(in_giant);

  const auto rule = config.graph.isolation_rule == "no-links" ? graphclean::IsolationRule::kNoLinks
                                                              : graphclean::IsolationRule::kNoOutLinks;
  const SimpleDigraph pruned = graphclean::remove_isolated(before, rule);
  const auto labeling = graphclean::strongly_connected_components(pruned);
  const SimpleDigraph after = graphclean::filter_components(pruned, labeling, config.graph.min_component_size);
  const auto after_metrics = graphclean::graph_metrics(after, variant);

  metrics["before"] = metrics_json("primary", before_metrics);
  metrics["after"] = metrics_json("preprocessed", after_metrics);
  metrics["giant_component"] = {{"nodes", giant.node_count()}, {"edges", giant.arc_count()}};
  metrics["clustering_variant"] = config.graph.clustering;
  write_json(dir / "metrics.json", metrics);

  {
    auto out = open_output(dir / "nodes.txt");
    for (NodeId u = 0; u < after.node_count(); ++u) out << after.label(u) << '\n';
  }
  write_arcs_csv(dir / "edges.csv", after);

  std::size_t kept_components = 0;
  for (const std::size_t s : labeling.sizes) {
    if (s >= config.graph.min_component_size) ++kept_components;
  }
  auto& counts = manifest.counts();
  counts["nodes_in"] = before.node_count();
  counts["nodes_dropped_isolated"] = before.node_count() - pruned.node_count();
  counts["nodes_after_isolation"] = pruned.node_count();
  counts["nodes_dropped_small_components"] = pruned.node_count() - after.node_count();
  counts["nodes_out"] = after.node_count();
  counts["arcs_in"] = before.arc_count();
  counts["arcs_dropped_isolated"] = before.arc_count() - pruned.arc_count();
  counts["arcs_after_isolation"] = pruned.arc_count();
  counts["arcs_dropped_small_components"] = pruned.arc_count() - after.arc_count();
  counts["arcs_out"] = after.arc_count();
  counts["scc_before"] = full_labeling.component_count();
  counts["scc_after_isolation"] = labeling.component_count();
  counts["scc_kept"] = kept_components;

  std::ostringstream summary;
  summary << "clean: " << before.node_count() << " -> " << after.node_count() << " blogs, " << before.arc_count()
          << " -> " << after.arc_count() << " arcs";
  return {Stage::kClean, manifest.write(dir), summary.str()};
}

// ---------------------------------------------------------------- rank

StageOutcome run_rank(const PipelineConfig& config) {
  const fs::path clean = stage_dir(config, Stage::kClean);
  const fs::path dir = prepare_dir(config, Stage::kRank);
  Manifest manifest(Stage::kRank, config);
  const SimpleDigraph g = read_arcs(clean / "nodes.txt", clean / "edges.csv");
  manifest.add_input(clean / "nodes.txt");
  manifest.add_input(clean / "edges.csv");

  const std::optional<std::size_t> top_k =
      config.ranking.top_k > 0 ? std::optional<std::size_t>(config.ranking.top_k) : std::nullopt;
  const auto write_listing = [&](const std::string& file, const ranking::RankScores& scores) {
    auto out = open_output(dir / file);
    ranking::write_ranking_csv(out, ranking::ranked_listing(scores, g, top_k));
  };

  auto& counts = manifest.counts();
  counts["nodes"] = g.node_count();
  counts["arcs"] = g.arc_count();

  write_listing("indegree.csv", ranking::indegree_rank(g));
  {
    auto out = open_output(dir / "indegree_distribution.csv");
    out << "indegree,count\n";
    for (const auto& [degree, count] : ranking::indegree_distribution(g)) out << degree << ',' << count << '\n';
  }

  ranking::PageRankOptions pr_options;
  pr_options.damping = config.ranking.damping;
  pr_options.tol = config.ranking.pagerank_tol;
  pr_options.max_iter = config.ranking.max_iter;
  pr_options.dangling = config.ranking.dangling == "self-absorb" ? ranking::DanglingPolicy::kSelfAbsorb
                                                                 : ranking::DanglingPolicy::kUniform;
  pr_options.weighted = config.ranking.weighted;
  const auto pr = ranking::pagerank(g, pr_options);
  write_listing("pagerank.csv", pr);
  counts["pagerank"] = {{"iterations", pr.iterations_used}, {"converged", pr.converged}};

  if (g.arc_count() > 0) {
    ranking::HitsOptions hits_options;
    hits_options.max_iter = config.ranking.max_iter;
    hits_options.tol = config.ranking.hits_tol;
    hits_options.normalization =
        config.ranking.hits_normalization == "l1" ? ranking::HitsNormalization::kL1 : ranking::HitsNormalization::kL2;
    const auto h = ranking::hits(g, hits_options);
    write_listing("hub.csv", h.hub);
    write_listing("authority.csv", h.authority);
    counts["hits"] = {{"iterations", h.hub.iterations_used}, {"converged", h.hub.converged}};
  } else {
    counts["hits"] = {{"iterations", 0}, {"converged", false}, {"skipped", "graph has no arcs"}};
  }

  std::ostringstream summary;
  summary << "rank: " << g.node_count() << " blogs ranked; PageRank " << pr.iterations_used << " iterations";
  return {Stage::kRank, manifest.write(dir), summary.str()};
}

// ---------------------------------------------------------------- stats

StageOutcome run_stats(const PipelineConfig& config) {
  const fs::path dir = prepare_dir(config, Stage::kStats);
  Manifest manifest(Stage::kStats, config);
  const Ingested data = load_ingested(config, manifest);
  const auto window = configured_window(config);
  const auto report = profilestats::build_report(data.posts, data.comments, data.profiles, window,
                                                 config.stats.comment_threshold);
  const auto& demo = report.demographics;

  ordered_json j;
  j["blogger_count"] = report.blogger_count;
  j["active_count"] = report.active_count;
  j["post_count"] = report.post_count;
  j["demographics"] = {
      {"profiles", demo.profiles},
      {"ages_present", demo.ages_present},
      {"age_mean", demo.age_mean ? ordered_json(*demo.age_mean) : ordered_json(nullptr)},
      {"age_median", demo.age_median ? ordered_json(*demo.age_median) : ordered_json(nullptr)},
      {"gender_counts", demo.gender_counts},
      {"male_to_female_ratio",
       demo.male_to_female_ratio ? ordered_json(*demo.male_to_female_ratio) : ordered_json(nullptr)},
      {"education_counts", demo.education_counts},
      {"marital_counts", demo.marital_counts},
  };
  j["posts_by_hour"] = report.posts_by_hour;
  j["posts_by_month"] = ordered_json::object();
  for (const auto& [ym, count] : report.posts_by_month) j["posts_by_month"][format_year_month(ym)] = count;
  const auto& c = report.comments;
  j["comments"] = {{"posts", c.posts},
                   {"matched_comments", c.matched_comments},
                   {"mean_per_post", c.mean},
                   {"threshold", c.threshold},
                   {"posts_over_threshold", c.posts_over_threshold}};
  write_json(dir / "stats.json", j);

  {
    auto out = open_output(dir / "posts_by_hour.csv");
    out << "hour,count\n";
    for (std::size_t h = 0; h < 24; ++h) out << h << ',' << report.posts_by_hour[h] << '\n';
  }
  {
    auto out = open_output(dir / "posts_by_month.csv");
    out << "month,count,percent\n";
    for (const auto& [ym, count] : report.posts_by_month) {
      const double pct = report.post_count == 0 ? 0.0 : 100.0 * static_cast<double>(count) / report.post_count;
      out << format_year_month(ym) << ',' << count << ',' << fmt_fixed(pct, 4) << '\n';
    }
  }
  {
    auto out = open_output(dir / "comments_per_post.csv");
    out << "comments,posts\n";
    for (const auto& [k, posts] : c.histogram) out << k << ',' << posts << '\n';
  }
  {
    auto out = open_output(dir / "age_histogram.csv");
    out << "age_from,age_to,count\n";
    for (const auto& [from, count] : demo.age_histogram)
      out << from << ',' << from + profilestats::kAgeBinWidth - 1 << ',' << count << '\n';
  }

  auto& counts = manifest.counts();
  counts["posts"] = report.post_count;
  counts["bloggers"] = report.blogger_count;
  counts["active_bloggers"] = report.active_count;
  counts["inactive_bloggers"] = report.blogger_count - report.active_count;
  counts["profiles"] = demo.profiles;
  counts["comments_matched"] = c.matched_comments;

  std::ostringstream summary;
  summary << "stats: " << report.active_count << " of " << report.blogger_count << " bloggers active, "
          << fmt_fixed(c.mean, 4) << " comments per post";
  return {Stage::kStats, manifest.write(dir), summary.str()};
}

// ---------------------------------------------------------------- report

ordered_json read_csv_rows(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingFileError(path.string());
  ordered_json rows = ordered_json::array();
  std::string line;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto fields = detail::split_csv_line(line);
    if (header.empty()) {
      header = std::move(fields);
      continue;
    }
    ordered_json row;
    for (std::size_t i = 0; i < header.size() && i < fields.size(); ++i) row[header[i]] = fields[i];
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string markdown_metrics_row(const ordered_json& m) {
  std::ostringstream row;
  row << "| " << m["network"].get<std::string>() << " | " << m["nodes"].get<std::size_t>() << " | "
      << m["edges"].get<std::size_t>() << " | " << fmt_fixed(m["degree_avg"].get<double>(), 4) << " | "
      << fmt_fixed(m["density"].get<double>(), 6) << " | "
      << fmt_fixed(m["clustering_coefficient"].get<double>(), 5) << " | " << m["scc_count"].get<std::size_t>()
      << " |\n";
  return row.str();
}

StageOutcome run_report(const PipelineConfig& config) {
  const fs::path dir = prepare_dir(config, Stage::kReport);
  Manifest manifest(Stage::kReport, config);
  const fs::path clean = stage_dir(config, Stage::kClean);
  const fs::path rank = stage_dir(config, Stage::kRank);
  const fs::path stats = stage_dir(config, Stage::kStats);

  const auto metrics = read_json(clean / "metrics.json");
  const auto stats_doc = read_json(stats / "stats.json");
  manifest.add_input(clean / "metrics.json");
  manifest.add_input(stats / "stats.json");

  ordered_json report;
  report["networks"] = metrics["networks"];
  report["before_after"] = ordered_json::array({metrics["before"], metrics["after"]});
  report["giant_component"] = metrics["giant_component"];
  report["statistics"] = stats_doc;

  const std::pair<const char*, fs::path> histograms[] = {
      {"scc_histogram", clean / "scc_histogram.csv"},
      {"indegree_distribution", rank / "indegree_distribution.csv"},
      {"posts_by_hour", stats / "posts_by_hour.csv"},
      {"posts_by_month", stats / "posts_by_month.csv"},
      {"comments_per_post", stats / "comments_per_post.csv"},
      {"age_histogram", stats / "age_histogram.csv"},
  };
  report["histograms"] = ordered_json::object();
  for (const auto& [name, path] : histograms) {
    report["histograms"][name] = read_csv_rows(path);
    manifest.add_input(path);
    fs::copy_file(path, dir / (std::string(name) + ".csv"), fs::copy_options::overwrite_existing);
  }

  report["top"] = ordered_json::object();
  for (const char* listing : {"indegree", "pagerank", "authority", "hub"}) {
    const fs::path path = rank / (std::string(listing) + ".csv");
    if (!fs::exists(path)) continue;
    auto rows = read_csv_rows(path);
    if (rows.size() > 10) rows.erase(rows.begin() + 10, rows.end());
    report["top"][listing] = std::move(rows);
    manifest.add_input(path);
  }
  write_json(dir / "report.json", report);

  {
    auto out = open_output(dir / "report.md");
    out << "# Blog network preprocessing report\n\n";
    out << "## Networks\n\n";
    out << "| Network | Nodes | Edges | Degree avg. | Density | Clustering | SCCs |\n";
    out << "|---|---|---|---|---|---|---|\n";
    for (const auto& m : metrics["networks"]) out << markdown_metrics_row(m);
    out << "\n## Before and after preprocessing\n\n";
    out << "| Network | Nodes | Edges | Degree avg. | Density | Clustering | SCCs |\n";
    out << "|---|---|---|---|---|---|---|\n";
    out << markdown_metrics_row(metrics["before"]) << markdown_metrics_row(metrics["after"]);
    out << "\nLargest strongly connected component: " << metrics["giant_component"]["nodes"].get<std::size_t>()
        << " nodes, " << metrics["giant_component"]["edges"].get<std::size_t>() << " edges.\n";
    out << "\n## Bloggers\n\n";
    out << "- bloggers with posts: " << stats_doc["blogger_count"].get<std::size_t>() << '\n';
    out << "- active bloggers: " << stats_doc["active_count"].get<std::size_t>() << '\n';
    out << "- comments per post: " << fmt_fixed(stats_doc["comments"]["mean_per_post"].get<double>(), 4) << '\n';
    out << "- posts with more than " << stats_doc["comments"]["threshold"].get<std::size_t>()
        << " comments: " << stats_doc["comments"]["posts_over_threshold"].get<std::size_t>() << '\n';
    const auto& age_mean = stats_doc["demographics"]["age_mean"];
    out << "- mean age: " << (age_mean.is_null() ? std::string("n/a") : fmt_fixed(age_mean.get<double>(), 2)) << '\n';
    out << "\nHistograms are written next to this file as CSV.\n";
  }

  return {Stage::kReport, manifest.write(dir), "report: " + (dir / "report.md").string()};
}

}  // namespace

std::string_view to_string(Stage stage) {
  switch (stage) {
    case Stage::kIngest: return "ingest";
    case Stage::kPrep: return "prep";
    case Stage::kBuild: return "build";
    case Stage::kClean: return "clean";
    case Stage::kRank: return "rank";
    case Stage::kStats: return "stats";
    case Stage::kReport: return "report";
  }
  return "ingest";
}

std::optional<Stage> parse_stage(std::string_view name) {
  for (const Stage s : kAllStages) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

fs::path stage_dir(const PipelineConfig& config, Stage stage) {
  return fs::path(config.out_dir) / std::string(to_string(stage));
}

std::vector<fs::path> stage_requirements(const PipelineConfig& config, Stage stage) {
  const auto manifest_of = [&](Stage s) { return stage_dir(config, s) / "manifest.json"; };
  switch (stage) {
    case Stage::kIngest: return {};
    case Stage::kPrep:
    case Stage::kBuild:
    case Stage::kStats: return {manifest_of(Stage::kIngest)};
    case Stage::kClean: return {manifest_of(Stage::kBuild)};
    case Stage::kRank: return {manifest_of(Stage::kClean)};
    case Stage::kReport: return {manifest_of(Stage::kClean), manifest_of(Stage::kRank), manifest_of(Stage::kStats)};
  }
  return {};
}

StageOutcome run_stage(Stage stage, const PipelineConfig& config) {
  ensure_valid(config);
  require_upstream(stage, config);
  switch (stage) {
    case Stage::kIngest: return run_ingest(config);
    case Stage::kPrep: return run_prep(config);
    case Stage::kBuild: return run_build(config);
    case Stage::kClean: return run_clean(config);
    case Stage::kRank: return run_rank(config);
    case Stage::kStats: return run_stats(config);
    case Stage::kReport: return run_report(config);
  }
  throw InvalidArgumentError("unknown stage");
}

std::vector<StageOutcome> run_all(const PipelineConfig& config) {
  std::vector<StageOutcome> outcomes;
  for (const Stage s : kAllStages) outcomes.push_back(run_stage(s, config));
  return outcomes;
}

}  // namespace blognet::pipeline
