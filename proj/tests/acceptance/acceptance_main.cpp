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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the number of
// failing criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "blognet/graphclean.hpp"
#include "blognet/normalize.hpp"
#include "blognet/pipeline.hpp"
#include "blognet/profilestats.hpp"
#include "blognet/ranking.hpp"
#include "blognet/tfidf.hpp"
#include "blognet/tokenize.hpp"
#include "json.hpp"
#include "support/oracles.hpp"

namespace {

namespace fs = std::filesystem;
using namespace blognet;
using nlohmann::json;

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool condition, const std::string& what) {
    if (!condition && ok) detail = what;
    ok = ok && condition;
  }
  void near(double actual, double expected, double tol, const std::string& what) {
    std::ostringstream msg;
    msg.precision(17);
    msg << what << ": got " << actual << ", want " << expected << " +- " << tol;
    expect(std::fabs(actual - expected) <= tol, msg.str());
  }
};

int g_failures = 0;

void report(int id, const std::string& title, const std::function<Check()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Check result;
  try {
    result = body();
  } catch (const std::exception& e) {
    result.ok = false;
    result.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("[%s] %d. %s (%.2fs)%s%s\n", result.ok ? "PASS" : "FAIL", id, title.c_str(), secs,
              result.detail.empty() ? "" : " -- ", result.detail.c_str());
  std::fflush(stdout);
  if (!result.ok) ++g_failures;
}

// ---------------------------------------------------------------- 1

Check table_formulas() {
  Check c;
  struct Row {
    std::size_t n, e;
    double degree, degree_tol, density, density_tol;
  };
  const Row rows[] = {
      {21305, 257316, 24.1554, 1e-4, 0.000567, 1e-6},
      {11187, 92703, 16.57, 0.01, 0.000741, 5e-7},
      {4664, 10528, 4.51, 0.01, 0.000484, 5e-7},
      {9065, 222216, 49.0272, 1e-4, 0.002704, 1e-6},
  };
  for (const Row& r : rows) {
    const auto m = graphclean::metrics_from_counts(r.n, r.e);
    const std::string tag = "(" + std::to_string(r.n) + "," + std::to_string(r.e) + ")";
    c.near(m.degree_avg, r.degree, r.degree_tol, tag + " degree");
    c.near(m.density, r.density, r.density_tol, tag + " density");
  }
  return c;
}

// ---------------------------------------------------------------- 2

Check scc_oracle() {
  Check c;
  std::mt19937_64 rng(20240501);
  std::uniform_int_distribution<std::size_t> size(1, 12);
  const double probabilities[] = {0.1, 0.3, 0.5};
  for (int t = 0; t < 500; ++t) {
    const auto g = testing::random_digraph(size(rng), probabilities[t % 3], rng);
    c.expect(graphclean::strongly_connected_components(g).comp_id == testing::scc_by_closure(g),
             "labeling differs on case " + std::to_string(t));
  }
  return c;
}

// ---------------------------------------------------------------- 3

Check pagerank_oracle() {
  Check c;
  std::mt19937_64 rng(8675309);
  std::uniform_int_distribution<std::size_t> size(1, 8);
  std::uniform_real_distribution<double> density(0.05, 0.7);
  for (int t = 0; t < 200; ++t) {
    const auto g = testing::random_digraph(size(rng), density(rng), rng);
    const auto pr = ranking::pagerank(g);
    const auto oracle = testing::dense_pagerank(g, 0.85);
    double sum = 0.0;
    for (std::size_t i = 0; i < g.node_count(); ++i) {
      c.near(pr.scores[i], oracle(static_cast<Eigen::Index>(i)), 1e-8, "case " + std::to_string(t));
      sum += pr.scores[i];
    }
    c.near(sum, 1.0, 1e-9, "sum on case " + std::to_string(t));
  }
  for (std::size_t n = 2; n <= 64; ++n) {
    std::vector<Arc> arcs;
    for (NodeId u = 0; u < n; ++u) arcs.push_back({u, static_cast<NodeId>((u + 1) % n), 1.0});
    const auto pr = ranking::pagerank(SimpleDigraph::from_arcs(n, std::move(arcs)));
    for (double s : pr.scores) c.near(s, 1.0 / static_cast<double>(n), 1e-12, "cycle " + std::to_string(n));
  }
  return c;
}

// ---------------------------------------------------------------- 4

Check hits_oracle() {
  Check c;
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<std::size_t> size(2, 8);
  std::uniform_real_distribution<double> density(0.1, 0.7);
  std::size_t max_iterations = 0;
  for (int t = 0; t < 200; ++t) {
    SimpleDigraph g;
    do {
      g = testing::random_digraph(size(rng), density(rng), rng);
    } while (g.arc_count() == 0);
    const auto h = ranking::hits(g);
    const auto oracle = testing::dense_hits(g);
    c.expect(h.hub.converged && h.authority.converged, "no convergence on case " + std::to_string(t));
    c.expect(h.hub.iterations_used > 0, "iterations not reported on case " + std::to_string(t));
    max_iterations = std::max(max_iterations, h.hub.iterations_used);
    for (std::size_t i = 0; i < g.node_count(); ++i) {
      const auto k = static_cast<Eigen::Index>(i);
      c.near(h.authority.scores[i], oracle.authority(k), 1e-8, "authority, case " + std::to_string(t));
      c.near(h.hub.scores[i], oracle.hub(k), 1e-8, "hub, case " + std::to_string(t));
    }
  }
  for (std::size_t leaves = 1; leaves <= 12; ++leaves) {
    std::vector<Arc> out_star;
    std::vector<Arc> in_star;
    for (NodeId v = 1; v <= leaves; ++v) {
      out_star.push_back({0, v, 1.0});
      in_star.push_back({v, 0, 1.0});
    }
    const double leaf = 1.0 / std::sqrt(static_cast<double>(leaves));
    const auto out = ranking::hits(SimpleDigraph::from_arcs(leaves + 1, std::move(out_star)));
    const auto in = ranking::hits(SimpleDigraph::from_arcs(leaves + 1, std::move(in_star)));
    const std::string tag = "star " + std::to_string(leaves);
    c.near(out.hub.scores[0], 1.0, 1e-12, tag);
    c.near(out.authority.scores[0], 0.0, 1e-12, tag);
    c.near(in.authority.scores[0], 1.0, 1e-12, tag);
    c.near(in.hub.scores[0], 0.0, 1e-12, tag);
    for (NodeId v = 1; v <= leaves; ++v) {
      c.near(out.authority.scores[v], leaf, 1e-12, tag);
      c.near(out.hub.scores[v], 0.0, 1e-12, tag);
      c.near(in.hub.scores[v], leaf, 1e-12, tag);
      c.near(in.authority.scores[v], 0.0, 1e-12, tag);
    }
  }
  if (c.ok) c.detail = "max iterations_used " + std::to_string(max_iterations);
  return c;
}

// ---------------------------------------------------------------- 5

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

std::vector<char32_t> decode_utf8(const std::string& s) {
  std::vector<char32_t> cps;
  for (std::size_t i = 0; i < s.size();) {
    const auto b = static_cast<unsigned char>(s[i]);
    const int len = b < 0x80 ? 1 : b < 0xE0 ? 2 : b < 0xF0 ? 3 : 4;
    char32_t cp = len == 1 ? b : len == 2 ? (b & 0x1F) : len == 3 ? (b & 0x0F) : (b & 0x07);
    for (int k = 1; k < len && i + k < s.size(); ++k) cp = (cp << 6) | (static_cast<unsigned char>(s[i + k]) & 0x3F);
    cps.push_back(cp);
    i += static_cast<std::size_t>(len);
  }
  return cps;
}

std::string fuzz_document(std::mt19937_64& rng) {
  static const std::vector<std::pair<char32_t, char32_t>> ranges = {
      {0x0621, 0x064A},  // Arabic letters
      {0x064B, 0x0652},  // harakat
      {0x0653, 0x0655},  // madda and hamza marks
      {0x0660, 0x0669},  // Arabic-Indic digits
      {0x06F0, 0x06F9},  // extended digits
      {0x067E, 0x067E}, {0x0686, 0x0686}, {0x0698, 0x0698}, {0x06A9, 0x06A9}, {0x06AF, 0x06AF},
      {0x06CC, 0x06CC},  // Persian letters
      {0x0640, 0x0640},  // tatweel
      {0x200C, 0x200D},  // ZWNJ, ZWJ
      {0x0041, 0x005A}, {0x0061, 0x007A}, {0x0030, 0x0039},
      {0x00C0, 0x00FF},  // Latin-1 letters
      {0x0300, 0x0308},  // combining marks
      {0x0410, 0x044F},  // Cyrillic
      {0x4E00, 0x4E20},  // CJK
      {0x1F600, 0x1F610},
      {0x0020, 0x002F}, {0x060C, 0x060C}, {0x061F, 0x061F}, {0x00A0, 0x00A0},
  };
  std::uniform_int_distribution<std::size_t> pick_range(0, ranges.size() - 1);
  std::uniform_int_distribution<int> length(0, 200);
  std::string doc;
  for (int i = length(rng); i > 0; --i) {
    const auto& [lo, hi] = ranges[pick_range(rng)];
    std::uniform_int_distribution<std::uint32_t> cp(lo, hi);
    append_utf8(doc, static_cast<char32_t>(cp(rng)));
  }
  return doc;
}

Check text_pipeline() {
  Check c;
  std::mt19937_64 rng(1337);
  for (const bool unify_alef : {true, false}) {
    textprep::NormalizeOptions options;
    options.unify_alef = unify_alef;
    for (int d = 0; d < 1000; ++d) {
      const std::string doc = fuzz_document(rng);
      const std::string once = textprep::normalize(doc, options);
      c.expect(textprep::normalize(once, options) == once, "not idempotent on document " + std::to_string(d));
      for (char32_t cp : decode_utf8(once)) {
        c.expect(!textprep::is_unification_source(cp, options),
                 "forbidden code point U+" + std::to_string(static_cast<unsigned>(cp)) + " in document " +
                     std::to_string(d));
      }
    }
  }

  std::uniform_int_distribution<int> term(0, 80);
  std::uniform_int_distribution<int> length(0, 60);
  for (int corpus = 0; corpus < 10; ++corpus) {
    std::vector<textprep::NormalizedDocument> docs;
    for (int d = 0; d < 50; ++d) {
      textprep::NormalizedDocument doc{"d" + std::to_string(d), {"common"}};
      for (int i = length(rng); i > 0; --i) doc.tokens.push_back("t" + std::to_string(term(rng)));
      docs.push_back(std::move(doc));
    }
    const auto vocab = textprep::build_vocabulary(docs, {});
    const auto common = vocab.index_of("common");
    c.expect(common.has_value(), "universal term missing from vocabulary");
    std::vector<textprep::DocumentVector> vectors;
    for (const auto& doc : docs) {
      vectors.push_back(textprep::vectorize_tfidf(doc, vocab));
      for (const auto& [index, w] : vectors.back().weights) {
        c.expect(index != *common, "universal term has non-zero weight");
      }
    }
    for (const unsigned threads : {1u, 3u, 8u}) {
      const auto matrix = textprep::similarity_matrix(vectors, threads);
      for (std::size_t i = 0; i < docs.size(); ++i) {
        const auto a = testing::densify(vectors[i], vocab.size());
        for (std::size_t j = 0; j < docs.size(); ++j) {
          const double expected = testing::dense_cosine(a, testing::densify(vectors[j], vocab.size()));
          c.expect(matrix.at(i, j) == expected, "similarity cell differs from brute force");
        }
      }
    }
  }
  return c;
}

// ---------------------------------------------------------------- 6

json read_json(const fs::path& p) {
  std::ifstream in(p);
  return json::parse(in);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

Check fixture_pipeline() {
  Check c;
  const fs::path fixture = BLOGNET_FIXTURE_DIR;
  const fs::path base = fs::temp_directory_path() / "blognet_acceptance_fixture";
  fs::remove_all(base);
  PipelineConfig config = load_config(fixture / "config.json");
  config.out_dir = (base / "run1").string();
  pipeline::run_all(config);

  const auto counts = [&](const char* stage) { return read_json(base / "run1" / stage / "manifest.json")["counts"]; };
  const auto ingest = counts("ingest");
  c.expect(ingest["posts"]["quarantined"] == 1 && ingest["comments"]["quarantined"] == 2 &&
               ingest["blogroll"]["quarantined"] == 2 && ingest["profiles"]["quarantined"] == 1,
           "quarantine counts");
  const auto build = counts("build");
  int external = 0;
  int self_loops = 0;
  for (const auto& [name, layer] : build["layers"].items()) {
    external += layer["edges_dropped_external"].get<int>();
    self_loops += layer["edges_dropped_self_loop"].get<int>();
  }
  c.expect(external == 1, "external drops: " + std::to_string(external));
  c.expect(self_loops == 2, "self-loop drops: " + std::to_string(self_loops));
  c.expect(build["layers"]["citation"]["links_self_reference"] == 1, "citation self references");
  c.expect(build["merged_nodes"] == 20 && build["collapsed_arcs"] == 16, "merged graph size");
  const auto clean = counts("clean");
  c.expect(clean["nodes_dropped_isolated"] == 5, "isolated nodes");
  c.expect(clean["nodes_dropped_small_components"] == 4 && clean["arcs_dropped_small_components"] == 4,
           "small-component drops");
  c.expect(clean["scc_before"] == 8 && clean["scc_after_isolation"] == 3 && clean["scc_kept"] == 1,
           "component counts");
  c.expect(clean["nodes_out"] == 11 && clean["arcs_out"] == 12, "cleaned graph size");
  const auto stats = counts("stats");
  c.expect(stats["active_bloggers"] == 7, "active bloggers");

  config.out_dir = (base / "run2").string();
  pipeline::run_all(config);
  std::size_t files = 0;
  for (const auto& entry : fs::recursive_directory_iterator(base / "run1")) {
    if (!entry.is_regular_file()) continue;
    ++files;
    const auto twin = base / "run2" / fs::relative(entry.path(), base / "run1");
    c.expect(fs::exists(twin) && slurp(entry.path()) == slurp(twin),
             "not byte-identical: " + fs::relative(entry.path(), base / "run1").string());
  }
  c.expect(files > 30, "too few artifacts compared");
  fs::remove_all(base);
  return c;
}

// ---------------------------------------------------------------- 7

Check statistics_identities() {
  Check c;
  c.near(profilestats::comments_per_post(119280, 133471), 0.8937, 5e-4, "comment mean");

  using namespace std::chrono;
  std::mt19937_64 rng(777);
  const Timestamp year_start = *parse_rfc3339("2010-01-01T00:00:00Z");
  std::uniform_int_distribution<long long> second(0, 365LL * 24 * 3600 - 1);
  std::uniform_int_distribution<int> age(5, 90);
  std::uniform_int_distribution<int> pick(0, 3);
  for (int t = 0; t < 50; ++t) {
    std::uniform_int_distribution<int> blog(0, 5 + t);
    std::vector<RawPost> posts;
    for (int i = 0; i < 300; ++i)
      posts.push_back({"p" + std::to_string(i), "b" + std::to_string(blog(rng)), "", "",
                       year_start + seconds{second(rng)}});
    std::uniform_int_distribution<int> post(0, 329);
    std::vector<RawComment> comments;
    for (int i = 0; i < 500; ++i)
      comments.push_back({"c" + std::to_string(i), "p" + std::to_string(post(rng)), std::nullopt, "", {}});
    std::vector<ProfileRecord> profiles;
    for (int i = 0; i < 40; ++i) {
      ProfileRecord p{"b" + std::to_string(i), std::nullopt, std::nullopt, std::nullopt, std::nullopt};
      if (pick(rng) != 0) p.age = age(rng);
      if (pick(rng) != 0) p.gender = pick(rng) % 2 ? Gender::kMale : Gender::kFemale;
      profiles.push_back(p);
    }

    profilestats::ActivityWindow window;
    window.start = year_start + seconds{second(rng) / 2};
    window.end = window.start + hours{24 * (30 + t * 3)};
    window.min_posts = 1 + static_cast<std::size_t>(t % 8);
    const auto report = profilestats::build_report(posts, comments, profiles, window);
    const std::string tag = " (fixture " + std::to_string(t) + ")";

    c.expect(profilestats::active_bloggers(posts, window) ==
                 testing::scan_active(posts, window.start, window.end, window.min_posts),
             "active bloggers differ from scan" + tag);
    const auto& hours_hist = report.posts_by_hour;
    c.expect(std::accumulate(hours_hist.begin(), hours_hist.end(), std::size_t{0}) == posts.size(),
             "hour histogram sum" + tag);
    std::size_t month_sum = 0;
    for (const auto& [m, n] : report.posts_by_month) month_sum += n;
    c.expect(month_sum == posts.size(), "month histogram sum" + tag);
    std::size_t post_sum = 0;
    std::size_t comment_sum = 0;
    for (const auto& [k, n] : report.comments.histogram) {
      post_sum += n;
      comment_sum += k * n;
    }
    c.expect(post_sum == posts.size(), "comment histogram post sum" + tag);
    c.expect(comment_sum == report.comments.matched_comments, "comment histogram comment sum" + tag);
    std::size_t ages = 0;
    for (const auto& [bin, n] : report.demographics.age_histogram) ages += n;
    c.expect(ages == report.demographics.ages_present, "age histogram sum" + tag);
    for (const auto* counts : {&report.demographics.gender_counts, &report.demographics.education_counts,
                               &report.demographics.marital_counts}) {
      std::size_t total = 0;
      for (const auto& [name, n] : *counts) total += n;
      c.expect(total == profiles.size(), "categorical counts sum" + tag);
    }
  }
  return c;
}

// ---------------------------------------------------------------- 8

Check scale_smoke() {
  Check c;
  constexpr std::size_t kBlogs = 50'000;
  constexpr std::size_t kArcs = 500'000;
  constexpr std::size_t kActive = 2'000;
  const fs::path base = fs::temp_directory_path() / "blognet_acceptance_scale";
  fs::remove_all(base);
  fs::create_directories(base / "in");

  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<std::size_t> node(0, kBlogs - 1);
  std::uniform_int_distribution<int> word(0, 499);
  std::uniform_int_distribution<int> day(1, 28);
  const auto blog = [](std::size_t i) { return "blog" + std::to_string(i); };
  {
    std::ofstream posts(base / "in" / "posts.jsonl");
    std::size_t id = 0;
    for (std::size_t b = 0; b < kBlogs; ++b) {
      const int count = b < kActive ? 6 : 1;
      for (int k = 0; k < count; ++k) {
        const int d = day(rng);
        std::string body;
        for (int w = 0; w < 12; ++w) body += "w" + std::to_string(word(rng)) + " ";
        json j = {{"post_id", "p" + std::to_string(id++)}, {"blog_id", blog(b)}, {"title", "t"},
                  {"body", body}, {"published_at", "2010-0" + std::to_string(4 + k) + "-" +
                                                     (d < 10 ? "0" : "") + std::to_string(d) +
                                                     "T12:00:00"}};
        posts << j.dump() << '\n';
      }
    }
  }
  {
    std::set<std::pair<std::size_t, std::size_t>> arcs;
    for (std::size_t b = 0; b < kBlogs; ++b) arcs.emplace(b, (b + 1) % kBlogs);
    while (arcs.size() < kArcs) {
      const std::size_t u = node(rng);
      const std::size_t v = node(rng);
      if (u != v) arcs.emplace(u, v);
    }
    std::ofstream roll(base / "in" / "blogroll.jsonl");
    for (const auto& [u, v] : arcs)
      roll << R"({"owner_blog_id":")" << blog(u) << R"(","target_url":"http://)" << blog(v)
           << ".parsiblog.com/\"}\n";
  }
  std::ofstream(base / "in" / "comments.jsonl").close();
  std::ofstream(base / "in" / "profiles.jsonl").close();

  PipelineConfig config;
  config.ingest.posts = (base / "in" / "posts.jsonl").string();
  config.ingest.comments = (base / "in" / "comments.jsonl").string();
  config.ingest.blogroll = (base / "in" / "blogroll.jsonl").string();
  config.ingest.profiles = (base / "in" / "profiles.jsonl").string();
  config.textprep.threads = 4;
  config.out_dir = (base / "out").string();

  const auto start = std::chrono::steady_clock::now();
  pipeline::run_all(config);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const auto build = read_json(base / "out" / "build" / "manifest.json")["counts"];
  c.expect(build["merged_nodes"] == kBlogs, "node count");
  c.expect(build["collapsed_arcs"] == kArcs, "arc count");
  const auto prep = read_json(base / "out" / "prep" / "manifest.json")["counts"];
  c.expect(prep["documents"] == kActive, "active documents");
  c.expect(secs < 60.0, "pipeline took " + std::to_string(secs) + " s");
  if (c.ok) c.detail = "pipeline " + std::to_string(secs) + " s";
  fs::remove_all(base);
  return c;
}

}  // namespace

int main() {
  report(1, "Degree and density from published (N, E) pairs (tolerance: one unit in the last printed digit)", table_formulas);
  report(2, "SCC vs transitive-closure oracle, 500 digraphs n<=12", scc_oracle);
  report(3, "PageRank vs dense oracle 1e-8, sum 1+-1e-9, n-cycle 1/n+-1e-12", pagerank_oracle);
  report(4, "HITS vs eigenspace oracle 1e-8, star closed form 1e-12", hits_oracle);
  report(5, "Text: normalize fuzz x1000, similarity == brute force, universal term weight 0", text_pipeline);
  report(6, "Fixture cleaning counts exact, two runs byte-identical", fixture_pipeline);
  report(7, "Statistics identities: comment mean 0.8937+-5e-4, histogram sums, active scan", statistics_identities);
  report(8, "Scale smoke: 50k nodes / 500k arcs full pipeline < 60 s", scale_smoke);
  std::printf("%d of 8 criteria failed\n", g_failures);
  return g_failures;
}
