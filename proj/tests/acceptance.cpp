// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli_support.hpp"
#include "golden_scenario.hpp"
#include "metric_fixtures.hpp"
#include "support.hpp"
#include "zicl/harness.hpp"
#include "zicl/retrieve.hpp"

using namespace zicl;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v, int precision = 4) {
  std::ostringstream s;
  s.precision(precision);
  s << std::fixed << v;
  return s.str();
}

// Linear scan over independently computed embeddings.
std::vector<corpus::SentenceId> brute_force_ids(const std::vector<embed::EmbeddingVector>& rows,
                                                const embed::EmbeddingVector& q, std::size_t k,
                                                const std::function<bool(std::size_t)>& skip = {}) {
  std::vector<std::pair<double, std::size_t>> all;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (skip && skip(i)) continue;
    double s = 0.0;
    for (std::size_t d = 0; d < q.dim(); ++d) {
      s += static_cast<double>(rows[i].values()[d]) * static_cast<double>(q.values()[d]);
    }
    all.push_back({s, i});
  }
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  std::vector<corpus::SentenceId> out;
  for (std::size_t i = 0; i < std::min(k, all.size()); ++i) out.push_back(all[i].second);
  return out;
}

std::vector<embed::EmbeddingVector> embed_store(const corpus::CorpusStore& store, const embed::HashedEmbedder& e) {
  std::vector<embed::EmbeddingVector> rows;
  rows.reserve(store.size());
  for (const auto& s : store.sentences()) rows.push_back(e.embed_one(s.text));
  return rows;
}

// ---------------------------------------------------------------------------

Outcome exact_knn() {
  const auto t0 = Clock::now();
  std::size_t queries = 0;
  std::size_t mismatches = 0;
  const embed::HashedEmbedder e(64);
  const std::vector<std::size_t> sizes = {1000, 4000, 10000};
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    const auto store = zicl::testing::random_store(100 + c, sizes[c]);
    const auto index = vindex::VectorIndex::build(store, e);
    const auto rows = embed_store(store, e);
    Rng rng(200 + c);
    for (int q = 0; q < 25; ++q) {
      const auto query = e.embed_one(zicl::testing::random_sentence(rng, 4, 12));
      for (std::size_t k : {1, 16, 64}) {
        std::vector<corpus::SentenceId> got;
        for (const auto& h : index.search(query, k)) got.push_back(h.sentence_id);
        mismatches += got == brute_force_ids(rows, query, k) ? 0 : 1;
        ++queries;
      }
    }
  }
  const double secs = seconds_since(t0);
  return {mismatches == 0 && secs < 60.0, std::to_string(queries) + " queries over 3 corpora (1k/4k/10k), " +
                                              std::to_string(mismatches) + " mismatches, " + fmt(secs, 1) + " s"};
}

Outcome physical_neighbor() {
  const auto store = zicl::testing::random_store(300, 1000);
  const embed::HashedEmbedder e(64);
  const auto index = vindex::VectorIndex::build(store, e);
  const auto rows = embed_store(store, e);
  const retrieve::Retriever retriever(index, store, e);
  std::size_t demos = 0;
  std::size_t structural_bad = 0;
  std::size_t prefix_bad = 0;
  Rng rng(301);
  for (int q = 0; q < 100; ++q) {
    retrieve::RetrievalRequest req;
    // Every fourth query is a corpus sentence, which must be excluded.
    req.test_input = q % 4 == 0 ? store.sentence(rng.below(store.size())).text
                                : zicl::testing::random_sentence(rng, 5, 12);
    req.k = 16;
    const auto got = retriever.retrieve(req);
    for (std::size_t i = 0; i < got.inputs.size(); ++i) {
      ++demos;
      const auto& s = got.inputs[i];
      const auto& a = store.sentence(*got.provenance[i].anchor_id);
      const bool ok = a.paragraph_id == s.paragraph_id &&
                      (a.position + 1 == s.position || s.position + 1 == a.position) && s.text != req.test_input;
      structural_bad += ok ? 0 : 1;
    }
    // Walk the oracle ranking, applying the documented skips.
    const auto ranking = brute_force_ids(rows, e.embed_one(req.test_input), 64,
                                         [&](std::size_t i) { return store.sentence(i).text == req.test_input; });
    std::vector<corpus::SentenceId> expect_anchors;
    std::set<corpus::SentenceId> emitted;
    for (auto id : ranking) {
      if (expect_anchors.size() == req.k) break;
      const auto& s = store.sentence(id);
      const auto ext = store.paragraph_extent(s.paragraph_id);
      std::optional<corpus::SentenceId> nb;
      if (s.position + 1 < ext.count) {
        nb = ext.first + s.position + 1;
      } else if (s.position > 0) {
        nb = ext.first + s.position - 1;
      }
      if (!nb || emitted.contains(*nb) || store.sentence(*nb).text == req.test_input) continue;
      emitted.insert(*nb);
      expect_anchors.push_back(id);
    }
    std::vector<corpus::SentenceId> anchors;
    for (const auto& p : got.provenance) anchors.push_back(*p.anchor_id);
    prefix_bad += anchors == expect_anchors ? 0 : 1;
  }
  return {structural_bad == 0 && prefix_bad == 0 && demos > 0,
          std::to_string(demos) + " demos, " + std::to_string(structural_bad) + " structural violations, " +
              std::to_string(prefix_bad) + "/100 anchor sequences off the oracle ranking"};
}

Outcome label_strategies() {
  const std::vector<std::tuple<std::string, std::vector<std::string>, std::vector<std::string>>> table = {
      {"CR", {"terrible", "great"}, {"bad", "good"}},
      {"Amz", {"negative", "positive"}, {"bad", "good"}},
      {"Amz5", {"terrible", "bad", "okay", "good", "great"}, {"horrible", "negative", "neutral", "positive", "excellent"}},
      {"Yelp", {"negative", "positive"}, {"bad", "good"}},
      {"Yelp5", {"terrible", "bad", "okay", "good", "great"}, {"horrible", "negative", "neutral", "positive", "excellent"}},
      {"Tweet", {"negative", "neutral", "positive"}, {"bad", "normal", "good"}},
      {"MR", {"terrible", "great"}, {"bad", "good"}},
      {"SST2", {"terrible", "great"}, {"bad", "good"}},
      {"SST5", {"terrible", "bad", "okay", "good", "great"}, {"horrible", "negative", "neutral", "positive", "excellent"}},
  };
  std::size_t table_bad = 0;
  std::size_t dist_bad = 0;
  std::size_t overlap = 0;
  std::size_t words_bad = 0;
  std::vector<std::string> inputs;
  for (int i = 0; i < 10000; ++i) inputs.push_back("x" + std::to_string(i));
  for (const auto& [name, labels, synonyms] : table) {
    const auto* task = demos::find_builtin_task(name);
    if (task == nullptr || task->labels != labels || task->synonyms != synonyms) {
      ++table_bad;
      continue;
    }
    const std::set<std::string> yset(labels.begin(), labels.end());
    for (auto kind : {demos::LabelKind::Random, demos::LabelKind::Synonym}) {
      const auto out = demos::assign_labels(inputs, *task, {kind, 0, {}}, 17);
      std::vector<double> hist(labels.size());
      for (const auto& d : out) {
        hist[*d.label_index] += 1;
        if (kind == demos::LabelKind::Synonym && yset.contains(*d.label_text)) ++overlap;
      }
      const double p = 1.0 / static_cast<double>(labels.size());
      const double sigma = std::sqrt(10000 * p * (1 - p));
      for (double c : hist) dist_bad += std::abs(c - 10000 * p) <= 3 * sigma ? 0 : 1;
    }
    std::set<std::string> banned = yset;
    banned.insert(synonyms.begin(), synonyms.end());
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto m = demos::random_word_mapping(*task, seed);
      const std::set<std::string> ms(m.begin(), m.end());
      bool ok = m.size() == labels.size() && ms.size() == m.size() && m == demos::random_word_mapping(*task, seed);
      for (const auto& w : m) ok = ok && !banned.contains(w);
      words_bad += ok ? 0 : 1;
    }
    words_bad += demos::random_word_mapping(*task, 1) == demos::random_word_mapping(*task, 2) ? 1 : 0;
  }
  return {table_bad == 0 && dist_bad == 0 && overlap == 0 && words_bad == 0,
          "9 tasks: table mismatches " + std::to_string(table_bad) + ", bins outside 3 sigma " +
              std::to_string(dist_bad) + ", synonym/label overlaps " + std::to_string(overlap) +
              ", random-word mapping faults " + std::to_string(words_bad)};
}

// Roughly four bytes per token; monotone in prefix length like any real tokenizer.
class ByteTokenizer final : public demos::Tokenizer {
 public:
  std::size_t count(std::string_view text) const override { return (text.size() + 3) / 4; }
};

std::size_t count_whitespace_words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::string w;
  std::size_t n = 0;
  while (in >> w) ++n;
  return n;
}

std::vector<std::string> split_blocks(const std::string& text) {
  std::vector<std::string> out;
  std::size_t at = 0;
  for (std::size_t p; (p = text.find("\n\n", at)) != std::string::npos; at = p + 2) out.push_back(text.substr(at, p + 2 - at));
  out.push_back(text.substr(at));
  return out;
}

Outcome prompt_budget() {
  const demos::WhitespaceTokenizer ws;
  const ByteTokenizer bt;
  const std::vector<std::pair<const demos::Tokenizer*, std::function<std::size_t(std::string_view)>>> counters = {
      {&ws, count_whitespace_words}, {&bt, [](std::string_view s) { return (s.size() + 3) / 4; }}};
  const auto& task = *demos::find_builtin_task("SST5");
  Rng rng(400);
  std::size_t prompts = 0;
  std::size_t violations = 0;
  std::size_t truncated = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<demos::PseudoDemo> ds;
    const std::size_t k = 1 + rng.below(32);
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t max_words = rng.below(3) == 0 ? 900 : 40;
      const auto y = rng.below(task.labels.size());
      ds.push_back({zicl::testing::random_sentence(rng, 1, max_words), task.synonyms[y], y});
    }
    const auto test = zicl::testing::random_sentence(rng, 3, 150);
    for (const auto& [tok, count] : counters) {
      const auto direct = demos::render_prompt(ds, test, task, {}, *tok);
      const auto channel = demos::render_channel_prompts(ds, test, task, {}, *tok);
      std::vector<std::pair<std::string, std::string>> all = {{direct.text, ""}};
      for (const auto& c : channel) all.push_back({c.text, c.continuation});
      for (const auto& [text, cont] : all) {
        ++prompts;
        if (count(text + cont) > 1024) ++violations;
        const auto blocks = split_blocks(text);
        for (std::size_t b = 0; b + 1 < blocks.size(); ++b) violations += count(blocks[b]) > 256 ? 1 : 0;
      }
      for (const auto& t : direct.truncation) truncated += t.kept_tokens < t.original_tokens ? 1 : 0;
    }
  }
  return {violations == 0 && truncated > 0,
          std::to_string(prompts) + " prompts under 2 tokenizers, " + std::to_string(truncated) +
              " demos truncated, " + std::to_string(violations) + " budget violations"};
}

Outcome copying_effect() {
  std::ostringstream detail;
  bool pass = true;
  for (const char* task_name : {"CR", "Tweet"}) {
    const auto planted = zicl::testing::planted_task(500, 2000, 0, task_name, 300);
    const std::size_t num_labels = planted.dataset.task.labels.size();
    embed::HashedEmbedder e(128);
    harness::Assets assets;
    assets.embedder = &e;
    for (double strength : {1.0, 0.0}) {
      harness::ExperimentConfig c;
      c.method = harness::MethodKind::IclGold;
      c.k = 16;
      c.seeds = {1};
      c.insert_identical = true;
      c.backend.kind = infer::BackendKind::MockCopying;
      c.backend.copying.copy_strength = strength;
      const auto r = harness::run(c, planted.dataset, assets);
      const auto& cp = *r.copying;
      detail << task_name << " copy=" << strength << ": total " << fmt(cp.total) << " correct " << fmt(cp.correct_label)
             << " incorrect " << fmt(cp.incorrect_label) << " (n=" << cp.n_total << "); ";
      if (strength == 1.0) {
        pass = pass && cp.correct_label == 1.0 && cp.incorrect_label == 1.0 && cp.n_total == 2000;
      } else {
        const double p = 1.0 / static_cast<double>(num_labels);
        const double ci = 3 * std::sqrt(p * (1 - p) / static_cast<double>(cp.n_total));
        pass = pass && std::abs(cp.total - p) <= ci;
      }
    }
  }
  return {pass, detail.str()};
}

Outcome directional_ablation() {
  const auto planted = zicl::testing::planted_task(600, 500, 5000);
  embed::HashedEmbedder e(256);
  const auto index = vindex::VectorIndex::build(planted.corpus, e);
  harness::Assets assets;
  assets.corpus = &planted.corpus;
  assets.index = &index;
  assets.embedder = &e;
  auto config = [](harness::MethodKind m) {
    harness::ExperimentConfig c;
    c.method = m;
    c.seeds = {1, 2, 3};
    c.backend.kind = infer::BackendKind::MockCopying;
    c.backend.copying.copy_strength = 0.9;
    c.backend.copying.lexical_prior = true;
    return c;
  };
  // NAIVE_ZICL is NEAREST retrieval with random labels from the label set.
  const auto naive = harness::run(config(harness::MethodKind::NaiveZicl), planted.dataset, assets);
  const auto zicl = harness::run(config(harness::MethodKind::Zicl), planted.dataset, assets);
  const double margin = zicl.mean.accuracy - naive.mean.accuracy;
  return {margin > 0.10, "NEAREST+RANDOM " + fmt(naive.mean.accuracy) + " vs PHYSICAL_NEIGHBOR+SYNONYM " +
                             fmt(zicl.mean.accuracy) + " (margin " + fmt(100 * margin, 1) + " points, 500 examples)"};
}

Outcome metric_oracle() {
  std::size_t bad = 0;
  for (const auto& f : zicl::testing::metric_fixtures()) {
    const auto s = metrics::compute(f.preds, f.golds, f.num_classes);
    bad += std::abs(s.accuracy - f.accuracy) <= 1e-6 && std::abs(s.macro_f1 - f.macro_f1) <= 1e-6 ? 0 : 1;
  }
  return {bad == 0 && zicl::testing::metric_fixtures().size() == 5,
          "5 fixtures, " + std::to_string(bad) + " outside 1e-6"};
}

Outcome determinism() {
  const auto planted = zicl::testing::planted_task(700, 120, 1500, "Tweet", 80);
  embed::HashedEmbedder e(128);
  const auto index = vindex::VectorIndex::build(planted.corpus, e);
  harness::Assets assets;
  assets.corpus = &planted.corpus;
  assets.index = &index;
  assets.embedder = &e;
  const auto dir = zicl::testing::fresh_dir("acceptance-determinism");
  std::size_t diffs = 0;
  std::size_t replayed = 0;
  std::size_t replay_bad = 0;
  std::size_t runs = 0;
  for (auto m : {harness::MethodKind::Zicl, harness::MethodKind::NaiveZicl, harness::MethodKind::RandomInputs,
                 harness::MethodKind::InputsOnly, harness::MethodKind::IclRandom}) {
    for (auto inference : {infer::Method::Channel, infer::Method::Direct}) {
      harness::ExperimentConfig c;
      c.method = m;
      c.inference = inference;
      c.seeds = {1, 2};
      c.backend.kind = infer::BackendKind::MockCopying;
      c.backend.copying.copy_strength = 0.6;
      c.backend.copying.lexical_prior = true;
      c.embedder.dim = 128;
      const std::string name = std::string(harness::to_string(m)) + "-" + std::string(infer::to_string(inference));
      harness::run(c, planted.dataset, assets).write(dir / (name + "-a"));
      harness::run(c, planted.dataset, assets).write(dir / (name + "-b"));
      ++runs;
      for (const char* f : {"run.json", "examples.jsonl"}) {
        diffs += read_file(dir / (name + "-a") / f) == read_file(dir / (name + "-b") / f) ? 0 : 1;
      }
      const infer::MockCopyingLm lm(planted.dataset.task, c.backend.copying);
      const demos::WhitespaceTokenizer tok;
      std::istringstream lines(read_file(dir / (name + "-a") / "examples.jsonl"));
      for (std::string line; std::getline(lines, line);) {
        const auto log = harness::ExampleLog::from_json(nlohmann::json::parse(line));
        ++replayed;
        replay_bad += harness::replay(log, c, planted.dataset.task, lm, tok).matches ? 0 : 1;
      }
    }
  }
  return {diffs == 0 && replay_bad == 0 && replayed > 0,
          std::to_string(runs) + " configs run twice, " + std::to_string(diffs) + " differing files; " +
              std::to_string(replayed) + " logs replayed, " + std::to_string(replay_bad) + " mismatches"};
}

Outcome end_to_end() {
  const auto t0 = Clock::now();
  const auto dir = zicl::testing::fresh_dir("acceptance-e2e");
  const auto planted = zicl::testing::planted_task(800, 200, 4400);
  zicl::testing::write_cli_fixture(dir, planted);
  auto q = [&](const std::string& rel) { return zicl::testing::shell_quote((dir / rel).string()); };
  write_file_atomic(dir / "config.json",
                    R"({"method": "ZICL", "inference": "CHANNEL", "k": 16, "seeds": [1],
                        "backend": {"kind": "MOCK_COPYING", "copy_strength": 0.9},
                        "embedder": {"kind": "HASHED_TEST", "dim": 256}})");
  const std::vector<std::pair<std::string, std::string>> steps = {
      {"ingest", "ingest --in " + q("paragraphs.jsonl") + " --out " + q("corpus")},
      {"index", "index --corpus " + q("corpus") + " --out " + q("index.bin") + " --embedder hashed:256"},
      {"run", "run --config " + q("config.json") + " --dataset " + q("data") + " --corpus " + q("corpus") +
                  " --index " + q("index.bin") + " --out " + q("out")},
      {"report", "report --runs " + q("out") + " --format csv"},
  };
  std::string detail;
  for (const auto& [name, args] : steps) {
    const auto r = zicl::testing::run_cli(args, dir);
    if (r.code != 0) return {false, name + " exited " + std::to_string(r.code) + ": " + r.err};
    if (name == "ingest") detail = r.out.substr(0, r.out.find('\n'));
  }
  const double secs = seconds_since(t0);
  return {secs < 300.0, detail + ", 200 examples, 4 steps exit 0 in " + fmt(secs, 1) + " s"};
}

Outcome wire_protocol() {
  const auto run = zicl::testing::run_golden_scenario();
  const auto golden = zicl::testing::load_golden();
  std::size_t diffs = run.exchanges.size() == golden.size() ? 0 : 1;
  for (std::size_t i = 0; i < std::min(golden.size(), run.exchanges.size()); ++i) {
    diffs += zicl::testing::exchange_line(run.exchanges[i]) == zicl::testing::exchange_line(golden[i]) ? 0 : 1;
  }
  const auto server_diffs = zicl::testing::replay_golden_requests(golden);
  return {diffs == 0 && server_diffs == 0 && run.channel_calls == run.num_labels,
          std::to_string(golden.size()) + " recorded exchanges, " + std::to_string(diffs) + " client diffs, " +
              std::to_string(server_diffs) + " server diffs; channel used " + std::to_string(run.channel_calls) +
              " scoring calls for |Y|=" + std::to_string(run.num_labels)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"exact k-NN matches brute force", exact_knn},
      {"physical-neighbor structure", physical_neighbor},
      {"label-strategy distributions", label_strategies},
      {"prompt budget", prompt_budget},
      {"copying-effect mechanism", copying_effect},
      {"directional ablation", directional_ablation},
      {"metric oracle", metric_oracle},
      {"determinism and replay", determinism},
      {"end-to-end CLI smoke", end_to_end},
      {"wire-protocol conformance", wire_protocol},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << (i + 1) << "] " << criteria[i].first << ": " << o.detail
              << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
