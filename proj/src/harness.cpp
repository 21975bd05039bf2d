#include "zicl/harness.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "zicl/errors.hpp"
#include "zicl/util.hpp"

namespace zicl::harness {

using nlohmann::json;
using nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Dataset

void Dataset::validate() const {
  task.validate();
  auto check = [&](const std::vector<Example>& xs, const char* split) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (trim(xs[i].input).empty()) {
        throw DataError(name + "." + split + "[" + std::to_string(i) + "]: empty input");
      }
      if (xs[i].label >= task.labels.size()) {
        throw DataError(name + "." + split + "[" + std::to_string(i) + "]: label " + std::to_string(xs[i].label) +
                        " out of range");
      }
    }
  };
  if (test.empty()) throw DataError(name + ": empty test split");
  check(test, "test");
  if (train) check(*train, "train");
}

namespace {

std::vector<Example> read_examples(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  std::vector<Example> out;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (trim(line).empty()) continue;
    try {
      const auto j = json::parse(line);
      const auto label = j.at("label").get<std::int64_t>();
      if (label < 0) throw DataError("negative label");
      out.push_back({j.at("input").get<std::string>(), static_cast<std::size_t>(label)});
    } catch (const std::exception& e) {
      throw DataError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace

Dataset Dataset::load(const std::filesystem::path& dir, const std::string& name) {
  if (!std::filesystem::is_directory(dir)) throw ConfigError("dataset directory not found: " + dir.string());
  std::string stem = name;
  if (stem.empty()) {
    std::vector<std::string> found;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
      const auto fname = entry.path().filename().string();
      if (fname.ends_with(".task.json")) found.push_back(fname.substr(0, fname.size() - 10));
    }
    if (found.size() != 1) {
      throw ConfigError(dir.string() + ": expected exactly one *.task.json, found " + std::to_string(found.size()));
    }
    stem = found.front();
  }
  Dataset d;
  d.name = stem;
  d.task = demos::TaskSpec::load(dir / (stem + ".task.json"));
  d.test = read_examples(dir / (stem + ".test.jsonl"));
  if (const auto train = dir / (stem + ".train.jsonl"); std::filesystem::exists(train)) d.train = read_examples(train);
  d.validate();
  return d;
}

// ---------------------------------------------------------------------------
// Config

std::string_view to_string(MethodKind m) {
  switch (m) {
    case MethodKind::NoDemos: return "NO_DEMOS";
    case MethodKind::RandomInputs: return "RANDOM_INPUTS";
    case MethodKind::NaiveZicl: return "NAIVE_ZICL";
    case MethodKind::Zicl: return "ZICL";
    case MethodKind::IclGold: return "ICL_GOLD";
    case MethodKind::IclRandom: return "ICL_RANDOM";
    case MethodKind::InputsOnly: return "INPUTS_ONLY";
  }
  return "?";
}

MethodKind method_kind_from_string(std::string_view s) {
  for (auto m : {MethodKind::NoDemos, MethodKind::RandomInputs, MethodKind::NaiveZicl, MethodKind::Zicl,
                 MethodKind::IclGold, MethodKind::IclRandom, MethodKind::InputsOnly}) {
    if (s == to_string(m)) return m;
  }
  throw ConfigError("unknown method '" + std::string(s) + "'");
}

bool is_oracle(MethodKind m) { return m == MethodKind::IclGold || m == MethodKind::IclRandom; }

namespace {

bool uses_corpus(MethodKind m) { return m != MethodKind::NoDemos && !is_oracle(m); }

retrieve::Strategy default_retrieval(MethodKind m) {
  switch (m) {
    case MethodKind::RandomInputs: return retrieve::Strategy::Random;
    case MethodKind::NaiveZicl: return retrieve::Strategy::Nearest;
    default: return retrieve::Strategy::PhysicalNeighbor;
  }
}

demos::LabelKind effective_label_kind(const ExperimentConfig& c) {
  if (c.method == MethodKind::IclGold) return demos::LabelKind::Gold;
  if (c.label_strategy) return *c.label_strategy;
  return c.method == MethodKind::Zicl ? demos::LabelKind::Synonym : demos::LabelKind::Random;
}

std::string_view to_string(corpus::AdjacencyPolicy p) {
  return p == corpus::AdjacencyPolicy::FollowingThenPreceding ? "FOLLOWING_THEN_PRECEDING"
                                                              : "PRECEDING_THEN_FOLLOWING";
}

corpus::AdjacencyPolicy adjacency_from_string(std::string_view s) {
  if (s == "FOLLOWING_THEN_PRECEDING") return corpus::AdjacencyPolicy::FollowingThenPreceding;
  if (s == "PRECEDING_THEN_FOLLOWING") return corpus::AdjacencyPolicy::PrecedingThenFollowing;
  throw ConfigError("unknown adjacency policy '" + std::string(s) + "'");
}

void reject_unknown(const json& j, const std::set<std::string>& known, const std::string& where) {
  for (const auto& [key, _] : j.items()) {
    if (!known.contains(key)) throw ConfigError("unknown " + where + " key '" + key + "'");
  }
}

}  // namespace

infer::BackendConfig backend_from_json(const json& j) {
  reject_unknown(j,
                 {"kind", "endpoint", "max_in_flight", "timeout_seconds", "retries", "copy_strength", "kernel",
                  "lexical_prior", "copy_synonyms", "seed", "script", "continuation_prefix", "remote_tokenizer"},
                 "backend");
  infer::BackendConfig b;
  if (j.contains("kind")) b.kind = infer::backend_kind_from_string(j["kind"].get<std::string>());
  b.endpoint = j.value("endpoint", b.endpoint);
  b.max_in_flight = j.value("max_in_flight", b.max_in_flight);
  b.timeout_seconds = j.value("timeout_seconds", b.timeout_seconds);
  b.retries = j.value("retries", b.retries);
  b.copying.copy_strength = j.value("copy_strength", b.copying.copy_strength);
  if (j.contains("kernel")) b.copying.kernel = infer::copy_kernel_from_string(j["kernel"].get<std::string>());
  b.copying.lexical_prior = j.value("lexical_prior", b.copying.lexical_prior);
  b.copying.copy_synonyms = j.value("copy_synonyms", b.copying.copy_synonyms);
  b.copying.seed = j.value("seed", b.copying.seed);
  if (j.contains("script")) b.script = j["script"].get<std::string>();
  b.continuation_prefix = j.value("continuation_prefix", b.continuation_prefix);
  b.remote_tokenizer = j.value("remote_tokenizer", b.remote_tokenizer);
  return b;
}

ordered_json backend_to_json(const infer::BackendConfig& b) {
  ordered_json j;
  j["kind"] = infer::to_string(b.kind);
  j["endpoint"] = b.endpoint;
  j["max_in_flight"] = b.max_in_flight;
  j["timeout_seconds"] = b.timeout_seconds;
  j["retries"] = b.retries;
  j["copy_strength"] = b.copying.copy_strength;
  j["kernel"] = infer::to_string(b.copying.kernel);
  j["lexical_prior"] = b.copying.lexical_prior;
  j["copy_synonyms"] = b.copying.copy_synonyms;
  j["seed"] = b.copying.seed;
  j["script"] = b.script.string();
  j["continuation_prefix"] = b.continuation_prefix;
  j["remote_tokenizer"] = b.remote_tokenizer;
  return j;
}

embed::EmbedderConfig embedder_from_json(const json& j) {
  reject_unknown(j, {"kind", "endpoint", "dim", "batch_size", "max_in_flight", "timeout_seconds", "retries"},
                 "embedder");
  embed::EmbedderConfig e;
  if (j.contains("kind")) {
    const auto kind = j["kind"].get<std::string>();
    if (kind == "HASHED_TEST") {
      e.kind = embed::EmbedderKind::HashedTest;
    } else if (kind == "REMOTE") {
      e.kind = embed::EmbedderKind::Remote;
    } else {
      throw ConfigError("unknown embedder kind '" + kind + "'");
    }
  }
  e.endpoint = j.value("endpoint", e.endpoint);
  e.dim = j.value("dim", e.dim);
  e.batch_size = j.value("batch_size", e.batch_size);
  e.max_in_flight = j.value("max_in_flight", e.max_in_flight);
  e.timeout_seconds = j.value("timeout_seconds", e.timeout_seconds);
  e.retries = j.value("retries", e.retries);
  return e;
}

ordered_json embedder_to_json(const embed::EmbedderConfig& e) {
  ordered_json j;
  j["kind"] = e.kind == embed::EmbedderKind::HashedTest ? "HASHED_TEST" : "REMOTE";
  j["endpoint"] = e.endpoint;
  j["dim"] = e.dim;
  j["batch_size"] = e.batch_size;
  j["max_in_flight"] = e.max_in_flight;
  j["timeout_seconds"] = e.timeout_seconds;
  j["retries"] = e.retries;
  return j;
}


void ExperimentConfig::validate() const {
  if (seeds.empty()) throw ConfigError("at least one seed is required");
  if (std::set<std::uint64_t>(seeds.begin(), seeds.end()).size() != seeds.size()) {
    throw ConfigError("seeds must be distinct");
  }
  if (method != MethodKind::NoDemos && k == 0) throw ConfigError("k must be positive");
  if (test_cap == 0) throw ConfigError("test_cap must be positive");
  if (!(corpus_fraction > 0.0 && corpus_fraction <= 1.0)) throw ConfigError("corpus_fraction must lie in (0, 1]");
  if (budget.per_example == 0 || budget.total == 0 || budget.per_example > budget.total) {
    throw ConfigError("budget needs 0 < per_example <= total");
  }
  if (label_strategy == demos::LabelKind::Gold && method != MethodKind::IclGold) {
    throw ConfigError("GOLD labels are only available to ICL_GOLD");
  }
  if (label_strategy && (method == MethodKind::InputsOnly || method == MethodKind::IclGold)) {
    throw ConfigError(std::string(to_string(method)) + " does not take a label_strategy");
  }
  if (retrieval && !uses_corpus(method)) {
    throw ConfigError(std::string(to_string(method)) + " does not retrieve from the corpus");
  }
  const auto strategy = retrieval.value_or(default_retrieval(method));
  if (uses_corpus(method) && strategy == retrieve::Strategy::DiverseNearest && pool_size < k) {
    throw ConfigError("pool_size must be >= k");
  }
  if (insert_identical && method == MethodKind::InputsOnly) {
    throw ConfigError("identical-demo insertion needs labeled demos");
  }
  backend.validate();
  embedder.validate();
}

ExperimentConfig ExperimentConfig::from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  reject_unknown(j,
                 {"method", "inference", "k", "pool_size", "K", "seeds", "test_cap", "subsample_seed",
                  "corpus_fraction", "coverage", "label_strategy", "retrieval", "word_seed", "adjacency", "budget",
                  "insert_identical", "backend", "embedder", "grid", "extra_corpus"},
                 "config");
  ExperimentConfig c;
  try {
    if (j.contains("method")) c.method = method_kind_from_string(j["method"].get<std::string>());
    if (j.contains("inference")) c.inference = infer::method_from_string(j["inference"].get<std::string>());
    c.k = j.value("k", c.k);
    c.pool_size = j.value("pool_size", j.value("K", c.pool_size));
    if (j.contains("seeds")) c.seeds = j["seeds"].get<std::vector<std::uint64_t>>();
    c.test_cap = j.value("test_cap", c.test_cap);
    c.subsample_seed = j.value("subsample_seed", c.subsample_seed);
    c.corpus_fraction = j.value("corpus_fraction", c.corpus_fraction);
    c.coverage = j.value("coverage", c.coverage);
    if (j.contains("label_strategy") && !j["label_strategy"].is_null()) {
      c.label_strategy = demos::label_kind_from_string(j["label_strategy"].get<std::string>());
    }
    if (j.contains("retrieval") && !j["retrieval"].is_null()) {
      c.retrieval = retrieve::strategy_from_string(j["retrieval"].get<std::string>());
    }
    c.word_seed = j.value("word_seed", c.word_seed);
    if (j.contains("adjacency")) c.adjacency = adjacency_from_string(j["adjacency"].get<std::string>());
    if (j.contains("budget")) {
      reject_unknown(j["budget"], {"per_example", "total"}, "budget");
      c.budget.per_example = j["budget"].value("per_example", c.budget.per_example);
      c.budget.total = j["budget"].value("total", c.budget.total);
    }
    c.insert_identical = j.value("insert_identical", c.insert_identical);
    if (j.contains("backend")) c.backend = backend_from_json(j["backend"]);
    if (j.contains("embedder")) c.embedder = embedder_from_json(j["embedder"]);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
  c.validate();
  return c;
}

ordered_json ExperimentConfig::to_json() const {
  ordered_json j;
  j["method"] = to_string(method);
  j["inference"] = infer::to_string(inference);
  j["k"] = k;
  j["pool_size"] = pool_size;
  j["seeds"] = seeds;
  j["test_cap"] = test_cap;
  j["subsample_seed"] = subsample_seed;
  j["corpus_fraction"] = corpus_fraction;
  j["coverage"] = coverage;
  j["label_strategy"] = label_strategy ? ordered_json(demos::to_string(*label_strategy)) : ordered_json(nullptr);
  j["retrieval"] = retrieval ? ordered_json(retrieve::to_string(*retrieval)) : ordered_json(nullptr);
  j["word_seed"] = word_seed;
  j["adjacency"] = to_string(adjacency);
  j["budget"] = {{"per_example", budget.per_example}, {"total", budget.total}};
  j["insert_identical"] = insert_identical;
  j["backend"] = backend_to_json(backend);
  j["embedder"] = embedder_to_json(embedder);
  return j;
}

// ---------------------------------------------------------------------------
// Logs

namespace {

template <class T>
ordered_json opt(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

template <class T>
std::optional<T> get_opt(const json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return j[key].get<T>();
}

}  // namespace

ordered_json ExampleLog::to_json() const {
  ordered_json j;
  j["seed"] = seed;
  j["index"] = index;
  j["test_input"] = test_input;
  j["gold"] = gold;
  ordered_json ds = ordered_json::array();
  for (const auto& d : demos) {
    ordered_json dj;
    dj["source"] = d.source;
    dj["id"] = opt(d.id);
    dj["anchor"] = opt(d.anchor);
    dj["input"] = d.input;
    dj["label"] = opt(d.label);
    dj["label_index"] = opt(d.label_index);
    ds.push_back(std::move(dj));
  }
  j["demos"] = std::move(ds);
  j["short_set"] = short_set;
  j["excluded_matches"] = excluded_matches;
  j["inserted_slot"] = opt(inserted_slot);
  j["inserted_label"] = opt(inserted_label);
  j["prompt_hash"] = prompt_hash;
  j["demos_rendered"] = demos_rendered;
  j["scores"] = scores;
  j["prediction"] = opt(prediction);
  j["error"] = error;
  return j;
}

ExampleLog ExampleLog::from_json(const json& j) {
  try {
    ExampleLog e;
    e.seed = j.at("seed").get<std::uint64_t>();
    e.index = j.at("index").get<std::size_t>();
    e.test_input = j.at("test_input").get<std::string>();
    e.gold = j.at("gold").get<std::size_t>();
    for (const auto& dj : j.at("demos")) {
      DemoLog d;
      d.source = dj.at("source").get<std::string>();
      d.id = get_opt<std::uint64_t>(dj, "id");
      d.anchor = get_opt<std::uint64_t>(dj, "anchor");
      d.input = dj.at("input").get<std::string>();
      d.label = get_opt<std::string>(dj, "label");
      d.label_index = get_opt<std::size_t>(dj, "label_index");
      e.demos.push_back(std::move(d));
    }
    e.short_set = j.value("short_set", false);
    e.excluded_matches = j.value("excluded_matches", std::size_t{0});
    e.inserted_slot = get_opt<std::size_t>(j, "inserted_slot");
    e.inserted_label = get_opt<std::size_t>(j, "inserted_label");
    e.prompt_hash = j.value("prompt_hash", std::string());
    e.demos_rendered = j.value("demos_rendered", std::size_t{0});
    e.scores = j.value("scores", std::vector<double>{});
    e.prediction = get_opt<std::size_t>(j, "prediction");
    e.error = j.value("error", std::string());
    return e;
  } catch (const json::exception& ex) {
    throw DataError(std::string("malformed example log: ") + ex.what());
  }
}

ordered_json RunResult::to_json() const {
  auto scores_json = [](const metrics::Scores& s) {
    return ordered_json{{"accuracy", s.accuracy}, {"macro_f1", s.macro_f1}};
  };
  ordered_json j;
  j["dataset"] = dataset;
  j["task"] = task.to_json();
  j["config"] = config.to_json();
  ordered_json ps = ordered_json::array();
  for (const auto& s : per_seed) {
    ps.push_back({{"seed", s.seed},
                  {"accuracy", s.scores.accuracy},
                  {"macro_f1", s.scores.macro_f1},
                  {"scored", s.scored},
                  {"failed", s.failed}});
  }
  j["per_seed"] = std::move(ps);
  j["mean"] = scores_json(mean);
  j["std"] = scores_json(std);
  if (copying) {
    j["copying"] = {{"total", copying->total},
                    {"correct_label", copying->correct_label},
                    {"incorrect_label", copying->incorrect_label},
                    {"n_total", copying->n_total},
                    {"n_correct", copying->n_correct},
                    {"n_incorrect", copying->n_incorrect}};
  }
  j["metadata"] = metadata;
  ordered_json failures = ordered_json::array();
  for (const auto& e : examples) {
    if (!e.error.empty()) failures.push_back({{"seed", e.seed}, {"index", e.index}, {"error", e.error}});
  }
  j["failures"] = std::move(failures);
  return j;
}

std::string RunResult::examples_jsonl() const {
  std::string out;
  for (const auto& e : examples) {
    out += e.to_json().dump();
    out += '\n';
  }
  return out;
}

void RunResult::write(const std::filesystem::path& dir) const {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create " + dir.string() + ": " + ec.message());
  write_file_atomic(dir / "run.json", to_json().dump(2) + "\n");
  write_file_atomic(dir / "examples.jsonl", examples_jsonl());
}

// ---------------------------------------------------------------------------
// Run

namespace {

struct Prepared {
  std::vector<demos::PseudoDemo> demos;
  ExampleLog log;
};

std::string verbalize(demos::LabelKind kind, const demos::TaskSpec& task, const std::vector<std::string>& words,
                      std::size_t y) {
  switch (kind) {
    case demos::LabelKind::Synonym: return task.synonyms[y];
    case demos::LabelKind::RandomWords: return words[y];
    default: return task.labels[y];
  }
}

void insert_identical_demo(Prepared& p, std::size_t k, std::uint64_t ex_seed, demos::LabelKind kind,
                           const demos::TaskSpec& task, const std::vector<std::string>& words,
                           const embed::Embedder& embedder) {
  std::size_t slot = p.demos.size();
  if (p.demos.size() >= k) {
    std::vector<std::string> texts{p.log.test_input};
    for (const auto& d : p.demos) texts.push_back(d.input);
    const auto vecs = embedder.embed_batch(texts);
    double lowest = 0.0;
    for (std::size_t i = 0; i < p.demos.size(); ++i) {
      const double s = embed::cosine(vecs[0], vecs[i + 1]);
      if (i == 0 || s <= lowest) {
        lowest = s;
        slot = i;
      }
    }
  }
  Rng rng(derive_seed(ex_seed, "insert"));
  const bool correct = rng.unit() < 0.5;
  std::size_t y = p.log.gold;
  if (!correct) {
    y = rng.below(task.labels.size() - 1);
    if (y >= p.log.gold) ++y;
  }
  demos::PseudoDemo d{p.log.test_input, verbalize(kind, task, words, y), y};
  DemoLog dl{"inserted", std::nullopt, std::nullopt, d.input, d.label_text, y};
  if (slot == p.demos.size()) {
    p.demos.push_back(std::move(d));
    p.log.demos.push_back(std::move(dl));
  } else {
    p.demos[slot] = std::move(d);
    p.log.demos[slot] = std::move(dl);
  }
  p.log.inserted_slot = slot;
  p.log.inserted_label = y;
}

corpus::CorpusStore merge(const corpus::CorpusStore& base, const corpus::CorpusStore& extra) {
  corpus::Ingestor ing;
  ing.add_store(base);
  ing.add_store(extra);
  return ing.finish();
}

}  // namespace

RunResult run(const ExperimentConfig& config, const Dataset& dataset, const Assets& assets) {
  config.validate();
  dataset.validate();
  const auto& task = dataset.task;

  std::unique_ptr<infer::LmBackend> owned_backend;
  const infer::LmBackend* backend = assets.backend;
  if (backend == nullptr) {
    owned_backend = infer::make_backend(config.backend, task);
    backend = owned_backend.get();
  }
  std::unique_ptr<demos::Tokenizer> owned_tokenizer;
  const demos::Tokenizer* tokenizer = assets.tokenizer;
  if (tokenizer == nullptr) {
    if (config.backend.remote_tokenizer) {
      owned_tokenizer = std::make_unique<infer::RemoteTokenizer>(config.backend.endpoint,
                                                                 config.backend.timeout_seconds, config.backend.retries);
    } else {
      owned_tokenizer = std::make_unique<demos::WhitespaceTokenizer>();
    }
    tokenizer = owned_tokenizer.get();
  }

  const bool corpus_method = uses_corpus(config.method);
  const auto strategy = config.retrieval.value_or(default_retrieval(config.method));
  const bool needs_index = corpus_method && strategy != retrieve::Strategy::Random;
  const bool needs_embedder = needs_index || config.insert_identical;

  std::unique_ptr<embed::Embedder> owned_embedder;
  const embed::Embedder* embedder = assets.embedder;
  if (needs_embedder && embedder == nullptr) {
    owned_embedder = embed::make_embedder(config.embedder);
    embedder = owned_embedder.get();
  }

  if (is_oracle(config.method) && !dataset.train) {
    throw ConfigError(std::string(to_string(config.method)) + " needs a train split for " + dataset.name);
  }
  if (is_oracle(config.method) && dataset.train->empty()) throw ConfigError("train split is empty");

  const corpus::CorpusStore* store = nullptr;
  const vindex::VectorIndex* index = nullptr;
  corpus::CorpusStore derived_store;
  vindex::VectorIndex derived_index;
  if (corpus_method) {
    if (assets.corpus == nullptr) throw ConfigError(std::string(to_string(config.method)) + " needs a corpus");
    if (needs_index && assets.index == nullptr) {
      throw ConfigError(std::string(to_string(config.method)) + " needs an index");
    }
    store = assets.corpus;
    index = assets.index;
    if (config.coverage || config.corpus_fraction < 1.0) {
      if (config.coverage) {
        if (assets.extra_corpus == nullptr) throw ConfigError("coverage needs an extra corpus stream");
        derived_store = merge(*store, *assets.extra_corpus);
      } else {
        derived_store = *store;
      }
      if (config.corpus_fraction < 1.0) {
        derived_store =
            derived_store.subsample_paragraphs(config.corpus_fraction, derive_seed(config.subsample_seed, "corpus-fraction"));
      }
      store = &derived_store;
      if (needs_index) {
        vindex::BuildOptions opts;
        opts.mode = assets.index->mode();
        opts.seed = derive_seed(config.subsample_seed, "index");
        derived_index = vindex::VectorIndex::build(*store, *embedder, opts);
        index = &derived_index;
      }
    }
    if (needs_index && index->dim() != embedder->dim()) {
      throw ConfigError("embedder dim " + std::to_string(embedder->dim()) + " does not match index dim " +
                        std::to_string(index->dim()));
    }
    if (needs_index && index->size() != store->size()) {
      throw ConfigError("index has " + std::to_string(index->size()) + " rows but the corpus has " +
                        std::to_string(store->size()) + " sentences");
    }
  }

  // Test subsample, shared by every seed.
  std::vector<std::size_t> chosen;
  {
    const std::size_t take = std::min(config.test_cap, dataset.test.size());
    Rng rng(derive_seed(config.subsample_seed, "test-subsample"));
    for (auto i : rng.sample_without_replacement(dataset.test.size(), take)) chosen.push_back(i);
    std::sort(chosen.begin(), chosen.end());
  }

  const auto label_kind = effective_label_kind(config);
  std::vector<std::string> words;
  if (label_kind == demos::LabelKind::RandomWords) words = demos::random_word_mapping(task, config.word_seed);

  std::optional<retrieve::Retriever> retriever;
  if (needs_index) retriever.emplace(*index, *store, *embedder);

  RunResult result;
  result.config = config;
  result.dataset = dataset.name;
  result.task = task;
  std::size_t short_sets = 0;
  std::size_t excluded = 0;
  const infer::ScoringOptions scoring{config.backend.continuation_prefix};

  for (const auto seed : config.seeds) {
    // Oracle demos: one draw of train examples per seed, shared by all test inputs.
    std::vector<demos::PseudoDemo> oracle_demos;
    std::vector<DemoLog> oracle_logs;
    if (is_oracle(config.method)) {
      const auto& train = *dataset.train;
      Rng rng(derive_seed(seed, "train-demos"));
      const auto picks = rng.sample_without_replacement(train.size(), std::min(config.k, train.size()));
      std::vector<std::string> inputs;
      demos::LabelStrategy ls{label_kind, config.word_seed, {}};
      for (auto i : picks) {
        inputs.push_back(train[i].input);
        ls.gold.push_back(train[i].label);
      }
      oracle_demos = demos::assign_labels(inputs, task, ls, derive_seed(seed, "train-labels"));
      for (std::size_t i = 0; i < picks.size(); ++i) {
        oracle_logs.push_back({"train", picks[i], std::nullopt, oracle_demos[i].input, oracle_demos[i].label_text,
                               oracle_demos[i].label_index});
      }
    }

    std::vector<Prepared> prepared;
    prepared.reserve(chosen.size());
    for (const auto idx : chosen) {
      const auto& ex = dataset.test[idx];
      const std::uint64_t ex_seed = derive_seed(derive_seed(seed, "example"), idx);
      Prepared p;
      p.log.seed = seed;
      p.log.index = idx;
      p.log.test_input = ex.input;
      p.log.gold = ex.label;

      if (is_oracle(config.method)) {
        p.demos = oracle_demos;
        p.log.demos = oracle_logs;
      } else if (corpus_method) {
        retrieve::RetrievalRequest req;
        req.test_input = ex.input;
        req.k = config.k;
        req.strategy = strategy;
        req.pool_size = config.pool_size;
        req.seed = derive_seed(ex_seed, "retrieve");
        req.adjacency = config.adjacency;
        const auto got = retriever ? retriever->retrieve(req) : retrieve::retrieve_random(*store, req);
        p.log.short_set = got.short_set;
        p.log.excluded_matches = got.excluded_matches;
        short_sets += got.short_set ? 1 : 0;
        excluded += got.excluded_matches;
        std::vector<std::string> inputs;
        for (const auto& s : got.inputs) inputs.push_back(s.text);
        if (config.method == MethodKind::InputsOnly) {
          p.demos = demos::inputs_only(inputs);
        } else if (!inputs.empty()) {
          p.demos = demos::assign_labels(inputs, task, {label_kind, config.word_seed, {}}, derive_seed(ex_seed, "labels"));
        }
        for (std::size_t i = 0; i < got.inputs.size(); ++i) {
          p.log.demos.push_back({"corpus", got.inputs[i].id, got.provenance[i].anchor_id, got.inputs[i].text,
                                 p.demos[i].label_text, p.demos[i].label_index});
        }
      }
      if (config.insert_identical) {
        insert_identical_demo(p, std::max<std::size_t>(config.k, 1), ex_seed, label_kind, task, words, *embedder);
      }
      prepared.push_back(std::move(p));
    }

    std::vector<infer::PredictRequest> requests;
    requests.reserve(prepared.size());
    for (const auto& p : prepared) {
      requests.push_back({p.demos, p.log.test_input, config.method == MethodKind::InputsOnly});
    }
    const auto outcomes = infer::predict_batch(*backend, requests, config.inference, task, config.budget,
                                               *tokenizer, config.backend.max_in_flight, scoring);

    SeedMetrics sm;
    sm.seed = seed;
    std::vector<std::size_t> preds;
    std::vector<std::size_t> golds;
    for (std::size_t i = 0; i < prepared.size(); ++i) {
      auto& log = prepared[i].log;
      const auto& o = outcomes[i];
      log.prompt_hash = o.prompt_hash;
      log.demos_rendered = o.demos_rendered;
      if (o.ok()) {
        log.scores = o.scores->scores;
        log.prediction = o.scores->prediction;
        preds.push_back(o.scores->prediction);
        golds.push_back(log.gold);
      } else {
        log.error = o.error;
        ++sm.failed;
      }
      result.examples.push_back(std::move(log));
    }
    sm.scored = preds.size();
    sm.scores = metrics::compute(preds, golds, task.labels.size());
    result.per_seed.push_back(sm);
  }

  std::vector<double> acc;
  std::vector<double> f1;
  for (const auto& s : result.per_seed) {
    acc.push_back(s.scores.accuracy);
    f1.push_back(s.scores.macro_f1);
  }
  result.mean = {metrics::mean(acc), metrics::mean(f1)};
  result.std = {metrics::stddev(acc), metrics::stddev(f1)};
  if (config.insert_identical) result.copying = copying_match_rate(result.examples);

  auto& m = result.metadata;
  m["backend"] = backend->describe();
  m["tokenizer"] = config.backend.remote_tokenizer && assets.tokenizer == nullptr ? "remote" : "whitespace";
  m["direct_template"] = task.tmpl.input_prefix + " {input}\n" + task.tmpl.label_prefix + " {label}\n\n";
  m["channel_template"] = task.tmpl.label_prefix + " {label}\n" + task.tmpl.input_prefix + " {input}\n\n";
  m["continuation_prefix"] = config.backend.continuation_prefix;
  m["label_strategy"] = uses_corpus(config.method) || is_oracle(config.method) || config.insert_identical
                            ? ordered_json(demos::to_string(label_kind))
                            : ordered_json(nullptr);
  m["retrieval"] = corpus_method ? ordered_json(retrieve::to_string(strategy)) : ordered_json(nullptr);
  m["test_size"] = dataset.test.size();
  m["test_evaluated"] = chosen.size();
  m["corpus_sentences"] = store ? ordered_json(store->size()) : ordered_json(nullptr);
  m["corpus_paragraphs"] = store ? ordered_json(store->paragraph_count()) : ordered_json(nullptr);
  m["index_mode"] = index ? ordered_json(index->mode().kind == vindex::SearchMode::Exact ? "EXACT" : "PARTITIONED")
                          : ordered_json(nullptr);
  m["embedder_dim"] = embedder ? ordered_json(embedder->dim()) : ordered_json(nullptr);
  m["short_sets"] = short_sets;
  m["excluded_matches"] = excluded;
  return result;
}

CopyingRates copying_match_rate(std::span<const ExampleLog> logs) {
  CopyingRates r;
  std::size_t hit = 0;
  std::size_t hit_correct = 0;
  std::size_t hit_incorrect = 0;
  for (const auto& e : logs) {
    if (!e.prediction) continue;
    if (!e.inserted_label) {
      throw DataError("example " + std::to_string(e.index) + " (seed " + std::to_string(e.seed) +
                      ") has no inserted demo");
    }
    const bool matched = *e.prediction == *e.inserted_label;
    ++r.n_total;
    hit += matched ? 1 : 0;
    if (*e.inserted_label == e.gold) {
      ++r.n_correct;
      hit_correct += matched ? 1 : 0;
    } else {
      ++r.n_incorrect;
      hit_incorrect += matched ? 1 : 0;
    }
  }
  auto frac = [](std::size_t a, std::size_t b) { return b == 0 ? 0.0 : static_cast<double>(a) / static_cast<double>(b); };
  r.total = frac(hit, r.n_total);
  r.correct_label = frac(hit_correct, r.n_correct);
  r.incorrect_label = frac(hit_incorrect, r.n_incorrect);
  return r;
}

Replay replay(const ExampleLog& log, const ExperimentConfig& config, const demos::TaskSpec& task,
              const infer::LmBackend& backend, const demos::Tokenizer& tokenizer) {
  infer::PredictRequest req;
  req.test_input = log.test_input;
  req.inputs_only = config.method == MethodKind::InputsOnly;
  for (const auto& d : log.demos) req.demos.push_back({d.input, d.label, d.label_index});
  Replay r;
  r.outcome = infer::predict_one(backend, req, config.inference, task, config.budget, tokenizer,
                                 {config.backend.continuation_prefix});
  r.matches = r.outcome.prompt_hash == log.prompt_hash && log.prediction &&
              r.outcome.scores->prediction == *log.prediction && r.outcome.scores->scores == log.scores;
  return r;
}

// ---------------------------------------------------------------------------
// Grids

namespace {

const std::set<std::string>& supported_axes() {
  static const std::set<std::string> axes = {"method",          "seed",      "seeds",     "k",
                                             "label_strategy",  "retrieval", "inference", "corpus_fraction",
                                             "coverage",        "pool_size", "word_seed", "insert_identical"};
  return axes;
}

std::string value_label(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string sanitize(std::string s) {
  for (auto& c : s) {
    const auto u = static_cast<unsigned char>(c);
    if (!(std::isalnum(u) || c == '.' || c == '_' || c == '-' || c == '=')) c = '-';
  }
  return s;
}

}  // namespace

std::vector<GridAxis> parse_grid(const json& grid) {
  if (!grid.is_object()) throw ConfigError("grid must be an object of axis -> values");
  std::vector<GridAxis> axes;
  for (const auto& [name, values] : grid.items()) {
    if (!supported_axes().contains(name)) throw ConfigError("unsupported grid axis '" + name + "'");
    if (!values.is_array() || values.empty()) throw ConfigError("grid axis '" + name + "' needs a non-empty list");
    GridAxis a{name, {}};
    for (const auto& v : values) a.values.push_back(v);
    axes.push_back(std::move(a));
  }
  return axes;
}

SuiteResult ablation_suite(const ExperimentConfig& base, std::span<const GridAxis> axes, const Dataset& dataset,
                           const Assets& assets) {
  SuiteResult suite;
  suite.axes.assign(axes.begin(), axes.end());
  std::size_t total = 1;
  for (const auto& a : axes) total *= a.values.size();

  for (std::size_t cell = 0; cell < total; ++cell) {
    // Last axis varies fastest.
    std::vector<std::size_t> pick(axes.size());
    std::size_t rem = cell;
    for (std::size_t a = axes.size(); a-- > 0;) {
      pick[a] = rem % axes[a].values.size();
      rem /= axes[a].values.size();
    }
    CellResult cr;
    json cfg = base.to_json();
    std::string name;
    for (std::size_t a = 0; a < axes.size(); ++a) {
      const auto& v = axes[a].values[pick[a]];
      cr.overrides[axes[a].name] = v;
      if (axes[a].name == "seed") {
        cfg["seeds"] = json::array({v});
      } else {
        cfg[axes[a].name] = v;
      }
      if (!name.empty()) name += "__";
      name += axes[a].name + "=" + value_label(v);
    }
    cr.name = sanitize(name.empty() ? "base" : name);
    try {
      cr.result = run(ExperimentConfig::from_json(cfg), dataset, assets);
    } catch (const std::exception& e) {
      cr.error = e.what();
    }
    suite.cells.push_back(std::move(cr));
  }
  return suite;
}

ordered_json SuiteResult::to_json() const {
  ordered_json j;
  ordered_json grid = ordered_json::object();
  for (const auto& a : axes) grid[a.name] = a.values;
  j["grid"] = std::move(grid);
  ordered_json cells_j = ordered_json::array();
  ordered_json failures = ordered_json::array();
  for (const auto& c : cells) {
    ordered_json cj;
    cj["name"] = c.name;
    cj["overrides"] = c.overrides;
    cj["status"] = c.result ? "ok" : "failed";
    if (c.result) {
      cj["dataset"] = c.result->dataset;
      cj["mean"] = {{"accuracy", c.result->mean.accuracy}, {"macro_f1", c.result->mean.macro_f1}};
      cj["std"] = {{"accuracy", c.result->std.accuracy}, {"macro_f1", c.result->std.macro_f1}};
    } else {
      failures.push_back({{"name", c.name}, {"error", c.error}});
    }
    cells_j.push_back(std::move(cj));
  }
  j["cells"] = std::move(cells_j);
  j["failures"] = std::move(failures);
  return j;
}

void SuiteResult::write(const std::filesystem::path& dir) const {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create " + dir.string() + ": " + ec.message());
  for (const auto& c : cells) {
    if (c.result) c.result->write(dir / c.name);
  }
  write_file_atomic(dir / "run.json", to_json().dump(2) + "\n");
}

}  // namespace zicl::harness
