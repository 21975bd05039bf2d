#pragma once

// Experiment runner: methods x seeds over one dataset, metrics, per-example
// logs, replay, the identical-demo copying analysis, and ablation grids.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "zicl/corpus.hpp"
#include "zicl/demos.hpp"
#include "zicl/embed.hpp"
#include "zicl/infer.hpp"
#include "zicl/metrics.hpp"
#include "zicl/retrieve.hpp"
#include "zicl/vindex.hpp"

namespace zicl::harness {

struct Example {
  std::string input;
  std::size_t label = 0;
};

struct Dataset {
  std::string name;
  std::vector<Example> test;
  std::optional<std::vector<Example>> train;
  demos::TaskSpec task;

  /// Throws DataError on an empty input or out-of-range label.
  void validate() const;

  /// Reads `{name}.task.json`, `{name}.test.jsonl` and, if present,
  /// `{name}.train.jsonl` from `dir`. With `name` empty, `dir` must hold
  /// exactly one task file.
  static Dataset load(const std::filesystem::path& dir, const std::string& name = "");
};

enum class MethodKind { NoDemos, RandomInputs, NaiveZicl, Zicl, IclGold, IclRandom, InputsOnly };

std::string_view to_string(MethodKind m);
MethodKind method_kind_from_string(std::string_view s);
/// IclGold and IclRandom read the train split and never the corpus.
bool is_oracle(MethodKind m);

struct ExperimentConfig {
  MethodKind method = MethodKind::Zicl;
  infer::Method inference = infer::Method::Channel;
  std::size_t k = 16;
  /// Candidate pool for DIVERSE_NEAREST.
  std::size_t pool_size = 4096;
  std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
  std::size_t test_cap = 2000;
  /// Seeds the test subsample, which is shared by every seed.
  std::uint64_t subsample_seed = 0;
  double corpus_fraction = 1.0;
  /// Merge the extra corpus stream into the corpus before indexing.
  bool coverage = false;
  std::optional<demos::LabelKind> label_strategy;
  std::optional<retrieve::Strategy> retrieval;
  std::uint64_t word_seed = 0;
  corpus::AdjacencyPolicy adjacency = corpus::AdjacencyPolicy::FollowingThenPreceding;
  demos::Budget budget;
  /// Replace one demo per example with a copy of the test input.
  bool insert_identical = false;
  infer::BackendConfig backend;
  embed::EmbedderConfig embedder;

  /// Throws ConfigError.
  void validate() const;

  /// Keys mirror the field names; absent keys keep their defaults.
  static ExperimentConfig from_json(const nlohmann::json& j);
  nlohmann::ordered_json to_json() const;
};

/// Sub-objects of the config file, also usable on their own.
infer::BackendConfig backend_from_json(const nlohmann::json& j);
nlohmann::ordered_json backend_to_json(const infer::BackendConfig& b);
embed::EmbedderConfig embedder_from_json(const nlohmann::json& j);
nlohmann::ordered_json embedder_to_json(const embed::EmbedderConfig& e);

/// Shared, read-only inputs to a run. Only what the method needs must be set.
struct Assets {
  const corpus::CorpusStore* corpus = nullptr;
  const vindex::VectorIndex* index = nullptr;
  /// Required by corpus methods with similarity-based retrieval and by
  /// identical-demo insertion; built from config.embedder when null.
  const embed::Embedder* embedder = nullptr;
  /// Overrides config.backend when set.
  const infer::LmBackend* backend = nullptr;
  /// Whitespace tokenizer when null.
  const demos::Tokenizer* tokenizer = nullptr;
  /// Extra domain stream for the coverage ablation.
  const corpus::CorpusStore* extra_corpus = nullptr;
};

struct DemoLog {
  /// "corpus", "train" or "inserted".
  std::string source;
  std::optional<std::uint64_t> id;
  std::optional<std::uint64_t> anchor;
  std::string input;
  std::optional<std::string> label;
  std::optional<std::size_t> label_index;
};

struct ExampleLog {
  std::uint64_t seed = 0;
  /// Position in the dataset's test split.
  std::size_t index = 0;
  std::string test_input;
  std::size_t gold = 0;
  std::vector<DemoLog> demos;
  bool short_set = false;
  std::size_t excluded_matches = 0;
  std::optional<std::size_t> inserted_slot;
  std::optional<std::size_t> inserted_label;
  std::string prompt_hash;
  std::size_t demos_rendered = 0;
  std::vector<double> scores;
  std::optional<std::size_t> prediction;
  std::string error;

  nlohmann::ordered_json to_json() const;
  static ExampleLog from_json(const nlohmann::json& j);
};

struct SeedMetrics {
  std::uint64_t seed = 0;
  metrics::Scores scores;
  std::size_t scored = 0;
  std::size_t failed = 0;
};

struct CopyingRates {
  double total = 0.0;
  double correct_label = 0.0;
  double incorrect_label = 0.0;
  std::size_t n_total = 0;
  std::size_t n_correct = 0;
  std::size_t n_incorrect = 0;
};

struct RunResult {
  ExperimentConfig config;
  std::string dataset;
  demos::TaskSpec task;
  std::vector<SeedMetrics> per_seed;
  metrics::Scores mean;
  metrics::Scores std;
  std::vector<ExampleLog> examples;
  nlohmann::ordered_json metadata;
  std::optional<CopyingRates> copying;

  nlohmann::ordered_json to_json() const;
  std::string examples_jsonl() const;
  /// Writes run.json and examples.jsonl into `dir` atomically.
  void write(const std::filesystem::path& dir) const;
};

/// Runs every seed of `config`. Throws ConfigError when the method's assets are
/// missing, BackendError when every example of a seed failed.
RunResult run(const ExperimentConfig& config, const Dataset& dataset, const Assets& assets);

/// Fraction of predictions equal to the inserted demo's label, overall and
/// split by whether that label was gold. Failed examples are skipped. Throws
/// DataError for a scored example without an inserted demo.
CopyingRates copying_match_rate(std::span<const ExampleLog> logs);

struct Replay {
  infer::PredictOutcome outcome;
  bool matches = false;
};

/// Re-renders and re-scores one logged example from its logged demos alone.
Replay replay(const ExampleLog& log, const ExperimentConfig& config, const demos::TaskSpec& task,
              const infer::LmBackend& backend, const demos::Tokenizer& tokenizer);

// ---------------------------------------------------------------------------
// Ablation grids

struct GridAxis {
  /// An ExperimentConfig key, or "seed" for a single-seed cell.
  std::string name;
  std::vector<nlohmann::json> values;
};

struct CellResult {
  std::string name;
  nlohmann::ordered_json overrides;
  std::optional<RunResult> result;
  std::string error;
};

struct SuiteResult {
  std::vector<GridAxis> axes;
  std::vector<CellResult> cells;

  nlohmann::ordered_json to_json() const;
  /// One subdirectory per successful cell plus a top-level run.json.
  void write(const std::filesystem::path& dir) const;
};

/// Parses {"axis": [values...], ...}; axes come out sorted by name. Throws ConfigError for an
/// unsupported axis or an empty value list.
std::vector<GridAxis> parse_grid(const nlohmann::json& grid);

/// Runs the cartesian product of `axes` over `base`, sequentially. A failing
/// cell is recorded and the grid continues.
SuiteResult ablation_suite(const ExperimentConfig& base, std::span<const GridAxis> axes,
                           const Dataset& dataset, const Assets& assets);

}  // namespace zicl::harness
