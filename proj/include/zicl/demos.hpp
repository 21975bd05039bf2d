#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace zicl::demos {

struct Template {
  std::string input_prefix = "Review:";
  std::string label_prefix = "Sentiment:";

  friend bool operator==(const Template&, const Template&) = default;
};

/// One classification task: the label set, its 1-1 synonym map, and the
/// minimal prompt template.
struct TaskSpec {
  std::string name;
  std::vector<std::string> labels;
  /// synonyms[i] is the synonym of labels[i].
  std::vector<std::string> synonyms;
  Template tmpl;
  bool covered_by_corpus = false;

  /// Throws ConfigError unless |labels| >= 2 and synonyms are a bijection
  /// onto distinct strings disjoint from the labels.
  void validate() const;

  /// TaskSpec file: {"name","labels":[..],"synonyms":{label:synonym},
  /// "input_prefix","label_prefix","covered_by_corpus"}.
  static TaskSpec from_json(const nlohmann::json& j);
  nlohmann::ordered_json to_json() const;
  static TaskSpec load(const std::filesystem::path& path);

  friend bool operator==(const TaskSpec&, const TaskSpec&) = default;
};

/// The nine sentiment tasks with their labels and synonyms.
const std::vector<TaskSpec>& builtin_tasks();
/// Case-insensitive lookup; nullptr when absent.
const TaskSpec* find_builtin_task(std::string_view name);

enum class LabelKind { Random, Synonym, RandomWords, Gold };

std::string_view to_string(LabelKind k);
/// "RANDOM", "SYNONYM", "RANDOM_WORDS", "GOLD" ("ORIGINAL" is an alias of RANDOM).
LabelKind label_kind_from_string(std::string_view s);

struct LabelStrategy {
  LabelKind kind = LabelKind::Synonym;
  /// Seeds the label -> unigram bijection for RandomWords.
  std::uint64_t word_seed = 0;
  /// Gold label indices, aligned with the inputs, for Gold.
  std::vector<std::size_t> gold;
};

struct PseudoDemo {
  std::string input;
  /// Absent for inputs-only conditioning.
  std::optional<std::string> label_text;
  std::optional<std::size_t> label_index;

  friend bool operator==(const PseudoDemo&, const PseudoDemo&) = default;
};

/// label -> unigram, drawn without replacement from the bundled list with
/// every label and synonym removed.
std::vector<std::string> random_word_mapping(const TaskSpec& task, std::uint64_t word_seed);

/// Pairs each input with a label. Random, Synonym and RandomWords draw the
/// label index uniformly per input from `seed`; Gold passes labels through.
/// Throws std::invalid_argument on a Gold length mismatch or empty input list.
std::vector<PseudoDemo> assign_labels(std::span<const std::string> inputs, const TaskSpec& task,
                                      const LabelStrategy& strategy, std::uint64_t seed);

std::vector<PseudoDemo> inputs_only(std::span<const std::string> inputs);

// ---------------------------------------------------------------------------
// Tokenization

class Tokenizer {
 public:
  virtual ~Tokenizer() = default;
  virtual std::size_t count(std::string_view text) const = 0;
};

/// Counts maximal runs of non-whitespace bytes.
class WhitespaceTokenizer final : public Tokenizer {
 public:
  std::size_t count(std::string_view text) const override;
};

/// Longest whitespace-word prefix of `text` for which `fits` holds, found by
/// binary search (fits must be monotone in prefix length). Returns "" when no
/// word fits.
std::string longest_fitting_prefix(std::string_view text,
                                   const std::function<bool(std::string_view)>& fits);

// ---------------------------------------------------------------------------
// Prompt rendering

struct Budget {
  std::size_t per_example = 256;
  std::size_t total = 1024;
};

struct RenderOptions {
  /// Render demos as bare "{input}\n" lines without labels or prefixes.
  bool inputs_only = false;
};

struct DemoTruncation {
  std::size_t original_tokens = 0;
  std::size_t kept_tokens = 0;
  /// Dropped from the front to meet the total budget, or unable to fit at all.
  bool dropped = false;
};

struct Prompt {
  std::string text;
  /// Channel only: " {test_input}", scored as the continuation.
  std::string continuation;
  std::size_t demo_count = 0;
  std::vector<DemoTruncation> truncation;
};

/// Direct layout, per demo: "{input_prefix} {input}\n{label_prefix} {label}\n\n",
/// then the stub "{input_prefix} {test_input}\n{label_prefix}".
///
/// Each demo's input is truncated so the rendered example fits
/// budget.per_example tokens; then demos are dropped from the front until the
/// whole prompt fits budget.total. Throws std::length_error when the stub
/// alone exceeds the total.
Prompt render_prompt(std::span<const PseudoDemo> demos, std::string_view test_input,
                     const TaskSpec& task, const Budget& budget, const Tokenizer& tokenizer,
                     const RenderOptions& options = {});

/// Channel layout, one prompt per candidate label (in label order). Demo:
/// "{label_prefix} {label}\n{input_prefix} {input}\n\n"; stub
/// "{label_prefix} {y}\n{input_prefix}"; continuation " {test_input}".
/// The same demos are kept for every candidate, sized against the candidate
/// with the largest token count.
std::vector<Prompt> render_channel_prompts(std::span<const PseudoDemo> demos, std::string_view test_input,
                                           const TaskSpec& task, const Budget& budget,
                                           const Tokenizer& tokenizer, bool inputs_only = false,
                                           std::string_view continuation_prefix = " ");

}  // namespace zicl::demos
