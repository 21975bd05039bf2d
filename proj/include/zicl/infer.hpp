#pragma once

// Label scoring against a language-model backend.
//
// A backend answers one question: the natural-log probability of a
// continuation given a prompt. Direct inference scores " {label}" after the
// direct prompt; channel inference scores " {test_input}" after a
// label-conditioned prompt. Both take the argmax with ties going to the lowest
// label index.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zicl/demos.hpp"
#include "zicl/http.hpp"
#include "zicl/wire.hpp"

namespace zicl::infer {

using wire::ScoreItem;
using wire::ScoreResult;

class LmBackend {
 public:
  virtual ~LmBackend() = default;
  /// One backend call. Results are aligned with `items`. Throws BackendError.
  virtual std::vector<ScoreResult> score(std::span<const ScoreItem> items) const = 0;
  virtual std::string describe() const = 0;
};

enum class BackendKind { Remote, MockUniform, MockCopying, Scripted };
enum class CopyKernel { TokenJaccard, HashedCosine };

std::string_view to_string(BackendKind k);
BackendKind backend_kind_from_string(std::string_view s);
std::string_view to_string(CopyKernel k);
CopyKernel copy_kernel_from_string(std::string_view s);

struct CopyingOptions {
  /// Probability of copying the most similar demo's label.
  double copy_strength = 1.0;
  CopyKernel kernel = CopyKernel::TokenJaccard;
  /// When not copying, prefer a candidate label that appears as a word of the
  /// test input.
  bool lexical_prior = false;
  /// Treat a demo labeled with synonym i as carrying label i. Off by default:
  /// a synonym is then a different string and cannot be copied.
  bool copy_synonyms = false;
  std::uint64_t seed = 0;
};

struct BackendConfig {
  BackendKind kind = BackendKind::MockUniform;
  std::string endpoint;
  std::size_t max_in_flight = 8;
  double timeout_seconds = 60.0;
  std::size_t retries = 2;
  CopyingOptions copying;
  /// Scripted: fixture file (see ScriptedLm).
  std::filesystem::path script;
  /// Prepended to every scored continuation.
  std::string continuation_prefix = " ";
  /// Use the backend's /tokenize endpoint for prompt budgeting (Remote only).
  bool remote_tokenizer = false;

  void validate() const;
};

/// POST {endpoint}/score with retries.
class RemoteLm final : public LmBackend {
 public:
  explicit RemoteLm(const BackendConfig& config);
  std::vector<ScoreResult> score(std::span<const ScoreItem> items) const override;
  std::string describe() const override;

 private:
  http::Endpoint endpoint_;
  double timeout_;
  std::size_t retries_;
};

/// Token counts from POST {endpoint}/tokenize.
class RemoteTokenizer final : public demos::Tokenizer {
 public:
  RemoteTokenizer(const std::string& endpoint, double timeout_seconds, std::size_t retries);
  std::size_t count(std::string_view text) const override;

 private:
  http::Endpoint endpoint_;
  double timeout_;
  std::size_t retries_;
};

/// Every token equally likely under a 50,257-word vocabulary, so any two
/// single-word continuations tie.
class MockUniformLm final : public LmBackend {
 public:
  std::vector<ScoreResult> score(std::span<const ScoreItem> items) const override;
  std::string describe() const override { return "MOCK_UNIFORM"; }
};

/// An executable model of the copying effect.
///
/// The mock parses the prompt with the task template (direct, channel or
/// inputs-only layout), finds the labeled demo whose input is most similar to
/// the test input (ties go to the later demo), and with probability
/// copy_strength strongly prefers the candidate equal to that demo's label.
/// Otherwise, or when the demo's label text is not a candidate (e.g. a synonym
/// with copy_synonyms off), it falls back to the lexical prior if enabled and
/// finally to a seeded pseudo-random preference that is uniform over
/// candidates. Decisions are a pure function of (seed, demos, test input).
class MockCopyingLm final : public LmBackend {
 public:
  MockCopyingLm(demos::TaskSpec task, CopyingOptions options);
  std::vector<ScoreResult> score(std::span<const ScoreItem> items) const override;
  std::string describe() const override;

  struct ParsedPrompt {
    std::vector<demos::PseudoDemo> demos;
    std::string test_input;
    std::string candidate;
  };
  /// Recovers demos, test input and candidate label from one scoring item.
  ParsedPrompt parse(const ScoreItem& item) const;

  double similarity(std::string_view a, std::string_view b) const;

  /// Label index the mock would copy for these demos and test input, if any.
  std::optional<std::size_t> copy_target(std::span<const demos::PseudoDemo> demos,
                                         std::string_view test_input) const;

 private:
  double score_one(const ScoreItem& item) const;

  demos::TaskSpec task_;
  CopyingOptions options_;
};

/// Fixture-driven backend. File format:
///   {"default": -10.0,
///    "rules": [{"continuation": " great", "prompt_contains": "...",
///               "prompt_suffix": "...", "logprob": -1.0}, ...]}
/// The first rule whose present fields all match wins.
class ScriptedLm final : public LmBackend {
 public:
  struct Rule {
    std::optional<std::string> continuation;
    std::optional<std::string> prompt_contains;
    std::optional<std::string> prompt_suffix;
    double logprob = 0.0;
  };

  ScriptedLm(std::vector<Rule> rules, double default_logprob);
  static ScriptedLm load(const std::filesystem::path& path);

  std::vector<ScoreResult> score(std::span<const ScoreItem> items) const override;
  std::string describe() const override { return "SCRIPTED"; }

 private:
  std::vector<Rule> rules_;
  double default_;
};

std::unique_ptr<LmBackend> make_backend(const BackendConfig& config, const demos::TaskSpec& task);

// ---------------------------------------------------------------------------

struct LabelScores {
  std::vector<double> scores;
  std::size_t prediction = 0;

  friend bool operator==(const LabelScores&, const LabelScores&) = default;
};

/// Index of the maximum, lowest index on ties. Requires a non-empty span.
std::size_t argmax_lowest(std::span<const double> scores);

enum class Method { Direct, Channel };
std::string_view to_string(Method m);
Method method_from_string(std::string_view s);

struct ScoringOptions {
  std::string continuation_prefix = " ";
};

/// One backend call per candidate label. The prompt must end with the label prefix.
LabelScores score_direct(const LmBackend& backend, const demos::Prompt& prompt,
                         const demos::TaskSpec& task, const ScoringOptions& options = {});

/// Renders the channel prompt per candidate and scores the test input as the
/// continuation; exactly one backend call per candidate label.
LabelScores score_channel(const LmBackend& backend, std::span<const demos::PseudoDemo> demos,
                          std::string_view test_input, const demos::TaskSpec& task,
                          const demos::Budget& budget, const demos::Tokenizer& tokenizer,
                          const ScoringOptions& options = {}, bool inputs_only = false);

struct PredictRequest {
  std::vector<demos::PseudoDemo> demos;
  std::string test_input;
  bool inputs_only = false;
};

struct PredictOutcome {
  std::optional<LabelScores> scores;
  std::string error;
  /// FNV-1a of the rendered prompt text(s).
  std::string prompt_hash;
  std::size_t demos_rendered = 0;

  bool ok() const noexcept { return scores.has_value(); }
};

/// Renders and scores every request with at most `max_in_flight` in progress.
/// Output is aligned with `requests`; a failing item records its error and the
/// rest still complete. Throws BackendError only when every item failed.
std::vector<PredictOutcome> predict_batch(const LmBackend& backend, std::span<const PredictRequest> requests,
                                          Method method, const demos::TaskSpec& task,
                                          const demos::Budget& budget, const demos::Tokenizer& tokenizer,
                                          std::size_t max_in_flight, const ScoringOptions& options = {});

/// Renders and scores one request; errors propagate.
PredictOutcome predict_one(const LmBackend& backend, const PredictRequest& request, Method method,
                           const demos::TaskSpec& task, const demos::Budget& budget,
                           const demos::Tokenizer& tokenizer, const ScoringOptions& options = {});

}  // namespace zicl::infer
