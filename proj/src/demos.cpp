#include "zicl/demos.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "zicl/errors.hpp"
#include "zicl/unigrams.hpp"
#include "zicl/util.hpp"

namespace zicl::demos {

std::span<const std::string_view> unigram_list() {
  static const std::vector<std::string_view> words = [] {
    std::vector<std::string_view> out;
    std::string_view blob(detail::kUnigramBlob);
    while (!blob.empty()) {
      const auto nl = blob.find('\n');
      out.push_back(blob.substr(0, nl));
      if (nl == std::string_view::npos) break;
      blob.remove_prefix(nl + 1);
    }
    return out;
  }();
  return words;
}

std::string_view to_string(LabelKind k) {
  switch (k) {
    case LabelKind::Random: return "RANDOM";
    case LabelKind::Synonym: return "SYNONYM";
    case LabelKind::RandomWords: return "RANDOM_WORDS";
    case LabelKind::Gold: return "GOLD";
  }
  return "?";
}

LabelKind label_kind_from_string(std::string_view s) {
  if (s == "RANDOM" || s == "ORIGINAL") return LabelKind::Random;
  if (s == "SYNONYM") return LabelKind::Synonym;
  if (s == "RANDOM_WORDS") return LabelKind::RandomWords;
  if (s == "GOLD") return LabelKind::Gold;
  throw ConfigError("unknown label strategy '" + std::string(s) + "'");
}

std::vector<std::string> random_word_mapping(const TaskSpec& task, std::uint64_t word_seed) {
  std::unordered_set<std::string_view> banned;
  for (const auto& l : task.labels) banned.insert(l);
  for (const auto& s : task.synonyms) banned.insert(s);
  std::vector<std::string_view> pool;
  for (auto w : unigram_list()) {
    if (!banned.contains(w)) pool.push_back(w);
  }
  Rng rng(derive_seed(word_seed, "random-words"));
  std::vector<std::string> out;
  for (auto i : rng.sample_without_replacement(pool.size(), task.labels.size())) out.emplace_back(pool[i]);
  return out;
}

std::vector<PseudoDemo> assign_labels(std::span<const std::string> inputs, const TaskSpec& task,
                                      const LabelStrategy& strategy, std::uint64_t seed) {
  if (inputs.empty()) throw std::invalid_argument("assign_labels: no inputs");
  std::vector<PseudoDemo> out;
  out.reserve(inputs.size());

  if (strategy.kind == LabelKind::Gold) {
    if (strategy.gold.size() != inputs.size()) {
      throw std::invalid_argument("assign_labels: " + std::to_string(strategy.gold.size()) +
                                  " gold labels for " + std::to_string(inputs.size()) + " inputs");
    }
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      const std::size_t y = strategy.gold[i];
      if (y >= task.labels.size()) throw std::invalid_argument("assign_labels: gold label out of range");
      out.push_back({inputs[i], task.labels[y], y});
    }
    return out;
  }

  std::vector<std::string> words;
  if (strategy.kind == LabelKind::RandomWords) words = random_word_mapping(task, strategy.word_seed);
  const std::vector<std::string>& verbalizer = strategy.kind == LabelKind::Synonym     ? task.synonyms
                                               : strategy.kind == LabelKind::RandomWords ? words
                                                                                         : task.labels;
  Rng rng(derive_seed(seed, "labels"));
  for (const auto& input : inputs) {
    const std::size_t y = rng.below(task.labels.size());
    out.push_back({input, verbalizer[y], y});
  }
  return out;
}

std::vector<PseudoDemo> inputs_only(std::span<const std::string> inputs) {
  std::vector<PseudoDemo> out;
  out.reserve(inputs.size());
  for (const auto& in : inputs) out.push_back({in, std::nullopt, std::nullopt});
  return out;
}

// ---------------------------------------------------------------------------

std::size_t WhitespaceTokenizer::count(std::string_view text) const { return split_whitespace(text).size(); }

std::string longest_fitting_prefix(std::string_view text,
                                   const std::function<bool(std::string_view)>& fits) {
  const auto words = split_whitespace(text);
  auto prefix = [&](std::size_t n) -> std::string_view {
    if (n == 0) return {};
    const char* end = words[n - 1].data() + words[n - 1].size();
    return std::string_view(words.front().data(), static_cast<std::size_t>(end - words.front().data()));
  };
  std::size_t lo = 0;  // prefix(lo) fits (or lo == 0)
  std::size_t hi = words.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    if (fits(prefix(mid))) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return std::string(prefix(lo));
}

namespace {

using BlockFn = std::function<std::string(const PseudoDemo&, std::string_view input)>;

struct Fitted {
  std::vector<std::string> blocks;  // empty string when the demo cannot fit
  std::vector<DemoTruncation> report;
};

Fitted fit_examples(std::span<const PseudoDemo> demos, const Budget& budget, const Tokenizer& tok,
                    const BlockFn& block) {
  Fitted f;
  for (const auto& d : demos) {
    std::string full = block(d, d.input);
    DemoTruncation t;
    t.original_tokens = tok.count(full);
    if (t.original_tokens <= budget.per_example) {
      t.kept_tokens = t.original_tokens;
      f.blocks.push_back(std::move(full));
    } else {
      const auto kept = longest_fitting_prefix(
          d.input, [&](std::string_view p) { return tok.count(block(d, p)) <= budget.per_example; });
      if (kept.empty()) {
        t.dropped = true;
        f.blocks.emplace_back();
      } else {
        f.blocks.push_back(block(d, kept));
        t.kept_tokens = tok.count(f.blocks.back());
      }
    }
    f.report.push_back(t);
  }
  return f;
}

std::string join_from(const Fitted& f, std::size_t first) {
  std::string out;
  for (std::size_t i = first; i < f.blocks.size(); ++i) out += f.blocks[i];
  return out;
}

// First demo index such that demos[first..] plus `tail` fit the total budget.
std::size_t drop_front(Fitted& f, std::string_view tail, const Budget& budget, const Tokenizer& tok) {
  std::size_t first = 0;
  while (first < f.blocks.size() && tok.count(join_from(f, first) + std::string(tail)) > budget.total) {
    ++first;
  }
  for (std::size_t i = 0; i < first; ++i) {
    f.report[i].dropped = true;
    f.report[i].kept_tokens = 0;
  }
  return first;
}

std::size_t kept_count(const Fitted& f, std::size_t first) {
  std::size_t n = 0;
  for (std::size_t i = first; i < f.report.size(); ++i) n += f.report[i].dropped ? 0 : 1;
  return n;
}

void require_labels(std::span<const PseudoDemo> demos, bool inputs_only) {
  if (inputs_only) return;
  for (const auto& d : demos) {
    if (!d.label_text) throw std::invalid_argument("labeled layout given a demo without a label");
  }
}

}  // namespace

Prompt render_prompt(std::span<const PseudoDemo> demos, std::string_view test_input,
                     const TaskSpec& task, const Budget& budget, const Tokenizer& tokenizer,
                     const RenderOptions& options) {
  require_labels(demos, options.inputs_only);
  const auto& t = task.tmpl;
  const std::string stub = t.input_prefix + " " + std::string(test_input) + "\n" + t.label_prefix;
  if (tokenizer.count(stub) > budget.total) {
    throw std::length_error("test input alone exceeds the prompt budget");
  }
  BlockFn block;
  if (options.inputs_only) {
    block = [](const PseudoDemo&, std::string_view in) { return std::string(in) + "\n"; };
  } else {
    block = [&t](const PseudoDemo& d, std::string_view in) {
      return t.input_prefix + " " + std::string(in) + "\n" + t.label_prefix + " " + *d.label_text + "\n\n";
    };
  }
  Fitted fitted = fit_examples(demos, budget, tokenizer, block);
  const std::size_t first = drop_front(fitted, stub, budget, tokenizer);
  Prompt p;
  p.text = join_from(fitted, first) + stub;
  p.demo_count = kept_count(fitted, first);
  p.truncation = std::move(fitted.report);
  return p;
}

std::vector<Prompt> render_channel_prompts(std::span<const PseudoDemo> demos, std::string_view test_input,
                                           const TaskSpec& task, const Budget& budget,
                                           const Tokenizer& tokenizer, bool inputs_only,
                                           std::string_view continuation_prefix) {
  require_labels(demos, inputs_only);
  const auto& t = task.tmpl;
  const std::string continuation = std::string(continuation_prefix) + std::string(test_input);
  std::vector<std::string> stubs;
  std::size_t widest = 0;
  std::size_t widest_tokens = 0;
  for (std::size_t y = 0; y < task.labels.size(); ++y) {
    stubs.push_back(t.label_prefix + " " + task.labels[y] + "\n" + t.input_prefix);
    const std::size_t n = tokenizer.count(stubs.back() + continuation);
    if (n > widest_tokens) {
      widest_tokens = n;
      widest = y;
    }
  }
  if (widest_tokens > budget.total) throw std::length_error("test input alone exceeds the prompt budget");

  BlockFn block;
  if (inputs_only) {
    block = [](const PseudoDemo&, std::string_view in) { return std::string(in) + "\n"; };
  } else {
    block = [&t](const PseudoDemo& d, std::string_view in) {
      return t.label_prefix + " " + *d.label_text + "\n" + t.input_prefix + " " + std::string(in) + "\n\n";
    };
  }
  Fitted fitted = fit_examples(demos, budget, tokenizer, block);
  const std::size_t first = drop_front(fitted, stubs[widest] + continuation, budget, tokenizer);
  const std::string context = join_from(fitted, first);
  const std::size_t kept = kept_count(fitted, first);

  std::vector<Prompt> out;
  for (const auto& stub : stubs) out.push_back({context + stub, continuation, kept, fitted.report});
  return out;
}

}  // namespace zicl::demos
