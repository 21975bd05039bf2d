#include "zicl/infer.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <mutex>
#include <set>
#include <thread>

#include <json.hpp>

#include "zicl/embed.hpp"
#include "zicl/errors.hpp"
#include "zicl/util.hpp"

namespace zicl::infer {

std::string_view to_string(BackendKind k) {
  switch (k) {
    case BackendKind::Remote: return "REMOTE";
    case BackendKind::MockUniform: return "MOCK_UNIFORM";
    case BackendKind::MockCopying: return "MOCK_COPYING";
    case BackendKind::Scripted: return "SCRIPTED";
  }
  return "?";
}

BackendKind backend_kind_from_string(std::string_view s) {
  if (s == "REMOTE") return BackendKind::Remote;
  if (s == "MOCK_UNIFORM") return BackendKind::MockUniform;
  if (s == "MOCK_COPYING") return BackendKind::MockCopying;
  if (s == "SCRIPTED") return BackendKind::Scripted;
  throw ConfigError("unknown backend kind '" + std::string(s) + "'");
}

std::string_view to_string(CopyKernel k) {
  return k == CopyKernel::TokenJaccard ? "TOKEN_JACCARD" : "HASHED_COSINE";
}

CopyKernel copy_kernel_from_string(std::string_view s) {
  if (s == "TOKEN_JACCARD") return CopyKernel::TokenJaccard;
  if (s == "HASHED_COSINE") return CopyKernel::HashedCosine;
  throw ConfigError("unknown similarity kernel '" + std::string(s) + "'");
}

void BackendConfig::validate() const {
  if (!(copying.copy_strength >= 0.0 && copying.copy_strength <= 1.0)) {
    throw ConfigError("copy_strength must lie in [0, 1]");
  }
  if (max_in_flight == 0) throw ConfigError("max_in_flight must be positive");
  if (!(timeout_seconds > 0.0)) throw ConfigError("timeout must be positive");
  if (kind == BackendKind::Remote && endpoint.empty()) throw ConfigError("REMOTE backend needs an endpoint");
  if (kind == BackendKind::Scripted && script.empty()) throw ConfigError("SCRIPTED backend needs a script file");
}

// ---------------------------------------------------------------------------

RemoteLm::RemoteLm(const BackendConfig& config)
    : endpoint_(http::Endpoint::parse(config.endpoint)),
      timeout_(config.timeout_seconds),
      retries_(config.retries) {}

std::vector<ScoreResult> RemoteLm::score(std::span<const ScoreItem> items) const {
  auto all = [&] {
    std::vector<std::size_t> idx(items.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return idx;
  };
  std::string body;
  try {
    body = http::post_json_retrying(endpoint_, "/score",
                                    wire::encode(wire::ScoreRequest{{items.begin(), items.end()}}), timeout_,
                                    retries_);
  } catch (const http::TransportError& e) {
    throw BackendError(std::string("score: ") + e.what(), all());
  }
  wire::ScoreResponse resp;
  try {
    resp = wire::decode_score_response(body);
  } catch (const DataError& e) {
    throw BackendError(std::string("score: ") + e.what(), all());
  }
  if (resp.items.size() != items.size()) {
    throw BackendError("score: expected " + std::to_string(items.size()) + " results, got " +
                           std::to_string(resp.items.size()),
                       all());
  }
  return resp.items;
}

std::string RemoteLm::describe() const { return "REMOTE " + endpoint_.str(); }

RemoteTokenizer::RemoteTokenizer(const std::string& endpoint, double timeout_seconds, std::size_t retries)
    : endpoint_(http::Endpoint::parse(endpoint)), timeout_(timeout_seconds), retries_(retries) {}

std::size_t RemoteTokenizer::count(std::string_view text) const {
  try {
    const auto body = http::post_json_retrying(endpoint_, "/tokenize",
                                               wire::encode(wire::TokenizeRequest{std::string(text)}),
                                               timeout_, retries_);
    return wire::decode_tokenize_response(body).count;
  } catch (const http::TransportError& e) {
    throw BackendError(std::string("tokenize: ") + e.what());
  } catch (const DataError& e) {
    throw BackendError(std::string("tokenize: ") + e.what());
  }
}

// ---------------------------------------------------------------------------

std::vector<ScoreResult> MockUniformLm::score(std::span<const ScoreItem> items) const {
  static const double per_token = std::log(50257.0);
  std::vector<ScoreResult> out;
  for (const auto& it : items) {
    const std::size_t n = split_whitespace(it.continuation).size();
    out.push_back({-per_token * static_cast<double>(n), n});
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

bool ends_with_line(std::string_view s, std::string_view tail) {
  if (!s.ends_with(tail)) return false;
  return s.size() == tail.size() || s[s.size() - tail.size() - 1] == '\n';
}

std::set<std::string> word_set(std::string_view text) {
  std::set<std::string> out;
  std::string cur;
  for (char c : text) {
    const auto u = static_cast<unsigned char>(c);
    if (std::isalnum(u) || u >= 0x80) {
      cur.push_back(static_cast<char>(std::tolower(u)));
    } else if (!cur.empty()) {
      out.insert(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) out.insert(std::move(cur));
  return out;
}

std::vector<std::string_view> split_on(std::string_view s, std::string_view sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto p = s.find(sep);
    out.push_back(s.substr(0, p));
    if (p == std::string_view::npos) break;
    s.remove_prefix(p + sep.size());
  }
  return out;
}

// Labeled blocks "{first} {a}\n{second} {b}"; nullopt if any block deviates.
std::optional<std::vector<std::pair<std::string, std::string>>> parse_blocks(std::string_view context,
                                                                             std::string_view first,
                                                                             std::string_view second) {
  std::vector<std::pair<std::string, std::string>> out;
  const std::string head = std::string(first) + " ";
  const std::string mid = "\n" + std::string(second) + " ";
  for (auto block : split_on(context, "\n\n")) {
    if (block.empty()) continue;
    if (!block.starts_with(head)) return std::nullopt;
    const auto p = block.find(mid, head.size());
    if (p == std::string_view::npos) return std::nullopt;
    out.emplace_back(std::string(block.substr(head.size(), p - head.size())),
                     std::string(block.substr(p + mid.size())));
  }
  return out;
}

std::string strip_prefix_word(std::string_view line, std::string_view prefix) {
  if (line.starts_with(prefix)) line.remove_prefix(prefix.size());
  return std::string(trim(line));
}

}  // namespace

MockCopyingLm::MockCopyingLm(demos::TaskSpec task, CopyingOptions options)
    : task_(std::move(task)), options_(options) {
  if (!(options_.copy_strength >= 0.0 && options_.copy_strength <= 1.0)) {
    throw ConfigError("copy_strength must lie in [0, 1]");
  }
}

std::string MockCopyingLm::describe() const {
  return "MOCK_COPYING(" + std::string(to_string(options_.kernel)) +
         ", copy_strength=" + nlohmann::json(options_.copy_strength).dump() + ")";
}

MockCopyingLm::ParsedPrompt MockCopyingLm::parse(const ScoreItem& item) const {
  const auto& ip = task_.tmpl.input_prefix;
  const auto& lp = task_.tmpl.label_prefix;
  std::string_view prompt = item.prompt;
  ParsedPrompt out;
  bool channel;
  std::string_view rest;
  if (ends_with_line(prompt, ip)) {
    channel = true;
    rest = prompt.substr(0, prompt.size() - ip.size());
  } else if (ends_with_line(prompt, lp)) {
    channel = false;
    rest = prompt.substr(0, prompt.size() - lp.size());
  } else {
    throw BackendError("mock: prompt does not end with a template stub");
  }
  if (rest.ends_with('\n')) rest.remove_suffix(1);
  const auto nl = rest.rfind('\n');
  const std::string_view last = nl == std::string_view::npos ? rest : rest.substr(nl + 1);
  const std::string_view context = nl == std::string_view::npos ? std::string_view{} : rest.substr(0, nl + 1);

  if (channel) {
    out.candidate = strip_prefix_word(last, lp);
    out.test_input = std::string(trim(item.continuation));
  } else {
    out.test_input = strip_prefix_word(last, ip);
    out.candidate = std::string(trim(item.continuation));
  }

  const auto blocks = channel ? parse_blocks(context, lp, ip) : parse_blocks(context, ip, lp);
  if (blocks) {
    for (const auto& [a, b] : *blocks) {
      demos::PseudoDemo d;
      d.input = channel ? b : a;
      d.label_text = channel ? a : b;
      out.demos.push_back(std::move(d));
    }
  } else {
    for (auto line : split_on(context, "\n")) {
      if (!trim(line).empty()) out.demos.push_back({std::string(line), std::nullopt, std::nullopt});
    }
  }
  return out;
}

double MockCopyingLm::similarity(std::string_view a, std::string_view b) const {
  if (options_.kernel == CopyKernel::HashedCosine) {
    static const embed::HashedEmbedder emb(256);
    try {
      return embed::cosine(emb.embed_one(a), emb.embed_one(b));
    } catch (const std::invalid_argument&) {
      return 0.0;
    }
  }
  const auto sa = word_set(a);
  const auto sb = word_set(b);
  if (sa.empty() && sb.empty()) return 1.0;
  std::size_t inter = 0;
  for (const auto& w : sa) inter += sb.contains(w) ? 1 : 0;
  return static_cast<double>(inter) / static_cast<double>(sa.size() + sb.size() - inter);
}

namespace {

std::uint64_t decision_key(std::span<const demos::PseudoDemo> demos, std::string_view test_input) {
  std::string canon;
  for (const auto& d : demos) {
    canon += d.input;
    canon += '\x1f';
    canon += d.label_text.value_or("");
    canon += '\x1e';
  }
  canon += '\x1d';
  canon += test_input;
  return fnv1a64(canon);
}

double unit_hash(std::uint64_t seed, std::uint64_t key, std::string_view tag) {
  return static_cast<double>(derive_seed(derive_seed(seed, key), tag) >> 11) * 0x1.0p-53;
}

}  // namespace

std::optional<std::size_t> MockCopyingLm::copy_target(std::span<const demos::PseudoDemo> demos,
                                                      std::string_view test_input) const {
  const demos::PseudoDemo* best = nullptr;
  double best_sim = -1.0;
  for (const auto& d : demos) {
    if (!d.label_text) continue;
    const double s = similarity(test_input, d.input);
    if (s >= best_sim) {
      best_sim = s;
      best = &d;
    }
  }
  if (best == nullptr) return std::nullopt;
  const auto key = decision_key(demos, test_input);
  if (!(unit_hash(options_.seed, key, "copy") < options_.copy_strength)) return std::nullopt;
  for (std::size_t i = 0; i < task_.labels.size(); ++i) {
    if (*best->label_text == task_.labels[i]) return i;
  }
  if (options_.copy_synonyms) {
    for (std::size_t i = 0; i < task_.synonyms.size(); ++i) {
      if (*best->label_text == task_.synonyms[i]) return i;
    }
  }
  return std::nullopt;
}

double MockCopyingLm::score_one(const ScoreItem& item) const {
  const auto parsed = parse(item);
  if (const auto target = copy_target(parsed.demos, parsed.test_input)) {
    if (parsed.candidate == task_.labels[*target]) return -0.05;
  }
  if (options_.lexical_prior && word_set(parsed.test_input).contains(to_lower_ascii(parsed.candidate))) {
    return -0.5;
  }
  const auto key = decision_key(parsed.demos, parsed.test_input);
  return -1.0 - unit_hash(options_.seed, key, parsed.candidate);
}

std::vector<ScoreResult> MockCopyingLm::score(std::span<const ScoreItem> items) const {
  std::vector<ScoreResult> out;
  for (const auto& it : items) out.push_back({score_one(it), split_whitespace(it.continuation).size()});
  return out;
}

// ---------------------------------------------------------------------------

ScriptedLm::ScriptedLm(std::vector<Rule> rules, double default_logprob)
    : rules_(std::move(rules)), default_(default_logprob) {}

ScriptedLm ScriptedLm::load(const std::filesystem::path& path) {
  try {
    const auto j = nlohmann::json::parse(read_file(path));
    std::vector<Rule> rules;
    for (const auto& r : j.value("rules", nlohmann::json::array())) {
      Rule rule;
      if (r.contains("continuation")) rule.continuation = r["continuation"].get<std::string>();
      if (r.contains("prompt_contains")) rule.prompt_contains = r["prompt_contains"].get<std::string>();
      if (r.contains("prompt_suffix")) rule.prompt_suffix = r["prompt_suffix"].get<std::string>();
      rule.logprob = r.at("logprob").get<double>();
      rules.push_back(std::move(rule));
    }
    return ScriptedLm(std::move(rules), j.value("default", -10.0));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

std::vector<ScoreResult> ScriptedLm::score(std::span<const ScoreItem> items) const {
  std::vector<ScoreResult> out;
  for (const auto& it : items) {
    double lp = default_;
    for (const auto& r : rules_) {
      if (r.continuation && *r.continuation != it.continuation) continue;
      if (r.prompt_contains && it.prompt.find(*r.prompt_contains) == std::string::npos) continue;
      if (r.prompt_suffix && !it.prompt.ends_with(*r.prompt_suffix)) continue;
      lp = r.logprob;
      break;
    }
    out.push_back({lp, split_whitespace(it.continuation).size()});
  }
  return out;
}

std::unique_ptr<LmBackend> make_backend(const BackendConfig& config, const demos::TaskSpec& task) {
  config.validate();
  switch (config.kind) {
    case BackendKind::Remote: return std::make_unique<RemoteLm>(config);
    case BackendKind::MockUniform: return std::make_unique<MockUniformLm>();
    case BackendKind::MockCopying: return std::make_unique<MockCopyingLm>(task, config.copying);
    case BackendKind::Scripted: return std::make_unique<ScriptedLm>(ScriptedLm::load(config.script));
  }
  throw ConfigError("unknown backend kind");
}

// ---------------------------------------------------------------------------

std::size_t argmax_lowest(std::span<const double> scores) {
  if (scores.empty()) throw std::invalid_argument("argmax of an empty score list");
  std::size_t best = 0;
  for (std::size_t i = 1; i < scores.size(); ++i) {
    if (scores[i] > scores[best]) best = i;
  }
  return best;
}

std::string_view to_string(Method m) { return m == Method::Direct ? "DIRECT" : "CHANNEL"; }

Method method_from_string(std::string_view s) {
  if (s == "DIRECT") return Method::Direct;
  if (s == "CHANNEL") return Method::Channel;
  throw ConfigError("unknown inference method '" + std::string(s) + "'");
}

namespace {

double score_single(const LmBackend& backend, ScoreItem item, const std::string& prompt_hash) {
  try {
    const auto r = backend.score(std::span<const ScoreItem>(&item, 1));
    if (r.size() != 1) throw BackendError("backend returned " + std::to_string(r.size()) + " results for 1 item");
    return r.front().logprob;
  } catch (const BackendError& e) {
    throw BackendError("prompt " + prompt_hash + ": " + e.what(), e.failed_indices());
  }
}

std::string channel_hash(std::span<const demos::Prompt> prompts) {
  std::uint64_t h = fnv1a64("");
  for (const auto& p : prompts) {
    h = fnv1a64(p.text, h);
    h = fnv1a64("\x1e", h);
    h = fnv1a64(p.continuation, h);
    h = fnv1a64("\x1d", h);
  }
  return hex64(h);
}

LabelScores finish(std::vector<double> scores) {
  LabelScores out;
  out.prediction = argmax_lowest(scores);
  out.scores = std::move(scores);
  return out;
}

}  // namespace

LabelScores score_direct(const LmBackend& backend, const demos::Prompt& prompt, const demos::TaskSpec& task,
                         const ScoringOptions& options) {
  if (!ends_with_line(prompt.text, task.tmpl.label_prefix)) {
    throw std::invalid_argument("direct prompt must end with the label prefix");
  }
  const auto hash = hex64(fnv1a64(prompt.text));
  std::vector<double> scores;
  for (const auto& label : task.labels) {
    scores.push_back(score_single(backend, {prompt.text, options.continuation_prefix + label}, hash));
  }
  return finish(std::move(scores));
}

LabelScores score_channel(const LmBackend& backend, std::span<const demos::PseudoDemo> demos,
                          std::string_view test_input, const demos::TaskSpec& task, const demos::Budget& budget,
                          const demos::Tokenizer& tokenizer, const ScoringOptions& options, bool inputs_only) {
  const auto prompts =
      demos::render_channel_prompts(demos, test_input, task, budget, tokenizer, inputs_only,
                                    options.continuation_prefix);
  const auto hash = channel_hash(prompts);
  std::vector<double> scores;
  for (const auto& p : prompts) scores.push_back(score_single(backend, {p.text, p.continuation}, hash));
  return finish(std::move(scores));
}

PredictOutcome predict_one(const LmBackend& backend, const PredictRequest& request, Method method,
                           const demos::TaskSpec& task, const demos::Budget& budget,
                           const demos::Tokenizer& tokenizer, const ScoringOptions& options) {
  PredictOutcome out;
  if (method == Method::Direct) {
    const auto prompt = demos::render_prompt(request.demos, request.test_input, task, budget, tokenizer,
                                             {.inputs_only = request.inputs_only});
    out.prompt_hash = hex64(fnv1a64(prompt.text));
    out.demos_rendered = prompt.demo_count;
    out.scores = score_direct(backend, prompt, task, options);
  } else {
    const auto prompts = demos::render_channel_prompts(request.demos, request.test_input, task, budget,
                                                       tokenizer, request.inputs_only, options.continuation_prefix);
    out.prompt_hash = channel_hash(prompts);
    out.demos_rendered = prompts.front().demo_count;
    std::vector<double> scores;
    for (const auto& p : prompts) {
      scores.push_back(score_single(backend, {p.text, p.continuation}, out.prompt_hash));
    }
    out.scores = finish(std::move(scores));
  }
  return out;
}

std::vector<PredictOutcome> predict_batch(const LmBackend& backend, std::span<const PredictRequest> requests,
                                          Method method, const demos::TaskSpec& task, const demos::Budget& budget,
                                          const demos::Tokenizer& tokenizer, std::size_t max_in_flight,
                                          const ScoringOptions& options) {
  std::vector<PredictOutcome> out(requests.size());
  if (requests.empty()) return out;
  if (max_in_flight == 0) throw ConfigError("max_in_flight must be positive");

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < requests.size(); i = next++) {
      try {
        out[i] = predict_one(backend, requests[i], method, task, budget, tokenizer, options);
      } catch (const std::exception& e) {
        out[i] = PredictOutcome{};
        out[i].error = e.what();
      }
    }
  };
  {
    std::vector<std::jthread> workers;
    const std::size_t n = std::min(max_in_flight, requests.size());
    for (std::size_t w = 1; w < n; ++w) workers.emplace_back(work);
    work();
  }

  std::vector<std::size_t> failed;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!out[i].ok()) failed.push_back(i);
  }
  if (failed.size() == out.size()) {
    throw BackendError("every item in the batch failed; first error: " + out.front().error, std::move(failed));
  }
  return out;
}

}  // namespace zicl::infer
