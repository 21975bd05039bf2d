#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "support.hpp"
#include "zicl/errors.hpp"
#include "zicl/infer.hpp"
#include "zicl/mock_server.hpp"

using namespace zicl;
using infer::Method;

namespace {

const demos::TaskSpec& cr() { return *demos::find_builtin_task("CR"); }
const demos::TaskSpec& tweet() { return *demos::find_builtin_task("Tweet"); }

std::shared_ptr<infer::ScriptedLm> scripted_great() {
  return std::make_shared<infer::ScriptedLm>(
      std::vector<infer::ScriptedLm::Rule>{{" great", {}, {}, -1.0}, {" terrible", {}, {}, -2.0}}, -10.0);
}

infer::BackendConfig remote_config(const mock::MockServer& s) {
  infer::BackendConfig c;
  c.kind = infer::BackendKind::Remote;
  c.endpoint = s.endpoint();
  return c;
}

// Adds `shift` per token to another backend's log-probs.
class ShiftedLm final : public infer::LmBackend {
 public:
  ShiftedLm(const infer::LmBackend& inner, double shift) : inner_(inner), shift_(shift) {}
  std::vector<infer::ScoreResult> score(std::span<const infer::ScoreItem> items) const override {
    auto r = inner_.score(items);
    for (auto& x : r) x.logprob += shift_ * static_cast<double>(std::max<std::size_t>(x.token_count, 1));
    return r;
  }
  std::string describe() const override { return "SHIFTED"; }

 private:
  const infer::LmBackend& inner_;
  double shift_;
};

// Fails on any prompt containing "poison".
class PoisonLm final : public infer::LmBackend {
 public:
  std::vector<infer::ScoreResult> score(std::span<const infer::ScoreItem> items) const override {
    for (const auto& it : items) {
      if (it.prompt.find("poison") != std::string::npos || it.continuation.find("poison") != std::string::npos) {
        throw BackendError("poisoned");
      }
    }
    return infer::MockUniformLm{}.score(items);
  }
  std::string describe() const override { return "POISON"; }
};

}  // namespace

TEST(Infer, ArgmaxLowestIndexOnTies) {
  const std::vector<double> a = {-1.0, -0.5, -0.5};
  EXPECT_EQ(infer::argmax_lowest(a), 1u);
  const std::vector<double> b = {-3.0, -3.0};
  EXPECT_EQ(infer::argmax_lowest(b), 0u);
}

TEST(Infer, UniformTiesPickLabelZero) {
  const infer::MockUniformLm lm;
  const demos::WhitespaceTokenizer tok;
  const auto prompt = demos::render_prompt({}, "fine", cr(), {}, tok);
  const auto d = infer::score_direct(lm, prompt, cr());
  EXPECT_EQ(d.scores[0], d.scores[1]);
  EXPECT_NEAR(d.scores[0], -std::log(50257.0), 1e-12);
  EXPECT_EQ(d.prediction, 0u);
  const auto c = infer::score_channel(lm, {}, "fine", cr(), {}, tok);
  EXPECT_EQ(c.scores[0], c.scores[1]);
  EXPECT_EQ(c.prediction, 0u);
}

TEST(Infer, DirectRequiresLabelStub) {
  demos::Prompt p;
  p.text = "Review: x\nSentiment: great";
  EXPECT_THROW(infer::score_direct(infer::MockUniformLm{}, p, cr()), std::invalid_argument);
}

TEST(Infer, RemoteScriptedDirectPrefersGreat) {
  mock::ServerOptions so;
  so.lm = scripted_great();
  mock::MockServer server(so);
  const auto backend = infer::make_backend(remote_config(server), cr());
  const auto prompt = demos::render_prompt({}, "fine", cr(), {}, demos::WhitespaceTokenizer{});
  const auto s = infer::score_direct(*backend, prompt, cr());
  EXPECT_EQ(s.scores, (std::vector<double>{-2.0, -1.0}));
  EXPECT_EQ(cr().labels[s.prediction], "great");
  EXPECT_EQ(server.request_count("/score"), 2u);
}

TEST(Infer, CopyingForcesIdenticalDemoLabel) {
  infer::MockCopyingLm lm(cr(), {.copy_strength = 1.0});
  const std::vector<demos::PseudoDemo> ds = {{"some other words", "great", 1}, {"the food was cold", "terrible", 0}};
  const demos::WhitespaceTokenizer tok;
  const auto prompt = demos::render_prompt(ds, "the food was cold", cr(), {}, tok);
  EXPECT_EQ(cr().labels[infer::score_direct(lm, prompt, cr()).prediction], "terrible");
  EXPECT_EQ(infer::score_channel(lm, ds, "the food was cold", cr(), {}, tok).prediction, 0u);
}

TEST(Infer, CopyingParsesEveryLayout) {
  infer::MockCopyingLm lm(cr(), {});
  const std::vector<demos::PseudoDemo> ds = {{"alpha beta", "bad", 0}, {"gamma delta", "good", 1}};
  const demos::WhitespaceTokenizer tok;
  const auto direct = demos::render_prompt(ds, "test text", cr(), {}, tok);
  auto p = lm.parse({direct.text, " great"});
  EXPECT_EQ(p.demos, (std::vector<demos::PseudoDemo>{{"alpha beta", "bad", {}}, {"gamma delta", "good", {}}}));
  EXPECT_EQ(p.test_input, "test text");
  EXPECT_EQ(p.candidate, "great");
  const auto ch = demos::render_channel_prompts(ds, "test text", cr(), {}, tok);
  p = lm.parse({ch[0].text, ch[0].continuation});
  EXPECT_EQ(p.demos.size(), 2u);
  EXPECT_EQ(*p.demos[1].label_text, "good");
  EXPECT_EQ(p.demos[1].input, "gamma delta");
  EXPECT_EQ(p.candidate, "terrible");
  EXPECT_EQ(p.test_input, "test text");
  const auto bare = demos::render_channel_prompts(demos::inputs_only(std::vector<std::string>{"one", "two"}),
                                                  "test text", cr(), {}, tok, true);
  p = lm.parse({bare[1].text, bare[1].continuation});
  ASSERT_EQ(p.demos.size(), 2u);
  EXPECT_FALSE(p.demos[0].label_text);
  EXPECT_EQ(p.candidate, "great");
}

TEST(Infer, CopyingSynonymsBlockCopyUnlessEnabled) {
  const std::vector<demos::PseudoDemo> ds = {{"the food was cold", "bad", 0}};
  infer::MockCopyingLm off(cr(), {.copy_strength = 1.0});
  infer::MockCopyingLm on(cr(), {.copy_strength = 1.0, .copy_synonyms = true});
  EXPECT_FALSE(off.copy_target(ds, "the food was cold"));
  EXPECT_EQ(on.copy_target(ds, "the food was cold"), 0u);
}

TEST(Infer, CopyingStrengthIsAProbability) {
  const demos::WhitespaceTokenizer tok;
  for (double strength : {0.0, 0.3, 1.0}) {
    infer::MockCopyingLm lm(cr(), {.copy_strength = strength, .seed = 4});
    std::size_t copied = 0;
    const std::size_t n = 4000;
    for (std::size_t i = 0; i < n; ++i) {
      const std::string x = "item " + std::to_string(i);
      const std::vector<demos::PseudoDemo> ds = {{x, "terrible", 0}};
      copied += lm.copy_target(ds, x).has_value() ? 1 : 0;
    }
    const double rate = static_cast<double>(copied) / n;
    EXPECT_NEAR(rate, strength, 4 * std::sqrt(0.25 / n)) << strength;
  }
}

TEST(Infer, CopyingDecisionsIdenticalAcrossMethods) {
  infer::MockCopyingLm lm(tweet(), {.copy_strength = 0.5, .lexical_prior = true, .seed = 11});
  const demos::WhitespaceTokenizer tok;
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    std::vector<demos::PseudoDemo> ds;
    for (int j = 0; j < 4; ++j) {
      const auto y = rng.below(3);
      ds.push_back({zicl::testing::random_sentence(rng, 3, 8), tweet().labels[y], y});
    }
    const auto x = zicl::testing::random_sentence(rng, 3, 8);
    const auto d = infer::score_direct(lm, demos::render_prompt(ds, x, tweet(), {}, tok), tweet());
    const auto c = infer::score_channel(lm, ds, x, tweet(), {}, tok);
    EXPECT_EQ(d.scores, c.scores);
  }
}

TEST(Infer, LexicalPriorPrefersLabelWordInInput) {
  infer::MockCopyingLm lm(cr(), {.copy_strength = 0.0, .lexical_prior = true});
  const auto s = infer::score_channel(lm, {}, "the room was great", cr(), {}, demos::WhitespaceTokenizer{});
  EXPECT_EQ(s.prediction, 1u);
  EXPECT_EQ(s.scores[1], -0.5);
}

TEST(Infer, ChannelIssuesOneCallPerLabel) {
  mock::ServerOptions so;
  so.lm = std::make_shared<infer::MockUniformLm>();
  mock::MockServer server(so);
  const auto backend = infer::make_backend(remote_config(server), tweet());
  const std::vector<demos::PseudoDemo> ds = {{"a b", "good", 2}, {"c d", "bad", 0}};
  const auto s = infer::score_channel(*backend, ds, "x y", tweet(), {}, demos::WhitespaceTokenizer{});
  EXPECT_EQ(s.scores.size(), 3u);
  EXPECT_EQ(server.request_count("/score"), 3u);
  const auto t = server.transcript();
  for (std::size_t y = 0; y < 3; ++y) {
    const auto req = wire::decode_score_request(t[y].request);
    ASSERT_EQ(req.items.size(), 1u);
    EXPECT_TRUE(req.items[0].prompt.ends_with("Sentiment: " + tweet().labels[y] + "\nTweet:"));
    EXPECT_EQ(req.items[0].continuation, " x y");
  }
}

TEST(Infer, ChannelFollowsScriptedMaximum) {
  infer::ScriptedLm lm({{{}, {}, "Sentiment: good\nTweet:", -0.1}, {{}, {}, "Sentiment: positive\nTweet:", -0.2}},
                       -5.0);
  const auto s = infer::score_channel(lm, {}, "x", tweet(), {}, demos::WhitespaceTokenizer{});
  EXPECT_EQ(tweet().labels[s.prediction], "positive");
}

TEST(Infer, ArgmaxInvariantToPerTokenShift) {
  infer::MockCopyingLm base(tweet(), {.copy_strength = 0.7, .seed = 2});
  const demos::WhitespaceTokenizer tok;
  Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    std::vector<demos::PseudoDemo> ds = {{zicl::testing::random_sentence(rng, 3, 6), "neutral", 1}};
    const auto x = zicl::testing::random_sentence(rng, 3, 6);
    const auto prompt = demos::render_prompt(ds, x, tweet(), {}, tok);
    const auto a = infer::score_direct(base, prompt, tweet());
    for (double shift : {-3.0, 0.25, 7.0}) {
      const ShiftedLm shifted(base, shift);
      EXPECT_EQ(infer::score_direct(shifted, prompt, tweet()).prediction, a.prediction);
    }
  }
}

TEST(Infer, PredictBatchEmpty) {
  EXPECT_TRUE(infer::predict_batch(infer::MockUniformLm{}, {}, Method::Channel, cr(), {},
                                   demos::WhitespaceTokenizer{}, 8)
                  .empty());
}

TEST(Infer, PredictBatchBoundsConcurrency) {
  mock::ServerOptions so;
  so.lm = std::make_shared<infer::MockCopyingLm>(cr(), infer::CopyingOptions{});
  so.delay = std::chrono::milliseconds(5);
  so.threads = 32;
  mock::MockServer server(so);
  const auto backend = infer::make_backend(remote_config(server), cr());
  std::vector<infer::PredictRequest> reqs;
  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    reqs.push_back({{{zicl::testing::random_sentence(rng, 3, 6), "great", 1}},
                    zicl::testing::random_sentence(rng, 3, 6), false});
  }
  const auto out = infer::predict_batch(*backend, reqs, Method::Channel, cr(), {}, demos::WhitespaceTokenizer{}, 8);
  ASSERT_EQ(out.size(), 100u);
  for (const auto& o : out) EXPECT_TRUE(o.ok()) << o.error;
  EXPECT_LE(server.max_concurrent(), 8u);
  EXPECT_GT(server.max_concurrent(), 1u);
  EXPECT_EQ(server.request_count("/score"), 200u);
  // Same outcome as scoring in-process, in order.
  const infer::MockCopyingLm local(cr(), {});
  for (std::size_t i = 0; i < reqs.size(); ++i) {
    EXPECT_EQ(out[i].scores, infer::predict_one(local, reqs[i], Method::Channel, cr(), {},
                                                demos::WhitespaceTokenizer{}).scores);
  }
}

TEST(Infer, PredictBatchDuplicatesAgree) {
  const infer::MockCopyingLm lm(tweet(), {.copy_strength = 0.5, .lexical_prior = true, .seed = 6});
  Rng rng(2);
  std::vector<infer::PredictRequest> base;
  for (int i = 0; i < 20; ++i) {
    base.push_back({{{zicl::testing::random_sentence(rng, 3, 6), "bad", 0}}, zicl::testing::random_sentence(rng, 3, 6)});
  }
  std::vector<infer::PredictRequest> reqs = base;
  reqs.insert(reqs.end(), base.begin(), base.end());
  for (std::size_t i = reqs.size(); i > 1; --i) std::swap(reqs[i - 1], reqs[rng.below(i)]);
  for (auto method : {Method::Direct, Method::Channel}) {
    const auto out = infer::predict_batch(lm, reqs, method, tweet(), {}, demos::WhitespaceTokenizer{}, 4);
    for (std::size_t i = 0; i < reqs.size(); ++i) {
      for (std::size_t j = 0; j < reqs.size(); ++j) {
        if (reqs[i].test_input == reqs[j].test_input) {
          EXPECT_EQ(out[i].scores, out[j].scores);
          EXPECT_EQ(out[i].prompt_hash, out[j].prompt_hash);
        }
      }
    }
  }
}

TEST(Infer, PredictBatchIsolatesFailures) {
  const PoisonLm lm;
  std::vector<infer::PredictRequest> reqs = {{{}, "fine"}, {{}, "poison pill"}, {{}, "also fine"}};
  const auto out = infer::predict_batch(lm, reqs, Method::Channel, cr(), {}, demos::WhitespaceTokenizer{}, 2);
  EXPECT_TRUE(out[0].ok());
  EXPECT_FALSE(out[1].ok());
  EXPECT_NE(out[1].error.find("prompt "), std::string::npos);
  EXPECT_TRUE(out[2].ok());
  std::vector<infer::PredictRequest> all_bad = {{{}, "poison"}, {{}, "more poison"}};
  try {
    infer::predict_batch(lm, all_bad, Method::Direct, cr(), {}, demos::WhitespaceTokenizer{}, 2);
    FAIL();
  } catch (const BackendError& e) {
    EXPECT_EQ(e.failed_indices(), (std::vector<std::size_t>{0, 1}));
  }
}

TEST(Infer, RemoteRetriesAndFails) {
  {
    mock::ServerOptions so;
    so.lm = std::make_shared<infer::MockUniformLm>();
    so.fail_first = 2;
    mock::MockServer server(so);
    auto cfg = remote_config(server);
    cfg.retries = 2;
    const auto backend = infer::make_backend(cfg, cr());
    const std::vector<infer::ScoreItem> items = {{"p", " great"}};
    EXPECT_EQ(backend->score(items).size(), 1u);
  }
  {
    mock::ServerOptions so;
    so.lm = std::make_shared<infer::MockUniformLm>();
    so.fail_first = 100;
    mock::MockServer server(so);
    auto cfg = remote_config(server);
    cfg.retries = 1;
    const auto backend = infer::make_backend(cfg, cr());
    const std::vector<infer::ScoreItem> items = {{"p", " great"}, {"q", " terrible"}};
    try {
      backend->score(items);
      FAIL();
    } catch (const BackendError& e) {
      EXPECT_EQ(e.failed_indices(), (std::vector<std::size_t>{0, 1}));
    }
    EXPECT_EQ(server.request_count("/score"), 2u);
  }
}

TEST(Infer, RemoteTokenizerCounts) {
  mock::ServerOptions so;
  mock::MockServer server(so);
  infer::RemoteTokenizer tok(server.endpoint(), 10.0, 0);
  EXPECT_EQ(tok.count("one two  three"), 3u);
  EXPECT_EQ(tok.count(""), 0u);
}

TEST(Infer, ScriptedLoadsFromFile) {
  const auto dir = zicl::testing::fresh_dir("scripted");
  write_file_atomic(dir / "s.json",
                    R"({"default": -9, "rules": [{"continuation": " great", "prompt_contains": "yay", "logprob": -0.5}]})");
  const auto lm = infer::ScriptedLm::load(dir / "s.json");
  const std::vector<infer::ScoreItem> items = {{"yay", " great"}, {"nay", " great"}};
  const auto r = lm.score(items);
  EXPECT_EQ(r[0].logprob, -0.5);
  EXPECT_EQ(r[1].logprob, -9.0);
  write_file_atomic(dir / "bad.json", "{not json");
  EXPECT_THROW(infer::ScriptedLm::load(dir / "bad.json"), ConfigError);
}

TEST(Infer, BackendConfigValidation) {
  infer::BackendConfig c;
  c.kind = infer::BackendKind::Remote;
  EXPECT_THROW(c.validate(), ConfigError);
  c.endpoint = "http://127.0.0.1:1";
  EXPECT_NO_THROW(c.validate());
  c.max_in_flight = 0;
  EXPECT_THROW(c.validate(), ConfigError);
  infer::BackendConfig m;
  m.kind = infer::BackendKind::MockCopying;
  m.copying.copy_strength = 1.5;
  EXPECT_THROW(m.validate(), ConfigError);
  EXPECT_EQ(infer::backend_kind_from_string("MOCK_COPYING"), infer::BackendKind::MockCopying);
  EXPECT_THROW(infer::backend_kind_from_string("nope"), ConfigError);
}
