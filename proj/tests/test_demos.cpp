#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "support.hpp"
#include "zicl/demos.hpp"
#include "zicl/errors.hpp"

using namespace zicl;
using demos::LabelKind;

namespace {

const demos::TaskSpec& cr() { return *demos::find_builtin_task("CR"); }

std::size_t count_words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::string w;
  std::size_t n = 0;
  while (in >> w) ++n;
  return n;
}

// Splits a rendered prompt into its "\n\n"-terminated blocks plus the tail.
std::vector<std::string> blocks_of(const std::string& text) {
  std::vector<std::string> out;
  std::size_t at = 0;
  for (std::size_t p; (p = text.find("\n\n", at)) != std::string::npos; at = p + 2) {
    out.push_back(text.substr(at, p + 2 - at));
  }
  out.push_back(text.substr(at));
  return out;
}

std::vector<std::string> numbered_inputs(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back("input " + std::to_string(i));
  return v;
}

}  // namespace

TEST(TaskSpec, BuiltinsMatchPublishedTable) {
  // Frozen copy of the published label/synonym table.
  const std::vector<std::tuple<std::string, std::vector<std::string>, std::vector<std::string>, bool>> table = {
      {"CR", {"terrible", "great"}, {"bad", "good"}, true},
      {"Amz", {"negative", "positive"}, {"bad", "good"}, true},
      {"Amz5", {"terrible", "bad", "okay", "good", "great"},
       {"horrible", "negative", "neutral", "positive", "excellent"}, true},
      {"Yelp", {"negative", "positive"}, {"bad", "good"}, true},
      {"Yelp5", {"terrible", "bad", "okay", "good", "great"},
       {"horrible", "negative", "neutral", "positive", "excellent"}, true},
      {"Tweet", {"negative", "neutral", "positive"}, {"bad", "normal", "good"}, true},
      {"MR", {"terrible", "great"}, {"bad", "good"}, false},
      {"SST2", {"terrible", "great"}, {"bad", "good"}, false},
      {"SST5", {"terrible", "bad", "okay", "good", "great"},
       {"horrible", "negative", "neutral", "positive", "excellent"}, false},
  };
  ASSERT_EQ(demos::builtin_tasks().size(), table.size());
  for (const auto& [name, labels, synonyms, covered] : table) {
    const auto* t = demos::find_builtin_task(name);
    ASSERT_NE(t, nullptr) << name;
    EXPECT_EQ(t->labels, labels) << name;
    EXPECT_EQ(t->synonyms, synonyms) << name;
    EXPECT_EQ(t->covered_by_corpus, covered) << name;
  }
  EXPECT_EQ(demos::find_builtin_task("sst2")->name, "SST2");
  EXPECT_EQ(demos::find_builtin_task("IMDB"), nullptr);
}

TEST(TaskSpec, JsonRoundTripAndValidation) {
  for (const auto& t : demos::builtin_tasks()) {
    EXPECT_EQ(demos::TaskSpec::from_json(nlohmann::json::parse(t.to_json().dump())), t);
  }
  auto j = nlohmann::json::parse(cr().to_json().dump());
  j["synonyms"]["great"] = "terrible";
  EXPECT_THROW(demos::TaskSpec::from_json(j), ConfigError);
  j = nlohmann::json::parse(cr().to_json().dump());
  j["synonyms"]["great"] = "bad";
  EXPECT_THROW(demos::TaskSpec::from_json(j), ConfigError);
  j = nlohmann::json::parse(cr().to_json().dump());
  j["labels"] = {"great"};
  EXPECT_THROW(demos::TaskSpec::from_json(j), ConfigError);
  j = nlohmann::json::parse(cr().to_json().dump());
  j.erase("synonyms");
  EXPECT_THROW(demos::TaskSpec::from_json(j), ConfigError);
}

TEST(LabelStrategy, Names) {
  EXPECT_EQ(demos::label_kind_from_string("ORIGINAL"), LabelKind::Random);
  for (auto k : {LabelKind::Random, LabelKind::Synonym, LabelKind::RandomWords, LabelKind::Gold}) {
    EXPECT_EQ(demos::label_kind_from_string(demos::to_string(k)), k);
  }
  EXPECT_THROW(demos::label_kind_from_string("synonym"), ConfigError);
}

TEST(AssignLabels, SynonymExampleForCr) {
  const auto inputs = numbered_inputs(200);
  const auto out = demos::assign_labels(inputs, cr(), {LabelKind::Synonym, 0, {}}, 1);
  for (const auto& d : out) {
    ASSERT_TRUE(d.label_index);
    EXPECT_EQ(*d.label_text, *d.label_index == 0 ? "bad" : "good");
  }
}

TEST(AssignLabels, UniformWithinThreeSigma) {
  const auto inputs = numbered_inputs(10000);
  for (const auto* name : {"CR", "Tweet", "SST5"}) {
    const auto& task = *demos::find_builtin_task(name);
    for (auto kind : {LabelKind::Random, LabelKind::Synonym, LabelKind::RandomWords}) {
      const auto out = demos::assign_labels(inputs, task, {kind, 3, {}}, 42);
      std::vector<std::size_t> hist(task.labels.size());
      for (const auto& d : out) hist[*d.label_index]++;
      const double p = 1.0 / static_cast<double>(task.labels.size());
      const double sigma = std::sqrt(10000 * p * (1 - p));
      for (auto c : hist) EXPECT_LE(std::abs(static_cast<double>(c) - 10000 * p), 3 * sigma) << name;
    }
  }
}

TEST(AssignLabels, VocabularyInvariants) {
  const auto inputs = numbered_inputs(500);
  for (const auto& task : demos::builtin_tasks()) {
    const std::set<std::string> labels(task.labels.begin(), task.labels.end());
    const std::set<std::string> syns(task.synonyms.begin(), task.synonyms.end());
    for (const auto& d : demos::assign_labels(inputs, task, {LabelKind::Synonym, 0, {}}, 7)) {
      EXPECT_FALSE(labels.contains(*d.label_text));
      EXPECT_EQ(*d.label_text, task.synonyms[*d.label_index]);
    }
    for (const auto& d : demos::assign_labels(inputs, task, {LabelKind::Random, 0, {}}, 7)) {
      EXPECT_FALSE(syns.contains(*d.label_text));
      EXPECT_EQ(*d.label_text, task.labels[*d.label_index]);
    }
  }
}

TEST(AssignLabels, GoldPassesThrough) {
  const auto inputs = numbered_inputs(4);
  const auto out = demos::assign_labels(inputs, cr(), {LabelKind::Gold, 0, {1, 0, 0, 1}}, 9);
  EXPECT_EQ(*out[0].label_text, "great");
  EXPECT_EQ(*out[1].label_text, "terrible");
  EXPECT_EQ(*out[3].label_index, 1u);
  EXPECT_THROW(demos::assign_labels(inputs, cr(), {LabelKind::Gold, 0, {1, 0}}, 9), std::invalid_argument);
  EXPECT_THROW(demos::assign_labels(inputs, cr(), {LabelKind::Gold, 0, {1, 0, 2, 0}}, 9), std::invalid_argument);
  EXPECT_THROW(demos::assign_labels({}, cr(), {LabelKind::Random, 0, {}}, 9), std::invalid_argument);
}

TEST(AssignLabels, SeededAndReproducible) {
  const auto inputs = numbered_inputs(64);
  EXPECT_EQ(demos::assign_labels(inputs, cr(), {LabelKind::Random, 0, {}}, 5),
            demos::assign_labels(inputs, cr(), {LabelKind::Random, 0, {}}, 5));
  EXPECT_NE(demos::assign_labels(inputs, cr(), {LabelKind::Random, 0, {}}, 5),
            demos::assign_labels(inputs, cr(), {LabelKind::Random, 0, {}}, 6));
}

TEST(RandomWords, SeededBijectionDisjointFromLabels) {
  const auto list = demos::unigram_list();
  const std::set<std::string_view> vocab(list.begin(), list.end());
  EXPECT_EQ(list.size(), 10000u);
  EXPECT_EQ(vocab.size(), 10000u);
  for (const auto& task : demos::builtin_tasks()) {
    std::set<std::string> banned(task.labels.begin(), task.labels.end());
    banned.insert(task.synonyms.begin(), task.synonyms.end());
    std::set<std::vector<std::string>> seen;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto m = demos::random_word_mapping(task, seed);
      ASSERT_EQ(m.size(), task.labels.size());
      EXPECT_EQ(std::set<std::string>(m.begin(), m.end()).size(), m.size());
      for (const auto& w : m) {
        EXPECT_FALSE(banned.contains(w)) << w;
        EXPECT_TRUE(vocab.contains(w));
      }
      EXPECT_EQ(m, demos::random_word_mapping(task, seed));
      seen.insert(m);
    }
    EXPECT_GT(seen.size(), 15u);
    const auto m = demos::random_word_mapping(task, 3);
    const auto inputs = numbered_inputs(100);
    for (const auto& d : demos::assign_labels(inputs, task, {LabelKind::RandomWords, 3, {}}, 1)) {
      EXPECT_EQ(*d.label_text, m[*d.label_index]);
    }
  }
}

TEST(Render, DirectTemplateExact) {
  const std::vector<demos::PseudoDemo> ds = {{"The food was cold.", "bad", 0}, {"Loved it.", "good", 1}};
  const auto p = demos::render_prompt(ds, "Nice place.", cr(), {}, demos::WhitespaceTokenizer{});
  EXPECT_EQ(p.text,
            "Review: The food was cold.\nSentiment: bad\n\n"
            "Review: Loved it.\nSentiment: good\n\n"
            "Review: Nice place.\nSentiment:");
  EXPECT_EQ(p.demo_count, 2u);
  EXPECT_TRUE(p.continuation.empty());

  const auto bare = demos::render_prompt(demos::inputs_only(std::vector<std::string>{"One.", "Two."}), "Three.",
                                         cr(), {}, demos::WhitespaceTokenizer{}, {.inputs_only = true});
  EXPECT_EQ(bare.text, "One.\nTwo.\nReview: Three.\nSentiment:");
  EXPECT_THROW(demos::render_prompt(demos::inputs_only(std::vector<std::string>{"x"}), "y", cr(), {},
                                    demos::WhitespaceTokenizer{}),
               std::invalid_argument);
}

TEST(Render, ChannelTemplateExact) {
  const std::vector<demos::PseudoDemo> ds = {{"The food was cold.", "bad", 0}};
  const auto ps = demos::render_channel_prompts(ds, "Nice place.", cr(), {}, demos::WhitespaceTokenizer{});
  ASSERT_EQ(ps.size(), 2u);
  EXPECT_EQ(ps[0].text, "Sentiment: bad\nReview: The food was cold.\n\nSentiment: terrible\nReview:");
  EXPECT_EQ(ps[1].text, "Sentiment: bad\nReview: The food was cold.\n\nSentiment: great\nReview:");
  EXPECT_EQ(ps[0].continuation, " Nice place.");
}

TEST(Render, AdversarialBudget) {
  Rng rng(8);
  const demos::WhitespaceTokenizer tok;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<demos::PseudoDemo> ds;
    const std::size_t k = 1 + rng.below(32);
    for (std::size_t i = 0; i < k; ++i) {
      // Mix of tiny and oversized inputs (up to 600 words).
      ds.push_back({zicl::testing::random_sentence(rng, 1, rng.below(2) ? 600 : 20), "good", 1});
    }
    const std::string test = zicl::testing::random_sentence(rng, 5, 200);
    const auto p = demos::render_prompt(ds, test, cr(), {}, tok);
    EXPECT_LE(count_words(p.text), 1024u);
    const auto blocks = blocks_of(p.text);
    EXPECT_EQ(blocks.size() - 1, p.demo_count);
    for (std::size_t i = 0; i + 1 < blocks.size(); ++i) EXPECT_LE(count_words(blocks[i]), 256u);
    // Kept demos are the suffix of the input list, each a word-prefix of its input.
    std::size_t kept = 0;
    for (const auto& t : p.truncation) {
      if (!t.dropped) {
        EXPECT_LE(t.kept_tokens, 256u);
        ++kept;
      }
    }
    EXPECT_EQ(kept, p.demo_count);

    const auto cps = demos::render_channel_prompts(ds, test, cr(), {}, tok);
    for (const auto& c : cps) {
      EXPECT_LE(count_words(c.text + c.continuation), 1024u);
      EXPECT_EQ(c.demo_count, cps[0].demo_count);
    }
  }
}

TEST(Render, FrontDemosDropFirst) {
  std::vector<demos::PseudoDemo> ds;
  for (int i = 0; i < 10; ++i) {
    std::string in = "demo" + std::to_string(i);
    for (int w = 0; w < 150; ++w) in += " w";
    ds.push_back({in, "good", 1});
  }
  const auto p = demos::render_prompt(ds, "short test", cr(), {}, demos::WhitespaceTokenizer{});
  // 155 tokens per demo block, 5 for the stub: six demos fit in 1024.
  EXPECT_EQ(p.demo_count, 6u);
  EXPECT_EQ(p.text.substr(0, 13), "Review: demo4");
  for (int i = 0; i < 4; ++i) EXPECT_TRUE(p.truncation[i].dropped);
}

TEST(Render, TruncatesToWordPrefix) {
  std::string in;
  for (int w = 0; w < 300; ++w) in += (w ? " x" : "x") + std::to_string(w);
  const std::vector<demos::PseudoDemo> ds = {{in, "good", 1}};
  const auto p = demos::render_prompt(ds, "t", cr(), {}, demos::WhitespaceTokenizer{});
  // "Review:" + words + "Sentiment:" + "good" = 256 leaves 253 words.
  EXPECT_EQ(p.truncation[0].kept_tokens, 256u);
  EXPECT_NE(p.text.find(" x252\nSentiment: good"), std::string::npos);
  EXPECT_THROW(demos::render_prompt(ds, in + " " + in + " " + in + " " + in, cr(), {}, demos::WhitespaceTokenizer{}),
               std::length_error);
}

TEST(Render, LongestFittingPrefix) {
  auto fits = [](std::size_t n) { return [n](std::string_view s) { return count_words(s) <= n; }; };
  EXPECT_EQ(demos::longest_fitting_prefix("a b  c d", fits(2)), "a b");
  EXPECT_EQ(demos::longest_fitting_prefix("a b  c d", fits(3)), "a b  c");
  EXPECT_EQ(demos::longest_fitting_prefix("a b c", fits(0)), "");
  EXPECT_EQ(demos::longest_fitting_prefix("", fits(5)), "");
}

TEST(TaskSpec, ShippedFilesMatchBuiltins) {
  for (const auto& t : demos::builtin_tasks()) {
    EXPECT_EQ(demos::TaskSpec::load(std::filesystem::path(ZICL_TASKS_DIR) / (t.name + ".task.json")), t) << t.name;
  }
}
