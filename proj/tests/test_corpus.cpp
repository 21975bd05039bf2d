#include <gtest/gtest.h>

#include <cctype>
#include <set>
#include <sstream>
#include <unordered_set>

#include "support.hpp"
#include "zicl/corpus.hpp"
#include "zicl/errors.hpp"

using namespace zicl;
using corpus::split_paragraph;

TEST(Segment, BasicTerminators) {
  EXPECT_EQ(split_paragraph("One. Two! Three? Four"),
            (std::vector<std::string>{"One.", "Two!", "Three?", "Four"}));
}

TEST(Segment, AbbreviationsAndInitials) {
  EXPECT_EQ(split_paragraph("Dr. Smith met J. Doe at 5 p.m. on Main St. today. Then left."),
            (std::vector<std::string>{"Dr. Smith met J. Doe at 5 p.m. on Main St. today.", "Then left."}));
  EXPECT_EQ(split_paragraph("Prices rose, e.g. rents. Wages did not."),
            (std::vector<std::string>{"Prices rose, e.g. rents.", "Wages did not."}));
}

TEST(Segment, ClosersAndRuns) {
  EXPECT_EQ(split_paragraph("He said \"stop.\" She ran!! Why?!) Ok."),
            (std::vector<std::string>{"He said \"stop.\"", "She ran!!", "Why?!)", "Ok."}));
  EXPECT_EQ(split_paragraph("It\xE2\x80\x99s done.\xE2\x80\x9D Next."),
            (std::vector<std::string>{"It\xE2\x80\x99s done.\xE2\x80\x9D", "Next."}));
}

TEST(Segment, NoBoundaryInsideTokens) {
  EXPECT_EQ(split_paragraph("Version 3.14 shipped. See example.com now"),
            (std::vector<std::string>{"Version 3.14 shipped.", "See example.com now"}));
}

TEST(Segment, EmptyAndWhitespace) {
  EXPECT_TRUE(split_paragraph("").empty());
  EXPECT_TRUE(split_paragraph("   \n\t ").empty());
  EXPECT_EQ(split_paragraph("  no terminator  "), (std::vector<std::string>{"no terminator"}));
}

namespace {

// Whitespace-token reference segmenter: a token ends a sentence when, after
// stripping closing quotes and brackets, it ends in a terminator, unless it is
// "X." for an abbreviation or a single letter.
std::vector<std::string> reference_segment(const std::string& text) {
  const auto rules = corpus::SegmentationRules::english();
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (!cur.empty()) cur += ' ';
    cur += tok;
    std::string core = tok;
    while (!core.empty() && std::string("\"')]}").find(core.back()) != std::string::npos) core.pop_back();
    if (core.empty() || std::string(".!?").find(core.back()) == std::string::npos) continue;
    std::size_t run = 0;
    while (run < core.size() && std::string(".!?").find(core[core.size() - 1 - run]) != std::string::npos) ++run;
    if (run == 1 && core.back() == '.') {
      std::string stem = core.substr(0, core.size() - 1);
      while (!stem.empty() && std::string("\"'([{").find(stem.front()) != std::string::npos) stem.erase(0, 1);
      if (stem.size() == 1 && std::isalpha(static_cast<unsigned char>(stem[0]))) continue;
      if (rules.abbreviations.contains(zicl::to_lower_ascii(stem))) continue;
    }
    out.push_back(cur);
    cur.clear();
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

TEST(Segment, MatchesReferenceOnHundredParagraphs) {
  // Sentences built from random words plus abbreviations, initials, quotes
  // and punctuation runs; the paragraph is their space-joined concatenation.
  Rng rng(20240611);
  const std::vector<std::string> inserts = {"Dr.", "Mrs.", "e.g.", "J.", "U.S.", "approx.", "vs.", "(see", "\"quoted\""};
  const std::vector<std::string> enders = {".", "!", "?", "?!", "...", ".\"", "!)", "."};
  for (int p = 0; p < 100; ++p) {
    std::vector<std::string> expected;
    const std::size_t n = 1 + rng.below(6);
    for (std::size_t s = 0; s < n; ++s) {
      std::string sent = zicl::testing::random_sentence(rng, 3, 10);
      sent.pop_back();
      const auto words = split_whitespace(sent);
      std::string built;
      for (std::size_t w = 0; w < words.size(); ++w) {
        if (w) built += ' ';
        built += words[w];
        if (w + 1 < words.size() && rng.below(4) == 0) built += " " + inserts[rng.below(inserts.size())];
      }
      std::string ender = enders[rng.below(enders.size())];
      // A lone "." after an abbreviation or initial is not a boundary by design.
      const std::string last(words.back());
      const bool abbrev = corpus::SegmentationRules::english().abbreviations.contains(zicl::to_lower_ascii(last)) ||
                          (last.size() == 1 && std::isalpha(static_cast<unsigned char>(last[0])));
      if (abbrev && (ender == "." || ender == ".\"")) ender = "!";
      built += ender;
      expected.push_back(built);
    }
    std::string paragraph;
    for (const auto& s : expected) paragraph += (paragraph.empty() ? "" : " ") + s;
    const auto got = split_paragraph(paragraph);
    EXPECT_EQ(got, expected) << paragraph;
    EXPECT_EQ(got, reference_segment(paragraph)) << paragraph;
  }
}

TEST(CorpusStore, AdjacencyPolicy) {
  auto store = corpus::CorpusStore::from_paragraph_sentences(
      {{"a", {"A one.", "A two.", "A three."}}, {"a", {"Solo."}}, {"b", {"B one.", "B two."}}});
  ASSERT_EQ(store.size(), 6u);
  EXPECT_EQ(store.adjacent(0)->id, 1u);
  EXPECT_EQ(store.adjacent(2)->id, 1u);
  EXPECT_EQ(store.adjacent(3), nullptr);
  EXPECT_EQ(store.adjacent(4)->id, 5u);
  EXPECT_EQ(store.adjacent(1, corpus::AdjacencyPolicy::PrecedingThenFollowing)->id, 0u);
  EXPECT_EQ(store.adjacent(0, corpus::AdjacencyPolicy::PrecedingThenFollowing)->id, 1u);
  EXPECT_THROW(store.adjacent(6), std::out_of_range);
  EXPECT_EQ(store.domains().size(), 2u);
  EXPECT_EQ(store.find_text("B two."), std::optional<corpus::SentenceId>(5));
  EXPECT_FALSE(store.find_text("missing").has_value());
}

TEST(CorpusStore, RejectsBrokenInvariants) {
  using corpus::Sentence;
  EXPECT_THROW(corpus::CorpusStore::from_sentences({{0, "a.", "d", 0, 0}, {1, "a.", "d", 0, 1}}), DataError);
  EXPECT_THROW(corpus::CorpusStore::from_sentences({{0, "a.", "d", 0, 0}, {1, "b.", "d", 0, 2}}), DataError);
  EXPECT_THROW(corpus::CorpusStore::from_sentences({{1, "a.", "d", 0, 0}}), DataError);
  EXPECT_THROW(corpus::CorpusStore::from_sentences({{0, "a.", "d", 0, 0}, {1, "b.", "e", 0, 1}}), DataError);
  EXPECT_THROW(corpus::CorpusStore::from_sentences(
                   {{0, "a.", "d", 0, 0}, {1, "b.", "e", 1, 0}, {2, "c.", "d", 2, 0}}),
               DataError);
}

TEST(CorpusStore, SaveLoadRoundTrip) {
  const auto store = zicl::testing::random_store(7, 300);
  const auto dir = zicl::testing::fresh_dir("corpus-roundtrip");
  store.save(dir);
  EXPECT_TRUE(std::filesystem::exists(dir / "corpus.jsonl"));
  EXPECT_TRUE(std::filesystem::exists(dir / "corpus.meta.json"));
  const auto back = corpus::CorpusStore::load(dir);
  ASSERT_EQ(back.size(), store.size());
  for (std::size_t i = 0; i < store.size(); ++i) EXPECT_EQ(back.sentences()[i], store.sentences()[i]);
  EXPECT_EQ(back.paragraph_count(), store.paragraph_count());
}

TEST(CorpusStore, SubsampleKeepsWholeParagraphs) {
  const auto store = zicl::testing::random_store(8, 2000);
  EXPECT_EQ(store.subsample_paragraphs(1.0, 1).size(), store.size());
  const auto half = store.subsample_paragraphs(0.5, 3);
  EXPECT_EQ(half.paragraph_count(), static_cast<std::size_t>(std::llround(0.5 * store.paragraph_count())));
  for (std::size_t p = 0; p < half.paragraph_count(); ++p) {
    const auto& e = half.paragraph_extent(p);
    const auto orig = store.find_text(half.sentence(e.first).text);
    ASSERT_TRUE(orig.has_value());
    const auto& src = store.paragraph_extent(store.sentence(*orig).paragraph_id);
    EXPECT_EQ(src.count, e.count);
    EXPECT_EQ(store.sentence(*orig).position, 0u);
  }
  const auto again = store.subsample_paragraphs(0.5, 3);
  ASSERT_EQ(again.size(), half.size());
  for (std::size_t i = 0; i < half.size(); ++i) EXPECT_EQ(again.sentences()[i], half.sentences()[i]);
  EXPECT_THROW(store.subsample_paragraphs(0.0, 1), ConfigError);
}

TEST(Ingest, DedupMatchesHashSetOracle) {
  // 10k paragraphs over a small sentence pool, so duplicates are frequent.
  Rng rng(99);
  std::vector<std::string> pool;
  for (int i = 0; i < 4000; ++i) pool.push_back(zicl::testing::random_sentence(rng, 3, 6, 200));
  std::vector<corpus::Paragraph> paragraphs;
  for (int p = 0; p < 10000; ++p) {
    std::string text;
    const std::size_t n = 1 + rng.below(4);
    for (std::size_t s = 0; s < n; ++s) text += (text.empty() ? "" : " ") + pool[rng.below(pool.size())];
    paragraphs.push_back({text, "web", static_cast<std::uint64_t>(p)});
  }
  const auto store = corpus::ingest(paragraphs);

  std::unordered_set<std::string> seen;
  std::vector<std::string> expected;
  for (const auto& p : paragraphs) {
    for (const auto& s : split_paragraph(p.text)) {
      if (seen.insert(s).second) expected.push_back(s);
    }
  }
  ASSERT_EQ(store.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(store.sentence(i).text, expected[i]);
}

TEST(Ingest, PositionsRenumberAfterDedup) {
  const std::vector<corpus::Paragraph> ps = {{"Aa. Bb. Cc.", "d", 0}, {"Xx. Bb. Yy.", "d", 1}};
  const auto store = corpus::ingest(ps);
  ASSERT_EQ(store.size(), 5u);
  EXPECT_EQ(store.sentence(3).text, "Xx.");
  EXPECT_EQ(store.sentence(4).text, "Yy.");
  EXPECT_EQ(store.sentence(4).position, 1u);
  EXPECT_EQ(store.adjacent(3)->text, "Yy.");
}

TEST(Ingest, PerDomainCap) {
  std::vector<corpus::Paragraph> ps;
  for (int i = 0; i < 10; ++i) ps.push_back({"Para " + std::to_string(i) + ".", i % 2 ? "b" : "a", 0});
  const auto store = corpus::ingest(ps, 3);
  EXPECT_EQ(store.size(), 6u);
  ASSERT_EQ(store.domains().size(), 2u);
  EXPECT_EQ(store.domains()[0].domain, "a");
  EXPECT_EQ(store.domains()[0].extent.count, 3u);
}

TEST(Ingest, MalformedThreshold) {
  {
    corpus::Ingestor ing;
    std::stringstream in;
    for (int i = 0; i < 199; ++i) in << R"({"text":"Line )" << i << R"(.","domain":"web"})" << "\n";
    in << "not json\n";
    ing.add_jsonl(in);
    EXPECT_EQ(ing.stats().malformed, 1u);
    EXPECT_NO_THROW(ing.finish());
  }
  {
    corpus::Ingestor ing;
    std::stringstream in;
    for (int i = 0; i < 97; ++i) in << R"({"text":"Line )" << i << R"(.","domain":"web"})" << "\n";
    in << "{}\n[1]\n{\"text\":5}\n";
    ing.add_jsonl(in);
    EXPECT_THROW(ing.finish(), DataError);
  }
}

TEST(Ingest, DefaultDomain) {
  corpus::IngestOptions opts;
  opts.default_domain = "news";
  corpus::Ingestor ing(opts);
  ing.add_record(R"({"text":"Hello there. General."})");
  const auto store = ing.finish();
  ASSERT_EQ(store.size(), 2u);
  EXPECT_EQ(store.sentence(0).domain, "news");
}
