#pragma once

// Synthetic corpora and datasets shared by the unit and acceptance tests.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <unistd.h>

#include "zicl/corpus.hpp"
#include "zicl/demos.hpp"
#include "zicl/harness.hpp"
#include "zicl/unigrams.hpp"
#include "zicl/util.hpp"

namespace zicl::testing {

inline std::string random_sentence(Rng& rng, std::size_t min_words, std::size_t max_words,
                                   std::size_t vocab = 3000) {
  const auto words = demos::unigram_list();
  const std::size_t n = min_words + rng.below(max_words - min_words + 1);
  std::string s;
  for (std::size_t i = 0; i < n; ++i) {
    if (i) s += ' ';
    s += words[rng.below(std::min(vocab, words.size()))];
  }
  s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s + ".";
}

/// Paragraphs of 1..max_sentences random sentences, segmented already.
inline std::vector<std::pair<std::string, std::vector<std::string>>> random_paragraphs(
    std::uint64_t seed, std::size_t target_sentences, std::size_t max_sentences = 6,
    const std::string& domain = "web") {
  Rng rng(seed);
  std::set<std::string> seen;
  std::vector<std::pair<std::string, std::vector<std::string>>> out;
  std::size_t total = 0;
  while (total < target_sentences) {
    const std::size_t n = std::min<std::size_t>(1 + rng.below(max_sentences), target_sentences - total);
    std::vector<std::string> ps;
    while (ps.size() < n) {
      auto s = random_sentence(rng, 5, 14);
      if (seen.insert(s).second) ps.push_back(std::move(s));
    }
    total += ps.size();
    out.emplace_back(domain, std::move(ps));
  }
  return out;
}

inline corpus::CorpusStore random_store(std::uint64_t seed, std::size_t sentences, std::size_t max_sentences = 6) {
  return corpus::CorpusStore::from_paragraph_sentences(random_paragraphs(seed, sentences, max_sentences));
}

/// Sentences drawn from one of `topics` disjoint 12-word vocabularies, so
/// their embeddings form clusters the way real sentence embeddings do.
inline std::string topical_sentence(Rng& rng, std::size_t topic) {
  const auto words = demos::unigram_list();
  const std::size_t n = 5 + rng.below(6);
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s += (i ? " " : "") + std::string(words[topic * 12 + rng.below(12)]);
  return s + ".";
}

inline corpus::CorpusStore topical_store(std::uint64_t seed, std::size_t sentences, std::size_t topics) {
  Rng rng(seed);
  std::set<std::string> seen;
  std::vector<std::pair<std::string, std::vector<std::string>>> paragraphs;
  std::size_t total = 0;
  while (total < sentences) {
    const std::size_t topic = rng.below(topics);
    const std::size_t n = std::min<std::size_t>(1 + rng.below(4), sentences - total);
    std::vector<std::string> ps;
    while (ps.size() < n) {
      auto t = topical_sentence(rng, topic);
      if (seen.insert(t).second) ps.push_back(std::move(t));
    }
    total += ps.size();
    paragraphs.emplace_back("web", std::move(ps));
  }
  return corpus::CorpusStore::from_paragraph_sentences(paragraphs);
}

/// A binary sentiment task whose test inputs each contain their gold label
/// word, and a corpus that holds, for every test input, a near-duplicate
/// sentence (one word changed) inside a paragraph of unrelated sentences.
struct PlantedTask {
  harness::Dataset dataset;
  corpus::CorpusStore corpus;
};

inline PlantedTask planted_task(std::uint64_t seed, std::size_t n_test, std::size_t filler_sentences,
                                const std::string& task_name = "CR", std::size_t n_train = 0) {
  const demos::TaskSpec& task = *demos::find_builtin_task(task_name);
  Rng rng(seed);
  PlantedTask out;
  out.dataset.name = "planted";
  out.dataset.task = task;
  auto paragraphs = random_paragraphs(derive_seed(seed, "filler"), filler_sentences);
  std::set<std::string> used;
  for (const auto& [_, ss] : paragraphs) used.insert(ss.begin(), ss.end());

  auto make_input = [&](std::size_t label) {
    std::string s;
    do {
      s = random_sentence(rng, 7, 12);
      s.pop_back();
      s += " and it was " + task.labels[label] + ".";
    } while (!used.insert(s).second);
    return s;
  };

  for (std::size_t i = 0; i < n_test; ++i) {
    const std::size_t label = rng.below(task.labels.size());
    const std::string input = make_input(label);
    out.dataset.test.push_back({input, label});
    // Near-duplicate: swap the first word.
    std::string dup = input;
    const auto sp = dup.find(' ');
    dup = "Honestly" + dup.substr(sp);
    if (!used.insert(dup).second) continue;
    std::vector<std::string> para;
    para.push_back(random_sentence(rng, 6, 10));
    para.push_back(dup);
    para.push_back(random_sentence(rng, 6, 10));
    used.insert(para[0]);
    used.insert(para[2]);
    paragraphs.emplace_back("web", std::move(para));
  }
  // Interleave planted paragraphs with filler deterministically.
  Rng shuffle(derive_seed(seed, "shuffle"));
  for (std::size_t i = paragraphs.size(); i > 1; --i) std::swap(paragraphs[i - 1], paragraphs[shuffle.below(i)]);
  out.corpus = corpus::CorpusStore::from_paragraph_sentences(paragraphs);

  if (n_train > 0) {
    std::vector<harness::Example> train;
    for (std::size_t i = 0; i < n_train; ++i) {
      const std::size_t label = rng.below(task.labels.size());
      train.push_back({make_input(label), label});
    }
    out.dataset.train = std::move(train);
  }
  return out;
}

/// Token-set Jaccard similarity written independently of the mock LM.
inline double jaccard_oracle(const std::string& a, const std::string& b) {
  auto words = [](const std::string& s) {
    std::set<std::string> out;
    std::string cur;
    for (unsigned char c : s + " ") {
      if (std::isalnum(c) || c >= 0x80) {
        cur += static_cast<char>(std::tolower(c));
      } else if (!cur.empty()) {
        out.insert(cur);
        cur.clear();
      }
    }
    return out;
  };
  const auto sa = words(a);
  const auto sb = words(b);
  std::vector<std::string> inter;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(inter));
  const double uni = static_cast<double>(sa.size() + sb.size() - inter.size());
  return uni == 0 ? 1.0 : static_cast<double>(inter.size()) / uni;
}

inline std::filesystem::path fresh_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("zicl-test-" + std::to_string(::getpid()) + "-" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

}  // namespace zicl::testing
