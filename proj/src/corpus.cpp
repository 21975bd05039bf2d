#include "zicl/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include <json.hpp>

#include "zicl/errors.hpp"
#include "zicl/util.hpp"

namespace zicl::corpus {

using ojson = nlohmann::ordered_json;

SegmentationRules SegmentationRules::english() {
  SegmentationRules rules;
  rules.abbreviations = {
      "mr",   "mrs",  "ms",   "dr",   "prof", "sr",   "jr",    "st",   "vs",  "etc", "e.g",
      "i.e",  "approx", "appr", "apt", "dept", "est", "inc",  "ltd",  "co",   "corp", "fig",
      "figs", "eq",   "vol",  "no",   "nos",  "p",    "pp",   "ch",   "sec",  "jan", "feb",
      "mar",  "apr",  "jun",  "jul",  "aug",  "sep",  "sept", "oct",  "nov",  "dec", "mt",
      "ft",   "gen",  "gov",  "lt",   "col",  "sgt",  "capt", "rev",  "u.s",  "u.k", "a.m",
      "p.m",  "cf",   "al",   "ave",  "blvd", "rd",   "min",  "max",  "misc", "govt"};
  return rules;
}

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool is_closer(char c) { return c == '"' || c == '\'' || c == ')' || c == ']' || c == '}'; }

// UTF-8 right single / double quotation marks: E2 80 99, E2 80 9D.
std::size_t utf8_closer_len(std::string_view s, std::size_t i) {
  if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 &&
      static_cast<unsigned char>(s[i + 1]) == 0x80 &&
      (static_cast<unsigned char>(s[i + 2]) == 0x99 ||
       static_cast<unsigned char>(s[i + 2]) == 0x9D)) {
    return 3;
  }
  return 0;
}

bool is_opener(char c) { return c == '"' || c == '\'' || c == '(' || c == '[' || c == '{'; }

// True when the lone '.' at `dot` closes an abbreviation or an initial.
bool dot_is_abbreviation(std::string_view text, std::size_t dot, const SegmentationRules& rules) {
  std::size_t start = dot;
  while (start > 0 && !is_space(text[start - 1])) --start;
  std::string_view token = text.substr(start, dot - start);
  while (!token.empty() && is_opener(token.front())) token.remove_prefix(1);
  if (token.empty()) return false;
  if (rules.single_letter_initials && token.size() == 1 &&
      std::isalpha(static_cast<unsigned char>(token[0]))) {
    return true;
  }
  return rules.abbreviations.contains(to_lower_ascii(token));
}

}  // namespace

std::vector<std::string> split_paragraph(std::string_view text, const SegmentationRules& rules) {
  std::vector<std::string> out;
  auto emit = [&](std::string_view piece) {
    piece = trim(piece);
    if (!piece.empty()) out.emplace_back(piece);
  };

  std::size_t begin = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (rules.terminators.find(text[i]) == std::string::npos) {
      ++i;
      continue;
    }
    const std::size_t run_start = i;
    while (i < text.size() && rules.terminators.find(text[i]) != std::string::npos) ++i;
    const std::size_t run_len = i - run_start;
    for (;;) {
      if (i < text.size() && is_closer(text[i])) {
        ++i;
      } else if (std::size_t n = utf8_closer_len(text, i); n > 0) {
        i += n;
      } else {
        break;
      }
    }
    if (i < text.size() && !is_space(text[i])) continue;
    if (run_len == 1 && text[run_start] == '.' && dot_is_abbreviation(text, run_start, rules)) {
      continue;
    }
    emit(text.substr(begin, i - begin));
    begin = i;
  }
  emit(text.substr(begin));
  return out;
}

std::vector<std::string> split_paragraph(std::string_view text) {
  static const SegmentationRules rules = SegmentationRules::english();
  return split_paragraph(text, rules);
}

// ---------------------------------------------------------------------------
// CorpusStore

void CorpusStore::finalize() {
  paragraphs_.clear();
  domains_.clear();
  by_text_hash_.clear();
  by_text_hash_.reserve(sentences_.size());

  std::unordered_set<std::string_view> texts;
  texts.reserve(sentences_.size());
  std::unordered_set<std::string> domains_seen;

  for (std::size_t i = 0; i < sentences_.size(); ++i) {
    const Sentence& s = sentences_[i];
    if (s.id != i) throw DataError("sentence ids must be dense and ordered; got " +
                                   std::to_string(s.id) + " at row " + std::to_string(i));
    if (trim(s.text).empty()) throw DataError("empty sentence text at id " + std::to_string(i));
    if (!texts.insert(s.text).second) {
      throw DataError("duplicate sentence text at id " + std::to_string(i));
    }

    if (s.paragraph_id == paragraphs_.size()) {
      if (s.position != 0) {
        throw DataError("paragraph " + std::to_string(s.paragraph_id) +
                        " does not start at position 0");
      }
      paragraphs_.push_back({i, 1});
    } else if (!paragraphs_.empty() && s.paragraph_id + 1 == paragraphs_.size()) {
      Extent& p = paragraphs_.back();
      const Sentence& prev = sentences_[i - 1];
      if (s.position != prev.position + 1) {
        throw DataError("non-contiguous position at id " + std::to_string(i));
      }
      if (s.domain != prev.domain) throw DataError("paragraph spans domains at id " + std::to_string(i));
      ++p.count;
    } else {
      throw DataError("paragraph ids must be dense and contiguous; got " +
                      std::to_string(s.paragraph_id) + " at id " + std::to_string(i));
    }

    if (domains_.empty() || domains_.back().domain != s.domain) {
      if (!domains_seen.insert(s.domain).second) {
        throw DataError("domain '" + s.domain + "' is not contiguous");
      }
      domains_.push_back({s.domain, {i, 0}});
    }
    ++domains_.back().extent.count;
    by_text_hash_.emplace(fnv1a64(s.text), s.id);
  }
}

CorpusStore CorpusStore::from_sentences(std::vector<Sentence> sentences) {
  CorpusStore store;
  store.sentences_ = std::move(sentences);
  store.finalize();
  return store;
}

CorpusStore CorpusStore::from_paragraph_sentences(
    const std::vector<std::pair<std::string, std::vector<std::string>>>& paragraphs) {
  std::vector<Sentence> out;
  std::uint64_t pid = 0;
  for (const auto& [domain, sentences] : paragraphs) {
    if (sentences.empty()) continue;
    std::uint32_t pos = 0;
    for (const auto& text : sentences) {
      out.push_back({out.size(), text, domain, pid, pos++});
    }
    ++pid;
  }
  return from_sentences(std::move(out));
}

const Sentence& CorpusStore::sentence(SentenceId id) const {
  if (id >= sentences_.size()) throw std::out_of_range("unknown sentence id " + std::to_string(id));
  return sentences_[id];
}

const Extent& CorpusStore::paragraph_extent(std::uint64_t paragraph_id) const {
  if (paragraph_id >= paragraphs_.size()) {
    throw std::out_of_range("unknown paragraph id " + std::to_string(paragraph_id));
  }
  return paragraphs_[paragraph_id];
}

std::optional<SentenceId> CorpusStore::find_text(std::string_view text) const {
  auto [lo, hi] = by_text_hash_.equal_range(fnv1a64(text));
  for (auto it = lo; it != hi; ++it) {
    if (sentences_[it->second].text == text) return it->second;
  }
  return std::nullopt;
}

const Sentence* CorpusStore::adjacent(SentenceId id, AdjacencyPolicy policy) const {
  const Sentence& s = sentence(id);
  const Extent& p = paragraphs_[s.paragraph_id];
  const bool has_next = s.position + 1 < p.count;
  const bool has_prev = s.position > 0;
  const Sentence* next = has_next ? &sentences_[id + 1] : nullptr;
  const Sentence* prev = has_prev ? &sentences_[id - 1] : nullptr;
  if (policy == AdjacencyPolicy::FollowingThenPreceding) return next ? next : prev;
  return prev ? prev : next;
}

void CorpusStore::save(const std::filesystem::path& dir) const {
  std::filesystem::create_directories(dir);
  std::string lines;
  for (const Sentence& s : sentences_) {
    ojson j;
    j["id"] = s.id;
    j["text"] = s.text;
    j["domain"] = s.domain;
    j["paragraph_id"] = s.paragraph_id;
    j["position"] = s.position;
    lines += j.dump(-1, ' ', false, ojson::error_handler_t::replace);
    lines += '\n';
  }
  write_file_atomic(dir / "corpus.jsonl", lines);

  ojson meta;
  meta["num_sentences"] = sentences_.size();
  meta["domains"] = ojson::object();
  for (const auto& d : domains_) {
    meta["domains"][d.domain] = {{"first_id", d.extent.first}, {"count", d.extent.count}};
  }
  write_file_atomic(dir / "corpus.meta.json", meta.dump(2) + "\n");
}

CorpusStore CorpusStore::load(const std::filesystem::path& dir) {
  std::ifstream in(dir / "corpus.jsonl");
  if (!in) throw ConfigError("missing " + (dir / "corpus.jsonl").string());
  std::vector<Sentence> sentences;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    try {
      auto j = ojson::parse(line);
      sentences.push_back({j.at("id").get<SentenceId>(), j.at("text").get<std::string>(),
                           j.at("domain").get<std::string>(),
                           j.at("paragraph_id").get<std::uint64_t>(),
                           j.at("position").get<std::uint32_t>()});
    } catch (const nlohmann::json::exception& e) {
      throw DataError("corpus.jsonl line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  CorpusStore store = from_sentences(std::move(sentences));

  const auto meta_path = dir / "corpus.meta.json";
  if (std::filesystem::exists(meta_path)) {
    try {
      auto meta = ojson::parse(read_file(meta_path));
      if (meta.at("num_sentences").get<std::size_t>() != store.size()) {
        throw DataError("corpus.meta.json num_sentences disagrees with corpus.jsonl");
      }
      const auto& doms = meta.at("domains");
      if (doms.size() != store.domains_.size()) throw DataError("corpus.meta.json domain count mismatch");
      for (const auto& d : store.domains_) {
        const auto& m = doms.at(d.domain);
        if (m.at("first_id").get<std::uint64_t>() != d.extent.first ||
            m.at("count").get<std::uint64_t>() != d.extent.count) {
          throw DataError("corpus.meta.json extent mismatch for domain " + d.domain);
        }
      }
    } catch (const nlohmann::json::exception& e) {
      throw DataError(std::string("corpus.meta.json: ") + e.what());
    }
  }
  return store;
}

CorpusStore CorpusStore::subsample_paragraphs(double fraction, std::uint64_t seed) const {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw ConfigError("corpus fraction must be in (0, 1]");
  }
  if (fraction == 1.0) return *this;
  const std::uint64_t total = paragraphs_.size();
  std::uint64_t keep = static_cast<std::uint64_t>(std::llround(fraction * static_cast<double>(total)));
  keep = std::clamp<std::uint64_t>(keep, 1, total);
  Rng rng(derive_seed(seed, "corpus-fraction"));
  auto chosen = rng.sample_without_replacement(total, keep);
  std::sort(chosen.begin(), chosen.end());

  std::vector<std::pair<std::string, std::vector<std::string>>> paragraphs;
  paragraphs.reserve(chosen.size());
  for (std::uint64_t pid : chosen) {
    const Extent& e = paragraphs_[pid];
    std::vector<std::string> texts;
    for (std::uint64_t i = e.first; i < e.first + e.count; ++i) texts.push_back(sentences_[i].text);
    paragraphs.emplace_back(sentences_[e.first].domain, std::move(texts));
  }
  // Keep domains contiguous: chosen ids are sorted and domains are contiguous in the source.
  return from_paragraph_sentences(paragraphs);
}

// ---------------------------------------------------------------------------
// Ingestor

Ingestor::Ingestor(IngestOptions options) : options_(std::move(options)) {
  allowed_.insert(options_.allowed_domains.begin(), options_.allowed_domains.end());
}

Ingestor::DomainBucket& Ingestor::bucket_for(const std::string& domain) {
  auto [it, inserted] = bucket_index_.try_emplace(domain, buckets_.size());
  if (inserted) buckets_.push_back({domain, 0, {}});
  return buckets_[it->second];
}

bool Ingestor::add(const Paragraph& paragraph) {
  DomainBucket& bucket = bucket_for(paragraph.domain);
  if (bucket.consumed >= options_.per_domain_cap) {
    ++stats_.paragraphs_over_cap;
    return false;
  }
  ++bucket.consumed;
  ++stats_.paragraphs_consumed;

  std::vector<std::string> kept;
  for (auto& sentence : split_paragraph(paragraph.text, options_.rules)) {
    ++stats_.sentences_seen;
    if (seen_.insert(sentence).second) {
      kept.push_back(std::move(sentence));
    } else {
      ++stats_.duplicates_dropped;
    }
  }
  bucket.paragraphs.push_back(std::move(kept));
  return true;
}

void Ingestor::add_record(std::string_view line) {
  if (trim(line).empty()) return;
  ++stats_.records;
  Paragraph p;
  try {
    auto j = nlohmann::json::parse(line);
    if (!j.is_object()) throw std::invalid_argument("not an object");
    const auto& text = j.at("text");
    if (!text.is_string()) throw std::invalid_argument("text is not a string");
    p.text = text.get<std::string>();
    if (auto d = j.find("domain"); d != j.end()) {
      if (!d->is_string()) throw std::invalid_argument("domain is not a string");
      p.domain = d->get<std::string>();
    } else {
      p.domain = options_.default_domain;
    }
  } catch (const std::exception&) {
    ++stats_.malformed;
    return;
  }
  if (trim(p.text).empty() || p.domain.empty() || (!allowed_.empty() && !allowed_.contains(p.domain))) {
    ++stats_.malformed;
    return;
  }
  p.source_ordinal = bucket_for(p.domain).consumed;
  add(p);
}

void Ingestor::add_jsonl(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) add_record(line);
}

void Ingestor::add_store(const CorpusStore& store) {
  for (std::uint64_t pid = 0; pid < store.paragraph_count(); ++pid) {
    const Extent& e = store.paragraph_extent(pid);
    // Sentences are already segmented and unique; re-adding them as a paragraph
    // would re-split on the joined text, so feed them directly.
    DomainBucket& bucket = bucket_for(store.sentence(e.first).domain);
    if (bucket.consumed >= options_.per_domain_cap) {
      ++stats_.paragraphs_over_cap;
      continue;
    }
    ++bucket.consumed;
    ++stats_.paragraphs_consumed;
    std::vector<std::string> kept;
    for (std::uint64_t i = e.first; i < e.first + e.count; ++i) {
      ++stats_.sentences_seen;
      const std::string& text = store.sentence(i).text;
      if (seen_.insert(text).second) {
        kept.push_back(text);
      } else {
        ++stats_.duplicates_dropped;
      }
    }
    bucket.paragraphs.push_back(std::move(kept));
  }
}

CorpusStore Ingestor::finish() {
  if (stats_.records > 0 && static_cast<double>(stats_.malformed) >
                                options_.max_malformed_fraction * static_cast<double>(stats_.records)) {
    throw DataError(std::to_string(stats_.malformed) + " of " + std::to_string(stats_.records) +
                    " records malformed (limit " +
                    std::to_string(options_.max_malformed_fraction * 100.0) + "%)");
  }
  std::vector<std::pair<std::string, std::vector<std::string>>> paragraphs;
  for (auto& bucket : buckets_) {
    for (auto& sentences : bucket.paragraphs) {
      paragraphs.emplace_back(bucket.domain, std::move(sentences));
    }
  }
  buckets_.clear();
  bucket_index_.clear();
  return CorpusStore::from_paragraph_sentences(paragraphs);
}

CorpusStore ingest(std::span<const Paragraph> paragraphs, std::size_t per_domain_cap) {
  IngestOptions options;
  options.per_domain_cap = per_domain_cap;
  Ingestor ingestor(std::move(options));
  for (const auto& p : paragraphs) ingestor.add(p);
  return ingestor.finish();
}

}  // namespace zicl::corpus
