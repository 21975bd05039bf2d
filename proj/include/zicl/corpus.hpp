#pragma once

// Order-preserving, deduplicated sentence store built from raw paragraphs.
//
// Sentence ids are dense and follow corpus order. Paragraph membership and
// in-paragraph position survive deduplication (positions are renumbered over
// the surviving sentences), which is what adjacency lookups rely on.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace zicl::corpus {

using SentenceId = std::uint64_t;

struct Paragraph {
  std::string text;
  std::string domain;
  std::uint64_t source_ordinal = 0;
};

struct Sentence {
  SentenceId id = 0;
  std::string text;
  std::string domain;
  std::uint64_t paragraph_id = 0;
  std::uint32_t position = 0;

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

struct Extent {
  std::uint64_t first = 0;
  std::uint64_t count = 0;

  friend bool operator==(const Extent&, const Extent&) = default;
};

struct SegmentationRules {
  std::string terminators = ".!?";
  /// Lowercase, without the trailing period ("e.g", "approx", "dr").
  std::unordered_set<std::string> abbreviations;
  /// Treat "J." style single-letter tokens as initials, not sentence ends.
  bool single_letter_initials = true;

  static SegmentationRules english();
};

/// Rule-based splitter. A sentence ends after a run of terminators (plus any
/// closing quotes/brackets) that is followed by whitespace or end of text,
/// unless the run is a lone '.' closing an abbreviation or an initial.
/// Output sentences are trimmed and non-empty; a paragraph without a
/// terminator comes back as one sentence.
std::vector<std::string> split_paragraph(std::string_view text, const SegmentationRules& rules);
std::vector<std::string> split_paragraph(std::string_view text);

enum class AdjacencyPolicy { FollowingThenPreceding, PrecedingThenFollowing };

struct DomainExtent {
  std::string domain;
  Extent extent;
};

/// Immutable once built; safe for concurrent readers.
class CorpusStore {
 public:
  CorpusStore() = default;

  /// Validates every store invariant and derives the extents. Throws DataError.
  static CorpusStore from_sentences(std::vector<Sentence> sentences);

  /// Builds a store from already-segmented paragraphs, assigning ids in order.
  /// Empty paragraphs are skipped. Texts are assumed unique.
  static CorpusStore from_paragraph_sentences(
      const std::vector<std::pair<std::string, std::vector<std::string>>>& paragraphs);

  std::size_t size() const noexcept { return sentences_.size(); }
  bool empty() const noexcept { return sentences_.empty(); }
  std::span<const Sentence> sentences() const noexcept { return sentences_; }

  /// Throws std::out_of_range for an unknown id.
  const Sentence& sentence(SentenceId id) const;

  std::size_t paragraph_count() const noexcept { return paragraphs_.size(); }
  const Extent& paragraph_extent(std::uint64_t paragraph_id) const;

  /// Domains in corpus order.
  std::span<const DomainExtent> domains() const noexcept { return domains_; }

  /// Id of the sentence with exactly this text, if present.
  std::optional<SentenceId> find_text(std::string_view text) const;

  /// Neighbor inside the same paragraph, or nullptr for a singleton paragraph.
  /// Throws std::out_of_range for an unknown id.
  const Sentence* adjacent(SentenceId id,
                           AdjacencyPolicy policy = AdjacencyPolicy::FollowingThenPreceding) const;

  /// Writes `corpus.jsonl` and `corpus.meta.json` into `dir`.
  void save(const std::filesystem::path& dir) const;
  static CorpusStore load(const std::filesystem::path& dir);

  /// Uniformly keeps round(fraction * paragraph_count) paragraphs (at least one),
  /// preserving order, and renumbers ids. fraction == 1 returns a copy.
  CorpusStore subsample_paragraphs(double fraction, std::uint64_t seed) const;

 private:
  std::vector<Sentence> sentences_;
  std::vector<Extent> paragraphs_;
  std::vector<DomainExtent> domains_;
  std::unordered_multimap<std::uint64_t, SentenceId> by_text_hash_;

  void finalize();
};

struct IngestOptions {
  std::size_t per_domain_cap = std::numeric_limits<std::size_t>::max();
  /// Domain for records without a "domain" field; empty means such records are malformed.
  std::string default_domain;
  /// When non-empty, records tagged with any other domain are malformed.
  std::vector<std::string> allowed_domains;
  SegmentationRules rules = SegmentationRules::english();
  /// finish() fails when malformed records exceed this fraction of all records.
  double max_malformed_fraction = 0.01;
};

struct IngestStats {
  std::size_t records = 0;
  std::size_t malformed = 0;
  std::size_t paragraphs_consumed = 0;
  std::size_t paragraphs_over_cap = 0;
  std::size_t sentences_seen = 0;
  std::size_t duplicates_dropped = 0;
};

/// Single-writer streaming ingestion.
///
/// Deduplication is global across domains and runs in arrival order: the
/// first occurrence of a sentence text wins. Sentence ids are assigned at
/// finish(), grouping domains in order of first appearance; for a stream that
/// is already grouped by domain this is exactly arrival order.
class Ingestor {
 public:
  explicit Ingestor(IngestOptions options = {});

  /// Returns false when the paragraph was skipped by the per-domain cap.
  bool add(const Paragraph& paragraph);

  /// One JSON-lines record {"text": ..., "domain": ...}. Malformed records are
  /// counted and skipped; blank lines are ignored.
  void add_record(std::string_view line);

  void add_jsonl(std::istream& in);

  /// Replays an existing store as paragraphs (cap applies).
  void add_store(const CorpusStore& store);

  const IngestStats& stats() const noexcept { return stats_; }

  /// Throws DataError when the malformed fraction exceeds the threshold.
  CorpusStore finish();

 private:
  struct DomainBucket {
    std::string domain;
    std::size_t consumed = 0;
    std::vector<std::vector<std::string>> paragraphs;
  };

  DomainBucket& bucket_for(const std::string& domain);

  IngestOptions options_;
  IngestStats stats_;
  std::vector<DomainBucket> buckets_;
  std::unordered_map<std::string, std::size_t> bucket_index_;
  std::unordered_set<std::string> seen_;
  std::unordered_set<std::string> allowed_;
};

/// Convenience wrapper over Ingestor for in-memory paragraphs.
CorpusStore ingest(std::span<const Paragraph> paragraphs,
                   std::size_t per_domain_cap = std::numeric_limits<std::size_t>::max());

}  // namespace zicl::corpus
