#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zicl/corpus.hpp"
#include "zicl/embed.hpp"

namespace zicl::vindex {

using corpus::SentenceId;

enum class SearchMode : std::uint8_t { Exact = 0, Partitioned = 1 };

struct IndexMode {
  SearchMode kind = SearchMode::Exact;
  std::uint32_t num_partitions = 0;
  /// Partitions scanned per query.
  std::uint32_t probes = 0;

  static IndexMode exact() { return {}; }
  static IndexMode partitioned(std::uint32_t num_partitions, std::uint32_t probes) {
    return {SearchMode::Partitioned, num_partitions, probes};
  }
};

struct Hit {
  SentenceId sentence_id = 0;
  double score = 0.0;

  friend bool operator==(const Hit&, const Hit&) = default;
};

/// Orders by descending score, then ascending sentence id.
constexpr bool hit_before(const Hit& a, const Hit& b) noexcept {
  return a.score > b.score || (a.score == b.score && a.sentence_id < b.sentence_id);
}

struct BuildOptions {
  IndexMode mode;
  std::uint64_t seed = 0;
  std::size_t kmeans_iterations = 25;
  /// Texts per embed_batch call during build.
  std::size_t embed_chunk = 1024;
};

/// Cosine top-k index over unit rows; immutable after build.
///
/// Persisted layout (little-endian):
///   "ZICLIDX1" | u32 version=1 | u32 dim | u64 N | N*dim f32 | N u64 id_map | u8 mode
///   PARTITIONED adds: u32 num_partitions | num_partitions*dim f32 centroids | N u32 row->partition
class VectorIndex {
 public:
  VectorIndex() = default;

  /// Embeds every sentence of `store`, one row per sentence in id order.
  /// Embedder failures are rethrown as BackendError naming the row range.
  static VectorIndex build(const corpus::CorpusStore& store, const embed::Embedder& embedder,
                           const BuildOptions& options = {});

  static VectorIndex from_vectors(std::span<const embed::EmbeddingVector> rows,
                                  std::vector<SentenceId> ids, const BuildOptions& options = {});

  std::size_t size() const noexcept { return ids_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  const IndexMode& mode() const noexcept { return mode_; }
  std::span<const float> row(std::size_t r) const;
  SentenceId sentence_id(std::size_t r) const { return ids_.at(r); }
  std::span<const std::uint32_t> partition_of_rows() const noexcept { return assignment_; }
  std::span<const float> centroids() const noexcept { return centroids_; }

  void set_probes(std::uint32_t probes);

  /// Top-k by the index's mode. Throws DimensionMismatch.
  std::vector<Hit> search(const embed::EmbeddingVector& query, std::size_t k) const;

  /// Full scan regardless of mode.
  std::vector<Hit> search_exact(const embed::EmbeddingVector& query, std::size_t k) const;

  std::string serialize() const;
  /// `probes` overrides the default of max(1, num_partitions / 8), which the
  /// file format does not record.
  static VectorIndex deserialize(std::string_view bytes, std::optional<std::uint32_t> probes = {});

  void save(const std::filesystem::path& path) const;
  static VectorIndex load(const std::filesystem::path& path, std::optional<std::uint32_t> probes = {});

 private:
  void check_query(const embed::EmbeddingVector& query) const;
  void train_partitions(std::uint64_t seed, std::size_t iterations);
  void rebuild_lists();

  std::size_t dim_ = 0;
  std::vector<float> rows_;
  std::vector<SentenceId> ids_;
  IndexMode mode_;
  std::vector<float> centroids_;
  std::vector<std::uint32_t> assignment_;
  std::vector<std::vector<std::uint32_t>> lists_;
};

}  // namespace zicl::vindex
