#pragma once

// Selection of pseudo-demonstration input sentences for one test input.
//
// Every strategy excludes corpus sentences whose text equals the test input,
// returns distinct sentences, and sets `short_set` iff fewer than k came back.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zicl/corpus.hpp"
#include "zicl/embed.hpp"
#include "zicl/vindex.hpp"

namespace zicl::retrieve {

enum class Strategy { Nearest, DiverseNearest, PhysicalNeighbor, Random };

std::string_view to_string(Strategy s);
/// Accepts "NEAREST", "DIVERSE_NEAREST", "PHYSICAL_NEIGHBOR", "RANDOM". Throws ConfigError.
Strategy strategy_from_string(std::string_view s);

struct RetrievalRequest {
  std::string test_input;
  std::size_t k = 16;
  Strategy strategy = Strategy::PhysicalNeighbor;
  /// Pool size K for DiverseNearest; must be >= k.
  std::size_t pool_size = 4096;
  std::uint64_t seed = 0;
  corpus::AdjacencyPolicy adjacency = corpus::AdjacencyPolicy::FollowingThenPreceding;

  /// Throws ConfigError.
  void validate() const;
};

struct Provenance {
  std::optional<corpus::SentenceId> anchor_id;
  Strategy rule = Strategy::Nearest;
};

struct RetrievedSet {
  std::vector<corpus::Sentence> inputs;
  std::vector<Provenance> provenance;
  bool short_set = false;
  /// Corpus sentences skipped because their text equals the test input.
  std::size_t excluded_matches = 0;
};

/// Top-k by similarity, descending.
RetrievedSet retrieve_nearest(const vindex::VectorIndex& index, const corpus::CorpusStore& store,
                              const embed::EmbeddingVector& query, const RetrievalRequest& req);

/// k sampled without replacement from the K nearest; output in sampled order.
RetrievedSet retrieve_diverse_nearest(const vindex::VectorIndex& index, const corpus::CorpusStore& store,
                                      const embed::EmbeddingVector& query, const RetrievalRequest& req);

/// For each anchor in descending similarity, emits its in-paragraph neighbor.
/// Anchors with no neighbor, or whose neighbor was already emitted or equals
/// the test input, are skipped and later anchors (up to 4k fetched) backfill.
RetrievedSet retrieve_physical_neighbor(const vindex::VectorIndex& index,
                                        const corpus::CorpusStore& store,
                                        const embed::EmbeddingVector& query,
                                        const RetrievalRequest& req);

/// k distinct sentences uniformly at random.
RetrievedSet retrieve_random(const corpus::CorpusStore& store, const RetrievalRequest& req);

/// Embeds the test input and dispatches on req.strategy.
class Retriever {
 public:
  Retriever(const vindex::VectorIndex& index, const corpus::CorpusStore& store,
            const embed::Embedder& embedder);

  RetrievedSet retrieve(const RetrievalRequest& req) const;
  RetrievedSet retrieve(const RetrievalRequest& req, const embed::EmbeddingVector& query) const;

 private:
  const vindex::VectorIndex& index_;
  const corpus::CorpusStore& store_;
  const embed::Embedder& embedder_;
};

}  // namespace zicl::retrieve
