#include "zicl/retrieve.hpp"

#include <unordered_set>

#include "zicl/errors.hpp"
#include "zicl/util.hpp"

namespace zicl::retrieve {

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::Nearest: return "NEAREST";
    case Strategy::DiverseNearest: return "DIVERSE_NEAREST";
    case Strategy::PhysicalNeighbor: return "PHYSICAL_NEIGHBOR";
    case Strategy::Random: return "RANDOM";
  }
  return "?";
}

Strategy strategy_from_string(std::string_view s) {
  if (s == "NEAREST") return Strategy::Nearest;
  if (s == "DIVERSE_NEAREST") return Strategy::DiverseNearest;
  if (s == "PHYSICAL_NEIGHBOR") return Strategy::PhysicalNeighbor;
  if (s == "RANDOM") return Strategy::Random;
  throw ConfigError("unknown retrieval strategy '" + std::string(s) + "'");
}

void RetrievalRequest::validate() const {
  if (k < 1) throw ConfigError("retrieval k must be >= 1");
  if (strategy == Strategy::DiverseNearest && pool_size < k) {
    throw ConfigError("diverse nearest needs K >= k");
  }
}

namespace {

bool matches_test(const corpus::Sentence& s, std::string_view test_input) {
  return trim(s.text) == trim(test_input);
}

// The `want` most similar sentences that are not the test input, in rank order.
std::vector<vindex::Hit> ranked_excluding(const vindex::VectorIndex& index,
                                          const corpus::CorpusStore& store,
                                          const embed::EmbeddingVector& query,
                                          std::string_view test_input, std::size_t want,
                                          std::size_t& excluded) {
  // Store texts are unique, so at most one hit can match the test input.
  auto hits = index.search(query, want + 1);
  std::vector<vindex::Hit> out;
  out.reserve(want);
  for (const auto& h : hits) {
    if (out.size() == want) break;
    if (matches_test(store.sentence(h.sentence_id), test_input)) {
      ++excluded;
      continue;
    }
    out.push_back(h);
  }
  return out;
}

}  // namespace

RetrievedSet retrieve_nearest(const vindex::VectorIndex& index, const corpus::CorpusStore& store,
                              const embed::EmbeddingVector& query, const RetrievalRequest& req) {
  req.validate();
  RetrievedSet out;
  for (const auto& h : ranked_excluding(index, store, query, req.test_input, req.k, out.excluded_matches)) {
    out.inputs.push_back(store.sentence(h.sentence_id));
    out.provenance.push_back({h.sentence_id, Strategy::Nearest});
  }
  out.short_set = out.inputs.size() < req.k;
  return out;
}

RetrievedSet retrieve_diverse_nearest(const vindex::VectorIndex& index, const corpus::CorpusStore& store,
                                      const embed::EmbeddingVector& query, const RetrievalRequest& req) {
  req.validate();
  RetrievedSet out;
  const auto pool = ranked_excluding(index, store, query, req.test_input, req.pool_size, out.excluded_matches);
  const std::size_t take = std::min(req.k, pool.size());
  Rng rng(derive_seed(req.seed, "diverse-nearest"));
  for (auto i : rng.sample_without_replacement(pool.size(), take)) {
    out.inputs.push_back(store.sentence(pool[i].sentence_id));
    out.provenance.push_back({pool[i].sentence_id, Strategy::DiverseNearest});
  }
  out.short_set = out.inputs.size() < req.k;
  return out;
}

RetrievedSet retrieve_physical_neighbor(const vindex::VectorIndex& index,
                                        const corpus::CorpusStore& store,
                                        const embed::EmbeddingVector& query,
                                        const RetrievalRequest& req) {
  req.validate();
  RetrievedSet out;
  const auto anchors =
      ranked_excluding(index, store, query, req.test_input, 4 * req.k, out.excluded_matches);
  std::unordered_set<corpus::SentenceId> emitted;
  for (const auto& anchor : anchors) {
    if (out.inputs.size() == req.k) break;
    const corpus::Sentence* neighbor = store.adjacent(anchor.sentence_id, req.adjacency);
    if (neighbor == nullptr || emitted.contains(neighbor->id)) continue;
    if (matches_test(*neighbor, req.test_input)) {
      ++out.excluded_matches;
      continue;
    }
    emitted.insert(neighbor->id);
    out.inputs.push_back(*neighbor);
    out.provenance.push_back({anchor.sentence_id, Strategy::PhysicalNeighbor});
  }
  out.short_set = out.inputs.size() < req.k;
  return out;
}

RetrievedSet retrieve_random(const corpus::CorpusStore& store, const RetrievalRequest& req) {
  req.validate();
  RetrievedSet out;
  const std::uint64_t n = store.size();
  // Store texts are trimmed at segmentation time.
  const std::optional<corpus::SentenceId> excluded = store.find_text(trim(req.test_input));
  const std::uint64_t available = n - (excluded ? 1 : 0);
  const std::uint64_t take = std::min<std::uint64_t>(req.k, available);
  Rng rng(derive_seed(req.seed, "random-inputs"));
  // Draw from the id space with the excluded id swapped out to the last slot.
  for (std::uint64_t i : rng.sample_without_replacement(available, take)) {
    corpus::SentenceId id = i;
    if (excluded && id == *excluded) id = n - 1;
    out.inputs.push_back(store.sentence(id));
    out.provenance.push_back({std::nullopt, Strategy::Random});
  }
  if (excluded) out.excluded_matches = 1;
  out.short_set = out.inputs.size() < req.k;
  return out;
}

// ---------------------------------------------------------------------------

Retriever::Retriever(const vindex::VectorIndex& index, const corpus::CorpusStore& store,
                     const embed::Embedder& embedder)
    : index_(index), store_(store), embedder_(embedder) {}

RetrievedSet Retriever::retrieve(const RetrievalRequest& req) const {
  if (req.strategy == Strategy::Random) return retrieve_random(store_, req);
  return retrieve(req, embedder_.embed(req.test_input));
}

RetrievedSet Retriever::retrieve(const RetrievalRequest& req, const embed::EmbeddingVector& query) const {
  switch (req.strategy) {
    case Strategy::Nearest: return retrieve_nearest(index_, store_, query, req);
    case Strategy::DiverseNearest: return retrieve_diverse_nearest(index_, store_, query, req);
    case Strategy::PhysicalNeighbor: return retrieve_physical_neighbor(index_, store_, query, req);
    case Strategy::Random: return retrieve_random(store_, req);
  }
  throw ConfigError("unknown retrieval strategy");
}

}  // namespace zicl::retrieve
