#include "zicl/embed.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

#include "zicl/errors.hpp"
#include "zicl/util.hpp"
#include "zicl/wire.hpp"

namespace zicl::embed {

EmbeddingVector EmbeddingVector::normalized(std::vector<float> raw) {
  double sq = 0.0;
  for (float x : raw) {
    if (!std::isfinite(x)) throw std::invalid_argument("embedding has a non-finite component");
    sq += static_cast<double>(x) * static_cast<double>(x);
  }
  if (sq == 0.0) throw std::invalid_argument("cannot normalize a zero embedding");
  const double inv = 1.0 / std::sqrt(sq);
  for (float& x : raw) x = static_cast<float>(static_cast<double>(x) * inv);
  return EmbeddingVector(std::move(raw));
}

double dot(std::span<const float> a, std::span<const float> b) {
  if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += static_cast<double>(a[i]) * static_cast<double>(b[i]);
  return acc;
}

double cosine(const EmbeddingVector& a, const EmbeddingVector& b) { return dot(a.values(), b.values()); }

void EmbedderConfig::validate() const {
  if (dim < 2) throw ConfigError("embedder dim must be >= 2");
  if (batch_size < 1) throw ConfigError("embedder batch_size must be >= 1");
  if (max_in_flight < 1) throw ConfigError("embedder max_in_flight must be >= 1");
  if (kind == EmbedderKind::Remote && endpoint.empty()) throw ConfigError("remote embedder needs an endpoint");
}

EmbeddingVector Embedder::embed(const std::string& text) const {
  auto v = embed_batch(std::span<const std::string>(&text, 1));
  return std::move(v.front());
}

// ---------------------------------------------------------------------------

HashedEmbedder::HashedEmbedder(std::size_t dim) : dim_(dim) {
  if (dim < 2) throw ConfigError("embedder dim must be >= 2");
}

EmbeddingVector HashedEmbedder::embed_one(std::string_view text) const {
  if (text.empty()) throw std::invalid_argument("cannot embed empty text");
  std::vector<float> acc(dim_, 0.0f);
  auto add = [&](std::string_view feature, std::uint64_t basis, float weight) {
    const std::uint64_t h = splitmix64(fnv1a64(feature, basis));
    const float sign = (h >> 63) ? -1.0f : 1.0f;
    acc[h % dim_] += sign * weight;
  };

  const std::string padded = " " + to_lower_ascii(text) + " ";
  for (std::size_t i = 0; i + 3 <= padded.size(); ++i) {
    add(std::string_view(padded).substr(i, 3), 0x3a9d1f0f5c0e7b21ULL, 1.0f);
  }
  for (std::string_view word : split_whitespace(padded)) add(word, 0x51ed270b27a5c3ddULL, 2.0f);
  return EmbeddingVector::normalized(std::move(acc));
}

std::vector<EmbeddingVector> HashedEmbedder::embed_batch(std::span<const std::string> texts) const {
  std::vector<EmbeddingVector> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(embed_one(t));
  return out;
}

// ---------------------------------------------------------------------------

RemoteEmbedder::RemoteEmbedder(EmbedderConfig config)
    : config_(std::move(config)), endpoint_(http::Endpoint::parse(config_.endpoint)) {
  config_.validate();
}

std::vector<EmbeddingVector> RemoteEmbedder::embed_batch(std::span<const std::string> texts) const {
  for (const auto& t : texts) {
    if (t.empty()) throw std::invalid_argument("cannot embed empty text");
  }
  const std::size_t n = texts.size();
  const std::size_t chunk = config_.batch_size;
  const std::size_t num_chunks = (n + chunk - 1) / chunk;

  std::vector<std::optional<EmbeddingVector>> results(n);
  std::vector<std::string> chunk_errors(num_chunks);
  std::exception_ptr hard_error;
  std::mutex mu;
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= num_chunks) return;
      const std::size_t lo = c * chunk;
      const std::size_t hi = std::min(n, lo + chunk);
      wire::EmbedRequest req{{texts.begin() + static_cast<std::ptrdiff_t>(lo),
                              texts.begin() + static_cast<std::ptrdiff_t>(hi)}};
      try {
        const auto body = http::post_json_retrying(endpoint_, "/embed", wire::encode(req),
                                                   config_.timeout_seconds, config_.retries);
        auto resp = wire::decode_embed_response(body);
        if (resp.dim != config_.dim) throw DimensionMismatch(config_.dim, resp.dim);
        if (resp.vectors.size() != hi - lo) {
          throw BackendError("embed service returned " + std::to_string(resp.vectors.size()) +
                             " vectors for " + std::to_string(hi - lo) + " texts");
        }
        for (std::size_t i = lo; i < hi; ++i) {
          auto& v = resp.vectors[i - lo];
          if (v.size() != config_.dim) throw DimensionMismatch(config_.dim, v.size());
          results[i] = EmbeddingVector::normalized(std::move(v));
        }
      } catch (const DimensionMismatch&) {
        std::lock_guard lock(mu);
        if (!hard_error) hard_error = std::current_exception();
      } catch (const std::exception& e) {
        chunk_errors[c] = e.what();
      }
    }
  };

  {
    std::vector<std::jthread> pool;
    const std::size_t workers = std::min(config_.max_in_flight, num_chunks);
    for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(worker);
  }
  if (hard_error) std::rethrow_exception(hard_error);

  std::vector<std::size_t> failed;
  std::string first_error;
  for (std::size_t c = 0; c < num_chunks; ++c) {
    if (chunk_errors[c].empty()) continue;
    if (first_error.empty()) first_error = chunk_errors[c];
    for (std::size_t i = c * chunk; i < std::min(n, (c + 1) * chunk); ++i) failed.push_back(i);
  }
  if (!failed.empty()) {
    throw BackendError("embedding failed for " + std::to_string(failed.size()) + " texts: " + first_error,
                       std::move(failed));
  }

  std::vector<EmbeddingVector> out;
  out.reserve(n);
  for (auto& r : results) out.push_back(std::move(*r));
  return out;
}

std::unique_ptr<Embedder> make_embedder(const EmbedderConfig& config) {
  config.validate();
  if (config.kind == EmbedderKind::HashedTest) return std::make_unique<HashedEmbedder>(config.dim);
  return std::make_unique<RemoteEmbedder>(config);
}

}  // namespace zicl::embed
