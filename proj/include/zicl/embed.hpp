#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "zicl/http.hpp"

namespace zicl::embed {

/// Unit-normalized sentence embedding. Normalization happens on construction,
/// so cosine similarity between stored vectors is a plain dot product.
class EmbeddingVector {
 public:
  EmbeddingVector() = default;

  /// Throws std::invalid_argument for a zero or non-finite vector.
  static EmbeddingVector normalized(std::vector<float> raw);

  std::size_t dim() const noexcept { return values_.size(); }
  std::span<const float> values() const noexcept { return values_; }

  friend bool operator==(const EmbeddingVector&, const EmbeddingVector&) = default;

 private:
  explicit EmbeddingVector(std::vector<float> v) : values_(std::move(v)) {}
  std::vector<float> values_;
};

/// Dot product accumulated in double, left to right.
double dot(std::span<const float> a, std::span<const float> b);

/// Cosine similarity of two unit vectors. Throws DimensionMismatch.
double cosine(const EmbeddingVector& a, const EmbeddingVector& b);

enum class EmbedderKind { Remote, HashedTest };

struct EmbedderConfig {
  EmbedderKind kind = EmbedderKind::HashedTest;
  std::string endpoint;
  std::size_t dim = 256;
  std::size_t batch_size = 64;
  std::size_t max_in_flight = 4;
  double timeout_seconds = 30.0;
  std::size_t retries = 2;

  /// Throws ConfigError.
  void validate() const;
};

class Embedder {
 public:
  virtual ~Embedder() = default;
  virtual std::size_t dim() const = 0;

  /// Order-aligned with `texts`. Texts must be non-empty.
  virtual std::vector<EmbeddingVector> embed_batch(std::span<const std::string> texts) const = 0;

  EmbeddingVector embed(const std::string& text) const;
};

/// Offline embedder: character trigrams and word unigrams feature-hashed into
/// `dim` signed buckets, then L2-normalized. A pure function of the text
/// bytes, and lexically similar texts get similar vectors.
class HashedEmbedder final : public Embedder {
 public:
  explicit HashedEmbedder(std::size_t dim);
  std::size_t dim() const override { return dim_; }
  std::vector<EmbeddingVector> embed_batch(std::span<const std::string> texts) const override;

  EmbeddingVector embed_one(std::string_view text) const;

 private:
  std::size_t dim_;
};

/// Client for POST {endpoint}/embed. Splits input into `batch_size` chunks and
/// keeps up to `max_in_flight` requests outstanding; results are reassembled
/// in input order. Failed chunks are retried, then reported via BackendError
/// with the affected input indices. A dimension disagreement is a hard
/// DimensionMismatch.
class RemoteEmbedder final : public Embedder {
 public:
  explicit RemoteEmbedder(EmbedderConfig config);
  std::size_t dim() const override { return config_.dim; }
  std::vector<EmbeddingVector> embed_batch(std::span<const std::string> texts) const override;

 private:
  EmbedderConfig config_;
  http::Endpoint endpoint_;
};

std::unique_ptr<Embedder> make_embedder(const EmbedderConfig& config);

}  // namespace zicl::embed
