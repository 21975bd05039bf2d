#include "zicl/vindex.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <limits>
#include <numeric>
#include <unordered_set>

#include "zicl/errors.hpp"
#include "zicl/util.hpp"

namespace zicl::vindex {

static_assert(std::endian::native == std::endian::little, "index format assumes a little-endian host");

namespace {

constexpr char kMagic[8] = {'Z', 'I', 'C', 'L', 'I', 'D', 'X', '1'};
constexpr std::uint32_t kVersion = 1;

std::vector<Hit> top_k(std::vector<Hit> hits, std::size_t k) {
  k = std::min(k, hits.size());
  std::partial_sort(hits.begin(), hits.begin() + static_cast<std::ptrdiff_t>(k), hits.end(), hit_before);
  hits.resize(k);
  return hits;
}

template <typename T>
void put(std::string& out, const T& v) {
  const auto* p = reinterpret_cast<const char*>(&v);
  out.append(p, sizeof(T));
}

template <typename T>
void put_array(std::string& out, std::span<const T> v) {
  out.append(reinterpret_cast<const char*>(v.data()), v.size_bytes());
}

class Reader {
 public:
  explicit Reader(std::string_view bytes) : bytes_(bytes) {}

  template <typename T>
  T get() {
    T v;
    std::memcpy(&v, take(sizeof(T)), sizeof(T));
    return v;
  }

  template <typename T>
  std::vector<T> get_array(std::uint64_t n) {
    if (n > bytes_.size() / sizeof(T)) throw DataError("index file truncated");
    std::vector<T> v(n);
    std::memcpy(v.data(), take(n * sizeof(T)), n * sizeof(T));
    return v;
  }

  bool done() const { return pos_ == bytes_.size(); }

 private:
  const char* take(std::size_t n) {
    if (bytes_.size() - pos_ < n) throw DataError("index file truncated");
    const char* p = bytes_.data() + pos_;
    pos_ += n;
    return p;
  }

  std::string_view bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

VectorIndex VectorIndex::build(const corpus::CorpusStore& store, const embed::Embedder& embedder,
                               const BuildOptions& options) {
  if (store.empty()) throw ConfigError("cannot index an empty corpus");
  const auto sentences = store.sentences();
  std::vector<embed::EmbeddingVector> rows;
  rows.reserve(sentences.size());
  const std::size_t chunk = std::max<std::size_t>(1, options.embed_chunk);
  std::vector<std::string> texts;
  for (std::size_t lo = 0; lo < sentences.size(); lo += chunk) {
    const std::size_t hi = std::min(sentences.size(), lo + chunk);
    texts.clear();
    for (std::size_t i = lo; i < hi; ++i) texts.push_back(sentences[i].text);
    try {
      auto vecs = embedder.embed_batch(texts);
      for (auto& v : vecs) rows.push_back(std::move(v));
    } catch (const BackendError& e) {
      std::vector<std::size_t> failed;
      for (std::size_t i : e.failed_indices()) failed.push_back(lo + i);
      throw BackendError("embedding rows [" + std::to_string(lo) + ", " + std::to_string(hi) +
                             ") failed: " + e.what(),
                         std::move(failed));
    }
  }
  std::vector<SentenceId> ids(sentences.size());
  for (std::size_t i = 0; i < sentences.size(); ++i) ids[i] = sentences[i].id;
  return from_vectors(rows, std::move(ids), options);
}

VectorIndex VectorIndex::from_vectors(std::span<const embed::EmbeddingVector> rows,
                                      std::vector<SentenceId> ids, const BuildOptions& options) {
  if (rows.empty()) throw ConfigError("cannot index zero rows");
  if (rows.size() != ids.size()) throw std::invalid_argument("rows and ids differ in length");
  std::unordered_set<SentenceId> unique(ids.begin(), ids.end());
  if (unique.size() != ids.size()) throw std::invalid_argument("duplicate sentence id in id map");

  VectorIndex index;
  index.dim_ = rows.front().dim();
  index.rows_.reserve(rows.size() * index.dim_);
  for (const auto& r : rows) {
    if (r.dim() != index.dim_) throw DimensionMismatch(index.dim_, r.dim());
    index.rows_.insert(index.rows_.end(), r.values().begin(), r.values().end());
  }
  index.ids_ = std::move(ids);
  index.mode_ = options.mode;
  if (index.mode_.kind == SearchMode::Partitioned) {
    if (index.mode_.num_partitions == 0) throw ConfigError("partitioned index needs num_partitions >= 1");
    index.mode_.num_partitions =
        std::min<std::uint32_t>(index.mode_.num_partitions, static_cast<std::uint32_t>(rows.size()));
    if (index.mode_.probes == 0) index.mode_.probes = std::max<std::uint32_t>(1, index.mode_.num_partitions / 8);
    index.train_partitions(options.seed, options.kmeans_iterations);
  }
  return index;
}

std::span<const float> VectorIndex::row(std::size_t r) const {
  if (r >= ids_.size()) throw std::out_of_range("row out of range");
  return std::span<const float>(rows_).subspan(r * dim_, dim_);
}

void VectorIndex::set_probes(std::uint32_t probes) {
  if (probes == 0) throw ConfigError("probes must be >= 1");
  mode_.probes = probes;
}

// Spherical k-means: assign by max dot product, centroids are normalized means.
void VectorIndex::train_partitions(std::uint64_t seed, std::size_t iterations) {
  const std::size_t n = ids_.size();
  const std::size_t parts = mode_.num_partitions;
  Rng rng(derive_seed(seed, "kmeans"));
  centroids_.assign(parts * dim_, 0.0f);
  const auto init = rng.sample_without_replacement(n, parts);
  for (std::size_t c = 0; c < parts; ++c) {
    std::copy_n(rows_.begin() + static_cast<std::ptrdiff_t>(init[c] * dim_), dim_,
                centroids_.begin() + static_cast<std::ptrdiff_t>(c * dim_));
  }

  auto assign_all = [&] {
    bool changed = false;
    for (std::size_t r = 0; r < n; ++r) {
      const auto x = row(r);
      std::uint32_t best = 0;
      double best_score = -2.0;
      for (std::size_t c = 0; c < parts; ++c) {
        const double s = embed::dot(x, std::span<const float>(centroids_).subspan(c * dim_, dim_));
        if (s > best_score) {
          best_score = s;
          best = static_cast<std::uint32_t>(c);
        }
      }
      if (assignment_[r] != best) {
        assignment_[r] = best;
        changed = true;
      }
    }
    return changed;
  };

  assignment_.assign(n, std::numeric_limits<std::uint32_t>::max());
  assign_all();
  for (std::size_t it = 0; it < iterations; ++it) {
    std::vector<double> sums(parts * dim_, 0.0);
    std::vector<std::size_t> counts(parts, 0);
    for (std::size_t r = 0; r < n; ++r) {
      const std::size_t c = assignment_[r];
      ++counts[c];
      const auto x = row(r);
      for (std::size_t d = 0; d < dim_; ++d) sums[c * dim_ + d] += x[d];
    }
    for (std::size_t c = 0; c < parts; ++c) {
      double norm = 0.0;
      for (std::size_t d = 0; d < dim_; ++d) norm += sums[c * dim_ + d] * sums[c * dim_ + d];
      if (counts[c] == 0 || norm == 0.0) {
        const auto r = rng.below(n);
        std::copy_n(rows_.begin() + static_cast<std::ptrdiff_t>(r * dim_), dim_,
                    centroids_.begin() + static_cast<std::ptrdiff_t>(c * dim_));
        continue;
      }
      const double inv = 1.0 / std::sqrt(norm);
      for (std::size_t d = 0; d < dim_; ++d) {
        centroids_[c * dim_ + d] = static_cast<float>(sums[c * dim_ + d] * inv);
      }
    }
    if (!assign_all()) break;
  }
  rebuild_lists();
}

void VectorIndex::rebuild_lists() {
  lists_.assign(mode_.num_partitions, {});
  for (std::size_t r = 0; r < assignment_.size(); ++r) {
    lists_[assignment_[r]].push_back(static_cast<std::uint32_t>(r));
  }
}

void VectorIndex::check_query(const embed::EmbeddingVector& query) const {
  if (query.dim() != dim_) throw DimensionMismatch(dim_, query.dim());
}

std::vector<Hit> VectorIndex::search_exact(const embed::EmbeddingVector& query, std::size_t k) const {
  check_query(query);
  if (k == 0) return {};
  std::vector<Hit> hits(ids_.size());
  const auto q = query.values();
  for (std::size_t r = 0; r < ids_.size(); ++r) hits[r] = {ids_[r], embed::dot(row(r), q)};
  return top_k(std::move(hits), k);
}

std::vector<Hit> VectorIndex::search(const embed::EmbeddingVector& query, std::size_t k) const {
  if (mode_.kind == SearchMode::Exact) return search_exact(query, k);
  check_query(query);
  if (k == 0) return {};

  const auto q = query.values();
  std::vector<std::pair<double, std::uint32_t>> ranked(mode_.num_partitions);
  for (std::uint32_t c = 0; c < mode_.num_partitions; ++c) {
    ranked[c] = {embed::dot(std::span<const float>(centroids_).subspan(c * dim_, dim_), q), c};
  }
  const std::size_t probes = std::min<std::size_t>(mode_.probes, ranked.size());
  std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(probes), ranked.end(),
                    [](const auto& a, const auto& b) {
                      return a.first > b.first || (a.first == b.first && a.second < b.second);
                    });

  std::vector<Hit> hits;
  for (std::size_t p = 0; p < probes; ++p) {
    for (std::uint32_t r : lists_[ranked[p].second]) hits.push_back({ids_[r], embed::dot(row(r), q)});
  }
  return top_k(std::move(hits), k);
}

std::string VectorIndex::serialize() const {
  std::string out;
  out.reserve(32 + rows_.size() * 4 + ids_.size() * 12 + centroids_.size() * 4);
  out.append(kMagic, sizeof(kMagic));
  put(out, kVersion);
  put(out, static_cast<std::uint32_t>(dim_));
  put(out, static_cast<std::uint64_t>(ids_.size()));
  put_array<float>(out, rows_);
  put_array<std::uint64_t>(out, ids_);
  put(out, static_cast<std::uint8_t>(mode_.kind));
  if (mode_.kind == SearchMode::Partitioned) {
    put(out, mode_.num_partitions);
    put_array<float>(out, centroids_);
    put_array<std::uint32_t>(out, assignment_);
  }
  return out;
}

VectorIndex VectorIndex::deserialize(std::string_view bytes, std::optional<std::uint32_t> probes) {
  Reader in(bytes);
  const auto magic = in.get_array<char>(8);
  if (!std::equal(magic.begin(), magic.end(), kMagic)) throw DataError("not a ZICLIDX1 index file");
  if (in.get<std::uint32_t>() != kVersion) throw DataError("unsupported index version");

  VectorIndex index;
  index.dim_ = in.get<std::uint32_t>();
  const auto n = in.get<std::uint64_t>();
  if (index.dim_ == 0 || n == 0) throw DataError("index file has zero rows or dimension");
  if (n > bytes.size() / (static_cast<std::uint64_t>(index.dim_) * 4)) throw DataError("index file truncated");
  index.rows_ = in.get_array<float>(n * index.dim_);
  index.ids_ = in.get_array<std::uint64_t>(n);
  const auto tag = in.get<std::uint8_t>();
  if (tag == static_cast<std::uint8_t>(SearchMode::Exact)) {
    index.mode_ = IndexMode::exact();
  } else if (tag == static_cast<std::uint8_t>(SearchMode::Partitioned)) {
    const auto parts = in.get<std::uint32_t>();
    if (parts == 0) throw DataError("partitioned index with zero partitions");
    index.mode_ = IndexMode::partitioned(parts, probes.value_or(std::max<std::uint32_t>(1, parts / 8)));
    index.centroids_ = in.get_array<float>(static_cast<std::uint64_t>(parts) * index.dim_);
    index.assignment_ = in.get_array<std::uint32_t>(n);
    for (auto a : index.assignment_) {
      if (a >= parts) throw DataError("row assigned to a nonexistent partition");
    }
    index.rebuild_lists();
  } else {
    throw DataError("unknown index mode tag " + std::to_string(tag));
  }
  if (!in.done()) throw DataError("trailing bytes after index payload");
  std::unordered_set<SentenceId> unique(index.ids_.begin(), index.ids_.end());
  if (unique.size() != index.ids_.size()) throw DataError("index id map is not a bijection");
  if (probes && *probes == 0) throw ConfigError("probes must be >= 1");
  return index;
}

void VectorIndex::save(const std::filesystem::path& path) const {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  write_file_atomic(path, serialize());
}

VectorIndex VectorIndex::load(const std::filesystem::path& path, std::optional<std::uint32_t> probes) {
  if (!std::filesystem::exists(path)) throw ConfigError("missing index file " + path.string());
  return deserialize(read_file(path), probes);
}

}  // namespace zicl::vindex
