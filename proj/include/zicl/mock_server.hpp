#pragma once

// In-process HTTP server speaking the /score, /tokenize and /embed protocol.
// Binds 127.0.0.1 on an ephemeral port and serves from a background thread.

#include <atomic>
#include <chrono>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "zicl/demos.hpp"
#include "zicl/embed.hpp"
#include "zicl/infer.hpp"

namespace httplib {
class Server;
}

namespace zicl::mock {

struct ServerOptions {
  /// Answers /score; absent -> 404.
  std::shared_ptr<const infer::LmBackend> lm;
  /// Answers /tokenize; defaults to whitespace counting.
  std::shared_ptr<const demos::Tokenizer> tokenizer;
  /// Answers /embed for texts without a fixture vector; absent -> 404.
  std::shared_ptr<const embed::Embedder> embedder;
  /// Raw vectors returned verbatim for exact text matches.
  std::map<std::string, std::vector<float>> embed_fixtures;
  /// Overrides the "dim" field of /embed responses.
  std::optional<std::size_t> reported_dim;
  /// The first N requests (any path) get HTTP 503.
  std::size_t fail_first = 0;
  /// Every /embed request gets HTTP 503.
  bool fail_embed = false;
  /// Per-request handler delay, to make concurrency observable.
  std::chrono::milliseconds delay{0};
  std::size_t threads = 16;
  /// 0 picks an ephemeral port.
  int port = 0;
};

struct Exchange {
  std::string path;
  std::string request;
  std::string response;
  int status = 200;
};

class MockServer {
 public:
  explicit MockServer(ServerOptions options);
  ~MockServer();
  MockServer(const MockServer&) = delete;
  MockServer& operator=(const MockServer&) = delete;

  /// "http://127.0.0.1:PORT"
  std::string endpoint() const;
  int port() const noexcept { return port_; }

  /// Blocks until stop() is called (for the standalone tool).
  void wait();
  void stop();

  std::size_t request_count(const std::string& path) const;
  std::size_t max_concurrent() const noexcept { return max_concurrent_.load(); }
  /// Every exchange in arrival order.
  std::vector<Exchange> transcript() const;
  void clear_transcript();

 private:
  template <class Fn>
  void route(const std::string& path, Fn&& fn);

  ServerOptions options_;
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
  int port_ = 0;

  mutable std::mutex mu_;
  std::vector<Exchange> transcript_;
  std::map<std::string, std::size_t> counts_;
  std::size_t seen_ = 0;
  std::atomic<std::size_t> in_flight_{0};
  std::atomic<std::size_t> max_concurrent_{0};
};

}  // namespace zicl::mock
