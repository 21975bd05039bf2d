#include "zicl/mock_server.hpp"

#include <httplib.h>

#include "zicl/errors.hpp"
#include "zicl/wire.hpp"

namespace zicl::mock {

namespace {

struct HttpFailure {
  int status;
  std::string message;
};

}  // namespace

MockServer::MockServer(ServerOptions options) : options_(std::move(options)) {
  if (!options_.tokenizer) options_.tokenizer = std::make_shared<demos::WhitespaceTokenizer>();
  server_ = std::make_unique<httplib::Server>();
  const std::size_t threads = options_.threads;
  server_->new_task_queue = [threads] { return new httplib::ThreadPool(threads); };

  route("/score", [this](const std::string& body) -> std::string {
    if (!options_.lm) throw HttpFailure{404, "no LM configured"};
    const auto req = wire::decode_score_request(body);
    return wire::encode(wire::ScoreResponse{options_.lm->score(req.items)});
  });
  route("/tokenize", [this](const std::string& body) -> std::string {
    const auto req = wire::decode_tokenize_request(body);
    return wire::encode(wire::TokenizeResponse{options_.tokenizer->count(req.text)});
  });
  route("/embed", [this](const std::string& body) -> std::string {
    if (options_.fail_embed) throw HttpFailure{503, "embedding service unavailable"};
    const auto req = wire::decode_embed_request(body);
    wire::EmbedResponse resp;
    for (const auto& t : req.texts) {
      if (const auto it = options_.embed_fixtures.find(t); it != options_.embed_fixtures.end()) {
        resp.vectors.push_back(it->second);
      } else if (options_.embedder) {
        const auto v = options_.embedder->embed(t);
        resp.vectors.emplace_back(v.values().begin(), v.values().end());
      } else {
        throw HttpFailure{404, "no vector for text"};
      }
    }
    resp.dim = options_.reported_dim.value_or(resp.vectors.empty() ? 0 : resp.vectors.front().size());
    return wire::encode(resp);
  });

  if (options_.port > 0) {
    if (!server_->bind_to_port("127.0.0.1", options_.port)) {
      throw ConfigError("mock server could not bind port " + std::to_string(options_.port));
    }
    port_ = options_.port;
  } else {
    port_ = server_->bind_to_any_port("127.0.0.1");
    if (port_ <= 0) throw ConfigError("mock server could not bind a port");
  }
  thread_ = std::thread([this] { server_->listen_after_bind(); });
  server_->wait_until_ready();
}

MockServer::~MockServer() { stop(); }

template <class Fn>
void MockServer::route(const std::string& path, Fn&& fn) {
  server_->Post(path, [this, path, fn](const httplib::Request& req, httplib::Response& res) {
    const std::size_t now = ++in_flight_;
    std::size_t prev = max_concurrent_.load();
    while (now > prev && !max_concurrent_.compare_exchange_weak(prev, now)) {
    }
    bool fail = false;
    {
      std::lock_guard lock(mu_);
      ++counts_[path];
      fail = seen_++ < options_.fail_first;
    }
    if (options_.delay.count() > 0) std::this_thread::sleep_for(options_.delay);

    Exchange ex{path, req.body, {}, 200};
    try {
      if (fail) throw HttpFailure{503, "scripted failure"};
      ex.response = fn(req.body);
    } catch (const HttpFailure& f) {
      ex.status = f.status;
      ex.response = f.message;
    } catch (const DataError& e) {
      ex.status = 400;
      ex.response = e.what();
    } catch (const std::exception& e) {
      ex.status = 500;
      ex.response = e.what();
    }
    res.status = ex.status;
    res.set_content(ex.response, ex.status == 200 ? "application/json" : "text/plain");
    {
      std::lock_guard lock(mu_);
      transcript_.push_back(std::move(ex));
    }
    --in_flight_;
  });
}

std::string MockServer::endpoint() const { return "http://127.0.0.1:" + std::to_string(port_); }

void MockServer::wait() {
  if (thread_.joinable()) thread_.join();
}

void MockServer::stop() {
  if (server_) server_->stop();
  if (thread_.joinable()) thread_.join();
}

std::size_t MockServer::request_count(const std::string& path) const {
  std::lock_guard lock(mu_);
  const auto it = counts_.find(path);
  return it == counts_.end() ? 0 : it->second;
}

std::vector<Exchange> MockServer::transcript() const {
  std::lock_guard lock(mu_);
  return transcript_;
}

void MockServer::clear_transcript() {
  std::lock_guard lock(mu_);
  transcript_.clear();
  counts_.clear();
}

}  // namespace zicl::mock
