#pragma once

// Minimal JSON-over-HTTP client used by the remote embedding and LM backends.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zicl::http {

struct Endpoint {
  std::string scheme_host_port;  // "http://127.0.0.1:8080"
  std::string base_path;         // "" or "/v1"

  /// Accepts "http://host[:port][/base]". Throws ConfigError.
  static Endpoint parse(const std::string& url);
  std::string str() const { return scheme_host_port + base_path; }
};

/// Transport failure or non-200 status.
class TransportError : public std::runtime_error {
 public:
  TransportError(const std::string& what, int status) : std::runtime_error(what), status_(status) {}
  /// HTTP status, or -1 when no response arrived.
  int status() const noexcept { return status_; }

 private:
  int status_;
};

/// POSTs `body` as application/json to endpoint + path and returns the
/// response body. Throws TransportError.
std::string post_json(const Endpoint& endpoint, const std::string& path, const std::string& body,
                      double timeout_seconds);

/// post_json with up to `retries` extra attempts on TransportError.
std::string post_json_retrying(const Endpoint& endpoint, const std::string& path,
                               const std::string& body, double timeout_seconds,
                               std::size_t retries);

}  // namespace zicl::http
