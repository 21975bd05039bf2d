#include "zicl/http.hpp"

#include <chrono>
#include <thread>

#include <httplib.h>

#include "zicl/errors.hpp"

namespace zicl::http {

Endpoint Endpoint::parse(const std::string& url) {
  const std::string prefix = "http://";
  if (url.rfind(prefix, 0) != 0) throw ConfigError("endpoint must start with http://: '" + url + "'");
  const auto slash = url.find('/', prefix.size());
  Endpoint e;
  if (slash == std::string::npos) {
    e.scheme_host_port = url;
  } else {
    e.scheme_host_port = url.substr(0, slash);
    e.base_path = url.substr(slash);
    while (!e.base_path.empty() && e.base_path.back() == '/') e.base_path.pop_back();
  }
  if (e.scheme_host_port.size() == prefix.size()) throw ConfigError("endpoint has no host: '" + url + "'");
  return e;
}

std::string post_json(const Endpoint& endpoint, const std::string& path, const std::string& body,
                      double timeout_seconds) {
  httplib::Client client(endpoint.scheme_host_port);
  const auto secs = static_cast<time_t>(timeout_seconds);
  const auto usecs = static_cast<time_t>((timeout_seconds - static_cast<double>(secs)) * 1e6);
  client.set_connection_timeout(secs, usecs);
  client.set_read_timeout(secs, usecs);
  client.set_write_timeout(secs, usecs);
  auto res = client.Post(endpoint.base_path + path, body, "application/json");
  if (!res) {
    throw TransportError("POST " + endpoint.str() + path + " failed: " + httplib::to_string(res.error()),
                         -1);
  }
  if (res->status != 200) {
    throw TransportError("POST " + endpoint.str() + path + " returned " + std::to_string(res->status),
                         res->status);
  }
  return res->body;
}

std::string post_json_retrying(const Endpoint& endpoint, const std::string& path,
                               const std::string& body, double timeout_seconds,
                               std::size_t retries) {
  for (std::size_t attempt = 0;; ++attempt) {
    try {
      return post_json(endpoint, path, body, timeout_seconds);
    } catch (const TransportError&) {
      if (attempt >= retries) throw;
      std::this_thread::sleep_for(std::chrono::milliseconds(20 << std::min<std::size_t>(attempt, 5)));
    }
  }
}

}  // namespace zicl::http
