#pragma once

// A fixed client/server conversation over every wire endpoint. The recorded
// exchanges are compared byte-for-byte against tests/golden/transcript.jsonl.

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "zicl/embed.hpp"
#include "zicl/http.hpp"
#include "zicl/infer.hpp"
#include "zicl/mock_server.hpp"
#include "zicl/util.hpp"

namespace zicl::testing {

inline const std::string& golden_path() {
  static const std::string p = std::string(ZICL_GOLDEN_DIR) + "/transcript.jsonl";
  return p;
}

struct GoldenExchange {
  std::string server;
  mock::Exchange exchange;
};

/// One server per phase; phases run sequentially with one request in flight,
/// so the transcript order is fixed.
struct GoldenServers {
  std::unique_ptr<mock::MockServer> lm;
  std::unique_ptr<mock::MockServer> scripted;
  std::unique_ptr<mock::MockServer> embed;

  GoldenServers() {
    const auto& tweet = *demos::find_builtin_task("Tweet");
    mock::ServerOptions a;
    a.lm = std::make_shared<infer::MockCopyingLm>(tweet, infer::CopyingOptions{.copy_strength = 1.0});
    lm = std::make_unique<mock::MockServer>(a);
    mock::ServerOptions b;
    b.lm = std::make_shared<infer::ScriptedLm>(
        std::vector<infer::ScriptedLm::Rule>{{" great", {}, {}, -1.0}, {" terrible", {}, {}, -2.0}}, -10.0);
    scripted = std::make_unique<mock::MockServer>(b);
    mock::ServerOptions c;
    c.embedder = std::make_shared<embed::HashedEmbedder>(8);
    c.embed_fixtures["fixed vector"] = {3.0f, 4.0f, 0.0f, 0.0f, 0.0f, 0.0f, 0.0f, 0.0f};
    embed = std::make_unique<mock::MockServer>(c);
  }

  const mock::MockServer& by_name(const std::string& name) const {
    return name == "lm" ? *lm : name == "scripted" ? *scripted : *embed;
  }

  std::vector<GoldenExchange> transcript() const {
    std::vector<GoldenExchange> all;
    for (const char* name : {"lm", "scripted", "embed"}) {
      for (auto& e : by_name(name).transcript()) all.push_back({name, std::move(e)});
    }
    return all;
  }
};

struct GoldenRun {
  std::vector<GoldenExchange> exchanges;
  /// Scoring calls observed for the single channel example.
  std::size_t channel_calls = 0;
  std::size_t num_labels = 0;
};

inline GoldenRun run_golden_scenario() {
  GoldenServers servers;
  const auto& tweet = *demos::find_builtin_task("Tweet");
  const auto& cr = *demos::find_builtin_task("CR");
  const demos::WhitespaceTokenizer tok;

  infer::BackendConfig lm_cfg;
  lm_cfg.kind = infer::BackendKind::Remote;
  lm_cfg.endpoint = servers.lm->endpoint();
  const auto lm = infer::make_backend(lm_cfg, tweet);
  const std::vector<demos::PseudoDemo> ds = {{"The staff were friendly.", "good", 2},
                                             {"Service was \"fine\", I guess.", "normal", 1}};
  infer::score_channel(*lm, ds, "The staff were friendly.", tweet, {}, tok);
  GoldenRun out;
  out.channel_calls = servers.lm->request_count("/score");
  out.num_labels = tweet.labels.size();
  infer::RemoteTokenizer rt(servers.lm->endpoint(), 10.0, 0);
  rt.count("Review: caf\xc3\xa9 au lait\n");

  infer::BackendConfig sc_cfg = lm_cfg;
  sc_cfg.endpoint = servers.scripted->endpoint();
  const auto sc = infer::make_backend(sc_cfg, cr);
  infer::score_direct(*sc, demos::render_prompt(ds, "Nice.", cr, {}, tok), cr);

  embed::EmbedderConfig ec;
  ec.kind = embed::EmbedderKind::Remote;
  ec.endpoint = servers.embed->endpoint();
  ec.dim = 8;
  ec.batch_size = 2;
  ec.max_in_flight = 1;
  embed::RemoteEmbedder remote(ec);
  const std::vector<std::string> texts = {"fixed vector", "hashed text one", "hashed text two"};
  remote.embed_batch(texts);

  out.exchanges = servers.transcript();
  return out;
}

inline std::string exchange_line(const GoldenExchange& g) {
  const auto& e = g.exchange;
  nlohmann::ordered_json j;
  j["server"] = g.server;
  j["path"] = e.path;
  j["status"] = e.status;
  j["request"] = e.request;
  j["response"] = e.response;
  return j.dump();
}

inline std::vector<GoldenExchange> load_golden() {
  std::vector<GoldenExchange> out;
  const auto text = read_file(golden_path());
  std::size_t at = 0;
  for (std::size_t nl; (nl = text.find('\n', at)) != std::string::npos; at = nl + 1) {
    const auto j = nlohmann::json::parse(text.substr(at, nl - at));
    out.push_back({j.at("server"), {j.at("path"), j.at("request"), j.at("response"), j.at("status")}});
  }
  return out;
}

/// Replays every recorded request against fresh servers over raw HTTP.
/// Returns the number of responses that differ from the recording.
inline std::size_t replay_golden_requests(const std::vector<GoldenExchange>& golden) {
  GoldenServers servers;
  std::size_t mismatches = 0;
  for (const auto& [server, e] : golden) {
    const auto ep = http::Endpoint::parse(servers.by_name(server).endpoint());
    try {
      mismatches += http::post_json(ep, e.path, e.request, 10.0) == e.response ? 0 : 1;
    } catch (const std::exception&) {
      ++mismatches;
    }
  }
  return mismatches;
}

}  // namespace zicl::testing
