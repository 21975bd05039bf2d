#include "zicl/wire.hpp"

#include <json.hpp>

#include "zicl/errors.hpp"

namespace zicl::wire {

using ojson = nlohmann::ordered_json;

namespace {

std::string dump(const ojson& j) { return j.dump(-1, ' ', false, ojson::error_handler_t::replace); }

template <typename F>
auto decode(std::string_view body, const char* what, F&& f) {
  try {
    return f(ojson::parse(body));
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed ") + what + ": " + e.what());
  }
}

}  // namespace

std::string encode(const EmbedRequest& m) { return dump({{"texts", m.texts}}); }

std::string encode(const EmbedResponse& m) {
  ojson vectors = ojson::array();
  for (const auto& v : m.vectors) {
    ojson row = ojson::array();
    for (float x : v) row.push_back(static_cast<double>(x));
    vectors.push_back(std::move(row));
  }
  ojson j;
  j["vectors"] = std::move(vectors);
  j["dim"] = m.dim;
  return dump(j);
}

std::string encode(const ScoreRequest& m) {
  ojson items = ojson::array();
  for (const auto& it : m.items) {
    ojson o;
    o["prompt"] = it.prompt;
    o["continuation"] = it.continuation;
    items.push_back(std::move(o));
  }
  return dump({{"items", std::move(items)}});
}

std::string encode(const ScoreResponse& m) {
  ojson items = ojson::array();
  for (const auto& it : m.items) {
    ojson o;
    o["logprob"] = it.logprob;
    o["token_count"] = it.token_count;
    items.push_back(std::move(o));
  }
  return dump({{"items", std::move(items)}});
}

std::string encode(const TokenizeRequest& m) { return dump({{"text", m.text}}); }

std::string encode(const TokenizeResponse& m) { return dump({{"count", m.count}}); }

EmbedRequest decode_embed_request(std::string_view body) {
  return decode(body, "embed request", [](const ojson& j) {
    return EmbedRequest{j.at("texts").get<std::vector<std::string>>()};
  });
}

EmbedResponse decode_embed_response(std::string_view body) {
  return decode(body, "embed response", [](const ojson& j) {
    EmbedResponse r;
    r.dim = j.at("dim").get<std::size_t>();
    for (const auto& row : j.at("vectors")) {
      std::vector<float> v;
      v.reserve(row.size());
      for (const auto& x : row) v.push_back(static_cast<float>(x.get<double>()));
      r.vectors.push_back(std::move(v));
    }
    return r;
  });
}

ScoreRequest decode_score_request(std::string_view body) {
  return decode(body, "score request", [](const ojson& j) {
    ScoreRequest r;
    for (const auto& it : j.at("items")) {
      r.items.push_back({it.at("prompt").get<std::string>(), it.at("continuation").get<std::string>()});
    }
    return r;
  });
}

ScoreResponse decode_score_response(std::string_view body) {
  return decode(body, "score response", [](const ojson& j) {
    ScoreResponse r;
    for (const auto& it : j.at("items")) {
      r.items.push_back({it.at("logprob").get<double>(), it.at("token_count").get<std::size_t>()});
    }
    return r;
  });
}

TokenizeRequest decode_tokenize_request(std::string_view body) {
  return decode(body, "tokenize request",
                [](const ojson& j) { return TokenizeRequest{j.at("text").get<std::string>()}; });
}

TokenizeResponse decode_tokenize_response(std::string_view body) {
  return decode(body, "tokenize response",
                [](const ojson& j) { return TokenizeResponse{j.at("count").get<std::size_t>()}; });
}

}  // namespace zicl::wire
