#pragma once

// JSON wire messages for the embedding and LM scoring services.
//
// Encoders emit compact JSON with a fixed key order, so request and response
// bytes are stable and can be compared against golden transcripts.
//
//   POST /embed     {"texts":[...]}                         -> {"vectors":[[...],...],"dim":N}
//   POST /score     {"items":[{"prompt":..,"continuation":..}]} -> {"items":[{"logprob":x,"token_count":n}]}
//   POST /tokenize  {"text":...}                            -> {"count":n}

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace zicl::wire {

struct EmbedRequest {
  std::vector<std::string> texts;
};

struct EmbedResponse {
  std::vector<std::vector<float>> vectors;
  std::size_t dim = 0;
};

struct ScoreItem {
  std::string prompt;
  std::string continuation;

  friend bool operator==(const ScoreItem&, const ScoreItem&) = default;
};

struct ScoreResult {
  double logprob = 0.0;
  std::size_t token_count = 0;
};

struct ScoreRequest {
  std::vector<ScoreItem> items;
};

struct ScoreResponse {
  std::vector<ScoreResult> items;
};

struct TokenizeRequest {
  std::string text;
};

struct TokenizeResponse {
  std::size_t count = 0;
};

std::string encode(const EmbedRequest& m);
std::string encode(const EmbedResponse& m);
std::string encode(const ScoreRequest& m);
std::string encode(const ScoreResponse& m);
std::string encode(const TokenizeRequest& m);
std::string encode(const TokenizeResponse& m);

// Decoders throw DataError on malformed input.
EmbedRequest decode_embed_request(std::string_view body);
EmbedResponse decode_embed_response(std::string_view body);
ScoreRequest decode_score_request(std::string_view body);
ScoreResponse decode_score_response(std::string_view body);
TokenizeRequest decode_tokenize_request(std::string_view body);
TokenizeResponse decode_tokenize_response(std::string_view body);

}  // namespace zicl::wire
