#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zicl {

/// Invalid configuration, missing asset, or bad flag. Maps to CLI exit 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent data on disk or in a stream. Maps to CLI exit 3.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vector dimensions disagree. Never retried.
class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(std::size_t expected, std::size_t actual)
      : std::invalid_argument("dimension mismatch: expected " + std::to_string(expected) +
                              ", got " + std::to_string(actual)),
        expected_(expected),
        actual_(actual) {}

  std::size_t expected() const noexcept { return expected_; }
  std::size_t actual() const noexcept { return actual_; }

 private:
  std::size_t expected_;
  std::size_t actual_;
};

/// A remote embedding or LM service failed after retries. Maps to CLI exit 4.
///
/// `failed_indices` names the input positions that could not be served, so a
/// caller can report or resubmit them.
class BackendError : public std::runtime_error {
 public:
  explicit BackendError(const std::string& what, std::vector<std::size_t> failed_indices = {})
      : std::runtime_error(what), failed_indices_(std::move(failed_indices)) {}

  const std::vector<std::size_t>& failed_indices() const noexcept { return failed_indices_; }

 private:
  std::vector<std::size_t> failed_indices_;
};

}  // namespace zicl
