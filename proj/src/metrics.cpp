#include "zicl/metrics.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace zicl::metrics {

Scores compute(std::span<const std::size_t> predictions, std::span<const std::size_t> golds,
               std::size_t num_classes) {
  if (predictions.size() != golds.size()) throw std::invalid_argument("metrics: length mismatch");
  if (golds.empty()) throw std::invalid_argument("metrics: empty input");
  if (num_classes == 0) throw std::invalid_argument("metrics: no classes");

  std::vector<std::size_t> tp(num_classes), fp(num_classes), fn(num_classes);
  std::size_t correct = 0;
  for (std::size_t i = 0; i < golds.size(); ++i) {
    const auto p = predictions[i];
    const auto g = golds[i];
    if (p >= num_classes || g >= num_classes) throw std::invalid_argument("metrics: label out of range");
    if (p == g) {
      ++correct;
      ++tp[g];
    } else {
      ++fp[p];
      ++fn[g];
    }
  }
  double f1_sum = 0.0;
  for (std::size_t c = 0; c < num_classes; ++c) {
    const auto denom = 2 * tp[c] + fp[c] + fn[c];
    if (denom > 0) f1_sum += 2.0 * static_cast<double>(tp[c]) / static_cast<double>(denom);
  }
  return {static_cast<double>(correct) / static_cast<double>(golds.size()),
          f1_sum / static_cast<double>(num_classes)};
}

double mean(std::span<const double> xs) {
  if (xs.empty()) throw std::invalid_argument("mean of an empty list");
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double stddev(std::span<const double> xs) {
  const double m = mean(xs);
  double s = 0.0;
  for (double x : xs) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(xs.size()));
}

}  // namespace zicl::metrics
