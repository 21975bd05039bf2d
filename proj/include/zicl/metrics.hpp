#pragma once

#include <cstddef>
#include <span>

namespace zicl::metrics {

struct Scores {
  double accuracy = 0.0;
  double macro_f1 = 0.0;
};

/// Accuracy and macro-F1 over `num_classes` classes. Every class counts toward
/// the macro average; a class absent from both predictions and golds has
/// F1 = 0. Throws std::invalid_argument on empty or unequal inputs, or a label
/// outside [0, num_classes).
Scores compute(std::span<const std::size_t> predictions, std::span<const std::size_t> golds,
               std::size_t num_classes);

double mean(std::span<const double> xs);
/// Population standard deviation (divides by n).
double stddev(std::span<const double> xs);

}  // namespace zicl::metrics
