#pragma once

// Hand-computed confusion-matrix fixtures (A = 0, B = 1, ...).

#include <cstddef>
#include <string>
#include <vector>

namespace zicl::testing {

struct MetricFixture {
  std::string name;
  std::vector<std::size_t> golds;
  std::vector<std::size_t> preds;
  std::size_t num_classes;
  double accuracy;
  double macro_f1;
};

inline const std::vector<MetricFixture>& metric_fixtures() {
  static const std::vector<MetricFixture> f = {
      // F1_A = 2/3, F1_B = 4/5.
      {"two-class", {0, 0, 1, 1}, {0, 1, 1, 1}, 2, 0.75, 0.7333333333333333},
      {"perfect", {0, 1, 2, 1, 0}, {0, 1, 2, 1, 0}, 3, 1.0, 1.0},
      // F1_A = 2/3, F1_B = 0.
      {"constant", {0, 0, 1, 1}, {0, 0, 0, 0}, 2, 0.5, 0.3333333333333333},
      // F1 = 1, 1/2, 1/2.
      {"three-class-swap", {0, 1, 2, 0, 1, 2}, {0, 2, 1, 0, 1, 2}, 3, 0.6666666666666666, 0.6666666666666666},
      // F1_A = 1, F1_B = 2/3, F1_D = 0; C and E absent but counted.
      {"absent-classes", {0, 0, 1, 1}, {0, 0, 1, 3}, 5, 0.75, 0.3333333333333333},
  };
  return f;
}

}  // namespace zicl::testing
