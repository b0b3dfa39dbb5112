#include "deviant/iir.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "deviant/error.hpp"

namespace deviant {

IirReport iir_profile(std::span<const double> scores, double threshold) {
  if (scores.empty()) {
    throw Error(ErrorCode::EmptyInput, "no scores to cut");
  }
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (!std::isfinite(scores[i])) {
      throw Error(ErrorCode::NonFiniteValue,
                  "score at position " + std::to_string(i) + " is not finite", i);
    }
  }
  if (!(threshold > 0.0) || !std::isfinite(threshold)) {
    throw Error(ErrorCode::InvalidArgument, "threshold must be positive and finite");
  }

  const std::size_t n = scores.size();
  IirReport report;
  report.threshold = threshold;
  report.sort_permutation.resize(n);
  std::iota(report.sort_permutation.begin(), report.sort_permutation.end(), std::size_t{0});
  std::stable_sort(report.sort_permutation.begin(), report.sort_permutation.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
  report.sorted_values.reserve(n);
  for (std::size_t idx : report.sort_permutation) report.sorted_values.push_back(scores[idx]);

  const double range = report.sorted_values.back() - report.sorted_values.front();
  if (n < 2 || range == 0.0) return report;

  const double spread = static_cast<double>(n - 1);
  double prior_max = 0.0;  // max over an empty prefix is taken as zero
  for (std::size_t i = 1; i < n; ++i) {
    const double d = (report.sorted_values[i] - report.sorted_values[i - 1]) / range;
    const double er = d * spread;
    report.delta.push_back(d);
    report.er.push_back(er);
    if (d == prior_max) {
      // Ihr is infinite (or 0/0); IIR takes its limit, zero.
      report.ihr.push_back(std::nullopt);
      report.iir.push_back(0.0);
    } else {
      const double excess = d - prior_max;
      report.ihr.push_back(d / excess);
      // er / ihr with the factor d cancelled; this is also its limit at d == 0.
      report.iir.push_back(spread * excess);
    }
    prior_max = std::max(prior_max, d);

    if (!report.cut_rank && report.iir.back() > threshold &&
        2 * i > n - 1) {
      report.cut_rank = i;
    }
  }

  if (report.cut_rank) {
    const double floor_value = report.sorted_values[*report.cut_rank];
    for (std::size_t k = 0; k < n; ++k) {
      if (scores[k] >= floor_value) report.outliers.push_back(k);
    }
  }
  return report;
}

}  // namespace deviant
