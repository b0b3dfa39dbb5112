#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace deviant {

inline constexpr double kDefaultThreshold = 1.81;

/// Diagnostics of the expanding cut over ascending-sorted scores.
///
/// The per-gap vectors have N-1 entries; entry g describes the gap between
/// ranks g and g+1 (gap number i = g+1 in 1-based gap numbering). They are
/// empty when all scores are equal, since every gap fraction is then 0/0.
struct IirReport {
  std::vector<double> sorted_values;
  std::vector<std::size_t> sort_permutation;  ///< original index per rank
  std::vector<double> delta;                  ///< gap / total range
  std::vector<double> er;                     ///< delta * (N-1)
  /// delta / (delta - previous max delta); absent where the denominator is 0.
  std::vector<std::optional<double>> ihr;
  std::vector<double> iir;                    ///< er / ihr
  std::optional<std::size_t> cut_rank;        ///< t; ranks >= t are outliers
  double threshold = kDefaultThreshold;
  std::vector<std::size_t> outliers;          ///< original indices, ascending

  /// IIR of gap number i (1-based, i in [1, N-1]).
  double iir_at(std::size_t i) const { return iir.at(i - 1); }

  friend bool operator==(const IirReport&, const IirReport&) = default;
};

/// Sorts `scores` (stable on ties), evaluates the gap statistics and cuts at
/// the first rank past the middle whose IIR exceeds `threshold`.
/// Throws EmptyInput, NonFiniteValue, or InvalidArgument for threshold <= 0.
IirReport iir_profile(std::span<const double> scores,
                      double threshold = kDefaultThreshold);

}  // namespace deviant
