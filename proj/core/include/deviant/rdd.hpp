#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "deviant/parallel.hpp"

namespace deviant {

inline constexpr double kDefaultBandwidth = 50.0;
inline constexpr double kSimilarityFloor = 1e-12;

/// Similarity and offset of one point under one view element.
struct SimOff {
  double sim = 1.0;
  double off = 0.0;
};

/// A family of evaluation elements over a fixed set of n points. Each element
/// scores every point with a similarity in [0, 1] and a non-negative offset.
///
/// Implementations must be safe to call concurrently from several threads.
class ViewProvider {
 public:
  virtual ~ViewProvider() = default;

  /// Number of scored points n.
  virtual std::size_t point_count() const = 0;
  virtual std::size_t element_count() const = 0;

  /// Fills sim[k] and off[k] for every point k under element `e`.
  virtual void evaluate(std::size_t e, std::span<double> sim,
                        std::span<double> off) const = 0;

  /// Maps each element's similarity mass (sum over k of sim) to its weight.
  /// The default uses the mass itself.
  virtual std::vector<double> weights(std::span<const double> similarity_mass) const;
};

struct RddReport {
  std::vector<double> rdd;
  std::vector<double> mean_sim;  ///< weighted mean similarity per point
  std::vector<double> mean_off;  ///< weighted mean offset per point
  /// Points whose mean similarity was raised to kSimilarityFloor before the log.
  std::vector<std::size_t> clamped;

  friend bool operator==(const RddReport&, const RddReport&) = default;
};

/// rdd[k] = -ln(max(S_k, floor)) * O_k, where S_k and O_k are the weighted
/// means of sim(k, e) and off(k, e) over every element e.
///
/// Elements are split into a fixed number of blocks that depends only on the
/// element count; partial sums are combined in block order, so the result is
/// bit-identical for every worker count.
///
/// Throws InvalidView when a provider value breaks its contract and
/// DegenerateView when the weights sum to zero.
RddReport rdd_scores(const ViewProvider& provider, const ExecutionPolicy& policy = {});

}  // namespace deviant
