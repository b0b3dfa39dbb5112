#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "deviant/rdd.hpp"
#include "deviant/series.hpp"

namespace deviant {

/// How the offset of a point from a pair's line is measured.
enum class OffsetMode {
  Perpendicular,  ///< Euclidean distance to the line
  Vertical,       ///< |d_k - L(k)|
};

struct LinearViewOptions {
  double bandwidth = kDefaultBandwidth;
  OffsetMode offset = OffsetMode::Perpendicular;
};

/// Interior angle at `vertex` between the rays to `a` and `b`, in degrees.
/// Throws ZeroRay when either endpoint coincides with the vertex.
double angle_degrees(Point vertex, Point a, Point b);

/// Agreement of point k with the line through points i and j. The angle is
/// taken at p_i between p_k and the line's own point at abscissa k.
SimOff linear_sim_off(const Series& s, std::size_t k, std::size_t i, std::size_t j,
                      const LinearViewOptions& options = {});

/// Every ordered pair (i, j), i != j, is a view element. Element e encodes
/// i = e / (n - 1) and j the (e % (n - 1))-th index other than i.
class LinearView final : public ViewProvider {
 public:
  /// Throws TooFewPoints when the series has fewer than three values.
  explicit LinearView(const Series& s, LinearViewOptions options = {});

  std::size_t point_count() const override { return series_.size(); }
  std::size_t element_count() const override;
  void evaluate(std::size_t e, std::span<double> sim, std::span<double> off) const override;
  /// w_ij = X_i * Y_j where X_i sums the mass of pairs (i, *) and Y_j of (*, j).
  std::vector<double> weights(std::span<const double> similarity_mass) const override;

  std::pair<std::size_t, std::size_t> pair_of(std::size_t e) const;
  std::size_t element_of(std::size_t i, std::size_t j) const;

 private:
  const Series& series_;
  LinearViewOptions options_;
};

struct PairWeights {
  std::vector<double> x;  ///< X_i
  std::vector<double> y;  ///< Y_j
  double weight(std::size_t i, std::size_t j) const { return x[i] * y[j]; }
};

PairWeights pair_weights(const Series& s, const LinearViewOptions& options = {});

/// Linear-pattern RDD over all ordered pairs. O(n^3) work.
RddReport linear_rdd(const Series& s, const LinearViewOptions& options = {},
                     const ExecutionPolicy& policy = {});

}  // namespace deviant
