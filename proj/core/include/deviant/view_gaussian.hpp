#pragma once

#include <cstddef>
#include <span>

#include "deviant/rdd.hpp"
#include "deviant/series.hpp"

namespace deviant {

/// A normal density centred on one datum whose 3-sigma reach is the datum
/// furthest from it.
struct GaussianAnchor {
  double center = 0.0;
  double furthest = 0.0;
  double sigma = 0.0;
};

/// Anchor for values[i]. Ties for the furthest value go to the larger value.
GaussianAnchor make_anchor(std::span<const double> values, std::size_t i);

/// sim = f(v) / f(center), off = |v - center|. Throws DegenerateSigma when
/// sigma is zero.
SimOff gaussian_sim_off(const GaussianAnchor& anchor, double v);

/// One element per datum, weighted by its similarity mass. When every value
/// equals the anchor (sigma = 0) the anchor scores sim 1, off 0 everywhere.
class GaussianView final : public ViewProvider {
 public:
  /// Throws TooFewPoints for fewer than two values.
  explicit GaussianView(const Series& s);

  std::size_t point_count() const override { return series_.size(); }
  std::size_t element_count() const override { return series_.size(); }
  void evaluate(std::size_t e, std::span<double> sim, std::span<double> off) const override;

 private:
  const Series& series_;
};

RddReport gaussian_rdd(const Series& s, const ExecutionPolicy& policy = {});

}  // namespace deviant
