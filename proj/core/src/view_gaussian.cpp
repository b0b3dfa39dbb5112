#include "deviant/view_gaussian.hpp"

#include <cmath>
#include <string>

#include "deviant/error.hpp"

namespace deviant {

GaussianAnchor make_anchor(std::span<const double> values, std::size_t i) {
  if (i >= values.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "anchor index " + std::to_string(i), i);
  }
  const double mu = values[i];
  double furthest = mu;
  double reach = 0.0;
  for (double v : values) {
    const double d = std::abs(v - mu);
    if (d > reach || (d == reach && v > furthest)) {
      reach = d;
      furthest = v;
    }
  }
  return {mu, furthest, reach / 3.0};
}

SimOff gaussian_sim_off(const GaussianAnchor& anchor, double v) {
  if (!(anchor.sigma > 0.0)) {
    throw Error(ErrorCode::DegenerateSigma, "anchor has zero spread");
  }
  const double z = (v - anchor.center) / anchor.sigma;
  return {std::exp(-0.5 * z * z), std::abs(v - anchor.center)};
}

GaussianView::GaussianView(const Series& s) : series_(s) {
  if (s.size() < 2) {
    throw Error(ErrorCode::TooFewPoints, "gaussian view needs at least 2 values");
  }
}

void GaussianView::evaluate(std::size_t e, std::span<double> sim,
                            std::span<double> off) const {
  const GaussianAnchor anchor = make_anchor(series_.values(), e);
  const std::size_t n = series_.size();
  if (anchor.sigma == 0.0) {
    for (std::size_t k = 0; k < n; ++k) {
      sim[k] = 1.0;
      off[k] = 0.0;
    }
    return;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const SimOff so = gaussian_sim_off(anchor, series_[k]);
    sim[k] = so.sim;
    off[k] = so.off;
  }
}

RddReport gaussian_rdd(const Series& s, const ExecutionPolicy& policy) {
  const GaussianView view(s);
  return rdd_scores(view, policy);
}

}  // namespace deviant
