#include "deviant/view_linear.hpp"

#include <cmath>
#include <numbers>

#include "deviant/error.hpp"

namespace deviant {

double angle_degrees(Point vertex, Point a, Point b) {
  const double ax = a.x - vertex.x;
  const double ay = a.y - vertex.y;
  const double bx = b.x - vertex.x;
  const double by = b.y - vertex.y;
  if ((ax == 0.0 && ay == 0.0) || (bx == 0.0 && by == 0.0)) {
    throw Error(ErrorCode::ZeroRay, "ray endpoint coincides with the vertex");
  }
  // atan2 of |cross| and dot stays accurate for nearly parallel rays.
  const double cross = ax * by - ay * bx;
  const double dot = ax * bx + ay * by;
  return std::atan2(std::abs(cross), dot) * 180.0 / std::numbers::pi;
}

namespace {

double line_slope(const Series& s, std::size_t i, std::size_t j) {
  return (s[j] - s[i]) / (static_cast<double>(j) - static_cast<double>(i));
}

SimOff score_against_line(const Series& s, std::size_t i, double slope, std::size_t k,
                          const LinearViewOptions& options) {
  const double on_line = s[i] + slope * (static_cast<double>(k) - static_cast<double>(i));
  const double residual = std::abs(s[k] - on_line);

  SimOff out;
  out.off = options.offset == OffsetMode::Perpendicular
                ? residual / std::sqrt(1.0 + slope * slope)
                : residual;
  if (k != i && s[k] != on_line) {
    const double theta = angle_degrees(point_at(s, i), point_at(s, k),
                                       {static_cast<double>(k), on_line});
    out.sim = std::exp(-theta * theta / options.bandwidth);
  }
  return out;
}

}  // namespace

SimOff linear_sim_off(const Series& s, std::size_t k, std::size_t i, std::size_t j,
                      const LinearViewOptions& options) {
  const std::size_t n = s.size();
  if (i >= n || j >= n || k >= n) {
    throw Error(ErrorCode::IndexOutOfRange, "pair or point index out of range");
  }
  if (i == j) {
    throw Error(ErrorCode::InvalidArgument, "a line needs two distinct anchors");
  }
  return score_against_line(s, i, line_slope(s, i, j), k, options);
}

LinearView::LinearView(const Series& s, LinearViewOptions options)
    : series_(s), options_(options) {
  if (s.size() < 3) {
    throw Error(ErrorCode::TooFewPoints, "linear view needs at least 3 points");
  }
  if (!(options.bandwidth > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "bandwidth must be positive");
  }
}

std::size_t LinearView::element_count() const {
  const std::size_t n = series_.size();
  return n * (n - 1);
}

std::pair<std::size_t, std::size_t> LinearView::pair_of(std::size_t e) const {
  const std::size_t others = series_.size() - 1;
  const std::size_t i = e / others;
  std::size_t j = e % others;
  if (j >= i) ++j;
  return {i, j};
}

std::size_t LinearView::element_of(std::size_t i, std::size_t j) const {
  return i * (series_.size() - 1) + (j > i ? j - 1 : j);
}

void LinearView::evaluate(std::size_t e, std::span<double> sim,
                          std::span<double> off) const {
  const auto [i, j] = pair_of(e);
  const std::size_t n = series_.size();
  const double slope = line_slope(series_, i, j);
  for (std::size_t k = 0; k < n; ++k) {
    const SimOff so = score_against_line(series_, i, slope, k, options_);
    sim[k] = so.sim;
    off[k] = so.off;
  }
}

std::vector<double> LinearView::weights(std::span<const double> similarity_mass) const {
  const std::size_t n = series_.size();
  std::vector<double> x(n, 0.0), y(n, 0.0);
  for (std::size_t e = 0; e < similarity_mass.size(); ++e) {
    const auto [i, j] = pair_of(e);
    x[i] += similarity_mass[e];
    y[j] += similarity_mass[e];
  }
  std::vector<double> w(similarity_mass.size());
  for (std::size_t e = 0; e < w.size(); ++e) {
    const auto [i, j] = pair_of(e);
    w[e] = x[i] * y[j];
  }
  return w;
}

PairWeights pair_weights(const Series& s, const LinearViewOptions& options) {
  const LinearView view(s, options);
  const std::size_t n = s.size();
  PairWeights out{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
  std::vector<double> sim(n), off(n);
  for (std::size_t e = 0; e < view.element_count(); ++e) {
    view.evaluate(e, sim, off);
    double mass = 0.0;
    for (double v : sim) mass += v;
    const auto [i, j] = view.pair_of(e);
    out.x[i] += mass;
    out.y[j] += mass;
  }
  return out;
}

RddReport linear_rdd(const Series& s, const LinearViewOptions& options,
                     const ExecutionPolicy& policy) {
  const LinearView view(s, options);
  return rdd_scores(view, policy);
}

}  // namespace deviant
