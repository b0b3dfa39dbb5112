#include "deviant/view_curve.hpp"

#include <algorithm>
#include <cmath>

#include "deviant/error.hpp"
#include "deviant/view_linear.hpp"

namespace deviant {

std::optional<SubsequenceResult> curve_model(const Series& s, const TurnPattern& pattern,
                                             std::size_t anchor) {
  if (pattern.sign != SignFilter::Any) {
    return lkts_through(s, anchor, pattern.turns, {pattern.sign, false});
  }
  auto plus = lkts_through(s, anchor, pattern.turns, {SignFilter::Plus, false});
  auto minus = lkts_through(s, anchor, pattern.turns, {SignFilter::Minus, false});
  if (!minus) return plus;
  if (!plus) return minus;
  return minus->length() > plus->length() ? minus : plus;
}

double interpolate_model(const Series& s, const SubsequenceResult& model, std::size_t k) {
  const auto& idx = model.indices;
  // Segment [idx[seg], idx[seg+1]] bracketing k, clamped to the end segments.
  const auto upper = std::upper_bound(idx.begin(), idx.end(), k);
  std::size_t seg = upper == idx.begin() ? 0 : static_cast<std::size_t>(upper - idx.begin()) - 1;
  seg = std::min(seg, idx.size() - 2);
  const double x0 = static_cast<double>(idx[seg]);
  const double x1 = static_cast<double>(idx[seg + 1]);
  const double y0 = s[idx[seg]];
  const double y1 = s[idx[seg + 1]];
  return y0 + (y1 - y0) * (static_cast<double>(k) - x0) / (x1 - x0);
}

CurveContext curve_sim_off(const Series& s, const TurnPattern& pattern, std::size_t anchor,
                           const CurveViewOptions& options) {
  const std::size_t n = s.size();
  if (anchor >= n) {
    throw Error(ErrorCode::IndexOutOfRange, "anchor out of range", anchor);
  }
  CurveContext ctx;
  ctx.anchor = anchor;
  ctx.sim.assign(n, 0.0);
  ctx.off.assign(n, 0.0);
  ctx.coef = (s.max() - s.min()) / static_cast<double>(n);

  if (ctx.coef == 0.0) {
    std::fill(ctx.sim.begin(), ctx.sim.end(), 1.0);
    return ctx;
  }

  ctx.model = curve_model(s, pattern, anchor);
  if (!ctx.model) {
    ctx.sim[anchor] = 1.0;
    return ctx;
  }

  std::vector<bool> in_model(n, false);
  for (std::size_t i : ctx.model->indices) in_model[i] = true;

  const auto rescale = [&](double v) { return (v - s.min()) / ctx.coef; };
  const Point vertex{static_cast<double>(anchor), rescale(s[anchor])};
  ctx.interpolants.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (in_model[k]) {
      ctx.interpolants[k] = s[k];
      ctx.sim[k] = 1.0;
      continue;
    }
    const double v = interpolate_model(s, *ctx.model, k);
    ctx.interpolants[k] = v;
    ctx.off[k] = std::abs(v - s[k]);
    double theta = 0.0;
    if (v != s[k]) {
      const double x = static_cast<double>(k);
      theta = angle_degrees(vertex, {x, rescale(s[k])}, {x, rescale(v)});
    }
    ctx.sim[k] = std::exp(-theta * theta / options.bandwidth);
  }
  return ctx;
}

CurveView::CurveView(const Series& s, TurnPattern pattern, CurveViewOptions options)
    : series_(s), pattern_(pattern), options_(options) {
  if (s.size() < 3) {
    throw Error(ErrorCode::TooFewPoints, "curve view needs at least 3 points");
  }
  if (pattern.turns < 0) {
    throw Error(ErrorCode::NegativeTurns, "turn count must be non-negative");
  }
  if (!(options.bandwidth > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "bandwidth must be positive");
  }
}

void CurveView::evaluate(std::size_t e, std::span<double> sim, std::span<double> off) const {
  const CurveContext ctx = curve_sim_off(series_, pattern_, e, options_);
  std::copy(ctx.sim.begin(), ctx.sim.end(), sim.begin());
  std::copy(ctx.off.begin(), ctx.off.end(), off.begin());
}

RddReport curve_rdd(const Series& s, const TurnPattern& pattern,
                    const CurveViewOptions& options, const ExecutionPolicy& policy) {
  const CurveView view(s, pattern, options);
  return rdd_scores(view, policy);
}

TurnPattern suggest_pattern(const Series& s, std::size_t window) {
  const std::size_t n = s.size();
  const std::size_t half = std::max<std::size_t>(window, 1) / 2;
  std::vector<double> smoothed(n);
  std::vector<double> buf;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = i >= half ? i - half : 0;
    const std::size_t hi = std::min(n, i + half + 1);
    buf.assign(s.begin() + static_cast<std::ptrdiff_t>(lo), s.begin() + static_cast<std::ptrdiff_t>(hi));
    auto mid = buf.begin() + static_cast<std::ptrdiff_t>(buf.size() / 2);
    std::nth_element(buf.begin(), mid, buf.end());
    smoothed[i] = *mid;
  }
  // Drop plateaus so they do not hide extrema.
  smoothed.erase(std::unique(smoothed.begin(), smoothed.end()), smoothed.end());
  const TurnStructure ts = turn_structure(smoothed);
  TurnPattern out;
  out.turns = ts.turns;
  if (ts.sign == Sign::Plus) {
    out.sign = SignFilter::Plus;
  } else if (ts.sign == Sign::Minus) {
    out.sign = SignFilter::Minus;
  } else if (smoothed.size() >= 2) {
    out.sign = smoothed[1] > smoothed[0] ? SignFilter::Plus : SignFilter::Minus;
  }
  return out;
}

}  // namespace deviant
