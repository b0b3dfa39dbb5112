#pragma once

// Straight-from-the-definition reference implementations. They share no code
// with the library beyond plain std containers.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <vector>

namespace deviant::oracle {

struct Cut {
  std::vector<double> iir;  // per gap, 0 where Ihr is undefined
  std::optional<std::size_t> t;
  std::vector<std::size_t> outliers;
};

/// Er / Ihr evaluated literally on the sorted gaps.
inline Cut iir(const std::vector<double>& x, double c) {
  const std::size_t n = x.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return x[a] < x[b]; });
  Cut out;
  const double range = x[order.back()] - x[order.front()];
  if (range == 0.0) return out;
  double prior_max = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double delta = (x[order[i]] - x[order[i - 1]]) / range;
    const double er = delta * static_cast<double>(n - 1);
    const double denom = delta - prior_max;
    // Er/Ihr is 0/0 on an empty gap; its continuous extension is er * denom / delta
    // evaluated in the limit, i.e. (n - 1) * denom.
    const double value = denom == 0.0   ? 0.0
                         : delta == 0.0 ? static_cast<double>(n - 1) * denom
                                        : er / (delta / denom);
    out.iir.push_back(value);
    if (!out.t && value > c && 2 * i > n - 1) out.t = i;
    prior_max = std::max(prior_max, delta);
  }
  if (out.t)
    for (std::size_t r = *out.t; r < n; ++r) out.outliers.push_back(order[r]);
  std::sort(out.outliers.begin(), out.outliers.end());
  return out;
}

inline std::vector<double> finish(const std::vector<std::vector<double>>& sim,
                                  const std::vector<std::vector<double>>& off,
                                  const std::vector<double>& w) {
  const std::size_t n = sim.empty() ? 0 : sim[0].size();
  std::vector<double> rdd(n);
  double wsum = 0.0;
  for (double v : w) wsum += v;
  for (std::size_t k = 0; k < n; ++k) {
    double s = 0.0, o = 0.0;
    for (std::size_t e = 0; e < w.size(); ++e) {
      s += w[e] * sim[e][k];
      o += w[e] * off[e][k];
    }
    s = std::min(s / wsum, 1.0);
    o /= wsum;
    rdd[k] = s >= 1.0 ? 0.0 : -std::log(std::max(s, 1e-12)) * o;
  }
  return rdd;
}

inline std::vector<double> gaussian_rdd(const std::vector<double>& y) {
  const std::size_t n = y.size();
  std::vector<std::vector<double>> sim(n, std::vector<double>(n)), off = sim;
  std::vector<double> w(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double far = y[i];
    for (double v : y)
      if (std::abs(v - y[i]) > std::abs(far - y[i]) ||
          (std::abs(v - y[i]) == std::abs(far - y[i]) && v > far))
        far = v;
    const double sigma = std::abs(far - y[i]) / 3.0;
    for (std::size_t k = 0; k < n; ++k) {
      if (sigma == 0.0) {
        sim[i][k] = 1.0;
        off[i][k] = 0.0;
      } else {
        // ratio of normal densities, written as such
        const auto pdf = [&](double v) {
          return std::exp(-(v - y[i]) * (v - y[i]) / (2 * sigma * sigma)) /
                 (sigma * std::sqrt(2 * std::numbers::pi));
        };
        sim[i][k] = pdf(y[k]) / pdf(y[i]);
        off[i][k] = std::abs(y[k] - y[i]);
      }
      w[i] += sim[i][k];
    }
  }
  return finish(sim, off, w);
}

/// Angles via acos of normalised dot products; offsets via the point-line
/// distance formula through two points.
inline std::vector<double> linear_rdd(const std::vector<double>& y, double bandwidth,
                                      bool vertical) {
  const std::size_t n = y.size();
  std::vector<std::vector<double>> sim, off;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      pairs.emplace_back(i, j);
      const double xi = static_cast<double>(i), xj = static_cast<double>(j);
      std::vector<double> s(n, 1.0), o(n, 0.0);
      for (std::size_t k = 0; k < n; ++k) {
        const double xk = static_cast<double>(k);
        const double lk = y[i] + (y[j] - y[i]) * (xk - xi) / (xj - xi);
        if (vertical) {
          o[k] = std::abs(y[k] - lk);
        } else {
          const double a = y[j] - y[i], b = -(xj - xi), c = (xj - xi) * y[i] - (y[j] - y[i]) * xi;
          o[k] = std::abs(a * xk + b * y[k] + c) / std::hypot(a, b);
        }
        if (k == i || y[k] == lk) continue;
        const double ux = xk - xi, uy = y[k] - y[i], vx = xk - xi, vy = lk - y[i];
        double cosv = (ux * vx + uy * vy) / (std::hypot(ux, uy) * std::hypot(vx, vy));
        cosv = std::clamp(cosv, -1.0, 1.0);
        const double theta = std::acos(cosv) * 180.0 / std::numbers::pi;
        s[k] = std::exp(-theta * theta / bandwidth);
      }
      sim.push_back(std::move(s));
      off.push_back(std::move(o));
    }
  std::vector<double> x(n, 0.0), yy(n, 0.0), mass(pairs.size(), 0.0);
  for (std::size_t e = 0; e < pairs.size(); ++e) {
    for (double v : sim[e]) mass[e] += v;
    x[pairs[e].first] += mass[e];
    yy[pairs[e].second] += mass[e];
  }
  std::vector<double> w(pairs.size());
  for (std::size_t e = 0; e < pairs.size(); ++e) w[e] = x[pairs[e].first] * yy[pairs[e].second];
  return finish(sim, off, w);
}

/// Longest strictly monotone run of at least two points that starts at
/// index 0, by the classic quadratic recurrence. Zero when none exists.
inline std::size_t monotone_from_start(const std::vector<double>& y, bool rising) {
  const std::size_t n = y.size();
  std::vector<std::size_t> len(n, 0);
  len[0] = 1;
  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (len[j] == 0) continue;
      if (rising ? y[j] < y[i] : y[j] > y[i]) len[i] = std::max(len[i], len[j] + 1);
    }
    best = std::max(best, len[i]);
  }
  return best;
}

}  // namespace deviant::oracle
