#include "deviant/rdd.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "deviant/error.hpp"

namespace deviant {
namespace {

constexpr std::size_t kMaxBlocks = 256;

struct Blocking {
  std::size_t count;
  std::size_t size;
};

Blocking make_blocks(std::size_t elements) {
  const std::size_t count = std::min(elements, kMaxBlocks);
  return {count, (elements + count - 1) / count};
}

void check_row(std::size_t e, std::span<const double> sim, std::span<const double> off) {
  for (std::size_t k = 0; k < sim.size(); ++k) {
    if (!(sim[k] >= 0.0 && sim[k] <= 1.0) || !(off[k] >= 0.0) || !std::isfinite(off[k])) {
      throw Error(ErrorCode::InvalidView,
                  "element " + std::to_string(e) + " gives sim=" + std::to_string(sim[k]) +
                      " off=" + std::to_string(off[k]) + " for point " + std::to_string(k),
                  k);
    }
  }
}

}  // namespace

std::vector<double> ViewProvider::weights(std::span<const double> similarity_mass) const {
  return {similarity_mass.begin(), similarity_mass.end()};
}

RddReport rdd_scores(const ViewProvider& provider, const ExecutionPolicy& policy) {
  const std::size_t n = provider.point_count();
  const std::size_t elements = provider.element_count();
  if (n == 0 || elements == 0) {
    throw Error(ErrorCode::DegenerateView, "view has no points or no elements");
  }
  const Blocking blocks = make_blocks(elements);

  // Pass 1: similarity mass per element. Each entry is owned by one element.
  std::vector<double> mass(elements, 0.0);
  for_each_block(blocks.count, policy, [&](std::size_t b) {
    std::vector<double> sim(n), off(n);
    const std::size_t end = std::min(elements, (b + 1) * blocks.size);
    for (std::size_t e = b * blocks.size; e < end; ++e) {
      provider.evaluate(e, sim, off);
      check_row(e, sim, off);
      double total = 0.0;
      for (double s : sim) total += s;
      mass[e] = total;
    }
  });

  const std::vector<double> weight = provider.weights(mass);
  if (weight.size() != elements) {
    throw Error(ErrorCode::InvalidView, "provider returned the wrong number of weights");
  }
  double weight_total = 0.0;
  for (std::size_t e = 0; e < elements; ++e) {
    if (!(weight[e] >= 0.0) || !std::isfinite(weight[e])) {
      throw Error(ErrorCode::InvalidView, "weight of element " + std::to_string(e) +
                                              " is negative or not finite", e);
    }
    weight_total += weight[e];
  }
  if (!(weight_total > 0.0)) {
    throw Error(ErrorCode::DegenerateView, "element weights sum to zero");
  }

  // Pass 2: weighted sums, one partial per block, combined in block order.
  std::vector<double> partial_sim(blocks.count * n, 0.0);
  std::vector<double> partial_off(blocks.count * n, 0.0);
  for_each_block(blocks.count, policy, [&](std::size_t b) {
    std::vector<double> sim(n), off(n);
    double* acc_sim = partial_sim.data() + b * n;
    double* acc_off = partial_off.data() + b * n;
    const std::size_t end = std::min(elements, (b + 1) * blocks.size);
    for (std::size_t e = b * blocks.size; e < end; ++e) {
      const double w = weight[e];
      if (w == 0.0) continue;
      provider.evaluate(e, sim, off);
      for (std::size_t k = 0; k < n; ++k) {
        acc_sim[k] += w * sim[k];
        acc_off[k] += w * off[k];
      }
    }
  });

  RddReport report;
  report.rdd.assign(n, 0.0);
  report.mean_sim.assign(n, 0.0);
  report.mean_off.assign(n, 0.0);
  for (std::size_t b = 0; b < blocks.count; ++b) {
    for (std::size_t k = 0; k < n; ++k) {
      report.mean_sim[k] += partial_sim[b * n + k];
      report.mean_off[k] += partial_off[b * n + k];
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    report.mean_sim[k] = std::min(report.mean_sim[k] / weight_total, 1.0);
    report.mean_off[k] /= weight_total;
    double s = report.mean_sim[k];
    if (s < kSimilarityFloor) {
      s = kSimilarityFloor;
      report.clamped.push_back(k);
    }
    report.rdd[k] = s == 1.0 ? 0.0 : -std::log(s) * report.mean_off[k];
  }
  return report;
}

}  // namespace deviant
