#include "deviant/pipeline.hpp"

#include <numeric>

#include "deviant/error.hpp"
#include "deviant/view_curve.hpp"
#include "deviant/view_gaussian.hpp"

namespace deviant {

std::string to_string(ViewKind kind) {
  switch (kind) {
    case ViewKind::Linear: return "linear";
    case ViewKind::Gaussian: return "gaussian";
    case ViewKind::Curve: return "curve";
  }
  return "unknown";
}

std::size_t minimum_points(ViewKind kind) noexcept {
  return kind == ViewKind::Gaussian ? 2 : 3;
}

RddReport score(const Series& s, const ViewSpec& view, const ExecutionPolicy& policy) {
  switch (view.kind) {
    case ViewKind::Linear:
      return linear_rdd(s, {view.bandwidth, view.offset}, policy);
    case ViewKind::Gaussian:
      return gaussian_rdd(s, policy);
    case ViewKind::Curve:
      return curve_rdd(s, view.pattern, {view.bandwidth}, policy);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown view");
}

DetectionResult detect(const Series& s, const ViewSpec& view, double threshold,
                       const ExecutionPolicy& policy) {
  DetectionResult out;
  out.rdd = score(s, view, policy);
  out.iir = iir_profile(out.rdd.rdd, threshold);
  out.outliers = out.iir.outliers;
  return out;
}

IterationTrace detect_iterative(const Series& s, const ViewSpec& view, double threshold,
                                std::optional<std::size_t> max_rounds,
                                const ExecutionPolicy& policy) {
  const std::size_t limit = max_rounds.value_or(s.size());
  IterationTrace trace{{}, s, {}, false};
  trace.surviving_indices.resize(s.size());
  std::iota(trace.surviving_indices.begin(), trace.surviving_indices.end(), std::size_t{0});

  while (trace.rounds.size() < limit) {
    if (!trace.rounds.empty() && trace.surviving.size() < minimum_points(view.kind)) break;
    IterationRound round;
    round.surviving = trace.surviving_indices;
    round.result = detect(trace.surviving, view, threshold, policy);
    for (std::size_t local : round.result.outliers) {
      round.removed.push_back(trace.surviving_indices[local]);
    }
    const bool clean = round.removed.empty();
    if (!clean) {
      std::vector<bool> drop(trace.surviving.size(), false);
      for (std::size_t local : round.result.outliers) drop[local] = true;
      std::vector<std::size_t> keep_local;
      std::vector<std::size_t> keep_original;
      for (std::size_t i = 0; i < drop.size(); ++i) {
        if (drop[i]) continue;
        keep_local.push_back(i);
        keep_original.push_back(trace.surviving_indices[i]);
      }
      trace.surviving = trace.surviving.subset(keep_local);
      trace.surviving_indices = std::move(keep_original);
    }
    trace.rounds.push_back(std::move(round));
    if (clean) {
      trace.converged = true;
      break;
    }
  }
  return trace;
}

}  // namespace deviant
