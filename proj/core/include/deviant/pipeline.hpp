#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "deviant/iir.hpp"
#include "deviant/parallel.hpp"
#include "deviant/rdd.hpp"
#include "deviant/series.hpp"
#include "deviant/view_linear.hpp"

namespace deviant {

enum class ViewKind { Linear, Gaussian, Curve };

struct ViewSpec {
  ViewKind kind = ViewKind::Gaussian;
  TurnPattern pattern{};  ///< curve view only
  double bandwidth = kDefaultBandwidth;
  OffsetMode offset = OffsetMode::Perpendicular;  ///< linear view only
};

std::string to_string(ViewKind kind);
std::size_t minimum_points(ViewKind kind) noexcept;

struct DetectionResult {
  RddReport rdd;
  IirReport iir;
  std::vector<std::size_t> outliers;  ///< indices into the scored series
};

/// Scores `s` under `view` and cuts the scores with the IIR rule.
RddReport score(const Series& s, const ViewSpec& view, const ExecutionPolicy& policy = {});
DetectionResult detect(const Series& s, const ViewSpec& view,
                       double threshold = kDefaultThreshold,
                       const ExecutionPolicy& policy = {});

struct IterationRound {
  std::vector<std::size_t> removed;   ///< original indices removed this round
  std::vector<std::size_t> surviving; ///< original index of each scored point
  DetectionResult result;             ///< indices relative to the scored series
};

struct IterationTrace {
  std::vector<IterationRound> rounds;
  Series surviving;
  std::vector<std::size_t> surviving_indices;
  bool converged = false;
};

/// Repeats detect on the survivors, re-indexed as a contiguous series, until a
/// round removes nothing or `max_rounds` rounds have run. Stops early, not
/// converged, if the survivors fall below the view's minimum size. The first
/// round always runs, so undersized input raises like detect.
IterationTrace detect_iterative(const Series& s, const ViewSpec& view,
                                double threshold = kDefaultThreshold,
                                std::optional<std::size_t> max_rounds = std::nullopt,
                                const ExecutionPolicy& policy = {});

}  // namespace deviant
