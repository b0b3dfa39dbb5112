#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "deviant/lkts.hpp"
#include "deviant/rdd.hpp"
#include "deviant/series.hpp"

namespace deviant {

struct CurveViewOptions {
  double bandwidth = kDefaultBandwidth;
};

/// Everything one anchor contributes to the curve view.
struct CurveContext {
  std::size_t anchor = 0;
  /// Longest subsequence through the anchor that fits the pattern, if any.
  std::optional<SubsequenceResult> model;
  /// (max - min) / n; zero for a constant series.
  double coef = 0.0;
  /// Model value at every abscissa (equal to the data on model points).
  /// Empty when there is no model.
  std::vector<double> interpolants;
  std::vector<double> sim;
  std::vector<double> off;
};

/// Model for one anchor. With SignFilter::Any the longer of the two signs
/// wins, Plus on a tie.
std::optional<SubsequenceResult> curve_model(const Series& s, const TurnPattern& pattern,
                                             std::size_t anchor);

/// Piecewise-linear model value at abscissa k, extending the first or last
/// segment beyond the model's span.
double interpolate_model(const Series& s, const SubsequenceResult& model, std::size_t k);

/// Similarity and offset of every point against the anchor's model. Offsets
/// use raw values; angles are measured after rescaling values by coef.
CurveContext curve_sim_off(const Series& s, const TurnPattern& pattern, std::size_t anchor,
                           const CurveViewOptions& options = {});

/// One element per anchor, weighted by its similarity mass.
class CurveView final : public ViewProvider {
 public:
  /// Throws TooFewPoints below three values, NegativeTurns for T < 0.
  CurveView(const Series& s, TurnPattern pattern, CurveViewOptions options = {});

  std::size_t point_count() const override { return series_.size(); }
  std::size_t element_count() const override { return series_.size(); }
  void evaluate(std::size_t e, std::span<double> sim, std::span<double> off) const override;

 private:
  const Series& series_;
  TurnPattern pattern_;
  CurveViewOptions options_;
};

/// O(n^3 T) work.
RddReport curve_rdd(const Series& s, const TurnPattern& pattern,
                    const CurveViewOptions& options = {}, const ExecutionPolicy& policy = {});

/// Turn pattern of a running-median smoothed copy of `s`. A hint for choosing
/// T; nothing applies it automatically.
TurnPattern suggest_pattern(const Series& s, std::size_t window = 5);

}  // namespace deviant
