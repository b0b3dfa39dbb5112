#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace deviant {

/// An ordered, non-empty sequence of finite reals. Index order is time order.
/// Immutable once constructed.
class Series {
 public:
  /// Throws EmptyInput or NonFiniteValue (with the offending position).
  explicit Series(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  double min() const noexcept { return min_; }
  double max() const noexcept { return max_; }

  /// Survivors of `keep` in their original order, re-indexed from zero.
  Series subset(std::span<const std::size_t> keep) const;
  Series reversed() const;

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<double> values_;
  double min_ = 0.0;
  double max_ = 0.0;
};

Series validate_series(std::span<const double> raw);

/// A point in the (index, value) plane. Views evaluate geometry on these, so
/// the abscissa is kept as a real even though it is an index for raw data.
struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

inline Point point_at(const Series& s, std::size_t i) {
  return {static_cast<double>(i), s[i]};
}

/// Realised type of the first extremum of a sequence (or the direction of a
/// monotone one): Plus is a maximum / rising start, Minus a minimum / falling.
enum class Sign { Minus = -1, None = 0, Plus = 1 };

/// The sign a pattern admits.
enum class SignFilter { Plus, Minus, Any };

struct TurnPattern {
  SignFilter sign = SignFilter::Any;
  int turns = 0;
};

bool admits(SignFilter filter, Sign sign) noexcept;

struct TurnStructure {
  int turns = 0;
  Sign sign = Sign::None;
  bool strict = true;
  friend bool operator==(const TurnStructure&, const TurnStructure&) = default;
};

/// Counts strict interior extrema left to right. A plateau contributes no turn
/// and clears `strict`.
TurnStructure turn_structure(std::span<const double> values);
inline TurnStructure turn_structure(const Series& s) {
  return turn_structure(s.values());
}

}  // namespace deviant
