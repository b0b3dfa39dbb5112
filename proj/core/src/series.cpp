#include "deviant/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "deviant/error.hpp"

namespace deviant {

Series::Series(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw Error(ErrorCode::EmptyInput, "series has no values");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw Error(ErrorCode::NonFiniteValue,
                  "value at position " + std::to_string(i) + " is not finite",
                  i);
    }
  }
  const auto [lo, hi] = std::minmax_element(values_.begin(), values_.end());
  min_ = *lo;
  max_ = *hi;
}

Series Series::subset(std::span<const std::size_t> keep) const {
  std::vector<double> out;
  out.reserve(keep.size());
  for (std::size_t i : keep) {
    if (i >= values_.size()) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "subset index " + std::to_string(i) + " out of range", i);
    }
    out.push_back(values_[i]);
  }
  return Series(std::move(out));
}

Series Series::reversed() const {
  return Series(std::vector<double>(values_.rbegin(), values_.rend()));
}

Series validate_series(std::span<const double> raw) {
  return Series(std::vector<double>(raw.begin(), raw.end()));
}

bool admits(SignFilter filter, Sign sign) noexcept {
  switch (filter) {
    case SignFilter::Any: return sign != Sign::None;
    case SignFilter::Plus: return sign == Sign::Plus;
    case SignFilter::Minus: return sign == Sign::Minus;
  }
  return false;
}

TurnStructure turn_structure(std::span<const double> values) {
  TurnStructure out;
  const std::size_t n = values.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (values[i] == values[i + 1]) out.strict = false;
  }
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double prev = values[i - 1];
    const double cur = values[i];
    const double next = values[i + 1];
    Sign kind = Sign::None;
    if (cur > prev && cur > next) {
      kind = Sign::Plus;
    } else if (cur < prev && cur < next) {
      kind = Sign::Minus;
    }
    if (kind == Sign::None) continue;
    if (out.turns == 0) out.sign = kind;
    ++out.turns;
  }
  return out;
}

}  // namespace deviant
