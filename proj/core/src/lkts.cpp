#include "deviant/lkts.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "deviant/error.hpp"

namespace deviant {
namespace {

constexpr std::array<Sign, 2> kSigns{Sign::Plus, Sign::Minus};

bool rising(Sign first, int t) { return (first == Sign::Plus) == (t % 2 == 0); }

void check_turns(int turns) {
  if (turns < 0) {
    throw Error(ErrorCode::NegativeTurns, "turn count must be non-negative");
  }
}

bool turns_accepted(int realised, int wanted, const LktsOptions& options) {
  return options.at_most ? realised <= wanted : realised == wanted;
}

// One side of a split at the anchor: either the anchor alone, or a table
// optimum for (sign, t).
struct HalfChoice {
  bool trivial = true;
  Sign sign = Sign::None;
  int turns = 0;
  std::size_t length = 1;
  std::size_t endpoint = 0;
};

std::vector<HalfChoice> half_choices(const TurnTable& table) {
  std::vector<HalfChoice> out{HalfChoice{}};
  for (int t = 0; t <= table.max_turns(); ++t) {
    for (Sign s : kSigns) {
      if (const auto opt = table.optimum(s, t)) {
        out.push_back({false, s, t, opt->length, opt->endpoint});
      }
    }
  }
  return out;
}

}  // namespace

TurnTable::TurnTable(std::span<const double> values, int max_turns)
    : size_(values.size()), max_turns_(max_turns) {
  check_turns(max_turns);
  const std::size_t states = 2 * size_ * static_cast<std::size_t>(max_turns + 1);
  best_.assign(states, 0);
  pred_.assign(states, 0);

  for (std::size_t i = 1; i < size_; ++i) {
    if (values[i] > values[0]) {
      best_[slot(Sign::Plus, i, 0)] = 2;
    } else if (values[i] < values[0]) {
      best_[slot(Sign::Minus, i, 0)] = 2;
    }
    for (std::size_t j = 1; j < i; ++j) {
      if (values[i] == values[j]) continue;
      const bool step_up = values[i] > values[j];
      for (Sign s : kSigns) {
        for (int t = 0; t <= max_turns; ++t) {
          const std::uint32_t len = best_[slot(s, j, t)];
          if (len == 0) continue;
          const int next_t = step_up == rising(s, t) ? t : t + 1;
          if (next_t > max_turns) continue;
          const std::size_t target = slot(s, i, next_t);
          if (len + 1 > best_[target]) {
            best_[target] = len + 1;
            pred_[target] = static_cast<std::uint32_t>(j);
          }
        }
      }
    }
  }
}

std::size_t TurnTable::slot(Sign sign, std::size_t i, int t) const {
  const std::size_t s = sign == Sign::Plus ? 0 : 1;
  return (s * size_ + i) * static_cast<std::size_t>(max_turns_ + 1) + static_cast<std::size_t>(t);
}

std::optional<std::size_t> TurnTable::best(Sign sign, std::size_t i, int t) const {
  if (sign == Sign::None || i >= size_ || t < 0 || t > max_turns_) return std::nullopt;
  const std::uint32_t len = best_[slot(sign, i, t)];
  if (len == 0) return std::nullopt;
  return len;
}

std::optional<std::size_t> TurnTable::predecessor(Sign sign, std::size_t i, int t) const {
  if (!best(sign, i, t)) return std::nullopt;
  return pred_[slot(sign, i, t)];
}

std::vector<std::size_t> TurnTable::path(Sign sign, std::size_t i, int t) const {
  std::vector<std::size_t> out;
  if (!best(sign, i, t)) return out;
  out.push_back(i);
  std::size_t cur = i;
  int cur_t = t;
  while (cur != 0) {
    const std::size_t prev = pred_[slot(sign, cur, cur_t)];
    out.push_back(prev);
    if (prev == 0) break;
    // The step prev -> cur either continued the direction at prev or made
    // prev a turn; recover which from the values implied by the state.
    const bool arrived_up = rising(sign, cur_t);
    std::optional<int> prev_t;
    for (int cand : {cur_t, cur_t - 1}) {
      if (cand < 0 || !best(sign, prev, cand)) continue;
      const bool continues = rising(sign, cand) == arrived_up;
      if ((cand == cur_t) == continues &&
          *best(sign, prev, cand) + 1 == best_[slot(sign, cur, cur_t)]) {
        prev_t = cand;
        break;
      }
    }
    cur = prev;
    cur_t = *prev_t;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::optional<TurnTable::Optimum> TurnTable::optimum(Sign sign, int t) const {
  std::optional<Optimum> out;
  for (std::size_t i = 1; i < size_; ++i) {
    if (const auto len = best(sign, i, t); len && (!out || *len > out->length)) {
      out = Optimum{*len, i};
    }
  }
  return out;
}

std::optional<SubsequenceResult> describe_subsequence(std::span<const double> values,
                                                      std::vector<std::size_t> indices) {
  if (indices.size() < 2) return std::nullopt;
  std::vector<double> picked;
  picked.reserve(indices.size());
  for (std::size_t i : indices) picked.push_back(values[i]);
  const TurnStructure ts = turn_structure(picked);
  if (!ts.strict) return std::nullopt;
  SubsequenceResult out;
  out.indices = std::move(indices);
  out.turns = ts.turns;
  out.sign = picked[1] > picked[0] ? Sign::Plus : Sign::Minus;
  return out;
}

std::optional<SubsequenceResult> lkts_from_start(const Series& s, int turns,
                                                 const LktsOptions& options) {
  check_turns(turns);
  const TurnTable table(s.values(), turns);
  std::optional<TurnTable::Optimum> best;
  Sign best_sign = Sign::None;
  int best_turns = 0;
  for (int t = options.at_most ? 0 : turns; t <= turns; ++t) {
    for (Sign sign : kSigns) {
      if (!admits(options.sign, sign)) continue;
      const auto opt = table.optimum(sign, t);
      if (opt && (!best || opt->length > best->length)) {
        best = opt;
        best_sign = sign;
        best_turns = t;
      }
    }
  }
  if (!best) return std::nullopt;
  return describe_subsequence(s.values(), table.path(best_sign, best->endpoint, best_turns));
}

std::optional<SubsequenceResult> lkts_through(const Series& s, std::size_t anchor, int turns,
                                              const LktsOptions& options) {
  check_turns(turns);
  if (anchor >= s.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "anchor " + std::to_string(anchor) + " outside series of " +
                    std::to_string(s.size()),
                anchor);
  }
  const auto values = s.values();
  std::vector<double> before(values.rend() - static_cast<std::ptrdiff_t>(anchor) - 1,
                             values.rend());
  std::vector<double> after(values.begin() + static_cast<std::ptrdiff_t>(anchor), values.end());
  const TurnTable left(before, turns);
  const TurnTable right(after, turns);

  struct Candidate {
    HalfChoice left, right;
    std::size_t length = 0;
  };
  std::optional<Candidate> best;
  const auto left_choices = half_choices(left);
  const auto right_choices = half_choices(right);
  for (const HalfChoice& l : left_choices) {
    for (const HalfChoice& r : right_choices) {
      if (l.trivial && r.trivial) continue;
      int total = l.turns + r.turns;
      Sign first = r.sign;
      if (!l.trivial) {
        // Read forwards, the path opens by retracing the left half's last step.
        first = rising(l.sign, l.turns) ? Sign::Minus : Sign::Plus;
        // Both halves leaving the anchor the same way make it an extremum.
        if (!r.trivial && l.sign == r.sign) ++total;
      }
      if (!turns_accepted(total, turns, options) || !admits(options.sign, first)) continue;
      const std::size_t length = l.length + r.length - 1;
      if (!best || length > best->length) best = Candidate{l, r, length};
    }
  }
  if (!best) return std::nullopt;

  std::vector<std::size_t> indices;
  indices.reserve(best->length);
  if (!best->left.trivial) {
    const auto part = left.path(best->left.sign, best->left.endpoint, best->left.turns);
    for (auto it = part.rbegin(); it != part.rend(); ++it) indices.push_back(anchor - *it);
  } else {
    indices.push_back(anchor);
  }
  if (!best->right.trivial) {
    const auto part = right.path(best->right.sign, best->right.endpoint, best->right.turns);
    for (std::size_t q = 1; q < part.size(); ++q) indices.push_back(anchor + part[q]);
  }
  return describe_subsequence(values, std::move(indices));
}

std::optional<SubsequenceResult> brute_force_lkts(const Series& s, int turns,
                                                  std::optional<std::size_t> anchor,
                                                  const LktsOptions& options) {
  check_turns(turns);
  const std::size_t n = s.size();
  if (n > kBruteForceLimit) {
    throw Error(ErrorCode::TooLarge, "brute force is limited to " +
                                         std::to_string(kBruteForceLimit) + " values");
  }
  if (anchor && *anchor >= n) {
    throw Error(ErrorCode::IndexOutOfRange, "anchor out of range", *anchor);
  }
  std::optional<SubsequenceResult> best;
  std::vector<std::size_t> indices;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    if (anchor && !(mask & (std::uint32_t{1} << *anchor))) continue;
    indices.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint32_t{1} << i)) indices.push_back(i);
    }
    if (best && indices.size() < best->length()) continue;
    auto described = describe_subsequence(s.values(), indices);
    if (!described || !turns_accepted(described->turns, turns, options) ||
        !admits(options.sign, described->sign)) {
      continue;
    }
    if (!best || described->length() > best->length() ||
        (described->length() == best->length() && described->indices < best->indices)) {
      best = std::move(described);
    }
  }
  return best;
}

}  // namespace deviant
