#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "deviant/series.hpp"

namespace deviant {

/// An index-increasing subsequence with its realised turn structure. `sign` is
/// the direction of the first step, which is also the type of the first
/// extremum when there is one.
struct SubsequenceResult {
  std::vector<std::size_t> indices;
  Sign sign = Sign::None;
  int turns = 0;

  std::size_t length() const noexcept { return indices.size(); }
  friend bool operator==(const SubsequenceResult&, const SubsequenceResult&) = default;
};

struct LktsOptions {
  SignFilter sign = SignFilter::Any;
  /// Accept any turn count up to T instead of exactly T.
  bool at_most = false;
};

/// Longest strictly-alternating paths that start at position 0 of `values`,
/// indexed by the first step's direction, the endpoint and the turn count.
///
/// A state's current direction follows from (sign, t): rising iff sign is Plus
/// and t is even, or sign is Minus and t is odd. A step that keeps the
/// direction keeps t; a step that reverses it makes the previous element a
/// turn. O(n^2 T) time.
class TurnTable {
 public:
  TurnTable(std::span<const double> values, int max_turns);

  std::size_t size() const noexcept { return size_; }
  int max_turns() const noexcept { return max_turns_; }

  /// Length of the best path ending at `i` in state (sign, t), if any.
  std::optional<std::size_t> best(Sign sign, std::size_t i, int t) const;
  std::optional<std::size_t> predecessor(Sign sign, std::size_t i, int t) const;
  /// Positions of that path from 0 to `i`. Empty when the state is absent.
  std::vector<std::size_t> path(Sign sign, std::size_t i, int t) const;

  struct Optimum {
    std::size_t length = 0;
    std::size_t endpoint = 0;
  };
  /// Longest path over all endpoints; ties go to the endpoint nearest 0.
  std::optional<Optimum> optimum(Sign sign, int t) const;

 private:
  std::size_t slot(Sign sign, std::size_t i, int t) const;

  std::size_t size_;
  int max_turns_;
  std::vector<std::uint32_t> best_;  // 0 marks an absent state
  std::vector<std::uint32_t> pred_;
};

/// Longest subsequence starting at index 0 with T turns. Throws NegativeTurns.
std::optional<SubsequenceResult> lkts_from_start(const Series& s, int turns,
                                                 const LktsOptions& options = {});

/// Longest subsequence containing `anchor` with T turns, assembled from the
/// reversed prefix and the suffix that meet at the anchor.
/// Throws IndexOutOfRange or NegativeTurns.
std::optional<SubsequenceResult> lkts_through(const Series& s, std::size_t anchor, int turns,
                                              const LktsOptions& options = {});

inline constexpr std::size_t kBruteForceLimit = 18;

/// Exhaustive search over every subsequence (through `anchor` if given).
/// Returns the lexicographically smallest longest witness.
/// Throws TooLarge above kBruteForceLimit values.
std::optional<SubsequenceResult> brute_force_lkts(const Series& s, int turns,
                                                  std::optional<std::size_t> anchor = std::nullopt,
                                                  const LktsOptions& options = {});

/// Realised structure of `values` taken at `indices`: (first-step sign, turns).
/// Returns nullopt unless the path has at least two points and no equal
/// neighbours.
std::optional<SubsequenceResult> describe_subsequence(std::span<const double> values,
                                                      std::vector<std::size_t> indices);

}  // namespace deviant
