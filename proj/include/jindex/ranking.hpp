#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace jindex {

enum class TiePolicy {
  /// Tied values share the mean of the rank positions they span.
  fractional,
  /// When two rankings are built together, ties under one index are ordered by
  /// the other index's values; items tied under both share a fractional rank.
  partner,
};

/// Ranks of a roster under one index. ranks[i] belongs to roster entry i and
/// 1 is best. Ranks are multiples of 1/2 and sum to n(n+1)/2.
struct Ranking {
  std::string index_name;
  std::vector<double> ranks;
  TiePolicy tie_policy = TiePolicy::fractional;

  std::size_t size() const noexcept { return ranks.size(); }
};

/// Largest value gets rank 1; ties get fractional ranks.
/// Throws DataError on NaN or an empty input.
Ranking rank_descending(std::span<const double> values, std::string index_name = {});

/// Builds the two rankings compared in one association cell. Under
/// TiePolicy::partner each ranking breaks its ties by the other's values.
std::pair<Ranking, Ranking> rank_pair(std::span<const double> first, std::string first_name,
                                      std::span<const double> second, std::string second_name,
                                      TiePolicy policy);

}  // namespace jindex
