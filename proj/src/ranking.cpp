#include "jindex/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "jindex/error.hpp"

namespace jindex {

namespace {

void check_values(std::span<const double> values) {
  if (values.empty()) throw DataError("cannot rank an empty sequence");
  if (std::ranges::any_of(values, [](double v) { return std::isnan(v); })) {
    throw DataError("cannot rank NaN values");
  }
}

// Orders by (primary, secondary) descending and gives each run of fully equal
// keys the mean of its positions. With an empty secondary only primary counts.
std::vector<double> lexicographic_ranks(std::span<const double> primary,
                                        std::span<const double> secondary) {
  const std::size_t n = primary.size();
  auto key_equal = [&](std::size_t a, std::size_t b) {
    return primary[a] == primary[b] && (secondary.empty() || secondary[a] == secondary[b]);
  };
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::ranges::stable_sort(order, [&](std::size_t a, std::size_t b) {
    if (primary[a] != primary[b]) return primary[a] > primary[b];
    return !secondary.empty() && secondary[a] > secondary[b];
  });

  std::vector<double> ranks(n);
  for (std::size_t first = 0; first < n;) {
    std::size_t last = first;
    while (last + 1 < n && key_equal(order[last + 1], order[first])) ++last;
    const double shared = static_cast<double>(first + last) / 2.0 + 1.0;
    for (std::size_t k = first; k <= last; ++k) ranks[order[k]] = shared;
    first = last + 1;
  }
  return ranks;
}

}  // namespace

Ranking rank_descending(std::span<const double> values, std::string index_name) {
  check_values(values);
  return Ranking{std::move(index_name), lexicographic_ranks(values, {}), TiePolicy::fractional};
}

std::pair<Ranking, Ranking> rank_pair(std::span<const double> first, std::string first_name,
                                      std::span<const double> second, std::string second_name,
                                      TiePolicy policy) {
  check_values(first);
  check_values(second);
  if (first.size() != second.size()) throw DataError("rankings cover different rosters");
  if (policy == TiePolicy::fractional) {
    return {rank_descending(first, std::move(first_name)),
            rank_descending(second, std::move(second_name))};
  }
  return {Ranking{std::move(first_name), lexicographic_ranks(first, second), policy},
          Ranking{std::move(second_name), lexicographic_ranks(second, first), policy}};
}

}  // namespace jindex
