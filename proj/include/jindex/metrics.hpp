#pragma once

#include <optional>
#include <span>
#include <vector>

#include "jindex/citation_record.hpp"

namespace jindex {

/// Non-negative fraction kept in lowest terms. Used for the A-index, which is
/// a mean of integers and therefore exactly representable.
struct Rational {
  Total numerator = 0;
  Total denominator = 1;

  static Rational reduced(Total num, Total den);
  double value() const noexcept { return static_cast<double>(numerator) / static_cast<double>(denominator); }
  bool operator==(const Rational&) const = default;
};

struct IndexProfile {
  Total total_citations = 0;  // T
  std::size_t h = 0;
  std::size_t g = 0;
  std::optional<Rational> a_index;  // absent when h == 0
  double r_index = 0.0;
  double j_index = 0.0;
  double js_index = 0.0;
};

/// Citation split around the h-core.
///
/// h1: citations to h-core papers, h2 = h^2, h3 = h1 - h2 (excess),
/// h4 = T - h1 (outside the core). gN = hN / T.
struct HCorePartition {
  Total h1 = 0;
  Total h2 = 0;
  Total h3 = 0;
  Total h4 = 0;
  double g1 = 0.0;
  double g2 = 0.0;
  double g3 = 0.0;
  double g4 = 0.0;

  Total total() const noexcept { return h1 + h4; }
};

Total total_citations(const CitationRecord& record);

/// Largest h with counts[h-1] >= h.
std::size_t h_index(const CitationRecord& record);

/// g-index, unbounded variant: zero-cited fictitious papers may pad the list,
/// so g can exceed the number of publications (then g = floor(sqrt(T))).
std::size_t g_index(const CitationRecord& record);

/// Mean citations over the h-core. Throws DataError("empty h-core") when h == 0.
Rational a_index(const CitationRecord& record);

/// sqrt of the h-core citation sum; 0 when h == 0.
double r_index(const CitationRecord& record);

/// Sum of sqrt(c) over the cited publications.
double j_index(const CitationRecord& record);

/// Prefix means of a non-increasing sequence. Throws DataError("sequence not
/// sorted") if the input increases anywhere.
std::vector<double> smooth(std::span<const double> sequence);

/// j-index evaluated on the prefix means of the cited counts.
double js_index(const CitationRecord& record);

IndexProfile index_profile(const CitationRecord& record);

/// Throws DataError("no citations") when T == 0.
HCorePartition h_core_partition(const CitationRecord& record);

}  // namespace jindex
