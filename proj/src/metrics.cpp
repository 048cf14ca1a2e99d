#include "jindex/metrics.hpp"

#include <cmath>
#include <numeric>

#include "jindex/error.hpp"

namespace jindex {

namespace {

Total core_sum(std::span<const Count> counts, std::size_t h) {
  return std::accumulate(counts.begin(), counts.begin() + static_cast<std::ptrdiff_t>(h), Total{0});
}

std::size_t isqrt(Total value) {
  auto root = static_cast<Total>(std::sqrt(static_cast<long double>(value)));
  while (root * root > value) --root;
  while ((root + 1) * (root + 1) <= value) ++root;
  return static_cast<std::size_t>(root);
}

}  // namespace

Rational Rational::reduced(Total num, Total den) {
  if (den == 0) throw DataError("rational with zero denominator");
  const Total d = std::gcd(num, den);
  return d == 0 ? Rational{0, 1} : Rational{num / d, den / d};
}

Total total_citations(const CitationRecord& record) {
  const auto counts = record.counts();
  return std::accumulate(counts.begin(), counts.end(), Total{0});
}

std::size_t h_index(const CitationRecord& record) {
  // counts are non-increasing, so the predicate counts[i] >= i+1 is a prefix.
  const auto counts = record.counts();
  std::size_t lo = 0;
  std::size_t hi = counts.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (counts[mid] >= mid + 1) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo;
}

std::size_t g_index(const CitationRecord& record) {
  const auto counts = record.counts();
  Total cumulative = 0;
  std::size_t g = 0;
  for (std::size_t rank = 1; rank <= counts.size(); ++rank) {
    cumulative += counts[rank - 1];
    if (cumulative >= Total{rank} * rank) g = rank;
  }
  // Past the last cited paper the cumulative sum is frozen at T.
  const std::size_t padded = isqrt(cumulative);
  return padded > counts.size() ? padded : g;
}

Rational a_index(const CitationRecord& record) {
  const std::size_t h = h_index(record);
  if (h == 0) throw DataError("empty h-core");
  return Rational::reduced(core_sum(record.counts(), h), h);
}

double r_index(const CitationRecord& record) {
  return std::sqrt(static_cast<double>(core_sum(record.counts(), h_index(record))));
}

double j_index(const CitationRecord& record) {
  double sum = 0.0;
  for (const Count c : record.counts()) sum += std::sqrt(static_cast<double>(c));
  return sum;
}

std::vector<double> smooth(std::span<const double> sequence) {
  std::vector<double> out;
  out.reserve(sequence.size());
  double running = 0.0;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    if (i > 0 && sequence[i] > sequence[i - 1]) throw DataError("sequence not sorted");
    running += sequence[i];
    out.push_back(running / static_cast<double>(i + 1));
  }
  return out;
}

double js_index(const CitationRecord& record) {
  // Integer prefix sums keep every prefix mean exact up to the final division.
  double sum = 0.0;
  Total running = 0;
  std::size_t rank = 0;
  for (const Count c : record.counts()) {
    running += c;
    ++rank;
    sum += std::sqrt(static_cast<double>(running) / static_cast<double>(rank));
  }
  return sum;
}

IndexProfile index_profile(const CitationRecord& record) {
  IndexProfile p;
  p.total_citations = total_citations(record);
  p.h = h_index(record);
  p.g = g_index(record);
  if (p.h > 0) p.a_index = a_index(record);
  p.r_index = r_index(record);
  p.j_index = j_index(record);
  p.js_index = js_index(record);
  return p;
}

HCorePartition h_core_partition(const CitationRecord& record) {
  const Total total = total_citations(record);
  if (total == 0) throw DataError("no citations");
  const std::size_t h = h_index(record);

  HCorePartition part;
  part.h1 = core_sum(record.counts(), h);
  part.h2 = Total{h} * h;
  part.h3 = part.h1 - part.h2;
  part.h4 = total - part.h1;
  const auto t = static_cast<double>(total);
  part.g1 = static_cast<double>(part.h1) / t;
  part.g2 = static_cast<double>(part.h2) / t;
  part.g3 = static_cast<double>(part.h3) / t;
  part.g4 = static_cast<double>(part.h4) / t;
  return part;
}

}  // namespace jindex
