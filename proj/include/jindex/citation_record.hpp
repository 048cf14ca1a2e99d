#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace jindex {

using Count = std::uint32_t;
using Total = std::uint64_t;

/// One researcher's citation counts.
///
/// Only strictly positive counts are stored, in non-increasing order.
/// Publications with zero citations are implied by total_publications().
/// Construction sorts, so the order of the input counts never matters.
class CitationRecord {
 public:
  CitationRecord() = default;

  /// `counts` may contain zeros and may be in any order; zeros are folded into
  /// the uncited total. `uncited` adds further zero-cited publications.
  explicit CitationRecord(std::string researcher_id, std::vector<Count> counts = {},
                          std::size_t uncited = 0);

  const std::string& researcher_id() const noexcept { return id_; }

  /// Strictly positive counts, non-increasing.
  std::span<const Count> counts() const noexcept { return counts_; }

  /// Number of publications with at least one citation.
  std::size_t cited_count() const noexcept { return counts_.size(); }
  std::size_t total_publications() const noexcept { return counts_.size() + uncited_; }
  std::size_t uncited_count() const noexcept { return uncited_; }

  bool operator==(const CitationRecord&) const = default;

 private:
  std::string id_;
  std::vector<Count> counts_;
  std::size_t uncited_ = 0;
};

}  // namespace jindex
