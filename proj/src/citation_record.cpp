#include "jindex/citation_record.hpp"

#include <algorithm>
#include <functional>

namespace jindex {

CitationRecord::CitationRecord(std::string researcher_id, std::vector<Count> counts,
                               std::size_t uncited)
    : id_(std::move(researcher_id)), counts_(std::move(counts)), uncited_(uncited) {
  const auto zeros = std::ranges::remove(counts_, Count{0});
  uncited_ += static_cast<std::size_t>(zeros.size());
  counts_.erase(zeros.begin(), zeros.end());
  std::ranges::sort(counts_, std::greater<>{});
}

}  // namespace jindex
