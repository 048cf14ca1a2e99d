#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "jindex/association.hpp"
#include "jindex/citation_record.hpp"

namespace jindex {

/// A published per-researcher row: name, #pub, #cited, T, h, g, j, jS, G1.
struct PrecomputedRow {
  std::string name;
  std::size_t publications = 0;
  std::size_t cited = 0;
  Total total_citations = 0;
  std::size_t h = 0;
  std::size_t g = 0;
  double j = 0.0;
  double js = 0.0;
  double g1 = 0.0;
};

enum class Provenance { raw, precomputed };

enum class Discipline { immunology, economics, physics };

std::string_view discipline_name(Discipline d);

/// Throws UsageError for anything but immunology/economics/physics.
Discipline parse_discipline(std::string_view text);

struct CohortDataset {
  std::string discipline;
  Provenance provenance = Provenance::precomputed;
  std::vector<PrecomputedRow> precomputed;  // provenance == precomputed
  std::vector<CitationRecord> raw;          // provenance == raw

  std::size_t size() const noexcept {
    return provenance == Provenance::raw ? raw.size() : precomputed.size();
  }
  std::vector<std::string> roster() const;

  /// Columns T, h, g, j, jS for precomputed data; all seven indices for raw.
  CohortIndices indices() const;
};

/// Reads `name,pub,cited,T,h,g,j,jS,G1` rows and checks #cited <= #pub,
/// h <= g, j <= jS, 0 <= G1 <= 1 and unique names. Throws DataError.
CohortDataset parse_precomputed_csv(std::istream& in, std::string discipline);

/// One of the three 20-researcher appendix cohorts compiled into the binary.
CohortDataset load_bundled_dataset(Discipline d);

/// Raw CSV text of a bundled cohort, identical to data/<discipline>.csv.
std::string_view bundled_dataset_text(Discipline d);

}  // namespace jindex
