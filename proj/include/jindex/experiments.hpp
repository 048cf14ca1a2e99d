#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jindex/association.hpp"
#include "jindex/citation_record.hpp"
#include "jindex/dataset.hpp"
#include "jindex/metrics.hpp"

namespace jindex {

// ---------------------------------------------------------------------------
// Manipulation robustness
// ---------------------------------------------------------------------------

enum class ManipulationMode {
  drop_singletons,  // remove every publication with exactly one citation
  decrement_all,    // every count c becomes max(c - 1, 0)
};

/// Publications that fall to zero under decrement_all stay in
/// total_publications but leave the cited set; dropped singletons leave both.
CitationRecord apply_manipulation(const CitationRecord& record, ManipulationMode mode);

/// Two researchers that exchanged positions i and j (1-based, before).
struct RankSwap {
  std::string first;   // held `first_position` before
  std::string second;  // held `second_position` before
  std::size_t first_position = 0;
  std::size_t second_position = 0;
};

/// A researcher caught in a longer cycle of position changes.
struct RankMove {
  std::string researcher;
  std::size_t old_position = 0;
  std::size_t new_position = 0;
};

struct RankChangeReport {
  std::string index_name;
  std::vector<RankSwap> swaps;
  std::vector<RankMove> moves;
  std::size_t unchanged_count = 0;
};

/// Ordinal positions (ties broken by roster order) under `index_name`, before
/// vs after. Throws DataError if the two cohorts have different rosters.
RankChangeReport rank_change_report(std::span<const CitationRecord> before,
                                    std::span<const CitationRecord> after,
                                    std::string_view index_name);

/// Index value of one record by name ("T", "h", "g", "A", "R", "j", "jS").
double index_value(const CitationRecord& record, std::string_view index_name);

// ---------------------------------------------------------------------------
// h-core aggregates
// ---------------------------------------------------------------------------

enum class Averaging {
  /// mean(H_i) / mean(T): every citation weighs the same.
  pooled,
  /// mean over researchers of H_i / T.
  per_researcher,
};

struct DisciplineAggregate {
  std::string discipline;
  double mean_total = 0.0;
  double mean_h1 = 0.0;
  double mean_h2 = 0.0;
  double mean_h3 = 0.0;
  double mean_h4 = 0.0;
  double mean_g1 = 0.0;
  double mean_g2 = 0.0;
  double mean_g3 = 0.0;
  double mean_g4 = 0.0;
};

/// Throws DataError for an empty cohort or any member with T == 0.
DisciplineAggregate discipline_aggregate(std::string discipline,
                                         std::span<const CitationRecord> cohort,
                                         Averaging averaging = Averaging::pooled);

DisciplineAggregate discipline_aggregate(std::string discipline,
                                         std::span<const HCorePartition> partitions,
                                         Averaging averaging = Averaging::pooled);

/// Uses the published G1 and h columns: H1 = G1 * T, H2 = h^2.
DisciplineAggregate discipline_aggregate(const CohortDataset& dataset,
                                         Averaging averaging = Averaging::pooled);

// ---------------------------------------------------------------------------
// Table reproduction
// ---------------------------------------------------------------------------

enum class TableId { t1 = 1, t2, t3, t4, t5 };

/// Accepts "1".."5" or "T1".."T5". Throws UsageError otherwise.
TableId parse_table_id(std::string_view text);

struct TableReproduction {
  TableId id = TableId::t1;
  std::string title;
  std::vector<std::string> row_indices;     // association tables only
  std::vector<std::string> column_indices;  // association tables only
  std::vector<AssociationReport> cells;
  std::vector<DisciplineAggregate> aggregates;  // T5 only
};

/// Association cells for T1..T4 under partner tie-breaking, and the pooled
/// h-core aggregates of all three disciplines for T5.
TableReproduction reproduce_table(TableId id);

/// Same as above against a caller-supplied cohort (T1..T4 only).
TableReproduction reproduce_table(TableId id, const CohortDataset& dataset);

}  // namespace jindex
