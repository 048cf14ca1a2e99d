#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "jindex/association.hpp"
#include "jindex/experiments.hpp"
#include "jindex/metrics.hpp"

namespace jindex {

/// Real number printed with a fixed number of decimals.
struct Fixed {
  double value = 0.0;
  int decimals = 3;
};

/// Spearman value with its significance marker, e.g. "0.973(**)".
struct MarkedCorrelation {
  double value = 0.0;
  Significance significance = Significance::not_sig;
};

/// Empty cells (an undefined A-index, a diagonal) print as "-" in plain text,
/// nothing in CSV and null in JSON.
using Cell = std::variant<std::monostate, std::string, std::int64_t, Fixed, MarkedCorrelation>;

struct Report {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  /// Columns holding MarkedCorrelation cells; CSV and JSON give each of them
  /// a companion `<name>_sig` field, also when there are no rows.
  std::vector<std::size_t> marked_columns;
};

enum class Format { plain, csv, json_lines };

/// "plain", "csv" or "json-lines". Throws UsageError otherwise.
Format parse_format(std::string_view text);

/// Deterministic text for one report.
std::string emit_report(const Report& report, Format format);

/// Several reports; plain and CSV separate them with a blank line.
std::string emit_reports(std::span<const Report> reports, Format format);

std::string render_cell(const Cell& cell);

Report profiles_report(std::span<const std::string> roster, std::span<const IndexProfile> profiles);
Report association_report(std::span<const AssociationReport> reports, std::string title = {});
Report partitions_report(std::span<const std::string> roster,
                         std::span<const HCorePartition> partitions);
Report aggregates_report(std::span<const DisciplineAggregate> aggregates, std::string title = {});
Report ranking_report(std::span<const std::string> roster, std::span<const double> before,
                      std::span<const double> after, std::string_view index_name);
Report rank_change_table(const RankChangeReport& report);

/// Long-format grid of a reproduced table (one row per cell) for machine use.
Report reproduction_report(const TableReproduction& table);

/// The table laid out as published: one row per index, a Spearman / Footrule
/// / M block per column index, "-" on the diagonal.
std::string render_wide(const TableReproduction& table);

}  // namespace jindex
