#include "jindex/experiments.hpp"

#include <algorithm>
#include <numeric>

#include "jindex/error.hpp"

namespace jindex {

namespace {

// Citation totals entering an h-core aggregate. Real-valued because the
// published rows only give H1 through the rounded G1 proportion.
struct PartitionSample {
  double total = 0.0;
  double h1 = 0.0;
  double h2 = 0.0;
};

DisciplineAggregate aggregate(std::string discipline, std::span<const PartitionSample> samples,
                              Averaging averaging) {
  if (samples.empty()) throw DataError("cannot aggregate an empty cohort");
  DisciplineAggregate agg;
  agg.discipline = std::move(discipline);
  double g1 = 0.0;
  double g2 = 0.0;
  for (const auto& s : samples) {
    if (!(s.total > 0.0)) throw DataError("no citations");
    agg.mean_total += s.total;
    agg.mean_h1 += s.h1;
    agg.mean_h2 += s.h2;
    g1 += s.h1 / s.total;
    g2 += s.h2 / s.total;
  }
  const auto n = static_cast<double>(samples.size());
  agg.mean_total /= n;
  agg.mean_h1 /= n;
  agg.mean_h2 /= n;
  agg.mean_h3 = agg.mean_h1 - agg.mean_h2;
  agg.mean_h4 = agg.mean_total - agg.mean_h1;

  if (averaging == Averaging::pooled) {
    agg.mean_g1 = agg.mean_h1 / agg.mean_total;
    agg.mean_g2 = agg.mean_h2 / agg.mean_total;
  } else {
    agg.mean_g1 = g1 / n;
    agg.mean_g2 = g2 / n;
  }
  agg.mean_g3 = agg.mean_g1 - agg.mean_g2;
  agg.mean_g4 = 1.0 - agg.mean_g1;
  return agg;
}

// Position of each roster entry when sorted by value, best first; equal
// values keep roster order.
std::vector<std::size_t> ordinal_positions(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::ranges::stable_sort(order, [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
  std::vector<std::size_t> position(values.size());
  for (std::size_t p = 0; p < order.size(); ++p) position[order[p]] = p + 1;
  return position;
}

const CohortDataset& bundled(Discipline d) {
  static const CohortDataset immunology = load_bundled_dataset(Discipline::immunology);
  static const CohortDataset economics = load_bundled_dataset(Discipline::economics);
  static const CohortDataset physics = load_bundled_dataset(Discipline::physics);
  switch (d) {
    case Discipline::immunology:
      return immunology;
    case Discipline::economics:
      return economics;
    case Discipline::physics:
      return physics;
  }
  return physics;
}

}  // namespace

CitationRecord apply_manipulation(const CitationRecord& record, ManipulationMode mode) {
  std::vector<Count> counts;
  counts.reserve(record.cited_count());
  std::size_t uncited = record.uncited_count();
  for (const Count c : record.counts()) {
    if (mode == ManipulationMode::drop_singletons) {
      if (c != 1) counts.push_back(c);
    } else if (c > 1) {
      counts.push_back(c - 1);
    } else {
      ++uncited;
    }
  }
  return CitationRecord(record.researcher_id(), std::move(counts), uncited);
}

double index_value(const CitationRecord& record, std::string_view index_name) {
  if (index_name == "T") return static_cast<double>(total_citations(record));
  if (index_name == "h") return static_cast<double>(h_index(record));
  if (index_name == "g") return static_cast<double>(g_index(record));
  if (index_name == "A") return a_index(record).value();
  if (index_name == "R") return r_index(record);
  if (index_name == "j") return j_index(record);
  if (index_name == "jS") return js_index(record);
  throw UsageError("unknown index '" + std::string(index_name) + "'");
}

RankChangeReport rank_change_report(std::span<const CitationRecord> before,
                                    std::span<const CitationRecord> after,
                                    std::string_view index_name) {
  if (before.size() != after.size()) throw DataError("cohorts have different rosters");
  for (std::size_t i = 0; i < before.size(); ++i) {
    if (before[i].researcher_id() != after[i].researcher_id()) {
      throw DataError("cohorts have different rosters");
    }
  }

  std::vector<double> old_values;
  std::vector<double> new_values;
  for (std::size_t i = 0; i < before.size(); ++i) {
    old_values.push_back(index_value(before[i], index_name));
    new_values.push_back(index_value(after[i], index_name));
  }
  const auto old_pos = ordinal_positions(old_values);
  const auto new_pos = ordinal_positions(new_values);

  // holder[p] = roster entry that held position p before.
  std::vector<std::size_t> holder(before.size() + 1);
  for (std::size_t i = 0; i < before.size(); ++i) holder[old_pos[i]] = i;

  RankChangeReport report;
  report.index_name = std::string(index_name);
  std::vector<bool> done(before.size(), false);
  for (std::size_t p = 1; p <= before.size(); ++p) {
    const std::size_t i = holder[p];
    if (done[i]) continue;
    if (old_pos[i] == new_pos[i]) {
      ++report.unchanged_count;
      done[i] = true;
      continue;
    }
    const std::size_t k = holder[new_pos[i]];
    if (new_pos[k] == old_pos[i]) {
      report.swaps.push_back({before[i].researcher_id(), before[k].researcher_id(), old_pos[i],
                              old_pos[k]});
      done[i] = done[k] = true;
      continue;
    }
    // Longer cycle: list every member individually.
    for (std::size_t m = i; !done[m]; m = holder[new_pos[m]]) {
      report.moves.push_back({before[m].researcher_id(), old_pos[m], new_pos[m]});
      done[m] = true;
    }
  }
  std::ranges::sort(report.moves, {}, &RankMove::old_position);
  return report;
}

DisciplineAggregate discipline_aggregate(std::string discipline,
                                         std::span<const CitationRecord> cohort,
                                         Averaging averaging) {
  std::vector<HCorePartition> parts;
  parts.reserve(cohort.size());
  for (const auto& r : cohort) parts.push_back(h_core_partition(r));
  return discipline_aggregate(std::move(discipline), parts, averaging);
}

DisciplineAggregate discipline_aggregate(std::string discipline,
                                         std::span<const HCorePartition> partitions,
                                         Averaging averaging) {
  std::vector<PartitionSample> samples;
  samples.reserve(partitions.size());
  for (const auto& p : partitions) {
    samples.push_back({static_cast<double>(p.total()), static_cast<double>(p.h1),
                       static_cast<double>(p.h2)});
  }
  return aggregate(std::move(discipline), samples, averaging);
}

DisciplineAggregate discipline_aggregate(const CohortDataset& dataset, Averaging averaging) {
  if (dataset.provenance == Provenance::raw) {
    return discipline_aggregate(dataset.discipline, dataset.raw, averaging);
  }
  std::vector<PartitionSample> samples;
  samples.reserve(dataset.precomputed.size());
  for (const auto& row : dataset.precomputed) {
    const auto t = static_cast<double>(row.total_citations);
    const auto h = static_cast<double>(row.h);
    samples.push_back({t, row.g1 * t, h * h});
  }
  return aggregate(dataset.discipline, samples, averaging);
}

TableId parse_table_id(std::string_view text) {
  if (text.size() == 2 && (text[0] == 'T' || text[0] == 't')) text.remove_prefix(1);
  if (text.size() == 1 && text[0] >= '1' && text[0] <= '5') {
    return static_cast<TableId>(text[0] - '0');
  }
  throw UsageError("unknown table '" + std::string(text) + "' (expected 1..5)");
}

TableReproduction reproduce_table(TableId id, const CohortDataset& dataset) {
  TableReproduction out;
  out.id = id;
  out.row_indices = {"T", "h", "g", "j", "jS"};
  switch (id) {
    case TableId::t1:
    case TableId::t2:
    case TableId::t3:
      out.column_indices = {"j", "jS"};
      out.title = dataset.discipline + ": T, h, g, j, jS against j and jS";
      break;
    case TableId::t4:
      out.column_indices = {"T", "h", "g"};
      out.title = dataset.discipline + ": T, h, g, j, jS against T, h and g";
      break;
    case TableId::t5:
      throw UsageError("table 5 aggregates all bundled disciplines; use reproduce_table(TableId)");
  }
  out.cells = association_matrix(dataset.indices(), out.row_indices, out.column_indices,
                                 TiePolicy::partner);
  return out;
}

TableReproduction reproduce_table(TableId id) {
  switch (id) {
    case TableId::t1:
      return reproduce_table(id, bundled(Discipline::immunology));
    case TableId::t2:
      return reproduce_table(id, bundled(Discipline::economics));
    case TableId::t3:
    case TableId::t4:
      return reproduce_table(id, bundled(Discipline::physics));
    case TableId::t5:
      break;
  }
  TableReproduction out;
  out.id = TableId::t5;
  out.title = "mean h-core citation split per discipline";
  for (const auto d : {Discipline::immunology, Discipline::economics, Discipline::physics}) {
    out.aggregates.push_back(discipline_aggregate(bundled(d), Averaging::pooled));
  }
  return out;
}

}  // namespace jindex
