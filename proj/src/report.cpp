#include "jindex/report.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "json.hpp"

#include "jindex/csv.hpp"
#include "jindex/error.hpp"

namespace jindex {

namespace {

template <typename... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <typename... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string fixed(double v, int decimals) { return fmt::format("{:.{}f}", v, decimals); }

// Terminal columns taken by a UTF-8 string, counting one per code point.
std::size_t display_width(std::string_view s) {
  return static_cast<std::size_t>(
      std::ranges::count_if(s, [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

std::string pad(std::string_view s, std::size_t width) {
  std::string out(s);
  out.append(width - std::min(width, display_width(s)), ' ');
  return out;
}

bool is_marked_column(const Report& r, std::size_t col) {
  return std::ranges::find(r.marked_columns, col) != r.marked_columns.end();
}

std::string emit_plain(const Report& r) {
  std::vector<std::vector<std::string>> grid;
  grid.push_back(r.columns);
  for (const auto& row : r.rows) {
    std::vector<std::string> line;
    for (const auto& cell : row) line.push_back(render_cell(cell));
    grid.push_back(std::move(line));
  }
  std::vector<std::size_t> widths(r.columns.size(), 0);
  for (const auto& line : grid) {
    for (std::size_t c = 0; c < line.size() && c < widths.size(); ++c) {
      widths[c] = std::max(widths[c], display_width(line[c]));
    }
  }
  std::string out;
  if (!r.title.empty()) out += r.title + "\n";
  for (const auto& line : grid) {
    std::string text;
    for (std::size_t c = 0; c < line.size(); ++c) {
      text += c + 1 == line.size() ? line[c] : pad(line[c], widths[c]) + "  ";
    }
    out += text + "\n";
  }
  return out;
}

std::string csv_cell(const Cell& cell) {
  return std::visit(Overloaded{
                        [](std::monostate) { return std::string(); },
                        [](const std::string& s) { return csv_escape(s); },
                        [](std::int64_t v) { return std::to_string(v); },
                        [](const Fixed& f) { return fixed(f.value, f.decimals); },
                        [](const MarkedCorrelation& m) { return fixed(m.value, 3); },
                    },
                    cell);
}

std::string emit_csv(const Report& r) {
  std::vector<bool> marked(r.columns.size());
  std::string out;
  for (std::size_t c = 0; c < r.columns.size(); ++c) {
    marked[c] = is_marked_column(r, c);
    if (c > 0) out += ',';
    out += csv_escape(r.columns[c]);
    if (marked[c]) out += ',' + csv_escape(r.columns[c] + "_sig");
  }
  out += '\n';
  for (const auto& row : r.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ',';
      out += csv_cell(row[c]);
      if (marked[c]) {
        if (const auto* m = std::get_if<MarkedCorrelation>(&row[c])) {
          out += ',' + std::string(significance_marker(m->significance));
        } else {
          out += ',';
        }
      }
    }
    out += '\n';
  }
  return out;
}

// Numbers go through their fixed-decimal text so the JSON carries exactly
// what the other formats print.
nlohmann::ordered_json json_number(double v, int decimals) {
  return nlohmann::ordered_json::parse(fixed(v, decimals));
}

std::string emit_json_lines(const Report& r) {
  std::string out;
  for (const auto& row : r.rows) {
    nlohmann::ordered_json obj;
    if (!r.title.empty()) obj["report"] = r.title;
    for (std::size_t c = 0; c < row.size() && c < r.columns.size(); ++c) {
      const std::string& key = r.columns[c];
      std::visit(Overloaded{
                     [&](std::monostate) { obj[key] = nullptr; },
                     [&](const std::string& s) { obj[key] = s; },
                     [&](std::int64_t v) { obj[key] = v; },
                     [&](const Fixed& f) { obj[key] = json_number(f.value, f.decimals); },
                     [&](const MarkedCorrelation& m) {
                       obj[key] = json_number(m.value, 3);
                       obj[key + "_sig"] = std::string(significance_marker(m.significance));
                     },
                 },
                 row[c]);
    }
    out += obj.dump() + "\n";
  }
  return out;
}

std::int64_t as_int(std::uint64_t v) { return static_cast<std::int64_t>(v); }

}  // namespace


Format parse_format(std::string_view text) {
  if (text == "plain") return Format::plain;
  if (text == "csv") return Format::csv;
  if (text == "json-lines") return Format::json_lines;
  throw UsageError("unknown format '" + std::string(text) + "' (expected plain, csv or json-lines)");
}

std::string render_cell(const Cell& cell) {
  return std::visit(Overloaded{
                        [](std::monostate) { return std::string("-"); },
                        [](const std::string& s) { return s; },
                        [](std::int64_t v) { return std::to_string(v); },
                        [](const Fixed& f) { return fixed(f.value, f.decimals); },
                        [](const MarkedCorrelation& m) {
                          return fmt::format("{:.3f}({})", m.value,
                                             significance_marker(m.significance));
                        },
                    },
                    cell);
}

std::string emit_report(const Report& report, Format format) {
  switch (format) {
    case Format::plain:
      return emit_plain(report);
    case Format::csv:
      return emit_csv(report);
    case Format::json_lines:
      return emit_json_lines(report);
  }
  throw UsageError("unknown format");
}

std::string emit_reports(std::span<const Report> reports, Format format) {
  std::string out;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i > 0 && format != Format::json_lines) out += '\n';
    out += emit_report(reports[i], format);
  }
  return out;
}

Report profiles_report(std::span<const std::string> roster, std::span<const IndexProfile> profiles) {
  Report r{"", {"researcher", "T", "h", "g", "A", "R", "j", "jS"}, {}, {}};
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    const auto& p = profiles[i];
    Cell a = std::monostate{};
    if (p.a_index) a = Fixed{p.a_index->value(), 3};
    r.rows.push_back({roster[i], as_int(p.total_citations), as_int(p.h), as_int(p.g), a,
                      Fixed{p.r_index, 3}, Fixed{p.j_index, 1}, Fixed{p.js_index, 1}});
  }
  return r;
}

Report association_report(std::span<const AssociationReport> reports, std::string title) {
  Report r{std::move(title), {"left", "right", "spearman", "footrule", "M"}, {}, {2}};
  for (const auto& a : reports) {
    r.rows.push_back({a.left, a.right, MarkedCorrelation{a.spearman, a.significance},
                      Fixed{a.footrule, 3}, Fixed{a.m_measure, 3}});
  }
  return r;
}

Report partitions_report(std::span<const std::string> roster,
                         std::span<const HCorePartition> partitions) {
  Report r{"", {"researcher", "H1", "H2", "H3", "H4", "G1", "G2", "G3", "G4"}, {}, {}};
  for (std::size_t i = 0; i < partitions.size(); ++i) {
    const auto& p = partitions[i];
    r.rows.push_back({roster[i], as_int(p.h1), as_int(p.h2), as_int(p.h3), as_int(p.h4),
                      Fixed{p.g1, 3}, Fixed{p.g2, 3}, Fixed{p.g3, 3}, Fixed{p.g4, 3}});
  }
  return r;
}

Report aggregates_report(std::span<const DisciplineAggregate> aggregates, std::string title) {
  Report r{std::move(title), {"discipline", "H1", "H2", "H3", "H4", "G1", "G2", "G3", "G4"}, {}, {}};
  for (const auto& a : aggregates) {
    r.rows.push_back({a.discipline, Fixed{a.mean_h1, 2}, Fixed{a.mean_h2, 2}, Fixed{a.mean_h3, 2},
                      Fixed{a.mean_h4, 2}, Fixed{a.mean_g1, 3}, Fixed{a.mean_g2, 3},
                      Fixed{a.mean_g3, 3}, Fixed{a.mean_g4, 3}});
  }
  return r;
}

Report ranking_report(std::span<const std::string> roster, std::span<const double> before,
                      std::span<const double> after, std::string_view index_name) {
  const std::string name(index_name);
  Report r{"", {"researcher", name + "_before", "rank_before", name + "_after", "rank_after"}, {}, {}};
  const auto rb = rank_descending(before, name);
  const auto ra = rank_descending(after, name);
  const int decimals = name == "j" || name == "jS" ? 1 : 3;
  auto value_cell = [&](double v) -> Cell {
    if (name == "T" || name == "h" || name == "g") return static_cast<std::int64_t>(v);
    return Fixed{v, decimals};
  };
  for (std::size_t i = 0; i < roster.size(); ++i) {
    r.rows.push_back({roster[i], value_cell(before[i]), Fixed{rb.ranks[i], 1},
                      value_cell(after[i]), Fixed{ra.ranks[i], 1}});
  }
  return r;
}

Report rank_change_table(const RankChangeReport& report) {
  Report r{"rank changes under " + report.index_name + " (" +
               std::to_string(report.unchanged_count) + " unchanged)",
           {"kind", "researcher", "other", "old_position", "new_position"},
           {},
           {}};
  for (const auto& s : report.swaps) {
    r.rows.push_back({std::string("swap"), s.first, s.second, as_int(s.first_position),
                      as_int(s.second_position)});
  }
  for (const auto& m : report.moves) {
    r.rows.push_back({std::string("move"), m.researcher, std::monostate{}, as_int(m.old_position),
                      as_int(m.new_position)});
  }
  return r;
}

Report reproduction_report(const TableReproduction& table) {
  if (table.id == TableId::t5) return aggregates_report(table.aggregates, table.title);
  return association_report(table.cells, table.title);
}

std::string render_wide(const TableReproduction& table) {
  if (table.id == TableId::t5) return emit_report(reproduction_report(table), Format::plain);

  auto find = [&](const std::string& row, const std::string& col) -> const AssociationReport* {
    for (const auto& c : table.cells) {
      if (c.left == row && c.right == col) return &c;
    }
    return nullptr;
  };
  Report r{table.title, {""}, {}, {}};
  for (const auto& col : table.column_indices) {
    for (const auto* measure : {"Spearman", "Footrule", "M"}) {
      r.columns.push_back(col + ":" + measure);
    }
  }
  for (const auto& row : table.row_indices) {
    std::vector<Cell> line{row};
    for (const auto& col : table.column_indices) {
      if (const auto* c = find(row, col)) {
        line.emplace_back(MarkedCorrelation{c->spearman, c->significance});
        line.emplace_back(Fixed{c->footrule, 3});
        line.emplace_back(Fixed{c->m_measure, 3});
      } else {
        line.insert(line.end(), 3, std::monostate{});
      }
    }
    r.rows.push_back(std::move(line));
  }
  return emit_report(r, Format::plain);
}

}  // namespace jindex
