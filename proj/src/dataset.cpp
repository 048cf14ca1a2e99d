#include "jindex/dataset.hpp"

#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include "bundled_data.hpp"
#include "jindex/csv.hpp"
#include "jindex/error.hpp"
#include "jindex/metrics.hpp"

namespace jindex {

namespace {

constexpr std::string_view kPrecomputedHeader = "name,pub,cited,T,h,g,j,jS,G1";

template <typename Num>
Num parse_number(const std::string& text, std::size_t line, std::string_view column) {
  Num value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw DataError("line " + std::to_string(line) + ": invalid " + std::string(column) + " '" +
                    text + "'");
  }
  return value;
}

void check_row(const PrecomputedRow& row, std::size_t line) {
  auto fail = [&](std::string_view what) {
    throw DataError("line " + std::to_string(line) + ": " + std::string(what) + " for '" +
                    row.name + "'");
  };
  if (row.cited > row.publications) fail("#cited exceeds #pub");
  if (row.h > row.g) fail("h exceeds g");
  if (row.j > row.js) fail("j exceeds jS");
  if (!(row.g1 >= 0.0 && row.g1 <= 1.0)) fail("G1 outside [0, 1]");
}

}  // namespace

std::string_view discipline_name(Discipline d) {
  switch (d) {
    case Discipline::immunology:
      return "immunology";
    case Discipline::economics:
      return "economics";
    case Discipline::physics:
      return "physics";
  }
  return "";
}

Discipline parse_discipline(std::string_view text) {
  for (const auto d : {Discipline::immunology, Discipline::economics, Discipline::physics}) {
    if (text == discipline_name(d)) return d;
  }
  throw UsageError("unknown discipline '" + std::string(text) + "'");
}

std::vector<std::string> CohortDataset::roster() const {
  std::vector<std::string> names;
  if (provenance == Provenance::raw) {
    for (const auto& r : raw) names.push_back(r.researcher_id());
  } else {
    for (const auto& r : precomputed) names.push_back(r.name);
  }
  return names;
}

CohortIndices CohortDataset::indices() const {
  const auto names = roster();
  if (provenance == Provenance::raw) {
    std::vector<IndexProfile> profiles;
    profiles.reserve(raw.size());
    for (const auto& r : raw) profiles.push_back(index_profile(r));
    return cohort_indices(names, profiles);
  }
  CohortIndices out;
  out.roster = names;
  for (const auto& r : precomputed) {
    out.columns["T"].push_back(static_cast<double>(r.total_citations));
    out.columns["h"].push_back(static_cast<double>(r.h));
    out.columns["g"].push_back(static_cast<double>(r.g));
    out.columns["j"].push_back(r.j);
    out.columns["jS"].push_back(r.js);
  }
  return out;
}

CohortDataset parse_precomputed_csv(std::istream& in, std::string discipline) {
  CohortDataset ds;
  ds.discipline = std::move(discipline);
  ds.provenance = Provenance::precomputed;

  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  std::set<std::string> names;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != kPrecomputedHeader) {
        throw DataError("line " + std::to_string(line_no) + ": expected header '" +
                        std::string(kPrecomputedHeader) + "'");
      }
      header_seen = true;
      continue;
    }
    const auto f = split_csv_line(line);
    if (f.size() != 9) throw DataError("line " + std::to_string(line_no) + ": expected 9 fields");
    PrecomputedRow row;
    row.name = f[0];
    row.publications = parse_number<std::size_t>(f[1], line_no, "pub");
    row.cited = parse_number<std::size_t>(f[2], line_no, "cited");
    row.total_citations = parse_number<Total>(f[3], line_no, "T");
    row.h = parse_number<std::size_t>(f[4], line_no, "h");
    row.g = parse_number<std::size_t>(f[5], line_no, "g");
    row.j = parse_number<double>(f[6], line_no, "j");
    row.js = parse_number<double>(f[7], line_no, "jS");
    row.g1 = parse_number<double>(f[8], line_no, "G1");
    check_row(row, line_no);
    if (!names.insert(row.name).second) {
      throw DataError("line " + std::to_string(line_no) + ": duplicate researcher '" + row.name +
                      "'");
    }
    ds.precomputed.push_back(std::move(row));
  }
  if (ds.precomputed.empty()) throw DataError("no records");
  return ds;
}

std::string_view bundled_dataset_text(Discipline d) {
  switch (d) {
    case Discipline::immunology:
      return bundled::kImmunology;
    case Discipline::economics:
      return bundled::kEconomics;
    case Discipline::physics:
      return bundled::kPhysics;
  }
  return {};
}

CohortDataset load_bundled_dataset(Discipline d) {
  std::istringstream in{std::string(bundled_dataset_text(d))};
  return parse_precomputed_csv(in, std::string(discipline_name(d)));
}

}  // namespace jindex
