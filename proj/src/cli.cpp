#include "jindex/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "jindex/csv.hpp"
#include "jindex/dataset.hpp"
#include "jindex/error.hpp"
#include "jindex/experiments.hpp"
#include "jindex/report.hpp"

namespace jindex {

namespace {

struct Options {
  std::string file;
  bool wide = false;
  std::string dataset;
  std::string format = "plain";
  std::vector<std::string> left = {"T", "h", "g"};
  std::vector<std::string> right = {"j", "jS"};
  std::string ties = "fractional";
  std::string averaging = "pooled";
  std::string mode;
  std::string index = "j";
  std::string table;
};

std::vector<CitationRecord> read_records(const Options& o) {
  std::ifstream in(o.file, std::ios::binary);
  if (!in) throw DataError("cannot open '" + o.file + "'");
  try {
    return o.wide ? parse_wide_csv(in) : parse_citations_csv(in);
  } catch (const DataError& e) {
    throw DataError(o.file + ": " + e.what());
  }
}

std::vector<std::string> roster_of(std::span<const CitationRecord> records) {
  std::vector<std::string> names;
  for (const auto& r : records) names.push_back(r.researcher_id());
  return names;
}

void check_index_names(std::span<const std::string> names) {
  const auto known = index_names();
  for (const auto& n : names) {
    if (std::ranges::find(known, n) == known.end()) {
      throw UsageError("unknown index '" + n + "' (expected one of T, h, g, A, R, j, jS)");
    }
  }
}

void cmd_indices(const Options& o, std::ostream& out) {
  const auto format = parse_format(o.format);
  const auto records = read_records(o);
  std::vector<IndexProfile> profiles;
  for (const auto& r : records) profiles.push_back(index_profile(r));
  out << emit_report(profiles_report(roster_of(records), profiles), format);
}

void cmd_compare(const Options& o, std::ostream& out) {
  const auto format = parse_format(o.format);
  check_index_names(o.left);
  check_index_names(o.right);
  TiePolicy policy = TiePolicy::fractional;
  if (o.ties == "partner") {
    policy = TiePolicy::partner;
  } else if (o.ties != "fractional") {
    throw UsageError("unknown tie policy '" + o.ties + "' (expected fractional or partner)");
  }

  CohortDataset cohort;
  if (!o.dataset.empty()) {
    cohort = load_bundled_dataset(parse_discipline(o.dataset));
  } else {
    cohort.discipline = o.file;
    cohort.provenance = Provenance::raw;
    cohort.raw = read_records(o);
  }
  const auto reports = association_matrix(cohort.indices(), o.left, o.right, policy);
  out << emit_report(association_report(reports), format);
}

void cmd_hcore(const Options& o, std::ostream& out) {
  const auto format = parse_format(o.format);
  Averaging averaging = Averaging::pooled;
  if (o.averaging == "per-researcher") {
    averaging = Averaging::per_researcher;
  } else if (o.averaging != "pooled") {
    throw UsageError("unknown averaging '" + o.averaging + "' (expected pooled or per-researcher)");
  }
  const auto records = read_records(o);
  std::vector<HCorePartition> parts;
  for (const auto& r : records) {
    try {
      parts.push_back(h_core_partition(r));
    } catch (const DataError& e) {
      throw DataError("researcher '" + r.researcher_id() + "': " + e.what());
    }
  }
  const std::vector<Report> reports = {
      partitions_report(roster_of(records), parts),
      aggregates_report(std::vector{discipline_aggregate(
          std::filesystem::path(o.file).stem().string(), parts, averaging)}),
  };
  out << emit_reports(reports, format);
}

void cmd_manipulate(const Options& o, std::ostream& out) {
  const auto format = parse_format(o.format);
  check_index_names(std::vector{o.index});
  ManipulationMode mode{};
  if (o.mode == "drop-singletons") {
    mode = ManipulationMode::drop_singletons;
  } else if (o.mode == "decrement") {
    mode = ManipulationMode::decrement_all;
  } else {
    throw UsageError("unknown mode '" + o.mode + "' (expected drop-singletons or decrement)");
  }
  const auto before = read_records(o);
  std::vector<CitationRecord> after;
  for (const auto& r : before) after.push_back(apply_manipulation(r, mode));

  std::vector<double> old_values;
  std::vector<double> new_values;
  for (std::size_t i = 0; i < before.size(); ++i) {
    old_values.push_back(index_value(before[i], o.index));
    new_values.push_back(index_value(after[i], o.index));
  }
  const std::vector<Report> reports = {
      ranking_report(roster_of(before), old_values, new_values, o.index),
      rank_change_table(rank_change_report(before, after, o.index)),
  };
  out << emit_reports(reports, format);
}

void cmd_reproduce(const Options& o, std::ostream& out) {
  const auto format = parse_format(o.format);
  const auto table = reproduce_table(parse_table_id(o.table));
  if (format == Format::plain) {
    out << render_wide(table);
  } else {
    out << emit_report(reproduction_report(table), format);
  }
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bibliometric indicators (T, h, g, A, R, j, jS) and ranking comparisons", "jindex"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "plain, csv or json-lines")->capture_default_str();
  };
  auto add_input = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("file", o.file, "citations CSV (researcher,citations[,uncited_publications])");
    if (required) opt->required();
    sub->add_flag("--wide", o.wide, "input rows are researcher,c1,c2,...");
  };
  auto split_list = [](std::vector<std::string>& target) {
    return [&target](const std::vector<std::string>& values) {
      target.clear();
      for (const auto& v : values) {
        std::stringstream ss(v);
        for (std::string item; std::getline(ss, item, ',');) {
          if (!item.empty()) target.push_back(item);
        }
      }
    };
  };

  auto* indices = app.add_subcommand("indices", "index profile per researcher");
  add_input(indices, true);
  add_common(indices);

  auto* compare = app.add_subcommand("compare", "association measures between index rankings");
  add_input(compare, false);
  compare->add_option("--dataset", o.dataset, "bundled cohort: immunology, economics or physics");
  compare->add_option_function<std::vector<std::string>>("--left", split_list(o.left),
                                                         "row indices, comma separated (default T,h,g)");
  compare->add_option_function<std::vector<std::string>>("--right", split_list(o.right),
                                                         "column indices, comma separated (default j,jS)");
  compare->add_option("--ties", o.ties, "fractional or partner")->capture_default_str();
  add_common(compare);

  auto* hcore = app.add_subcommand("hcore", "h-core citation split and cohort aggregate");
  add_input(hcore, true);
  hcore->add_option("--averaging", o.averaging, "pooled or per-researcher")->capture_default_str();
  add_common(hcore);

  auto* manipulate = app.add_subcommand("manipulate", "rankings before and after a citation transform");
  add_input(manipulate, true);
  manipulate->add_option("--mode", o.mode, "drop-singletons or decrement")->required();
  manipulate->add_option("--index", o.index, "index to rank by")->capture_default_str();
  add_common(manipulate);

  auto* reproduce = app.add_subcommand("reproduce", "recompute a table from the bundled cohorts");
  reproduce->add_option("--table", o.table, "1..5")->required();
  add_common(reproduce);

  // Usage text of the subcommand being run, or of the whole tool.
  auto usage = [&app]() {
    const auto subs = app.get_subcommands();
    return subs.empty() ? app.help() : subs.back()->help();
  };
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    if (compare->parsed() && o.file.empty() == o.dataset.empty()) {
      throw UsageError("compare needs exactly one of a file or --dataset");
    }
    if (indices->parsed()) cmd_indices(o, out);
    if (compare->parsed()) cmd_compare(o, out);
    if (hcore->parsed()) cmd_hcore(o, out);
    if (manipulate->parsed()) cmd_manipulate(o, out);
    if (reproduce->parsed()) cmd_reproduce(o, out);
    return kExitOk;
  } catch (const CLI::CallForHelp&) {
    out << usage();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << usage();
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << usage();
    return kExitUsage;
  } catch (const DataError& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
}

}  // namespace jindex
