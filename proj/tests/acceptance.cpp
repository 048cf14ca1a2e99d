// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure. Published cell values below are the correlation tables and the
// h-core split averages as printed for the three 20-researcher cohorts.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "jindex/experiments.hpp"
#include "jindex/metrics.hpp"
#include "oracles.hpp"

using namespace jindex;

namespace {

constexpr double kSpearmanTol = 0.01;
constexpr double kFootruleTol = 0.03;
constexpr double kMTol = 0.03;
constexpr double kAggregateTol = 0.001;
constexpr int kRandomRecords = 10000;

struct PublishedCell {
  const char* row;
  const char* col;
  double spearman;
  Significance sig;
  double footrule;
  double m;
};

using S = Significance;

const std::vector<PublishedCell> kTable1 = {
    {"T", "j", 0.847, S::sig01, 0.770, 0.674},  {"T", "jS", 0.884, S::sig01, 0.820, 0.705},
    {"h", "j", 0.953, S::sig01, 0.870, 0.605},  {"h", "jS", 0.919, S::sig01, 0.840, 0.619},
    {"g", "j", 0.765, S::sig01, 0.700, 0.533},  {"g", "jS", 0.806, S::sig01, 0.740, 0.561},
    {"j", "jS", 0.973, S::sig01, 0.930, 0.962}, {"jS", "j", 0.973, S::sig01, 0.930, 0.962},
};

const std::vector<PublishedCell> kTable2 = {
    {"T", "j", 0.874, S::sig01, 0.770, 0.899},  {"T", "jS", 0.943, S::sig01, 0.830, 0.888},
    {"h", "j", 0.910, S::sig01, 0.800, 0.852},  {"h", "jS", 0.850, S::sig01, 0.750, 0.821},
    {"g", "j", 0.886, S::sig01, 0.770, 0.889},  {"g", "jS", 0.941, S::sig01, 0.830, 0.877},
    {"j", "jS", 0.962, S::sig01, 0.900, 0.921}, {"jS", "j", 0.962, S::sig01, 0.900, 0.921},
};

const std::vector<PublishedCell> kTable3 = {
    {"T", "j", 0.441, S::not_sig, 0.470, 0.286}, {"T", "jS", 0.764, S::sig01, 0.670, 0.457},
    {"h", "j", 0.332, S::not_sig, 0.400, 0.184}, {"h", "jS", 0.371, S::not_sig, 0.460, 0.231},
    {"g", "j", 0.023, S::not_sig, 0.280, 0.164}, {"g", "jS", 0.468, S::sig05, 0.500, 0.338},
    {"j", "jS", 0.836, S::sig01, 0.750, 0.603},  {"jS", "j", 0.836, S::sig01, 0.750, 0.603},
};

const std::vector<PublishedCell> kTable4 = {
    {"T", "h", 0.585, S::sig01, 0.630, 0.658},   {"T", "g", 0.890, S::sig01, 0.790, 0.874},
    {"h", "T", 0.585, S::sig01, 0.630, 0.658},   {"h", "g", 0.499, S::sig05, 0.570, 0.665},
    {"g", "T", 0.890, S::sig01, 0.790, 0.874},   {"g", "h", 0.499, S::sig05, 0.570, 0.665},
    {"j", "T", 0.441, S::not_sig, 0.470, 0.286}, {"j", "h", 0.332, S::not_sig, 0.400, 0.184},
    {"j", "g", 0.023, S::not_sig, 0.280, 0.164}, {"jS", "T", 0.764, S::sig01, 0.670, 0.457},
    {"jS", "h", 0.371, S::not_sig, 0.460, 0.231}, {"jS", "g", 0.468, S::sig05, 0.500, 0.338},
};

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (notes.size() < 8) notes.push_back(what);
    }
  }
};

std::string fmt3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

void check_table(TableId id, const std::vector<PublishedCell>& published, Outcome& out) {
  const auto table = reproduce_table(id);
  const auto tag = "T" + std::to_string(static_cast<int>(id)) + " ";
  out.expect(table.cells.size() == published.size(),
             tag + "cell count " + std::to_string(table.cells.size()));
  for (const auto& p : published) {
    const AssociationReport* found = nullptr;
    for (const auto& c : table.cells) {
      if (c.left == p.row && c.right == p.col) found = &c;
    }
    const std::string where = tag + p.row + "/" + p.col + ": ";
    if (found == nullptr) {
      out.expect(false, where + "missing");
      continue;
    }
    out.expect(std::abs(found->spearman - p.spearman) <= kSpearmanTol,
               where + "spearman " + fmt3(found->spearman));
    out.expect(found->significance == p.sig,
               where + "marker " + std::string(significance_marker(found->significance)));
    out.expect(std::abs(found->footrule - p.footrule) <= kFootruleTol,
               where + "footrule " + fmt3(found->footrule));
    out.expect(std::abs(found->m_measure - p.m) <= kMTol, where + "M " + fmt3(found->m_measure));
  }
}

Outcome criterion_table1() {
  Outcome out;
  check_table(TableId::t1, kTable1, out);
  return out;
}

Outcome criterion_tables234() {
  Outcome out;
  check_table(TableId::t2, kTable2, out);
  check_table(TableId::t3, kTable3, out);
  check_table(TableId::t4, kTable4, out);
  return out;
}

Outcome criterion_table5() {
  Outcome out;
  const auto t5 = reproduce_table(TableId::t5);
  const std::vector<std::pair<double, double>> published = {{0.798, 0.202}, {0.922, 0.078}, {0.714, 0.286}};
  out.expect(t5.aggregates.size() == 3, "expected three disciplines");
  for (std::size_t i = 0; i < t5.aggregates.size() && i < published.size(); ++i) {
    const auto& a = t5.aggregates[i];
    out.expect(std::abs(a.mean_g1 - published[i].first) <= kAggregateTol,
               a.discipline + " G1 " + fmt3(a.mean_g1));
    out.expect(std::abs(a.mean_g4 - published[i].second) <= kAggregateTol,
               a.discipline + " G4 " + fmt3(a.mean_g4));
    out.expect(std::abs((1.0 - a.mean_g1) - published[i].second) <= kAggregateTol,
               a.discipline + " 1 - G1 " + fmt3(1.0 - a.mean_g1));
  }
  return out;
}

Outcome criterion_index_order() {
  Outcome out;
  oracle::CountsGenerator gen(1);
  for (int i = 0; i < kRandomRecords; ++i) {
    const auto counts = gen.next();
    const CitationRecord r("r", counts);
    const auto p = index_profile(r);
    const std::string id = "record " + std::to_string(i) + ": ";
    out.expect(p.h <= p.g, id + "h > g");
    if (p.h >= 1) {
      out.expect(static_cast<double>(p.h) <= p.r_index, id + "h > R");
      out.expect(p.r_index <= p.a_index->value(), id + "R > A");
    }
    out.expect(p.r_index <= p.j_index, id + "R > j");
    out.expect(p.j_index <= p.js_index, id + "j > jS");
    out.expect(p.h == oracle::h_index(counts), id + "h differs from brute force");
    out.expect(p.g == oracle::g_index(counts), id + "g differs from brute force");
  }
  return out;
}

Outcome criterion_manipulation() {
  Outcome out;
  oracle::CountsGenerator gen(2);
  for (int i = 0; i < kRandomRecords; ++i) {
    const CitationRecord r("r", gen.next());
    const std::string id = "record " + std::to_string(i) + ": ";
    const auto dropped = apply_manipulation(r, ManipulationMode::drop_singletons);
    const auto singles = static_cast<double>(std::ranges::count(r.counts(), Count{1}));
    out.expect(std::abs((j_index(r) - j_index(dropped)) - singles) <= 1e-9,
               id + "j changed by other than the singleton count");
    if (h_index(r) >= 2) out.expect(h_index(dropped) == h_index(r), id + "h moved after dropping");

    const auto lowered = apply_manipulation(r, ManipulationMode::decrement_all);
    const auto h_old = h_index(r);
    const auto h_new = h_index(lowered);
    out.expect(h_new <= h_old && h_new + 1 >= h_old, id + "h moved by more than one");
  }
  return out;
}

Outcome criterion_partition() {
  Outcome out;
  oracle::CountsGenerator gen(3);
  for (int i = 0; i < kRandomRecords; ++i) {
    const CitationRecord r("r", gen.next());
    const auto t = total_citations(r);
    if (t == 0) continue;
    const auto p = h_core_partition(r);
    const std::string id = "record " + std::to_string(i) + ": ";
    out.expect(p.h1 + p.h4 == t, id + "H1 + H4 != T");
    out.expect(p.h2 + p.h3 + p.h4 == t, id + "H2 + H3 + H4 != T");
    out.expect(std::abs(p.g1 + p.g4 - 1.0) <= 1e-12, id + "G1 + G4 != 1");
  }
  return out;
}

Outcome criterion_alpha_beta() {
  Outcome out;
  const CitationRecord alpha("alpha", {100});
  const CitationRecord beta("beta", std::vector<Count>(10, 10));
  const auto a = index_profile(alpha);
  const auto b = index_profile(beta);
  out.expect(a.h == 1 && b.h == 10, "h should be 1 vs 10");
  out.expect(a.total_citations == 100 && b.total_citations == 100, "T should be 100 for both");
  out.expect(a.g == 10 && b.g == 10, "g should be 10 for both");
  out.expect(a.j_index == 10.0, "alpha j " + fmt3(a.j_index));
  out.expect(std::abs(b.j_index - 31.62) <= 0.005, "beta j " + fmt3(b.j_index));
  return out;
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
  double max_seconds;  // 0 = no runtime bound
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"1 Table 1 (Immunology) correlations", criterion_table1, 1.0},
      {"2 Tables 2-4 (Economics, Physics) correlations", criterion_tables234, 0.0},
      {"3 Table 5 G1/G4 discipline means", criterion_table5, 0.0},
      {"4 index order invariants and brute-force h/g", criterion_index_order, 10.0},
      {"5 manipulation properties", criterion_manipulation, 0.0},
      {"6 h-core partition identities", criterion_partition, 0.0},
      {"7 alpha/beta worked example", criterion_alpha_beta, 0.0},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.max_seconds > 0.0 && secs >= c.max_seconds) {
      out.expect(false, "runtime " + fmt3(secs) + " s over limit");
    }
    std::printf("[%s] criterion %s (%.3f s)\n", out.pass ? "PASS" : "FAIL", c.name, secs);
    for (const auto& n : out.notes) std::printf("       %s\n", n.c_str());
    if (!out.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
