#include "jindex/association.hpp"

#include <array>
#include <cmath>

#include <boost/math/distributions/students_t.hpp>

#include "jindex/error.hpp"

namespace jindex {

namespace {

std::size_t paired_size(const Ranking& a, const Ranking& b) {
  if (a.size() != b.size()) throw DataError("rankings cover different rosters");
  if (a.size() < 2) throw DataError("association needs at least two researchers");
  return a.size();
}

constexpr std::array<std::string_view, 7> kIndexNames = {"T", "h", "g", "A", "R", "j", "jS"};

}  // namespace

std::string_view significance_marker(Significance s) {
  switch (s) {
    case Significance::sig01:
      return "**";
    case Significance::sig05:
      return "*";
    case Significance::not_sig:
      return "n";
  }
  return "n";
}

double spearman_rho(const Ranking& a, const Ranking& b) {
  const std::size_t n = paired_size(a, b);
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = a.ranks[i] - b.ranks[i];
    sum_sq += d * d;
  }
  const auto nd = static_cast<double>(n);
  return 1.0 - 6.0 * sum_sq / (nd * (nd * nd - 1.0));
}

double footrule(const Ranking& a, const Ranking& b) {
  const std::size_t n = paired_size(a, b);
  double displacement = 0.0;
  for (std::size_t i = 0; i < n; ++i) displacement += std::abs(a.ranks[i] - b.ranks[i]);
  const auto max_f = static_cast<double>(n * n / 2);
  return 1.0 - displacement / max_f;
}

double m_measure(const Ranking& a, const Ranking& b) {
  const std::size_t n = paired_size(a, b);
  double max_m = 0.0;
  double distance = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (a.ranks[i] <= 0.0 || b.ranks[i] <= 0.0) throw DataError("ranks must be positive");
    distance += std::abs(1.0 / a.ranks[i] - 1.0 / b.ranks[i]);
    const auto pos = static_cast<double>(i + 1);
    max_m += std::abs(1.0 / pos - 1.0 / (static_cast<double>(n) - pos + 1.0));
  }
  return 1.0 - distance / max_m;
}

Significance significance_tag(double rho, std::size_t n) {
  if (n < 3) throw DataError("significance test needs n >= 3");
  if (std::isnan(rho) || std::abs(rho) > 1.0) throw DataError("correlation outside [-1, 1]");
  if (std::abs(rho) == 1.0) return Significance::sig01;

  const auto dof = static_cast<double>(n - 2);
  const double t = rho * std::sqrt(dof / ((1.0 - rho) * (1.0 + rho)));
  const boost::math::students_t_distribution<double> dist(dof);
  const double p = 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t)));
  if (p < 0.01) return Significance::sig01;
  if (p < 0.05) return Significance::sig05;
  return Significance::not_sig;
}

const std::vector<double>& CohortIndices::column(std::string_view name) const {
  const auto it = columns.find(name);
  if (it == columns.end()) {
    throw UsageError("index '" + std::string(name) + "' is not available for this cohort");
  }
  return it->second;
}

std::span<const std::string_view> index_names() { return kIndexNames; }

CohortIndices cohort_indices(std::span<const std::string> roster,
                             std::span<const IndexProfile> profiles) {
  if (roster.size() != profiles.size()) throw DataError("roster and profiles differ in length");
  CohortIndices out;
  out.roster.assign(roster.begin(), roster.end());
  auto& t = out.columns["T"];
  auto& h = out.columns["h"];
  auto& g = out.columns["g"];
  auto& r = out.columns["R"];
  auto& j = out.columns["j"];
  auto& js = out.columns["jS"];
  std::vector<double> a;
  bool a_defined = true;
  for (const IndexProfile& p : profiles) {
    t.push_back(static_cast<double>(p.total_citations));
    h.push_back(static_cast<double>(p.h));
    g.push_back(static_cast<double>(p.g));
    r.push_back(p.r_index);
    j.push_back(p.j_index);
    js.push_back(p.js_index);
    if (p.a_index) {
      a.push_back(p.a_index->value());
    } else {
      a_defined = false;
    }
  }
  if (a_defined) out.columns["A"] = std::move(a);
  return out;
}

std::vector<AssociationReport> association_matrix(const CohortIndices& cohort,
                                                  std::span<const std::string> left,
                                                  std::span<const std::string> right,
                                                  TiePolicy policy) {
  // Resolve every name first so a typo fails before any work is done.
  for (const auto& name : left) cohort.column(name);
  for (const auto& name : right) cohort.column(name);

  std::vector<AssociationReport> reports;
  for (const auto& l : left) {
    for (const auto& r : right) {
      if (l == r) continue;
      const auto [a, b] = rank_pair(cohort.column(l), l, cohort.column(r), r, policy);
      AssociationReport rep;
      rep.left = l;
      rep.right = r;
      rep.spearman = spearman_rho(a, b);
      rep.footrule = footrule(a, b);
      rep.m_measure = m_measure(a, b);
      rep.significance = significance_tag(rep.spearman, a.size());
      reports.push_back(std::move(rep));
    }
  }
  return reports;
}

}  // namespace jindex
