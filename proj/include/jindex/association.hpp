#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jindex/metrics.hpp"
#include "jindex/ranking.hpp"

namespace jindex {

enum class Significance { sig01, sig05, not_sig };

/// "**", "*" or "n".
std::string_view significance_marker(Significance s);

struct AssociationReport {
  std::string left;
  std::string right;
  double spearman = 0.0;
  double footrule = 0.0;
  double m_measure = 0.0;
  Significance significance = Significance::not_sig;
};

/// 1 - 6 sum d^2 / (n (n^2 - 1)).
double spearman_rho(const Ranking& a, const Ranking& b);

/// 1 - sum |d| / floor(n^2 / 2).
double footrule(const Ranking& a, const Ranking& b);

/// Top-weighted footrule on reciprocal ranks:
/// 1 - sum |1/a_i - 1/b_i| / sum_i |1/i - 1/(n-i+1)|.
double m_measure(const Ranking& a, const Ranking& b);

/// Two-tailed Student-t test of rho with n - 2 degrees of freedom.
/// |rho| == 1 is always sig01. Throws DataError for n < 3.
Significance significance_tag(double rho, std::size_t n);

/// Index values for a roster, keyed by index name ("T", "h", "g", "A", "R",
/// "j", "jS"). Every column has one value per roster entry.
struct CohortIndices {
  std::vector<std::string> roster;
  std::map<std::string, std::vector<double>, std::less<>> columns;

  /// Throws UsageError when the cohort carries no such index.
  const std::vector<double>& column(std::string_view name) const;
};

/// Names accepted by CohortIndices::from_profiles, in display order.
std::span<const std::string_view> index_names();

/// "A" is left out when any member has an empty h-core, since A is undefined
/// there; asking for it later reports the index as unavailable.
CohortIndices cohort_indices(std::span<const std::string> roster,
                             std::span<const IndexProfile> profiles);

/// One report per (left, right) pair with left != right, in left-major order.
/// Throws UsageError for an index name the cohort does not carry.
std::vector<AssociationReport> association_matrix(const CohortIndices& cohort,
                                                  std::span<const std::string> left,
                                                  std::span<const std::string> right,
                                                  TiePolicy policy = TiePolicy::fractional);

}  // namespace jindex
