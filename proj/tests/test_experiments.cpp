#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "jindex/error.hpp"
#include "jindex/experiments.hpp"
#include "oracles.hpp"

using namespace jindex;

namespace {

std::vector<Count> counts_of(const CitationRecord& r) { return {r.counts().begin(), r.counts().end()}; }

std::size_t singletons(const CitationRecord& r) {
  return static_cast<std::size_t>(std::ranges::count(r.counts(), Count{1}));
}

}  // namespace

TEST_CASE("drop singletons") {
  const CitationRecord r("a", {10, 8, 5, 1, 1}, 3);
  const auto d = apply_manipulation(r, ManipulationMode::drop_singletons);
  CHECK(counts_of(d) == std::vector<Count>{10, 8, 5});
  CHECK(d.total_publications() == 6);
  CHECK(d.researcher_id() == "a");
  CHECK(j_index(r) - j_index(d) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(j_index(d) == doctest::Approx(8.22677276241435913).epsilon(1e-14));
}

TEST_CASE("decrement all") {
  const CitationRecord r("a", {10, 8, 5, 1, 1});
  const auto d = apply_manipulation(r, ManipulationMode::decrement_all);
  CHECK(counts_of(d) == std::vector<Count>{9, 7, 4});
  CHECK(d.total_publications() == 5);
  CHECK(d.cited_count() == 3);
}

TEST_CASE("manipulation properties over random records") {
  oracle::CountsGenerator gen(424242);
  for (int trial = 0; trial < 3000; ++trial) {
    const CitationRecord r("r", gen.next());
    const auto dropped = apply_manipulation(r, ManipulationMode::drop_singletons);
    const auto lowered = apply_manipulation(r, ManipulationMode::decrement_all);

    CHECK(std::ranges::is_sorted(dropped.counts(), std::greater<>()));
    CHECK(std::ranges::is_sorted(lowered.counts(), std::greater<>()));

    const auto s = static_cast<double>(singletons(r));
    CHECK(std::abs((j_index(r) - j_index(dropped)) - s) <= 1e-9);
    CHECK(dropped.total_publications() == r.total_publications() - singletons(r));
    if (h_index(r) >= 2) CHECK(h_index(dropped) == h_index(r));

    const auto h_old = h_index(r);
    const auto h_new = h_index(lowered);
    CHECK(h_new <= h_old);
    CHECK(h_new + 1 >= h_old);
    CHECK(total_citations(lowered) == total_citations(r) - r.cited_count());
    CHECK(lowered.total_publications() == r.total_publications());
  }
}

TEST_CASE("rank change report") {
  // j = 101 (one singleton) and j = 90 + sqrt(116) ~ 100.77 (none).
  const std::vector<CitationRecord> before = {
      CitationRecord("first", {8100, 100, 1}),
      CitationRecord("second", {8100, 116}),
      CitationRecord("third", {4}),
  };
  std::vector<CitationRecord> after;
  for (const auto& r : before) after.push_back(apply_manipulation(r, ManipulationMode::drop_singletons));

  const auto rep = rank_change_report(before, after, "j");
  CHECK(rep.index_name == "j");
  REQUIRE(rep.swaps.size() == 1);
  CHECK(rep.swaps[0].first == "first");
  CHECK(rep.swaps[0].second == "second");
  CHECK(rep.swaps[0].first_position == 1);
  CHECK(rep.swaps[0].second_position == 2);
  CHECK(rep.moves.empty());
  CHECK(rep.unchanged_count == 1);

  const auto same = rank_change_report(before, before, "j");
  CHECK(same.swaps.empty());
  CHECK(same.moves.empty());
  CHECK(same.unchanged_count == 3);

  // Nothing to drop: no change at all.
  const std::vector<CitationRecord> plain = {CitationRecord("a", {9, 4}), CitationRecord("b", {3})};
  std::vector<CitationRecord> plain_after;
  for (const auto& r : plain) plain_after.push_back(apply_manipulation(r, ManipulationMode::drop_singletons));
  const auto none = rank_change_report(plain, plain_after, "j");
  CHECK(none.swaps.empty());
  CHECK(none.unchanged_count == 2);

  const std::vector<CitationRecord> other = {CitationRecord("x", {1}), CitationRecord("b", {3})};
  CHECK_THROWS_AS(rank_change_report(plain, other, "j"), DataError);
  CHECK_THROWS_AS(rank_change_report(plain, plain, "jj"), UsageError);
}

TEST_CASE("rank change report: rotations become moves") {
  const std::vector<CitationRecord> before = {
      CitationRecord("a", {30}), CitationRecord("b", {20}), CitationRecord("c", {10})};
  const std::vector<CitationRecord> after = {
      CitationRecord("a", {10}), CitationRecord("b", {30}), CitationRecord("c", {20})};
  const auto rep = rank_change_report(before, after, "T");
  CHECK(rep.swaps.empty());
  REQUIRE(rep.moves.size() == 3);
  CHECK(rep.moves[0].researcher == "a");
  CHECK(rep.moves[0].old_position == 1);
  CHECK(rep.moves[0].new_position == 3);
  CHECK(rep.unchanged_count == 0);
}

TEST_CASE("discipline aggregate") {
  const std::vector<CitationRecord> one = {CitationRecord("a", {10, 8, 5, 4, 3})};
  const auto agg = discipline_aggregate("x", one);
  const auto part = h_core_partition(one[0]);
  CHECK(agg.mean_h1 == 27.0);
  CHECK(agg.mean_h2 == 16.0);
  CHECK(agg.mean_h3 == 11.0);
  CHECK(agg.mean_h4 == 3.0);
  CHECK(agg.mean_g1 == doctest::Approx(part.g1));
  CHECK(agg.mean_g2 == doctest::Approx(part.g2));
  CHECK(agg.mean_g3 == doctest::Approx(part.g3));
  CHECK(agg.mean_g4 == doctest::Approx(part.g4));

  const std::vector<CitationRecord> two = {CitationRecord("a", {10, 8, 5, 4, 3}),
                                           CitationRecord("b", std::vector<Count>(10, 10))};
  const auto pooled = discipline_aggregate("x", two, Averaging::pooled);
  const auto per = discipline_aggregate("x", two, Averaging::per_researcher);
  CHECK(pooled.mean_g1 == doctest::Approx(127.0 / 130.0));
  CHECK(per.mean_g1 == doctest::Approx((0.9 + 1.0) / 2.0));
  for (const auto& a : {pooled, per}) {
    CHECK(std::abs(a.mean_g1 + a.mean_g4 - 1.0) <= 1e-9);
    CHECK(std::abs(a.mean_g2 + a.mean_g3 + a.mean_g4 - 1.0) <= 1e-9);
  }

  CHECK_THROWS_AS(discipline_aggregate("x", std::vector<CitationRecord>{}), DataError);
  const std::vector<CitationRecord> silent = {CitationRecord("a", {5}), CitationRecord("b", {}, 3)};
  CHECK_THROWS_AS(discipline_aggregate("x", silent), DataError);
}

TEST_CASE("discipline aggregate from the published G1 columns") {
  const auto imm = discipline_aggregate(load_bundled_dataset(Discipline::immunology));
  const auto eco = discipline_aggregate(load_bundled_dataset(Discipline::economics));
  const auto phy = discipline_aggregate(load_bundled_dataset(Discipline::physics));
  CHECK(std::abs(imm.mean_g1 - 0.798) <= 0.001);
  CHECK(std::abs(eco.mean_g1 - 0.922) <= 0.001);
  CHECK(std::abs(phy.mean_g4 - 0.286) <= 0.001);
  // Mean H1 and H4 land close to the published per-discipline means.
  CHECK(std::abs(imm.mean_h1 - 15860.05) < 5.0);
  CHECK(std::abs(phy.mean_h4 - 5983.80) < 5.0);

  // The unweighted mean of per-researcher G1 is a different quantity.
  const auto imm_per =
      discipline_aggregate(load_bundled_dataset(Discipline::immunology), Averaging::per_researcher);
  CHECK(imm_per.mean_g1 == doctest::Approx(0.81385).epsilon(1e-9));
}

TEST_CASE("table ids") {
  CHECK(parse_table_id("1") == TableId::t1);
  CHECK(parse_table_id("T4") == TableId::t4);
  CHECK(parse_table_id("5") == TableId::t5);
  CHECK_THROWS_AS(parse_table_id("6"), UsageError);
  CHECK_THROWS_AS(parse_table_id("x"), UsageError);
}

TEST_CASE("reproduce tables") {
  auto cell = [](const TableReproduction& t, std::string_view l, std::string_view r) {
    for (const auto& c : t.cells) {
      if (c.left == l && c.right == r) return c;
    }
    FAIL("missing cell " << l << "/" << r);
    return AssociationReport{};
  };
  const auto t2 = reproduce_table(TableId::t2);
  CHECK(t2.cells.size() == 8);
  CHECK(std::abs(cell(t2, "h", "j").spearman - 0.910) <= 0.01);

  const auto t4 = reproduce_table(TableId::t4);
  CHECK(t4.cells.size() == 12);
  CHECK(std::abs(cell(t4, "g", "T").spearman - 0.890) <= 0.01);

  const auto t5 = reproduce_table(TableId::t5);
  REQUIRE(t5.aggregates.size() == 3);
  CHECK(t5.aggregates[2].discipline == "physics");
  CHECK(std::abs(t5.aggregates[2].mean_g4 - 0.286) <= 0.001);
}
