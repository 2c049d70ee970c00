#include <gtest/gtest.h>

#include "toruschar/census.hpp"
#include "toruschar/kclass.hpp"

using namespace toruschar;
using ST = StratumTag;
using QV = QuotientVariant;

namespace {

std::vector<KnotParams> grid(long max) {
  std::vector<KnotParams> out;
  for (long m = 2; m <= max; ++m)
    for (long n = m + 1; n <= max; ++n)
      if (std::gcd(m, n) == 1) out.push_back(KnotParams::make(m, n));
  return out;
}

}  // namespace

TEST(Census, SL3AtSevenFour) {
  const auto ds = census_sl(3, KnotParams::make(7, 4));
  EXPECT_EQ(count_kind(ds, {ST::TotallyReducible, QV::Plain}), 1u);
  EXPECT_EQ(count_kind(ds, {ST::PartialType1, QV::Plain}), 3u);
  EXPECT_EQ(count_kind(ds, {ST::PartialType2, QV::Plain}), 3u);
  EXPECT_EQ(count_kind(ds, {ST::IrreducibleDim4, QV::Plain}), 15u);
  EXPECT_EQ(count_kind(ds, {ST::IrreducibleDim2, QV::Plain}), 63u);
  EXPECT_EQ(ds.size(), 85u);
}

TEST(Census, Trefoil) {
  const auto p = KnotParams::make(2, 3);
  const auto sl3 = census_sl(3, p);
  EXPECT_EQ(count_kind(sl3, {ST::IrreducibleDim4, QV::Plain}), 0u);
  EXPECT_EQ(count_kind(sl3, {ST::IrreducibleDim2, QV::Plain}), 1u);
  EXPECT_EQ(count_kind(sl3, {ST::PartialType2, QV::Plain}), 1u);
  const auto pgl3 = census_pgl(3, p);
  EXPECT_EQ(count_kind(pgl3, {ST::IrreducibleDim2, QV::Mu3FixedSurface}), 1u);
  EXPECT_EQ(count_kind(pgl3, {ST::IrreducibleDim2, QV::Plain}), 0u);
  EXPECT_EQ(count_kind(census_sl(2, p), {ST::IrreducibleDim1, QV::Plain}), 1u);
}

TEST(Census, DescriptorsAreConsistent) {
  for (const auto& p : grid(9))
    for (Group g : {Group::SL, Group::PGL, Group::GL})
      for (int r : {2, 3})
        for (const auto& d : census(g, r, p)) {
          EXPECT_EQ(d.group, g);
          EXPECT_EQ(d.rank, r);
          EXPECT_EQ(d.kclass.degree(), d.dimension);
          EXPECT_EQ(kcoeff(d.kclass, d.dimension), 1);
          EXPECT_FALSE(d.chart.empty());
          EXPECT_EQ(d.eigen_label.has_value(), d.kind.tag != ST::TotallyReducible);
          if (d.eigen_label && d.kind.tag != ST::PartialType1 && d.kind.tag != ST::PartialType2)
            EXPECT_TRUE(is_valid_label(*d.eigen_label, Orientation::of(p)));
        }
}

TEST(Census, MaxDimCount) {
  EXPECT_EQ(max_dim_component_count(3, KnotParams::make(3, 4)), 1);
  EXPECT_EQ(max_dim_component_count(2, KnotParams::make(2, 3)), 1);
  EXPECT_EQ(max_dim_component_count(3, KnotParams::make(2, 3)), 0);
  EXPECT_EQ(max_dim_component_count(3, KnotParams::make(7, 4)), 15);
}

TEST(Census, RankChecks) {
  EXPECT_THROW(census_sl(4, KnotParams::make(2, 3)), UnsupportedRank);
  EXPECT_THROW(stratum_counts(Group::SL, 1, KnotParams::make(2, 3)), UnsupportedRank);
}

TEST(Census, SymmetricUnderSwap) {
  for (const auto& p : grid(9)) {
    const auto q = KnotParams::make(p.n(), p.m());
    for (Group g : {Group::SL, Group::PGL, Group::GL})
      for (int r : {2, 3}) EXPECT_EQ(stratum_sum(census(g, r, p)), stratum_sum(census(g, r, q)));
  }
}

TEST(Census, Mu3FixedCountsWhenThreeDivides) {
  // (m,n) = (4,9): s = 4, t = 9.
  const auto ds = census_pgl(3, KnotParams::make(4, 9));
  EXPECT_EQ(count_kind(ds, {ST::IrreducibleDim2, QV::Mu3FixedSurface}), 3u);
  EXPECT_EQ(count_kind(ds, {ST::IrreducibleDim4, QV::Mu3FixedMaxDim}), 1u);
  EXPECT_EQ(count_kind(ds, {ST::IrreducibleDim4, QV::Plain}), 9u);
}

TEST(Census, BoundaryIncidenceIsK33) {
  const auto g = boundary_incidence_type1();
  EXPECT_EQ(g.points.size(), 6u);
  EXPECT_EQ(g.lines.size(), 9u);
  EXPECT_EQ(g.incidences.size(), 18u);
  EXPECT_TRUE(is_complete_bipartite_3_3(g));
  auto broken = g;
  broken.incidences.pop_back();
  EXPECT_FALSE(is_complete_bipartite_3_3(broken));
}
