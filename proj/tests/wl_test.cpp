#include <omp.h>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "test_util.hpp"
#include "wlcc/analysis.hpp"
#include "wlcc/schreier.hpp"
#include "wlcc/wl.hpp"

namespace wlcc {
namespace {

Configuration Heptagon() { return schreier_config(heptagon_pair()); }

TEST(WlStepTest, CoherentInputIsFixed) {
  const Configuration c = cayley_config(cycle_cayley(3));
  const StepResult r = wl_step(c);
  EXPECT_FALSE(r.refined);
  EXPECT_TRUE(partition_equal(c, r.config));
}

TEST(WlStepTest, HeptagonFirstStepSplitsEmptyClass) {
  const Configuration c = Heptagon();
  const StepResult r = wl_step(c);
  EXPECT_TRUE(r.refined);
  std::set<Color> empty_children;
  for (Vertex v = 0; v < 14; ++v)
    for (Vertex w = 0; w < 14; ++w)
      if (c.info(c.at(v, w)).origin == kEmptyOrigin) empty_children.insert(r.config.at(v, w));
  EXPECT_GT(empty_children.size(), 1u);
  for (Color child : empty_children) {
    EXPECT_TRUE(r.config.info(child).empty_lineage);
    EXPECT_EQ(r.config.info(child).origin, kEmptyOrigin);
  }
  EXPECT_TRUE(oracle::same_partition(oracle::to_matrix(r.config),
                                     oracle::naive_step(oracle::to_matrix(c))));
}

TEST(WlStepTest, RefinementRefinesOldPartition) {
  const Configuration c = Heptagon();
  const Configuration next = wl_step(c).config;
  std::map<Color, Color> parent;
  for (Vertex v = 0; v < 14; ++v)
    for (Vertex w = 0; w < 14; ++w) {
      auto [it, fresh] = parent.emplace(next.at(v, w), c.at(v, w));
      EXPECT_EQ(it->second, c.at(v, w));
    }
  EXPECT_FALSE(find_violation(next).has_value());
}

TEST(WlStepTest, CycleFarPairsShareColorAfterOneStep) {
  const Configuration c = cayley_config(cycle_cayley(8));
  const Configuration next = wl_step(c).config;
  std::set<Color> far;
  for (Vertex g = 0; g < 8; ++g)
    for (Vertex h = 0; h < 8; ++h) {
      const int d = std::min((h + 8 - g) % 8, (g + 8 - h) % 8);
      if (d > 2) far.insert(next.at(g, h));
    }
  EXPECT_EQ(far.size(), 1u);
}

TEST(WlStepTest, SerialReferenceMatchesExactly) {
  for (const Configuration& c : {Heptagon(), cayley_config(cycle_cayley(12)),
                                 schreier_config(sl_tuples(2, 5, 1).action)}) {
    Configuration a = c, b = c;
    for (int i = 0; i < 4; ++i) {
      a = wl_step(a).config;
      b = wl_step_serial(b).config;
      EXPECT_EQ(a.colors(), b.colors());
      ASSERT_EQ(a.color_count(), b.color_count());
      for (Color k = 0; k < a.color_count(); ++k) {
        EXPECT_EQ(a.info(k).inverse, b.info(k).inverse);
        EXPECT_EQ(a.info(k).is_vertex, b.info(k).is_vertex);
        EXPECT_EQ(a.info(k).origin, b.info(k).origin);
      }
    }
  }
}

TEST(WlStepTest, ThreadCountDoesNotChangeIds) {
  const Configuration c = schreier_config(sl_tuples(2, 7, 1).action);
  omp_set_num_threads(1);
  const WLTrace one = wl_run(c);
  omp_set_num_threads(4);
  const WLTrace four = wl_run(c);
  omp_set_num_threads(omp_get_num_procs());
  ASSERT_EQ(one.snapshots.size(), four.snapshots.size());
  for (std::size_t h = 0; h < one.snapshots.size(); ++h)
    EXPECT_EQ(one.snapshots[h].colors(), four.snapshots[h].colors());
}

TEST(WlRunTest, IterationCounts) {
  EXPECT_EQ(wl_run(schreier_config(sym_adjacent(8))).wl_count, 1);
  EXPECT_EQ(wl_run(Heptagon()).wl_count, 3);
  EXPECT_EQ(wl_run(cayley_config(cycle_cayley(3))).wl_count, 0);
  EXPECT_EQ(wl_run(cayley_config(cycle_cayley(8))).wl_count, 2);
}

TEST(WlRunTest, TraceShape) {
  const WLTrace t = wl_run(Heptagon());
  ASSERT_EQ(t.snapshots.size(), 5u);
  EXPECT_EQ(t.wl_count, static_cast<int>(t.snapshots.size()) - 2);
  ASSERT_EQ(t.class_counts.size(), t.snapshots.size());
  for (std::size_t i = 1; i + 1 < t.class_counts.size(); ++i)
    EXPECT_LT(t.class_counts[i - 1], t.class_counts[i]);
  EXPECT_EQ(t.class_counts.back(), t.class_counts[t.class_counts.size() - 2]);
  for (std::size_t i = 0; i < t.snapshots.size(); ++i)
    EXPECT_EQ(t.snapshots[i].iteration(), static_cast<int>(i));

  const WLTrace coherent = wl_run(cayley_config(cycle_cayley(3)));
  EXPECT_EQ(coherent.snapshots.size(), 2u);
  EXPECT_EQ(coherent.wl_count, 0);
}

TEST(WlRunTest, IterationCap) {
  WLOptions options;
  options.max_iter = 1;
  EXPECT_WLCC_ERROR(wl_run(Heptagon(), options), ErrorKind::IterationCapExceeded);
  options.max_iter = 3;
  EXPECT_EQ(wl_run(Heptagon(), options).wl_count, 3);
}

TEST(WlRunTest, WithoutSnapshots) {
  WLOptions options;
  options.keep_snapshots = false;
  const WLTrace t = wl_run(Heptagon(), options);
  EXPECT_EQ(t.wl_count, 3);
  EXPECT_FALSE(t.complete);
  EXPECT_EQ(t.snapshots.size(), 2u);
  EXPECT_EQ(t.final().colors(), wl_run(Heptagon()).final().colors());
}

TEST(ColorAtTest, HeptagonDiagonal) {
  const WLTrace t = wl_run(Heptagon());
  // Points 5 and 12 in 1-indexed naming.
  EXPECT_EQ(color_at(t, 2, 4, 4), color_at(t, 2, 11, 11));
  EXPECT_NE(color_at(t, 3, 4, 4), color_at(t, 3, 11, 11));
  const Configuration c = Heptagon();
  for (Vertex v = 0; v < 14; ++v)
    for (Vertex w = 0; w < 14; ++w) EXPECT_EQ(color_at(t, 0, v, w), c.at(v, w));
  EXPECT_WLCC_ERROR(color_at(t, 9, 0, 0), ErrorKind::OutOfRange);
  EXPECT_WLCC_ERROR(color_at(t, 0, 14, 0), ErrorKind::OutOfRange);
}

TEST(PartitionEqualTest, Basics) {
  const Configuration c = Heptagon();
  EXPECT_TRUE(partition_equal(c, c));
  // Same partition with ids reversed.
  std::vector<Color> colors = c.colors();
  const Color top = static_cast<Color>(c.color_count() - 1);
  for (Color& x : colors) x = top - x;
  std::vector<std::string> origins(c.color_count());
  std::vector<bool> empty(c.color_count());
  for (Color k = 0; k < c.color_count(); ++k) {
    origins[top - k] = c.info(k).origin;
    empty[top - k] = c.info(k).empty_lineage;
  }
  const Configuration reversed = derive_configuration(14, colors, origins, empty);
  EXPECT_TRUE(partition_equal(c, reversed));
  EXPECT_FALSE(partition_equal(c, wl_step(c).config));
  EXPECT_WLCC_ERROR(partition_equal(c, cayley_config(cycle_cayley(5))), ErrorKind::SizeMismatch);
}

TEST(OracleTest, NaiveRunReproducesEveryIteration) {
  for (const Configuration& c :
       {Heptagon(), cayley_config(cycle_cayley(10)), schreier_config(sym_adjacent(6)),
        schreier_config(sl_tuples(2, 3, 1).action)}) {
    const WLTrace t = wl_run(c);
    const auto naive = oracle::naive_run(oracle::to_matrix(c));
    ASSERT_EQ(naive.size(), t.snapshots.size());
    for (std::size_t h = 0; h < naive.size(); ++h)
      EXPECT_TRUE(oracle::same_partition(naive[h], oracle::to_matrix(t.snapshots[h])));
  }
}

}  // namespace
}  // namespace wlcc
