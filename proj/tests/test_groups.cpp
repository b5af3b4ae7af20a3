#include <gtest/gtest.h>

#include "tambara/groups.hpp"

using namespace tambara;

TEST(Groups, Orders) {
  EXPECT_EQ(make_group("e")->order(), 1);
  EXPECT_EQ(make_group("C6")->order(), 6);
  EXPECT_EQ(make_group("D4")->order(), 8);
  EXPECT_EQ(make_group("S4")->order(), 24);
  EXPECT_EQ(make_group("K4")->order(), 4);
  EXPECT_THROW(make_group("X9"), std::invalid_argument);
  EXPECT_THROW(make_group("C30"), std::invalid_argument);
}

TEST(Groups, SubgroupCounts) {
  // Total subgroups and conjugacy classes of subgroups.
  struct Row { const char* name; int total; int classes; };
  for (auto r : {Row{"e", 1, 1}, Row{"C2", 2, 2}, Row{"C6", 4, 4}, Row{"S3", 6, 4}, Row{"K4", 5, 5},
                 Row{"D4", 10, 8}, Row{"S4", 30, 11}}) {
    auto g = make_group(r.name);
    EXPECT_EQ(g->num_subgroups(), r.total) << r.name;
    EXPECT_EQ(static_cast<int>(subgroups_up_to_conjugacy(*g).size()), r.classes) << r.name;
  }
}

TEST(Groups, ConjugacyClasses) {
  EXPECT_EQ(conjugacy_classes(*make_group("S3")).size(), 3u);
  EXPECT_EQ(conjugacy_classes(*make_group("D4")).size(), 5u);
  EXPECT_EQ(conjugacy_classes(*make_group("S4")).size(), 5u);
}

TEST(Groups, CosetsAndCanonical) {
  auto g = make_group("S3");
  for (int h = 0; h < g->num_subgroups(); ++h) {
    const auto& t = g->cosets(h);
    EXPECT_EQ(t.size * g->subgroup_order(h), g->order());
    EXPECT_EQ(t.rep[0], g->identity());
    int c = g->canonical_element(h, g->whole());
    EXPECT_EQ(g->conjugate(c, h), g->class_rep(h));
    EXPECT_TRUE(g->is_subgroup_of(h, g->normalizer(h)));
  }
  EXPECT_EQ(g->subgroup_order(g->trivial_subgroup()), 1);
  EXPECT_EQ(g->subgroup_order(g->whole()), 6);
}

TEST(Groups, RejectsBadTables) {
  EXPECT_THROW(make_group_from_table("bad", 2, {0, 1, 1, 1}), std::invalid_argument);
  EXPECT_THROW(make_group_from_table("bad", 2, {0, 1}), std::invalid_argument);
}

TEST(Groups, NonZeroIdentityIndex) {
  // C2 with identity stored at index 1.
  auto g = make_group_from_table("C2'", 2, {1, 0, 0, 1});
  EXPECT_EQ(g->identity(), 1);
  EXPECT_EQ(g->cosets(g->trivial_subgroup()).rep[0], 1);
}
