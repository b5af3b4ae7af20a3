#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tambara/burnside.hpp"
#include "tambara/mackey.hpp"

using namespace tambara;

namespace {

struct C2Fixture {
  GroupPtr g = make_group("C2");
  Burnside omega{g};
  GSet pt = point_set(g);
  GSet free = transitive(g, 0);
  BurnsideElement a = BurnsideElement::single(OrbitKey{0, 1});
  BurnsideElement b = BurnsideElement::single(OrbitKey{0, 0});
  GMap to_pt = terminal_map(free);
};

}  // namespace

TEST(Burnside, PointLevelTable) {
  C2Fixture c;
  EXPECT_EQ(c.omega.one(c.pt), c.a);
  EXPECT_EQ(c.omega.mul(c.pt, c.a, c.a), c.a);
  EXPECT_EQ(c.omega.mul(c.pt, c.a, c.b), c.b);
  EXPECT_EQ(c.omega.mul(c.pt, c.b, c.b), c.b.scaled(2));
  EXPECT_EQ(c.omega.basis(c.pt).size(), 2u);
  EXPECT_TRUE(c.omega.basis(empty_set(c.g)).empty());
}

TEST(Burnside, ProductsMatchOrbitCount) {
  for (int p : {2, 3, 5}) {
    auto g = cyclic_group(p);
    Burnside omega(g);
    GSet pt = point_set(g);
    BurnsideElement basis[2] = {BurnsideElement::single(OrbitKey{0, 1}), BurnsideElement::single(OrbitKey{0, 0})};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        auto expect = oracle::cp_product(p, i, j);
        auto got = omega.mul(pt, basis[i], basis[j]);
        EXPECT_EQ(got.coef(OrbitKey{0, 1}), expect[0]);
        EXPECT_EQ(got.coef(OrbitKey{0, 0}), expect[1]);
      }
  }
}

TEST(Burnside, RestrictionOfFreeOrbit) {
  C2Fixture c;
  auto r = c.omega.restrict(c.to_pt, c.b);
  EXPECT_EQ(r, c.omega.one(c.free).scaled(2));
  EXPECT_EQ(c.omega.restrict(c.to_pt, c.a), c.omega.one(c.free));
  EXPECT_EQ(c.omega.transfer(c.to_pt, c.omega.one(c.free)), c.b);
}

TEST(Burnside, NormOfFreeCopiesMatchesSectionCount) {
  C2Fixture c;
  for (int n = 0; n <= 5; ++n) {
    auto [fixed, free_orbits] = oracle::c2_norm_of_free_copies(n);
    auto x = c.omega.one(c.free).scaled(n);
    auto got = c.omega.norm(c.to_pt, x);
    EXPECT_EQ(got.coef(OrbitKey{0, 1}), fixed) << n;
    EXPECT_EQ(got.coef(OrbitKey{0, 0}), free_orbits) << n;
    EXPECT_EQ(got, c.a.scaled(n) + c.b.scaled((n * n - n) / 2));
    EXPECT_EQ(norm_by_marks(c.to_pt, x), got);
  }
}

TEST(Burnside, VirtualNormsByMarks) {
  C2Fixture c;
  // N(-1) = a - b: the marks of -1 are (-1) at e, so N has marks
  // (1, -1)... computed independently: (-1)^2 = 1 at e, -1 at C2.
  auto n = c.omega.norm(c.to_pt, c.omega.one(c.free).negated());
  EXPECT_EQ(mark(c.pt, n, 0, 0), 1);
  EXPECT_EQ(mark(c.pt, n, 0, 1), -1);
  EXPECT_EQ(n, c.a.negated() + c.b);
}

TEST(Burnside, MarksAgreeWithDependentProducts) {
  std::mt19937 rng(17);
  for (const char* name : {"C2", "C3", "S3", "K4"}) {
    auto g = make_group(name);
    Burnside omega(g);
    auto levels = test_levels(g, true);
    for (const auto& y : orbit_levels(g))
      for (const auto& x : levels)
        for (const auto& f : all_gmaps(x, y)) {
          auto es = omega.elements(x, 10);
          for (const auto& e : es) {
            if (!e.is_nonnegative() || degree(x, e) > 12) continue;
            EXPECT_EQ(norm_by_marks(f, e), omega.norm_positive(f, e)) << name << " " << describe(f) << " " << omega.show(x, e);
          }
        }
  }
}

TEST(Burnside, MarkHomomorphismIsInjectiveAndMultiplicative) {
  auto g = make_group("S3");
  Burnside omega(g);
  GSet pt = point_set(g);
  auto bs = omega.basis(pt);
  for (const auto& u : bs)
    for (const auto& v : bs) {
      auto p = omega.mul(pt, u, v);
      for (int k = 0; k < g->num_subgroups(); ++k) EXPECT_EQ(mark(pt, p, 0, k), mark(pt, u, 0, k) * mark(pt, v, 0, k));
      auto back = element_from_marks(pt, [&](int y, SubgroupId k) { return mark(pt, p, y, k); });
      EXPECT_EQ(back, p);
    }
}

TEST(Semiring, IndeterminateAndEnumeration) {
  auto g = make_group("C2");
  BurnsideSemiring s(g);
  GSet pt = point_set(g);
  EXPECT_EQ(s.indeterminate(), BurnsideElement::single(OrbitKey{0, 1}));
  // Degree <= 3 over a point: n*a + m*b with n + 2m <= 3 gives 6 elements.
  EXPECT_EQ(s.enumerate(pt, 3).size(), 6u);
  auto e = make_group("e");
  BurnsideSemiring t(e);
  EXPECT_EQ(t.enumerate(point_set(e), 12).size(), 13u);
}

TEST(Mackey, BurnsideSuitePasses) {
  for (const char* name : {"C2", "C3"}) {
    auto g = make_group(name);
    auto r = check_mackey(Burnside(g), SuiteOptions{});
    EXPECT_TRUE(r.passed()) << name << " " << (r.first_failure() ? r.first_failure()->witness : "");
    EXPECT_TRUE(r.complete);
  }
}
