#include <gtest/gtest.h>

#include <random>

#include "tambara/hopf.hpp"
#include "tambara/polynomial.hpp"
#include "tambara/tensor.hpp"

using namespace tambara;

namespace {

SuiteOptions quick() {
  SuiteOptions o;
  o.elements_per_level = 4;
  o.max_exponent_points = 6;
  return o;
}

void expect_pass(const Report& r) {
  EXPECT_TRUE(r.passed()) << r.suite << ": " << (r.first_failure() ? r.first_failure()->name + " " + r.first_failure()->witness : "");
  EXPECT_GT(r.checks(), 0u);
}

std::vector<std::string> ranks(const QuotientPresentation& q) {
  std::vector<std::string> out{std::to_string(q.free_rank)};
  for (const auto& t : q.torsion) out.push_back(t.str());
  return out;
}

}  // namespace

TEST(Hopf, LawsHoldForFixedPointC2) {
  auto g = make_group("C2");
  Tambarization<FixedPoint> t(FixedPoint(g, make_monoid_preset(g, "C2")));
  Hopf<FixedPoint> h(t);
  expect_pass(check_hopf(h, quick()));
}

TEST(Hopf, CounitOfUnitImagesIsOne) {
  auto g = make_group("C2");
  Tambarization<FixedPoint> t(FixedPoint(g, make_monoid_preset(g, "C2")));
  Hopf<FixedPoint> h(t);
  for (const auto& x : test_levels(g, true)) {
    for (const auto& u : unit_images(t, x)) {
      EXPECT_EQ(h.counit(x, u), h.omega().one(x));
      EXPECT_TRUE(h.is_group_like(x, u));
      EXPECT_FALSE(h.is_group_like(x, u + t.one(x)));
    }
    EXPECT_FALSE(h.is_group_like(x, t.zero(x)));
  }
}

TEST(Hopf, GroupLikeClosure) {
  auto g = make_group("C2");
  Tambarization<FixedPoint> t(FixedPoint(g, make_monoid_preset(g, "C2")));
  Hopf<FixedPoint> h(t);
  for (const auto& x : test_levels(g, true)) expect_pass(check_group_like(h, t, x, unit_images(t, x), quick()));
}

TEST(Hopf, CorruptedMultiplicationIsCaught) {
  auto g = make_group("C2");
  Tambarization<FixedPoint> t(FixedPoint(g, make_monoid_preset(g, "C2")));
  Hopf<FixedPoint> h(t);
  GSet pt = point_set(g);
  auto b = t.basis(pt);
  Corrupted<Tambarization<FixedPoint>> bad(t, StructureMap::mul, identity_map(pt), b.back());
  auto r = check_hopf(h, bad, quick());
  EXPECT_FALSE(r.passed());
}

TEST(Tensor, UnitLawRanks) {
  for (const char* gname : {"C2", "C3", "S3"}) {
    auto g = make_group(gname);
    Burnside omega(g);
    TensorProduct<Burnside, Burnside> oo(omega, omega);
    for (const auto& x : test_levels(g, true)) {
      auto lv = oo.level(x);
      EXPECT_EQ(lv->quotient.free_rank, orbit_objects(x).size()) << describe(x);
      EXPECT_TRUE(lv->quotient.torsion.empty());
    }
    EXPECT_EQ(oo.level(empty_set(g))->quotient.dimension(), 0u);
  }
}

TEST(Tensor, UnitIsoIsTambaraIso) {
  auto g = make_group("C2");
  Burnside omega(g);
  TensorProduct<Burnside, Burnside> oo(omega, omega);
  auto [fwd, back] = unit_iso(oo);
  for (const auto& x : test_levels(g, true)) {
    for (const auto& a : omega.elements(x, 8)) EXPECT_EQ(back(x, fwd(x, a)), a);
    for (const auto& w : oo.generators(x)) EXPECT_EQ(fwd(x, back(x, w)), w);
  }
  expect_pass(check_tambara_morphism(fwd, quick()));
  expect_pass(check_tambara_morphism(back, quick()));
}

TEST(Tensor, TambaraSuiteForOmegaOmega) {
  auto g = make_group("C2");
  Burnside omega(g);
  expect_pass(check_tambara(TensorProduct<Burnside, Burnside>(omega, omega), quick()));
}

TEST(Tensor, LiftIndependence) {
  auto g = make_group("C2");
  Burnside omega(g);
  std::mt19937 rng(7);
  TensorProduct<Burnside, Tambarization<FixedPoint>> ts(omega, Tambarization<FixedPoint>(FixedPoint(g, make_monoid_preset(g, "C2"))));
  expect_pass(check_lift_independence(ts, 20, rng, quick()));
}

TEST(Tensor, DoubleSidedFreeOrbit) {
  // f_+ then f^* of [1 (x) 1] at the free orbit: both equal to 2 in Omega(G/e).
  auto g = make_group("C2");
  Burnside omega(g);
  TensorProduct<Burnside, Burnside> oo(omega, omega);
  GSet free = transitive(g, 0);
  GMap t = terminal_map(free);
  auto [fwd, back] = unit_iso(oo);
  auto e = oo.one(free);
  auto r = oo.restrict(t, oo.transfer(t, e));
  EXPECT_EQ(back(free, r), omega.restrict(t, omega.transfer(t, omega.one(free))));
  EXPECT_EQ(oo.norm(t, e), oo.one(point_set(g)));
}

TEST(CIso, RanksAndInverse) {
  auto g = make_group("C2");
  FixedPoint p(g, make_monoid_preset(g, "C2"));
  auto c = c_iso(p, p);
  for (const auto& x : orbit_levels(g)) {
    auto lv = c.tensor.level(x);
    EXPECT_TRUE(lv->quotient.torsion.empty());
    EXPECT_EQ(lv->quotient.free_rank, c.target.basis(x).size()) << describe(x);
    for (const auto& b : c.target.basis(x)) EXPECT_EQ(c.forward(x, c.backward(x, b)), b);
    for (const auto& w : c.tensor.generators(x)) EXPECT_EQ(c.backward(x, c.forward(x, w)), w);
    EXPECT_EQ(c.forward(x, c.tensor.one(x)), c.target.one(x));
  }
  expect_pass(check_tambara_morphism(c.morphism(), quick()));
}

TEST(PhiPsi, TrivialMonoidIsUnitIso) {
  auto g = make_group("C2");
  auto pp = phi_psi(Burnside(g), make_monoid_preset(g, "trivial"));
  expect_pass(check_phi_psi(pp, quick()));
}

TEST(PhiPsi, RanksMatchForC2) {
  auto g = make_group("C2");
  auto pp = phi_psi(Burnside(g), make_monoid_preset(g, "C2"));
  for (const auto& x : orbit_levels(g)) {
    auto lv = pp.dress.level(x);
    EXPECT_EQ(pp.tensor.level(x)->quotient.free_rank, orbit_objects(lv->xq).size());
    EXPECT_TRUE(pp.tensor.level(x)->quotient.torsion.empty());
  }
}

TEST(PhiPsi, MutualInverseAndMorphism) {
  for (auto [gname, q] : {std::pair{"C2", "C2"}, std::pair{"C2", "idempotent2"}, std::pair{"C3", "C3"}, std::pair{"C2", "twisted3"}}) {
    auto g = make_group(gname);
    auto pp = phi_psi(Burnside(g), make_monoid_preset(g, q));
    expect_pass(check_phi_psi(pp, quick()));
  }
}

TEST(PhiPsi, TrivialGroupRingTable) {
  auto g = make_group("C1");
  GMonoid q = make_monoid_preset(g, "idempotent2");
  auto pp = phi_psi(Burnside(g), q);
  GSet pt = point_set(g);
  auto lv = pp.tensor.level(pt);
  EXPECT_EQ(ranks(lv->quotient), (std::vector<std::string>{"2"}));
}

TEST(Polynomial, OmegaIndeterminateEvaluates) {
  auto g = make_group("C2");
  Caps caps;
  caps.degree = 4;
  auto p = polynomial_omega(g, caps);
  Burnside omega(g, caps);
  GSet pt = point_set(g);
  auto x = indeterminate(p);
  for (const auto& s : omega.elements(pt, 8)) {
    if (!s.is_nonnegative()) continue;
    EXPECT_EQ(evaluation(p, omega, s)(pt, x), s) << omega.show(pt, s);
  }
}

TEST(Polynomial, TruncatedTensorFlagsCap) {
  auto g = make_group("C2");
  Caps caps;
  caps.degree = 2;
  auto p = polynomial(Burnside(g, caps), caps);
  GSet pt = point_set(g);
  auto lv = p.level(pt);
  EXPECT_GT(lv->quotient.dimension(), 0u);
  (void)lv->truncated;
}
