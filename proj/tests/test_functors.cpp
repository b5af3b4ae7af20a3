#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tambara/burnside.hpp"
#include "tambara/dress.hpp"
#include "tambara/json_io.hpp"
#include "tambara/mackey.hpp"
#include "tambara/tambara.hpp"
#include "tambara/tambarization.hpp"

using namespace tambara;

namespace {

SuiteOptions quick() {
  SuiteOptions o;
  o.elements_per_level = 5;
  return o;
}

void expect_pass(const Report& r) {
  EXPECT_TRUE(r.passed()) << r.suite << ": " << (r.first_failure() ? r.first_failure()->name + " " + r.first_failure()->witness : "");
  EXPECT_GT(r.checks(), 0u);
}

std::vector<std::vector<int>> op_table(const GMonoid& q) {
  std::vector<std::vector<int>> t(q.size(), std::vector<int>(q.size()));
  for (int a = 0; a < q.size(); ++a)
    for (int b = 0; b < q.size(); ++b) t[a][b] = q.mul(a, b);
  return t;
}

}  // namespace

TEST(Monoid, PresetsValidate) {
  for (const char* gname : {"C1", "C2", "C3", "S3"}) {
    auto g = make_group(gname);
    for (const auto& p : monoid_presets()) EXPECT_NO_THROW(make_monoid_preset(g, p)) << gname << " " << p;
  }
  auto g = make_group("C2");
  EXPECT_THROW(make_monoid("bad", trivial_action(g, 2), {0, 1, 1, 1}, 1), std::invalid_argument);
  EXPECT_THROW(make_monoid_preset(g, "C99"), std::invalid_argument);
  EXPECT_FALSE(make_monoid_preset(g, "idempotent2").is_group());
}

TEST(FixedPoint, SuitesPass) {
  for (const char* gname : {"C2", "C3"})
    for (const char* q : {"trivial", "C2", "idempotent2", "twisted3", "subsets2"}) {
      auto g = make_group(gname);
      expect_pass(check_mackey(FixedPoint(g, make_monoid_preset(g, q)), quick()));
    }
}

TEST(FixedPoint, TransferMultipliesFibers) {
  auto g = make_group("C2");
  FixedPoint p(g, make_monoid_preset(g, "C2"));
  GSet free = transitive(g, 0);
  GMap t = terminal_map(free);
  EXPECT_EQ(p.transfer(t, {1, 1}), (std::vector<int>{0}));
  EXPECT_EQ(p.enumerate(free).size(), 2u);
  EXPECT_EQ(p.enumerate(point_set(g)).size(), 2u);
  // twisted3: the swap inverts, so only 0 is fixed.
  FixedPoint tw(g, make_monoid_preset(g, "twisted3"));
  EXPECT_EQ(tw.enumerate(point_set(g)).size(), 1u);
  EXPECT_EQ(tw.enumerate(free).size(), 3u);
}

TEST(FixedPoint, PresentationMatchesGroup) {
  auto g = make_group("C2");
  FixedPoint p(g, make_monoid_preset(g, "C3"));
  GSet free = transitive(g, 0);
  auto q = cokernel(p.relations(free));
  EXPECT_EQ(q.free_rank, 0u);
  ASSERT_EQ(q.torsion.size(), 1u);
  EXPECT_EQ(q.torsion[0], 3);
}

TEST(DirectSum, SuitePasses) {
  auto g = make_group("C2");
  FixedPoint p(g, make_monoid_preset(g, "C2"));
  expect_pass(check_mackey(DirectSum<FixedPoint, Burnside>(p, Burnside(g)), quick()));
  auto d = diagonal_morphism(p);
  expect_pass(check_mackey_morphism(d, quick()));
}

TEST(Semiring, SuitePasses) {
  for (const char* gname : {"C2", "C3"}) {
    auto g = make_group(gname);
    expect_pass(check_mackey(BurnsideSemiring(g), quick()));
  }
}

TEST(Semiring, ValueAtIndeterminateRoundTrip) {
  auto g = make_group("C2");
  BurnsideSemiring a(g);
  FixedPoint p(g, make_monoid_preset(g, "C2"));
  GSet pt = point_set(g);
  for (const auto& m : p.enumerate(pt)) {
    auto phi = morphism_from_GG_element(a, p, m);
    EXPECT_EQ(value_at_indeterminate(phi), m);
    expect_pass(check_mackey_morphism(phi, quick()));
  }
}

TEST(Tambara, BurnsidePasses) {
  for (const char* gname : {"C2", "C3"}) expect_pass(check_tambara(Burnside(make_group(gname)), quick()));
}

TEST(Tambara, CompletionNormAgreesWithMarks) {
  for (const char* gname : {"C2", "C3", "S3"}) {
    auto g = make_group(gname);
    Burnside omega(g);
    auto levels = orbit_levels(g);
    for (const auto& x : levels)
      for (const auto& y : levels)
        for (const auto& f : all_gmaps(x, y))
          for (const auto& a : omega.elements(x, 8)) {
            if (a.is_nonnegative()) continue;
            EXPECT_EQ(norm_by_completion(omega, f, a.positive_part(), a.negative_part()), norm_by_marks(f, a))
                << describe(f) << " " << omega.show(x, a);
          }
  }
}

TEST(Tambara, InitialMorphismOfBurnsideIsIdentity) {
  auto g = make_group("C2");
  Burnside omega(g);
  auto phi = initial_morphism(omega);
  for (const auto& x : test_levels(g, true))
    for (const auto& a : omega.elements(x, 8)) EXPECT_EQ(phi(x, a), a);
}

TEST(Tambara, CorruptedStructureMapsAreCaught) {
  auto g = make_group("C2");
  Burnside omega(g);
  GSet free = transitive(g, 0);
  GSet pt = point_set(g);
  GMap t = terminal_map(free);
  auto one_free = omega.one(free);
  auto b = omega.basis(pt).front();
  for (auto which : {StructureMap::restrict, StructureMap::transfer, StructureMap::norm, StructureMap::mul}) {
    GMap map = which == StructureMap::restrict ? t : (which == StructureMap::mul ? identity_map(pt) : t);
    auto input = which == StructureMap::restrict ? b : (which == StructureMap::mul ? b : one_free);
    Corrupted<Burnside> bad(omega, which, map, input);
    auto r = check_tambara(bad, quick());
    EXPECT_FALSE(r.passed()) << to_string(which);
    ASSERT_NE(r.first_failure(), nullptr);
    EXPECT_FALSE(r.first_failure()->witness.empty());
  }
}

TEST(Dress, TrivialMonoidAgreesWithBase) {
  auto g = make_group("C2");
  Burnside omega(g);
  Dress<Burnside> d(omega, make_monoid_preset(g, "trivial"));
  auto levels = test_levels(g, true);
  for (const auto& x : levels) {
    auto es = omega.elements(x, 6);
    for (const auto& a : es) {
      for (const auto& b : es) EXPECT_EQ(d.mul(x, a, b), omega.mul(x, a, b));
      for (const auto& y : orbit_levels(g))
        for (const auto& f : all_gmaps(x, y)) {
          EXPECT_EQ(d.transfer(f, a), omega.transfer(f, a));
          EXPECT_EQ(d.norm(f, a), omega.norm(f, a));
        }
    }
    EXPECT_EQ(d.one(x), omega.one(x));
  }
}

TEST(Dress, TrivialGroupIsMonoidRing) {
  auto g = make_group("C1");
  Burnside omega(g);
  GSet pt = point_set(g);
  for (const char* name : {"C2", "C3", "idempotent2"}) {
    GMonoid q = make_monoid_preset(g, name);
    Dress<Burnside> d(omega, q);
    auto c = oracle::monoid_ring_constants(op_table(q));
    auto basis = omega.basis(q.carrier);  // one orbit per monoid element
    ASSERT_EQ(basis.size(), static_cast<std::size_t>(q.size()));
    for (int a = 0; a < q.size(); ++a)
      for (int b = 0; b < q.size(); ++b) {
        auto got = omega.coords(q.carrier, d.mul(pt, basis[a], basis[b]));
        for (int k = 0; k < q.size(); ++k) EXPECT_EQ(got[k], c[a][b][k]) << name;
      }
    // (1+s)^2 = 1 + 3s for the idempotent
    if (std::string(name) == "idempotent2") {
      auto one_s = basis[0] + basis[1];
      EXPECT_EQ(d.mul(pt, one_s, one_s), basis[0] + basis[1].scaled(3));
    }
  }
}

TEST(Dress, SuitesPass) {
  for (const char* gname : {"C2", "C3"})
    for (const char* q : {"C2", "idempotent2"}) {
      auto g = make_group(gname);
      Dress<Burnside> d(Burnside(g), make_monoid_preset(g, q));
      expect_pass(check_tambara(d, quick()));
    }
}

TEST(Dress, MonoidMapInducesMorphism) {
  auto g = make_group("C2");
  Burnside omega(g);
  Dress<Burnside> c2(omega, make_monoid_preset(g, "C2"));
  Dress<Burnside> triv(omega, make_monoid_preset(g, "trivial"));
  auto phi = dress_map(c2, triv, {0, 0});
  expect_pass(check_tambara_morphism(phi, quick()));
  EXPECT_THROW(dress_map(triv, c2, {1}), std::invalid_argument);
  expect_pass(check_tambara_morphism(initial_morphism(c2), quick()));
}

TEST(Tambarization, TrivialGroupIsMonoidRing) {
  auto g = make_group("C1");
  GSet pt = point_set(g);
  for (const char* name : {"C2", "C3", "idempotent2"}) {
    GMonoid q = make_monoid_preset(g, name);
    Tambarization<FixedPoint> t(FixedPoint(g, q));
    auto c = oracle::monoid_ring_constants(op_table(q));
    auto basis = t.basis(pt);
    ASSERT_EQ(basis.size(), static_cast<std::size_t>(q.size()));
    for (int a = 0; a < q.size(); ++a)
      for (int b = 0; b < q.size(); ++b) {
        auto got = t.coords(pt, t.mul(pt, basis[a], basis[b]));
        for (int k = 0; k < q.size(); ++k) EXPECT_EQ(got[k], c[a][b][k]) << name;
      }
  }
}

TEST(Tambarization, SemiringIsPolynomialRing) {
  auto g = make_group("C1");
  GSet pt = point_set(g);
  Caps caps;
  caps.degree = 6;
  Tambarization<BurnsideSemiring> t(BurnsideSemiring(g, caps), caps);
  auto basis = t.basis(pt);
  ASSERT_EQ(basis.size(), 7u);
  // basis[i] is X^i
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j) EXPECT_EQ(t.mul(pt, basis[i], basis[j]), basis[i + j]);
}

TEST(Tambarization, SuitesPass) {
  for (const char* gname : {"C2", "C3"})
    for (const char* q : {"C2", "idempotent2"}) {
      auto g = make_group(gname);
      expect_pass(check_tambara(Tambarization<FixedPoint>(FixedPoint(g, make_monoid_preset(g, q))), quick()));
    }
}

TEST(Tambarization, CompletionNormAgreesWithBurnsideForTrivialM) {
  auto g = make_group("C2");
  Tambarization<ZeroFunctor> t{ZeroFunctor(g)};
  Burnside omega(g);
  auto to_omega = [](const Tambarization<ZeroFunctor>::Element& e) {
    BurnsideElement out;
    for (const auto& [k, c] : e.terms()) out.add_term(k.key, c);
    return out;
  };
  for (const auto& x : orbit_levels(g))
    for (const auto& y : orbit_levels(g))
      for (const auto& f : all_gmaps(x, y))
        for (const auto& a : t.elements(x, 8)) EXPECT_EQ(to_omega(t.norm(f, a)), omega.norm(f, to_omega(a)));
}

TEST(Tambarization, UnitMorphismIsNatural) {
  auto g = make_group("C2");
  FixedPoint p(g, make_monoid_preset(g, "C2"));
  Tambarization<FixedPoint> t(p);
  auto u = unit_morphism(t);
  expect_pass(check_mackey_morphism(u, quick()));
  for (const auto& x : test_levels(g, true)) EXPECT_EQ(u(x, p.zero(x)), t.one(x));
}

TEST(Tambarization, ExtensionInvertsRestriction) {
  auto g = make_group("C2");
  FixedPoint p(g, make_monoid_preset(g, "C2"));
  Tambarization<FixedPoint> t(p);
  // psi0 = unit into Omega[P]: extension is the identity.
  auto ext = extend_to_tambarization(t, t, unit_morphism(t));
  for (const auto& x : test_levels(g, true))
    for (const auto& e : t.elements(x, 8)) EXPECT_EQ(ext(x, e), e);
  expect_pass(check_tambara_morphism(ext, quick()));
  auto back = restrict_to_unit(ext);
  for (const auto& x : test_levels(g, true))
    for (const auto& m : p.enumerate(x)) EXPECT_EQ(back(x, m), t.decompose(identity_map(x), m));
}

TEST(Tambarization, SplitNormAgreesWithBurnsideOnSeveralOrbits) {
  for (const char* gname : {"C2", "C3", "S3"}) {
    auto g = make_group(gname);
    Tambarization<ZeroFunctor> t{ZeroFunctor(g)};
    Burnside omega(g);
    auto to_omega = [](const Tambarization<ZeroFunctor>::Element& e) {
      BurnsideElement out;
      for (const auto& [k, c] : e.terms()) out.add_term(k.key, c);
      return out;
    };
    auto levels = test_levels(g, true);
    for (const auto& x : levels)
      for (const auto& y : levels) {
        auto maps = all_gmaps(x, y);
        if (maps.size() > 6) maps.resize(6);
        for (const auto& f : maps)
          for (const auto& a : t.elements(x, 6)) EXPECT_EQ(to_omega(t.norm(f, a)), omega.norm(f, to_omega(a))) << gname << " " << describe(x) << " -> " << describe(y);
      }
  }
}

TEST(Tambarization, DegreeCappedSemiringSuites) {
  Caps caps;
  caps.degree = 3;
  SuiteOptions o = quick();
  o.elements_per_level = 4;
  for (const char* gname : {"C2", "C3"}) {
    auto g = make_group(gname);
    expect_pass(check_tambara(Tambarization<BurnsideSemiring>(BurnsideSemiring(g, caps), caps), o));
    expect_pass(check_tambara(Tambarization<AdditiveBurnside>(AdditiveBurnside(g, caps), caps), o));
  }
}

TEST(JsonIo, RoundTrips) {
  auto g = make_group("S3");
  EXPECT_EQ(group_to_json(*group_from_json(group_to_json(*g))), group_to_json(*g));
  GMonoid q = make_monoid_preset(g, "twisted3");
  EXPECT_EQ(monoid_to_json(monoid_from_json(g, monoid_to_json(q))), monoid_to_json(q));
  EXPECT_EQ(parse_monoid(g, "twisted3").name, q.name);
  Burnside omega(g);
  for (const auto& x : test_levels(g, true)) {
    EXPECT_EQ(gset_to_json(gset_from_json(g, gset_to_json(x))), gset_to_json(x));
    for (const auto& a : omega.elements(x, 6)) EXPECT_EQ(burnside_from_json(x, burnside_to_json(x, a)), a);
  }
  auto c2 = make_group("C2");
  Tambarization<FixedPoint> t(FixedPoint(c2, make_monoid_preset(c2, "C2")));
  for (const auto& x : test_levels(c2, true))
    for (const auto& e : t.elements(x, 6)) EXPECT_EQ(tambarization_from_json(t, x, tambarization_to_json(x, e)), e);
  EXPECT_THROW(orbit_key_from_json(transitive(c2, 0), json{{"point", 0}, {"stabilizer", {0, 1}}}), std::invalid_argument);
  EXPECT_THROW(monoid_from_json(c2, json::parse(R"({"op": [[0, 1]]})")), std::invalid_argument);
}
