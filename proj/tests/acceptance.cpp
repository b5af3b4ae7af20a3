// Acceptance run: one PASS/FAIL line per criterion. All comparisons are
// exact; the only tolerance is the wall-clock limit of the axiom sweep.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tambara_lab.hpp"

using namespace tambara;

namespace {

constexpr double kSweepSeconds = 600.0;
constexpr std::size_t kLiftPairs = 100;

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
  void report(const Report& r) {
    if (!r.passed()) {
      const ReportItem* f = r.first_failure();
      require(false, r.suite + " " + f->name + ": " + f->witness);
    }
    if (r.checks() == 0) require(false, r.suite + " ran no checks");
  }
};

std::vector<std::vector<int>> op_table(const GMonoid& q) {
  std::vector<std::vector<int>> t(q.size(), std::vector<int>(q.size()));
  for (int a = 0; a < q.size(); ++a)
    for (int b = 0; b < q.size(); ++b) t[a][b] = q.mul(a, b);
  return t;
}

SuiteOptions sweep_options(const GroupPtr& g) {
  SuiteOptions o;
  o.elements_per_level = 6;
  if (g->order() > 3) {
    o.elements_per_level = 4;
    o.max_exponent_points = 6;
    o.two_orbit_levels = false;
    o.max_squares_per_target = 512;
  }
  return o;
}

// 1 ------------------------------------------------------------------------

Outcome axiom_suites() {
  Outcome out;
  auto start = std::chrono::steady_clock::now();
  for (const char* gname : {"C2", "C3", "S3"}) {
    auto g = make_group(gname);
    SuiteOptions opt = sweep_options(g);
    out.report(check_tambara(Burnside(g), opt));
    out.report(check_mackey(BurnsideSemiring(g), opt));
    for (const char* qn : {"trivial", "C2", "idempotent2", "twisted3", "subsets2"}) {
      GMonoid q = make_monoid_preset(g, qn);
      out.report(check_mackey(FixedPoint(g, q), opt));
      out.report(check_tambara(Dress<Burnside>(Burnside(g), q), opt));
      out.report(check_tambara(Tambarization<FixedPoint>(FixedPoint(g, q)), opt));
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.require(secs < kSweepSeconds, "sweep took " + std::to_string(secs) + " s");
  std::ostringstream s;
  s << "sweep " << secs << " s";
  out.notes.push_back(s.str());
  return out;
}

// 2 ------------------------------------------------------------------------

Outcome trivial_group_collapse() {
  Outcome out;
  auto g = make_group("e");
  GSet pt = point_set(g);
  for (const char* qn : {"C2", "C3", "idempotent2"}) {
    GMonoid q = make_monoid_preset(g, qn);
    auto ring = oracle::monoid_ring_constants(op_table(q));
    Tambarization<FixedPoint> t(FixedPoint(g, q));
    Burnside omega(g);
    Dress<Burnside> d(omega, q);
    // Basis element i corresponds to the monoid element i in both.
    auto tb = t.basis(pt);
    auto db = omega.basis(q.carrier);
    out.require(tb.size() == static_cast<std::size_t>(q.size()) && db.size() == tb.size(), std::string(qn) + ": rank");
    if (!out.ok) continue;
    for (int a = 0; a < q.size(); ++a)
      for (int b = 0; b < q.size(); ++b) {
        auto tc = t.coords(pt, t.mul(pt, tb[a], tb[b]));
        auto dc = omega.coords(q.carrier, d.mul(pt, db[a], db[b]));
        for (int k = 0; k < q.size(); ++k) {
          out.require(tc[k] == ring[a][b][k], std::string(qn) + ": tambarization product differs from Z[Q]");
          out.require(dc[k] == ring[a][b][k], std::string(qn) + ": dress product differs from Z[Q]");
        }
      }
  }
  return out;
}

// 3 ------------------------------------------------------------------------

Outcome phi_psi_inverse() {
  Outcome out;
  for (auto [gname, qn] : {std::pair{"C2", "C2"}, std::pair{"C2", "idempotent2"}, std::pair{"C3", "C3"}}) {
    auto g = make_group(gname);
    SuiteOptions opt;
    opt.elements_per_level = 6;
    out.report(check_phi_psi(phi_psi(Burnside(g), make_monoid_preset(g, qn)), opt));
  }
  return out;
}

// 4 ------------------------------------------------------------------------

Outcome burnside_oracle() {
  Outcome out;
  auto g = make_group("C2");
  Burnside omega(g);
  GSet pt = point_set(g), free = transitive(g, 0);
  auto a = BurnsideElement::single(OrbitKey{0, g->whole()});
  auto b = BurnsideElement::single(OrbitKey{0, 0});
  out.require(omega.mul(pt, a, a) == a, "a*a");
  out.require(omega.mul(pt, a, b) == b, "a*b");
  out.require(omega.mul(pt, b, b) == b.scaled(2), "b*b");
  GMap f = terminal_map(free);
  for (int n = 0; n <= 5; ++n) {
    auto [fixed, free_orbits] = oracle::c2_norm_of_free_copies(n);
    auto got = omega.norm(f, omega.one(free).scaled(n));
    out.require(got == a.scaled(fixed) + b.scaled(free_orbits), "norm of " + std::to_string(n) + " copies");
    out.require(fixed == n && free_orbits == (n * n - n) / 2, "closed form at n = " + std::to_string(n));
  }
  return out;
}

// 5 ------------------------------------------------------------------------

Outcome hopf_axioms() {
  Outcome out;
  auto g = make_group("C2");
  Tambarization<FixedPoint> t(FixedPoint(g, make_monoid_preset(g, "C2")));
  out.report(check_hopf(Hopf<FixedPoint>(t), SuiteOptions{}));
  return out;
}

// 6 ------------------------------------------------------------------------

Outcome group_likes() {
  Outcome out;
  auto g = make_group("C2");
  Tambarization<FixedPoint> t(FixedPoint(g, make_monoid_preset(g, "C2")));
  Hopf<FixedPoint> h(t);
  for (const auto& x : test_levels(g, true)) {
    auto us = unit_images(t, x);
    out.require(us.size() == t.inner().enumerate(x).size(), "unit images at " + describe(x));
    for (const auto& u : us) out.require(h.is_group_like(x, u), "u(m) not group-like at " + describe(x) + ": " + t.show(x, u));
    out.report(check_group_like(h, t, x, us, SuiteOptions{}));
  }
  return out;
}

// 7 ------------------------------------------------------------------------

template <class S>
void unit_law(Outcome& out, const S& s, std::mt19937& rng) {
  const GroupPtr& g = s.group();
  TensorProduct<Burnside, S> os(Burnside(g), s);
  auto [fwd, back] = unit_iso(os);
  SuiteOptions opt;
  opt.elements_per_level = 6;
  out.report(check_tambara_morphism(fwd, opt));
  out.report(check_tambara_morphism(back, opt));
  for (const auto& x : test_levels(g, true)) {
    for (const auto& e : s.elements(x, 16)) out.require(back(x, fwd(x, e)) == e, "unit iso round trip at " + describe(x));
    for (const auto& w : os.generators(x)) out.require(fwd(x, back(x, w)) == w, "inverse unit iso round trip at " + describe(x));
  }
  out.report(check_lift_independence(os, kLiftPairs, rng, opt));
}

Outcome unit_and_tensor_laws() {
  Outcome out;
  auto g = make_group("C2");
  std::mt19937 rng(20261015);
  unit_law(out, Burnside(g), rng);
  unit_law(out, Tambarization<FixedPoint>(FixedPoint(g, make_monoid_preset(g, "C2"))), rng);
  return out;
}

// 8 ------------------------------------------------------------------------

/// Every natural morphism from the semi-ring functor, found by choosing a
/// value for each orbit G/K -> G/K and keeping the natural choices, agrees
/// with the morphism rebuilt from its value at the indeterminate; and every
/// value is reached.
template <class M>
void semiring_morphisms_match_values(Outcome& out, const M& m, const std::vector<typename M::Element>& values,
                      const std::function<std::vector<typename M::Element>(const GSet&)>& candidates) {
  const GroupPtr& g = m.group();
  BurnsideSemiring a(g);
  GSet pt = point_set(g);
  SuiteOptions opt;
  opt.elements_per_level = 10;
  for (const auto& v : values) {
    auto phi = morphism_from_GG_element(a, m, v);
    out.require(value_at_indeterminate(phi) == v, "value round trip for " + m.show(pt, v));
  }

  const int ns = g->num_subgroups();
  std::vector<std::vector<typename M::Element>> choices(ns);
  for (int k = 0; k < ns; ++k) {
    GSet orbit = transitive(g, k);
    choices[k] = candidates(orbit);
    for (const auto& v : values) {
      auto r = m.restrict(terminal_map(orbit), v);
      if (std::find(choices[k].begin(), choices[k].end(), r) == choices[k].end()) choices[k].push_back(r);
    }
  }
  std::vector<std::size_t> idx(ns, 0);
  std::vector<typename M::Element> reached;
  for (;;) {
    std::vector<typename M::Element> table(ns);
    for (int k = 0; k < ns; ++k) table[k] = choices[k][idx[k]];
    auto comp = [m, table](const GSet& x, const BurnsideElement& e) {
      typename M::Element acc = m.zero(x);
      for (const auto& [key, c] : e.terms()) acc = m.add(x, acc, scale(m, x, m.transfer(realize(x, key), table[key.sub]), c));
      return acc;
    };
    auto phi = make_morphism<BurnsideSemiring, M>(a, m, comp, "candidate");
    if (check_mackey_morphism(phi, opt).passed()) {
      auto v = value_at_indeterminate(phi);
      reached.push_back(v);
      auto psi = morphism_from_GG_element(a, m, v);
      for (const auto& x : test_levels(g, true))
        for (const auto& e : a.enumerate(x, 6))
          out.require(phi(x, e) == psi(x, e), "rebuilt morphism differs at " + describe(x) + " on " + a.show(x, e));
    }
    int k = 0;
    while (k < ns && ++idx[k] == choices[k].size()) idx[k++] = 0;
    if (k == ns) break;
  }
  for (const auto& v : values)
    out.require(std::find(reached.begin(), reached.end(), v) != reached.end(), "value " + m.show(pt, v) + " not reached");
}

Outcome semiring_bijection() {
  Outcome out;
  auto g = make_group("C2");
  GSet pt = point_set(g);
  FixedPoint p(g, make_monoid_preset(g, "C2"));
  semiring_morphisms_match_values<FixedPoint>(out, p, p.enumerate(pt), [&](const GSet& x) { return p.enumerate(x); });

  Caps caps;
  caps.degree = 4;
  AdditiveBurnside omega(g, caps);
  // Candidates with coefficients in {-1, 0, 1}, plus restrictions of the
  // values; every value in the box at G/G must be reached.
  auto box = [&](const GSet& x) {
    std::vector<BurnsideElement> out;
    for (const auto& e : omega.enumerate(x, 2 * g->order()))
      if (std::all_of(e.terms().begin(), e.terms().end(), [](const auto& t) { return t.second >= -1 && t.second <= 1; }))
        out.push_back(e);
    return out;
  };
  semiring_morphisms_match_values<AdditiveBurnside>(out, omega, box(pt), box);
  return out;
}

// 9 ------------------------------------------------------------------------

template <class F>
void expect_caught(Outcome& out, const std::string& what, const Report& r) {
  const ReportItem* f = r.first_failure();
  out.require(f != nullptr, what + " not detected");
  if (f) out.require(!f->witness.empty(), what + " detected without a witness");
}

Outcome fault_injection() {
  Outcome out;
  auto g = make_group("C2");
  GSet pt = point_set(g), free = transitive(g, 0);
  GMap t = terminal_map(free);
  SuiteOptions opt;
  opt.elements_per_level = 6;
  std::size_t battery = 0;
  auto run = [&](const std::string& what, const Report& r) {
    ++battery;
    expect_caught<void>(out, what, r);
  };
  auto pick = [&](const auto& f, const GSet& x) { return f.elements(x, opt.elements_per_level).at(1); };

  Burnside omega(g);
  run("omega restrict", check_mackey(Corrupted<Burnside>(omega, StructureMap::restrict, t, pick(omega, pt)), opt));
  run("omega transfer", check_mackey(Corrupted<Burnside>(omega, StructureMap::transfer, t, pick(omega, free)), opt));
  run("omega norm", check_tambara(Corrupted<Burnside>(omega, StructureMap::norm, t, pick(omega, free)), opt));
  run("omega mul", check_tambara(Corrupted<Burnside>(omega, StructureMap::mul, identity_map(pt), pick(omega, pt)), opt));

  FixedPoint p(g, make_monoid_preset(g, "C2"));
  run("fixpt restrict", check_mackey(Corrupted<FixedPoint>(p, StructureMap::restrict, t, pick(p, pt)), opt));
  run("fixpt transfer", check_mackey(Corrupted<FixedPoint>(p, StructureMap::transfer, t, pick(p, free)), opt));

  BurnsideSemiring a(g);
  run("semiring transfer", check_mackey(Corrupted<BurnsideSemiring>(a, StructureMap::transfer, t, pick(a, free)), opt));

  Dress<Burnside> d(omega, make_monoid_preset(g, "C2"));
  run("dress norm", check_tambara(Corrupted<Dress<Burnside>>(d, StructureMap::norm, t, pick(d, free)), opt));
  run("dress restrict", check_tambara(Corrupted<Dress<Burnside>>(d, StructureMap::restrict, t, pick(d, pt)), opt));

  Tambarization<FixedPoint> tp(p);
  using TP = Tambarization<FixedPoint>;
  run("tambarize norm", check_tambara(Corrupted<TP>(tp, StructureMap::norm, t, pick(tp, free)), opt));
  run("tambarize mul", check_tambara(Corrupted<TP>(tp, StructureMap::mul, identity_map(pt), pick(tp, pt)), opt));

  Hopf<FixedPoint> h(tp);
  run("hopf mul", check_hopf(h, Corrupted<TP>(tp, StructureMap::mul, identity_map(pt), tp.basis(pt).back()), opt));
  run("hopf transfer", check_hopf(h, Corrupted<TP>(tp, StructureMap::transfer, identity_map(pt), tp.basis(pt).back()), opt));
  auto us = unit_images(tp, free);
  run("group-like norm", check_group_like(h, Corrupted<TP>(tp, StructureMap::norm, t, us.back()), free, us, opt));

  run("initial morphism", check_tambara_morphism(corrupt_morphism(initial_morphism(d), pt, pick(omega, pt)), opt));
  run("diagonal morphism", check_mackey_morphism(corrupt_morphism(diagonal_morphism(p), pt, pick(p, pt)), opt));
  auto pp = phi_psi(omega, make_monoid_preset(g, "C2"));
  run("phi", check_tambara_morphism(corrupt_morphism(pp.phi_morphism(), free, pick(d, free)), opt));
  TensorProduct<Burnside, Burnside> oo(omega, omega);
  run("unit iso", check_tambara_morphism(corrupt_morphism(unit_iso(oo).first, pt, pick(omega, pt)), opt));
  auto c = c_iso(p, p);
  run("c", check_tambara_morphism(corrupt_morphism(c.morphism(), pt, pick(c.tensor, pt)), opt));
  out.notes.push_back(std::to_string(battery) + " corruptions");
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"1 axiom suites (C2, C3, S3)", axiom_suites},
      {"2 trivial-group collapse to Z[Q]", trivial_group_collapse},
      {"3 phi/psi mutually inverse Tambara isomorphisms", phi_psi_inverse},
      {"4 Burnside table and norm oracle", burnside_oracle},
      {"5 Hopf axioms for P_C2 over C2", hopf_axioms},
      {"6 group-like elements and closure", group_likes},
      {"7 unit laws and lift independence", unit_and_tensor_laws},
      {"8 semi-ring morphisms vs values at X", semiring_bijection},
      {"9 fault injection battery", fault_injection},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.ok ? "PASS " : "FAIL ") << c.name << " (" << secs << " s)\n";
    for (const auto& n : o.notes) std::cout << "     " << n << "\n";
    std::cout.flush();
    failed += !o.ok;
  }
  return failed == 0 ? 0 : 1;
}
