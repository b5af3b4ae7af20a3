// tambara-lab: command line front end.
//
// Exit status: 0 when every requested check passes, 1 when a check fails
// (the witness is printed), 2 on bad arguments.

#include <CLI11.hpp>

#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tambara_lab.hpp"

using namespace tambara;

namespace {

struct BadArgs : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string group = "C2";
  std::string monoid = "C2";
  std::string functor = "omega";
  std::string left = "omega";
  std::string right = "omega";
  std::string format = "text";
  std::string level = "G";
  std::string from = "e";
  std::string to = "G";
  std::string elem;
  std::size_t cap_sections = 0;
  int cap_degree = 0;
  std::size_t budget = 0;
  bool table = false;
  int map_index = 0;
};

Caps caps_of(const Options& o) {
  Caps c = caps_from_env();
  if (o.cap_sections) c.sections = o.cap_sections;
  if (o.cap_degree) c.degree = o.cap_degree;
  if (o.budget) c.budget = o.budget;
  return c;
}

GroupPtr group_of(const Options& o) {
  if (!o.group.empty() && o.group.front() == '{') return group_from_json(json::parse(o.group));
  return make_group(o.group);
}

/// Orbit G/H with H named by "e", "G", a label from `group show`, or an
/// index into the subgroup classes.
GSet orbit_of(const GroupPtr& g, const std::string& text) {
  auto classes = subgroups_up_to_conjugacy(*g);
  if (text == "G" || text == g->name()) return point_set(g);
  for (SubgroupId h : classes)
    if (subgroup_label(*g, h) == text) return transitive(g, h);
  try {
    std::size_t used = 0;
    int i = std::stoi(text, &used);
    if (used == text.size() && i >= 0 && static_cast<std::size_t>(i) < classes.size()) return transitive(g, classes[i]);
  } catch (const std::exception&) {
  }
  throw BadArgs("unknown orbit '" + text + "'");
}

int emit(const Report& r, const Options& o) {
  if (o.format == "json") {
    std::cout << json(r).dump(2) << "\n";
  } else {
    std::cout << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.checks() << " checks" << (r.complete ? "" : ", capped")
              << ")\n";
    for (const auto& i : r.items)
      if (!i.passed) std::cout << "  FAIL " << i.name << ": " << i.witness << "\n";
  }
  return r.passed() ? 0 : 1;
}

/// Calls fn with the functor named by text: omega, semiring, omega-additive,
/// fixpt[:Q], dress[:Q], tambarize[:Q] (Q defaults to --monoid), zero.
template <class Fn>
int with_functor(const std::string& text, const GroupPtr& g, const Options& o, Fn fn) {
  const Caps caps = caps_of(o);
  std::string name = text, arg = o.monoid;
  if (auto c = text.find(':'); c != std::string::npos) {
    name = text.substr(0, c);
    arg = text.substr(c + 1);
  }
  if (name == "omega") return fn(Burnside(g, caps));
  if (name == "semiring") return fn(BurnsideSemiring(g, caps));
  if (name == "omega-additive") return fn(AdditiveBurnside(g, caps));
  if (name == "zero") return fn(ZeroFunctor(g));
  if (name == "fixpt") return fn(FixedPoint(g, parse_monoid(g, arg)));
  if (name == "dress") return fn(Dress<Burnside>(Burnside(g, caps), parse_monoid(g, arg)));
  if (name == "tambarize") return fn(Tambarization<FixedPoint>(FixedPoint(g, parse_monoid(g, arg)), caps));
  throw BadArgs("unknown functor '" + text + "'");
}

int cmd_group_list() {
  for (const auto& p : group_presets()) {
    auto g = make_group(p);
    std::cout << p << ": order " << g->order() << ", " << subgroups_up_to_conjugacy(*g).size() << " subgroup classes, "
              << conjugacy_classes(*g).size() << " conjugacy classes\n";
  }
  return 0;
}

int cmd_group_show(const Options& o) {
  auto g = group_of(o);
  auto classes = subgroups_up_to_conjugacy(*g);
  if (o.format == "json") {
    json j = group_to_json(*g);
    json subs = json::array();
    for (SubgroupId h : classes)
      subs.push_back(json{{"label", subgroup_label(*g, h)}, {"elements", g->elements(h)}, {"normalizer", g->elements(g->normalizer(h))}});
    j["subgroups"] = subs;
    j["conjugacy_classes"] = conjugacy_classes(*g);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << g->name() << ": order " << g->order() << "\n";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    SubgroupId h = classes[i];
    std::cout << "  [" << i << "] " << subgroup_label(*g, h) << " order " << g->subgroup_order(h) << ", normalizer "
              << subgroup_label(*g, g->normalizer(h)) << "\n";
  }
  std::cout << "  conjugacy classes: " << conjugacy_classes(*g).size() << "\n";
  return 0;
}

template <class T>
void print_table(const T& t, const GSet& x, const std::vector<typename T::Element>& basis, std::ostream& os) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j)
      os << t.show(x, basis[i]) << " * " << t.show(x, basis[j]) << " = " << t.show(x, t.mul(x, basis[i], basis[j])) << "\n";
}

int cmd_tambara_table(const Options& o) {
  auto g = group_of(o);
  Burnside omega(g, caps_of(o));
  GSet x = orbit_of(g, o.level);
  auto basis = omega.basis(x);
  if (o.format == "json") {
    json rows = json::array();
    for (const auto& a : basis)
      for (const auto& b : basis)
        rows.push_back(json{{"a", burnside_to_json(x, a)}, {"b", burnside_to_json(x, b)}, {"product", burnside_to_json(x, omega.mul(x, a, b))}});
    std::cout << rows.dump(2) << "\n";
    return 0;
  }
  print_table(omega, x, basis, std::cout);
  return 0;
}

int cmd_tambara_norm(const Options& o) {
  auto g = group_of(o);
  Burnside omega(g, caps_of(o));
  GSet x = orbit_of(g, o.from), y = orbit_of(g, o.to);
  auto maps = all_gmaps(x, y);
  if (maps.empty()) throw BadArgs("no map between the chosen orbits");
  if (o.map_index < 0 || static_cast<std::size_t>(o.map_index) >= maps.size()) throw BadArgs("map index out of range");
  const GMap& f = maps[o.map_index];
  if (o.elem.empty()) throw BadArgs("--elem is required");
  auto a = burnside_from_json(x, json::parse(o.elem));
  auto n = omega.norm(f, a);
  if (o.format == "json") std::cout << json{{"map", gmap_to_json(f)}, {"norm", burnside_to_json(y, n)}}.dump(2) << "\n";
  else std::cout << "N(" << omega.show(x, a) << ") = " << omega.show(y, n) << "\n";
  return 0;
}

int cmd_dress(const Options& o) {
  auto g = group_of(o);
  GMonoid q = parse_monoid(g, o.monoid);
  Dress<Burnside> d(Burnside(g, caps_of(o)), q);
  GSet x = orbit_of(g, o.level);
  auto lv = d.level(x);
  auto basis = d.base().basis(lv->xq);
  std::cout << d.name() << " at " << describe(x) << ": rank " << basis.size() << "\n";
  print_table(d, x, basis, std::cout);
  return 0;
}

int cmd_tambarize(const Options& o) {
  auto g = group_of(o);
  GSet x = orbit_of(g, o.level);
  auto run = [&](const auto& m) -> int {
    using M = std::decay_t<decltype(m)>;
    if constexpr (Enumerable<M> || requires { m.enumerate(x, 1); }) {
      Tambarization<M> t(m, caps_of(o));
      auto basis = t.basis(x);
      std::cout << t.name() << " at " << describe(x) << ": " << basis.size() << " basis pairs\n";
      for (const auto& b : basis) std::cout << "  " << t.show(x, b) << "\n";
      if (o.table) print_table(t, x, basis, std::cout);
      return 0;
    } else {
      throw BadArgs("functor levels cannot be enumerated; use fixpt, omega-additive, semiring or zero");
    }
  };
  return with_functor(o.functor == "omega" ? std::string("omega-additive") : o.functor, g, o, run);
}

int cmd_hopf(const Options& o) {
  auto g = group_of(o);
  Tambarization<FixedPoint> t(FixedPoint(g, parse_monoid(g, o.monoid)), caps_of(o));
  if (!t.inner().has_inverses()) throw BadArgs("the Hopf structure needs a group-valued monoid");
  Hopf<FixedPoint> h(t);
  return emit(check_hopf(h, suite_options(caps_of(o))), o);
}

int cmd_grouplike(const Options& o) {
  auto g = group_of(o);
  Tambarization<FixedPoint> t(FixedPoint(g, parse_monoid(g, o.monoid)), caps_of(o));
  if (!t.inner().has_inverses()) throw BadArgs("the Hopf structure needs a group-valued monoid");
  Hopf<FixedPoint> h(t);
  GSet x = orbit_of(g, o.level);
  std::vector<Tambarization<FixedPoint>::Element> elems;
  if (!o.elem.empty()) {
    auto e = tambarization_from_json(t, x, json::parse(o.elem));
    bool ok = h.is_group_like(x, e);
    std::cout << t.show(x, e) << (ok ? " is group-like\n" : " is not group-like\n");
    return ok ? 0 : 1;
  }
  return emit(check_group_like(h, t, x, unit_images(t, x), suite_options(caps_of(o))), o);
}

template <class F>
constexpr bool tensorable = Mackey<F> && Presented<F>;

int cmd_tensor_level(const Options& o) {
  auto g = group_of(o);
  GSet x = orbit_of(g, o.level);
  return with_functor(o.left, g, o, [&](const auto& l) {
    return with_functor(o.right, g, o, [&](const auto& r) -> int {
      using L = std::decay_t<decltype(l)>;
      using R = std::decay_t<decltype(r)>;
      if constexpr (tensorable<L> && tensorable<R>) {
        TensorProduct<L, R> ts(l, r, caps_of(o));
        auto lv = ts.level(x);
        const auto& q = lv->quotient;
        if (o.format == "json") {
          std::cout << json{{"free_rank", q.free_rank}, {"torsion", coords_to_json(q.torsion)}, {"generators", q.ambient},
                            {"relations", lv->relations.cols()}, {"truncated", lv->truncated}}
                           .dump(2)
                    << "\n";
        } else {
          std::cout << ts.name() << " at " << describe(x) << ": free rank " << q.free_rank << ", torsion [";
          for (std::size_t i = 0; i < q.torsion.size(); ++i) std::cout << (i ? "," : "") << q.torsion[i];
          std::cout << "] from " << q.ambient << " generators and " << lv->relations.cols() << " relations"
                    << (lv->truncated ? " (truncated)" : "") << "\n";
        }
        return 0;
      } else {
        throw BadArgs("both factors need group-valued levels with a presentation");
      }
    });
  });
}

int cmd_verify(const std::string& what, const Options& o) {
  auto g = group_of(o);
  SuiteOptions opt = suite_options(caps_of(o));
  if (what == "mackey")
    return with_functor(o.functor, g, o, [&](const auto& f) { return emit(check_mackey(f, opt), o); });
  if (what == "tambara")
    return with_functor(o.functor, g, o, [&](const auto& f) -> int {
      if constexpr (Tambara<std::decay_t<decltype(f)>>) return emit(check_tambara(f, opt), o);
      else throw BadArgs("functor '" + o.functor + "' has no Tambara structure");
    });
  if (what == "phi-psi") return emit(check_phi_psi(phi_psi(Burnside(g, caps_of(o)), parse_monoid(g, o.monoid), caps_of(o)), opt), o);
  if (what == "hopf") return cmd_hopf(o);
  if (what == "grouplike") return cmd_grouplike(o);
  if (what == "unit") {
    Burnside omega(g, caps_of(o));
    TensorProduct<Burnside, Burnside> oo(omega, omega, caps_of(o));
    auto [fwd, back] = unit_iso(oo);
    Report r = check_tambara_morphism(fwd, opt);
    r.merge(check_tambara_morphism(back, opt), "inverse/");
    return emit(r, o);
  }
  if (what == "lift") {
    std::mt19937 rng(1);
    return with_functor(o.functor, g, o, [&](const auto& f) -> int {
      using F = std::decay_t<decltype(f)>;
      if constexpr (tensorable<F>) {
        TensorProduct<Burnside, F> ts(Burnside(g, caps_of(o)), f, caps_of(o));
        return emit(check_lift_independence(ts, 100, rng, opt), o);
      } else {
        throw BadArgs("functor has no presentation");
      }
    });
  }
  throw BadArgs("unknown suite '" + what + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite G-sets, Mackey and Tambara functors"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* c) {
    c->add_option("--group", o.group, "group preset or JSON table");
    c->add_option("--monoid", o.monoid, "G-monoid preset or JSON table");
    c->add_option("--functor", o.functor, "omega, semiring, omega-additive, fixpt[:Q], dress[:Q], tambarize[:Q], zero");
    c->add_option("--cap-sections", o.cap_sections, "maximum points of a dependent product");
    c->add_option("--cap-degree", o.cap_degree, "degree cap for infinite levels");
    c->add_option("--budget", o.budget, "maximum checks per suite");
    c->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    c->add_option("--level,--base", o.level, "orbit G/H: e, G, a subgroup label or class index");
  };

  auto* group = app.add_subcommand("group", "group catalog");
  group->require_subcommand(1);
  auto* glist = group->add_subcommand("list", "list presets");
  auto* gshow = group->add_subcommand("show", "subgroup classes of a group");
  gshow->add_option("preset,--group", o.group, "group preset or JSON table");
  gshow->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* mackey = app.add_subcommand("mackey", "Mackey functor checks");
  mackey->require_subcommand(1);
  auto* mcheck = mackey->add_subcommand("check", "run the Mackey axiom suite");
  common(mcheck);

  auto* tambara = app.add_subcommand("tambara", "Burnside Tambara functor");
  tambara->require_subcommand(1);
  auto* ttable = tambara->add_subcommand("table", "multiplication table of a level");
  common(ttable);
  auto* tnorm = tambara->add_subcommand("norm", "norm along a map between orbits");
  common(tnorm);
  tnorm->add_option("--from", o.from, "source orbit");
  tnorm->add_option("--to", o.to, "target orbit");
  tnorm->add_option("--map", o.map_index, "index among the maps between the orbits");
  tnorm->add_option("--elem", o.elem, "element as JSON");

  auto* dress = app.add_subcommand("dress", "Dress construction of the Burnside functor");
  common(dress);

  auto* tambarize = app.add_subcommand("tambarize", "Tambarization basis and table");
  common(tambarize);
  tambarize->add_flag("--table", o.table, "print the multiplication table");

  auto* hopf = app.add_subcommand("hopf", "Hopf structure of the Tambarization of a fixed point functor");
  hopf->require_subcommand(1);
  auto* hcheck = hopf->add_subcommand("check", "coassociativity, counit and antipode laws");
  common(hcheck);

  auto* grouplike = app.add_subcommand("grouplike", "group-like elements");
  grouplike->require_subcommand(1);
  auto* glcheck = grouplike->add_subcommand("check", "test an element, or the closure of unit images");
  common(glcheck);
  glcheck->add_option("--elem", o.elem, "element as JSON");

  auto* tensor = app.add_subcommand("tensor", "tensor products over the Burnside functor");
  tensor->require_subcommand(1);
  auto* tlevel = tensor->add_subcommand("level", "rank and torsion of a level");
  common(tlevel);
  tlevel->add_option("--left", o.left, "left factor");
  tlevel->add_option("--right", o.right, "right factor");

  auto* verify = app.add_subcommand("verify", "verification suites");
  std::string suite;
  verify->add_option("suite", suite, "mackey, tambara, phi-psi, hopf, grouplike, unit, lift")->required();
  common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (glist->parsed()) return cmd_group_list();
    if (gshow->parsed()) return cmd_group_show(o);
    if (mcheck->parsed()) return cmd_verify("mackey", o);
    if (ttable->parsed()) return cmd_tambara_table(o);
    if (tnorm->parsed()) return cmd_tambara_norm(o);
    if (dress->parsed()) return cmd_dress(o);
    if (tambarize->parsed()) return cmd_tambarize(o);
    if (hcheck->parsed()) return cmd_hopf(o);
    if (glcheck->parsed()) return cmd_grouplike(o);
    if (tlevel->parsed()) return cmd_tensor_level(o);
    if (verify->parsed()) return cmd_verify(suite, o);
  } catch (const BadArgs& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: bad JSON: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
