#pragma once

// JSON formats:
//   group    {"name": s, "order": n, "mul": [[...], ...]}
//   G-set    {"group": s, "size": m, "act": [[...] per group element]}
//   G-map    {"src": G-set, "dst": G-set, "fn": [...]}
//   monoid   {"name": s, "op": [[...], ...], "unit": u, "act": [[...] per group element]}
//            ("act" may be omitted for the trivial action, "unit" defaults to 0)
//   Omega    [{"point": x, "stabilizer": [g...], "coef": c}, ...]
//   Omega[M] [{"point": x, "stabilizer": [g...], "m": <M element on G/K>, "coef": c}, ...]

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tambara/burnside.hpp"
#include "tambara/gsets.hpp"
#include "tambara/mackey.hpp"
#include "tambara/tambarization.hpp"

namespace tambara {

using nlohmann::json;

inline json group_to_json(const FiniteGroup& g) {
  json mul = json::array();
  for (int a = 0; a < g.order(); ++a) {
    json row = json::array();
    for (int b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    mul.push_back(row);
  }
  return json{{"name", g.name()}, {"order", g.order()}, {"mul", mul}};
}

inline GroupPtr group_from_json(const json& j) {
  const int n = j.at("order").get<int>();
  const auto& rows = j.at("mul");
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("group table needs order rows");
  std::vector<int> mul;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("group table rows need order entries");
    for (const auto& v : row) mul.push_back(v.get<int>());
  }
  return make_group_from_table(j.value("name", std::string("G")), n, std::move(mul));
}

inline json action_to_json(const GSet& x) {
  json act = json::array();
  for (int g = 0; g < x.group().order(); ++g) {
    json row = json::array();
    for (int p = 0; p < x.size(); ++p) row.push_back(x.act(g, p));
    act.push_back(row);
  }
  return act;
}

inline std::vector<int> action_from_json(const json& act, int order, int size) {
  if (!act.is_array() || act.size() != static_cast<std::size_t>(order)) throw std::invalid_argument("action needs one row per group element");
  std::vector<int> out;
  for (const auto& row : act) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(size)) throw std::invalid_argument("action row has wrong length");
    for (const auto& v : row) out.push_back(v.get<int>());
  }
  return out;
}

inline json gset_to_json(const GSet& x) { return json{{"group", x.group().name()}, {"size", x.size()}, {"act", action_to_json(x)}}; }

inline GSet gset_from_json(const GroupPtr& g, const json& j) {
  const int n = j.at("size").get<int>();
  return make_gset(g, n, action_from_json(j.at("act"), g->order(), n));
}

inline json gmap_to_json(const GMap& f) { return json{{"src", gset_to_json(f.src)}, {"dst", gset_to_json(f.dst)}, {"fn", f.fn}}; }

inline GMap gmap_from_json(const GroupPtr& g, const json& j) {
  return make_gmap(gset_from_json(g, j.at("src")), gset_from_json(g, j.at("dst")), j.at("fn").get<std::vector<int>>());
}

inline json monoid_to_json(const GMonoid& q) {
  json op = json::array();
  for (int a = 0; a < q.size(); ++a) {
    json row = json::array();
    for (int b = 0; b < q.size(); ++b) row.push_back(q.mul(a, b));
    op.push_back(row);
  }
  return json{{"name", q.name}, {"op", op}, {"unit", q.unit}, {"act", action_to_json(q.carrier)}};
}

inline GMonoid monoid_from_json(const GroupPtr& g, const json& j) {
  const auto& rows = j.at("op");
  const int n = static_cast<int>(rows.size());
  std::vector<int> op;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("monoid table must be square");
    for (const auto& v : row) op.push_back(v.get<int>());
  }
  GSet carrier = j.contains("act") ? make_gset(g, n, action_from_json(j.at("act"), g->order(), n)) : trivial_action(g, n);
  return make_monoid(j.value("name", std::string("Q")), std::move(carrier), std::move(op), j.value("unit", 0));
}

/// A preset name or a JSON table.
inline GMonoid parse_monoid(const GroupPtr& g, const std::string& text) {
  if (!text.empty() && text.front() == '{') return monoid_from_json(g, json::parse(text));
  return make_monoid_preset(g, text);
}

/// The key of G/K -> X, gK |-> g x; K must fix x.
inline OrbitKey orbit_key_from_json(const GSet& x, const json& j) {
  const FiniteGroup& g = x.group();
  const int p = j.at("point").get<int>();
  if (p < 0 || p >= x.size()) throw std::invalid_argument("point out of range");
  SubgroupMask mask = 0;
  for (const auto& e : j.at("stabilizer")) {
    int v = e.get<int>();
    if (v < 0 || v >= g.order()) throw std::invalid_argument("group element out of range");
    mask |= SubgroupMask(1) << v;
  }
  const SubgroupId k = g.subgroup_id(mask);
  if (!g.is_subgroup_of(k, x.stabilizer(p))) throw std::invalid_argument("subgroup does not fix the point");
  return OrbitKey{p, k};
}

inline json orbit_key_to_json(const GSet& x, const OrbitKey& k) {
  return json{{"point", k.base}, {"stabilizer", x.group().elements(k.sub)}};
}

inline BurnsideElement burnside_from_json(const GSet& x, const json& j) {
  BurnsideElement out;
  for (const auto& t : j) {
    OrbitKey k = orbit_key_from_json(x, t);
    out += element_of(realize(x, k)).scaled(t.value("coef", Coef(1)));
  }
  return out;
}

inline json burnside_to_json(const GSet& x, const BurnsideElement& a) {
  json out = json::array();
  for (const auto& [k, c] : a.terms()) {
    json t = orbit_key_to_json(x, k);
    t["coef"] = c;
    out.push_back(t);
  }
  return out;
}

/// Omega[P_Q] elements, with m listed on the cosets of K in coset-table order.
inline Tambarization<FixedPoint>::Element tambarization_from_json(const Tambarization<FixedPoint>& t, const GSet& x, const json& j) {
  Tambarization<FixedPoint>::Element out;
  for (const auto& term : j) {
    OrbitKey k = orbit_key_from_json(x, term);
    GMap r = realize(x, k);
    auto m = term.at("m").get<std::vector<int>>();
    if (m.size() != static_cast<std::size_t>(r.src.size())) throw std::invalid_argument("m has the wrong number of values");
    const GMonoid& q = t.inner().monoid();
    for (int v : m)
      if (v < 0 || v >= q.size()) throw std::invalid_argument("m takes a value outside the monoid");
    if (!GMap{r.src, q.carrier, m}.is_equivariant()) throw std::invalid_argument("m is not equivariant");
    out += t.decompose(r, m).scaled(term.value("coef", Coef(1)));
  }
  return out;
}

inline json tambarization_to_json(const GSet& x, const Tambarization<FixedPoint>::Element& e) {
  json out = json::array();
  for (const auto& [k, c] : e.terms()) {
    json t = orbit_key_to_json(x, k.key);
    t["m"] = k.m;
    t["coef"] = c;
    out.push_back(t);
  }
  return out;
}

inline json coords_to_json(const std::vector<Int>& c) {
  json out = json::array();
  for (const auto& v : c) out.push_back(v.str());
  return out;
}

}  // namespace tambara
