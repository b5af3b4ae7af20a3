#pragma once

// The Burnside Tambara functor: X -> Grothendieck ring of G-sets over X,
// with restriction by pullback, transfer by composition, product by fiber
// product and norm by the dependent product. Also the semi-ring variant with
// natural coefficients and the mark (fixed-point count) homomorphism.

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "tambara/config.hpp"
#include "tambara/formal_sum.hpp"
#include "tambara/gsets.hpp"
#include "tambara/zlin.hpp"

namespace tambara {

using BurnsideElement = FormalSum<OrbitKey>;

/// The class of an object p: A -> X.
inline BurnsideElement element_of(const GMap& p) {
  BurnsideElement out;
  for (int o = 0; o < p.src.num_orbits(); ++o) out.add_term(orbit_key(p, p.src.orbit_rep(o)), 1);
  return out;
}

/// An object over X realizing a nonnegative element.
inline GMap realize_positive(const GSet& x, const BurnsideElement& a) {
  if (!a.is_nonnegative()) throw std::invalid_argument("realize_positive: negative coefficient");
  std::vector<GSet> parts;
  std::vector<GMap> maps;
  for (const auto& [k, c] : a.terms())
    for (Coef i = 0; i < c; ++i) {
      GMap r = realize(x, k);
      parts.push_back(r.src);
      maps.push_back(std::move(r));
    }
  if (parts.empty()) return GMap{empty_set(x.group_ptr()), x, {}};
  return copair(coproduct(x.group_ptr(), parts), maps);
}

inline std::string show_orbit_key(const GSet& x, const OrbitKey& k) {
  const FiniteGroup& g = x.group();
  return "[" + g.name() + "/" + subgroup_label(g, k.sub) + "->" + std::to_string(k.base) + "]";
}

template <class Key, class ShowKey>
std::string show_sum(const FormalSum<Key>& a, ShowKey show_key) {
  if (a.is_zero()) return "0";
  std::string s;
  for (const auto& [k, c] : a.terms()) {
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    Coef m = c < 0 ? -c : c;
    if (m != 1) s += std::to_string(m) + "*";
    s += show_key(k);
  }
  return s;
}

/// Number of points of the standard realization of `k` over x fixed by K.
inline Int fixed_points_over(const GSet& X, const OrbitKey& k, int x, SubgroupId kk) {
  const FiniteGroup& g = X.group();
  const CosetTable& t = g.cosets(k.sub);
  Int n = 0;
  for (int i = 0; i < t.size; ++i) {
    int gam = t.rep[i];
    if (X.act(gam, k.base) != x) continue;
    if (g.is_subgroup_of(g.conjugate(g.inv(gam), kk), k.sub)) ++n;
  }
  return n;
}

/// Mark of an element at (x, K): points over x fixed by K, counted with sign.
inline Int mark(const GSet& X, const BurnsideElement& a, int x, SubgroupId kk) {
  Int n = 0;
  for (const auto& [k, c] : a.terms())
    if (X.orbit_of(k.base) == X.orbit_of(x)) n += Int(c) * fixed_points_over(X, k, x, kk);
  return n;
}

/// Recovers an element of the Burnside ring over Y from its marks at orbit
/// representatives; `marks(y0, K)` must be given for canonical K <= G_{y0}.
template <class MarkFn>
BurnsideElement element_from_marks(const GSet& Y, MarkFn marks) {
  const FiniteGroup& g = Y.group();
  BurnsideElement out;
  for (int o = 0; o < Y.num_orbits(); ++o) {
    const int y0 = Y.orbit_rep(o);
    const SubgroupId s = Y.stabilizer(y0);
    std::vector<SubgroupId> subs;
    for (int h = 0; h < g.num_subgroups(); ++h)
      if (g.is_subgroup_of(h, s) && g.canonical_within(h, s) == h) subs.push_back(h);
    std::reverse(subs.begin(), subs.end());  // largest first
    std::vector<Int> coef(subs.size());
    for (std::size_t i = 0; i < subs.size(); ++i) {
      Int v = marks(y0, subs[i]);
      for (std::size_t j = 0; j < i; ++j)
        if (coef[j] != 0) v -= coef[j] * fixed_points_over(Y, OrbitKey{y0, subs[j]}, y0, subs[i]);
      Int d = fixed_points_over(Y, OrbitKey{y0, subs[i]}, y0, subs[i]);
      if (v % d != 0) throw std::logic_error("marks are not those of a virtual G-set");
      coef[i] = v / d;
      out.add_term(OrbitKey{y0, subs[i]}, to_i64(coef[i]));
    }
  }
  return out;
}

/// Norm along f computed on marks: the mark of N_f(a) at (y, K) is the
/// product over K-orbits of f^{-1}(y) of the mark of a at (x, K meet G_x).
inline BurnsideElement norm_by_marks(const GMap& f, const BurnsideElement& a) {
  const GSet& X = f.src;
  const GSet& Y = f.dst;
  const FiniteGroup& g = X.group();
  return element_from_marks(Y, [&](int y0, SubgroupId kk) {
    Int prod = 1;
    std::vector<char> seen(X.size(), 0);
    for (int x = 0; x < X.size(); ++x) {
      if (f.fn[x] != y0 || seen[x]) continue;
      for (int k : g.elements(kk)) seen[X.act(k, x)] = 1;
      prod *= mark(X, a, x, g.intersect(kk, X.stabilizer(x)));
      if (prod == 0) break;
    }
    return prod;
  });
}

class Burnside {
 public:
  using Element = BurnsideElement;

  explicit Burnside(GroupPtr g, Caps caps = {}) : g_(std::move(g)), caps_(caps) {}

  std::string name() const { return "omega"; }
  const GroupPtr& group() const { return g_; }
  const Caps& caps() const { return caps_; }

  Element zero(const GSet&) const { return {}; }
  Element add(const GSet&, const Element& a, const Element& b) const { return a + b; }
  Element negate(const GSet&, const Element& a) const { return a.negated(); }
  Element one(const GSet& x) const { return element_of(identity_map(x)); }

  Element restrict(const GMap& f, const Element& b) const {
    Element out;
    for (const auto& [k, c] : b.terms()) {
      PullbackData pb = pullback(f, realize(f.dst, k));
      out += element_of(pb.proj1).scaled(c);
    }
    return out;
  }

  Element transfer(const GMap& f, const Element& a) const {
    Element out;
    for (const auto& [k, c] : a.terms()) out += element_of(compose(f, realize(f.src, k))).scaled(c);
    return out;
  }

  Element mul(const GSet& x, const Element& a, const Element& b) const {
    Element out;
    for (const auto& [k1, c1] : a.terms()) {
      GMap r1 = realize(x, k1);
      for (const auto& [k2, c2] : b.terms()) {
        PullbackData pb = pullback(r1, realize(x, k2));
        out += element_of(compose(r1, pb.proj1)).scaled(checked_mul(c1, c2));
      }
    }
    return out;
  }

  /// Nonnegative elements go through one dependent product of the combined
  /// object; virtual elements through marks.
  Element norm(const GMap& f, const Element& a) const {
    if (a.is_nonnegative()) return norm_positive(f, a);
    return norm_by_marks(f, a);
  }

  Element norm_positive(const GMap& f, const Element& a) const {
    ExponentialData ex = dependent_product(f, realize_positive(f.src, a), caps_.sections);
    return element_of(ex.pi);
  }

  std::vector<Element> basis(const GSet& x) const {
    std::vector<Element> out;
    for (const auto& k : orbit_objects(x)) out.push_back(Element::single(k));
    return out;
  }

  std::vector<Element> elements(const GSet& x, std::size_t limit) const {
    std::vector<Element> out{Element{}};
    auto b = basis(x);
    for (const auto& e : b) out.push_back(e);
    if (!b.empty()) {
      out.push_back(b.front().negated());
      out.push_back(b.back().scaled(2) - b.front());
    }
    for (std::size_t i = 0; i + 1 < b.size(); ++i) out.push_back(b[i] + b[i + 1]);
    for (std::size_t i = 0; i + 1 < b.size(); ++i) out.push_back(b[i + 1] - b[i]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.size() > limit) out.resize(limit);
    return out;
  }

  // Presentation: free on orbit objects.
  std::vector<Element> generators(const GSet& x) const { return basis(x); }
  IntMatrix relations(const GSet& x) const { return IntMatrix(orbit_objects(x).size(), 0); }
  std::vector<Int> coords(const GSet& x, const Element& a) const {
    auto keys = orbit_objects(x);
    std::vector<Int> c(keys.size());
    for (const auto& [k, v] : a.terms()) {
      auto it = std::lower_bound(keys.begin(), keys.end(), k);
      if (it == keys.end() || !(*it == k)) throw std::logic_error("element key is not an orbit object of its level");
      c[it - keys.begin()] = v;
    }
    return c;
  }
  Element from_coords(const GSet& x, const std::vector<Int>& c) const {
    auto keys = orbit_objects(x);
    Element out;
    for (std::size_t i = 0; i < keys.size(); ++i) out.add_term(keys[i], to_i64(c[i]));
    return out;
  }

  std::string show(const GSet& x, const Element& a) const {
    return show_sum(a, [&](const OrbitKey& k) { return show_orbit_key(x, k); });
  }

 private:
  GroupPtr g_;
  Caps caps_;
};

/// Total number of points of the object an element describes.
inline Coef degree(const GSet& x, const BurnsideElement& a) {
  const FiniteGroup& g = x.group();
  Coef d = 0;
  for (const auto& [k, c] : a.terms()) d = checked_add(d, checked_mul(c, g.order() / g.subgroup_order(k.sub)));
  return d;
}

/// The additive Burnside semi-ring functor: natural coefficients only.
class BurnsideSemiring {
 public:
  using Element = BurnsideElement;

  explicit BurnsideSemiring(GroupPtr g, Caps caps = {}) : omega_(std::move(g), caps) {}

  std::string name() const { return "semiring"; }
  const GroupPtr& group() const { return omega_.group(); }
  const Caps& caps() const { return omega_.caps(); }
  int degree_cap() const { return omega_.caps().degree; }

  Element zero(const GSet& x) const { return omega_.zero(x); }
  Element add(const GSet& x, const Element& a, const Element& b) const { return omega_.add(x, a, b); }
  Element restrict(const GMap& f, const Element& b) const { return omega_.restrict(f, b); }
  Element transfer(const GMap& f, const Element& a) const { return omega_.transfer(f, a); }

  /// The class of (G/G -> G/G).
  Element indeterminate() const {
    GSet pt = point_set(group());
    return element_of(identity_map(pt));
  }

  /// Every element of degree at most `max_degree`, in a fixed order.
  std::vector<Element> enumerate(const GSet& x, int max_degree) const {
    const FiniteGroup& g = x.group();
    auto keys = orbit_objects(x);
    std::vector<Element> out;
    Element cur;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int budget) {
      if (i == keys.size()) {
        out.push_back(cur);
        return;
      }
      const int sz = g.order() / g.subgroup_order(keys[i].sub);
      for (int n = 0; n * sz <= budget; ++n) {
        Element saved = cur;
        cur.add_term(keys[i], n);
        rec(i + 1, budget - n * sz);
        cur = saved;
      }
    };
    rec(0, max_degree);
    std::sort(out.begin(), out.end());
    return out;
  }
  std::vector<Element> enumerate(const GSet& x) const { return enumerate(x, degree_cap()); }

  std::vector<Element> elements(const GSet& x, std::size_t limit) const {
    auto all = enumerate(x, std::min(degree_cap(), 2 * x.group().order()));
    // Keep the low-degree elements first.
    std::stable_sort(all.begin(), all.end(), [&](const Element& a, const Element& b) { return degree(x, a) < degree(x, b); });
    if (all.size() > limit) all.resize(limit);
    return all;
  }

  std::string show(const GSet& x, const Element& a) const { return omega_.show(x, a); }

 private:
  Burnside omega_;
};

/// The additive Burnside functor with levels enumerated up to a degree:
/// every virtual element whose orbits, counted with |coefficient|, have at
/// most `degree` points.
class AdditiveBurnside {
 public:
  using Element = BurnsideElement;

  explicit AdditiveBurnside(GroupPtr g, Caps caps = {}) : omega_(std::move(g), caps) {}

  std::string name() const { return "omega-additive"; }
  const GroupPtr& group() const { return omega_.group(); }
  const Caps& caps() const { return omega_.caps(); }

  Element zero(const GSet& x) const { return omega_.zero(x); }
  Element add(const GSet& x, const Element& a, const Element& b) const { return omega_.add(x, a, b); }
  Element negate(const GSet& x, const Element& a) const { return omega_.negate(x, a); }
  Element restrict(const GMap& f, const Element& b) const { return omega_.restrict(f, b); }
  Element transfer(const GMap& f, const Element& a) const { return omega_.transfer(f, a); }

  std::vector<Element> enumerate(const GSet& x, int max_degree) const {
    const FiniteGroup& g = x.group();
    auto keys = orbit_objects(x);
    std::vector<Element> out;
    Element cur;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int budget) {
      if (i == keys.size()) {
        out.push_back(cur);
        return;
      }
      const int sz = g.order() / g.subgroup_order(keys[i].sub);
      for (int n = -(budget / sz); n * sz <= budget; ++n) {
        Element saved = cur;
        cur.add_term(keys[i], n);
        rec(i + 1, budget - (n < 0 ? -n : n) * sz);
        cur = saved;
      }
    };
    rec(0, max_degree);
    std::sort(out.begin(), out.end());
    return out;
  }
  std::vector<Element> enumerate(const GSet& x) const { return enumerate(x, omega_.caps().degree); }
  std::vector<Element> elements(const GSet& x, std::size_t limit) const { return omega_.elements(x, limit); }

  std::vector<Element> generators(const GSet& x) const { return omega_.generators(x); }
  IntMatrix relations(const GSet& x) const { return omega_.relations(x); }
  std::vector<Int> coords(const GSet& x, const Element& a) const { return omega_.coords(x, a); }

  std::string show(const GSet& x, const Element& a) const { return omega_.show(x, a); }

 private:
  Burnside omega_;
};

}  // namespace tambara
