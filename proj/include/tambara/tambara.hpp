#pragma once

// Tambara functors: a Mackey functor T with levelwise commutative rings and
// norms. A Tambara functor type adds one(X), mul(X,a,b) and norm(f,a) to the
// Mackey interface.

#include <string>
#include <utility>
#include <vector>

#include "tambara/burnside.hpp"
#include "tambara/mackey.hpp"

namespace tambara {

template <class T>
concept Tambara = Mackey<T> && requires(const T& t, const GSet& x, const GMap& f, const typename T::Element& e) {
  { t.one(x) } -> std::same_as<typename T::Element>;
  { t.mul(x, e, e) } -> std::same_as<typename T::Element>;
  { t.norm(f, e) } -> std::same_as<typename T::Element>;
};

/// The multiplicative semi-Mackey functor: products as addition and norms
/// as transfers.
template <Tambara T>
class MultiplicativePart {
 public:
  using Element = typename T::Element;

  explicit MultiplicativePart(T t) : t_(std::move(t)) {}

  std::string name() const { return "mult(" + t_.name() + ")"; }
  const GroupPtr& group() const { return t_.group(); }
  const T& base() const { return t_; }

  Element zero(const GSet& x) const { return t_.one(x); }
  Element add(const GSet& x, const Element& a, const Element& b) const { return t_.mul(x, a, b); }
  Element restrict(const GMap& f, const Element& b) const { return t_.restrict(f, b); }
  Element transfer(const GMap& f, const Element& a) const { return t_.norm(f, a); }
  std::vector<Element> elements(const GSet& x, std::size_t limit) const { return t_.elements(x, limit); }
  std::string show(const GSet& x, const Element& e) const { return t_.show(x, e); }

 private:
  T t_;
};

/// N_f reduced to maps between single orbits: a sum of transfers over the
/// orbits of Y, a product over the orbits of X in each fiber, and a
/// restriction when f is invertible. leaf handles the remaining maps.
template <class T, class Leaf>
typename T::Element split_norm(const T& t, const GMap& f, const typename T::Element& a, const Leaf& leaf) {
  const GSet& X = f.src;
  const GSet& Y = f.dst;
  if (Y.num_orbits() > 1) {
    auto acc = t.zero(Y);
    for (int o = 0; o < Y.num_orbits(); ++o) {
      std::vector<char> in_y(Y.size()), in_x(X.size());
      for (int y = 0; y < Y.size(); ++y) in_y[y] = Y.orbit_of(y) == o;
      for (int x = 0; x < X.size(); ++x) in_x[x] = in_y[f.fn[x]];
      auto [yo, iy] = sub_gset(Y, in_y);
      auto [xo, ix] = sub_gset(X, in_x);
      std::vector<int> idx(Y.size(), -1);
      for (int j = 0; j < yo.size(); ++j) idx[iy.fn[j]] = j;
      std::vector<int> fn(xo.size());
      for (int i = 0; i < xo.size(); ++i) fn[i] = idx[f.fn[ix.fn[i]]];
      acc = t.add(Y, acc, t.transfer(iy, split_norm(t, GMap{xo, yo, std::move(fn)}, t.restrict(ix, a), leaf)));
    }
    return acc;
  }
  if (X.num_orbits() > 1) {
    auto acc = t.one(Y);
    for (int o = 0; o < X.num_orbits(); ++o) {
      std::vector<char> in_x(X.size());
      for (int x = 0; x < X.size(); ++x) in_x[x] = X.orbit_of(x) == o;
      auto [xo, ix] = sub_gset(X, in_x);
      acc = t.mul(Y, acc, split_norm(t, compose(f, ix), t.restrict(ix, a), leaf));
    }
    return acc;
  }
  if (X.size() == 0) return t.one(Y);
  if (X.size() == Y.size()) return t.restrict(inverse_map(f), a);
  return leaf(f, a);
}

/// Norm of pos - neg from norms of nonnegative elements. With the fold
/// D = X + X -> X and c = (pos - neg, neg) in T(D), the distributive law on
/// the exponential diagram of (f, fold) splits N_f(pos) into N_f(pos - neg)
/// (the sections that stay in the first copy) and a transfer from the other
/// sections, whose norms involve strictly smaller fibers.
template <class T>
typename T::Element norm_by_completion(const T& t, const GMap& f, const typename T::Element& pos,
                                       const typename T::Element& neg, std::size_t cap = kDefaultSectionCap) {
  const GSet& X = f.src;
  const GSet& Y = f.dst;
  if (neg == t.zero(X)) return t.norm_positive(f, pos);
  std::vector<int> fiber(Y.size(), 0);
  int max_fiber = 0;
  for (int x = 0; x < X.size(); ++x) max_fiber = std::max(max_fiber, ++fiber[f.fn[x]]);
  if (max_fiber == 0) return t.one(Y);

  const auto x_elem = t.add(X, pos, t.negate(X, neg));
  Coproduct d = coproduct(X, X);
  GMap fold = copair(d, {identity_map(X), identity_map(X)});
  ExponentialData ex = dependent_product(f, fold, cap);

  const int nx = X.size();
  std::vector<char> in_r(ex.pi_f_a.size(), 0);
  for (int i = 0; i < ex.pi_f_a.size(); ++i)
    for (int a : ex.section(i))
      if (a >= nx) in_r[i] = 1;
  auto [pr, inc_r] = sub_gset(ex.pi_f_a, in_r);
  std::vector<int> idx_r(ex.pi_f_a.size(), -1);
  for (int j = 0; j < pr.size(); ++j) idx_r[inc_r.fn[j]] = j;

  const GSet& Z = ex.fiber_product;
  std::vector<char> m0(Z.size(), 0), m1(Z.size(), 0);
  for (int z = 0; z < Z.size(); ++z) {
    if (!in_r[ex.fprime.fn[z]]) continue;
    (ex.e.fn[z] < nx ? m0 : m1)[z] = 1;
  }
  auto [z0, inc0] = sub_gset(Z, m0);
  auto [z1, inc1] = sub_gset(Z, m1);
  auto leg = [&](const GSet& zs, const GMap& inc) {
    std::vector<int> to_pi(zs.size()), to_x(zs.size());
    for (int i = 0; i < zs.size(); ++i) {
      to_pi[i] = idx_r[ex.fprime.fn[inc.fn[i]]];
      to_x[i] = ex.proj_x.fn[inc.fn[i]];
    }
    return std::make_pair(GMap{zs, pr, std::move(to_pi)}, GMap{zs, X, std::move(to_x)});
  };
  auto [f0, x0] = leg(z0, inc0);
  auto [f1, x1] = leg(z1, inc1);
  auto r = t.mul(pr, t.norm(f0, t.restrict(x0, x_elem)), t.norm_positive(f1, t.restrict(x1, neg)));
  auto correction = t.transfer(compose(ex.pi, inc_r), r);
  return t.add(Y, t.norm_positive(f, pos), t.negate(Y, correction));
}

/// The unique morphism from the Burnside functor: (A -p-> X) |-> T_+(p)(1).
template <Tambara T>
Morphism<Burnside, T> initial_morphism(const T& t) {
  auto comp = [t](const GSet& x, const BurnsideElement& e) {
    typename T::Element acc = t.zero(x);
    for (const auto& [k, c] : e.terms()) {
      GMap p = realize(x, k);
      acc = t.add(x, acc, scale(t, x, t.transfer(p, t.one(p.src)), c));
    }
    return acc;
  };
  return make_morphism<Burnside, T>(Burnside(t.group()), t, comp, "initial->" + t.name());
}

template <Tambara T>
Report check_tambara(const T& t, const SuiteOptions& opt) {
  Report rep;
  rep.suite = "tambara:" + t.name() + "@" + t.group()->name();
  rep.merge(check_mackey(t, opt, "additive"), "additive/");
  rep.merge(check_mackey(MultiplicativePart<T>(t), opt, "multiplicative"), "multiplicative/");

  CheckRun run("ring", opt.budget);
  const GroupPtr& g = t.group();
  const std::size_t few = std::min<std::size_t>(opt.elements_per_level, 5);
  for (const auto& x : test_levels(g, opt.two_orbit_levels)) {
    if (run.exhausted()) break;
    auto es = t.elements(x, opt.elements_per_level);
    auto show = [&](const typename T::Element& e) { return t.show(x, e); };
    detail::guarded(run, "ring-unit", [&] {
      for (const auto& a : es) {
        run.expect("ring-unit", t.mul(x, t.one(x), a) == a, [&] { return "at " + describe(x) + " on " + show(a); });
        run.expect("ring-negation", t.add(x, a, t.negate(x, a)) == t.zero(x), [&] { return "at " + describe(x) + " on " + show(a); });
      }
    });
    detail::guarded(run, "ring-commutative", [&] {
      for (const auto& a : es)
        for (const auto& b : es)
          run.expect("ring-commutative", t.mul(x, a, b) == t.mul(x, b, a),
                     [&] { return "at " + describe(x) + " on " + show(a) + ", " + show(b); });
    });
    detail::guarded(run, "ring-associative", [&] {
      for (std::size_t i = 0; i < std::min(few, es.size()); ++i)
        for (std::size_t j = 0; j < std::min(few, es.size()); ++j)
          for (std::size_t k = 0; k < std::min(few, es.size()); ++k) {
            const auto &a = es[i], &b = es[j], &c = es[k];
            run.expect("ring-associative", t.mul(x, t.mul(x, a, b), c) == t.mul(x, a, t.mul(x, b, c)),
                       [&] { return "at " + describe(x) + " on " + show(a) + ", " + show(b) + ", " + show(c); });
            run.expect("ring-distributive", t.mul(x, a, t.add(x, b, c)) == t.add(x, t.mul(x, a, b), t.mul(x, a, c)),
                       [&] { return "at " + describe(x) + " on " + show(a) + ", " + show(b) + ", " + show(c); });
          }
    });
  }

  // Distributive law on the canonical exponential diagram of f: X -> Y
  // between orbits and p: A -> X.
  const auto orbits = orbit_levels(g);
  const auto sources = test_levels(g, opt.two_orbit_levels);
  for (const auto& y : orbits)
    for (const auto& x : orbits) {
      if (run.exhausted()) break;
      for (const auto& f : all_gmaps(x, y))
        for (const auto& a : sources) {
          if (static_cast<std::size_t>(a.size()) > opt.max_exponent_points) continue;
          for (const auto& p : all_gmaps(a, x)) {
            detail::guarded(run, "distributive-law", [&] {
              ExponentialData ex = dependent_product(f, p);
              for (const auto& e : t.elements(a, opt.elements_per_level)) {
                auto lhs = t.norm(f, t.transfer(p, e));
                auto rhs = t.transfer(ex.pi, t.norm(ex.fprime, t.restrict(ex.e, e)));
                run.expect("distributive-law", lhs == rhs, [&] {
                  return "diagram f=" + describe(f) + " p=" + describe(p) + " on " + t.show(a, e) + ": " + t.show(y, lhs) +
                         " vs " + t.show(y, rhs);
                });
              }
            });
          }
        }
    }
  rep.merge(run.finish(), "");
  return rep;
}

template <Tambara S, Tambara T>
Report check_tambara_morphism(const Morphism<S, T>& phi, const SuiteOptions& opt) {
  Report rep = check_mackey_morphism(phi, opt);
  rep.suite = "tambara-morphism:" + phi.name;
  CheckRun run("multiplicative", opt.budget);
  const S& s = phi.src;
  const T& t = phi.dst;
  MapFamily fam = generating_maps(s.group(), opt.two_orbit_levels);
  for (const auto& x : fam.levels) {
    auto es = s.elements(x, opt.elements_per_level);
    detail::guarded(run, "multiplicative", [&] {
      run.expect("multiplicative", phi(x, s.one(x)) == t.one(x), [&] { return "unit at " + describe(x); });
      for (const auto& a : es)
        for (const auto& b : es)
          run.expect("multiplicative", phi(x, s.mul(x, a, b)) == t.mul(x, phi(x, a), phi(x, b)),
                     [&] { return "at " + describe(x) + " on " + s.show(x, a) + " and " + s.show(x, b); });
    });
  }
  for (std::size_t k = 0; k < fam.targets.size() && !run.exhausted(); ++k) {
    const GSet& c = fam.targets[k];
    for (const auto& f : fam.into[k]) {
      detail::guarded(run, "natural-norm", [&] {
        for (const auto& a : s.elements(f.src, opt.elements_per_level))
          run.expect("natural-norm", phi(c, s.norm(f, a)) == t.norm(f, phi(f.src, a)),
                     [&] { return detail::witness_map(s, f, f.src, a); });
      });
    }
  }
  rep.merge(run.finish(), "");
  return rep;
}

// ---------------------------------------------------------------------------
// Fault injection

enum class StructureMap { restrict, transfer, norm, mul };

inline std::string to_string(StructureMap m) {
  switch (m) {
    case StructureMap::restrict: return "restrict";
    case StructureMap::transfer: return "transfer";
    case StructureMap::norm: return "norm";
    case StructureMap::mul: return "mul";
  }
  return "?";
}

/// F with a single entry of one structure map replaced: the output for
/// (map, input) becomes another element of the target level. For mul the
/// trigger is the level map.src with first factor `input`.
template <class F>
class Corrupted : public F {
 public:
  using Element = typename F::Element;

  Corrupted(F base, StructureMap which, GMap map, Element input)
      : F(std::move(base)), which_(which), map_(std::move(map)), input_(std::move(input)) {}

  std::string name() const { return F::name() + "!" + to_string(which_); }

  Element restrict(const GMap& f, const Element& b) const {
    auto r = F::restrict(f, b);
    return which_ == StructureMap::restrict && f == map_ && b == input_ ? alter(f.src, r) : r;
  }
  Element transfer(const GMap& f, const Element& a) const {
    auto r = F::transfer(f, a);
    return which_ == StructureMap::transfer && f == map_ && a == input_ ? alter(f.dst, r) : r;
  }
  Element norm(const GMap& f, const Element& a) const
    requires Tambara<F>
  {
    auto r = F::norm(f, a);
    return which_ == StructureMap::norm && f == map_ && a == input_ ? alter(f.dst, r) : r;
  }
  Element mul(const GSet& x, const Element& a, const Element& b) const
    requires Tambara<F>
  {
    auto r = F::mul(x, a, b);
    return which_ == StructureMap::mul && x == map_.src && a == input_ ? alter(x, r) : r;
  }

 private:
  Element alter(const GSet& x, const Element& r) const {
    auto es = F::elements(x, 64);
    for (const auto& e : es) {
      auto v = F::add(x, r, e);
      if (!(v == r)) return v;
    }
    for (const auto& e : es)
      if (!(e == r)) return e;
    throw std::logic_error("cannot corrupt a level with a single element");
  }

  StructureMap which_;
  GMap map_;
  Element input_;
};

/// A copy of phi whose component at (x, input) is replaced by another value.
template <class S, class T>
Morphism<S, T> corrupt_morphism(const Morphism<S, T>& phi, const GSet& x, const typename S::Element& input) {
  auto base = phi.component;
  T dst = phi.dst;
  GSet at = x;
  auto comp = [base, dst, at, input](const GSet& y, const typename S::Element& e) {
    auto r = base(y, e);
    if (!(y == at) || !(e == input)) return r;
    auto alts = dst.elements(y, 64);
    for (const auto& alt : alts) {
      auto v = dst.add(y, r, alt);
      if (!(v == r)) return v;
    }
    for (const auto& alt : alts)
      if (!(alt == r)) return alt;
    return r;
  };
  return make_morphism<S, T>(phi.src, phi.dst, comp, phi.name + "!corrupted");
}

}  // namespace tambara
