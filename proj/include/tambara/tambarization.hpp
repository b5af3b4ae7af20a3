#pragma once

// Tambarization: the Grothendieck ring of pairs (A -p-> X, m in M(A)) for a
// semi-Mackey functor M. Elements are formal sums of transitive pairs in a
// canonical form: A is the standard realization of an orbit key and m is the
// least transport of the element under automorphisms of A over X.

#include <algorithm>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tambara/burnside.hpp"
#include "tambara/mackey.hpp"
#include "tambara/tambara.hpp"

namespace tambara {

template <class MElem>
struct PairKey {
  OrbitKey key;
  MElem m;

  bool operator==(const PairKey&) const = default;
  bool operator<(const PairKey& o) const { return std::tie(key, m) < std::tie(o.key, o.m); }
};

/// Elements at a level: everything when the level is finite, a sample
/// otherwise.
template <SemiMackey M>
std::vector<typename M::Element> level_elements(const M& m, const GSet& x, std::size_t limit) {
  if constexpr (Enumerable<M>) {
    auto all = m.enumerate(x);
    if (all.size() > limit) all.resize(limit);
    return all;
  } else {
    return m.elements(x, limit);
  }
}

template <SemiMackey M>
class Tambarization {
 public:
  using MElement = typename M::Element;
  using Key = PairKey<MElement>;
  using Element = FormalSum<Key>;

  explicit Tambarization(M m, Caps caps = {}) : m_(std::move(m)), caps_(caps) {}

  std::string name() const { return "tambarize(" + m_.name() + ")"; }
  const GroupPtr& group() const { return m_.group(); }
  const M& inner() const { return m_; }
  const Caps& caps() const { return caps_; }

  /// Canonical pair for (standard realization of k over x, m).
  Key canonical(const GSet& x, const OrbitKey& k, const MElement& m) const {
    MElement best = m;
    for (const auto& h : automorphisms_over(x, k)) {
      MElement t = m_.restrict(h, m);
      if (t < best) best = std::move(t);
    }
    return Key{k, std::move(best)};
  }

  /// The class of (C -p-> X, m), decomposed into transitive pairs.
  Element decompose(const GMap& p, const MElement& m) const {
    Element out;
    for (const auto& ch : orbit_charts(p)) out.add_term(canonical(p.dst, ch.key, m_.restrict(ch.chart, m)), 1);
    return out;
  }

  Element zero(const GSet&) const { return {}; }
  Element add(const GSet&, const Element& a, const Element& b) const { return a + b; }
  Element negate(const GSet&, const Element& a) const { return a.negated(); }
  Element one(const GSet& x) const { return decompose(identity_map(x), m_.zero(x)); }

  Element restrict(const GMap& f, const Element& b) const {
    Element out;
    for (const auto& [k, c] : b.terms()) {
      PullbackData pb = pullback(f, realize(f.dst, k.key));
      out += decompose(pb.proj1, m_.restrict(pb.proj2, k.m)).scaled(c);
    }
    return out;
  }

  Element transfer(const GMap& f, const Element& a) const {
    Element out;
    for (const auto& [k, c] : a.terms()) out += decompose(compose(f, realize(f.src, k.key)), k.m).scaled(c);
    return out;
  }

  Element mul(const GSet& x, const Element& a, const Element& b) const {
    Element out;
    for (const auto& [k1, c1] : a.terms()) {
      GMap r1 = realize(x, k1.key);
      for (const auto& [k2, c2] : b.terms()) {
        PullbackData pb = pullback(r1, realize(x, k2.key));
        const GSet& apex = pb.apex;
        MElement m = m_.add(apex, m_.restrict(pb.proj1, k1.m), m_.restrict(pb.proj2, k2.m));
        out += decompose(compose(r1, pb.proj1), m).scaled(checked_mul(c1, c2));
      }
    }
    return out;
  }

  Element norm(const GMap& f, const Element& a) const {
    if (a.is_nonnegative()) return norm_positive(f, a);
    return split_norm(*this, f, a, [this](const GMap& g, const Element& b) {
      if (b.is_nonnegative()) return norm_positive(g, b);
      return norm_by_completion(*this, g, b.positive_part(), b.negative_part(), caps_.sections);
    });
  }

  /// One dependent product of the combined pair (A, p, m).
  Element norm_positive(const GMap& f, const Element& a) const {
    const GSet& x = f.src;
    std::vector<GSet> parts;
    std::vector<GMap> maps;
    std::vector<MElement> ms;
    for (const auto& [k, c] : a.terms())
      for (Coef i = 0; i < c; ++i) {
        GMap r = realize(x, k.key);
        parts.push_back(r.src);
        maps.push_back(std::move(r));
        ms.push_back(k.m);
      }
    GMap p;
    MElement m;
    if (parts.empty()) {
      GSet e = empty_set(x.group_ptr());
      p = GMap{e, x, {}};
      m = m_.zero(e);
    } else {
      Coproduct cp = coproduct(x.group_ptr(), parts);
      p = copair(cp, maps);
      m = assemble(m_, cp, ms);
    }
    ExponentialData ex = dependent_product(f, p, caps_.sections);
    return decompose(ex.pi, m_.transfer(ex.fprime, m_.restrict(ex.e, m)));
  }

  /// All transitive pairs over x (degree-capped for infinite levels).
  std::vector<Element> basis(const GSet& x) const {
    std::vector<Key> keys;
    for (const auto& k : orbit_objects(x)) {
      GSet a = transitive(x.group_ptr(), k.sub);
      for (const auto& m : inner_enumerate(a)) keys.push_back(canonical(x, k, m));
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<Element> out;
    for (auto& k : keys) out.push_back(Element::single(std::move(k)));
    return out;
  }

  std::vector<Element> elements(const GSet& x, std::size_t limit) const {
    std::vector<Element> keys;
    for (const auto& k : orbit_objects(x)) {
      GSet a = transitive(x.group_ptr(), k.sub);
      for (const auto& m : level_elements(m_, a, std::max<std::size_t>(2, limit / 2)))
        keys.push_back(Element::single(canonical(x, k, m)));
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<Element> out{Element{}, one(x)};
    for (const auto& k : keys) out.push_back(k);
    if (!keys.empty()) {
      out.push_back(keys.front().negated());
      out.push_back(keys.back() + keys.front());
    }
    for (std::size_t i = 0; i + 1 < keys.size(); ++i) out.push_back(keys[i + 1] - keys[i]);
    std::vector<Element> uniq;
    for (auto& e : out)
      if (std::find(uniq.begin(), uniq.end(), e) == uniq.end()) uniq.push_back(std::move(e));
    if (uniq.size() > limit) uniq.resize(limit);
    return uniq;
  }

  // Presentation: free on transitive pairs.
  std::vector<Element> generators(const GSet& x) const { return basis(x); }
  IntMatrix relations(const GSet& x) const { return IntMatrix(basis(x).size(), 0); }
  std::vector<Int> coords(const GSet& x, const Element& e) const {
    auto b = basis(x);
    std::vector<Int> c(b.size());
    for (const auto& [k, v] : e.terms()) {
      auto it = std::lower_bound(b.begin(), b.end(), Element::single(k),
                                 [](const Element& u, const Element& w) { return u.terms().begin()->first < w.terms().begin()->first; });
      if (it == b.end() || !(it->terms().begin()->first == k)) throw CapError("pair lies outside the enumerated basis");
      c[it - b.begin()] = v;
    }
    return c;
  }

  std::string show_key(const GSet& x, const Key& k) const {
    GSet a = transitive(x.group_ptr(), k.key.sub);
    return "(" + show_orbit_key(x, k.key) + ", " + m_.show(a, k.m) + ")";
  }
  std::string show(const GSet& x, const Element& e) const {
    return show_sum(e, [&](const Key& k) { return show_key(x, k); });
  }

 private:
  std::vector<MElement> inner_enumerate(const GSet& a) const {
    if constexpr (requires { m_.enumerate(a, caps_.degree); }) return m_.enumerate(a, caps_.degree);
    else if constexpr (Enumerable<M>) return m_.enumerate(a);
    else throw std::domain_error("tambarization basis needs enumerable levels");
  }

  M m_;
  Caps caps_;
};

/// u_X(m) = (X -id-> X, m).
template <SemiMackey M>
Morphism<M, MultiplicativePart<Tambarization<M>>> unit_morphism(const Tambarization<M>& t) {
  auto comp = [t](const GSet& x, const typename M::Element& m) { return t.decompose(identity_map(x), m); };
  return make_morphism<M, MultiplicativePart<Tambarization<M>>>(t.inner(), MultiplicativePart<Tambarization<M>>(t), comp, "unit");
}

/// Omega[phi] for a morphism phi: M -> N: (A, p, m) |-> (A, p, phi(m)).
template <SemiMackey M, SemiMackey N>
Morphism<Tambarization<M>, Tambarization<N>> tambarize_morphism(const Tambarization<M>& src, const Tambarization<N>& dst,
                                                                 const Morphism<M, N>& phi) {
  auto comp = [dst, phi](const GSet& x, const typename Tambarization<M>::Element& e) {
    typename Tambarization<N>::Element out;
    for (const auto& [k, c] : e.terms()) {
      GSet a = transitive(x.group_ptr(), k.key.sub);
      out.add_term(dst.canonical(x, k.key, phi(a, k.m)), c);
    }
    return out;
  };
  return make_morphism<Tambarization<M>, Tambarization<N>>(src, dst, comp, "tambarize(" + phi.name + ")");
}

/// The Tambara morphism Omega[M] -> S extending psi0: M -> S^mu, given on
/// pairs by (A, p, m) |-> S_+(p)(psi0(m)).
template <SemiMackey M, Tambara S>
Morphism<Tambarization<M>, S> extend_to_tambarization(const Tambarization<M>& t, const S& s,
                                                      const Morphism<M, MultiplicativePart<S>>& psi0) {
  auto comp = [s, psi0](const GSet& x, const typename Tambarization<M>::Element& e) {
    typename S::Element acc = s.zero(x);
    for (const auto& [k, c] : e.terms()) {
      GMap r = realize(x, k.key);
      acc = s.add(x, acc, scale(s, x, s.transfer(r, psi0(r.src, k.m)), c));
    }
    return acc;
  };
  return make_morphism<Tambarization<M>, S>(t, s, comp, "extend(" + psi0.name + ")");
}

/// psi |-> psi o u.
template <SemiMackey M, Tambara S>
Morphism<M, MultiplicativePart<S>> restrict_to_unit(const Morphism<Tambarization<M>, S>& psi) {
  auto comp = [psi](const GSet& x, const typename M::Element& m) { return psi(x, psi.src.decompose(identity_map(x), m)); };
  return make_morphism<M, MultiplicativePart<S>>(psi.src.inner(), MultiplicativePart<S>(psi.dst), comp, psi.name + " o u");
}

}  // namespace tambara
