#pragma once

// Hopf structure on the Tambarization of a Mackey functor M. The
// comultiplication lands in Omega[M + M], which the c-map identifies with
// Omega[M] (x) Omega[M]:
//   c([(A, m) (x) (B, n)]_(C, r)) = r_+ (A x_C B, (m|, n|)).
// Tensors whose factors sit over C are handled as raw terms (r, u, v).

#include <string>
#include <utility>
#include <vector>

#include "tambara/burnside.hpp"
#include "tambara/mackey.hpp"
#include "tambara/tambara.hpp"
#include "tambara/tambarization.hpp"

namespace tambara {

/// A tensor [u (x) v]_(C, r) with u, v given at level C.
template <class U, class V>
struct RawTensor {
  GMap r;
  U u;
  V v;
  Coef coef = 1;
};

/// c on one raw term: Omega[M] (x) Omega[N] -> Omega[M + N] at r.dst.
template <SemiMackey M, SemiMackey N>
typename Tambarization<DirectSum<M, N>>::Element c_raw(const Tambarization<DirectSum<M, N>>& target, const GMap& r,
                                                      const typename Tambarization<M>::Element& u,
                                                      const typename Tambarization<N>::Element& v) {
  const GSet& c = r.src;
  const M& m = target.inner().first();
  const N& n = target.inner().second();
  typename Tambarization<DirectSum<M, N>>::Element out;
  for (const auto& [k1, c1] : u.terms()) {
    GMap r1 = realize(c, k1.key);
    for (const auto& [k2, c2] : v.terms()) {
      PullbackData pb = pullback(r1, realize(c, k2.key));
      std::pair<typename M::Element, typename N::Element> mn{m.restrict(pb.proj1, k1.m), n.restrict(pb.proj2, k2.m)};
      out += target.decompose(compose(r, compose(r1, pb.proj1)), mn).scaled(checked_mul(c1, c2));
    }
  }
  return out;
}

/// c^{-1}: each pair (A -r-> X, (m, n)) goes to [(A, id, m) (x) (A, id, n)]_(A, r).
template <SemiMackey M, SemiMackey N>
std::vector<RawTensor<typename Tambarization<M>::Element, typename Tambarization<N>::Element>> c_inverse(
    const Tambarization<M>& tm, const Tambarization<N>& tn, const GSet& x, const typename Tambarization<DirectSum<M, N>>::Element& e) {
  std::vector<RawTensor<typename Tambarization<M>::Element, typename Tambarization<N>::Element>> out;
  for (const auto& [k, c] : e.terms()) {
    GMap r = realize(x, k.key);
    GMap id = identity_map(r.src);
    out.push_back({r, tm.decompose(id, k.m.first), tn.decompose(id, k.m.second), c});
  }
  return out;
}

template <Mackey M>
class Hopf {
 public:
  using Source = Tambarization<M>;
  using Pair = Tambarization<DirectSum<M, M>>;
  using Triple = Tambarization<DirectSum<DirectSum<M, M>, M>>;
  using Triple2 = Tambarization<DirectSum<M, DirectSum<M, M>>>;
  using Elem = typename Source::Element;

  explicit Hopf(const Source& t)
      : t_(t),
        pair_(DirectSum<M, M>(t.inner(), t.inner()), t.caps()),
        left_(DirectSum<DirectSum<M, M>, M>(DirectSum<M, M>(t.inner(), t.inner()), t.inner()), t.caps()),
        right_(DirectSum<M, DirectSum<M, M>>(t.inner(), DirectSum<M, M>(t.inner(), t.inner())), t.caps()),
        omega_(t.group(), t.caps()) {}

  const Source& source() const { return t_; }
  const Pair& pair() const { return pair_; }
  const Burnside& omega() const { return omega_; }

  /// (A, p, m) |-> (A, p, (m, m)).
  typename Pair::Element delta(const GSet& x, const Elem& e) const {
    typename Pair::Element out;
    for (const auto& [k, c] : e.terms()) out.add_term(pair_.canonical(x, k.key, {k.m, k.m}), c);
    return out;
  }
  /// (A, p, m) |-> (A, p).
  BurnsideElement counit(const GSet&, const Elem& e) const {
    BurnsideElement out;
    for (const auto& [k, c] : e.terms()) out.add_term(k.key, c);
    return out;
  }
  /// (A, p, m) |-> (A, p, -m).
  Elem antipode(const GSet& x, const Elem& e) const {
    Elem out;
    for (const auto& [k, c] : e.terms()) {
      GSet a = transitive(x.group_ptr(), k.key.sub);
      out.add_term(t_.canonical(x, k.key, t_.inner().negate(a, k.m)), c);
    }
    return out;
  }
  /// The unit Omega -> Omega[M].
  Elem unit(const GSet& x, const BurnsideElement& b) const {
    Elem out;
    for (const auto& [k, c] : b.terms()) {
      GSet a = transitive(x.group_ptr(), k.sub);
      out.add_term(t_.canonical(x, k, t_.inner().zero(a)), c);
    }
    return out;
  }

  /// (X, id, m) (x) (X, id, m) under c: the right side of the group-like test.
  typename Pair::Element square(const GSet& x, const Elem& e) const {
    return c_raw<M, M>(pair_, identity_map(x), e, e);
  }

  bool is_group_like(const GSet& x, const Elem& e) const {
    return counit(x, e) == omega_.one(x) && delta(x, e) == square(x, e);
  }

  // The two sides of each law, evaluated at one element.

  /// sum r_+(iota(eps u) * v) and sum r_+(u * iota(eps v)).
  template <class H>
  std::pair<Elem, Elem> counit_sides(const GSet& x, const Elem& e, const H& h) const {
    Elem l, r;
    for (const auto& term : c_inverse(t_, t_, x, delta(x, e))) {
      const GSet& c = term.r.src;
      l += h.transfer(term.r, h.mul(c, unit(c, counit(c, term.u)), term.v)).scaled(term.coef);
      r += h.transfer(term.r, h.mul(c, term.u, unit(c, counit(c, term.v)))).scaled(term.coef);
    }
    return {l, r};
  }
  /// sum r_+(eta(u) * v) and sum r_+(u * eta(v)).
  template <class H>
  std::pair<Elem, Elem> antipode_sides(const GSet& x, const Elem& e, const H& h) const {
    Elem l, r;
    for (const auto& term : c_inverse(t_, t_, x, delta(x, e))) {
      const GSet& c = term.r.src;
      l += h.transfer(term.r, h.mul(c, antipode(c, term.u), term.v)).scaled(term.coef);
      r += h.transfer(term.r, h.mul(c, term.u, antipode(c, term.v))).scaled(term.coef);
    }
    return {l, r};
  }
  /// (Delta (x) id) Delta and (id (x) Delta) Delta, both in Omega[(M+M)+M].
  std::pair<typename Triple::Element, typename Triple::Element> coassociativity_sides(const GSet& x, const Elem& e) const {
    typename Triple::Element l;
    typename Triple2::Element r;
    for (const auto& term : c_inverse(t_, t_, x, delta(x, e))) {
      const GSet& c = term.r.src;
      l += c_raw<DirectSum<M, M>, M>(left_, term.r, delta(c, term.u), term.v).scaled(term.coef);
      r += c_raw<M, DirectSum<M, M>>(right_, term.r, term.u, delta(c, term.v)).scaled(term.coef);
    }
    typename Triple::Element r2;
    for (const auto& [k, c] : r.terms()) {
      const auto& [a, bc] = k.m;
      r2.add_term(left_.canonical(x, k.key, {{a, bc.first}, bc.second}), c);
    }
    return {l, r2};
  }

 private:
  Source t_;
  Pair pair_;
  Triple left_;
  Triple2 right_;
  Burnside omega_;
};

/// Coassociativity, counit and antipode laws on every basis pair at the
/// orbit levels. `h` supplies the ring structure used by the laws (the
/// Tambarization itself or a corrupted copy).
template <Mackey M, class H>
Report check_hopf(const Hopf<M>& hopf, const H& h, const SuiteOptions& opt) {
  const Tambarization<M>& t = hopf.source();
  CheckRun run("hopf:" + t.name() + "@" + t.group()->name(), opt.budget);
  for (const auto& x : orbit_levels(t.group())) {
    detail::guarded(run, "hopf", [&] {
      for (const auto& e : t.basis(x)) {
        auto w = [&] { return "at " + describe(x) + " on " + t.show(x, e); };
        auto [cl, cr] = hopf.counit_sides(x, e, h);
        run.expect("counit-left", cl == e, [&] { return w() + ": " + t.show(x, cl); });
        run.expect("counit-right", cr == e, [&] { return w() + ": " + t.show(x, cr); });
        const auto target = hopf.unit(x, hopf.counit(x, e));
        auto [al, ar] = hopf.antipode_sides(x, e, h);
        run.expect("antipode-left", al == target, [&] { return w() + ": " + t.show(x, al); });
        run.expect("antipode-right", ar == target, [&] { return w() + ": " + t.show(x, ar); });
        auto [ql, qr] = hopf.coassociativity_sides(x, e);
        run.expect("coassociative", ql == qr, [&] { return w(); });
        run.expect("antipode-involutive", hopf.antipode(x, hopf.antipode(x, e)) == e, [&] { return w(); });
      }
    });
  }
  return run.finish();
}

/// Group-like tests: the supplied elements must be group-like, and so must
/// their products, antipodes, norms along maps into orbits and restrictions
/// along maps from test levels.
template <Mackey M, class H>
Report check_group_like(const Hopf<M>& hopf, const H& t, const GSet& x, const std::vector<typename Tambarization<M>::Element>& elems,
                        const SuiteOptions& opt) {
  CheckRun run("grouplike:" + t.name() + "@" + describe(x), opt.budget);
  const GroupPtr& g = t.group();
  auto check = [&](const std::string& family, const GSet& at, const typename Tambarization<M>::Element& e, auto witness) {
    run.expect(family, hopf.is_group_like(at, e), [&] { return witness() + " gives " + t.show(at, e); });
  };
  detail::guarded(run, "group-like", [&] {
    for (const auto& e : elems) check("group-like", x, e, [&] { return "input " + t.show(x, e); });
  });
  detail::guarded(run, "closed-product", [&] {
    for (const auto& a : elems)
      for (const auto& b : elems)
        check("closed-product", x, t.mul(x, a, b), [&] { return t.show(x, a) + " * " + t.show(x, b); });
  });
  detail::guarded(run, "closed-inverse", [&] {
    for (const auto& a : elems) {
      auto inv = hopf.antipode(x, a);
      check("closed-inverse", x, inv, [&] { return "antipode of " + t.show(x, a); });
      run.expect("closed-inverse", t.mul(x, a, inv) == t.one(x), [&] { return "a * eta(a) != 1 for " + t.show(x, a); });
    }
  });
  for (const auto& y : orbit_levels(g))
    for (const auto& f : all_gmaps(x, y))
      detail::guarded(run, "closed-norm", [&] {
        for (const auto& a : elems) check("closed-norm", y, t.norm(f, a), [&] { return "norm along " + describe(f) + " of " + t.show(x, a); });
      });
  for (const auto& w : test_levels(g, opt.two_orbit_levels))
    for (const auto& f : all_gmaps(w, x))
      detail::guarded(run, "closed-restrict", [&] {
        for (const auto& a : elems)
          check("closed-restrict", w, t.restrict(f, a), [&] { return "restriction along " + describe(f) + " of " + t.show(x, a); });
      });
  return run.finish();
}

/// u_X(m) for every m in M(X).
template <Mackey M>
Report check_hopf(const Hopf<M>& hopf, const SuiteOptions& opt) {
  return check_hopf(hopf, hopf.source(), opt);
}

template <Mackey M>
std::vector<typename Tambarization<M>::Element> unit_images(const Tambarization<M>& t, const GSet& x) {
  std::vector<typename Tambarization<M>::Element> out;
  for (const auto& m : level_elements(t.inner(), x, 64)) out.push_back(t.decompose(identity_map(x), m));
  return out;
}

}  // namespace tambara
