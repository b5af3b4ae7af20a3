#pragma once

// Tensor products over the Burnside functor. At X the group is generated by
// [t (x) s]_(A, p) for transitive A -> X (one per isomorphism class) and
// generators t of T(A), s of S(A), modulo the relations of T and S and the
// Frobenius relations
//   [a^*t' (x) s]_A = [t' (x) a_+s]_B,   [t (x) a^*s']_A = [a_+t (x) s']_B
// for every map a: A -> B over X. Elements are normalized coordinates in the
// Smith form of that presentation. Structure maps act on a lift to raw
// generators and reduce again.

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tambara/burnside.hpp"
#include "tambara/dress.hpp"
#include "tambara/hopf.hpp"
#include "tambara/mackey.hpp"
#include "tambara/tambara.hpp"
#include "tambara/tambarization.hpp"
#include "tambara/zlin.hpp"

namespace tambara {

/// A raw generator with its multiplicity: c * [t_a (x) s_b]_(A_i, r_i).
struct RawTerm {
  Int coef;
  std::size_t object;
  std::size_t t;
  std::size_t s;
};

template <Mackey T, Mackey S>
  requires Presented<T> && Presented<S>
class TensorProduct {
 public:
  using Element = std::vector<Int>;

  struct Level {
    GSet x;
    std::vector<OrbitKey> keys;
    std::vector<GMap> real;  // A_i -> X
    std::vector<std::vector<typename T::Element>> tgens;
    std::vector<std::vector<typename S::Element>> sgens;
    std::vector<std::size_t> offset;
    std::size_t raw_size = 0;
    IntMatrix relations;
    QuotientPresentation quotient;
    std::vector<std::vector<std::pair<std::size_t, Int>>> lift;  // sparse preimage of each coordinate
    bool truncated = false;

    RawTerm decode(std::size_t idx, Int c) const {
      std::size_t i = std::upper_bound(offset.begin(), offset.end(), idx) - offset.begin() - 1;
      std::size_t rel = idx - offset[i];
      return RawTerm{std::move(c), i, rel / sgens[i].size(), rel % sgens[i].size()};
    }
    std::size_t index(std::size_t i, std::size_t a, std::size_t b) const { return offset[i] + a * sgens[i].size() + b; }
  };

  TensorProduct(T t, S s, Caps caps = {}) : t_(std::move(t)), s_(std::move(s)), caps_(caps), cache_(std::make_shared<Cache>()) {}

  std::string name() const { return t_.name() + "(x)" + s_.name(); }
  const GroupPtr& group() const { return t_.group(); }
  const T& left() const { return t_; }
  const S& right() const { return s_; }
  const Caps& caps() const { return caps_; }

  std::shared_ptr<const Level> level(const GSet& x) const {
    auto key = std::make_pair(x.size(), x.act_table());
    {
      std::lock_guard lock(cache_->mu);
      auto it = cache_->levels.find(key);
      if (it != cache_->levels.end()) return it->second;
    }
    auto lv = build(x);
    std::lock_guard lock(cache_->mu);
    if (cache_->levels.size() > 1024) cache_->levels.clear();
    cache_->levels.emplace(std::move(key), lv);
    return lv;
  }

  /// Adds c * [t (x) s]_(C, r) to a raw vector at r.dst, splitting C into orbits.
  void accumulate(const Level& lv, const GMap& r, const typename T::Element& t, const typename S::Element& s, const Int& c,
                  std::vector<Int>& raw) const {
    if (c == 0) return;
    for (const auto& ch : orbit_charts(r)) {
      std::size_t i = std::lower_bound(lv.keys.begin(), lv.keys.end(), ch.key) - lv.keys.begin();
      auto tc = t_.coords(lv.real[i].src, t_.restrict(ch.chart, t));
      auto sc = s_.coords(lv.real[i].src, s_.restrict(ch.chart, s));
      for (std::size_t a = 0; a < tc.size(); ++a) {
        if (tc[a] == 0) continue;
        for (std::size_t b = 0; b < sc.size(); ++b)
          if (sc[b] != 0) raw[lv.index(i, a, b)] += c * tc[a] * sc[b];
      }
    }
  }

  /// The class of c * [t (x) s]_(C, r).
  Element reduce_raw(const GMap& r, const typename T::Element& t, const typename S::Element& s, const Int& c = 1) const {
    auto lv = level(r.dst);
    std::vector<Int> raw(lv->raw_size);
    accumulate(*lv, r, t, s, c, raw);
    return lv->quotient.reduce(raw);
  }
  Element reduce(const GSet& x, const std::vector<Int>& raw) const { return level(x)->quotient.reduce(raw); }

  /// The fixed sparse lift of coordinates to raw generators.
  std::vector<Int> lift(const GSet& x, const Element& e) const {
    auto lv = level(x);
    std::vector<Int> raw(lv->raw_size);
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k] != 0)
        for (const auto& [j, v] : lv->lift[k]) raw[j] += e[k] * v;
    return raw;
  }
  std::vector<RawTerm> terms(const Level& lv, const std::vector<Int>& raw) const {
    std::vector<RawTerm> out;
    for (std::size_t j = 0; j < raw.size(); ++j)
      if (raw[j] != 0) out.push_back(lv.decode(j, raw[j]));
    return out;
  }

  Element zero(const GSet& x) const { return Element(level(x)->quotient.dimension()); }
  Element add(const GSet& x, const Element& a, const Element& b) const {
    Element c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    level(x)->quotient.normalize(c);
    return c;
  }
  Element negate(const GSet& x, const Element& a) const {
    Element c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
    level(x)->quotient.normalize(c);
    return c;
  }
  Element one(const GSet& x) const { return reduce_raw(identity_map(x), t_.one(x), s_.one(x)); }

  // Structure maps on raw vectors; the Element versions lift first.

  Element restrict_raw(const GMap& f, const std::vector<Int>& raw) const {
    auto ly = level(f.dst);
    auto lx = level(f.src);
    std::vector<Int> out(lx->raw_size);
    for (const auto& term : terms(*ly, raw)) {
      PullbackData pb = pullback(f, ly->real[term.object]);
      accumulate(*lx, pb.proj1, t_.restrict(pb.proj2, ly->tgens[term.object][term.t]),
                 s_.restrict(pb.proj2, ly->sgens[term.object][term.s]), term.coef, out);
    }
    return lx->quotient.reduce(out);
  }
  Element transfer_raw(const GMap& f, const std::vector<Int>& raw) const {
    auto lx = level(f.src);
    auto ly = level(f.dst);
    std::vector<Int> out(ly->raw_size);
    for (const auto& term : terms(*lx, raw))
      accumulate(*ly, compose(f, lx->real[term.object]), lx->tgens[term.object][term.t], lx->sgens[term.object][term.s],
                 term.coef, out);
    return ly->quotient.reduce(out);
  }
  Element mul_raw(const GSet& x, const std::vector<Int>& a, const std::vector<Int>& b) const {
    auto lv = level(x);
    std::vector<Int> out(lv->raw_size);
    auto ta = terms(*lv, a);
    auto tb = terms(*lv, b);
    for (const auto& u : ta)
      for (const auto& v : tb) {
        PullbackData pb = pullback(lv->real[u.object], lv->real[v.object]);
        const GSet& p = pb.apex;
        auto t = t_.mul(p, t_.restrict(pb.proj1, lv->tgens[u.object][u.t]), t_.restrict(pb.proj2, lv->tgens[v.object][v.t]));
        auto s = s_.mul(p, s_.restrict(pb.proj1, lv->sgens[u.object][u.s]), s_.restrict(pb.proj2, lv->sgens[v.object][v.s]));
        accumulate(*lv, compose(lv->real[u.object], pb.proj1), t, s, u.coef * v.coef, out);
      }
    return lv->quotient.reduce(out);
  }
  /// The whole raw vector is one generator [t (x) s]_(A, p) with A the
  /// disjoint union of the terms' objects and the multiplicities folded into
  /// t; its norm is [T.(f')T^*(e)t (x) S.(f')S^*(e)s]_(Pi_f A, pi).
  Element norm_raw(const GMap& f, const std::vector<Int>& raw) const {
    auto lx = level(f.src);
    std::vector<GSet> parts;
    std::vector<GMap> maps;
    std::vector<typename T::Element> ts;
    std::vector<typename S::Element> ss;
    for (const auto& term : terms(*lx, raw)) {
      const GMap& r = lx->real[term.object];
      parts.push_back(r.src);
      maps.push_back(r);
      ts.push_back(scale(t_, r.src, lx->tgens[term.object][term.t], to_i64(term.coef)));
      ss.push_back(lx->sgens[term.object][term.s]);
    }
    GMap p;
    typename T::Element t;
    typename S::Element s;
    if (parts.empty()) {
      GSet e = empty_set(f.src.group_ptr());
      p = GMap{e, f.src, {}};
      t = t_.zero(e);
      s = s_.zero(e);
    } else {
      Coproduct cp = coproduct(f.src.group_ptr(), parts);
      p = copair(cp, maps);
      t = assemble(t_, cp, ts);
      s = assemble(s_, cp, ss);
    }
    ExponentialData ex = dependent_product(f, p, caps_.sections);
    return reduce_raw(ex.pi, t_.norm(ex.fprime, t_.restrict(ex.e, t)), s_.norm(ex.fprime, s_.restrict(ex.e, s)));
  }

  Element restrict(const GMap& f, const Element& b) const { return restrict_raw(f, lift(f.dst, b)); }
  Element transfer(const GMap& f, const Element& a) const { return transfer_raw(f, lift(f.src, a)); }
  Element mul(const GSet& x, const Element& a, const Element& b) const { return mul_raw(x, lift(x, a), lift(x, b)); }
  Element norm(const GMap& f, const Element& a) const { return norm_raw(f, lift(f.src, a)); }

  std::vector<Element> elements(const GSet& x, std::size_t limit) const {
    auto lv = level(x);
    const std::size_t d = lv->quotient.dimension();
    std::vector<Element> out{zero(x), one(x)};
    for (std::size_t k = 0; k < d; ++k) {
      Element e(d);
      e[k] = 1;
      out.push_back(e);
    }
    for (std::size_t k = 0; k + 1 < d; ++k) {
      Element e(d);
      e[k] = 1;
      e[k + 1] = -1;
      lv->quotient.normalize(e);
      out.push_back(e);
    }
    if (d > 0) {
      Element e(d);
      e[d - 1] = -2;
      lv->quotient.normalize(e);
      out.push_back(e);
    }
    std::vector<Element> uniq;
    for (auto& e : out)
      if (std::find(uniq.begin(), uniq.end(), e) == uniq.end()) uniq.push_back(std::move(e));
    if (uniq.size() > limit) uniq.resize(limit);
    return uniq;
  }

  // Presentation: unit coordinates modulo the torsion.
  std::vector<Element> generators(const GSet& x) const {
    const std::size_t d = level(x)->quotient.dimension();
    std::vector<Element> out;
    for (std::size_t k = 0; k < d; ++k) {
      Element e(d);
      e[k] = 1;
      out.push_back(std::move(e));
    }
    return out;
  }
  IntMatrix relations(const GSet& x) const {
    auto lv = level(x);
    const auto& tor = lv->quotient.torsion;
    IntMatrix r(lv->quotient.dimension(), tor.size());
    for (std::size_t i = 0; i < tor.size(); ++i) r(i, i) = tor[i];
    return r;
  }
  std::vector<Int> coords(const GSet&, const Element& e) const { return e; }

  std::string show(const GSet& x, const Element& e) const {
    auto lv = level(x);
    std::string s = "[";
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) s += ",";
      s += e[i].str();
      if (i < lv->quotient.torsion.size()) s += "/" + lv->quotient.torsion[i].str();
    }
    return s + "]";
  }

  /// A readable raw representative: c*[t (x) s]_(object) terms.
  std::string show_raw(const GSet& x, const std::vector<Int>& raw) const {
    auto lv = level(x);
    std::string out;
    for (const auto& term : terms(*lv, raw)) {
      const GSet& a = lv->real[term.object].src;
      if (!out.empty()) out += " + ";
      out += term.coef.str() + "*[" + t_.show(a, lv->tgens[term.object][term.t]) + " (x) " +
             s_.show(a, lv->sgens[term.object][term.s]) + "]_" + show_orbit_key(x, lv->keys[term.object]);
    }
    return out.empty() ? "0" : out;
  }

 private:
  std::shared_ptr<Level> build(const GSet& x) const {
    auto lv = std::make_shared<Level>();
    lv->x = x;
    lv->keys = orbit_objects(x);
    for (const auto& k : lv->keys) {
      GMap r = realize(x, k);
      lv->offset.push_back(lv->raw_size);
      lv->tgens.push_back(t_.generators(r.src));
      lv->sgens.push_back(s_.generators(r.src));
      lv->raw_size += lv->tgens.back().size() * lv->sgens.back().size();
      lv->real.push_back(std::move(r));
    }
    const std::size_t n = lv->raw_size;
    const std::size_t m = lv->keys.size();
    std::vector<std::vector<Int>> cols;
    auto push = [&](std::vector<Int> c) {
      for (const auto& v : c)
        if (v != 0) {
          if (std::find(cols.begin(), cols.end(), c) == cols.end()) cols.push_back(std::move(c));
          return;
        }
    };
    // Relations of the factors, tensored with generators.
    for (std::size_t i = 0; i < m; ++i) {
      const GSet& a = lv->real[i].src;
      IntMatrix rt = t_.relations(a);
      for (std::size_t j = 0; j < rt.cols(); ++j)
        for (std::size_t b = 0; b < lv->sgens[i].size(); ++b) {
          std::vector<Int> c(n);
          for (std::size_t r = 0; r < rt.rows(); ++r) c[lv->index(i, r, b)] = rt(r, j);
          push(std::move(c));
        }
      IntMatrix rs = s_.relations(a);
      for (std::size_t j = 0; j < rs.cols(); ++j)
        for (std::size_t t = 0; t < lv->tgens[i].size(); ++t) {
          std::vector<Int> c(n);
          for (std::size_t r = 0; r < rs.rows(); ++r) c[lv->index(i, t, r)] = rs(r, j);
          push(std::move(c));
        }
    }
    // Frobenius relations along every map a: A_i -> A_j over X.
    auto add_pair = [&](std::vector<Int>& c, std::size_t i, const std::vector<Int>& tc, const std::vector<Int>& sc, int sign) {
      for (std::size_t p = 0; p < tc.size(); ++p) {
        if (tc[p] == 0) continue;
        for (std::size_t q = 0; q < sc.size(); ++q)
          if (sc[q] != 0) c[lv->index(i, p, q)] += sign * tc[p] * sc[q];
      }
    };
    auto unit_vec = [](std::size_t len, std::size_t k) {
      std::vector<Int> v(len);
      v[k] = 1;
      return v;
    };
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        const GSet& ai = lv->real[i].src;
        const GSet& aj = lv->real[j].src;
        for (const auto& a : maps_over(lv->real[i], lv->real[j])) {
          try {
            for (std::size_t tj = 0; tj < lv->tgens[j].size(); ++tj)
              for (std::size_t si = 0; si < lv->sgens[i].size(); ++si) {
                std::vector<Int> c(n);
                add_pair(c, i, t_.coords(ai, t_.restrict(a, lv->tgens[j][tj])), unit_vec(lv->sgens[i].size(), si), 1);
                add_pair(c, j, unit_vec(lv->tgens[j].size(), tj), s_.coords(aj, s_.transfer(a, lv->sgens[i][si])), -1);
                push(std::move(c));
              }
            for (std::size_t ti = 0; ti < lv->tgens[i].size(); ++ti)
              for (std::size_t sj = 0; sj < lv->sgens[j].size(); ++sj) {
                std::vector<Int> c(n);
                add_pair(c, i, unit_vec(lv->tgens[i].size(), ti), s_.coords(ai, s_.restrict(a, lv->sgens[j][sj])), 1);
                add_pair(c, j, t_.coords(aj, t_.transfer(a, lv->tgens[i][ti])), unit_vec(lv->sgens[j].size(), sj), -1);
                push(std::move(c));
              }
          } catch (const CapError&) {
            lv->truncated = true;
          }
        }
      }
    lv->relations = IntMatrix(n, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t r = 0; r < n; ++r) lv->relations(r, j) = cols[j][r];
    lv->quotient = cokernel(lv->relations);
    // Prefer a single raw generator mapping onto each coordinate.
    const auto& q = lv->quotient;
    const std::size_t d = q.dimension();
    lv->lift.resize(d);
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t g = 0; g < n && lv->lift[k].empty(); ++g) {
        std::vector<Int> col(d);
        for (std::size_t r = 0; r < d; ++r) col[r] = q.project(r, g);
        q.normalize(col);
        bool hit = true;
        for (std::size_t r = 0; r < d && hit; ++r) hit = col[r] == (r == k ? 1 : 0);
        if (hit) lv->lift[k].push_back({g, 1});
      }
      if (lv->lift[k].empty())
        for (std::size_t g = 0; g < n; ++g)
          if (q.lift(g, k) != 0) lv->lift[k].push_back({g, q.lift(g, k)});
    }
    return lv;
  }

  struct Cache {
    std::mutex mu;
    std::map<std::pair<int, std::vector<int>>, std::shared_ptr<const Level>> levels;
  };

  T t_;
  S s_;
  Caps caps_;
  std::shared_ptr<Cache> cache_;
};

// ---------------------------------------------------------------------------
// Canonical morphisms

/// iota_T: t |-> [t (x) 1]_(X, id).
template <class T, class S>
Morphism<T, TensorProduct<T, S>> left_inclusion(const TensorProduct<T, S>& ts) {
  auto comp = [ts](const GSet& x, const typename T::Element& t) { return ts.reduce_raw(identity_map(x), t, ts.right().one(x)); };
  return make_morphism<T, TensorProduct<T, S>>(ts.left(), ts, comp, "iota-left");
}
/// iota_S: s |-> [1 (x) s]_(X, id).
template <class T, class S>
Morphism<S, TensorProduct<T, S>> right_inclusion(const TensorProduct<T, S>& ts) {
  auto comp = [ts](const GSet& x, const typename S::Element& s) { return ts.reduce_raw(identity_map(x), ts.left().one(x), s); };
  return make_morphism<S, TensorProduct<T, S>>(ts.right(), ts, comp, "iota-right");
}

/// The unit isomorphism S -> Omega (x) S and its inverse
/// [b (x) s]_(A, p) |-> p_+(iota(b) s).
template <Tambara S>
std::pair<Morphism<S, TensorProduct<Burnside, S>>, Morphism<TensorProduct<Burnside, S>, S>> unit_iso(
    const TensorProduct<Burnside, S>& os) {
  auto fwd = right_inclusion(os);
  fwd.name = "unit";
  auto iota = initial_morphism(os.right());
  auto back = [os, iota](const GSet& x, const typename TensorProduct<Burnside, S>::Element& e) {
    const S& s = os.right();
    auto lv = os.level(x);
    typename S::Element acc = s.zero(x);
    for (const auto& term : os.terms(*lv, os.lift(x, e))) {
      const GMap& r = lv->real[term.object];
      auto v = s.transfer(r, s.mul(r.src, iota(r.src, lv->tgens[term.object][term.t]), lv->sgens[term.object][term.s]));
      acc = s.add(x, acc, scale(s, x, v, to_i64(term.coef)));
    }
    return acc;
  };
  return {fwd, make_morphism<TensorProduct<Burnside, S>, S>(os, os.right(), back, "unit-inverse")};
}

/// c: Omega[M] (x) Omega[N] -> Omega[M + N] on coordinates, and its inverse.
template <Mackey M, Mackey N>
struct CIso {
  using Left = Tambarization<M>;
  using Right = Tambarization<N>;
  using Tensor = TensorProduct<Left, Right>;
  using Target = Tambarization<DirectSum<M, N>>;

  Tensor tensor;
  Target target;

  typename Target::Element forward(const GSet& x, const typename Tensor::Element& e) const {
    auto lv = tensor.level(x);
    typename Target::Element out;
    for (const auto& term : tensor.terms(*lv, tensor.lift(x, e)))
      out += c_raw<M, N>(target, lv->real[term.object], lv->tgens[term.object][term.t], lv->sgens[term.object][term.s])
                 .scaled(to_i64(term.coef));
    return out;
  }
  typename Tensor::Element backward(const GSet& x, const typename Target::Element& e) const {
    auto lv = tensor.level(x);
    std::vector<Int> raw(lv->raw_size);
    for (const auto& t : c_inverse(tensor.left(), tensor.right(), x, e)) tensor.accumulate(*lv, t.r, t.u, t.v, t.coef, raw);
    return lv->quotient.reduce(raw);
  }
  Morphism<Tensor, Target> morphism() const {
    CIso self = *this;
    return make_morphism<Tensor, Target>(tensor, target, [self](const GSet& x, const typename Tensor::Element& e) { return self.forward(x, e); },
                                         "c");
  }
  Morphism<Target, Tensor> inverse() const {
    CIso self = *this;
    return make_morphism<Target, Tensor>(target, tensor, [self](const GSet& x, const typename Target::Element& e) { return self.backward(x, e); },
                                         "c-inverse");
  }
};

template <Mackey M, Mackey N>
CIso<M, N> c_iso(const M& m, const N& n, Caps caps = {}) {
  return CIso<M, N>{{Tambarization<M>(m, caps), Tambarization<N>(n, caps), caps}, Tambarization<DirectSum<M, N>>(DirectSum<M, N>(m, n), caps)};
}

/// T[M] = T (x) Omega[M].
template <Tambara T, SemiMackey M>
TensorProduct<T, Tambarization<M>> coefficient_extension(const T& t, const M& m, Caps caps = {}) {
  return TensorProduct<T, Tambarization<M>>(t, Tambarization<M>(m, caps), caps);
}

// ---------------------------------------------------------------------------
// T_Q and T (x) Omega[P_Q]

template <Tambara T>
struct PhiPsi {
  using Source = Dress<T>;
  using Target = TensorProduct<T, Tambarization<FixedPoint>>;

  Source dress;
  Target tensor;

  /// phi_X(t) = [t (x) (X x Q, p_Q)]_(X x Q, p_X).
  typename Target::Element phi(const GSet& x, const typename T::Element& t) const {
    auto lv = dress.level(x);
    const auto& s = tensor.right();
    return tensor.reduce_raw(lv->px, t, s.decompose(identity_map(lv->xq), lv->pq));
  }
  /// psi_X([t (x) (R -r-> A, m)]_(A, p)) = T_+((p r, m): R -> X x Q) T^*(r)(t).
  typename T::Element psi(const GSet& x, const typename Target::Element& w) const {
    auto lv = dress.level(x);
    auto tl = tensor.level(x);
    const T& t = tensor.left();
    const int nq = dress.monoid().size();
    typename T::Element acc = t.zero(lv->xq);
    for (const auto& term : tensor.terms(*tl, tensor.lift(x, w))) {
      const GMap& p = tl->real[term.object];
      const auto& tv = tl->tgens[term.object][term.t];
      for (const auto& [k, d] : tl->sgens[term.object][term.s].terms()) {
        GMap r = realize(p.src, k.key);
        std::vector<int> fn(r.src.size());
        for (int z = 0; z < r.src.size(); ++z) fn[z] = p.fn[r.fn[z]] * nq + k.m[z];
        auto v = t.transfer(GMap{r.src, lv->xq, std::move(fn)}, t.restrict(r, tv));
        acc = t.add(lv->xq, acc, scale(t, lv->xq, v, checked_mul(to_i64(term.coef), d)));
      }
    }
    return acc;
  }
  Morphism<Source, Target> phi_morphism() const {
    PhiPsi self = *this;
    return make_morphism<Source, Target>(dress, tensor, [self](const GSet& x, const typename T::Element& t) { return self.phi(x, t); },
                                         "phi");
  }
  Morphism<Target, Source> psi_morphism() const {
    PhiPsi self = *this;
    return make_morphism<Target, Source>(tensor, dress, [self](const GSet& x, const typename Target::Element& w) { return self.psi(x, w); },
                                         "psi");
  }
};

template <Tambara T>
PhiPsi<T> phi_psi(const T& t, const GMonoid& q, Caps caps = {}) {
  return PhiPsi<T>{Dress<T>(t, q), coefficient_extension(t, FixedPoint(t.group(), q), caps)};
}

/// Mutual inverses on every basis element at every orbit level, and phi a
/// Tambara morphism.
template <Tambara T>
Report check_phi_psi(const PhiPsi<T>& pp, const SuiteOptions& opt) {
  Report rep;
  rep.suite = "phi-psi:" + pp.tensor.name() + "@" + pp.tensor.group()->name();
  CheckRun run("inverse", opt.budget);
  const T& t = pp.tensor.left();
  for (const auto& x : test_levels(pp.tensor.group(), opt.two_orbit_levels)) {
    detail::guarded(run, "psi-phi", [&] {
      auto lv = pp.dress.level(x);
      for (const auto& g : t.generators(lv->xq)) {
        auto back = pp.psi(x, pp.phi(x, g));
        run.expect("psi-phi", back == g, [&] { return "at " + describe(x) + " on " + t.show(lv->xq, g) + " gives " + t.show(lv->xq, back); });
      }
    });
    detail::guarded(run, "phi-psi", [&] {
      for (const auto& w : pp.tensor.generators(x)) {
        auto back = pp.phi(x, pp.psi(x, w));
        run.expect("phi-psi", back == w,
                   [&] { return "at " + describe(x) + " on " + pp.tensor.show(x, w) + " gives " + pp.tensor.show(x, back); });
      }
    });
  }
  rep.merge(run.finish(), "");
  rep.merge(check_tambara_morphism(pp.phi_morphism(), opt), "phi/");
  return rep;
}

/// Structure maps do not depend on the lift: each map is applied to the
/// fixed lift and to the lift plus a random relation combination.
template <class T, class S, class Rng>
Report check_lift_independence(const TensorProduct<T, S>& ts, std::size_t pairs, Rng& rng, const SuiteOptions& opt) {
  CheckRun run("lift:" + ts.name() + "@" + ts.group()->name(), opt.budget);
  std::uniform_int_distribution<int> coef(-2, 2);
  auto perturb = [&](const GSet& x, std::vector<Int> raw) {
    auto lv = ts.level(x);
    for (std::size_t j = 0; j < lv->relations.cols(); ++j) {
      int c = coef(rng);
      if (c == 0) continue;
      for (std::size_t r = 0; r < raw.size(); ++r) raw[r] += c * lv->relations(r, j);
    }
    return raw;
  };
  auto random_elem = [&](const GSet& x) {
    auto e = ts.zero(x);
    for (auto& v : e) v = coef(rng);
    ts.level(x)->quotient.normalize(e);
    return e;
  };
  const GroupPtr& g = ts.group();
  for (const auto& x : orbit_levels(g)) {
    for (std::size_t k = 0; k < pairs && !run.exhausted(); ++k) {
      detail::guarded(run, "lift", [&] {
        auto e = random_elem(x);
        auto e2 = random_elem(x);
        auto l1 = ts.lift(x, e);
        auto l2 = perturb(x, l1);
        auto w = [&] { return "at " + describe(x) + " lifts " + ts.show_raw(x, l1) + " and " + ts.show_raw(x, l2); };
        run.expect("lift-reduce", ts.reduce(x, l2) == e, w);
        constexpr bool ring = Tambara<T> && Tambara<S>;
        if constexpr (ring)
          run.expect("lift-mul", ts.mul_raw(x, l1, ts.lift(x, e2)) == ts.mul_raw(x, l2, perturb(x, ts.lift(x, e2))), w);
        for (const auto& y : orbit_levels(g)) {
          for (const auto& f : all_gmaps(x, y)) {
            run.expect("lift-transfer", ts.transfer_raw(f, l1) == ts.transfer_raw(f, l2), [&] { return w() + " along " + describe(f); });
            if constexpr (ring)
              run.expect("lift-norm", ts.norm_raw(f, l1) == ts.norm_raw(f, l2), [&] { return w() + " along " + describe(f); });
          }
          for (const auto& f : all_gmaps(y, x))
            run.expect("lift-restrict", ts.restrict_raw(f, l1) == ts.restrict_raw(f, l2), [&] { return w() + " along " + describe(f); });
        }
      });
    }
  }
  return run.finish();
}

}  // namespace tambara
