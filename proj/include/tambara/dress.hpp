#pragma once

// The Dress construction: X -> T(X x Q) for a G-monoid Q. Restriction and
// transfer act along f x Q; products convolve over Q; the norm along f goes
// through the exponential diagram of (f, X x Q -> X) followed by the
// transfer along (y, sigma) |-> (y, product of the Q-coordinates of sigma).

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "tambara/mackey.hpp"
#include "tambara/tambara.hpp"

namespace tambara {

template <Tambara T>
class Dress {
 public:
  using Element = typename T::Element;

  struct Level {
    GSet xq;
    GMap px;               // X x Q -> X
    std::vector<int> pq;   // Q-coordinate of each point
    GMap unit;             // X -> X x Q, x |-> (x, 1)
    PullbackData square;   // (X x Q) x_X (X x Q)
    GMap convolve;         // (x, q, q') |-> (x, q q')
  };

  Dress(T t, GMonoid q) : t_(std::move(t)), q_(std::move(q)), cache_(std::make_shared<Cache>()) {}

  std::string name() const { return "dress(" + t_.name() + "," + q_.name + ")"; }
  const GroupPtr& group() const { return t_.group(); }
  const T& base() const { return t_; }
  const GMonoid& monoid() const { return q_; }

  std::shared_ptr<const Level> level(const GSet& x) const {
    std::lock_guard lock(cache_->mu);
    auto key = std::make_pair(x.size(), x.act_table());
    auto it = cache_->levels.find(key);
    if (it != cache_->levels.end()) return it->second;
    if (cache_->levels.size() > 4096) cache_->levels.clear();
    auto lv = std::make_shared<Level>();
    Product p = product(x, q_.carrier);
    const int nq = q_.size();
    lv->xq = p.prod;
    lv->px = p.pr1;
    lv->pq = p.pr2.fn;
    std::vector<int> u(x.size());
    for (int i = 0; i < x.size(); ++i) u[i] = i * nq + q_.unit;
    lv->unit = GMap{x, lv->xq, std::move(u)};
    lv->square = pullback(lv->px, lv->px);
    std::vector<int> c(lv->square.apex.size());
    for (int w = 0; w < lv->square.apex.size(); ++w) {
      int a = lv->square.proj1.fn[w], b = lv->square.proj2.fn[w];
      c[w] = (a / nq) * nq + q_.mul(a % nq, b % nq);
    }
    lv->convolve = GMap{lv->square.apex, lv->xq, std::move(c)};
    cache_->levels.emplace(std::move(key), lv);
    return lv;
  }

  /// f x Q.
  GMap times_q(const GMap& f) const {
    const int nq = q_.size();
    const GSet s = level(f.src)->xq;
    const GSet d = level(f.dst)->xq;
    std::vector<int> fn(s.size());
    for (int i = 0; i < s.size(); ++i) fn[i] = f.fn[i / nq] * nq + i % nq;
    return GMap{s, d, std::move(fn)};
  }

  Element zero(const GSet& x) const { return t_.zero(level(x)->xq); }
  Element add(const GSet& x, const Element& a, const Element& b) const { return t_.add(level(x)->xq, a, b); }
  Element negate(const GSet& x, const Element& a) const { return t_.negate(level(x)->xq, a); }
  Element restrict(const GMap& f, const Element& b) const { return t_.restrict(times_q(f), b); }
  Element transfer(const GMap& f, const Element& a) const { return t_.transfer(times_q(f), a); }

  Element one(const GSet& x) const {
    auto lvp = level(x);
    const Level& lv = *lvp;
    return t_.transfer(lv.unit, t_.one(x));
  }
  Element mul(const GSet& x, const Element& a, const Element& b) const {
    auto lvp = level(x);
    const Level& lv = *lvp;
    const GSet& w = lv.square.apex;
    return t_.transfer(lv.convolve, t_.mul(w, t_.restrict(lv.square.proj1, a), t_.restrict(lv.square.proj2, b)));
  }
  Element norm(const GMap& f, const Element& a) const {
    auto lsp = level(f.src);
    auto ldp = level(f.dst);
    const Level& ls = *lsp;
    const Level& ld = *ldp;
    const int nq = q_.size();
    ExponentialData ex = dependent_product(f, ls.px, t_caps());
    std::vector<int> mu(ex.pi_f_a.size());
    for (int i = 0; i < ex.pi_f_a.size(); ++i) {
      int prod = q_.unit;
      for (int pt : ex.section(i)) prod = q_.mul(prod, pt % nq);
      mu[i] = ex.section_y[i] * nq + prod;
    }
    GMap mu_f{ex.pi_f_a, ld.xq, std::move(mu)};
    return t_.transfer(mu_f, t_.norm(ex.fprime, t_.restrict(ex.e, a)));
  }

  std::vector<Element> elements(const GSet& x, std::size_t limit) const { return t_.elements(level(x)->xq, limit); }

  std::vector<Element> generators(const GSet& x) const
    requires Presented<T>
  {
    return t_.generators(level(x)->xq);
  }
  IntMatrix relations(const GSet& x) const
    requires Presented<T>
  {
    return t_.relations(level(x)->xq);
  }
  std::vector<Int> coords(const GSet& x, const Element& e) const
    requires Presented<T>
  {
    return t_.coords(level(x)->xq, e);
  }

  std::string show(const GSet& x, const Element& e) const { return t_.show(level(x)->xq, e); }

 private:
  std::size_t t_caps() const {
    if constexpr (requires { t_.caps(); }) return t_.caps().sections;
    else return kDefaultSectionCap;
  }

  struct Cache {
    std::mutex mu;
    std::map<std::pair<int, std::vector<int>>, std::shared_ptr<Level>> levels;
  };

  T t_;
  GMonoid q_;
  std::shared_ptr<Cache> cache_;
};

/// The morphism T_Q -> T_Q' induced by a monoid homomorphism h: Q -> Q'.
template <Tambara T>
Morphism<Dress<T>, Dress<T>> dress_map(const Dress<T>& src, const Dress<T>& dst, std::vector<int> h) {
  const GMonoid& q = src.monoid();
  const GMonoid& q2 = dst.monoid();
  if (h.size() != static_cast<std::size_t>(q.size())) throw std::invalid_argument("monoid map has wrong size");
  if (h[q.unit] != q2.unit) throw std::invalid_argument("monoid map does not preserve the unit");
  for (int a = 0; a < q.size(); ++a)
    for (int b = 0; b < q.size(); ++b)
      if (h[q.mul(a, b)] != q2.mul(h[a], h[b])) throw std::invalid_argument("monoid map is not multiplicative");
  if (!GMap{q.carrier, q2.carrier, h}.is_equivariant()) throw std::invalid_argument("monoid map is not equivariant");
  auto comp = [src, dst, h](const GSet& x, const typename T::Element& e) {
    const int n1 = src.monoid().size(), n2 = dst.monoid().size();
    auto la = src.level(x);
    auto lb = dst.level(x);
    const GSet& a = la->xq;
    const GSet& b = lb->xq;
    std::vector<int> fn(a.size());
    for (int i = 0; i < a.size(); ++i) fn[i] = (i / n1) * n2 + h[i % n1];
    return src.base().transfer(GMap{a, b, std::move(fn)}, e);
  };
  return make_morphism<Dress<T>, Dress<T>>(src, dst, comp, "dress-map");
}

}  // namespace tambara
