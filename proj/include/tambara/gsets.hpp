#pragma once

// The category of finite G-sets: objects with precomputed orbit data,
// equivariant maps, finite limits, the dependent product along a map, and
// canonical isomorphism-class keys of objects over a base.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tambara/groups.hpp"

namespace tambara {

/// Thrown when an enumeration would exceed a configured size cap.
struct CapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Default cap on the number of points of a dependent product.
inline constexpr std::size_t kDefaultSectionCap = 1'000'000;
/// Default cap on the number of equivariant maps enumerated at once.
inline constexpr std::size_t kDefaultMapCap = 1'000'000;

struct GSetData {
  GroupPtr group;
  int size = 0;
  std::vector<int> act;  // act[g*size + x]
  std::vector<int> orbit_of;
  std::vector<int> reps;         // smallest point of each orbit
  std::vector<int> transporter;  // g with g*x == reps[orbit_of[x]]
  std::vector<SubgroupId> stab;
  std::vector<std::vector<int>> orbits;
};

class GSet {
 public:
  GSet() = default;
  explicit GSet(std::shared_ptr<const GSetData> d) : d_(std::move(d)) {}

  const FiniteGroup& group() const { return *d_->group; }
  const GroupPtr& group_ptr() const { return d_->group; }
  int size() const { return d_->size; }
  bool empty() const { return d_->size == 0; }
  int act(int g, int x) const { return d_->act[g * d_->size + x]; }
  const std::vector<int>& act_table() const { return d_->act; }

  int num_orbits() const { return static_cast<int>(d_->reps.size()); }
  int orbit_of(int x) const { return d_->orbit_of[x]; }
  int orbit_rep(int o) const { return d_->reps[o]; }
  const std::vector<int>& orbit(int o) const { return d_->orbits[o]; }
  int transporter(int x) const { return d_->transporter[x]; }
  SubgroupId stabilizer(int x) const { return d_->stab[x]; }

  const GSetData* data() const { return d_.get(); }

  bool operator==(const GSet& o) const {
    if (d_ == o.d_) return true;
    return d_->group.get() == o.d_->group.get() && d_->size == o.d_->size && d_->act == o.d_->act;
  }

 private:
  std::shared_ptr<const GSetData> d_;
};

namespace detail {

inline std::shared_ptr<GSetData> finish_gset(GroupPtr group, int size, std::vector<int> act) {
  auto d = std::make_shared<GSetData>();
  const FiniteGroup& g = *group;
  d->group = std::move(group);
  d->size = size;
  d->act = std::move(act);
  d->orbit_of.assign(size, -1);
  d->transporter.assign(size, -1);
  d->stab.assign(size, 0);
  for (int x = 0; x < size; ++x) {
    if (d->orbit_of[x] >= 0) continue;
    int o = static_cast<int>(d->reps.size());
    d->reps.push_back(x);
    std::vector<int> pts;
    for (int e = 0; e < g.order(); ++e) {
      int y = d->act[e * size + x];
      if (d->orbit_of[y] < 0) {
        d->orbit_of[y] = o;
        d->transporter[y] = g.inv(e);
        pts.push_back(y);
      }
    }
    std::sort(pts.begin(), pts.end());
    d->orbits.push_back(std::move(pts));
  }
  for (int x = 0; x < size; ++x) {
    SubgroupMask m = 0;
    for (int e = 0; e < g.order(); ++e)
      if (d->act[e * size + x] == x) m |= SubgroupMask{1} << e;
    d->stab[x] = g.subgroup_id(m);
  }
  return d;
}

}  // namespace detail

/// Validated construction from an action table act[g*size + x].
inline GSet make_gset(GroupPtr group, int size, std::vector<int> act) {
  const FiniteGroup& g = *group;
  if (size < 0) throw std::invalid_argument("negative G-set size");
  if (act.size() != static_cast<std::size_t>(g.order()) * size) throw std::invalid_argument("action table has wrong size");
  for (int v : act)
    if (v < 0 || v >= size) throw std::invalid_argument("action table entry out of range");
  for (int x = 0; x < size; ++x)
    if (act[g.identity() * size + x] != x) throw std::invalid_argument("identity does not act trivially");
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      for (int x = 0; x < size; ++x)
        if (act[a * size + act[b * size + x]] != act[g.mul(a, b) * size + x])
          throw std::invalid_argument("action table is not a group action");
  return GSet(detail::finish_gset(std::move(group), size, std::move(act)));
}

/// Internal constructions whose action is correct by construction.
inline GSet make_gset_unchecked(GroupPtr group, int size, std::vector<int> act) {
  return GSet(detail::finish_gset(std::move(group), size, std::move(act)));
}

/// The coset space G/H with left translation; point 0 is H.
inline GSet transitive(const GroupPtr& group, SubgroupId h) {
  if (auto cached = group->cached_transitive(h)) return GSet(cached);
  const CosetTable& t = group->cosets(h);
  auto d = detail::finish_gset(group, t.size, t.act);
  group->store_transitive(h, d);
  return GSet(group->cached_transitive(h));
}

inline GSet point_set(const GroupPtr& group) { return transitive(group, group->whole()); }
inline GSet empty_set(const GroupPtr& group) { return make_gset_unchecked(group, 0, {}); }

struct GMap {
  GSet src;
  GSet dst;
  std::vector<int> fn;

  int operator()(int x) const { return fn[x]; }

  bool is_equivariant() const {
    const FiniteGroup& g = src.group();
    for (int e = 0; e < g.order(); ++e)
      for (int x = 0; x < src.size(); ++x)
        if (fn[src.act(e, x)] != dst.act(e, fn[x])) return false;
    return true;
  }
  bool is_bijective() const {
    if (src.size() != dst.size()) return false;
    std::vector<char> hit(dst.size(), 0);
    for (int v : fn) {
      if (hit[v]) return false;
      hit[v] = 1;
    }
    return true;
  }
  bool operator==(const GMap& o) const { return fn == o.fn && src == o.src && dst == o.dst; }
};

inline GMap make_gmap(GSet src, GSet dst, std::vector<int> fn) {
  if (fn.size() != static_cast<std::size_t>(src.size())) throw std::invalid_argument("map table has wrong size");
  for (int v : fn)
    if (v < 0 || v >= dst.size()) throw std::invalid_argument("map table entry out of range");
  GMap m{std::move(src), std::move(dst), std::move(fn)};
  if (!m.is_equivariant()) throw std::invalid_argument("map is not equivariant");
  return m;
}

inline GMap identity_map(const GSet& x) {
  std::vector<int> fn(x.size());
  for (int i = 0; i < x.size(); ++i) fn[i] = i;
  return GMap{x, x, std::move(fn)};
}

/// g after f.
inline GMap compose(const GMap& g, const GMap& f) {
  std::vector<int> fn(f.src.size());
  for (int i = 0; i < f.src.size(); ++i) fn[i] = g.fn[f.fn[i]];
  return GMap{f.src, g.dst, std::move(fn)};
}

inline GMap terminal_map(const GSet& x) { return GMap{x, point_set(x.group_ptr()), std::vector<int>(x.size(), 0)}; }

inline GMap inverse_map(const GMap& f) {
  if (!f.is_bijective()) throw std::invalid_argument("inverse of a non-bijective map");
  std::vector<int> fn(f.dst.size());
  for (int i = 0; i < f.src.size(); ++i) fn[f.fn[i]] = i;
  return GMap{f.dst, f.src, std::move(fn)};
}

struct Coproduct {
  GSet sum;
  std::vector<GMap> inclusions;
};

inline Coproduct coproduct(const GroupPtr& group, const std::vector<GSet>& parts) {
  int total = 0;
  for (const auto& p : parts) total += p.size();
  const int n = group->order();
  std::vector<int> act(static_cast<std::size_t>(n) * total);
  int off = 0;
  for (const auto& p : parts) {
    for (int e = 0; e < n; ++e)
      for (int x = 0; x < p.size(); ++x) act[e * total + off + x] = off + p.act(e, x);
    off += p.size();
  }
  Coproduct c{make_gset_unchecked(group, total, std::move(act)), {}};
  off = 0;
  for (const auto& p : parts) {
    std::vector<int> fn(p.size());
    for (int x = 0; x < p.size(); ++x) fn[x] = off + x;
    c.inclusions.push_back(GMap{p, c.sum, std::move(fn)});
    off += p.size();
  }
  return c;
}

inline Coproduct coproduct(const GSet& a, const GSet& b) { return coproduct(a.group_ptr(), {a, b}); }

/// Copairing [f_1, ..., f_k] out of a coproduct.
inline GMap copair(const Coproduct& c, const std::vector<GMap>& maps) {
  if (maps.empty()) throw std::invalid_argument("copair of no maps");
  std::vector<int> fn(c.sum.size());
  for (std::size_t i = 0; i < maps.size(); ++i)
    for (int x = 0; x < maps[i].src.size(); ++x) fn[c.inclusions[i].fn[x]] = maps[i].fn[x];
  return GMap{c.sum, maps.front().dst, std::move(fn)};
}

struct Product {
  GSet prod;
  GMap pr1;
  GMap pr2;
};

/// Point (a, b) has index a*|B| + b.
inline Product product(const GSet& a, const GSet& b) {
  const int n = a.group().order();
  const int sz = a.size() * b.size();
  std::vector<int> act(static_cast<std::size_t>(n) * sz);
  for (int e = 0; e < n; ++e)
    for (int x = 0; x < a.size(); ++x)
      for (int y = 0; y < b.size(); ++y) act[e * sz + x * b.size() + y] = a.act(e, x) * b.size() + b.act(e, y);
  GSet p = make_gset_unchecked(a.group_ptr(), sz, std::move(act));
  std::vector<int> f1(sz), f2(sz);
  for (int i = 0; i < sz; ++i) {
    f1[i] = i / std::max(1, b.size());
    f2[i] = i % std::max(1, b.size());
  }
  return Product{p, GMap{p, a, std::move(f1)}, GMap{p, b, std::move(f2)}};
}

/// The invariant subset of `a` flagged by `member`, with its inclusion.
inline std::pair<GSet, GMap> sub_gset(const GSet& a, const std::vector<char>& member) {
  std::vector<int> index(a.size(), -1), pts;
  for (int x = 0; x < a.size(); ++x)
    if (member[x]) {
      index[x] = static_cast<int>(pts.size());
      pts.push_back(x);
    }
  const int n = a.group().order();
  const int sz = static_cast<int>(pts.size());
  std::vector<int> act(static_cast<std::size_t>(n) * sz);
  for (int e = 0; e < n; ++e)
    for (int i = 0; i < sz; ++i) {
      int y = index[a.act(e, pts[i])];
      if (y < 0) throw std::invalid_argument("sub_gset: subset is not invariant");
      act[e * sz + i] = y;
    }
  GSet s = make_gset_unchecked(a.group_ptr(), sz, std::move(act));
  return {s, GMap{s, a, std::move(pts)}};
}

struct PullbackData {
  GSet apex;
  GMap proj1;  // to the source of f
  GMap proj2;  // to the source of g
};

/// Canonical pullback {(x, y) : f(x) = g(y)} ordered by x, then y.
inline PullbackData pullback(const GMap& f, const GMap& g) {
  if (!(f.dst == g.dst)) throw std::invalid_argument("pullback: maps do not share a codomain");
  const GSet& X = f.src;
  const GSet& Y = g.src;
  const int zs = f.dst.size();
  std::vector<std::vector<int>> bucket(zs);
  std::vector<int> pos(Y.size());
  for (int y = 0; y < Y.size(); ++y) {
    pos[y] = static_cast<int>(bucket[g.fn[y]].size());
    bucket[g.fn[y]].push_back(y);
  }
  std::vector<int> start(X.size() + 1, 0);
  for (int x = 0; x < X.size(); ++x) start[x + 1] = start[x] + static_cast<int>(bucket[f.fn[x]].size());
  const int sz = start[X.size()];
  std::vector<int> p1(sz), p2(sz);
  for (int x = 0; x < X.size(); ++x)
    for (std::size_t k = 0; k < bucket[f.fn[x]].size(); ++k) {
      p1[start[x] + k] = x;
      p2[start[x] + k] = bucket[f.fn[x]][k];
    }
  const int n = X.group().order();
  std::vector<int> act(static_cast<std::size_t>(n) * sz);
  for (int e = 0; e < n; ++e)
    for (int i = 0; i < sz; ++i) {
      int x = X.act(e, p1[i]), y = Y.act(e, p2[i]);
      act[e * sz + i] = start[x] + pos[y];
    }
  GSet apex = make_gset_unchecked(X.group_ptr(), sz, std::move(act));
  return PullbackData{apex, GMap{apex, X, std::move(p1)}, GMap{apex, Y, std::move(p2)}};
}

/// The canonical exponential diagram generated by f: X -> Y and p: A -> X.
/// Point i of Pi_f(A) is (section_y[i], sigma_i) where sigma_i assigns to the
/// k-th point of fibers[y] the A-point section(i)[k].
struct ExponentialData {
  GSet pi_f_a;
  GMap pi;             // Pi_f(A) -> Y
  GSet fiber_product;  // X x_Y Pi_f(A)
  GMap fprime;         // fiber_product -> Pi_f(A)
  GMap e;              // fiber_product -> A
  GMap proj_x;         // fiber_product -> X
  std::vector<std::vector<int>> fibers;
  std::vector<int> section_y;
  std::vector<int> section_offset;
  std::vector<int> section_data;

  std::span<const int> section(int i) const {
    return {section_data.data() + section_offset[i], static_cast<std::size_t>(section_offset[i + 1] - section_offset[i])};
  }
};

inline ExponentialData dependent_product(const GMap& f, const GMap& p, std::size_t cap = kDefaultSectionCap) {
  if (!(p.dst == f.src)) throw std::invalid_argument("dependent_product: p must land in the source of f");
  const GSet& X = f.src;
  const GSet& Y = f.dst;
  const GSet& A = p.src;
  const int n = X.group().order();
  ExponentialData ex;
  ex.fibers.assign(Y.size(), {});
  std::vector<int> pos_x(X.size());
  for (int x = 0; x < X.size(); ++x) {
    pos_x[x] = static_cast<int>(ex.fibers[f.fn[x]].size());
    ex.fibers[f.fn[x]].push_back(x);
  }
  std::vector<std::vector<int>> choices(X.size());
  std::vector<int> pos_a(A.size());
  for (int a = 0; a < A.size(); ++a) {
    pos_a[a] = static_cast<int>(choices[p.fn[a]].size());
    choices[p.fn[a]].push_back(a);
  }
  std::vector<std::size_t> count(Y.size()), offset(Y.size() + 1, 0);
  for (int y = 0; y < Y.size(); ++y) {
    std::size_t c = 1;
    for (int x : ex.fibers[y]) {
      std::size_t k = choices[x].size();
      if (k == 0) {
        c = 0;
        break;
      }
      if (c > cap / k + 1) {
        c = cap + 1;
      } else {
        c *= k;
      }
    }
    count[y] = std::min(c, cap + 1);
    offset[y + 1] = offset[y] + count[y];
    if (offset[y + 1] > cap)
      throw CapError("dependent product needs more than " + std::to_string(cap) + " sections");
  }
  const int total = static_cast<int>(offset[Y.size()]);
  ex.section_y.resize(total);
  ex.section_offset.assign(total + 1, 0);
  for (int y = 0; y < Y.size(); ++y) {
    const auto& fib = ex.fibers[y];
    for (std::size_t r = 0; r < count[y]; ++r) {
      int idx = static_cast<int>(offset[y] + r);
      ex.section_y[idx] = y;
      ex.section_offset[idx + 1] = ex.section_offset[idx] + static_cast<int>(fib.size());
    }
  }
  ex.section_data.resize(ex.section_offset[total]);
  // Mixed radix: the first fiber point is the least significant digit.
  for (int y = 0; y < Y.size(); ++y) {
    const auto& fib = ex.fibers[y];
    for (std::size_t r = 0; r < count[y]; ++r) {
      int idx = static_cast<int>(offset[y] + r);
      std::size_t rem = r;
      for (std::size_t k = 0; k < fib.size(); ++k) {
        const auto& ch = choices[fib[k]];
        ex.section_data[ex.section_offset[idx] + k] = ch[rem % ch.size()];
        rem /= ch.size();
      }
    }
  }
  auto rank_of = [&](int y, const std::vector<int>& digits) {
    std::size_t r = 0, w = 1;
    const auto& fib = ex.fibers[y];
    for (std::size_t k = 0; k < fib.size(); ++k) {
      r += digits[k] * w;
      w *= choices[fib[k]].size();
    }
    return static_cast<int>(offset[y] + r);
  };
  std::vector<int> act(static_cast<std::size_t>(n) * total);
  std::vector<int> digits;
  for (int e = 0; e < n; ++e) {
    const int einv = X.group().inv(e);
    for (int i = 0; i < total; ++i) {
      const int y = ex.section_y[i];
      const int gy = Y.act(e, y);
      const auto& fib2 = ex.fibers[gy];
      digits.assign(fib2.size(), 0);
      auto sec = ex.section(i);
      for (std::size_t k2 = 0; k2 < fib2.size(); ++k2) {
        int xsrc = X.act(einv, fib2[k2]);
        int a = sec[pos_x[xsrc]];
        digits[k2] = pos_a[A.act(e, a)];
      }
      act[e * total + i] = rank_of(gy, digits);
    }
  }
  ex.pi_f_a = make_gset_unchecked(X.group_ptr(), total, std::move(act));
  ex.pi = GMap{ex.pi_f_a, Y, ex.section_y};
  PullbackData pb = pullback(f, ex.pi);
  ex.fiber_product = pb.apex;
  ex.proj_x = pb.proj1;
  ex.fprime = pb.proj2;
  std::vector<int> efn(pb.apex.size());
  for (int z = 0; z < pb.apex.size(); ++z) {
    int x = pb.proj1.fn[z];
    efn[z] = ex.section(pb.proj2.fn[z])[pos_x[x]];
  }
  ex.e = GMap{pb.apex, A, std::move(efn)};
  return ex;
}

/// Equivariant bijection h: A -> B with q after h == p, found by backtracking
/// over orbit matchings; the first match in canonical order is returned.
inline std::optional<GMap> iso_over(const GSet& /*base*/, const GMap& p, const GMap& q) {
  const GSet& A = p.src;
  const GSet& B = q.src;
  if (A.size() != B.size() || A.num_orbits() != B.num_orbits()) return std::nullopt;
  const int no = A.num_orbits();
  std::vector<int> chosen(no, -1);
  std::vector<char> used(no, 0);
  std::function<bool(int)> solve = [&](int o) -> bool {
    if (o == no) return true;
    const int a = A.orbit_rep(o);
    for (int ob = 0; ob < no; ++ob) {
      if (used[ob] || B.orbit(ob).size() != A.orbit(o).size()) continue;
      for (int b : B.orbit(ob)) {
        if (B.stabilizer(b) != A.stabilizer(a) || q.fn[b] != p.fn[a]) continue;
        used[ob] = 1;
        chosen[o] = b;
        if (solve(o + 1)) return true;
        used[ob] = 0;
        break;  // any valid point of this orbit is equivalent
      }
    }
    return false;
  };
  if (!solve(0)) return std::nullopt;
  std::vector<int> fn(A.size());
  const FiniteGroup& g = A.group();
  for (int x = 0; x < A.size(); ++x) fn[x] = B.act(g.inv(A.transporter(x)), chosen[A.orbit_of(x)]);
  return GMap{A, B, std::move(fn)};
}

/// All equivariant maps A -> B, by choosing images of orbit representatives.
inline std::vector<GMap> all_gmaps(const GSet& A, const GSet& B, std::size_t cap = kDefaultMapCap) {
  const FiniteGroup& g = A.group();
  const int no = A.num_orbits();
  std::vector<std::vector<int>> cand(no);
  std::size_t total = 1;
  for (int o = 0; o < no; ++o) {
    SubgroupId h = A.stabilizer(A.orbit_rep(o));
    for (int b = 0; b < B.size(); ++b)
      if (g.is_subgroup_of(h, B.stabilizer(b))) cand[o].push_back(b);
    if (cand[o].empty()) return {};
    if (total > cap / cand[o].size()) throw CapError("all_gmaps: more than " + std::to_string(cap) + " maps");
    total *= cand[o].size();
  }
  std::vector<GMap> out;
  out.reserve(total);
  std::vector<std::size_t> idx(no, 0);
  for (std::size_t t = 0; t < total; ++t) {
    std::vector<int> fn(A.size());
    for (int x = 0; x < A.size(); ++x) fn[x] = B.act(g.inv(A.transporter(x)), cand[A.orbit_of(x)][idx[A.orbit_of(x)]]);
    out.push_back(GMap{A, B, std::move(fn)});
    for (int o = 0; o < no; ++o) {
      if (++idx[o] < cand[o].size()) break;
      idx[o] = 0;
    }
  }
  return out;
}

/// Maps h: A -> B with q after h == p.
inline std::vector<GMap> maps_over(const GMap& p, const GMap& q, std::size_t cap = kDefaultMapCap) {
  std::vector<GMap> out;
  for (auto& h : all_gmaps(p.src, q.src, cap)) {
    bool ok = true;
    for (int x = 0; x < p.src.size() && ok; ++x) ok = q.fn[h.fn[x]] == p.fn[x];
    if (ok) out.push_back(std::move(h));
  }
  return out;
}

/// Isomorphism class of a transitive object (G/H -> X): the orbit
/// representative x0 of the image orbit and the lexicographically least
/// G_{x0}-conjugate H of the point stabilizer.
struct OrbitKey {
  int base = 0;
  SubgroupId sub = 0;
  auto operator<=>(const OrbitKey&) const = default;
};

/// A transitive piece of an object over X: its key and an equivariant
/// bijection from the standard realization G/H onto the orbit.
struct OrbitChart {
  OrbitKey key;
  GMap chart;  // G/H -> A, injective, with p(chart(gH)) = g * base
};

/// Standard realization (G/H --p--> X) of a key.
inline GMap realize(const GSet& X, const OrbitKey& k) {
  const GroupPtr& g = X.group_ptr();
  GSet a = transitive(g, k.sub);
  const CosetTable& t = g->cosets(k.sub);
  std::vector<int> fn(a.size());
  for (int i = 0; i < a.size(); ++i) fn[i] = X.act(t.rep[i], k.base);
  return GMap{a, X, std::move(fn)};
}

inline OrbitChart orbit_chart(const GMap& p, int a) {
  const GSet& X = p.dst;
  const GSet& A = p.src;
  const FiniteGroup& g = A.group();
  const int x = p.fn[a];
  const int t = X.transporter(x);
  const int x0 = X.orbit_rep(X.orbit_of(x));
  const int a1 = A.act(t, a);
  const SubgroupId h = A.stabilizer(a1);
  const SubgroupId gx = X.stabilizer(x0);
  const int c = g.canonical_element(h, gx);
  const SubgroupId hc = g.conjugate(c, h);
  const int a2 = A.act(c, a1);
  GSet std_orbit = transitive(A.group_ptr(), hc);
  const CosetTable& ct = g.cosets(hc);
  std::vector<int> fn(std_orbit.size());
  for (int i = 0; i < std_orbit.size(); ++i) fn[i] = A.act(ct.rep[i], a2);
  return OrbitChart{OrbitKey{x0, hc}, GMap{std_orbit, A, std::move(fn)}};
}

inline std::vector<OrbitChart> orbit_charts(const GMap& p) {
  std::vector<OrbitChart> out;
  for (int o = 0; o < p.src.num_orbits(); ++o) out.push_back(orbit_chart(p, p.src.orbit_rep(o)));
  return out;
}

inline OrbitKey orbit_key(const GMap& p, int a) {
  const GSet& X = p.dst;
  const GSet& A = p.src;
  const FiniteGroup& g = A.group();
  const int x = p.fn[a];
  const int t = X.transporter(x);
  const int x0 = X.orbit_rep(X.orbit_of(x));
  return OrbitKey{x0, g.canonical_within(A.stabilizer(A.act(t, a)), X.stabilizer(x0))};
}

/// Canonical key of an object over X: the sorted multiset of orbit keys.
using ObjectKey = std::vector<OrbitKey>;

inline ObjectKey canonical_key(const GMap& p) {
  ObjectKey k;
  for (int o = 0; o < p.src.num_orbits(); ++o) k.push_back(orbit_key(p, p.src.orbit_rep(o)));
  std::sort(k.begin(), k.end());
  return k;
}

/// All transitive objects over X up to isomorphism, in key order.
inline std::vector<OrbitKey> orbit_objects(const GSet& X) {
  std::vector<OrbitKey> out;
  const FiniteGroup& g = X.group();
  for (int o = 0; o < X.num_orbits(); ++o) {
    const int x0 = X.orbit_rep(o);
    const SubgroupId gx = X.stabilizer(x0);
    for (int h = 0; h < g.num_subgroups(); ++h)
      if (g.is_subgroup_of(h, gx) && g.canonical_within(h, gx) == h) out.push_back(OrbitKey{x0, h});
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Automorphisms of the standard realization of `k` over X:
/// gH -> g n H for n in N_G(H) with n fixing the base point.
inline std::vector<GMap> automorphisms_over(const GSet& X, const OrbitKey& k) {
  const GroupPtr& gp = X.group_ptr();
  const FiniteGroup& g = *gp;
  GSet a = transitive(gp, k.sub);
  const CosetTable& t = g.cosets(k.sub);
  std::vector<GMap> out;
  std::vector<char> seen(a.size(), 0);
  for (int n = 0; n < g.order(); ++n) {
    if (g.conjugate(n, k.sub) != k.sub || X.act(n, k.base) != k.base) continue;
    int image0 = t.coset_of[n];
    if (seen[image0]) continue;
    seen[image0] = 1;
    std::vector<int> fn(a.size());
    for (int i = 0; i < a.size(); ++i) fn[i] = t.coset_of[g.mul(t.rep[i], n)];
    out.push_back(GMap{a, a, std::move(fn)});
  }
  return out;
}

/// Transitive G-sets and all two-orbit coproducts, used as test levels.
inline std::vector<GSet> orbit_levels(const GroupPtr& g) {
  std::vector<GSet> out;
  for (SubgroupId h : subgroups_up_to_conjugacy(*g)) out.push_back(transitive(g, h));
  return out;
}

inline std::vector<GSet> two_orbit_levels(const GroupPtr& g) {
  std::vector<GSet> out;
  auto reps = subgroups_up_to_conjugacy(*g);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i; j < reps.size(); ++j)
      out.push_back(coproduct(transitive(g, reps[i]), transitive(g, reps[j])).sum);
  return out;
}

inline std::string describe(const GSet& x) {
  const FiniteGroup& g = x.group();
  if (x.size() == 0) return "{}";
  std::string s;
  for (int o = 0; o < x.num_orbits(); ++o)
    s += (o ? " + " : "") + g.name() + "/" + subgroup_label(g, x.stabilizer(x.orbit_rep(o)));
  return "{" + s + "}";
}

inline std::string describe(const GMap& f) {
  std::string s = describe(f.src) + " -> " + describe(f.dst) + " [";
  for (std::size_t i = 0; i < f.fn.size(); ++i) s += (i ? "," : "") + std::to_string(f.fn[i]);
  return s + "]";
}

}  // namespace tambara
