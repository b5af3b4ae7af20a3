#pragma once

// Semi-Mackey functors as duck-typed value types. A functor F provides
//   Element, name(), group(), zero(X), add(X,a,b), restrict(f,b), transfer(f,a),
//   elements(X, limit), show(X,e)
// and optionally negate (Mackey), enumerate(X) (finite levels) and the
// presentation triple generators(X), relations(X), coords(X,e).

#include <algorithm>
#include <concepts>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tambara/burnside.hpp"
#include "tambara/config.hpp"
#include "tambara/gsets.hpp"
#include "tambara/report.hpp"
#include "tambara/zlin.hpp"

namespace tambara {

template <class F>
concept SemiMackey = requires(const F& m, const GSet& x, const GMap& f, const typename F::Element& e, std::size_t n) {
  { m.name() } -> std::convertible_to<std::string>;
  { m.group() } -> std::convertible_to<GroupPtr>;
  { m.zero(x) } -> std::same_as<typename F::Element>;
  { m.add(x, e, e) } -> std::same_as<typename F::Element>;
  { m.restrict(f, e) } -> std::same_as<typename F::Element>;
  { m.transfer(f, e) } -> std::same_as<typename F::Element>;
  { m.elements(x, n) } -> std::same_as<std::vector<typename F::Element>>;
  { m.show(x, e) } -> std::convertible_to<std::string>;
  requires std::equality_comparable<typename F::Element>;
};

template <class F>
concept Mackey = SemiMackey<F> && requires(const F& m, const GSet& x, const typename F::Element& e) {
  { m.negate(x, e) } -> std::same_as<typename F::Element>;
};

template <class F>
concept Enumerable = SemiMackey<F> && requires(const F& m, const GSet& x) {
  { m.enumerate(x) } -> std::same_as<std::vector<typename F::Element>>;
};

template <class F>
concept Presented = SemiMackey<F> && requires(const F& m, const GSet& x, const typename F::Element& e) {
  { m.generators(x) } -> std::same_as<std::vector<typename F::Element>>;
  { m.relations(x) } -> std::same_as<IntMatrix>;
  { m.coords(x, e) } -> std::same_as<std::vector<Int>>;
};

/// Whether negate is usable at runtime (P_Q only has inverses when Q is a group).
template <class F>
bool has_inverses(const F& m) {
  if constexpr (requires { m.has_inverses(); }) return m.has_inverses();
  else return Mackey<F>;
}

/// n*e using the additive structure; negative n needs negate.
template <class F>
typename F::Element scale(const F& m, const GSet& x, const typename F::Element& e, Coef n) {
  typename F::Element acc = m.zero(x), base = e;
  if (n < 0) {
    if constexpr (Mackey<F>) {
      base = m.negate(x, e);
      n = -n;
    } else {
      throw std::domain_error("negative multiple in a functor without inverses");
    }
  }
  while (n > 0) {
    if (n & 1) acc = m.add(x, acc, base);
    n >>= 1;
    if (n) base = m.add(x, base, base);
  }
  return acc;
}

template <class F>
typename F::Element sum_elements(const F& m, const GSet& x, const std::vector<typename F::Element>& es) {
  typename F::Element acc = m.zero(x);
  for (const auto& e : es) acc = m.add(x, acc, e);
  return acc;
}

/// Decomposes an element over a coproduct and assembles it back: the
/// additivity isomorphism F(A_1 + ... + A_k) = F(A_1) x ... x F(A_k).
template <class F>
typename F::Element assemble(const F& m, const Coproduct& c, const std::vector<typename F::Element>& parts) {
  typename F::Element acc = m.zero(c.sum);
  for (std::size_t i = 0; i < parts.size(); ++i) acc = m.add(c.sum, acc, m.transfer(c.inclusions[i], parts[i]));
  return acc;
}

// ---------------------------------------------------------------------------
// G-monoids

struct GMonoid {
  std::string name;
  GSet carrier;
  std::vector<int> op;  // op[a*size + b]
  int unit = 0;

  int size() const { return carrier.size(); }
  int mul(int a, int b) const { return op[a * size() + b]; }

  std::optional<int> inverse(int a) const {
    for (int b = 0; b < size(); ++b)
      if (mul(a, b) == unit) return b;
    return std::nullopt;
  }
  bool is_group() const {
    for (int a = 0; a < size(); ++a)
      if (!inverse(a)) return false;
    return true;
  }
};

inline GMonoid make_monoid(std::string name, GSet carrier, std::vector<int> op, int unit) {
  const int n = carrier.size();
  if (n == 0) throw std::invalid_argument("monoid carrier is empty");
  if (op.size() != static_cast<std::size_t>(n) * n) throw std::invalid_argument("monoid table has wrong size");
  for (int v : op)
    if (v < 0 || v >= n) throw std::invalid_argument("monoid table entry out of range");
  if (unit < 0 || unit >= n) throw std::invalid_argument("monoid unit out of range");
  GMonoid q{std::move(name), std::move(carrier), std::move(op), unit};
  for (int a = 0; a < n; ++a) {
    if (q.mul(unit, a) != a) throw std::invalid_argument("monoid unit is not a unit");
    for (int b = 0; b < n; ++b) {
      if (q.mul(a, b) != q.mul(b, a)) throw std::invalid_argument("monoid is not commutative");
      for (int c = 0; c < n; ++c)
        if (q.mul(q.mul(a, b), c) != q.mul(a, q.mul(b, c))) throw std::invalid_argument("monoid is not associative");
    }
  }
  const FiniteGroup& g = q.carrier.group();
  for (int e = 0; e < g.order(); ++e) {
    if (q.carrier.act(e, unit) != unit) throw std::invalid_argument("group does not fix the monoid unit");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (q.carrier.act(e, q.mul(a, b)) != q.mul(q.carrier.act(e, a), q.carrier.act(e, b)))
          throw std::invalid_argument("monoid product is not equivariant");
  }
  return q;
}

inline GSet trivial_action(const GroupPtr& g, int n) {
  std::vector<int> act(static_cast<std::size_t>(g->order()) * n);
  for (int e = 0; e < g->order(); ++e)
    for (int x = 0; x < n; ++x) act[e * n + x] = x;
  return make_gset(g, n, std::move(act));
}

/// The first index-two subgroup, if any; elements outside it act by the
/// twisting involution of the twisted presets.
inline std::optional<SubgroupId> sign_kernel(const FiniteGroup& g) {
  for (int h = 0; h < g.num_subgroups(); ++h)
    if (2 * g.subgroup_order(h) == g.order()) return h;
  return std::nullopt;
}

inline GSet involution_action(const GroupPtr& g, const std::vector<int>& involution) {
  const int n = static_cast<int>(involution.size());
  auto k = sign_kernel(*g);
  std::vector<int> act(static_cast<std::size_t>(g->order()) * n);
  for (int e = 0; e < g->order(); ++e)
    for (int x = 0; x < n; ++x) act[e * n + x] = (!k || g->contains(*k, e)) ? x : involution[x];
  return make_gset(g, n, std::move(act));
}

/// Presets: trivial, Cn (cyclic group, trivial action), idempotent2 ({1,s},
/// s*s = s), twisted3 (C3 with elements outside an index-two subgroup acting
/// by inversion), subsets2 (subsets of a 2-point set under union, the same
/// elements swapping the two points).
inline GMonoid make_monoid_preset(const GroupPtr& g, const std::string& preset) {
  if (preset == "trivial") return make_monoid("trivial", trivial_action(g, 1), {0}, 0);
  if (preset == "idempotent2") return make_monoid("idempotent2", trivial_action(g, 2), {0, 1, 1, 1}, 0);
  if (preset == "twisted3") {
    std::vector<int> op(9);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) op[a * 3 + b] = (a + b) % 3;
    return make_monoid("twisted3", involution_action(g, {0, 2, 1}), std::move(op), 0);
  }
  if (preset == "subsets2") {
    std::vector<int> op(16);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) op[a * 4 + b] = a | b;
    return make_monoid("subsets2", involution_action(g, {0, 2, 1, 3}), std::move(op), 0);
  }
  if (preset.size() >= 2 && preset[0] == 'C') {
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(preset.substr(1), &used);
      if (used != preset.size() - 1) n = 0;
    } catch (const std::exception&) {
      n = 0;
    }
    if (n >= 1 && n <= 12) {
      std::vector<int> op(static_cast<std::size_t>(n) * n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) op[a * n + b] = (a + b) % n;
      return make_monoid(preset, trivial_action(g, n), std::move(op), 0);
    }
  }
  throw std::invalid_argument("unsupported monoid preset '" + preset + "'");
}

inline std::vector<std::string> monoid_presets() { return {"trivial", "C2", "C3", "idempotent2", "twisted3", "subsets2"}; }

// ---------------------------------------------------------------------------
// Fixed point functor P_Q: equivariant maps X -> Q.

class FixedPoint {
 public:
  using Element = std::vector<int>;

  FixedPoint(GroupPtr g, GMonoid q) : g_(std::move(g)), q_(std::move(q)) {
    if (q_.carrier.group_ptr().get() != g_.get()) throw std::invalid_argument("monoid is acted on by a different group");
  }

  std::string name() const { return "fixpt:" + q_.name; }
  const GroupPtr& group() const { return g_; }
  const GMonoid& monoid() const { return q_; }
  bool has_inverses() const { return q_.is_group(); }

  Element zero(const GSet& x) const { return Element(x.size(), q_.unit); }
  Element add(const GSet& x, const Element& a, const Element& b) const {
    Element out(x.size());
    for (int i = 0; i < x.size(); ++i) out[i] = q_.mul(a[i], b[i]);
    return out;
  }
  Element negate(const GSet& x, const Element& a) const {
    Element out(x.size());
    for (int i = 0; i < x.size(); ++i) {
      auto inv = q_.inverse(a[i]);
      if (!inv) throw std::domain_error("monoid element has no inverse");
      out[i] = *inv;
    }
    return out;
  }
  Element restrict(const GMap& f, const Element& b) const {
    Element out(f.src.size());
    for (int i = 0; i < f.src.size(); ++i) out[i] = b[f.fn[i]];
    return out;
  }
  /// Product over each fiber.
  Element transfer(const GMap& f, const Element& a) const {
    Element out(f.dst.size(), q_.unit);
    for (int i = 0; i < f.src.size(); ++i) out[f.fn[i]] = q_.mul(out[f.fn[i]], a[i]);
    return out;
  }

  std::vector<Element> enumerate(const GSet& x) const {
    std::vector<Element> out;
    for (auto& m : all_gmaps(x, q_.carrier)) out.push_back(std::move(m.fn));
    std::sort(out.begin(), out.end());
    return out;
  }
  std::vector<Element> elements(const GSet& x, std::size_t limit) const {
    auto all = enumerate(x);
    if (all.size() > limit) all.resize(limit);
    return all;
  }

  // Presentation (Q an abelian group): one generator per element, relations
  // [a] + [b] - [a+b] and [0].
  std::vector<Element> generators(const GSet& x) const {
    require_group();
    return enumerate(x);
  }
  IntMatrix relations(const GSet& x) const {
    require_group();
    auto all = enumerate(x);
    const std::size_t n = all.size();
    auto index = [&](const Element& e) { return static_cast<std::size_t>(std::lower_bound(all.begin(), all.end(), e) - all.begin()); };
    std::vector<std::vector<Int>> cols;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        std::vector<Int> c(n);
        c[i] += 1;
        c[j] += 1;
        c[index(add(x, all[i], all[j]))] -= 1;
        cols.push_back(std::move(c));
      }
    std::vector<Int> z(n);
    z[index(zero(x))] = 1;
    cols.push_back(std::move(z));
    IntMatrix r(n, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < n; ++i) r(i, j) = cols[j][i];
    return r;
  }
  std::vector<Int> coords(const GSet& x, const Element& e) const {
    require_group();
    auto all = enumerate(x);
    std::vector<Int> c(all.size());
    auto it = std::lower_bound(all.begin(), all.end(), e);
    if (it == all.end() || *it != e) throw std::invalid_argument("not an equivariant map into the monoid");
    c[it - all.begin()] = 1;
    return c;
  }

  std::string show(const GSet&, const Element& e) const {
    std::string s = "(";
    for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
    return s + ")";
  }

 private:
  void require_group() const {
    if (!q_.is_group()) throw std::domain_error("presentation of the fixed point functor needs a group");
  }

  GroupPtr g_;
  GMonoid q_;
};

// ---------------------------------------------------------------------------
// Direct sums and the zero functor.

template <SemiMackey M, SemiMackey N>
class DirectSum {
 public:
  using Element = std::pair<typename M::Element, typename N::Element>;

  DirectSum(M m, N n) : m_(std::move(m)), n_(std::move(n)) {}

  std::string name() const { return m_.name() + "+" + n_.name(); }
  const GroupPtr& group() const { return m_.group(); }
  const M& first() const { return m_; }
  const N& second() const { return n_; }
  bool has_inverses() const { return tambara::has_inverses(m_) && tambara::has_inverses(n_); }

  Element zero(const GSet& x) const { return {m_.zero(x), n_.zero(x)}; }
  Element add(const GSet& x, const Element& a, const Element& b) const {
    return {m_.add(x, a.first, b.first), n_.add(x, a.second, b.second)};
  }
  Element negate(const GSet& x, const Element& a) const
    requires Mackey<M> && Mackey<N>
  {
    return {m_.negate(x, a.first), n_.negate(x, a.second)};
  }
  Element restrict(const GMap& f, const Element& b) const { return {m_.restrict(f, b.first), n_.restrict(f, b.second)}; }
  Element transfer(const GMap& f, const Element& a) const { return {m_.transfer(f, a.first), n_.transfer(f, a.second)}; }

  std::vector<Element> enumerate(const GSet& x) const
    requires Enumerable<M> && Enumerable<N>
  {
    std::vector<Element> out;
    auto a = m_.enumerate(x);
    auto b = n_.enumerate(x);
    for (const auto& u : a)
      for (const auto& v : b) out.emplace_back(u, v);
    return out;
  }
  std::vector<Element> elements(const GSet& x, std::size_t limit) const {
    std::vector<Element> out;
    auto a = m_.elements(x, limit);
    auto b = n_.elements(x, limit);
    for (const auto& u : a)
      for (const auto& v : b) {
        if (out.size() >= limit) return out;
        out.emplace_back(u, v);
      }
    return out;
  }

  std::vector<Element> generators(const GSet& x) const
    requires Presented<M> && Presented<N>
  {
    std::vector<Element> out;
    for (const auto& g : m_.generators(x)) out.emplace_back(g, n_.zero(x));
    for (const auto& g : n_.generators(x)) out.emplace_back(m_.zero(x), g);
    return out;
  }
  IntMatrix relations(const GSet& x) const
    requires Presented<M> && Presented<N>
  {
    IntMatrix a = m_.relations(x), b = n_.relations(x);
    IntMatrix r(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
    return r;
  }
  std::vector<Int> coords(const GSet& x, const Element& e) const
    requires Presented<M> && Presented<N>
  {
    auto c = m_.coords(x, e.first);
    auto d = n_.coords(x, e.second);
    c.insert(c.end(), d.begin(), d.end());
    return c;
  }

  std::string show(const GSet& x, const Element& e) const { return "(" + m_.show(x, e.first) + ", " + n_.show(x, e.second) + ")"; }

 private:
  M m_;
  N n_;
};

struct Nothing {
  auto operator<=>(const Nothing&) const = default;
};

class ZeroFunctor {
 public:
  using Element = Nothing;
  explicit ZeroFunctor(GroupPtr g) : g_(std::move(g)) {}
  std::string name() const { return "zero"; }
  const GroupPtr& group() const { return g_; }
  Element zero(const GSet&) const { return {}; }
  Element add(const GSet&, const Element&, const Element&) const { return {}; }
  Element negate(const GSet&, const Element&) const { return {}; }
  Element restrict(const GMap&, const Element&) const { return {}; }
  Element transfer(const GMap&, const Element&) const { return {}; }
  std::vector<Element> enumerate(const GSet&) const { return {Nothing{}}; }
  std::vector<Element> elements(const GSet&, std::size_t) const { return {Nothing{}}; }
  std::vector<Element> generators(const GSet&) const { return {}; }
  IntMatrix relations(const GSet&) const { return IntMatrix(0, 0); }
  std::vector<Int> coords(const GSet&, const Element&) const { return {}; }
  std::string show(const GSet&, const Element&) const { return "0"; }

 private:
  GroupPtr g_;
};

// ---------------------------------------------------------------------------
// Morphisms

template <class S, class T>
using Component = std::function<typename T::Element(const GSet&, const typename S::Element&)>;

template <class S, class T>
struct Morphism {
  S src;
  T dst;
  Component<S, T> component;
  std::string name;

  typename T::Element operator()(const GSet& x, const typename S::Element& e) const { return component(x, e); }
};

template <class S, class T>
Morphism<S, T> make_morphism(S src, T dst, Component<S, T> c, std::string name) {
  return Morphism<S, T>{std::move(src), std::move(dst), std::move(c), std::move(name)};
}

template <SemiMackey M>
Morphism<M, M> identity_morphism(const M& m) {
  return make_morphism<M, M>(m, m, [](const GSet&, const typename M::Element& e) { return e; }, "id");
}

template <SemiMackey M, SemiMackey N>
Morphism<M, DirectSum<M, N>> inclusion_first(const M& m, const N& n) {
  return make_morphism<M, DirectSum<M, N>>(
      m, DirectSum<M, N>(m, n), [n](const GSet& x, const typename M::Element& e) { return std::make_pair(e, n.zero(x)); },
      "inc1");
}
template <SemiMackey M, SemiMackey N>
Morphism<N, DirectSum<M, N>> inclusion_second(const M& m, const N& n) {
  return make_morphism<N, DirectSum<M, N>>(
      n, DirectSum<M, N>(m, n), [m](const GSet& x, const typename N::Element& e) { return std::make_pair(m.zero(x), e); },
      "inc2");
}
template <SemiMackey M, SemiMackey N>
Morphism<DirectSum<M, N>, M> projection_first(const M& m, const N& n) {
  return make_morphism<DirectSum<M, N>, M>(
      DirectSum<M, N>(m, n), m, [](const GSet&, const typename DirectSum<M, N>::Element& e) { return e.first; }, "pr1");
}
template <SemiMackey M, SemiMackey N>
Morphism<DirectSum<M, N>, N> projection_second(const M& m, const N& n) {
  return make_morphism<DirectSum<M, N>, N>(
      DirectSum<M, N>(m, n), n, [](const GSet&, const typename DirectSum<M, N>::Element& e) { return e.second; }, "pr2");
}
template <SemiMackey M>
Morphism<M, DirectSum<M, M>> diagonal_morphism(const M& m) {
  return make_morphism<M, DirectSum<M, M>>(
      m, DirectSum<M, M>(m, m), [](const GSet&, const typename M::Element& e) { return std::make_pair(e, e); }, "diag");
}

// ---------------------------------------------------------------------------
// Verification

struct SuiteOptions {
  std::size_t budget = 2'000'000;
  std::size_t elements_per_level = 8;
  bool two_orbit_levels = true;
  std::size_t max_exponent_points = 12;  // |A| in distributive-law diagrams
  std::size_t max_squares_per_target = 4096;
};

inline SuiteOptions suite_options(const Caps& caps) {
  SuiteOptions o;
  o.budget = caps.budget;
  return o;
}

/// Orbit levels, followed by two-orbit levels when requested.
inline std::vector<GSet> test_levels(const GroupPtr& g, bool two_orbit) {
  auto out = orbit_levels(g);
  if (two_orbit)
    for (auto& x : two_orbit_levels(g)) out.push_back(std::move(x));
  return out;
}

/// Maps from test levels into orbit levels.
struct MapFamily {
  std::vector<GSet> levels;
  std::vector<GSet> targets;
  std::vector<std::vector<GMap>> into;  // into[t]: maps into targets[t]
};

inline MapFamily generating_maps(const GroupPtr& g, bool two_orbit, std::size_t map_cap = kDefaultMapCap) {
  MapFamily fam;
  fam.levels = test_levels(g, two_orbit);
  fam.targets = orbit_levels(g);
  for (const auto& c : fam.targets) {
    std::vector<GMap> maps;
    for (const auto& a : fam.levels)
      for (auto& f : all_gmaps(a, c, map_cap)) maps.push_back(std::move(f));
    fam.into.push_back(std::move(maps));
  }
  return fam;
}

namespace detail {

template <class F>
std::string witness_map(const F& m, const GMap& f, const GSet& x, const typename F::Element& e) {
  return "map " + describe(f) + " on " + m.show(x, e);
}

template <class Fn>
void guarded(CheckRun& run, const std::string& family, Fn fn) {
  try {
    fn();
  } catch (const CapError& e) {
    run.report().complete = false;
  } catch (const std::exception& e) {
    run.error(family, e.what());
  }
}

}  // namespace detail

template <SemiMackey F>
Report check_mackey(const F& m, const SuiteOptions& opt, const std::string& suite = "mackey") {
  CheckRun run(suite + ":" + m.name() + "@" + m.group()->name(), opt.budget);
  const GroupPtr& g = m.group();
  MapFamily fam = generating_maps(g, opt.two_orbit_levels);
  auto elems = [&](const GSet& x) { return m.elements(x, opt.elements_per_level); };

  // Identities and homomorphism property along every generating map.
  for (const auto& x : fam.levels) {
    auto es = elems(x);
    GMap id = identity_map(x);
    for (const auto& e : es) {
      detail::guarded(run, "restrict-identity", [&] {
        run.expect("restrict-identity", m.restrict(id, e) == e, [&] { return detail::witness_map(m, id, x, e); });
      });
      detail::guarded(run, "transfer-identity", [&] {
        run.expect("transfer-identity", m.transfer(id, e) == e, [&] { return detail::witness_map(m, id, x, e); });
      });
    }
  }
  for (std::size_t t = 0; t < fam.targets.size() && !run.exhausted(); ++t) {
    const GSet& c = fam.targets[t];
    auto ces = elems(c);
    for (const auto& f : fam.into[t]) {
      auto aes = elems(f.src);
      detail::guarded(run, "transfer-additive", [&] {
        run.expect("transfer-additive", m.transfer(f, m.zero(f.src)) == m.zero(c),
                   [&] { return "transfer of zero along " + describe(f); });
        for (const auto& a : aes)
          for (const auto& b : aes) {
            auto lhs = m.transfer(f, m.add(f.src, a, b));
            auto rhs = m.add(c, m.transfer(f, a), m.transfer(f, b));
            run.expect("transfer-additive", lhs == rhs, [&] {
              return "map " + describe(f) + " on " + m.show(f.src, a) + " and " + m.show(f.src, b) + ": " + m.show(c, lhs) +
                     " vs " + m.show(c, rhs);
            });
          }
      });
      detail::guarded(run, "restrict-additive", [&] {
        run.expect("restrict-additive", m.restrict(f, m.zero(c)) == m.zero(f.src),
                   [&] { return "restriction of zero along " + describe(f); });
        for (const auto& a : ces)
          for (const auto& b : ces) {
            auto lhs = m.restrict(f, m.add(c, a, b));
            auto rhs = m.add(f.src, m.restrict(f, a), m.restrict(f, b));
            run.expect("restrict-additive", lhs == rhs, [&] {
              return "map " + describe(f) + " on " + m.show(c, a) + " and " + m.show(c, b) + ": " + m.show(f.src, lhs) +
                     " vs " + m.show(f.src, rhs);
            });
          }
      });
    }
  }

  // Functoriality: A -> B -> C with B, C orbits.
  for (std::size_t tb = 0; tb < fam.targets.size() && !run.exhausted(); ++tb)
    for (std::size_t tc = 0; tc < fam.targets.size(); ++tc) {
      const GSet& b = fam.targets[tb];
      const GSet& c = fam.targets[tc];
      auto gs = all_gmaps(b, c);
      if (gs.empty()) continue;
      auto ces = elems(c);
      for (const auto& f : fam.into[tb]) {
        auto aes = elems(f.src);
        for (const auto& gm : gs) {
          GMap gf = compose(gm, f);
          detail::guarded(run, "transfer-composition", [&] {
            for (const auto& a : aes) {
              auto lhs = m.transfer(gf, a);
              auto rhs = m.transfer(gm, m.transfer(f, a));
              run.expect("transfer-composition", lhs == rhs, [&] {
                return "maps " + describe(f) + " then " + describe(gm) + " on " + m.show(f.src, a) + ": " + m.show(c, lhs) +
                       " vs " + m.show(c, rhs);
              });
            }
          });
          detail::guarded(run, "restrict-composition", [&] {
            for (const auto& e : ces) {
              auto lhs = m.restrict(gf, e);
              auto rhs = m.restrict(f, m.restrict(gm, e));
              run.expect("restrict-composition", lhs == rhs, [&] {
                return "maps " + describe(f) + " then " + describe(gm) + " on " + m.show(c, e) + ": " + m.show(f.src, lhs) +
                       " vs " + m.show(f.src, rhs);
              });
            }
          });
        }
      }
    }

  // Additivity over two-orbit coproducts.
  const auto orbits = orbit_levels(g);
  for (std::size_t i = 0; i < orbits.size() && !run.exhausted(); ++i)
    for (std::size_t j = i; j < orbits.size(); ++j) {
      Coproduct cp = coproduct(orbits[i], orbits[j]);
      detail::guarded(run, "additivity", [&] {
        auto as = elems(orbits[i]);
        auto bs = elems(orbits[j]);
        for (const auto& a : as)
          for (const auto& b : bs) {
            auto s = assemble(m, cp, {a, b});
            bool ok = m.restrict(cp.inclusions[0], s) == a && m.restrict(cp.inclusions[1], s) == b;
            run.expect("additivity", ok, [&] {
              return "pair " + m.show(orbits[i], a) + ", " + m.show(orbits[j], b) + " over " + describe(cp.sum);
            });
          }
        auto ss = elems(cp.sum);
        for (const auto& s : ss) {
          auto back = assemble(m, cp, {m.restrict(cp.inclusions[0], s), m.restrict(cp.inclusions[1], s)});
          run.expect("additivity", back == s, [&] { return "element " + m.show(cp.sum, s) + " over " + describe(cp.sum); });
        }
      });
    }

  // Mackey condition on pullback squares over orbit targets; at least one leg
  // starts at an orbit.
  for (std::size_t t = 0; t < fam.targets.size() && !run.exhausted(); ++t) {
    const GSet& c = fam.targets[t];
    std::size_t squares = 0;
    for (const auto& f : fam.into[t]) {
      if (f.src.num_orbits() != 1) continue;
      auto aes = elems(f.src);
      for (const auto& gm : fam.into[t]) {
        if (++squares > opt.max_squares_per_target) break;
        detail::guarded(run, "mackey-square", [&] {
          PullbackData pb = pullback(f, gm);
          for (const auto& a : aes) {
            auto lhs = m.restrict(gm, m.transfer(f, a));
            auto rhs = m.transfer(pb.proj2, m.restrict(pb.proj1, a));
            run.expect("mackey-square", lhs == rhs, [&] {
              return "square f=" + describe(f) + " g=" + describe(gm) + " on " + m.show(f.src, a) + ": " + m.show(gm.src, lhs) +
                     " vs " + m.show(gm.src, rhs);
            });
          }
        });
      }
    }
  }
  return run.finish();
}

template <SemiMackey S, SemiMackey T>
Report check_mackey_morphism(const Morphism<S, T>& phi, const SuiteOptions& opt) {
  CheckRun run("morphism:" + phi.name, opt.budget);
  const S& s = phi.src;
  const T& t = phi.dst;
  MapFamily fam = generating_maps(s.group(), opt.two_orbit_levels);
  for (const auto& x : fam.levels) {
    auto es = s.elements(x, opt.elements_per_level);
    detail::guarded(run, "additive", [&] {
      run.expect("additive", phi(x, s.zero(x)) == t.zero(x), [&] { return "zero at " + describe(x); });
      for (const auto& a : es)
        for (const auto& b : es) {
          bool ok = phi(x, s.add(x, a, b)) == t.add(x, phi(x, a), phi(x, b));
          run.expect("additive", ok, [&] { return "at " + describe(x) + " on " + s.show(x, a) + " and " + s.show(x, b); });
        }
    });
  }
  for (std::size_t k = 0; k < fam.targets.size() && !run.exhausted(); ++k) {
    const GSet& c = fam.targets[k];
    auto ces = s.elements(c, opt.elements_per_level);
    for (const auto& f : fam.into[k]) {
      auto aes = s.elements(f.src, opt.elements_per_level);
      detail::guarded(run, "natural-restrict", [&] {
        for (const auto& e : ces)
          run.expect("natural-restrict", phi(f.src, s.restrict(f, e)) == t.restrict(f, phi(c, e)),
                     [&] { return detail::witness_map(s, f, c, e); });
      });
      detail::guarded(run, "natural-transfer", [&] {
        for (const auto& a : aes)
          run.expect("natural-transfer", phi(c, s.transfer(f, a)) == t.transfer(f, phi(f.src, a)),
                     [&] { return detail::witness_map(s, f, f.src, a); });
      });
    }
  }
  return run.finish();
}

// ---------------------------------------------------------------------------
// Morphisms out of the Burnside semi-ring functor.

/// The morphism sending the class of (B -q-> X) to M_*(q) M^*(t_B)(m), where
/// m lies in M(G/G) and t_B: B -> G/G.
template <SemiMackey M>
Morphism<BurnsideSemiring, M> morphism_from_GG_element(const BurnsideSemiring& a, const M& m, const typename M::Element& v) {
  auto comp = [m, v](const GSet& x, const BurnsideElement& e) {
    typename M::Element acc = m.zero(x);
    for (const auto& [k, c] : e.terms()) {
      GMap q = realize(x, k);
      auto part = m.transfer(q, m.restrict(terminal_map(q.src), v));
      acc = m.add(x, acc, scale(m, x, part, c));
    }
    return acc;
  };
  return make_morphism<BurnsideSemiring, M>(a, m, comp, "from-GG");
}

/// The value of a morphism out of the semi-ring functor at the indeterminate.
template <SemiMackey M>
typename M::Element value_at_indeterminate(const Morphism<BurnsideSemiring, M>& phi) {
  GSet pt = point_set(phi.src.group());
  return phi(pt, phi.src.indeterminate());
}

}  // namespace tambara
