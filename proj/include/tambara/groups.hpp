#pragma once

// Finite groups as dense multiplication tables, with the subgroup lattice,
// conjugation and coset actions precomputed at construction.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace tambara {

/// Default cap on group order for presets and imported tables.
inline constexpr int kDefaultGroupOrderCap = 24;

using SubgroupMask = std::uint32_t;
using SubgroupId = int;

struct GSetData;

/// Left coset space G/H: point i is the coset rep[i]*H, point 0 is H itself.
struct CosetTable {
  int size = 0;
  std::vector<int> rep;
  std::vector<int> coset_of;  // element -> coset index
  std::vector<int> act;       // act[g*size + i]
};

class FiniteGroup {
 public:
  FiniteGroup(std::string name, int order, std::vector<int> mul) : name_(std::move(name)), order_(order), mul_(std::move(mul)) {
    if (order_ <= 0) throw std::invalid_argument("group order must be positive");
    if (order_ > 32) throw std::invalid_argument("group order exceeds 32");
    if (mul_.size() != static_cast<std::size_t>(order_) * order_) throw std::invalid_argument("multiplication table has wrong size");
    for (int v : mul_)
      if (v < 0 || v >= order_) throw std::invalid_argument("multiplication table entry out of range");
    validate();
    build_subgroups();
  }

  FiniteGroup(const FiniteGroup&) = delete;
  FiniteGroup& operator=(const FiniteGroup&) = delete;

  const std::string& name() const { return name_; }
  int order() const { return order_; }
  int identity() const { return id_; }
  int mul(int a, int b) const { return mul_[a * order_ + b]; }
  int inv(int a) const { return inv_[a]; }
  const std::vector<int>& table() const { return mul_; }

  int num_subgroups() const { return static_cast<int>(masks_.size()); }
  SubgroupMask mask(SubgroupId h) const { return masks_[h]; }
  const std::vector<int>& elements(SubgroupId h) const { return elements_[h]; }
  int subgroup_order(SubgroupId h) const { return static_cast<int>(elements_[h].size()); }
  SubgroupId trivial_subgroup() const { return 0; }
  SubgroupId whole() const { return num_subgroups() - 1; }
  bool contains(SubgroupId h, int g) const { return (masks_[h] >> g) & 1u; }
  bool is_subgroup_of(SubgroupId h, SubgroupId k) const { return (masks_[h] & ~masks_[k]) == 0; }

  SubgroupId subgroup_id(SubgroupMask m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw std::invalid_argument("element set is not a subgroup");
    return it->second;
  }
  bool is_subgroup_mask(SubgroupMask m) const { return index_.count(m) != 0; }

  /// g H g^{-1}
  SubgroupId conjugate(int g, SubgroupId h) const { return conj_[g * num_subgroups() + h]; }
  SubgroupId intersect(SubgroupId a, SubgroupId b) const { return subgroup_id(masks_[a] & masks_[b]); }

  /// Lexicographically least conjugate of h under elements of k (h <= k).
  SubgroupId canonical_within(SubgroupId h, SubgroupId k) const {
    auto v = canon_[h * num_subgroups() + k];
    if (v < 0) throw std::invalid_argument("canonical_within: not a subgroup of the conjugating group");
    return v;
  }
  /// An element c of k with c h c^{-1} == canonical_within(h, k).
  int canonical_element(SubgroupId h, SubgroupId k) const {
    canonical_within(h, k);
    return canon_elem_[h * num_subgroups() + k];
  }
  SubgroupId class_rep(SubgroupId h) const { return canonical_within(h, whole()); }

  SubgroupId normalizer(SubgroupId h) const {
    SubgroupMask m = 0;
    for (int g = 0; g < order_; ++g)
      if (conjugate(g, h) == h) m |= SubgroupMask{1} << g;
    return subgroup_id(m);
  }

  const CosetTable& cosets(SubgroupId h) const { return cosets_[h]; }

  /// Transitive G-set cache slot (filled by the gsets module).
  std::shared_ptr<const GSetData> cached_transitive(SubgroupId h) const {
    std::lock_guard lock(cache_mu_);
    return transitive_cache_[h];
  }
  void store_transitive(SubgroupId h, std::shared_ptr<const GSetData> d) const {
    std::lock_guard lock(cache_mu_);
    if (!transitive_cache_[h]) transitive_cache_[h] = std::move(d);
  }

 private:
  void validate() {
    id_ = -1;
    for (int e = 0; e < order_ && id_ < 0; ++e) {
      bool ok = true;
      for (int a = 0; a < order_ && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
      if (ok) id_ = e;
    }
    if (id_ < 0) throw std::invalid_argument("group table has no identity");
    inv_.assign(order_, -1);
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < order_; ++b)
        if (mul(a, b) == id_ && mul(b, a) == id_) inv_[a] = b;
    for (int a = 0; a < order_; ++a)
      if (inv_[a] < 0) throw std::invalid_argument("group table has an element without inverse");
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < order_; ++b)
        for (int c = 0; c < order_; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw std::invalid_argument("group table is not associative");
  }

  SubgroupMask closure(SubgroupMask m) const {
    m |= SubgroupMask{1} << id_;
    for (;;) {
      SubgroupMask next = m;
      for (int a = 0; a < order_; ++a)
        if ((m >> a) & 1u)
          for (int b = 0; b < order_; ++b)
            if ((m >> b) & 1u) next |= SubgroupMask{1} << mul(a, b);
      if (next == m) return m;
      m = next;
    }
  }

  static std::vector<int> bits(SubgroupMask m) {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
      if ((m >> i) & 1u) out.push_back(i);
    return out;
  }

  void build_subgroups() {
    std::vector<SubgroupMask> found;
    auto add = [&](SubgroupMask m) {
      if (std::find(found.begin(), found.end(), m) == found.end()) found.push_back(m);
    };
    for (int g = 0; g < order_; ++g) add(closure(SubgroupMask{1} << g));
    for (std::size_t done = 0; done < found.size();) {
      std::size_t end = found.size();
      for (std::size_t i = 0; i < end; ++i)
        for (std::size_t j = std::max(done, i + 1); j < end; ++j) add(closure(found[i] | found[j]));
      done = end;
      if (found.size() == end) break;
    }
    std::sort(found.begin(), found.end(), [](SubgroupMask a, SubgroupMask b) {
      auto pa = __builtin_popcount(a), pb = __builtin_popcount(b);
      if (pa != pb) return pa < pb;
      return bits(a) < bits(b);
    });
    masks_ = found;
    for (std::size_t i = 0; i < masks_.size(); ++i) {
      index_[masks_[i]] = static_cast<int>(i);
      elements_.push_back(bits(masks_[i]));
    }
    const int ns = num_subgroups();
    conj_.assign(static_cast<std::size_t>(order_) * ns, -1);
    for (int g = 0; g < order_; ++g)
      for (int h = 0; h < ns; ++h) {
        SubgroupMask m = 0;
        for (int x : elements_[h]) m |= SubgroupMask{1} << mul(mul(g, x), inv_[g]);
        conj_[g * ns + h] = index_.at(m);
      }
    canon_.assign(static_cast<std::size_t>(ns) * ns, -1);
    canon_elem_.assign(static_cast<std::size_t>(ns) * ns, -1);
    for (int k = 0; k < ns; ++k)
      for (int h = 0; h < ns; ++h) {
        if (!is_subgroup_of(h, k)) continue;
        int best = h, best_elem = id_;
        for (int c : elements_[k]) {
          int cand = conjugate(c, h);
          if (cand < best) {
            best = cand;
            best_elem = c;
          }
        }
        canon_[h * ns + k] = best;
        canon_elem_[h * ns + k] = best_elem;
      }
    for (int h = 0; h < ns; ++h) {
      CosetTable t;
      t.coset_of.assign(order_, -1);
      for (int step = 0; step < order_; ++step) {
        const int g = step == 0 ? id_ : (step <= id_ ? step - 1 : step);
        if (t.coset_of[g] >= 0) continue;
        int idx = static_cast<int>(t.rep.size());
        t.rep.push_back(g);
        for (int x : elements_[h]) t.coset_of[mul(g, x)] = idx;
      }
      t.size = static_cast<int>(t.rep.size());
      t.act.resize(static_cast<std::size_t>(order_) * t.size);
      for (int g = 0; g < order_; ++g)
        for (int i = 0; i < t.size; ++i) t.act[g * t.size + i] = t.coset_of[mul(g, t.rep[i])];
      cosets_.push_back(std::move(t));
    }
    transitive_cache_.resize(ns);
  }

  std::string name_;
  int order_;
  std::vector<int> mul_;
  std::vector<int> inv_;
  int id_ = 0;
  std::vector<SubgroupMask> masks_;
  std::vector<std::vector<int>> elements_;
  std::unordered_map<SubgroupMask, int> index_;
  std::vector<int> conj_;
  std::vector<int> canon_;
  std::vector<int> canon_elem_;
  std::vector<CosetTable> cosets_;
  mutable std::mutex cache_mu_;
  mutable std::vector<std::shared_ptr<const GSetData>> transitive_cache_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline GroupPtr make_group_from_table(std::string name, int order, std::vector<int> mul,
                                      int order_cap = kDefaultGroupOrderCap) {
  if (order > order_cap)
    throw std::invalid_argument("group order " + std::to_string(order) + " exceeds cap " + std::to_string(order_cap));
  return std::make_shared<const FiniteGroup>(std::move(name), order, std::move(mul));
}

inline GroupPtr cyclic_group(int n, int order_cap = kDefaultGroupOrderCap) {
  if (n < 1) throw std::invalid_argument("cyclic group needs n >= 1");
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[a * n + b] = (a + b) % n;
  return make_group_from_table("C" + std::to_string(n), n, std::move(mul), order_cap);
}

/// Dihedral group of order 2n; element r^i s^j has index i + n*j.
inline GroupPtr dihedral_group(int n, int order_cap = kDefaultGroupOrderCap) {
  if (n < 1) throw std::invalid_argument("dihedral group needs n >= 1");
  const int ord = 2 * n;
  std::vector<int> mul(static_cast<std::size_t>(ord) * ord);
  for (int x = 0; x < ord; ++x)
    for (int y = 0; y < ord; ++y) {
      int a = x % n, b = x / n, c = y % n, d = y / n;
      int i = ((b ? a - c : a + c) % n + n) % n;
      mul[x * ord + y] = i + n * ((b + d) % 2);
    }
  return make_group_from_table("D" + std::to_string(n), ord, std::move(mul), order_cap);
}

/// Symmetric group on n <= 4 letters; permutations in lexicographic order,
/// product (a*b)(x) = a(b(x)).
inline GroupPtr symmetric_group(int n, int order_cap = kDefaultGroupOrderCap) {
  if (n < 1 || n > 4) throw std::invalid_argument("symmetric preset supports n in 1..4");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  const int ord = static_cast<int>(perms.size());
  std::vector<int> mul(static_cast<std::size_t>(ord) * ord);
  for (int a = 0; a < ord; ++a)
    for (int b = 0; b < ord; ++b) {
      std::vector<int> c(n);
      for (int x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];
      mul[a * ord + b] = index.at(c);
    }
  return make_group_from_table("S" + std::to_string(n), ord, std::move(mul), order_cap);
}

inline GroupPtr klein_group() {
  std::vector<int> mul(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) mul[a * 4 + b] = a ^ b;
  return make_group_from_table("K4", 4, std::move(mul));
}

/// Presets: e/trivial, Cn, Dn, Sn (n <= 4), K4/klein.
inline GroupPtr make_group(const std::string& preset, int order_cap = kDefaultGroupOrderCap) {
  if (preset == "e" || preset == "trivial" || preset == "1") return cyclic_group(1, order_cap);
  if (preset == "K4" || preset == "klein" || preset == "V4") return klein_group();
  if (preset.size() >= 2 && std::isdigit(static_cast<unsigned char>(preset[1]))) {
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(preset.substr(1), &used);
      if (used != preset.size() - 1) n = 0;
    } catch (const std::exception&) {
      n = 0;
    }
    if (n > 0) {
      switch (preset[0]) {
        case 'C': return cyclic_group(n, order_cap);
        case 'D': return dihedral_group(n, order_cap);
        case 'S': return symmetric_group(n, order_cap);
        default: break;
      }
    }
  }
  throw std::invalid_argument("unsupported group preset '" + preset + "'");
}

inline std::vector<std::string> group_presets() { return {"e", "C2", "C3", "C4", "C5", "C6", "K4", "D3", "D4", "D6", "S3", "S4"}; }

/// One representative per conjugacy class of subgroups, sorted by order.
inline std::vector<SubgroupId> subgroups_up_to_conjugacy(const FiniteGroup& g) {
  std::vector<SubgroupId> out;
  for (int h = 0; h < g.num_subgroups(); ++h)
    if (g.class_rep(h) == h) out.push_back(h);
  return out;
}

/// "e", the group name, or the element list of a proper subgroup.
inline std::string subgroup_label(const FiniteGroup& g, SubgroupId h) {
  if (h == g.trivial_subgroup()) return "e";
  if (h == g.whole()) return g.name();
  std::string s = "{";
  for (int x : g.elements(h)) s += (s.size() > 1 ? "," : "") + std::to_string(x);
  return s + "}";
}

inline std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<int> seen(g.order(), 0);
  std::vector<std::vector<int>> out;
  for (int a = 0; a < g.order(); ++a) {
    if (seen[a]) continue;
    std::vector<int> cls;
    for (int x = 0; x < g.order(); ++x) {
      int c = g.mul(g.mul(x, a), g.inv(x));
      if (!seen[c]) {
        seen[c] = 1;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

}  // namespace tambara
