#pragma once

// Independent reference computations. They use plain integer tables and no
// library code beyond the groups module.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

/// Norm of n copies of the free C2-orbit over C2/e along C2/e -> C2/C2,
/// by listing all sections and sorting them into orbits. Returns the
/// multiplicities of the fixed orbit and of the free orbit.
inline std::pair<long, long> c2_norm_of_free_copies(int n) {
  // A point of the cover is (copy i, position s); the generator flips s.
  // A section picks a copy over each of the two positions.
  std::set<std::pair<int, int>> seen;
  long fixed = 0, free_orbits = 0;
  for (int i0 = 0; i0 < n; ++i0)
    for (int i1 = 0; i1 < n; ++i1) {
      if (seen.count({i0, i1})) continue;
      // g.sigma(x) = g sigma(g^-1 x): the copies trade places.
      std::pair<int, int> image{i1, i0};
      seen.insert({i0, i1});
      seen.insert(image);
      if (image == std::make_pair(i0, i1)) ++fixed;
      else ++free_orbits;
    }
  return {fixed, free_orbits};
}

/// Multiplication table of the monoid ring Z[Q] on the basis Q:
/// table[a][b] is the basis index of a*b.
inline std::vector<std::vector<int>> monoid_ring_table(const std::vector<std::vector<int>>& op) { return op; }

/// Structure constants of Z[Q]: e_a * e_b = e_{ab}, as coefficient vectors.
inline std::vector<std::vector<std::vector<long>>> monoid_ring_constants(const std::vector<std::vector<int>>& op) {
  const std::size_t n = op.size();
  std::vector<std::vector<std::vector<long>>> out(n, std::vector<std::vector<long>>(n, std::vector<long>(n, 0)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) out[a][b][op[a][b]] = 1;
  return out;
}

/// Brute-force Burnside product of two transitive C_p-sets over a point
/// (p prime): orbits of the product set. Basis index 0 = point, 1 = free.
inline std::vector<long> cp_product(int p, int a, int b) {
  auto size = [&](int k) { return k == 0 ? 1 : p; };
  int fixed = 0, total = size(a) * size(b);
  for (int x = 0; x < size(a); ++x)
    for (int y = 0; y < size(b); ++y) {
      // generator acts by +1 on free coordinates
      int nx = size(a) == 1 ? x : (x + 1) % p;
      int ny = size(b) == 1 ? y : (y + 1) % p;
      if (nx == x && ny == y) ++fixed;
    }
  return {fixed, (total - fixed) / p};
}

}  // namespace oracle
