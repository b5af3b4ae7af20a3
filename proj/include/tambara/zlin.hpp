#pragma once

// Exact integer linear algebra: Smith normal form with transforms,
// cokernel presentations and integer solving.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tambara {

using Int = boost::multiprecision::cpp_int;

inline std::int64_t to_i64(const Int& v) {
  if (v > Int(INT64_MAX) || v < Int(INT64_MIN))
    throw std::overflow_error("integer coordinate does not fit in 64 bits");
  return static_cast<std::int64_t>(v);
}

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      for (long long v : row) data_.emplace_back(v);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const IntMatrix&) const = default;

  IntMatrix operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Int& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }

  std::vector<Int> apply(const std::vector<Int>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
    std::vector<Int> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (v[j] != 0) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  void append_column(const std::vector<Int>& c) {
    if (rows_ == 0 && cols_ == 0) rows_ = c.size();
    if (c.size() != rows_) throw std::invalid_argument("column length mismatch");
    std::vector<Int> next;
    next.reserve(rows_ * (cols_ + 1));
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) next.push_back(std::move(data_[i * cols_ + j]));
      next.push_back(c[i]);
    }
    data_ = std::move(next);
    ++cols_;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Int determinant(IntMatrix m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && m(s, k) == 0) ++s;
      if (s == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(s, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// U * M * V == D with U, V unimodular and D diagonal, d1 | d2 | ... .
/// `u_inv` is the inverse of U.
struct SmithForm {
  IntMatrix u;
  IntMatrix u_inv;
  IntMatrix d;
  IntMatrix v;
  std::size_t rank = 0;

  std::vector<Int> diagonal() const {
    std::vector<Int> out;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
    return out;
  }
};

namespace detail {

struct SnfWork {
  IntMatrix a, u, ui, v;
  std::size_t m, n;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t c = 0; c < m; ++c) std::swap(u(i, c), u(j, c));
    for (std::size_t r = 0; r < m; ++r) std::swap(ui(r, i), ui(r, j));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < m; ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t r = 0; r < n; ++r) std::swap(v(r, i), v(r, j));
  }
  // row_i += k * row_j
  void add_row(std::size_t i, std::size_t j, const Int& k) {
    if (k == 0) return;
    for (std::size_t c = 0; c < n; ++c)
      if (a(j, c) != 0) a(i, c) += k * a(j, c);
    for (std::size_t c = 0; c < m; ++c)
      if (u(j, c) != 0) u(i, c) += k * u(j, c);
    for (std::size_t r = 0; r < m; ++r)
      if (ui(r, i) != 0) ui(r, j) -= k * ui(r, i);
  }
  // col_i += k * col_j
  void add_col(std::size_t i, std::size_t j, const Int& k) {
    if (k == 0) return;
    for (std::size_t r = 0; r < m; ++r)
      if (a(r, j) != 0) a(r, i) += k * a(r, j);
    for (std::size_t r = 0; r < n; ++r)
      if (v(r, j) != 0) v(r, i) += k * v(r, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < n; ++c) a(i, c) = -a(i, c);
    for (std::size_t c = 0; c < m; ++c) u(i, c) = -u(i, c);
    for (std::size_t r = 0; r < m; ++r) ui(r, i) = -ui(r, i);
  }
};

}  // namespace detail

inline SmithForm smith_normal_form(const IntMatrix& input) {
  using boost::multiprecision::abs;
  detail::SnfWork w{input, IntMatrix::identity(input.rows()), IntMatrix::identity(input.rows()),
                    IntMatrix::identity(input.cols()), input.rows(), input.cols()};
  const std::size_t m = w.m, n = w.n;
  std::size_t t = 0;
  while (t < std::min(m, n)) {
    // Pivot: smallest nonzero absolute value in the trailing block.
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (w.a(i, j) != 0 && (pi == m || abs(w.a(i, j)) < abs(w.a(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == m) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i)
        if (w.a(i, t) != 0) {
          w.add_row(i, t, -(w.a(i, t) / w.a(t, t)));
          if (w.a(i, t) != 0) clean = false;
        }
      for (std::size_t j = t + 1; j < n; ++j)
        if (w.a(t, j) != 0) {
          w.add_col(j, t, -(w.a(t, j) / w.a(t, t)));
          if (w.a(t, j) != 0) clean = false;
        }
      if (!clean) {
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (w.a(i, t) != 0 && abs(w.a(i, t)) < abs(w.a(bi, bj))) {
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (w.a(t, j) != 0 && abs(w.a(t, j)) < abs(w.a(bi, bj))) {
            bi = t;
            bj = j;
          }
        w.swap_rows(t, bi);
        w.swap_cols(t, bj);
        continue;
      }
      // Divisibility chain: fold an offending row into the pivot row.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (w.a(i, j) % w.a(t, t) != 0) {
            w.add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (w.a(t, t) < 0) w.negate_row(t);
    ++t;
  }
  SmithForm out{std::move(w.u), std::move(w.ui), std::move(w.a), std::move(w.v), t};
  return out;
}

/// Z^ambient / colspan(R) presented as (+) Z/torsion_i (+) Z^free_rank.
/// Coordinates are ordered torsion first, then free.
struct QuotientPresentation {
  std::size_t ambient = 0;
  std::vector<Int> torsion;
  std::size_t free_rank = 0;
  IntMatrix project;  // (torsion + free) x ambient
  IntMatrix lift;     // ambient x (torsion + free), project * lift == id mod torsion

  std::size_t dimension() const { return torsion.size() + free_rank; }

  std::vector<Int> reduce(const std::vector<Int>& v) const {
    auto c = project.apply(v);
    normalize(c);
    return c;
  }

  void normalize(std::vector<Int>& c) const {
    for (std::size_t i = 0; i < torsion.size(); ++i) {
      c[i] %= torsion[i];
      if (c[i] < 0) c[i] += torsion[i];
    }
  }

  std::vector<Int> lift_coords(const std::vector<Int>& c) const { return lift.apply(c); }
};

inline QuotientPresentation cokernel(const IntMatrix& relations) {
  QuotientPresentation q;
  q.ambient = relations.rows();
  const std::size_t m = relations.rows();
  if (relations.cols() == 0) {
    q.free_rank = m;
    q.project = IntMatrix::identity(m);
    q.lift = IntMatrix::identity(m);
    return q;
  }
  SmithForm s = smith_normal_form(relations);
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.d(i, i) != 1) {
      kept.push_back(i);
      q.torsion.push_back(s.d(i, i));
    }
  for (std::size_t i = s.rank; i < m; ++i) kept.push_back(i);
  q.free_rank = m - s.rank;
  q.project = IntMatrix(kept.size(), m);
  q.lift = IntMatrix(m, kept.size());
  for (std::size_t k = 0; k < kept.size(); ++k)
    for (std::size_t j = 0; j < m; ++j) {
      q.project(k, j) = s.u(kept[k], j);
      q.lift(j, k) = s.u_inv(j, kept[k]);
    }
  return q;
}

/// Solves R x = v over the integers.
inline std::optional<std::vector<Int>> in_image(const IntMatrix& r, const std::vector<Int>& v) {
  if (v.size() != r.rows()) throw std::invalid_argument("in_image: length mismatch");
  if (r.cols() == 0) {
    for (const auto& x : v)
      if (x != 0) return std::nullopt;
    return std::vector<Int>{};
  }
  SmithForm s = smith_normal_form(r);
  auto y = s.u.apply(v);
  std::vector<Int> z(r.cols());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i < s.rank) {
      if (y[i] % s.d(i, i) != 0) return std::nullopt;
      z[i] = y[i] / s.d(i, i);
    } else if (y[i] != 0) {
      return std::nullopt;
    }
  }
  return s.v.apply(z);
}

}  // namespace tambara
