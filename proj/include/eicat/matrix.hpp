#pragma once

#include "eicat/field.hpp"

#include <cassert>
#include <optional>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace eicat {

/// Dense row-major matrix over an exact field K.
/// Values are immutable in practice: operations return new matrices.
template <class K>
struct Matrix {
  using Elem = typename K::Elem;

  K field;
  int rows = 0, cols = 0;
  std::vector<Elem> a;

  Matrix() = default;
  Matrix(K f, int r, int c) : field(f), rows(r), cols(c), a(static_cast<size_t>(r) * c, f.zero()) {}

  Elem& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Elem& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static Matrix identity(K f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
  }

  bool operator==(const Matrix& o) const {
    if (rows != o.rows || cols != o.cols) return false;
    for (size_t i = 0; i < a.size(); ++i)
      if (!field.eq(a[i], o.a[i])) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& x : a)
      if (!field.is_zero(x)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(field, cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  std::vector<Elem> col(int j) const {
    std::vector<Elem> v(rows, field.zero());
    for (int i = 0; i < rows; ++i) v[i] = at(i, j);
    return v;
  }

  std::vector<Elem> apply(const std::vector<Elem>& v) const {
    assert(static_cast<int>(v.size()) == cols);
    std::vector<Elem> r(rows, field.zero());
    for (int i = 0; i < rows; ++i) {
      Elem s = field.zero();
      for (int j = 0; j < cols; ++j) s = field.add(s, field.mul(at(i, j), v[j]));
      r[i] = s;
    }
    return r;
  }
};

template <class K>
Matrix<K> mat_add(const Matrix<K>& x, const Matrix<K>& y) {
  assert(x.rows == y.rows && x.cols == y.cols);
  Matrix<K> r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.field.add(x.a[i], y.a[i]);
  return r;
}

template <class K>
Matrix<K> mat_sub(const Matrix<K>& x, const Matrix<K>& y) {
  assert(x.rows == y.rows && x.cols == y.cols);
  Matrix<K> r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.field.sub(x.a[i], y.a[i]);
  return r;
}

/// Serial reference product, kept as the oracle for the parallel kernel.
template <class K>
Matrix<K> mat_mul_serial(const Matrix<K>& x, const Matrix<K>& y) {
  assert(x.cols == y.rows);
  const K& f = x.field;
  Matrix<K> r(f, x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int l = 0; l < x.cols; ++l) {
      const auto& xv = x.at(i, l);
      if (f.is_zero(xv)) continue;
      for (int j = 0; j < y.cols; ++j)
        r.at(i, j) = f.add(r.at(i, j), f.mul(xv, y.at(l, j)));
    }
  return r;
}

template <class K>
Matrix<K> mat_mul(const Matrix<K>& x, const Matrix<K>& y) {
  assert(x.cols == y.rows);
  const K& f = x.field;
  Matrix<K> r(f, x.rows, y.cols);
#pragma omp parallel for schedule(static) if (static_cast<long>(x.rows) * x.cols * y.cols > 32768)
  for (int i = 0; i < x.rows; ++i)
    for (int l = 0; l < x.cols; ++l) {
      const auto& xv = x.at(i, l);
      if (f.is_zero(xv)) continue;
      for (int j = 0; j < y.cols; ++j)
        r.at(i, j) = f.add(r.at(i, j), f.mul(xv, y.at(l, j)));
    }
  return r;
}

/// In-place reduced row echelon form; returns pivot columns.
/// Pivoting is deterministic: the first row with a nonzero entry in
/// column order, so downstream bases are reproducible.
/// Row updates below/above the pivot run in parallel; rref_serial is the
/// reference implementation.
template <class K>
std::vector<int> rref_inplace(Matrix<K>& m) {
  const K& f = m.field;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int pr = -1;
    for (int i = r; i < m.rows; ++i)
      if (!f.is_zero(m.at(i, c))) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = c; j < m.cols; ++j) std::swap(m.at(r, j), m.at(pr, j));
    auto piv_inv = f.inv(m.at(r, c));
    for (int j = c; j < m.cols; ++j) m.at(r, j) = f.mul(m.at(r, j), piv_inv);
#pragma omp parallel for schedule(static) if (static_cast<long>(m.rows) * m.cols > 16384)
    for (int i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      const auto coef = m.at(i, c);
      if (f.is_zero(coef)) continue;
      for (int j = c; j < m.cols; ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(coef, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class K>
std::vector<int> rref_inplace_serial(Matrix<K>& m) {
  const K& f = m.field;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int pr = -1;
    for (int i = r; i < m.rows; ++i)
      if (!f.is_zero(m.at(i, c))) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = c; j < m.cols; ++j) std::swap(m.at(r, j), m.at(pr, j));
    auto piv_inv = f.inv(m.at(r, c));
    for (int j = c; j < m.cols; ++j) m.at(r, j) = f.mul(m.at(r, j), piv_inv);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      const auto coef = m.at(i, c);
      if (f.is_zero(coef)) continue;
      for (int j = c; j < m.cols; ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(coef, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class K>
std::pair<Matrix<K>, std::vector<int>> mat_rref(const Matrix<K>& m) {
  Matrix<K> r = m;
  auto piv = rref_inplace(r);
  return {std::move(r), std::move(piv)};
}

template <class K>
int mat_rank(const Matrix<K>& m) {
  Matrix<K> r = m;
  return static_cast<int>(rref_inplace(r).size());
}

/// Basis of the right kernel {v : m v = 0}, as column vectors.
template <class K>
std::vector<std::vector<typename K::Elem>> mat_kernel_basis(const Matrix<K>& m) {
  const K& f = m.field;
  auto [r, piv] = mat_rref(m);
  std::vector<bool> is_piv(m.cols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<std::vector<typename K::Elem>> basis;
  for (int c = 0; c < m.cols; ++c) {
    if (is_piv[c]) continue;
    std::vector<typename K::Elem> v(m.cols, f.zero());
    v[c] = f.one();
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = f.neg(r.at(static_cast<int>(i), c));
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Independent spanning set of the column space, as column vectors.
template <class K>
std::vector<std::vector<typename K::Elem>> mat_image_basis(const Matrix<K>& m) {
  auto [r, piv] = mat_rref(m);
  std::vector<std::vector<typename K::Elem>> basis;
  basis.reserve(piv.size());
  for (int c : piv) basis.push_back(m.col(c));
  return basis;
}

/// One exact solution of m x = b, or nullopt when none exists.
template <class K>
std::optional<std::vector<typename K::Elem>> mat_solve(const Matrix<K>& m,
                                                       const std::vector<typename K::Elem>& b) {
  if (static_cast<int>(b.size()) != m.rows)
    throw std::invalid_argument("mat_solve: dimension mismatch");
  const K& f = m.field;
  Matrix<K> aug(f, m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  auto piv = rref_inplace(aug);
  if (!piv.empty() && piv.back() == m.cols) return std::nullopt;
  std::vector<typename K::Elem> x(m.cols, f.zero());
  for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug.at(static_cast<int>(i), m.cols);
  return x;
}

template <class K>
Matrix<K> columns_to_matrix(const K& f, int ambient,
                            const std::vector<std::vector<typename K::Elem>>& cols) {
  Matrix<K> m(f, ambient, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols; ++j) {
    assert(static_cast<int>(cols[j].size()) == ambient);
    for (int i = 0; i < ambient; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

/// Basis of span(u) + span(v) inside a common ambient space.
template <class K>
std::vector<std::vector<typename K::Elem>> subspace_sum(
    const K& f, int ambient, const std::vector<std::vector<typename K::Elem>>& u,
    const std::vector<std::vector<typename K::Elem>>& v) {
  std::vector<std::vector<typename K::Elem>> all = u;
  all.insert(all.end(), v.begin(), v.end());
  return mat_image_basis(columns_to_matrix(f, ambient, all));
}

/// Basis of span(u) ∩ span(v) via the kernel of [U | -V].
template <class K>
std::vector<std::vector<typename K::Elem>> subspace_intersection(
    const K& f, int ambient, const std::vector<std::vector<typename K::Elem>>& u,
    const std::vector<std::vector<typename K::Elem>>& v) {
  Matrix<K> m(f, ambient, static_cast<int>(u.size() + v.size()));
  for (size_t j = 0; j < u.size(); ++j)
    for (int i = 0; i < ambient; ++i) m.at(i, static_cast<int>(j)) = u[j][i];
  for (size_t j = 0; j < v.size(); ++j)
    for (int i = 0; i < ambient; ++i)
      m.at(i, static_cast<int>(u.size() + j)) = f.neg(v[j][i]);
  std::vector<std::vector<typename K::Elem>> out;
  for (const auto& kv : mat_kernel_basis(m)) {
    std::vector<typename K::Elem> w(ambient, f.zero());
    for (size_t j = 0; j < u.size(); ++j)
      for (int i = 0; i < ambient; ++i) w[i] = f.add(w[i], f.mul(kv[j], u[j][i]));
    out.push_back(std::move(w));
  }
  // independent subset
  return mat_image_basis(columns_to_matrix(f, ambient, out));
}

/// Coordinates in a complement of span(sub): a (ambient-dim) x ambient map
/// vanishing exactly on the subspace. Complement spanned by the standard
/// basis vectors at non-pivot positions of rref(sub).
template <class K>
struct QuotientMap {
  Matrix<K> proj;            // q x ambient, q = ambient - dim(sub)
  std::vector<int> section;  // standard-basis indices lifting the quotient basis
};

template <class K>
QuotientMap<K> subspace_quotient_map(const K& f, int ambient,
                                     const std::vector<std::vector<typename K::Elem>>& sub) {
  Matrix<K> s = columns_to_matrix(f, ambient, sub);
  // Row space view: reduce s^T, pivots mark coordinates determined by the subspace.
  Matrix<K> st = s.transpose();
  auto piv = rref_inplace(st);
  std::vector<bool> is_piv(ambient, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<int> free_idx;
  for (int c = 0; c < ambient; ++c)
    if (!is_piv[c]) free_idx.push_back(c);
  int q = static_cast<int>(free_idx.size());
  QuotientMap<K> out{Matrix<K>(f, q, ambient), free_idx};
  // v mod sub: subtract the row-space combination matching v on pivot coords,
  // keep free coordinates. Row i of rref(s^T) has leading 1 at piv[i].
  for (int k = 0; k < q; ++k) {
    int c = free_idx[k];
    out.proj.at(k, c) = f.one();
    for (size_t i = 0; i < piv.size(); ++i)
      out.proj.at(k, piv[i]) = f.neg(st.at(static_cast<int>(i), c));
  }
  // proj * e_c for pivot c: column of -row entries ... verify vanishing on sub in tests.
  return out;
}

}  // namespace eicat
