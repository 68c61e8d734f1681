#pragma once

#include "eicat/category.hpp"
#include "eicat/field.hpp"
#include "eicat/matrix.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace eicat {

/// Finite-dimensional algebra whose basis products are again basis
/// elements or zero. Both group algebras and category algebras are of
/// this shape; prod[i*dim+j] is the index of b_i * b_j, or -1 for zero.
struct MonomialAlgebra {
  std::vector<std::string> labels;
  std::vector<int> prod;
  std::vector<int> identity_support;  // basis indices whose sum is 1
  std::vector<int> degree;            // grading (tgt - src for category algebras)

  int dim() const { return static_cast<int>(labels.size()); }
  int product(int i, int j) const { return prod[static_cast<size_t>(i) * dim() + j]; }

  /// Exhaustive associativity and identity check; throws on failure.
  void validate() const;
};

MonomialAlgebra group_algebra_structure(const FiniteGroup& g);

/// The category algebra kC_n: basis = all morphisms, product per the
/// composition rule (zero when not composable), 1 = sum of the object
/// idempotents e_x.
struct CategoryAlgebraStructure {
  MonomialAlgebra algebra;
  std::vector<int> idempotent;  // flat morphism index of e_x per object
};
CategoryAlgebraStructure category_algebra_structure(const FiniteCategory& c);

struct ObjectCriterion {
  int object;
  unsigned long long aut_order;
  bool char_divides;
};
struct InvertibilityReport {
  bool all_invertible;
  std::vector<ObjectCriterion> per_object;
};

/// True iff char(k) divides no automorphism-group order of C (Xu's
/// finite-global-dimension criterion).
InvertibilityReport invertibility_criterion(const FiniteCategory& c, const FieldSpec& k);

// ---------------------------------------------------------------------------
// Radicals.
//
// Characteristic 0 (or p > dim): kernel of the trace form of the regular
// representation. Small positive characteristic: the chain of lifted
// p-power trace conditions ("Tr over an integral lift of (xy)^{p^l} is
// divisible by p^{l+1} for x in the radical"), each level intersected
// with its largest two-sided ideal. The caller is expected to validate
// the result (nilpotency, semisimple quotient).
// ---------------------------------------------------------------------------

template <class K>
using VecList = std::vector<std::vector<typename K::Elem>>;

/// Radical of any monomial algebra, as a list of coefficient vectors.
template <class K>
VecList<K> radical_monomial_algebra(const K& f, const MonomialAlgebra& a);

template <class K>
VecList<K> radical_group_algebra(const K& f, const FiniteGroup& g) {
  return radical_monomial_algebra(f, group_algebra_structure(g));
}

/// Radical of kC_n via the EI decomposition: the span of all
/// non-endomorphism morphisms plus each object's group-algebra radical
/// embedded at its identity component.
template <class K>
VecList<K> radical_category_algebra(const K& f, const FiniteCategory& c);

/// Largest two-sided ideal contained in span(basis).
template <class K>
VecList<K> ideal_core(const K& f, const MonomialAlgebra& a, const VecList<K>& basis);

/// Checks span(basis)^k = 0 for some k <= bound (subspace products).
template <class K>
bool is_nilpotent_subspace(const K& f, const MonomialAlgebra& a, const VecList<K>& basis,
                           int bound);

/// Structure-constant quotient A / span(ideal), with the projection and a
/// linear section for mapping elements both ways.
template <class K>
struct QuotientAlgebra {
  int dim = 0;
  std::vector<std::vector<typename K::Elem>> sc;  // sc[i*dim+j], length-dim vectors
  std::vector<typename K::Elem> identity;
  QuotientMap<K> pi;  // ambient -> quotient coordinates
};

template <class K>
QuotientAlgebra<K> quotient_algebra(const K& f, const MonomialAlgebra& a, const VecList<K>& ideal);

/// Radical of a structure-constant algebra (used to confirm that A/J is
/// semisimple). Gram-kernel certificate first; for positive
/// characteristic, the same lifted-trace chain evaluated through left
/// multiplication operators. Intended for small dimensions.
template <class K>
VecList<K> radical_quotient_algebra(const K& f, const QuotientAlgebra<K>& a);

std::string algebra_to_json(const MonomialAlgebra& a, const FieldSpec& k);

// ---------------------------------------------------------------------------

namespace detail {

std::uint64_t ipow_u64(std::uint64_t b, int e);

/// Index of u^k in the monomial structure (-1 once a product vanishes).
int monomial_power(const MonomialAlgebra& a, int u, std::uint64_t k);

/// Tr over an integral 0/1 lift of (L_u)^{p^l}: the number of basis
/// elements fixed by left multiplication with u^{p^l}.
std::uint64_t lifted_power_trace(const MonomialAlgebra& a, int u, std::uint64_t pl);

}  // namespace detail

template <class K>
Matrix<K> basis_to_matrix(const K& f, int ambient, const VecList<K>& basis) {
  return columns_to_matrix(f, ambient, basis);
}

template <class K>
VecList<K> ideal_core(const K& f, const MonomialAlgebra& a, const VecList<K>& basis) {
  int n = a.dim();
  VecList<K> cur = mat_image_basis(columns_to_matrix(f, n, basis));
  for (;;) {
    if (cur.empty()) return cur;
    auto qm = subspace_quotient_map(f, n, cur);
    int qd = qm.proj.rows;
    if (qd == 0) return cur;  // whole space
    // rows: pi, pi*L_u, pi*R_u for every monomial u
    Matrix<K> stack(f, qd * (2 * n + 1), n);
    for (int r = 0; r < qd; ++r)
      for (int c = 0; c < n; ++c) stack.at(r, c) = qm.proj.at(r, c);
    int row = qd;
    for (int u = 0; u < n; ++u) {
      for (int r = 0; r < qd; ++r, ++row)
        for (int b = 0; b < n; ++b) {
          int ub = a.product(u, b);
          if (ub >= 0) stack.at(row, b) = qm.proj.at(r, ub);
        }
      for (int r = 0; r < qd; ++r, ++row)
        for (int b = 0; b < n; ++b) {
          int bu = a.product(b, u);
          if (bu >= 0) stack.at(row, b) = qm.proj.at(r, bu);
        }
    }
    auto ker = mat_kernel_basis(stack);
    if (ker.size() == cur.size()) return cur;
    cur = ker;
  }
}

template <class K>
VecList<K> radical_monomial_algebra(const K& f, const MonomialAlgebra& a) {
  int n = a.dim();
  if (n == 0) return {};
  std::uint64_t p = f.characteristic();
  if (p == 0 || p > static_cast<std::uint64_t>(n)) {
    // trace-form kernel: Gram_{ij} = Tr(L_{b_i b_j})
    Matrix<K> gram(f, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int ij = a.product(i, j);
        if (ij >= 0)
          gram.at(i, j) = f.from_int(static_cast<long long>(detail::lifted_power_trace(a, ij, 1)));
      }
    return mat_kernel_basis(gram);
  }

  // lifted p-power trace chain: at stage l the condition on x is that the
  // trace of (an integral lift of) (x y)^{p^l}, divided by p^l, vanishes
  // mod p for every y. Powers are taken honestly in the integral monomial
  // ring (coefficient convolution mod p^{l+1}); the trace of a monomial g
  // is the number of basis elements fixed by left multiplication with g.
  std::vector<std::uint64_t> tau(n, 0);
  for (int g = 0; g < n; ++g)
    for (int b = 0; b < n; ++b)
      if (a.product(g, b) == b) ++tau[g];
  auto mul_mod = [&](const std::vector<std::uint64_t>& x, const std::vector<std::uint64_t>& y,
                     std::uint64_t mod) {
    std::vector<std::uint64_t> r(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      if (!x[i]) continue;
      for (int j = 0; j < n; ++j) {
        if (!y[j]) continue;
        int ij = a.product(i, j);
        if (ij >= 0) r[ij] = (r[ij] + x[i] * y[j]) % mod;
      }
    }
    return r;
  };
  VecList<K> basis;
  for (int i = 0; i < n; ++i) {
    std::vector<typename K::Elem> e(n, f.zero());
    e[i] = f.one();
    basis.push_back(std::move(e));
  }
  std::uint64_t pl = 1;  // p^l
  for (int l = 0; pl <= static_cast<std::uint64_t>(n); ++l, pl *= p) {
    if (basis.empty()) break;
    std::uint64_t mod = pl * p;  // p^{l+1}
    Matrix<K> cond(f, n, static_cast<int>(basis.size()));
    for (size_t b = 0; b < basis.size(); ++b)
      for (int h = 0; h < n; ++h) {
        // z = basis[b] * h in the algebra, coefficients lifted to [0, p)
        std::vector<std::uint64_t> z(static_cast<size_t>(n), 0);
        for (int g = 0; g < n; ++g) {
          if (f.is_zero(basis[b][g])) continue;
          int gh = a.product(g, h);
          if (gh >= 0) z[gh] = (z[gh] + f.to_uint(basis[b][g])) % p;
        }
        // w = z^{p^l} mod p^{l+1}: l successive p-th powers
        std::vector<std::uint64_t> w = std::move(z);
        for (int s = 0; s < l; ++s) {
          std::vector<std::uint64_t> acc, base = w;
          std::uint64_t e = p;
          bool first = true;
          while (e > 0) {
            if (e & 1) {
              acc = first ? base : mul_mod(acc, base, mod);
              first = false;
            }
            e >>= 1;
            if (e) base = mul_mod(base, base, mod);
          }
          w = std::move(acc);
        }
        unsigned __int128 val = 0;
        for (int g = 0; g < n; ++g) val += static_cast<unsigned __int128>(w[g]) * tau[g];
        std::uint64_t v = static_cast<std::uint64_t>(val % mod);
        if (v % pl != 0)
          throw std::logic_error("radical chain: trace value not divisible by p^l");
        cond.at(h, static_cast<int>(b)) = f.from_int(static_cast<long long>((v / pl) % p));
      }
    auto coeffs = mat_kernel_basis(cond);
    VecList<K> next;
    for (const auto& cvec : coeffs) {
      std::vector<typename K::Elem> w(n, f.zero());
      for (size_t b = 0; b < basis.size(); ++b)
        for (int g = 0; g < n; ++g)
          w[g] = f.add(w[g], f.mul(cvec[b], basis[b][g]));
      next.push_back(std::move(w));
    }
    basis = ideal_core(f, a, next);
  }
  return basis;
}

template <class K>
VecList<K> radical_category_algebra(const K& f, const FiniteCategory& c) {
  auto cas = category_algebra_structure(c);
  int n = cas.algebra.dim();
  VecList<K> out;
  for (int i = 0; i < n; ++i) {
    if (cas.algebra.degree[i] == 0) continue;  // endomorphism basis elements handled below
    std::vector<typename K::Elem> e(n, f.zero());
    e[i] = f.one();
    out.push_back(std::move(e));
  }
  for (int x = 0; x <= c.n; ++x) {
    auto ag = aut_group(c, x);
    auto jg = radical_group_algebra(f, ag.group);
    int base = c.offset[x][x];
    for (const auto& v : jg) {
      std::vector<typename K::Elem> e(n, f.zero());
      for (int i = 0; i < ag.group.size(); ++i) e[base + ag.hom_index[i]] = v[i];
      out.push_back(std::move(e));
    }
  }
  return out;
}

template <class K>
VecList<K> subspace_product(const K& f, const MonomialAlgebra& a, const VecList<K>& u,
                            const VecList<K>& v) {
  int n = a.dim();
  VecList<K> prods;
  for (const auto& x : u)
    for (const auto& y : v) {
      std::vector<typename K::Elem> w(n, f.zero());
      for (int i = 0; i < n; ++i) {
        if (f.is_zero(x[i])) continue;
        for (int j = 0; j < n; ++j) {
          if (f.is_zero(y[j])) continue;
          int k = a.product(i, j);
          if (k >= 0) w[k] = f.add(w[k], f.mul(x[i], y[j]));
        }
      }
      prods.push_back(std::move(w));
    }
  return mat_image_basis(columns_to_matrix(f, n, prods));
}

template <class K>
bool is_nilpotent_subspace(const K& f, const MonomialAlgebra& a, const VecList<K>& basis,
                           int bound) {
  VecList<K> cur = mat_image_basis(columns_to_matrix(f, a.dim(), basis));
  for (int k = 1; k <= bound; ++k) {
    if (cur.empty()) return true;
    cur = subspace_product(f, a, cur, basis);
  }
  return cur.empty();
}

template <class K>
QuotientAlgebra<K> quotient_algebra(const K& f, const MonomialAlgebra& a, const VecList<K>& ideal) {
  int n = a.dim();
  QuotientAlgebra<K> q;
  q.pi = subspace_quotient_map(f, n, ideal);
  q.dim = q.pi.proj.rows;
  q.sc.assign(static_cast<size_t>(q.dim) * q.dim,
              std::vector<typename K::Elem>(q.dim, f.zero()));
  // section: quotient basis k lifts to the standard basis vector e_{section[k]}
  for (int i = 0; i < q.dim; ++i)
    for (int j = 0; j < q.dim; ++j) {
      int bi = q.pi.section[i], bj = q.pi.section[j];
      int k = a.product(bi, bj);
      if (k < 0) continue;
      for (int r = 0; r < q.dim; ++r) q.sc[static_cast<size_t>(i) * q.dim + j][r] = q.pi.proj.at(r, k);
    }
  q.identity.assign(q.dim, f.zero());
  for (int b : a.identity_support)
    for (int r = 0; r < q.dim; ++r) q.identity[r] = f.add(q.identity[r], q.pi.proj.at(r, b));
  return q;
}

template <class K>
Matrix<K> quotient_left_mult(const K& f, const QuotientAlgebra<K>& a,
                             const std::vector<typename K::Elem>& x) {
  Matrix<K> m(f, a.dim, a.dim);
  for (int j = 0; j < a.dim; ++j)
    for (int i = 0; i < a.dim; ++i) {
      if (f.is_zero(x[i])) continue;
      const auto& sc = a.sc[static_cast<size_t>(i) * a.dim + j];
      for (int r = 0; r < a.dim; ++r) m.at(r, j) = f.add(m.at(r, j), f.mul(x[i], sc[r]));
    }
  return m;
}

template <class K>
VecList<K> radical_quotient_algebra(const K& f, const QuotientAlgebra<K>& a) {
  int n = a.dim;
  if (n == 0) return {};
  std::uint64_t p = f.characteristic();
  // Gram of the regular trace form
  std::vector<Matrix<K>> lmult;
  lmult.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::vector<typename K::Elem> e(n, f.zero());
    e[i] = f.one();
    lmult.push_back(quotient_left_mult(f, a, e));
  }
  Matrix<K> gram(f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      typename K::Elem tr = f.zero();
      const auto& sij = a.sc[static_cast<size_t>(i) * n + j];
      // Tr(L_{bi bj}) = sum_r (bi bj b_r)_r
      for (int r = 0; r < n; ++r) {
        typename K::Elem acc = f.zero();
        for (int s = 0; s < n; ++s)
          acc = f.add(acc, f.mul(sij[s], a.sc[static_cast<size_t>(s) * n + r][r]));
        tr = f.add(tr, acc);
      }
      gram.at(i, j) = tr;
    }
  auto ker = mat_kernel_basis(gram);
  if (p == 0 || p > static_cast<std::uint64_t>(n) || ker.empty()) return ker;

  // positive characteristic: lifted p-power trace chain through integer
  // lifts of the left multiplication operators
  auto lift_mat = [&](const Matrix<K>& m) {
    std::vector<std::uint64_t> v(m.a.size());
    for (size_t i = 0; i < m.a.size(); ++i) v[i] = f.to_uint(m.a[i]);
    return v;
  };
  auto mul_mod = [&](const std::vector<std::uint64_t>& x, const std::vector<std::uint64_t>& y,
                     std::uint64_t mod) {
    std::vector<std::uint64_t> r(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) {
        std::uint64_t xv = x[static_cast<size_t>(i) * n + l];
        if (!xv) continue;
        for (int j = 0; j < n; ++j)
          r[static_cast<size_t>(i) * n + j] =
              (r[static_cast<size_t>(i) * n + j] + xv * y[static_cast<size_t>(l) * n + j]) % mod;
      }
    return r;
  };
  VecList<K> basis = ker;
  std::uint64_t pl = 1;
  for (int l = 0; pl <= static_cast<std::uint64_t>(n); ++l, pl *= p) {
    if (basis.empty()) break;
    std::uint64_t mod = pl * p;
    // conditions: for x over basis, y over quotient basis vectors
    Matrix<K> cond(f, n, static_cast<int>(basis.size()));
    for (size_t b = 0; b < basis.size(); ++b) {
      // L_x lifted, per condition y: trace of (L_x L_y)^{p^l} mod p^{l+1}
      Matrix<K> lx(f, n, n);
      for (int i = 0; i < n; ++i)
        if (!f.is_zero(basis[b][i]))
          for (size_t t = 0; t < lx.a.size(); ++t)
            lx.a[t] = f.add(lx.a[t], f.mul(basis[b][i], lmult[i].a[t]));
      for (int h = 0; h < n; ++h) {
        auto prod = mul_mod(lift_mat(lx), lift_mat(lmult[h]), mod);
        // prod^{p^l} mod p^{l+1} by repeated squaring
        std::vector<std::uint64_t> acc;
        std::vector<std::uint64_t> base = prod;
        std::uint64_t e = pl;
        bool first = true;
        while (e > 0) {
          if (e & 1) {
            acc = first ? base : mul_mod(acc, base, mod);
            first = false;
          }
          e >>= 1;
          if (e) base = mul_mod(base, base, mod);
        }
        std::uint64_t tr = 0;
        for (int i = 0; i < n; ++i) tr = (tr + acc[static_cast<size_t>(i) * n + i]) % mod;
        if (tr % pl != 0)
          throw std::logic_error("quotient radical chain: trace value not divisible by p^l");
        cond.at(h, static_cast<int>(b)) = f.from_int(static_cast<long long>((tr / pl) % p));
      }
    }
    auto coeffs = mat_kernel_basis(cond);
    VecList<K> next;
    for (const auto& cvec : coeffs) {
      std::vector<typename K::Elem> w(n, f.zero());
      for (size_t b = 0; b < basis.size(); ++b)
        for (int g = 0; g < n; ++g) w[g] = f.add(w[g], f.mul(cvec[b], basis[b][g]));
      next.push_back(std::move(w));
    }
    basis = next;
  }
  return basis;
}

}  // namespace eicat
