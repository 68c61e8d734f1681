#include "eicat/algebra.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace eicat {

void MonomialAlgebra::validate() const {
  int n = dim();
  if (static_cast<int>(prod.size()) != n * n)
    throw std::invalid_argument("algebra table has wrong shape");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        int ij = product(i, j);
        int jk = product(j, k);
        int l = ij >= 0 ? product(ij, k) : -1;
        int r = jk >= 0 ? product(i, jk) : -1;
        if (l != r) throw std::logic_error("algebra multiplication is not associative");
      }
  // identity: sum over support of e*b and b*e must return b, with the
  // support elements orthogonal-idempotent-like (at most one nonzero term)
  for (int b = 0; b < n; ++b) {
    int left = -1, right = -1;
    for (int e : identity_support) {
      int eb = product(e, b);
      if (eb >= 0) {
        if (left >= 0) throw std::logic_error("identity support hits a basis element twice");
        left = eb;
      }
      int be = product(b, e);
      if (be >= 0) {
        if (right >= 0) throw std::logic_error("identity support hits a basis element twice");
        right = be;
      }
    }
    if (left != b || right != b) throw std::logic_error("no two-sided identity");
  }
}

MonomialAlgebra group_algebra_structure(const FiniteGroup& g) {
  MonomialAlgebra a;
  a.labels = g.elems;
  int n = g.size();
  a.prod.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.prod[static_cast<size_t>(i) * n + j] = g.product(i, j);
  a.identity_support = {g.identity()};
  a.degree.assign(n, 0);
  return a;
}

CategoryAlgebraStructure category_algebra_structure(const FiniteCategory& c) {
  CategoryAlgebraStructure out;
  MonomialAlgebra& a = out.algebra;
  int n = c.total;
  a.labels.resize(n);
  a.degree.resize(n);
  std::vector<std::pair<int, int>> st(n);
  for (int a0 = 0; a0 <= c.n; ++a0)
    for (int b0 = a0; b0 <= c.n; ++b0) {
      const auto& hs = c.homset(a0, b0);
      for (size_t i = 0; i < hs.size(); ++i) {
        int flat = c.offset[a0][b0] + static_cast<int>(i);
        a.labels[flat] = morphism_label(hs[i]);
        a.degree[flat] = b0 - a0;
        st[flat] = {a0, b0};
      }
    }
  a.prod.assign(static_cast<size_t>(n) * n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // basis product f * g = f o g when composable
      auto [js, jt] = st[j];
      auto [is, it] = st[i];
      if (jt != is) continue;
      Morphism comp = compose(c.species, c.morphism(i), c.morphism(j));
      a.prod[static_cast<size_t>(i) * n + j] = c.index_of(comp);
    }
  for (int x = 0; x <= c.n; ++x) out.idempotent.push_back(c.identity_index(x));
  a.identity_support = out.idempotent;
  return out;
}

InvertibilityReport invertibility_criterion(const FiniteCategory& c, const FieldSpec& k) {
  InvertibilityReport r;
  r.all_invertible = true;
  for (int x = 0; x <= c.n; ++x) {
    unsigned long long order = c.homset(x, x).size();
    bool div = k.characteristic != 0 && order % k.characteristic == 0;
    r.per_object.push_back({x, order, div});
    if (div) r.all_invertible = false;
  }
  return r;
}

std::string algebra_to_json(const MonomialAlgebra& a, const FieldSpec& k) {
  nlohmann::json j;
  j["field"] = k.name();
  j["dim"] = a.dim();
  j["basis"] = a.labels;
  nlohmann::json nz = nlohmann::json::array();
  int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l) {
      int p = a.product(i, l);
      if (p >= 0) nz.push_back({i, l, p});
    }
  j["products"] = nz;
  j["identity_support"] = a.identity_support;
  return j.dump(2);
}

namespace detail {

std::uint64_t ipow_u64(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

int monomial_power(const MonomialAlgebra& a, int u, std::uint64_t k) {
  // plain iteration; k <= dim in all uses
  if (k == 0) throw std::invalid_argument("monomial_power: exponent must be positive");
  int r = u;
  for (std::uint64_t i = 1; i < k; ++i) {
    if (r < 0) return -1;
    r = a.product(r, u);
  }
  return r;
}

std::uint64_t lifted_power_trace(const MonomialAlgebra& a, int u, std::uint64_t pl) {
  int w = monomial_power(a, u, pl);
  if (w < 0) return 0;
  std::uint64_t fix = 0;
  for (int b = 0; b < a.dim(); ++b)
    if (a.product(w, b) == b) ++fix;
  return fix;
}

}  // namespace detail

}  // namespace eicat
