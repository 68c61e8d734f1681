#pragma once

#include "eicat/category.hpp"
#include "eicat/field.hpp"
#include "eicat/matrix.hpp"

#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace eicat {

/// A representation of C_n: one vector space dimension per object and
/// one matrix per morphism. The category is owned by the caller and must
/// outlive the module.
template <class K>
struct CModule {
  const FiniteCategory* cat = nullptr;
  K field;
  std::vector<int> dims;
  std::vector<Matrix<K>> act;  // indexed by flat morphism index

  int dim_at(int x) const { return dims[x]; }
  int total_dim() const {
    int t = 0;
    for (int d : dims) t += d;
    return t;
  }
  bool is_zero() const { return total_dim() == 0; }
  const Matrix<K>& action(int flat) const { return act[flat]; }

  /// Functoriality check over all composable pairs (or a sample of them
  /// for categories above `sample_threshold` morphisms). Throws on failure.
  void check_functorial(long long pair_budget = 200000, unsigned seed = 1) const;
};

template <class K>
void CModule<K>::check_functorial(long long pair_budget, unsigned seed) const {
  const FiniteCategory& c = *cat;
  for (int i = 0; i < c.total; ++i) {
    auto [a, b] = c.src_tgt(i);
    if (act[i].rows != dims[b] || act[i].cols != dims[a])
      throw std::logic_error("module action has wrong shape");
  }
  for (int x = 0; x <= c.n; ++x)
    if (!(act[c.identity_index(x)] == Matrix<K>::identity(field, dims[x])))
      throw std::logic_error("module does not send an identity to the identity");
  // the exhaustive scan grows with the number of composable pairs, which is
  // quadratic in the largest homset, so budget on that rather than c.total
  long long pairs = 0;
  for (int a = 0; a <= c.n; ++a)
    for (int b = a; b <= c.n; ++b)
      for (int d = b; d <= c.n; ++d)
        pairs += static_cast<long long>(c.homset(a, b).size()) * c.homset(b, d).size();
  bool exhaustive = pairs <= pair_budget;
  std::mt19937_64 rng(seed);
  auto check_pair = [&](int bi, int ai) {
    const Morphism& beta = c.morphism(bi);
    const Morphism& alpha = c.morphism(ai);
    int ci = c.index_of(compose(c.species, beta, alpha));
    if (!(act[ci] == mat_mul(act[bi], act[ai])))
      throw std::logic_error("module action is not functorial");
  };
  if (exhaustive) {
    for (int bi = 0; bi < c.total; ++bi) {
      auto [b, c2] = c.src_tgt(bi);
      for (int a = 0; a <= b; ++a) {
        int base = c.offset[a][b];
        int cnt = static_cast<int>(c.homset(a, b).size());
        for (int j = 0; j < cnt; ++j) check_pair(bi, base + j);
      }
    }
  } else {
    for (int t = 0; t < 2000; ++t) {
      int bi = static_cast<int>(rng() % c.total);
      auto [b, c2] = c.src_tgt(bi);
      int a = static_cast<int>(rng() % (b + 1));
      int cnt = static_cast<int>(c.homset(a, b).size());
      check_pair(bi, c.offset[a][b] + static_cast<int>(rng() % cnt));
    }
  }
}

template <class K>
CModule<K> zero_module(const FiniteCategory& c, const K& f) {
  CModule<K> m;
  m.cat = &c;
  m.field = f;
  m.dims.assign(c.n + 1, 0);
  m.act.assign(c.total, Matrix<K>(f, 0, 0));
  return m;
}

template <class K>
CModule<K> direct_sum(const CModule<K>& a, const CModule<K>& b) {
  if (a.cat != b.cat) throw std::invalid_argument("direct_sum: different categories");
  CModule<K> r = zero_module<K>(*a.cat, a.field);
  for (int x = 0; x <= a.cat->n; ++x) r.dims[x] = a.dims[x] + b.dims[x];
  for (int i = 0; i < a.cat->total; ++i) {
    auto [s, t] = a.cat->src_tgt(i);
    Matrix<K> m(a.field, r.dims[t], r.dims[s]);
    for (int p = 0; p < a.dims[t]; ++p)
      for (int q = 0; q < a.dims[s]; ++q) m.at(p, q) = a.act[i].at(p, q);
    for (int p = 0; p < b.dims[t]; ++p)
      for (int q = 0; q < b.dims[s]; ++q) m.at(a.dims[t] + p, a.dims[s] + q) = b.act[i].at(p, q);
    r.act[i] = std::move(m);
  }
  return r;
}

/// kC e_x as a representation: the free space on hom(x, y) at object y,
/// with morphisms acting by postcomposition.
template <class K>
CModule<K> representable_projective(const FiniteCategory& c, const K& f, int x) {
  CModule<K> m = zero_module<K>(c, f);
  for (int y = x; y <= c.n; ++y) m.dims[y] = static_cast<int>(c.homset(x, y).size());
  for (int i = 0; i < c.total; ++i) {
    auto [a, b] = c.src_tgt(i);
    Matrix<K> mat(f, m.dims[b], m.dims[a]);
    if (a >= x) {
      const auto& hs = c.homset(x, a);
      const auto& ht = c.homset(x, b);
      const Morphism& beta = c.morphism(i);
      for (size_t j = 0; j < hs.size(); ++j) {
        Morphism comp = compose(c.species, beta, hs[j]);
        auto it = std::lower_bound(ht.begin(), ht.end(), comp);
        mat.at(static_cast<int>(it - ht.begin()), static_cast<int>(j)) = f.one();
      }
    }
    m.act[i] = std::move(mat);
  }
  return m;
}

/// A kAut(x)-module with action matrices indexed by positions inside
/// homset(x, x) (no multiplication table required).
template <class K>
struct AutModule {
  int object = 0;
  int dim = 0;
  std::vector<Matrix<K>> act;
};

template <class K>
AutModule<K> trivial_character(const FiniteCategory& c, const K& f, int x) {
  AutModule<K> w;
  w.object = x;
  w.dim = 1;
  w.act.assign(c.homset(x, x).size(), Matrix<K>::identity(f, 1));
  return w;
}

int permutation_sign(const std::vector<int>& perm);

/// Sign of the underlying permutation; only for the FI family (FI, FI_G,
/// FI_d), where Aut(x) surjects onto S_x.
template <class K>
AutModule<K> sign_character(const FiniteCategory& c, const K& f, int x) {
  if (c.species.linear() || c.species.order_preserving())
    throw std::invalid_argument("sign character only defined for the FI family");
  AutModule<K> w;
  w.object = x;
  w.dim = 1;
  for (const auto& m : c.homset(x, x)) {
    Matrix<K> a(f, 1, 1);
    a.at(0, 0) = f.from_int(permutation_sign(m.inj));
    w.act.push_back(std::move(a));
  }
  return w;
}

/// The regular representation of Aut(x) by left-multiplication
/// permutations of homset(x, x).
template <class K>
AutModule<K> regular_aut_module(const FiniteCategory& c, const K& f, int x) {
  const auto& hs = c.homset(x, x);
  int m = static_cast<int>(hs.size());
  AutModule<K> w;
  w.object = x;
  w.dim = m;
  for (int i = 0; i < m; ++i) {
    Matrix<K> mat(f, m, m);
    for (int j = 0; j < m; ++j) {
      Morphism p = compose(c.species, hs[i], hs[j]);
      auto it = std::lower_bound(hs.begin(), hs.end(), p);
      mat.at(static_cast<int>(it - hs.begin()), j) = f.one();
    }
    w.act.push_back(std::move(mat));
  }
  return w;
}

void validate_aut_module_dims(size_t aut_size, size_t act_size);

/// Orbit structure of the free right Aut(x)-action on hom(x, y):
/// member m equals reps[orbit[m]] composed with the aut at position
/// aut_pos[m] of homset(x, x).
struct OrbitData {
  std::vector<int> reps;     // positions of orbit representatives in homset(x,y)
  std::vector<int> orbit;    // per member
  std::vector<int> aut_pos;  // per member
};
OrbitData orbit_decompose(const FiniteCategory& c, int x, int y);

/// kC e_x tensored over kAut(x) with W: at object y, one copy of W per
/// orbit of hom(x, y) under precomposition.
template <class K>
CModule<K> induced_projective(const FiniteCategory& c, const K& f, int x, const AutModule<K>& w) {
  validate_aut_module_dims(c.homset(x, x).size(), w.act.size());
  std::vector<OrbitData> od(c.n + 1);
  for (int y = x; y <= c.n; ++y) od[y] = orbit_decompose(c, x, y);
  CModule<K> m = zero_module<K>(c, f);
  for (int y = x; y <= c.n; ++y) m.dims[y] = static_cast<int>(od[y].reps.size()) * w.dim;
  for (int i = 0; i < c.total; ++i) {
    auto [a, b] = c.src_tgt(i);
    Matrix<K> mat(f, m.dims[b], m.dims[a]);
    if (a >= x && m.dims[a] > 0) {
      const auto& hs = c.homset(x, a);
      const auto& ht = c.homset(x, b);
      const Morphism& beta = c.morphism(i);
      for (size_t o = 0; o < od[a].reps.size(); ++o) {
        Morphism comp = compose(c.species, beta, hs[od[a].reps[o]]);
        auto it = std::lower_bound(ht.begin(), ht.end(), comp);
        int pos = static_cast<int>(it - ht.begin());
        int o2 = od[b].orbit[pos];
        const Matrix<K>& wa = w.act[od[b].aut_pos[pos]];
        for (int r = 0; r < w.dim; ++r)
          for (int cix = 0; cix < w.dim; ++cix)
            mat.at(o2 * w.dim + r, static_cast<int>(o) * w.dim + cix) = wa.at(r, cix);
      }
    }
    m.act[i] = std::move(mat);
  }
  return m;
}

/// Module concentrated at x with value W; non-endomorphisms act as zero.
template <class K>
CModule<K> simple_module(const FiniteCategory& c, const K& f, int x, const AutModule<K>& w) {
  validate_aut_module_dims(c.homset(x, x).size(), w.act.size());
  CModule<K> m = zero_module<K>(c, f);
  m.dims[x] = w.dim;
  for (int i = 0; i < c.total; ++i) {
    auto [a, b] = c.src_tgt(i);
    if (a == x && b == x)
      m.act[i] = w.act[i - c.offset[x][x]];
    else
      m.act[i] = Matrix<K>(f, m.dims[b], m.dims[a]);
  }
  return m;
}

// ---------------------------------------------------------------------------
// H_0 and the generating degree.
// ---------------------------------------------------------------------------

template <class K>
struct H0Data {
  CModule<K> module;                 // the quotient representation
  std::vector<QuotientMap<K>> proj;  // per object: V_x -> (H_0 V)_x
};

/// Basis of the subspace of V_y arriving from strictly smaller objects.
/// Every morphism from below factors through hom(y-1, y), so those
/// images suffice.
template <class K>
std::vector<std::vector<typename K::Elem>> arriving_subspace(const CModule<K>& v, int y) {
  const K& f = v.field;
  const FiniteCategory& c = *v.cat;
  std::vector<std::vector<typename K::Elem>> vecs;
  if (y > 0) {
    int base = c.offset[y - 1][y];
    int cnt = static_cast<int>(c.homset(y - 1, y).size());
    for (int i = 0; i < cnt; ++i) {
      const Matrix<K>& m = v.act[base + i];
      for (int j = 0; j < m.cols; ++j) vecs.push_back(m.col(j));
    }
  }
  return mat_image_basis(columns_to_matrix(f, v.dims[y], vecs));
}

template <class K>
H0Data<K> h0_with_maps(const CModule<K>& v) {
  const K& f = v.field;
  const FiniteCategory& c = *v.cat;
  H0Data<K> out;
  out.module = zero_module<K>(c, f);
  for (int y = 0; y <= c.n; ++y) {
    auto sub = arriving_subspace(v, y);
    out.proj.push_back(subspace_quotient_map(f, v.dims[y], sub));
    out.module.dims[y] = out.proj[y].proj.rows;
  }
  for (int i = 0; i < c.total; ++i) {
    auto [a, b] = c.src_tgt(i);
    if (a != b) {
      // non-endomorphisms act as zero on H_0
      out.module.act[i] = Matrix<K>(f, out.module.dims[b], out.module.dims[a]);
      continue;
    }
    // trivial quotient (nothing arrives at a): the action passes through
    if (out.module.dims[a] == v.dims[a]) {
      out.module.act[i] = v.act[i];
      continue;
    }
    // induced action on the quotient: project(action(section))
    Matrix<K> m(f, out.module.dims[a], out.module.dims[a]);
    for (int col = 0; col < out.module.dims[a]; ++col) {
      std::vector<typename K::Elem> lift(v.dims[a], f.zero());
      lift[out.proj[a].section[col]] = f.one();
      auto img = v.act[i].apply(lift);
      auto h = out.proj[a].proj.apply(img);
      for (int r = 0; r < m.rows; ++r) m.at(r, col) = h[r];
    }
    out.module.act[i] = std::move(m);
  }
  return out;
}

template <class K>
CModule<K> h0(const CModule<K>& v) {
  return h0_with_maps(v).module;
}

/// sup of the H_0 support (-1 for the zero module).
template <class K>
int generating_degree(const CModule<K>& v) {
  auto h = h0(v);
  int g = -1;
  for (int x = 0; x <= v.cat->n; ++x)
    if (h.dims[x] > 0) g = x;
  return g;
}

/// (H_0 V)_x as a kAut(x)-module.
template <class K>
AutModule<K> h0_aut_module(const H0Data<K>& h, const CModule<K>& v, int x) {
  const FiniteCategory& c = *v.cat;
  AutModule<K> w;
  w.object = x;
  w.dim = h.module.dims[x];
  int base = c.offset[x][x];
  int cnt = static_cast<int>(c.homset(x, x).size());
  for (int i = 0; i < cnt; ++i) w.act.push_back(h.module.act[base + i]);
  return w;
}

// ---------------------------------------------------------------------------
// Lift, restriction, shift.
// ---------------------------------------------------------------------------

void check_same_species(const Species& a, const Species& b);

template <class K>
CModule<K> restrict_module(const CModule<K>& v, const FiniteCategory& small) {
  check_same_species(v.cat->species, small.species);
  if (small.n > v.cat->n) throw std::invalid_argument("restrict: target truncation is larger");
  CModule<K> r = zero_module<K>(small, v.field);
  for (int x = 0; x <= small.n; ++x) r.dims[x] = v.dims[x];
  for (int a = 0; a <= small.n; ++a)
    for (int b = a; b <= small.n; ++b) {
      const auto& hs = small.homset(a, b);
      for (size_t i = 0; i < hs.size(); ++i)
        r.act[small.offset[a][b] + static_cast<int>(i)] = v.act[v.cat->index_of(hs[i])];
    }
  return r;
}

template <class K>
CModule<K> lift_module(const CModule<K>& w, const FiniteCategory& big) {
  check_same_species(w.cat->species, big.species);
  if (big.n < w.cat->n) throw std::invalid_argument("lift: target truncation is smaller");
  CModule<K> r = zero_module<K>(big, w.field);
  for (int x = 0; x <= w.cat->n; ++x) r.dims[x] = w.dims[x];
  for (int i = 0; i < big.total; ++i) {
    auto [a, b] = big.src_tgt(i);
    if (b <= w.cat->n)
      r.act[i] = w.act[w.cat->index_of(big.morphism(i))];
    else
      r.act[i] = Matrix<K>(w.field, r.dims[b], r.dims[a]);
  }
  return r;
}

/// restrict_module(representable_projective(big, f, x), small) built directly
/// over the small category, skipping the big representable (whose action
/// matrices at the top object can be enormous).
template <class K>
CModule<K> restricted_representable(const FiniteCategory& big, const FiniteCategory& small,
                                    const K& f, int x) {
  check_same_species(big.species, small.species);
  if (small.n > big.n) throw std::invalid_argument("restrict: target truncation is larger");
  CModule<K> m = zero_module<K>(small, f);
  for (int y = x; y <= small.n; ++y) m.dims[y] = static_cast<int>(big.homset(x, y).size());
  for (int i = 0; i < small.total; ++i) {
    auto [a, b] = small.src_tgt(i);
    Matrix<K> mat(f, m.dims[b], m.dims[a]);
    if (a >= x) {
      const auto& hs = big.homset(x, a);
      const auto& ht = big.homset(x, b);
      const Morphism& beta = small.morphism(i);
      for (size_t j = 0; j < hs.size(); ++j) {
        Morphism comp = compose(big.species, beta, hs[j]);
        auto it = std::lower_bound(ht.begin(), ht.end(), comp);
        mat.at(static_cast<int>(it - ht.begin()), static_cast<int>(j)) = f.one();
      }
    }
    m.act[i] = std::move(mat);
  }
  return m;
}

/// shift_module(representable_projective(big, f, x), small) built directly:
/// basis hom_big(x, y+1) at object y, small morphisms acting through the
/// self-embedding.
template <class K>
CModule<K> shifted_representable(const FiniteCategory& big, const FiniteCategory& small,
                                 const K& f, int x) {
  check_same_species(big.species, small.species);
  if (small.n != big.n - 1) throw std::invalid_argument("shift: need truncation level N-1");
  CModule<K> m = zero_module<K>(small, f);
  for (int y = 0; y <= small.n; ++y)
    if (y + 1 >= x) m.dims[y] = static_cast<int>(big.homset(x, y + 1).size());
  for (int i = 0; i < small.total; ++i) {
    auto [a, b] = small.src_tgt(i);
    Matrix<K> mat(f, m.dims[b], m.dims[a]);
    if (m.dims[a] > 0) {
      Morphism beta = self_embed(big.species, small.morphism(i));
      const auto& hs = big.homset(x, a + 1);
      const auto& ht = big.homset(x, b + 1);
      for (size_t j = 0; j < hs.size(); ++j) {
        Morphism comp = compose(big.species, beta, hs[j]);
        auto it = std::lower_bound(ht.begin(), ht.end(), comp);
        mat.at(static_cast<int>(it - ht.begin()), static_cast<int>(j)) = f.one();
      }
    }
    m.act[i] = std::move(mat);
  }
  return m;
}

/// Precomposition with the self-embedding: (Sigma V)_a = V_{a+1}.
template <class K>
CModule<K> shift_module(const CModule<K>& v, const FiniteCategory& small) {
  check_same_species(v.cat->species, small.species);
  if (small.n != v.cat->n - 1) throw std::invalid_argument("shift: need truncation level N-1");
  CModule<K> r = zero_module<K>(small, v.field);
  for (int x = 0; x <= small.n; ++x) r.dims[x] = v.dims[x + 1];
  for (int i = 0; i < small.total; ++i)
    r.act[i] = v.act[v.cat->index_of(self_embed(v.cat->species, small.morphism(i)))];
  return r;
}

// ---------------------------------------------------------------------------
// Module homomorphisms and the pointwise abelian-category constructions.
// ---------------------------------------------------------------------------

/// A homomorphism is one matrix per object (target dims x source dims).
template <class K>
using ModuleHom = std::vector<Matrix<K>>;

template <class K>
bool hom_commutes(const CModule<K>& m, const CModule<K>& n, const ModuleHom<K>& phi) {
  const FiniteCategory& c = *m.cat;
  for (int i = 0; i < c.total; ++i) {
    auto [a, b] = c.src_tgt(i);
    if (!(mat_mul(phi[b], m.act[i]) == mat_mul(n.act[i], phi[a]))) return false;
  }
  return true;
}

/// Basis of Hom(M, N): solves the commuting-square system over all
/// morphisms.
template <class K>
std::vector<ModuleHom<K>> module_hom_space(const CModule<K>& m, const CModule<K>& n) {
  if (m.cat != n.cat) throw std::invalid_argument("module_hom_space: different categories");
  const K& f = m.field;
  const FiniteCategory& c = *m.cat;
  // unknowns: entries of phi_x, x = 0..n
  std::vector<int> off(c.n + 2, 0);
  for (int x = 0; x <= c.n; ++x) off[x + 1] = off[x] + n.dims[x] * m.dims[x];
  int unknowns = off[c.n + 1];
  int rows = 0;
  for (int i = 0; i < c.total; ++i) {
    auto [a, b] = c.src_tgt(i);
    rows += n.dims[b] * m.dims[a];
  }
  Matrix<K> sys(f, rows, unknowns);
  int row = 0;
  for (int i = 0; i < c.total; ++i) {
    auto [a, b] = c.src_tgt(i);
    // phi_b * M_i - N_i * phi_a = 0, entry (r, q): sum_s phi_b(r,s) M_i(s,q) - sum_s N_i(r,s) phi_a(s,q)
    for (int r = 0; r < n.dims[b]; ++r)
      for (int q = 0; q < m.dims[a]; ++q, ++row) {
        for (int s = 0; s < m.dims[b]; ++s)
          sys.at(row, off[b] + r * m.dims[b] + s) =
              f.add(sys.at(row, off[b] + r * m.dims[b] + s), m.act[i].at(s, q));
        for (int s = 0; s < n.dims[a]; ++s)
          sys.at(row, off[a] + s * m.dims[a] + q) =
              f.sub(sys.at(row, off[a] + s * m.dims[a] + q), n.act[i].at(r, s));
      }
  }
  std::vector<ModuleHom<K>> basis;
  for (const auto& v : mat_kernel_basis(sys)) {
    ModuleHom<K> phi;
    for (int x = 0; x <= c.n; ++x) {
      Matrix<K> p(f, n.dims[x], m.dims[x]);
      for (int r = 0; r < n.dims[x]; ++r)
        for (int q = 0; q < m.dims[x]; ++q) p.at(r, q) = v[off[x] + r * m.dims[x] + q];
      phi.push_back(std::move(p));
    }
    basis.push_back(std::move(phi));
  }
  return basis;
}

/// Solves B X = R columnwise (columns of B independent is not required,
/// but every column of R must lie in the column span). Throws otherwise.
template <class K>
Matrix<K> solve_columns(const Matrix<K>& b, const Matrix<K>& r) {
  const K& f = b.field;
  Matrix<K> aug(f, b.rows, b.cols + r.cols);
  for (int i = 0; i < b.rows; ++i) {
    for (int j = 0; j < b.cols; ++j) aug.at(i, j) = b.at(i, j);
    for (int j = 0; j < r.cols; ++j) aug.at(i, b.cols + j) = r.at(i, j);
  }
  auto piv = rref_inplace(aug);
  for (int c : piv)
    if (c >= b.cols) throw std::logic_error("solve_columns: column outside span");
  Matrix<K> x(f, b.cols, r.cols);
  for (size_t i = 0; i < piv.size(); ++i)
    for (int j = 0; j < r.cols; ++j) x.at(piv[i], j) = aug.at(static_cast<int>(i), b.cols + j);
  return x;
}

template <class K>
struct SubmoduleData {
  CModule<K> module;
  ModuleHom<K> inclusion;  // columns are the per-object bases
};

template <class K>
struct QuotientData {
  CModule<K> module;
  ModuleHom<K> projection;
};

/// Pointwise kernel of phi: M -> N, with its inclusion into M.
template <class K>
SubmoduleData<K> kernel_of_hom(const CModule<K>& m, const CModule<K>& n, const ModuleHom<K>& phi) {
  const K& f = m.field;
  const FiniteCategory& c = *m.cat;
  SubmoduleData<K> out;
  out.module = zero_module<K>(c, f);
  std::vector<Matrix<K>> bases(c.n + 1);
  for (int x = 0; x <= c.n; ++x) {
    auto kb = mat_kernel_basis(phi[x]);
    bases[x] = columns_to_matrix(f, m.dims[x], kb);
    out.module.dims[x] = bases[x].cols;
    out.inclusion.push_back(bases[x]);
  }
  for (int i = 0; i < c.total; ++i) {
    auto [a, b] = c.src_tgt(i);
    out.module.act[i] = solve_columns(bases[b], mat_mul(m.act[i], bases[a]));
  }
  return out;
}

/// Pointwise image of phi: M -> N as a submodule of N.
template <class K>
SubmoduleData<K> image_of_hom(const CModule<K>& m, const CModule<K>& n, const ModuleHom<K>& phi) {
  const K& f = m.field;
  const FiniteCategory& c = *m.cat;
  SubmoduleData<K> out;
  out.module = zero_module<K>(c, f);
  std::vector<Matrix<K>> bases(c.n + 1);
  for (int x = 0; x <= c.n; ++x) {
    auto ib = mat_image_basis(phi[x]);
    bases[x] = columns_to_matrix(f, n.dims[x], ib);
    out.module.dims[x] = bases[x].cols;
    out.inclusion.push_back(bases[x]);
  }
  for (int i = 0; i < c.total; ++i) {
    auto [a, b] = c.src_tgt(i);
    out.module.act[i] = solve_columns(bases[b], mat_mul(n.act[i], bases[a]));
  }
  return out;
}

/// Pointwise quotient of N by the submodule spanned by the columns of
/// sub (which must be closed under the action).
template <class K>
QuotientData<K> quotient_by_submodule(const CModule<K>& n, const ModuleHom<K>& sub) {
  const K& f = n.field;
  const FiniteCategory& c = *n.cat;
  QuotientData<K> out;
  out.module = zero_module<K>(c, f);
  std::vector<QuotientMap<K>> qm;
  for (int x = 0; x <= c.n; ++x) {
    std::vector<std::vector<typename K::Elem>> cols;
    for (int j = 0; j < sub[x].cols; ++j) cols.push_back(sub[x].col(j));
    qm.push_back(subspace_quotient_map(f, n.dims[x], cols));
    out.module.dims[x] = qm[x].proj.rows;
    out.projection.push_back(qm[x].proj);
  }
  for (int i = 0; i < c.total; ++i) {
    auto [a, b] = c.src_tgt(i);
    Matrix<K> m(f, out.module.dims[b], out.module.dims[a]);
    for (int col = 0; col < out.module.dims[a]; ++col) {
      std::vector<typename K::Elem> lift(n.dims[a], f.zero());
      lift[qm[a].section[col]] = f.one();
      auto img = qm[b].proj.apply(n.act[i].apply(lift));
      for (int r = 0; r < m.rows; ++r) m.at(r, col) = img[r];
    }
    out.module.act[i] = std::move(m);
  }
  return out;
}

/// Smallest submodule of V containing the given vectors (closure under
/// all morphism actions; one-step morphisms and endomorphisms suffice
/// since every morphism factors through them).
template <class K>
SubmoduleData<K> submodule_generated(
    const CModule<K>& v, const std::vector<std::vector<std::vector<typename K::Elem>>>& gens) {
  const K& f = v.field;
  const FiniteCategory& c = *v.cat;
  // echelon bases per object with incremental insertion
  std::vector<std::vector<std::vector<typename K::Elem>>> ech(c.n + 1);
  std::vector<std::pair<int, std::vector<typename K::Elem>>> queue;
  auto insert = [&](int x, std::vector<typename K::Elem> w) {
    // queue the vector as it arrived: images of reduced vectors would feed
    // elimination output back into elimination and compound entry sizes
    // over Q, while the arriving vectors themselves stay small
    std::vector<typename K::Elem> raw = w;
    for (const auto& e : ech[x]) {
      int lead = -1;
      for (int i = 0; i < v.dims[x]; ++i)
        if (!f.is_zero(e[i])) { lead = i; break; }
      if (lead >= 0 && !f.is_zero(w[lead])) {
        auto t = f.div(w[lead], e[lead]);
        for (int i = 0; i < v.dims[x]; ++i) w[i] = f.sub(w[i], f.mul(t, e[i]));
      }
    }
    bool nz = false;
    for (int i = 0; i < v.dims[x]; ++i) nz |= !f.is_zero(w[i]);
    if (!nz) return false;
    f.normalize_vector(w);  // keep stored rows integral and primitive over Q
    ech[x].push_back(std::move(w));
    queue.push_back({x, std::move(raw)});
    return true;
  };
  // endomorphism closure only needs Aut generators; one-step morphisms
  // are kept in full (they need not form a single Aut-double-orbit)
  std::vector<std::vector<int>> aut_gens(c.n + 1);
  for (int x = 0; x <= c.n; ++x) aut_gens[x] = aut_generator_positions(c, x);
  for (int x = 0; x <= c.n; ++x)
    for (const auto& g : gens[x]) insert(x, g);
  while (!queue.empty()) {
    auto [x, w] = queue.back();
    queue.pop_back();
    int ebase = c.offset[x][x];
    for (int g : aut_gens[x]) insert(x, v.act[ebase + g].apply(w));
    if (x + 1 <= c.n) {
      int base = c.offset[x][x + 1];
      int cnt = static_cast<int>(c.homset(x, x + 1).size());
      for (int i = 0; i < cnt; ++i) insert(x + 1, v.act[base + i].apply(w));
    }
  }
  SubmoduleData<K> out;
  out.module = zero_module<K>(c, f);
  std::vector<Matrix<K>> bases(c.n + 1);
  for (int x = 0; x <= c.n; ++x) {
    // reduce to an image basis for clean coordinates
    auto ib = mat_image_basis(columns_to_matrix(f, v.dims[x], ech[x]));
    bases[x] = columns_to_matrix(f, v.dims[x], ib);
    out.module.dims[x] = bases[x].cols;
    out.inclusion.push_back(bases[x]);
  }
  for (int i = 0; i < c.total; ++i) {
    auto [a, b] = c.src_tgt(i);
    out.module.act[i] = solve_columns(bases[b], mat_mul(v.act[i], bases[a]));
  }
  return out;
}

std::string module_dims_to_string(const std::vector<int>& dims);

}  // namespace eicat
