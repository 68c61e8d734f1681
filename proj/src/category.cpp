#include "eicat/category.hpp"

#include "eicat/field.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <stdexcept>

namespace eicat {

void Species::validate() const {
  if (has_group()) {
    if (!group) throw std::invalid_argument("species needs a group");
    group->validate();
  }
  if (has_colors() && d < 1) throw std::invalid_argument("d must be >= 1");
  if (linear() && !is_prime(q)) throw std::invalid_argument("q must be prime");
}

std::string Species::name() const {
  switch (kind) {
    case SpeciesKind::FI: return "fi";
    case SpeciesKind::FI_G: return "fi_" + (group ? group->name : std::string("g"));
    case SpeciesKind::FI_d: return "fi_d" + std::to_string(d);
    case SpeciesKind::OI: return "oi";
    case SpeciesKind::OI_G: return "oi_" + (group ? group->name : std::string("g"));
    case SpeciesKind::OI_d: return "oi_d" + std::to_string(d);
    case SpeciesKind::VI: return "vi_q" + std::to_string(q);
  }
  return "?";
}

Species make_species(const std::string& kind_name, const std::optional<FiniteGroup>& group,
                     int d, std::uint64_t q) {
  Species s;
  if (kind_name == "fi") s.kind = SpeciesKind::FI;
  else if (kind_name == "fi_g") s.kind = SpeciesKind::FI_G;
  else if (kind_name == "fi_d") s.kind = SpeciesKind::FI_d;
  else if (kind_name == "oi") s.kind = SpeciesKind::OI;
  else if (kind_name == "oi_g") s.kind = SpeciesKind::OI_G;
  else if (kind_name == "oi_d") s.kind = SpeciesKind::OI_d;
  else if (kind_name == "vi") s.kind = SpeciesKind::VI;
  else throw std::invalid_argument("unknown species: " + kind_name);
  s.group = group;
  s.d = d;
  s.q = q;
  s.validate();
  return s;
}

namespace {

void enum_injections(int a, int b, bool ordered, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::vector<bool> used(b, false);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == a) {
      out.push_back(cur);
      return;
    }
    int lo = ordered && !cur.empty() ? cur.back() + 1 : 0;
    for (int v = lo; v < b; ++v) {
      if (used[v]) continue;
      used[v] = true;
      cur.push_back(v);
      self(self, i + 1);
      cur.pop_back();
      used[v] = false;
    }
  };
  rec(rec, 0);
}

void enum_tuples(int len, int radix, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(len, 0);
  for (;;) {
    out.push_back(cur);
    int i = len - 1;
    while (i >= 0 && cur[i] == radix - 1) cur[i--] = 0;
    if (i < 0) break;
    ++cur[i];
  }
}

// All b x a full-column-rank matrices over F_q, row-major.
void enum_injective_matrices(int a, int b, std::uint64_t q, std::vector<std::vector<int>>& out) {
  PrimeField f(q);
  // columns chosen left to right, each outside the span of the previous ones
  std::vector<std::vector<std::uint64_t>> cols;
  auto in_span = [&](const std::vector<std::uint64_t>& v) {
    // reduce v against an echelonized copy of cols
    std::vector<std::vector<std::uint64_t>> ech;
    for (auto c : cols) {
      for (auto& e : ech) {
        int lead = -1;
        for (int i = 0; i < b; ++i)
          if (e[i] != 0) { lead = i; break; }
        if (lead >= 0 && c[lead] != 0) {
          auto t = f.div(c[lead], e[lead]);
          for (int i = 0; i < b; ++i) c[i] = f.sub(c[i], f.mul(t, e[i]));
        }
      }
      bool nz = false;
      for (int i = 0; i < b; ++i) nz |= (c[i] != 0);
      if (nz) ech.push_back(c);
    }
    auto w = v;
    for (auto& e : ech) {
      int lead = -1;
      for (int i = 0; i < b; ++i)
        if (e[i] != 0) { lead = i; break; }
      if (lead >= 0 && w[lead] != 0) {
        auto t = f.div(w[lead], e[lead]);
        for (int i = 0; i < b; ++i) w[i] = f.sub(w[i], f.mul(t, e[i]));
      }
    }
    for (int i = 0; i < b; ++i)
      if (w[i] != 0) return false;
    return true;
  };
  auto rec = [&](auto&& self, int j) -> void {
    if (j == a) {
      std::vector<int> m(static_cast<size_t>(a) * b);
      for (int i = 0; i < b; ++i)
        for (int c = 0; c < a; ++c) m[static_cast<size_t>(i) * a + c] = static_cast<int>(cols[c][i]);
      out.push_back(std::move(m));
      return;
    }
    std::vector<std::uint64_t> v(b, 0);
    std::uint64_t total = 1;
    for (int i = 0; i < b; ++i) total *= q;
    for (std::uint64_t e = 0; e < total; ++e) {
      std::uint64_t x = e;
      for (int i = b - 1; i >= 0; --i) {
        v[i] = x % q;
        x /= q;
      }
      bool nz = false;
      for (int i = 0; i < b; ++i) nz |= (v[i] != 0);
      if (!nz || in_span(v)) continue;
      cols.push_back(v);
      self(self, j + 1);
      cols.pop_back();
    }
  };
  rec(rec, 0);
}

std::vector<Morphism> enumerate_homset(const Species& s, int a, int b) {
  std::vector<Morphism> out;
  if (a > b) return out;
  if (s.linear()) {
    std::vector<std::vector<int>> mats;
    enum_injective_matrices(a, b, s.q, mats);
    for (auto& m : mats) {
      Morphism mo;
      mo.src = a;
      mo.tgt = b;
      mo.vimat = std::move(m);
      out.push_back(std::move(mo));
    }
  } else {
    std::vector<std::vector<int>> injs;
    enum_injections(a, b, s.order_preserving(), injs);
    std::vector<std::vector<int>> extras{{}};
    for (const auto& inj : injs) {
      if (s.has_group() && a > 0) {
        extras.clear();
        enum_tuples(a, s.group->size(), extras);
      } else if (s.has_colors() && b - a > 0) {
        extras.clear();
        enum_tuples(b - a, s.d, extras);
      } else {
        extras = {{}};
      }
      for (const auto& ex : extras) {
        Morphism mo;
        mo.src = a;
        mo.tgt = b;
        mo.inj = inj;
        if (s.has_group()) mo.gvals = a > 0 ? ex : std::vector<int>{};
        if (s.has_colors()) mo.colors = b - a > 0 ? ex : std::vector<int>{};
        out.push_back(std::move(mo));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Morphism identity_morphism(const Species& s, int x) {
  Morphism m;
  m.src = m.tgt = x;
  if (s.linear()) {
    m.vimat.assign(static_cast<size_t>(x) * x, 0);
    for (int i = 0; i < x; ++i) m.vimat[static_cast<size_t>(i) * x + i] = 1;
  } else {
    for (int i = 0; i < x; ++i) m.inj.push_back(i);
    if (s.has_group()) m.gvals.assign(x, 0);
    // colors empty: the complement is empty
  }
  return m;
}

Morphism compose(const Species& s, const Morphism& g, const Morphism& f) {
  if (f.tgt != g.src) throw std::invalid_argument("compose: morphisms not composable");
  Morphism r;
  r.src = f.src;
  r.tgt = g.tgt;
  if (s.linear()) {
    PrimeField k(s.q);
    int a = f.src, b = f.tgt, c = g.tgt;
    r.vimat.assign(static_cast<size_t>(c) * a, 0);
    for (int i = 0; i < c; ++i)
      for (int j = 0; j < a; ++j) {
        std::uint64_t acc = 0;
        for (int l = 0; l < b; ++l)
          acc = k.add(acc, k.mul(static_cast<std::uint64_t>(g.vimat[static_cast<size_t>(i) * b + l]),
                                 static_cast<std::uint64_t>(f.vimat[static_cast<size_t>(l) * a + j])));
        r.vimat[static_cast<size_t>(i) * a + j] = static_cast<int>(acc);
      }
    return r;
  }
  r.inj.resize(f.src);
  for (int i = 0; i < f.src; ++i) r.inj[i] = g.inj[f.inj[i]];
  if (s.has_group()) {
    r.gvals.resize(f.src);
    for (int i = 0; i < f.src; ++i)
      r.gvals[i] = s.group->product(g.gvals[f.inj[i]], f.gvals[i]);
  }
  if (s.has_colors()) {
    // complement points of r in [g.tgt], increasing; value comes from f's
    // color when the point is g applied to a point missed by f, else from g
    std::vector<bool> in_im(g.tgt, false);
    for (int v : r.inj) in_im[v] = true;
    std::vector<int> f_comp;  // complement of f's image in [f.tgt], increasing
    {
      std::vector<bool> fi(f.tgt, false);
      for (int v : f.inj) fi[v] = true;
      for (int v = 0; v < f.tgt; ++v)
        if (!fi[v]) f_comp.push_back(v);
    }
    std::vector<int> g_comp;
    {
      std::vector<bool> gi(g.tgt, false);
      for (int v : g.inj) gi[v] = true;
      for (int v = 0; v < g.tgt; ++v)
        if (!gi[v]) g_comp.push_back(v);
    }
    for (int x = 0; x < g.tgt; ++x) {
      if (in_im[x]) continue;
      int color = -1;
      for (size_t t = 0; t < f_comp.size(); ++t)
        if (g.inj[f_comp[t]] == x) {
          color = f.colors[t];
          break;
        }
      if (color < 0) {
        for (size_t t = 0; t < g_comp.size(); ++t)
          if (g_comp[t] == x) {
            color = g.colors[t];
            break;
          }
      }
      r.colors.push_back(color);
    }
  }
  return r;
}

FiniteCategory build_category(const Species& s, int n) {
  s.validate();
  if (n < 0) throw std::invalid_argument("truncation level must be >= 0");
  FiniteCategory c;
  c.species = s;
  c.n = n;
  c.hom.assign(n + 1, std::vector<std::vector<Morphism>>(n + 1));
  c.offset.assign(n + 1, std::vector<int>(n + 1, -1));
  int flat = 0;
  for (int a = 0; a <= n; ++a)
    for (int b = a; b <= n; ++b) {
      c.hom[a][b] = enumerate_homset(s, a, b);
      c.offset[a][b] = flat;
      flat += static_cast<int>(c.hom[a][b].size());
    }
  c.total = flat;
  return c;
}

const Morphism& FiniteCategory::morphism(int flat) const {
  for (int a = 0; a <= n; ++a)
    for (int b = a; b <= n; ++b) {
      int sz = static_cast<int>(hom[a][b].size());
      if (flat >= offset[a][b] && flat < offset[a][b] + sz) return hom[a][b][flat - offset[a][b]];
    }
  throw std::out_of_range("morphism index out of range");
}

std::pair<int, int> FiniteCategory::src_tgt(int flat) const {
  for (int a = 0; a <= n; ++a)
    for (int b = a; b <= n; ++b) {
      int sz = static_cast<int>(hom[a][b].size());
      if (flat >= offset[a][b] && flat < offset[a][b] + sz) return {a, b};
    }
  throw std::out_of_range("morphism index out of range");
}

int FiniteCategory::index_of(const Morphism& m) const {
  const auto& hs = hom[m.src][m.tgt];
  auto it = std::lower_bound(hs.begin(), hs.end(), m);
  if (it == hs.end() || !(*it == m)) throw std::logic_error("morphism not found in category");
  return offset[m.src][m.tgt] + static_cast<int>(it - hs.begin());
}

int FiniteCategory::identity_index(int x) const { return index_of(identity_morphism(species, x)); }

AutGroup aut_group(const FiniteCategory& c, int x) {
  const auto& hs = c.homset(x, x);
  Morphism id = identity_morphism(c.species, x);
  AutGroup out;
  out.group.name = "aut" + std::to_string(x);
  // identity first, then canonical order
  int id_pos = -1;
  for (size_t i = 0; i < hs.size(); ++i)
    if (hs[i] == id) id_pos = static_cast<int>(i);
  if (id_pos < 0) throw std::logic_error("identity missing from endomorphisms");
  out.hom_index.push_back(id_pos);
  for (size_t i = 0; i < hs.size(); ++i)
    if (static_cast<int>(i) != id_pos) out.hom_index.push_back(static_cast<int>(i));
  int m = static_cast<int>(hs.size());
  for (int i = 0; i < m; ++i) out.group.elems.push_back(morphism_label(hs[out.hom_index[i]]));
  // position of each hom index in the group ordering
  std::vector<int> pos(m);
  for (int i = 0; i < m; ++i) pos[out.hom_index[i]] = i;
  out.group.mul.assign(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Morphism p = compose(c.species, hs[out.hom_index[i]], hs[out.hom_index[j]]);
      auto it = std::lower_bound(hs.begin(), hs.end(), p);
      if (it == hs.end() || !(*it == p)) throw std::logic_error("endomorphisms not closed");
      out.group.mul[i][j] = pos[static_cast<int>(it - hs.begin())];
    }
  out.group.validate();
  return out;
}

std::vector<int> aut_generator_positions(const FiniteCategory& c, int x) {
  const auto& hs = c.homset(x, x);
  int m = static_cast<int>(hs.size());
  Morphism id = identity_morphism(c.species, x);
  auto pos_of = [&](const Morphism& mo) {
    auto it = std::lower_bound(hs.begin(), hs.end(), mo);
    return static_cast<int>(it - hs.begin());
  };
  std::vector<char> in_closure(m, 0);
  std::vector<int> members{pos_of(id)};
  in_closure[members[0]] = 1;
  std::vector<int> gens;
  for (int p = 0; p < m; ++p) {
    if (in_closure[p]) continue;
    gens.push_back(p);
    // re-close: multiply current members by the new generator on both
    // sides until stable
    std::vector<int> queue = members;
    while (!queue.empty()) {
      int q = queue.back();
      queue.pop_back();
      for (int g : gens) {
        for (const Morphism& prod : {compose(c.species, hs[g], hs[q]),
                                     compose(c.species, hs[q], hs[g])}) {
          int r = pos_of(prod);
          if (!in_closure[r]) {
            in_closure[r] = 1;
            members.push_back(r);
            queue.push_back(r);
          }
        }
      }
    }
  }
  return gens;
}

Morphism self_embed(const Species& s, const Morphism& m) {
  Morphism r;
  r.src = m.src + 1;
  r.tgt = m.tgt + 1;
  if (s.linear()) {
    int a = m.src, b = m.tgt;
    r.vimat.assign(static_cast<size_t>(b + 1) * (a + 1), 0);
    r.vimat[0] = 1;
    for (int i = 0; i < b; ++i)
      for (int j = 0; j < a; ++j)
        r.vimat[static_cast<size_t>(i + 1) * (a + 1) + j + 1] = m.vimat[static_cast<size_t>(i) * a + j];
    return r;
  }
  r.inj.push_back(0);
  for (int v : m.inj) r.inj.push_back(v + 1);
  if (s.has_group()) {
    r.gvals.push_back(0);
    for (int g : m.gvals) r.gvals.push_back(g);
  }
  // the new point 0 is in the image, so the complement shifts by one and
  // keeps its order; colors carry over unchanged
  if (s.has_colors()) r.colors = m.colors;
  return r;
}

namespace {
unsigned long long falling_factorial(int b, int a) {
  unsigned long long r = 1;
  for (int i = 0; i < a; ++i) r *= static_cast<unsigned long long>(b - i);
  return r;
}
unsigned long long binom(int b, int a) {
  unsigned long long r = 1;
  for (int i = 0; i < a; ++i) r = r * static_cast<unsigned long long>(b - i) / (i + 1);
  return r;
}
unsigned long long ipow(unsigned long long x, int e) {
  unsigned long long r = 1;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}
}  // namespace

unsigned long long hom_count_formula(const Species& s, int a, int b) {
  if (a > b) return 0;
  switch (s.kind) {
    case SpeciesKind::FI: return falling_factorial(b, a);
    case SpeciesKind::OI: return binom(b, a);
    case SpeciesKind::FI_G: return falling_factorial(b, a) * ipow(s.group->size(), a);
    case SpeciesKind::OI_G: return binom(b, a) * ipow(s.group->size(), a);
    case SpeciesKind::FI_d: return falling_factorial(b, a) * ipow(s.d, b - a);
    case SpeciesKind::OI_d: return binom(b, a) * ipow(s.d, b - a);
    case SpeciesKind::VI: {
      unsigned long long r = 1;
      unsigned long long qb = ipow(s.q, b);
      for (int i = 0; i < a; ++i) r *= qb - ipow(s.q, i);
      return r;
    }
  }
  return 0;
}

unsigned long long aut_order_formula(const Species& s, int x) {
  switch (s.kind) {
    case SpeciesKind::FI:
    case SpeciesKind::FI_d: return falling_factorial(x, x);
    case SpeciesKind::FI_G: return falling_factorial(x, x) * ipow(s.group->size(), x);
    case SpeciesKind::OI:
    case SpeciesKind::OI_d: return 1;
    case SpeciesKind::OI_G: return ipow(s.group->size(), x);
    case SpeciesKind::VI: return hom_count_formula(s, x, x);
  }
  return 0;
}

std::string morphism_label(const Morphism& m) {
  std::string s = std::to_string(m.src) + ">" + std::to_string(m.tgt) + ":";
  for (int v : m.inj) s += std::to_string(v);
  if (!m.gvals.empty()) {
    s += "|g";
    for (int v : m.gvals) s += std::to_string(v);
  }
  if (!m.colors.empty()) {
    s += "|c";
    for (int v : m.colors) s += std::to_string(v);
  }
  if (!m.vimat.empty()) {
    s += "m";
    for (int v : m.vimat) s += std::to_string(v);
  }
  return s;
}

std::string category_to_json(const FiniteCategory& c) {
  nlohmann::json j;
  j["species"] = c.species.name();
  j["n"] = c.n;
  nlohmann::json params = nlohmann::json::object();
  if (c.species.has_group()) params["group"] = c.species.group->name;
  if (c.species.has_colors()) params["d"] = c.species.d;
  if (c.species.linear()) params["q"] = c.species.q;
  j["params"] = params;
  nlohmann::json homs = nlohmann::json::array();
  for (int a = 0; a <= c.n; ++a)
    for (int b = a; b <= c.n; ++b) {
      nlohmann::json h;
      h["a"] = a;
      h["b"] = b;
      nlohmann::json payloads = nlohmann::json::array();
      for (const auto& m : c.homset(a, b)) payloads.push_back(morphism_label(m));
      h["payloads"] = payloads;
      homs.push_back(h);
    }
  j["homs"] = homs;
  return j.dump(2);
}

}  // namespace eicat
