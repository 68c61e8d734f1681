#include "eicat/group.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace eicat {

int FiniteGroup::inverse(int i) const {
  for (int j = 0; j < size(); ++j)
    if (mul[i][j] == identity()) return j;
  throw std::logic_error("group element has no inverse");
}

int FiniteGroup::power(int g, long long e) const {
  int r = identity();
  long long k = e % size();
  if (k < 0) k += size();
  for (long long i = 0; i < k; ++i) r = product(r, g);
  return r;
}

void FiniteGroup::validate() const {
  int n = size();
  if (n == 0 || static_cast<int>(mul.size()) != n)
    throw std::invalid_argument("group table has wrong shape");
  for (const auto& row : mul) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("group table has wrong shape");
    for (int v : row)
      if (v < 0 || v >= n) throw std::invalid_argument("group table entry out of range");
  }
  for (int i = 0; i < n; ++i)
    if (mul[0][i] != i || mul[i][0] != i)
      throw std::invalid_argument("element 0 is not a two-sided identity");
  for (int i = 0; i < n; ++i) {
    bool has_inv = false;
    for (int j = 0; j < n; ++j) has_inv |= (mul[i][j] == 0);
    if (!has_inv) throw std::invalid_argument("group element has no inverse");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (mul[mul[i][j]][k] != mul[i][mul[j][k]])
          throw std::invalid_argument("group table is not associative");
}

FiniteGroup cyclic_group(int k) {
  if (k < 1) throw std::invalid_argument("cyclic_group: order must be positive");
  FiniteGroup g;
  g.name = "c" + std::to_string(k);
  for (int i = 0; i < k; ++i) g.elems.push_back("g" + std::to_string(i));
  g.mul.assign(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) g.mul[i][j] = (i + j) % k;
  return g;
}

FiniteGroup trivial_group() {
  FiniteGroup g = cyclic_group(1);
  g.name = "1";
  g.elems = {"e"};
  return g;
}

FiniteGroup symmetric_group_s3() {
  // permutations of {0,1,2} in lexicographic one-line order, identity first
  static const std::array<std::array<int, 3>, 6> perms = {
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  FiniteGroup g;
  g.name = "s3";
  for (const auto& p : perms)
    g.elems.push_back(std::to_string(p[0]) + std::to_string(p[1]) + std::to_string(p[2]));
  auto index_of = [&](const std::array<int, 3>& p) {
    for (int i = 0; i < 6; ++i)
      if (perms[i] == p) return i;
    return -1;
  };
  g.mul.assign(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[i][perms[j][x]];
      g.mul[i][j] = index_of(c);
    }
  return g;
}

FiniteGroup klein_four_group() {
  FiniteGroup g;
  g.name = "klein";
  g.elems = {"e", "a", "b", "ab"};
  g.mul = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  return g;
}

FiniteGroup builtin_group(const std::string& name) {
  if (name == "s3") return symmetric_group_s3();
  if (name == "klein") return klein_four_group();
  if (name.size() == 2 && name[0] == 'c' && name[1] >= '1' && name[1] <= '6')
    return cyclic_group(name[1] - '0');
  throw std::invalid_argument("unknown group name: " + name);
}

FiniteGroup power_group(const FiniteGroup& g, int n) {
  int m = g.size();
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= m;
  FiniteGroup p;
  p.name = g.name + "^" + std::to_string(n);
  auto digits = [&](long long idx) {
    std::vector<int> d(n);
    for (int i = 0; i < n; ++i) {
      d[i] = static_cast<int>(idx % m);
      idx /= m;
    }
    return d;
  };
  for (long long e = 0; e < total; ++e) {
    std::string s;
    for (int d : digits(e)) s += g.elems[d] + ".";
    p.elems.push_back(s);
  }
  p.mul.assign(static_cast<size_t>(total), std::vector<int>(static_cast<size_t>(total)));
  for (long long e = 0; e < total; ++e)
    for (long long f = 0; f < total; ++f) {
      auto de = digits(e), df = digits(f);
      long long idx = 0, base = 1;
      for (int i = 0; i < n; ++i) {
        idx += base * g.product(de[i], df[i]);
        base *= m;
      }
      p.mul[static_cast<size_t>(e)][static_cast<size_t>(f)] = static_cast<int>(idx);
    }
  return p;
}

}  // namespace eicat
