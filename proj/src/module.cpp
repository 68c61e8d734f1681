#include "eicat/module.hpp"

#include <algorithm>
#include <sstream>

namespace eicat {

int permutation_sign(const std::vector<int>& perm) {
  int n = static_cast<int>(perm.size());
  std::vector<bool> seen(n, false);
  int sign = 1;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

void validate_aut_module_dims(size_t aut_size, size_t act_size) {
  if (aut_size != act_size)
    throw std::invalid_argument("AutModule action count does not match |Aut(x)|");
}

void check_same_species(const Species& a, const Species& b) {
  if (a.name() != b.name())
    throw std::invalid_argument("categories belong to different species");
}

OrbitData orbit_decompose(const FiniteCategory& c, int x, int y) {
  const auto& hs = c.homset(x, y);
  const auto& auts = c.homset(x, x);
  OrbitData od;
  od.orbit.assign(hs.size(), -1);
  od.aut_pos.assign(hs.size(), -1);
  for (size_t m = 0; m < hs.size(); ++m) {
    if (od.orbit[m] >= 0) continue;
    int o = static_cast<int>(od.reps.size());
    od.reps.push_back(static_cast<int>(m));
    for (size_t a = 0; a < auts.size(); ++a) {
      Morphism comp = compose(c.species, hs[m], auts[a]);
      auto it = std::lower_bound(hs.begin(), hs.end(), comp);
      size_t pos = static_cast<size_t>(it - hs.begin());
      if (od.orbit[pos] >= 0)
        throw std::logic_error("orbit decomposition: action is not free");
      od.orbit[pos] = o;
      od.aut_pos[pos] = static_cast<int>(a);
    }
  }
  return od;
}

std::string module_dims_to_string(const std::vector<int>& dims) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < dims.size(); ++i) {
    if (i) os << ",";
    os << dims[i];
  }
  os << ")";
  return os.str();
}

}  // namespace eicat
