#include "eicat/resolution.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace eicat {

GlDimValue predicted_global_dimension(const Species& s, int n, const FieldSpec& k) {
  GlDimValue v;
  v.value = n;
  if (k.characteristic == 0) return v;
  for (int x = 0; x <= n; ++x)
    if (aut_order_formula(s, x) % k.characteristic == 0) {
      v.infinite = true;
      return v;
    }
  return v;
}

Morphism invert_endo(const Species& s, const Morphism& m) {
  if (m.src != m.tgt) throw std::invalid_argument("invert_endo: not an endomorphism");
  Morphism r;
  r.src = r.tgt = m.src;
  int x = m.src;
  if (s.linear()) {
    // Gauss-Jordan inverse over F_q
    std::uint64_t q = s.q;
    std::vector<long long> a(m.vimat.begin(), m.vimat.end());
    std::vector<long long> inv(static_cast<size_t>(x) * x, 0);
    for (int i = 0; i < x; ++i) inv[static_cast<size_t>(i) * x + i] = 1;
    auto modinv = [&](long long v) {
      long long r0 = 1;
      for (std::uint64_t e = 0; e + 2 < q; ++e) r0 = (r0 * v) % static_cast<long long>(q);
      return r0;
    };
    for (int c = 0; c < x; ++c) {
      int pr = -1;
      for (int i = c; i < x; ++i)
        if (a[static_cast<size_t>(i) * x + c] % static_cast<long long>(q) != 0) { pr = i; break; }
      for (int j = 0; j < x; ++j) {
        std::swap(a[static_cast<size_t>(pr) * x + j], a[static_cast<size_t>(c) * x + j]);
        std::swap(inv[static_cast<size_t>(pr) * x + j], inv[static_cast<size_t>(c) * x + j]);
      }
      long long pi = modinv(a[static_cast<size_t>(c) * x + c] % static_cast<long long>(q));
      for (int j = 0; j < x; ++j) {
        a[static_cast<size_t>(c) * x + j] = (a[static_cast<size_t>(c) * x + j] * pi) %
                                            static_cast<long long>(q);
        inv[static_cast<size_t>(c) * x + j] = (inv[static_cast<size_t>(c) * x + j] * pi) %
                                              static_cast<long long>(q);
      }
      for (int i = 0; i < x; ++i) {
        if (i == c) continue;
        long long f = a[static_cast<size_t>(i) * x + c] % static_cast<long long>(q);
        if (f == 0) continue;
        for (int j = 0; j < x; ++j) {
          a[static_cast<size_t>(i) * x + j] =
              ((a[static_cast<size_t>(i) * x + j] - f * a[static_cast<size_t>(c) * x + j]) %
                   static_cast<long long>(q) +
               static_cast<long long>(q) * static_cast<long long>(q)) %
              static_cast<long long>(q);
          inv[static_cast<size_t>(i) * x + j] =
              ((inv[static_cast<size_t>(i) * x + j] - f * inv[static_cast<size_t>(c) * x + j]) %
                   static_cast<long long>(q) +
               static_cast<long long>(q) * static_cast<long long>(q)) %
              static_cast<long long>(q);
        }
      }
    }
    r.vimat.assign(inv.begin(), inv.end());
    return r;
  }
  // set-based species: invert the permutation
  std::vector<int> finv(x);
  for (int i = 0; i < x; ++i) finv[m.inj[i]] = i;
  r.inj = finv;
  if (s.has_group()) {
    r.gvals.resize(x);
    for (int i = 0; i < x; ++i) r.gvals[i] = s.group->inverse(m.gvals[finv[i]]);
  }
  return r;
}

std::string gldim_value_string(const GlobalDimReport& r) {
  if (r.computed_exceeds) return "exceeds bound " + std::to_string(r.bound);
  return std::to_string(r.computed);
}

std::string global_dim_report_json(const GlobalDimReport& r) {
  nlohmann::json j;
  j["species"] = r.species;
  j["n"] = r.n;
  j["field"] = r.field;
  j["predicted"] = r.predicted.infinite ? nlohmann::json("inf") : nlohmann::json(r.predicted.value);
  j["computed"] = r.computed_exceeds ? nlohmann::json(gldim_value_string(r))
                                     : nlohmann::json(r.computed);
  j["bound"] = r.bound;
  j["agree"] = r.agree;
  j["ext_profile"] = r.ext_profile;
  nlohmann::json crit = nlohmann::json::array();
  for (const auto& o : r.criterion.per_object)
    crit.push_back(
        {{"object", o.object}, {"aut_order", o.aut_order}, {"char_divides", o.char_divides}});
  j["criterion"] = {{"all_invertible", r.criterion.all_invertible}, {"per_object", crit}};
  return j.dump(2);
}

std::string BettiTable::to_csv() const {
  std::ostringstream os;
  size_t width = entry.empty() ? 0 : entry[0].size();
  os << "s";
  for (size_t x = 0; x < width; ++x) os << "," << x;
  os << "\n";
  for (size_t s = 0; s < entry.size(); ++s) {
    os << s;
    for (size_t x = 0; x < width; ++x) os << "," << entry[s][x];
    os << "\n";
  }
  return os.str();
}

bool BettiTable::linear_for(int min_support) const {
  for (size_t s = 0; s < entry.size(); ++s)
    for (size_t x = 0; x < entry[s].size(); ++x)
      if (entry[s][x] != 0 && static_cast<int>(x) != static_cast<int>(s) + min_support)
        return false;
  return true;
}

}  // namespace eicat
