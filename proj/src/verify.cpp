#include "eicat/verify.hpp"

#include <nlohmann/json.hpp>

namespace eicat {

std::string check_results_json(const std::vector<CheckResult>& rs) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : rs) {
    const char* s = r.status == CheckResult::Pass   ? "pass"
                    : r.status == CheckResult::Fail ? "fail"
                                                    : "skip";
    nlohmann::json e{{"check", r.name}, {"status", s}};
    if (!r.detail.empty()) e["detail"] = r.detail;
    j.push_back(std::move(e));
  }
  return j.dump(2);
}

bool checks_all_passed(const std::vector<CheckResult>& rs) {
  for (const auto& r : rs)
    if (r.status == CheckResult::Fail) return false;
  return true;
}

int capped_headroom(const Species& s, int n, int want, unsigned long long budget) {
  for (int N = want; N > n; --N) {
    unsigned long long total = 0;
    bool over = false;
    for (int a = 0; a <= N && !over; ++a)
      for (int b = a; b <= N; ++b) {
        total += hom_count_formula(s, a, b);
        if (total > budget) {
          over = true;
          break;
        }
      }
    if (!over) return N;
  }
  return n;
}

}  // namespace eicat
