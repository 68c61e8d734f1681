#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eicat/verify.hpp"

#include <map>

using namespace eicat;

namespace {

std::map<std::string, CheckResult::Status> by_name(const std::vector<CheckResult>& rs) {
  std::map<std::string, CheckResult::Status> m;
  for (const auto& r : rs) m[r.name] = r.status;
  return m;
}

}  // namespace

TEST_CASE("verify suite passes on a semisimple-regime cell") {
  auto rs = run_verify_suite(make_species("oi", std::nullopt, 1, 2), 2, PrimeField(2), 4, 5, 7);
  CHECK(checks_all_passed(rs));
  auto m = by_name(rs);
  CHECK(m.at("lemma_3_4_1") == CheckResult::Pass);
  CHECK(m.at("lemma_2_8_genetic_shift") == CheckResult::Pass);
  CHECK(m.at("oracle_equivalence") == CheckResult::Pass);
  CHECK(m.at("prop_3_5_cover") == CheckResult::Pass);
}

TEST_CASE("verify suite gates regime-bound checks in a modular cell") {
  auto rs = run_verify_suite(make_species("fi", std::nullopt, 1, 2), 2, PrimeField(2), 4, 5, 7);
  CHECK(checks_all_passed(rs));  // skips do not fail the suite
  auto m = by_name(rs);
  CHECK(m.at("functoriality_random_modules") == CheckResult::Pass);
  CHECK(m.at("restrict_lift_identity") == CheckResult::Pass);
  CHECK(m.at("oracle_equivalence") == CheckResult::Skip);
  CHECK(m.at("cor_4_5_linearity") == CheckResult::Skip);
  CHECK(m.at("lemma_2_8_genetic_shift") == CheckResult::Skip);
}

TEST_CASE("verify output is deterministic in the seed") {
  Species sp = make_species("fi", std::nullopt, 1, 2);
  auto a = run_verify_suite(sp, 1, PrimeField(3), 3, 5, 11);
  auto b = run_verify_suite(sp, 1, PrimeField(3), 3, 5, 11);
  CHECK(check_results_json(a) == check_results_json(b));
}

TEST_CASE("capped headroom respects the morphism budget") {
  Species vi = make_species("vi", std::nullopt, 1, 2);
  int cap = capped_headroom(vi, 3, 5);
  CHECK(cap >= 3);
  CHECK(cap < 5);  // VI truncations explode past desk scale
  Species oi = make_species("oi", std::nullopt, 1, 2);
  CHECK(capped_headroom(oi, 2, 4) == 4);
}

TEST_CASE("random SES pieces are exact") {
  FiniteCategory c = build_category(make_species("fi_g", cyclic_group(2), 1, 2), 2);
  RandomModules<PrimeField> rm(c, PrimeField(3), 5);
  for (int t = 0; t < 5; ++t) {
    auto s = rm.random_ses();
    CHECK(detail::ses_exact<PrimeField>(s));
  }
}
