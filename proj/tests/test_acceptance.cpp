// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
//
// The grid is every species variant (fi, fi_g with C_2/C_3, fi_d with
// d = 1/2, oi, oi_g, oi_d, vi with q = 2) at truncations n = 0..3 over
// characteristics {0, 2, 3, 5}.

#include "eicat/resolution.hpp"
#include "eicat/verify.hpp"

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <string>
#include <vector>

using namespace eicat;

namespace {

int failures = 0;

void report(int number, const std::string& label, bool pass, const std::string& why = "") {
  std::printf("criterion %d (%s): %s%s\n", number, label.c_str(), pass ? "PASS" : "FAIL",
              why.empty() ? "" : ("  [" + why + "]").c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

void progress(const std::string& what) {
  if (std::getenv("EICAT_VERBOSE")) std::fprintf(stderr, "[acceptance] %s\n", what.c_str());
}

std::vector<Species> grid_variants() {
  std::vector<Species> v;
  v.push_back(make_species("fi", std::nullopt, 1, 2));
  v.push_back(make_species("fi_g", cyclic_group(2), 1, 2));
  v.push_back(make_species("fi_g", cyclic_group(3), 1, 2));
  v.push_back(make_species("fi_d", std::nullopt, 1, 2));
  v.push_back(make_species("fi_d", std::nullopt, 2, 2));
  v.push_back(make_species("oi", std::nullopt, 1, 2));
  v.push_back(make_species("oi_g", cyclic_group(2), 1, 2));
  v.push_back(make_species("oi_g", cyclic_group(3), 1, 2));
  v.push_back(make_species("oi_d", std::nullopt, 1, 2));
  v.push_back(make_species("oi_d", std::nullopt, 2, 2));
  v.push_back(make_species("vi", std::nullopt, 1, 2));
  return v;
}

const std::vector<std::uint64_t> kChars = {0, 2, 3, 5};

template <class Fn>
void with_field(std::uint64_t c, Fn&& fn) {
  if (c == 0)
    fn(RationalField{});
  else
    fn(PrimeField{c});
}

template <class K>
GlobalDimReport gldim_cell(const Species& sp, int n, const K& f, int bound) {
  FiniteCategory cat = build_category(sp, n);
  MonomialAlgebra alg = category_algebra_structure(cat).algebra;
  return global_dimension(cat, f, bound, alg);
}

std::string cell_name(const Species& sp, int n, std::uint64_t chr) {
  return sp.name() + " n=" + std::to_string(n) + " char=" + std::to_string(chr);
}

// ---------------------------------------------------------------------------
// Criterion 1: Theorem 1.1 grid, plus pinned spot values and n = 4 smoke
// rows for FI and OI.

void criterion_1() {
  bool ok = true;
  std::string why;
  auto check_row = [&](const Species& sp, int n, std::uint64_t chr, auto verdict) {
    if (!ok) return;
    progress("gldim " + cell_name(sp, n, chr));
    with_field(chr, [&](auto f) {
      GlobalDimReport r = gldim_cell(sp, n, f, n + 4);
      if (!r.agree) {
        ok = false;
        why = "disagreement at " + cell_name(sp, n, chr);
        return;
      }
      if (r.predicted.infinite && !(r.computed_exceeds && !r.criterion.all_invertible)) {
        ok = false;
        why = "bad infinite-cell evidence at " + cell_name(sp, n, chr);
        return;
      }
      if (!verdict(r)) {
        ok = false;
        why = "pinned value mismatch at " + cell_name(sp, n, chr);
      }
    });
  };
  auto any = [](const GlobalDimReport&) { return true; };
  auto finite = [](int v) {
    return [v](const GlobalDimReport& r) { return !r.predicted.infinite && r.computed == v; };
  };
  auto infinite = [](const GlobalDimReport& r) { return r.predicted.infinite; };

  for (const Species& sp : grid_variants())
    for (int n = 0; n <= 3 && ok; ++n)
      for (std::uint64_t chr : kChars) check_row(sp, n, chr, any);
  // n = 4 smoke rows for FI and OI
  for (std::uint64_t chr : kChars) {
    check_row(make_species("oi", std::nullopt, 1, 2), 4, chr, finite(4));
    check_row(make_species("fi", std::nullopt, 1, 2), 4, chr,
              chr == 0 || chr == 5 ? std::function<bool(const GlobalDimReport&)>(finite(4))
                                   : std::function<bool(const GlobalDimReport&)>(infinite));
  }
  // pinned spot values
  Species fi = make_species("fi", std::nullopt, 1, 2);
  Species oi = make_species("oi", std::nullopt, 1, 2);
  Species oic2 = make_species("oi_g", cyclic_group(2), 1, 2);
  Species fid2 = make_species("fi_d", std::nullopt, 2, 2);
  Species vi = make_species("vi", std::nullopt, 1, 2);
  check_row(fi, 2, 3, finite(2));
  check_row(fi, 2, 2, infinite);
  for (std::uint64_t chr : kChars) check_row(oi, 3, chr, finite(3));
  check_row(oic2, 2, 3, finite(2));
  check_row(oic2, 2, 2, infinite);
  check_row(fid2, 2, 5, finite(2));
  check_row(vi, 2, 5, finite(2));
  check_row(vi, 2, 2, infinite);
  check_row(vi, 2, 3, infinite);
  report(1, "theorem 1.1 grid with pinned spot values", ok, why);
}

// ---------------------------------------------------------------------------
// Criteria 2-5 are driven by one verification-suite run per grid cell.

struct SuiteAggregate {
  bool failed = false;       // some required status was Fail or missing
  int passes = 0;            // cells where the check ran and passed
  std::string first_bad;
};

std::map<std::string, SuiteAggregate> aggregate;

// Checks that must run (and pass) in every cell, in any regime.
const std::vector<std::string> kAlwaysChecks = {
    "functoriality_random_modules", "lemma_3_4_1",  "lemma_3_4_2",
    "restrict_lift_identity",       "lift_exact",   "restrict_exact",
};
// Checks gated on the semisimple regime (Skip is acceptable where gated).
const std::vector<std::string> kGatedChecks = {
    "oracle_equivalence",          "cor_4_5_linearity", "lemma_4_4_pd",
    "lemma_3_2_restrict_projective", "prop_3_5_cover",  "cor_3_6_betti",
    "lemma_2_8_genetic_shift",
};

void run_cells() {
  for (const Species& sp : grid_variants())
    for (int n = 0; n <= 3; ++n)
      for (std::uint64_t chr : kChars) {
        progress("verify " + cell_name(sp, n, chr));
        with_field(chr, [&](auto f) {
          auto results = run_verify_suite(sp, n, f, n + 2, 20, 1);
          std::map<std::string, const CheckResult*> by_name;
          for (const auto& r : results) by_name[r.name] = &r;
          bool semisimple =
              invertibility_criterion(build_category(sp, n), f.spec()).all_invertible;
          auto record = [&](const std::string& name, bool require_pass) {
            SuiteAggregate& agg = aggregate[name];
            auto it = by_name.find(name);
            if (it == by_name.end() || it->second->status == CheckResult::Fail ||
                (require_pass && it->second->status != CheckResult::Pass)) {
              if (!agg.failed)
                agg.first_bad = cell_name(sp, n, chr) +
                                (it == by_name.end() ? " (missing)" : ": " + it->second->detail);
              agg.failed = true;
            } else if (it->second->status == CheckResult::Pass) {
              ++agg.passes;
            }
          };
          for (const auto& name : kAlwaysChecks) record(name, true);
          for (const auto& name : kGatedChecks) {
            bool require_pass = semisimple;
            // the oracle runs only at desk scale n <= 2; the genetic shift
            // and restriction checks may be budget-capped at the top cells
            if (name == "oracle_equivalence") require_pass = semisimple && n <= 2;
            if (name == "lemma_2_8_genetic_shift" || name == "prop_3_5_cover" ||
                name == "cor_3_6_betti" || name == "lemma_3_2_restrict_projective")
              require_pass = false;  // Skip allowed (headroom budget), Fail never
            record(name, require_pass);
          }
        });
      }
}

bool names_ok(const std::vector<std::string>& names, std::string& why) {
  for (const auto& name : names) {
    const SuiteAggregate& agg = aggregate[name];
    if (agg.failed) {
      why = name + " at " + agg.first_bad;
      return false;
    }
    if (agg.passes == 0) {
      why = name + " never ran";
      return false;
    }
  }
  return true;
}

void criteria_2_to_5() {
  run_cells();
  std::string why;
  bool ok2 = names_ok({"cor_4_5_linearity", "lemma_4_4_pd"}, why);
  report(2, "linear minimal resolutions of simples (Lemma 4.4 / Cor 4.5)", ok2, why);
  why.clear();
  bool ok3 = names_ok({"oracle_equivalence"}, why);
  report(3, "free-engine Ext equals minimal-engine Hom on random modules", ok3, why);
  why.clear();
  bool ok4 = names_ok({"functoriality_random_modules", "lemma_3_4_1", "lemma_3_4_2",
                       "restrict_lift_identity", "lift_exact", "restrict_exact",
                       "lemma_3_2_restrict_projective", "prop_3_5_cover", "cor_3_6_betti"},
                      why);
  report(4, "restriction/lift functor suite (Lemmas 3.2/3.4, Prop 3.5, Cor 3.6)", ok4, why);
  why.clear();
  bool ok5 = names_ok({"lemma_2_8_genetic_shift"}, why);
  report(5, "genetic shift of representables (Lemma 2.8)", ok5, why);
}

// ---------------------------------------------------------------------------
// Criterion 6: radical suite on the built-in group algebras.

template <class K>
bool radical_valid(const K& f, const MonomialAlgebra& a, int nilpotency_bound) {
  auto rad = radical_monomial_algebra(f, a);
  if (!is_nilpotent_subspace(f, a, rad, nilpotency_bound)) return false;
  auto q = quotient_algebra(f, a, rad);
  return radical_quotient_algebra(f, q).empty();
}

void criterion_6() {
  bool ok = true;
  std::string why;
  const std::vector<FiniteGroup> groups = {trivial_group(),       cyclic_group(2),
                                           cyclic_group(3),       cyclic_group(4),
                                           cyclic_group(5),       cyclic_group(6),
                                           symmetric_group_s3(),  klein_four_group()};
  for (const FiniteGroup& g : groups) {
    MonomialAlgebra a = group_algebra_structure(g);
    for (std::uint64_t chr : kChars) {
      with_field(chr, [&](auto f) {
        if (!ok) return;
        auto rad = radical_group_algebra(f, g);
        bool maschke = chr != 0 && g.size() % chr == 0 ? !rad.empty() : rad.empty();
        if (!maschke) {
          ok = false;
          why = "Maschke coincidence fails for |G|=" + std::to_string(g.size()) +
                " char=" + std::to_string(chr);
          return;
        }
        if (!radical_valid(f, a, static_cast<int>(g.size()) + 2)) {
          ok = false;
          why = "radical self-consistency fails for |G|=" + std::to_string(g.size()) +
                " char=" + std::to_string(chr);
        }
      });
    }
  }
  if (ok && radical_group_algebra(PrimeField(2), cyclic_group(2)).size() != 1) {
    ok = false;
    why = "pinned dim J(F_2 S_2) != 1";
  }
  if (ok && radical_group_algebra(PrimeField(3), symmetric_group_s3()).size() != 4) {
    ok = false;
    why = "pinned dim J(F_3 S_3) != 4";
  }
  report(6, "radical suite: Maschke coincidence and pinned dimensions", ok, why);
}

// ---------------------------------------------------------------------------
// Criterion 7: enumeration counts versus closed forms.

void criterion_7() {
  bool ok = true;
  std::string why;
  for (const Species& sp : grid_variants()) {
    int top = sp.linear() ? 3 : 4;
    FiniteCategory c = build_category(sp, top);
    for (int a = 0; a <= top && ok; ++a)
      for (int b = a; b <= top && ok; ++b) {
        auto expect = hom_count_formula(sp, a, b);
        if (static_cast<unsigned long long>(c.homset(a, b).size()) != expect) {
          ok = false;
          why = sp.name() + " |hom(" + std::to_string(a) + "," + std::to_string(b) +
                ")| != closed form";
        }
      }
  }
  report(7, "enumeration counts match closed forms", ok, why);
}

// ---------------------------------------------------------------------------
// Criterion 8: gl.dim kC_0 = 0 for every species and field.

void criterion_8() {
  bool ok = true;
  std::string why;
  for (const Species& sp : grid_variants())
    for (std::uint64_t chr : kChars)
      with_field(chr, [&](auto f) {
        if (!ok) return;
        GlobalDimReport r = gldim_cell(sp, 0, f, 4);
        if (!r.agree || r.predicted.infinite || r.computed != 0) {
          ok = false;
          why = cell_name(sp, 0, chr);
        }
      });
  report(8, "gl.dim of the truncation at n = 0 is zero", ok, why);
}

}  // namespace

int main() {
  criterion_1();
  criteria_2_to_5();
  criterion_6();
  criterion_7();
  criterion_8();
  std::printf("%s\n", failures == 0 ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED");
  return failures == 0 ? 0 : 1;
}
