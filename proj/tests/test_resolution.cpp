#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eicat/resolution.hpp"

#include <vector>

using namespace eicat;

namespace {

FiniteCategory oi(int n) { return build_category(make_species("oi", std::nullopt, 1, 2), n); }
FiniteCategory fi(int n) { return build_category(make_species("fi", std::nullopt, 1, 2), n); }

template <class K>
CModule<K> trivial_simple(const FiniteCategory& c, const K& f, int x) {
  return simple_module(c, f, x, trivial_character(c, f, x));
}

}  // namespace

TEST_CASE("minimal resolution of S_0 over kOI_2 is the length-2 diagonal") {
  FiniteCategory c = oi(2);
  PrimeField f(3);
  MinimalResolution<PrimeField> res = minimal_resolution(trivial_simple(c, f, 0), 4);
  CHECK(res.terminated);
  CHECK(res.length() == 2);
  REQUIRE(res.betti.entry.size() == 3);
  for (int s = 0; s <= 2; ++s)
    for (int x = 0; x <= 2; ++x)
      CHECK(res.betti.entry[s][x] == (x == s ? 1 : 0));
  CHECK(res.betti.linear_for(0));
}

TEST_CASE("free resolution of S_0 over kOI_1 has ranks (1, 1)") {
  FiniteCategory c = oi(1);
  RationalField q;
  MonomialAlgebra alg = category_algebra_structure(c).algebra;
  FreeResolution<RationalField> res = free_resolution(trivial_simple(c, q, 0), 4, alg);
  CHECK(res.terminated);
  CHECK(res.ranks() == std::vector<int>{1, 1});
  CHECK(res.gen_objs[0] == std::vector<int>{0});
  CHECK(res.gen_objs[1] == std::vector<int>{1});
}

TEST_CASE("representables are projective: pd(kCe_x) = 0") {
  for (const char* name : {"fi", "oi"}) {
    FiniteCategory c = build_category(make_species(name, std::nullopt, 1, 2), 2);
    PrimeField f(5);
    MonomialAlgebra alg = category_algebra_structure(c).algebra;
    CModule<PrimeField> amodj = a_mod_j_module(c, f);
    for (int x = 0; x <= 2; ++x) {
      CModule<PrimeField> rep = representable_projective(c, f, x);
      CHECK(is_projective(rep, alg, amodj));
      PdResult pd = projective_dimension(rep, 4, alg, amodj);
      CHECK(!pd.exceeds);
      CHECK(pd.value == 0);
    }
  }
}

TEST_CASE("pd(S_0) = n over kOI_n") {
  RationalField q;
  for (int n = 0; n <= 3; ++n) {
    FiniteCategory c = oi(n);
    MonomialAlgebra alg = category_algebra_structure(c).algebra;
    CModule<RationalField> amodj = a_mod_j_module(c, q);
    PdResult pd = projective_dimension(trivial_simple(c, q, 0), n + 2, alg, amodj);
    CHECK(!pd.exceeds);
    CHECK(pd.value == n);
  }
}

TEST_CASE("pinned Ext dims over kOI") {
  MonomialAlgebra alg2 = category_algebra_structure(oi(2)).algebra;
  {
    // Ext^0(S_0, S_0) = 1 over kOI_2
    FiniteCategory c = oi(2);
    PrimeField f(2);
    CModule<PrimeField> s0 = trivial_simple(c, f, 0);
    auto e = ext_dims(s0, s0, 2, alg2);
    CHECK(e[0] == 1);
  }
  {
    // Ext^1(S_0, S_1) = 1 over kOI_1
    FiniteCategory c = oi(1);
    PrimeField f(2);
    MonomialAlgebra alg = category_algebra_structure(c).algebra;
    auto e = ext_dims(trivial_simple(c, f, 0), trivial_simple(c, f, 1), 1, alg);
    CHECK(e[0] == 0);
    CHECK(e[1] == 1);
  }
}

TEST_CASE("pd(S_0) over kFI_2 in characteristic 2 exceeds bound 6") {
  FiniteCategory c = fi(2);
  PrimeField f(2);
  MonomialAlgebra alg = category_algebra_structure(c).algebra;
  CModule<PrimeField> amodj = a_mod_j_module(c, f);
  PdResult pd = projective_dimension(trivial_simple(c, f, 0), 6, alg, amodj);
  CHECK(pd.exceeds);
  for (int i = 0; i <= 6; ++i) CHECK(pd.ext_profile[i] > 0);
}

TEST_CASE("projective covers: tops and surjectivity") {
  FiniteCategory c = fi(2);
  PrimeField f(5);
  for (int x = 0; x <= 2; ++x) {
    CModule<PrimeField> rep = representable_projective(c, f, x);
    CoverData<PrimeField> cov = projective_cover(rep);
    // the cover of a projective is an isomorphism
    CHECK(cov.p.dims == rep.dims);
    REQUIRE(cov.multiset.size() == 1);
    CHECK(cov.multiset[0].first == x);
    CHECK(cov.multiset[0].second == static_cast<int>(c.homset(x, x).size()));
    CHECK(hom_commutes(cov.p, rep, cov.surjection));
  }
  // the cover of a simple is the induced projective on its character
  CModule<PrimeField> s = trivial_simple(c, f, 1);
  CoverData<PrimeField> cov = projective_cover(s);
  CHECK(cov.multiset == std::vector<std::pair<int, int>>{{1, 1}});
  CHECK(cov.p.dims == induced_projective(c, f, 1, trivial_character(c, f, 1)).dims);
}

TEST_CASE("minimal resolutions require the semisimple regime") {
  FiniteCategory c = fi(2);
  PrimeField f(2);
  CHECK_THROWS_AS(minimal_resolution(trivial_simple(c, f, 0), 3), RegimeViolation);
}

TEST_CASE("cover_hom_dim agrees with the free-engine Ext against A/J") {
  FiniteCategory c = fi(2);
  PrimeField f(3);
  MonomialAlgebra alg = category_algebra_structure(c).algebra;
  CModule<PrimeField> amodj = a_mod_j_module(c, f);
  for (int x = 0; x <= 2; ++x) {
    CModule<PrimeField> s = trivial_simple(c, f, x);
    auto ext = ext_dims(s, amodj, 3, alg);
    MinimalResolution<PrimeField> res = minimal_resolution(s, 3);
    for (int i = 0; i <= 3; ++i) {
      int hom = i < static_cast<int>(res.stages.size())
                    ? cover_hom_dim(res.stages[i], amodj)
                    : 0;
      CHECK(ext[i] == hom);
    }
  }
}

TEST_CASE("global dimension agrees with the closed form on small cells") {
  struct Cell {
    const char* species;
    int n;
    std::uint64_t chr;
    bool infinite;
    int value;
  };
  const Cell cells[] = {
      {"fi", 2, 3, false, 2}, {"fi", 2, 2, true, 0},  {"oi", 3, 2, false, 3},
      {"oi", 0, 2, false, 0}, {"fi", 0, 2, false, 0}, {"vi", 2, 5, false, 2},
      {"vi", 2, 2, true, 0},  {"vi", 2, 3, true, 0},
  };
  for (const Cell& cell : cells) {
    Species sp = make_species(cell.species, std::nullopt, 1, 2);
    FiniteCategory c = build_category(sp, cell.n);
    MonomialAlgebra alg = category_algebra_structure(c).algebra;
    PrimeField f(cell.chr);
    GlobalDimReport r = global_dimension(c, f, cell.n + 4, alg);
    CHECK(r.agree);
    CHECK(r.predicted.infinite == cell.infinite);
    if (cell.infinite) {
      CHECK(r.computed_exceeds);
      CHECK(!r.criterion.all_invertible);
    } else {
      CHECK(r.computed == cell.value);
      CHECK(r.computed == r.predicted.value);
    }
  }
  // char 0 row
  FiniteCategory c = fi(2);
  MonomialAlgebra alg = category_algebra_structure(c).algebra;
  GlobalDimReport r = global_dimension(c, RationalField{}, 6, alg);
  CHECK(r.agree);
  CHECK(r.computed == 2);
}

TEST_CASE("homological degrees satisfy the shift-by-one bound") {
  FiniteCategory c = oi(3);
  RationalField q;
  for (int x = 0; x <= 3; ++x) {
    auto hd = homological_degrees(trivial_simple(c, q, x), 4);
    for (int s = 0; s <= 4; ++s)
      if (hd[s] >= 0) CHECK(hd[s] == x + s);  // linear for simples
  }
}

TEST_CASE("genetic shift of representables over kOI") {
  FiniteCategory big = oi(3);
  FiniteCategory small = oi(2);
  PrimeField f(7);
  for (int x = 1; x <= 2; ++x) {
    GeneticShiftReport rep = verify_genetic_shift(big, small, f, x);
    CHECK(rep.pass);
    CHECK(rep.projective);
    CHECK(rep.support == std::vector<int>{x - 1, x});
  }
}
