#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eicat/algebra.hpp"

#include <vector>

using namespace eicat;

namespace {

std::vector<FiniteGroup> builtin_groups() {
  return {trivial_group(),  cyclic_group(2), cyclic_group(3), cyclic_group(4),
          cyclic_group(5),  cyclic_group(6), symmetric_group_s3(), klein_four_group()};
}

template <class K>
int radical_dim(const K& f, const FiniteGroup& g) {
  return static_cast<int>(radical_group_algebra(f, g).size());
}

/// Self-consistency: J nilpotent, A/J has zero radical.
template <class K>
void check_radical_valid(const K& f, const MonomialAlgebra& a, int nilpotency_bound) {
  auto rad = radical_monomial_algebra(f, a);
  CHECK(is_nilpotent_subspace(f, a, rad, nilpotency_bound));
  auto q = quotient_algebra(f, a, rad);
  CHECK(radical_quotient_algebra(f, q).empty());
}

}  // namespace

TEST_CASE("monomial algebra structures validate") {
  for (const auto& g : builtin_groups()) {
    MonomialAlgebra a = group_algebra_structure(g);
    a.validate();
    CHECK(a.dim() == g.size());
  }
  FiniteCategory c = build_category(make_species("fi", std::nullopt, 1, 2), 3);
  CategoryAlgebraStructure cas = category_algebra_structure(c);
  cas.algebra.validate();
  CHECK(cas.algebra.dim() == c.total);
  CHECK(static_cast<int>(cas.idempotent.size()) == c.n + 1);
}

TEST_CASE("Maschke coincidence: J(kG) = 0 iff char divides |G|, chars {0,2,3,5}") {
  for (const auto& g : builtin_groups()) {
    {
      RationalField q;
      CHECK(radical_dim(q, g) == 0);
    }
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
      PrimeField f(p);
      int jd = radical_dim(f, g);
      if (g.size() % p == 0)
        CHECK(jd > 0);
      else
        CHECK(jd == 0);
    }
  }
}

TEST_CASE("pinned radical dimensions: J(F_2 S_2) = 1, J(F_3 S_3) = 4") {
  CHECK(radical_dim(PrimeField(2), cyclic_group(2)) == 1);  // S_2 = C_2
  CHECK(radical_dim(PrimeField(3), symmetric_group_s3()) == 4);
}

TEST_CASE("radical validity on group algebras") {
  for (const auto& g : builtin_groups()) {
    MonomialAlgebra a = group_algebra_structure(g);
    for (std::uint64_t p : {2ull, 3ull, 5ull})
      check_radical_valid(PrimeField(p), a, g.size() + 2);
    check_radical_valid(RationalField{}, a, g.size() + 2);
  }
}

TEST_CASE("radical of a category algebra: nilpotent with semisimple quotient") {
  for (const char* name : {"fi", "oi"}) {
    FiniteCategory c = build_category(make_species(name, std::nullopt, 1, 2), 2);
    MonomialAlgebra a = category_algebra_structure(c).algebra;
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
      PrimeField f(p);
      auto rad = radical_category_algebra(f, c);
      CHECK(is_nilpotent_subspace(f, a, rad, c.n + 2));
      auto q = quotient_algebra(f, a, rad);
      CHECK(radical_quotient_algebra(f, q).empty());
      // the EI decomposition agrees with the generic algorithm
      auto generic = radical_monomial_algebra(f, a);
      CHECK(generic.size() == rad.size());
      auto joint = subspace_sum(f, a.dim(), generic, rad);
      CHECK(joint.size() == rad.size());
    }
  }
}

TEST_CASE("invertibility criterion per object") {
  FiniteCategory c = build_category(make_species("fi", std::nullopt, 1, 2), 3);
  // aut orders 1, 1, 2, 6
  auto r0 = invertibility_criterion(c, FieldSpec::rationals());
  CHECK(r0.all_invertible);
  auto r2 = invertibility_criterion(c, FieldSpec::prime(2));
  CHECK(!r2.all_invertible);
  CHECK(r2.per_object[2].char_divides);
  auto r5 = invertibility_criterion(c, FieldSpec::prime(5));
  CHECK(r5.all_invertible);
  for (int x = 0; x <= 3; ++x)
    CHECK(r0.per_object[x].aut_order == aut_order_formula(c.species, x));
}
