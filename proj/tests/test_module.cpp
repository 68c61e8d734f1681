#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eicat/module.hpp"
#include "eicat/verify.hpp"

#include <vector>

using namespace eicat;

namespace {

FiniteCategory oi(int n) { return build_category(make_species("oi", std::nullopt, 1, 2), n); }
FiniteCategory fi(int n) { return build_category(make_species("fi", std::nullopt, 1, 2), n); }

}  // namespace

TEST_CASE("representables and induced modules are functorial") {
  for (const char* name : {"fi", "oi", "vi"}) {
    Species sp = make_species(name, std::nullopt, 1, 2);
    FiniteCategory c = build_category(sp, 2);
    PrimeField f(3);
    for (int x = 0; x <= 2; ++x) {
      representable_projective(c, f, x).check_functorial();
      induced_projective(c, f, x, trivial_character(c, f, x)).check_functorial();
      simple_module(c, f, x, trivial_character(c, f, x)).check_functorial();
    }
  }
  FiniteCategory c3 = build_category(make_species("fi_g", cyclic_group(2), 1, 2), 2);
  RationalField q;
  for (int x = 0; x <= 2; ++x) {
    representable_projective(c3, q, x).check_functorial();
    induced_projective(c3, q, x, regular_aut_module(c3, q, x)).check_functorial();
  }
}

TEST_CASE("Yoneda: dim Hom(kCe_x, V) = dim V_x") {
  FiniteCategory c = oi(2);
  PrimeField f(2);
  RandomModules<PrimeField> rm(c, f, 99);
  for (int t = 0; t < 5; ++t) {
    CModule<PrimeField> v = rm.module();
    for (int x = 0; x <= 2; ++x) {
      CModule<PrimeField> rep = representable_projective(c, f, x);
      CHECK(static_cast<int>(module_hom_space(rep, v).size()) == v.dims[x]);
    }
  }
}

TEST_CASE("induced on the regular representation is the representable") {
  FiniteCategory c = build_category(make_species("fi_g", cyclic_group(2), 1, 2), 2);
  PrimeField f(5);
  for (int x = 0; x <= 2; ++x) {
    CModule<PrimeField> rep = representable_projective(c, f, x);
    CModule<PrimeField> ind = induced_projective(c, f, x, regular_aut_module(c, f, x));
    CHECK(rep.dims == ind.dims);
    // same dimensions and both projective covers of the same top; the
    // explicit isomorphism is verified by the library's own check
    CHECK(check_induced_regular(c, f, 0).status == CheckResult::Pass);
  }
}

TEST_CASE("pinned H_0 examples over kOI") {
  RationalField q;
  {
    // H_0(kCe_0) over OI_2 is the simple at 0: dims (1, 0, 0)
    FiniteCategory c = oi(2);
    CModule<RationalField> rep = representable_projective(c, q, 0);
    CHECK(h0(rep).dims == std::vector<int>{1, 0, 0});
    CHECK(generating_degree(rep) == 0);
  }
  {
    // shift of kOI_3 e_1 to OI_2: dims (V_1..V_3) = (1, 2, 3)
    FiniteCategory big = oi(3);
    FiniteCategory small = oi(2);
    CModule<RationalField> sh = shifted_representable(big, small, q, 1);
    CHECK(sh.dims == std::vector<int>{1, 2, 3});
    sh.check_functorial();
    CModule<RationalField> ref =
        shift_module(representable_projective(big, q, 1), small);
    CHECK(sh.dims == ref.dims);
    for (int i = 0; i < small.total; ++i) CHECK(sh.act[i] == ref.act[i]);
    // Lemma 2.8 support: H_0 lives in {0, 1}
    CModule<RationalField> h = h0(sh);
    CHECK(h.dims[0] > 0);
    CHECK(h.dims[1] > 0);
    CHECK(h.dims[2] == 0);
  }
}

TEST_CASE("restricted representable equals restrict(representable)") {
  PrimeField f(5);
  FiniteCategory big = fi(3);
  FiniteCategory small = fi(2);
  for (int x = 0; x <= 3; ++x) {
    CModule<PrimeField> direct = restricted_representable(big, small, f, x);
    CModule<PrimeField> ref = restrict_module(representable_projective(big, f, x), small);
    CHECK(direct.dims == ref.dims);
    for (int i = 0; i < small.total; ++i) CHECK(direct.act[i] == ref.act[i]);
  }
}

TEST_CASE("submodule closure and quotient give exact sequences") {
  FiniteCategory c = fi(2);
  PrimeField f(3);
  RandomModules<PrimeField> rm(c, f, 17);
  for (int t = 0; t < 10; ++t) {
    auto s = rm.random_ses();
    s.sub.check_functorial();
    s.quo.check_functorial();
    CHECK(detail::ses_exact<PrimeField>(s));
    CHECK(hom_commutes(s.sub, s.mid, s.incl));
    CHECK(hom_commutes(s.mid, s.quo, s.proj));
  }
}

TEST_CASE("pinned submodule example: arriving part of kOI_2 e_0") {
  // the submodule of kCe_0 generated by the basis vector at object 1 has
  // dims (0, 1, 1)
  FiniteCategory c = oi(2);
  RationalField q;
  CModule<RationalField> rep = representable_projective(c, q, 0);
  std::vector<std::vector<std::vector<RationalField::Elem>>> gens(3);
  gens[1].push_back({q.one()});
  SubmoduleData<RationalField> sd = submodule_generated(rep, gens);
  CHECK(sd.module.dims == std::vector<int>{0, 1, 1});
  QuotientData<RationalField> qd = quotient_by_submodule(rep, sd.inclusion);
  CHECK(qd.module.dims == std::vector<int>{1, 0, 0});
}

TEST_CASE("kernel and image of module homomorphisms") {
  FiniteCategory c = oi(2);
  PrimeField f(7);
  CModule<PrimeField> rep = representable_projective(c, f, 0);
  H0Data<PrimeField> h = h0_with_maps(rep);
  ModuleHom<PrimeField> proj;
  for (int x = 0; x <= 2; ++x) proj.push_back(h.proj[x].proj);
  CHECK(hom_commutes(rep, h.module, proj));
  SubmoduleData<PrimeField> ker = kernel_of_hom(rep, h.module, proj);
  CHECK(ker.module.dims == std::vector<int>{0, 1, 1});
  SubmoduleData<PrimeField> img = image_of_hom(rep, h.module, proj);
  CHECK(img.module.dims == h.module.dims);
}

TEST_CASE("lift and restrict round trip") {
  FiniteCategory big = fi(3);
  FiniteCategory small = fi(2);
  PrimeField f(5);
  RandomModules<PrimeField> rm(small, f, 23);
  for (int t = 0; t < 5; ++t) {
    CModule<PrimeField> w = rm.module();
    CModule<PrimeField> rt = restrict_module(lift_module(w, big), small);
    CHECK(rt.dims == w.dims);
    for (int i = 0; i < small.total; ++i) CHECK(rt.act[i] == w.act[i]);
  }
}

TEST_CASE("sign character only exists for the FI family") {
  PrimeField f(3);
  FiniteCategory c = fi(2);
  AutModule<PrimeField> s = sign_character(c, f, 2);
  CHECK(s.dim == 1);
  bool saw_minus = false;
  for (const auto& m : s.act) saw_minus |= f.eq(m.at(0, 0), f.from_int(-1));
  CHECK(saw_minus);
  FiniteCategory o = oi(2);
  CHECK_THROWS(sign_character(o, f, 2));
}
