#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eicat/category.hpp"
#include "eicat/module.hpp"

#include <nlohmann/json.hpp>

#include <random>
#include <set>
#include <vector>

using namespace eicat;

namespace {

std::vector<Species> grid_species() {
  std::vector<Species> out;
  out.push_back(make_species("fi", std::nullopt, 1, 2));
  out.push_back(make_species("fi_g", cyclic_group(2), 1, 2));
  out.push_back(make_species("fi_g", cyclic_group(3), 1, 2));
  out.push_back(make_species("fi_d", std::nullopt, 1, 2));
  out.push_back(make_species("fi_d", std::nullopt, 2, 2));
  out.push_back(make_species("oi", std::nullopt, 1, 2));
  out.push_back(make_species("oi_g", cyclic_group(2), 1, 2));
  out.push_back(make_species("oi_g", cyclic_group(3), 1, 2));
  out.push_back(make_species("oi_d", std::nullopt, 1, 2));
  out.push_back(make_species("oi_d", std::nullopt, 2, 2));
  out.push_back(make_species("vi", std::nullopt, 1, 2));
  return out;
}

int grid_n(const Species& s) { return s.linear() ? 3 : 4; }

}  // namespace

TEST_CASE("hom-set sizes match the closed forms") {
  for (const Species& sp : grid_species()) {
    int n = grid_n(sp);
    FiniteCategory c = build_category(sp, n);
    for (int a = 0; a <= n; ++a)
      for (int b = a; b <= n; ++b) {
        CHECK(c.homset(a, b).size() == hom_count_formula(sp, a, b));
        // every enumerated morphism is distinct and in canonical order
        const auto& hs = c.homset(a, b);
        for (size_t i = 1; i < hs.size(); ++i) CHECK(hs[i - 1] < hs[i]);
      }
    for (int x = 0; x <= n; ++x)
      CHECK(c.homset(x, x).size() == aut_order_formula(sp, x));
  }
}

TEST_CASE("pinned hom counts") {
  // |Aut_VI(2)| = (q^2-1)(q^2-q) = 6 for q=2; |Aut_FI_G(3)| = 3! * |G|^3
  FiniteCategory vi = build_category(make_species("vi", std::nullopt, 1, 2), 2);
  CHECK(vi.homset(2, 2).size() == 6);
  FiniteCategory fic3 = build_category(make_species("fi_g", cyclic_group(3), 1, 2), 3);
  CHECK(fic3.homset(3, 3).size() == 162);
  FiniteCategory oi = build_category(make_species("oi", std::nullopt, 1, 2), 4);
  CHECK(oi.homset(2, 4).size() == 6);  // binom(4,2)
}

TEST_CASE("identity and associativity") {
  std::mt19937_64 rng(3);
  for (const Species& sp : grid_species()) {
    int n = sp.linear() ? 2 : 3;
    FiniteCategory c = build_category(sp, n);
    for (int x = 0; x <= n; ++x) {
      const Morphism id = identity_morphism(sp, x);
      CHECK(c.morphism(c.identity_index(x)) == id);
      for (int y = x; y <= n; ++y)
        for (const auto& m : c.homset(x, y)) {
          CHECK(compose(sp, m, id) == m);
          CHECK(compose(sp, identity_morphism(sp, y), m) == m);
        }
    }
    // sampled associativity over composable triples
    for (int t = 0; t < 300; ++t) {
      int a = static_cast<int>(rng() % (n + 1));
      int b = a + static_cast<int>(rng() % (n - a + 1));
      int d = b + static_cast<int>(rng() % (n - b + 1));
      const auto& h1 = c.homset(a, b);
      const auto& h2 = c.homset(b, d);
      const auto& h3 = c.homset(d, n);
      if (h1.empty() || h2.empty() || h3.empty()) continue;
      const Morphism& f = h1[rng() % h1.size()];
      const Morphism& g = h2[rng() % h2.size()];
      const Morphism& h = h3[rng() % h3.size()];
      CHECK(compose(sp, h, compose(sp, g, f)) == compose(sp, compose(sp, h, g), f));
    }
  }
}

TEST_CASE("EI property: every endomorphism is invertible") {
  for (const Species& sp : grid_species()) {
    int n = sp.linear() ? 2 : 3;
    FiniteCategory c = build_category(sp, n);
    for (int x = 0; x <= n; ++x) {
      const Morphism id = identity_morphism(sp, x);
      for (const auto& m : c.homset(x, x)) {
        bool has_inverse = false;
        for (const auto& w : c.homset(x, x))
          if (compose(sp, m, w) == id && compose(sp, w, m) == id) {
            has_inverse = true;
            break;
          }
        CHECK(has_inverse);
      }
    }
  }
}

TEST_CASE("aut_group is a valid group matching the hom-set") {
  for (const Species& sp : grid_species()) {
    int n = sp.linear() ? 2 : 3;
    FiniteCategory c = build_category(sp, n);
    for (int x = 0; x <= n; ++x) {
      AutGroup ag = aut_group(c, x);
      ag.group.validate();
      CHECK(ag.group.size() == static_cast<int>(c.homset(x, x).size()));
      CHECK(ag.hom_index[0] == c.identity_index(x) - c.offset[x][x]);
    }
  }
}

TEST_CASE("aut_generator_positions generate the automorphism group") {
  for (const Species& sp : grid_species()) {
    int n = sp.linear() ? 2 : 3;
    FiniteCategory c = build_category(sp, n);
    for (int x = 0; x <= n; ++x) {
      const auto& hs = c.homset(x, x);
      auto gens = aut_generator_positions(c, x);
      std::set<int> closure{static_cast<int>(
          std::lower_bound(hs.begin(), hs.end(), identity_morphism(sp, x)) - hs.begin())};
      bool grew = true;
      while (grew) {
        grew = false;
        std::set<int> next = closure;
        for (int m : closure)
          for (int g : gens) {
            Morphism p = compose(sp, hs[m], hs[g]);
            int pos = static_cast<int>(std::lower_bound(hs.begin(), hs.end(), p) - hs.begin());
            if (next.insert(pos).second) grew = true;
          }
        closure = std::move(next);
      }
      CHECK(closure.size() == hs.size());
    }
  }
}

TEST_CASE("free right automorphism action and orbit decomposition") {
  for (const Species& sp : grid_species()) {
    int n = sp.linear() ? 2 : 3;
    FiniteCategory c = build_category(sp, n);
    for (int x = 0; x <= n; ++x)
      for (int y = x; y <= n; ++y) {
        const auto& hs = c.homset(x, y);
        const auto& auts = c.homset(x, x);
        OrbitData od = orbit_decompose(c, x, y);
        CHECK(od.reps.size() * auts.size() == hs.size());  // the action is free
        for (size_t m = 0; m < hs.size(); ++m) {
          Morphism rebuilt = compose(sp, hs[od.reps[od.orbit[m]]], auts[od.aut_pos[m]]);
          CHECK(rebuilt == hs[m]);
        }
      }
  }
}

TEST_CASE("self-embedding is an injective functor") {
  for (const Species& sp : grid_species()) {
    int n = sp.linear() ? 2 : 3;
    FiniteCategory small = build_category(sp, n);
    FiniteCategory big = build_category(sp, n + 1);
    std::mt19937_64 rng(5);
    for (int x = 0; x <= n; ++x) {
      Morphism ei = self_embed(sp, identity_morphism(sp, x));
      CHECK(ei == identity_morphism(sp, x + 1));
      for (int y = x; y <= n; ++y) {
        std::set<Morphism> seen;
        for (const auto& m : small.homset(x, y)) {
          Morphism em = self_embed(sp, m);
          CHECK(em.src == x + 1);
          CHECK(em.tgt == y + 1);
          big.index_of(em);  // must be a genuine morphism of C_{n+1}
          CHECK(seen.insert(em).second);
        }
      }
    }
    for (int t = 0; t < 200; ++t) {
      int a = static_cast<int>(rng() % (n + 1));
      int b = a + static_cast<int>(rng() % (n - a + 1));
      const auto& h1 = small.homset(a, b);
      const auto& h2 = small.homset(b, n);
      if (h1.empty() || h2.empty()) continue;
      const Morphism& f = h1[rng() % h1.size()];
      const Morphism& g = h2[rng() % h2.size()];
      CHECK(self_embed(sp, compose(sp, g, f)) ==
            compose(sp, self_embed(sp, g), self_embed(sp, f)));
    }
  }
}

TEST_CASE("species validation rejects bad parameters") {
  CHECK_THROWS(make_species("vi", std::nullopt, 1, 6));       // q must be prime
  CHECK_THROWS(make_species("fi_d", std::nullopt, 0, 2));     // d >= 1
  CHECK_THROWS(make_species("fi_g", std::nullopt, 1, 2));     // group required
  CHECK_THROWS(make_species("nope", std::nullopt, 1, 2));     // unknown species
}

TEST_CASE("category JSON dump has canonical payload lists") {
  FiniteCategory c = build_category(make_species("oi_g", cyclic_group(2), 1, 2), 2);
  nlohmann::json j = nlohmann::json::parse(category_to_json(c));
  CHECK(j["n"] == 2);
  CHECK(j["params"]["group"] == "c2");
  bool saw12 = false;
  for (const auto& h : j["homs"]) {
    int a = h["a"], b = h["b"];
    REQUIRE(h["payloads"].size() == c.homset(a, b).size());
    // canonical order: labels match the homset enumeration order
    for (size_t i = 0; i < h["payloads"].size(); ++i)
      CHECK(h["payloads"][i] == morphism_label(c.homset(a, b)[i]));
    if (a == 1 && b == 2) saw12 = true;
  }
  CHECK(saw12);
}
