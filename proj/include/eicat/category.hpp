#pragma once

#include "eicat/group.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace eicat {

enum class SpeciesKind { FI, FI_G, FI_d, OI, OI_G, OI_d, VI };

/// Which family of combinatorial categories to build, with its parameters.
struct Species {
  SpeciesKind kind = SpeciesKind::FI;
  std::optional<FiniteGroup> group;  // FI_G / OI_G
  int d = 1;                         // FI_d / OI_d
  std::uint64_t q = 2;               // VI (prime)

  bool order_preserving() const {
    return kind == SpeciesKind::OI || kind == SpeciesKind::OI_G || kind == SpeciesKind::OI_d;
  }
  bool has_group() const { return kind == SpeciesKind::FI_G || kind == SpeciesKind::OI_G; }
  bool has_colors() const { return kind == SpeciesKind::FI_d || kind == SpeciesKind::OI_d; }
  bool linear() const { return kind == SpeciesKind::VI; }

  void validate() const;
  std::string name() const;
};

Species make_species(const std::string& kind_name, const std::optional<FiniteGroup>& group,
                     int d, std::uint64_t q);

/// One morphism a -> b. Object x is the skeleton object of size x
/// ([x] = {0,...,x-1}, or F_q^x for VI).
struct Morphism {
  int src = 0, tgt = 0;
  std::vector<int> inj;     // size src; distinct values in [0,tgt); increasing for OI family
  std::vector<int> gvals;   // size src; group element per source point (G species)
  std::vector<int> colors;  // size tgt-src; color of each complement point of [tgt],
                            // listed for the complement in increasing order (d species)
  std::vector<int> vimat;   // VI: tgt x src matrix over F_q, row-major, full column rank

  auto payload() const { return std::tie(inj, gvals, colors, vimat); }
  bool operator==(const Morphism& o) const {
    return src == o.src && tgt == o.tgt && payload() == o.payload();
  }
  bool operator<(const Morphism& o) const { return payload() < o.payload(); }
};

/// Skeletal truncated category: objects 0..n, fully enumerated hom-sets
/// in canonical lexicographic payload order. Immutable after build.
struct FiniteCategory {
  Species species;
  int n = 0;
  std::vector<std::vector<std::vector<Morphism>>> hom;  // hom[a][b], empty for a > b
  std::vector<std::vector<int>> offset;                 // flat index of first morphism of hom(a,b)
  int total = 0;                                        // total morphism count

  const std::vector<Morphism>& homset(int a, int b) const { return hom[a][b]; }
  const Morphism& morphism(int flat) const;
  int index_of(const Morphism& m) const;  // flat index; throws if absent
  int identity_index(int x) const;
  std::pair<int, int> src_tgt(int flat) const;
};

FiniteCategory build_category(const Species& s, int n);

Morphism identity_morphism(const Species& s, int x);

/// Categorical composite g after f; requires f.tgt == g.src.
Morphism compose(const Species& s, const Morphism& g, const Morphism& f);

/// Automorphism group of object x, identity first, remaining elements in
/// canonical morphism order. hom_index[i] is the position of element i
/// inside homset(x, x).
struct AutGroup {
  FiniteGroup group;
  std::vector<int> hom_index;
};
AutGroup aut_group(const FiniteCategory& c, int x);

/// Positions (inside homset(x, x)) of a small generating set of Aut(x),
/// found greedily without building a multiplication table. The identity
/// is never included.
std::vector<int> aut_generator_positions(const FiniteCategory& c, int x);

/// The self-embedding on morphisms: a map hom_{C_{N-1}}(a,b) -> hom_{C_N}(a+1,b+1)
/// adding a new minimum point (a new leading basis vector for VI) that is
/// fixed, carries the identity group value, and lies in the image.
Morphism self_embed(const Species& s, const Morphism& m);

unsigned long long hom_count_formula(const Species& s, int a, int b);
unsigned long long aut_order_formula(const Species& s, int x);

std::string morphism_label(const Morphism& m);
std::string category_to_json(const FiniteCategory& c);

}  // namespace eicat
