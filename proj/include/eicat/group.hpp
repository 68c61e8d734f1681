#pragma once

#include <string>
#include <vector>

namespace eicat {

/// A finite group given by an explicit multiplication table.
/// Element 0 is the identity; mul[i][j] is the index of g_i * g_j.
struct FiniteGroup {
  std::string name;
  std::vector<std::string> elems;
  std::vector<std::vector<int>> mul;

  int size() const { return static_cast<int>(elems.size()); }
  int identity() const { return 0; }
  int product(int i, int j) const { return mul[i][j]; }
  int inverse(int i) const;
  int power(int g, long long e) const;

  /// Exhaustive check of the group axioms; throws on failure.
  void validate() const;
};

FiniteGroup cyclic_group(int k);
FiniteGroup symmetric_group_s3();
FiniteGroup klein_four_group();
FiniteGroup trivial_group();

/// Built-in lookup by CLI name: c1..c6, s3, klein. Throws on unknown names.
FiniteGroup builtin_group(const std::string& name);

/// Direct product G^n (identified with maps [n] -> G). Index encoding is
/// base-|G|, digit i = component i.
FiniteGroup power_group(const FiniteGroup& g, int n);

}  // namespace eicat
