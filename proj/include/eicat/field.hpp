#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace eicat {

/// Runtime description of a ground field: the rationals or F_p.
enum class FieldKind { Rationals, PrimeField };

struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::uint64_t characteristic = 0;  // 0 for Q, prime p for F_p

  static FieldSpec rationals() { return {FieldKind::Rationals, 0}; }
  static FieldSpec prime(std::uint64_t p);

  bool operator==(const FieldSpec&) const = default;
  std::string name() const;
};

bool is_prime(std::uint64_t n);

/// F_p with runtime modulus. Elements are canonical residues in [0, p).
class PrimeField {
 public:
  using Elem = std::uint64_t;

  PrimeField() : p_(2) {}
  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("PrimeField: modulus must be prime");
  }

  std::uint64_t characteristic() const { return p_; }
  FieldSpec spec() const { return FieldSpec::prime(p_); }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }

  Elem from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return static_cast<Elem>(r);
  }
  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  std::string to_string(Elem a) const { return std::to_string(a); }
  std::uint64_t to_uint(Elem a) const { return a; }

  /// Rescaling hook for echelon-style algorithms; residues never grow.
  void normalize_vector(std::vector<Elem>&) const {}

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint64_t p_;
};

/// Q with arbitrary-precision arithmetic. cpp_rational keeps values in
/// lowest terms with positive denominator.
class RationalField {
 public:
  using Elem = boost::multiprecision::cpp_rational;

  std::uint64_t characteristic() const { return 0; }
  FieldSpec spec() const { return FieldSpec::rationals(); }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  Elem from_int(long long v) const { return Elem(v); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw std::domain_error("division by zero");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

  /// Scale to the primitive integer representative of the line: coprime
  /// integer entries, first nonzero positive. Keeps repeated eliminations
  /// from compounding fraction sizes.
  void normalize_vector(std::vector<Elem>& w) const {
    using boost::multiprecision::cpp_int;
    cpp_int num_gcd = 0, den_lcm = 1;
    for (const auto& e : w)
      if (e != 0) {
        num_gcd = gcd(num_gcd, cpp_int(numerator(e)));
        den_lcm = lcm(den_lcm, cpp_int(denominator(e)));
      }
    if (num_gcd == 0) return;
    Elem scale(den_lcm, num_gcd);
    for (const auto& e : w)
      if (e != 0) {
        if (e < 0) scale = -scale;
        break;
      }
    if (scale == 1) return;
    for (auto& e : w) e *= scale;
  }

  std::string to_string(const Elem& a) const { return a.str(); }
  std::uint64_t to_uint(const Elem& a) const {
    return boost::multiprecision::numerator(a).convert_to<std::uint64_t>();
  }

  bool operator==(const RationalField&) const { return true; }
};

}  // namespace eicat
