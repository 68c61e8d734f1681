#include "eicat/field.hpp"

namespace eicat {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("FieldSpec: characteristic must be prime");
  return {FieldKind::PrimeField, p};
}

std::string FieldSpec::name() const {
  return kind == FieldKind::Rationals ? "Q" : "F" + std::to_string(characteristic);
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("division by zero in F_p");
  // extended Euclid
  long long t = 0, newt = 1;
  long long r = static_cast<long long>(p_), newr = static_cast<long long>(a);
  while (newr != 0) {
    long long q = r / newr;
    long long tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (t < 0) t += static_cast<long long>(p_);
  return static_cast<Elem>(t);
}

}  // namespace eicat
