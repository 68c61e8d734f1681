// Benchmark of the OpenMP kernels against their serial reference
// implementations: matrix product and reduced row echelon form over F_p
// and over Q.

#include "eicat/matrix.hpp"

#include <chrono>
#include <iostream>
#include <random>
#include <string>

using namespace eicat;

namespace {

template <class K>
Matrix<K> random_matrix(const K& f, int rows, int cols, std::mt19937_64& rng) {
  Matrix<K> m(f, rows, cols);
  for (auto& e : m.a) e = f.from_int(static_cast<long long>(rng() % 11) - 5);
  return m;
}

template <class Fn>
double time_ms(Fn&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

template <class K>
void bench_field(const std::string& label, const K& f, int size) {
  std::mt19937_64 rng(42);
  Matrix<K> a = random_matrix(f, size, size, rng);
  Matrix<K> b = random_matrix(f, size, size, rng);

  Matrix<K> p1(f, 0, 0), p2(f, 0, 0);
  double t_par = time_ms([&] { p1 = mat_mul(a, b); });
  double t_ser = time_ms([&] { p2 = mat_mul_serial(a, b); });
  bool same = p1 == p2;
  std::cout << label << " mat_mul " << size << "x" << size << ": parallel " << t_par
            << " ms, serial " << t_ser << " ms, match " << (same ? "yes" : "NO") << "\n";

  Matrix<K> r1 = a, r2 = a;
  double t_rp = time_ms([&] { rref_inplace(r1); });
  double t_rs = time_ms([&] { rref_inplace_serial(r2); });
  same = r1 == r2;
  std::cout << label << " rref    " << size << "x" << size << ": parallel " << t_rp
            << " ms, serial " << t_rs << " ms, match " << (same ? "yes" : "NO") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  int size = argc > 1 ? std::stoi(argv[1]) : 300;
  bench_field("F_5", PrimeField{5}, size);
  bench_field("Q  ", RationalField{}, size / 3);
  return 0;
}
