// Micro-benchmark behind the multiplication crossover constant
// (qsc::detail::kKaratsubaThreshold): times schoolbook against Karatsuba on
// random dense operands of equal degree, with coefficient sizes typical of
// cyclotomic/Pochhammer workloads (small) and of accumulated numerators
// (hundreds of bits).
#include <chrono>
#include <cstdio>
#include <random>

#include "qsc/poly.hpp"

using namespace qsc;

namespace {

Poly random_poly(std::mt19937& rng, long degree, int coeff_bits) {
  std::uniform_int_distribution<long> small(-9, 9);
  std::uniform_int_distribution<int> bit(0, 1);
  std::vector<BigInt> c(degree + 1);
  for (long i = 0; i <= degree; ++i) {
    if (coeff_bits <= 8) {
      c[i] = small(rng);
    } else {
      BigInt v = 1;
      for (int b = 0; b < coeff_bits; ++b) v = v * 2 + bit(rng);
      c[i] = bit(rng) ? v : -v;
    }
  }
  c[degree] = 1;  // keep the degree honest
  return Poly(std::move(c));
}

template <typename F>
double time_ms(F&& f, int reps) {
  auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main() {
  std::mt19937 rng(42);
  std::printf("%8s %6s | %12s %12s | winner\n", "degree", "bits", "school ms", "karatsuba ms");
  for (int bits : {8, 256}) {
    for (long deg : {8L, 16L, 24L, 32L, 48L, 64L, 128L, 256L, 512L}) {
      Poly a = random_poly(rng, deg, bits);
      Poly b = random_poly(rng, deg, bits);
      int reps = deg <= 64 ? 200 : 20;
      double school = time_ms([&] { detail::mul_schoolbook(a, b); }, reps);
      double kara = time_ms([&] { detail::mul_karatsuba(a, b); }, reps);
      std::printf("%8ld %6d | %12.4f %12.4f | %s\n", deg, bits, school, kara,
                  school <= kara ? "schoolbook" : "karatsuba");
    }
  }
  std::printf("\ndispatch threshold in use: %zu (shorter operand length)\n",
              detail::kKaratsubaThreshold);
  return 0;
}
