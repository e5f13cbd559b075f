#include "wcav/sampling.hpp"

#include <algorithm>

namespace wcav {

std::vector<unsigned long> prime_powers_up_to(unsigned long bound) {
  std::vector<unsigned long> out;
  for (unsigned long p : primes_below(bound + 1)) {
    for (unsigned long q = p; q <= bound; q *= p) {
      out.push_back(q);
      if (q > bound / p) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<WeilCentralClass> sample_classes(const ClassSampleOptions& options) {
  const auto qs = prime_powers_up_to(options.q_max);
  if (qs.empty() || options.g_max == 0) throw DomainError("empty sampling range");
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(static_cast<unsigned long>(options.seed));

  std::vector<WeilCentralClass> out;
  out.reserve(options.count);
  while (out.size() < options.count) {
    const unsigned long q = qs[Int(rng.get_z_range(qs.size())).get_ui()];
    const unsigned long g = 1 + Int(rng.get_z_range(options.g_max)).get_ui();
    Int bound;
    const Int four_q_g = 4 * pow(Int(q), g);
    mpz_sqrt(bound.get_mpz_t(), four_q_g.get_mpz_t());
    const Int a = rng.get_z_range(Int(2 * bound + 1)) - bound;
    WeilCentralClass cls = new_class(a, Int(q), g);
    if (options.ordinary_only && !cls.ordinary) continue;
    out.push_back(std::move(cls));
  }
  return out;
}

}  // namespace wcav
