// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <variant>

#include "oracles.hpp"
#include "wcav/cyclicity.hpp"
#include "wcav/ec_oracle.hpp"
#include "wcav/sampling.hpp"
#include "wcav/weil.hpp"

using wcav::Int;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& what) {
    if (ok) detail = what;
    ok = false;
  }
};

using Clock = std::chrono::steady_clock;

bool run(int id, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (out.ok && seconds > limit_seconds) {
    out.fail("took " + std::to_string(seconds) + " s, limit " + std::to_string(limit_seconds) + " s");
  }
  std::printf("[%s] AC%d %s (%.2f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title.c_str(), seconds,
              out.detail.empty() ? "" : ": ", out.detail.c_str());
  std::fflush(stdout);
  return out.ok;
}

const std::vector<wcav::WeilCentralClass>& sample() {
  static const auto classes = wcav::sample_classes({});
  return classes;
}

std::vector<unsigned long> primes_dividing(const Int& n, unsigned long bound) {
  std::vector<unsigned long> out;
  for (unsigned long l : wcav::primes_below(bound + 1)) {
    if (n % l == 0) out.push_back(l);
  }
  return out;
}

struct Row {
  long a;
  unsigned long q, g, l;
  const char* n1;
  const char* factorization;
  unsigned long omega;
};

const Row kRows[] = {{1, 73, 1, 5, "75", "3*5^2", 4},
                     {11, 17, 3, 5, "4925", "5^2*197", 4},
                     {17, 19, 3, 23, "6877", "13*23^2", 22},
                     {20, 7, 6, 41, "117670", "2*5*7*41^2", 20}};

Outcome table_reproduction() {
  Outcome out;
  for (const Row& row : kRows) {
    const auto cls = wcav::new_class(Int(row.a), Int(row.q), row.g);
    const Int n1 = wcav::WeilPolynomial::of(cls).at_one();
    if (n1 != Int(row.n1)) out.fail(cls.label() + " N = " + wcav::to_string(n1));
    if (wcav::factorize(n1).to_string() != row.factorization) out.fail(cls.label() + " factorization");
    const auto local = wcav::classify_local(cls, Int(row.l));
    if (!local.omega || *local.omega != Int(row.omega)) out.fail(cls.label() + " omega");
  }
  return out;
}

Outcome table_containment() {
  Outcome out;
  for (const Row& row : kRows) {
    const auto cls = wcav::new_class(Int(row.a), Int(row.q), row.g);
    const auto r = wcav::verify_main_theorem(cls, Int(row.l), 200);
    const auto* s = std::get_if<wcav::SetReport>(&r);
    if (s == nullptr) {
      out.fail(cls.label() + " not applicable");
    } else if (!s->g_containment_ok || !s->c_containment_ok) {
      out.fail(cls.label() + " containment violated");
    }
  }
  return out;
}

Outcome recursion_equivalence() {
  Outcome out;
  for (const auto& cls : sample()) {
    const auto table = wcav::a_n_paper_table(cls, 60);
    for (unsigned long n = 1; n <= 60; ++n) {
      if (std::gcd(n, cls.g) != 1) continue;
      if (table[n] != -wcav::power_sum(cls, n)) out.fail(cls.label() + " n=" + std::to_string(n));
    }
  }
  return out;
}

Outcome matrix_cross_check() {
  Outcome out;
  for (const auto& cls : sample()) {
    for (unsigned long n = 1; n <= 60; ++n) {
      const bool coprime = std::gcd(n, cls.g) == 1;
      if (!coprime && n > 30) continue;
      const auto fn = wcav::extension_weil_poly(cls, n);
      const auto& c = fn.coeffs();
      const Int base_g = wcav::pow(fn.base(), cls.g);
      if (fn.base() != wcav::pow(cls.q, n) || c.size() != 2 * cls.g + 1 || c.front() != base_g) {
        out.fail(cls.label() + " n=" + std::to_string(n) + " shape");
        continue;
      }
      for (unsigned long i = 0; i <= cls.g; ++i) {
        if (c[i] != wcav::pow(fn.base(), cls.g - i) * c[2 * cls.g - i]) {
          out.fail(cls.label() + " n=" + std::to_string(n) + " symmetry");
        }
      }
      if (coprime) {
        std::vector<Int> central(2 * cls.g + 1, Int(0));
        central[0] = base_g;
        central[cls.g] = wcav::a_n_paper(cls, n);
        central[2 * cls.g] = 1;
        if (c != central) out.fail(cls.label() + " n=" + std::to_string(n) + " central form");
      }
    }
  }
  return out;
}

Outcome p_identities() {
  Outcome out;
  std::vector<Int> grid;
  for (long x = -3; x <= 10; ++x) grid.emplace_back(x);
  for (long x : {73L, 4913L, 117649L}) grid.emplace_back(x);
  for (unsigned long n = 1; n <= 99; n += 2) {
    for (const Int& x : grid) {
      const Int direct = wcav::eval_P_direct(x, n);
      if (wcav::eval_P_recursive(x, n) != direct) out.fail("recursive n=" + std::to_string(n));
      if ((x - 1) * direct != wcav::pow(x, n) - 1) out.fail("telescoping n=" + std::to_string(n));
    }
  }
  return out;
}

Outcome growth_inequality() {
  Outcome out;
  unsigned long checks = 0, failures = 0;
  std::string first;
  for (const auto& cls : sample()) {
    const Int n1 = cls.q_to_g + cls.a + 1;
    for (unsigned long l : primes_dividing(n1, 50)) {
      for (unsigned long n = 1; n <= 51; n += 2) {
        const auto check = wcav::growth_lemma_check(cls, Int(l), n);
        ++checks;
        if (!check.holds) {
          if (failures++ == 0) {
            first = cls.label() + " l=" + std::to_string(l) + " n=" + std::to_string(n) + " (" +
                    std::to_string(check.lhs) + " < " + std::to_string(check.rhs) + ")";
          }
        }
      }
    }
  }
  if (failures > 0) {
    out.fail(std::to_string(failures) + " of " + std::to_string(checks) + " checks fail, first " + first);
  } else {
    out.detail = std::to_string(checks) + " checks";
  }
  return out;
}

Outcome spot_values() {
  Outcome out;
  const auto cls = wcav::new_class(Int(1), Int(73), 1);
  // Independent recomputation before trusting the expected constants.
  const auto p = wcav::oracle::power_sums(Int(1), Int(73), 5);
  const Int n5_oracle = wcav::pow(Int(73), 5) - p[5] + 1;
  if (-p[3] != -218 || -p[5] != 26281 || n5_oracle != Int("2073097875")) {
    out.fail("oracle disagrees with the expected constants");
  }
  if (wcav::a_n_paper(cls, 3) != -218) out.fail("a_3");
  if (wcav::a_n_paper(cls, 5) != 26281) out.fail("a_5");
  const Int n5 = wcav::point_count(cls, 5);
  if (n5 != Int("2073097875")) out.fail("N_5");
  if (wcav::valuation(Int(5), n5) != 3) out.fail("v_5(N_5)");
  if (wcav::growth_set(cls, Int(5), 6) != std::vector<unsigned long>{1, 4, 5}) out.fail("growth set");
  if (wcav::cyclic_growth_set(cls, Int(5), 6) != std::vector<unsigned long>{1, 5}) out.fail("cyclic set");
  return out;
}

Outcome ec_agreement(unsigned threads) {
  Outcome out;
  wcav::ec::OracleOptions options;
  options.threads = threads;
  std::uint64_t curves = 0;
  for (unsigned long p : wcav::primes_below(62)) {
    if (p < 5) continue;
    const auto census = wcav::ec::class_census(static_cast<std::uint32_t>(p), options);
    curves += census.curves;
    for (const auto& b : census.buckets) {
      if (!b.agrees()) out.fail("p=" + std::to_string(p) + " a=" + std::to_string(b.a));
      for (const auto& r : b.curves) {
        const std::int64_t trace = static_cast<std::int64_t>(p) + 1 - static_cast<std::int64_t>(r.point_count);
        if (static_cast<double>(trace * trace) > 4.0 * static_cast<double>(p)) out.fail("Hasse");
        if (std::gcd(r.point_count, std::uint64_t{p} - 1) % r.d1 != 0) out.fail("d1 divisibility");
      }
    }
  }
  if (out.ok) out.detail = std::to_string(curves) + " curves";
  return out;
}

Outcome l_cyclic_consistency() {
  Outcome out;
  for (const auto& cls : sample()) {
    const auto f = wcav::WeilPolynomial::of(cls);
    const auto fact = wcav::factorize(f.at_one());
    if (!fact.complete) out.fail(cls.label() + " incomplete factorization");
    for (const auto& pp : fact.factors) {
      const Int& l = pp.prime;
      if (!cls.ordinary || pp.exponent < 2 || Int(cls.g) % l == 0 || !wcav::is_l_cyclic(f, l)) continue;
      if ((cls.q_to_g - 1) % l == 0) out.fail(cls.label() + " l=" + wcav::to_string(l));
    }
  }
  return out;
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run(1, "Reference table point counts, factorizations and orders", 1, table_reproduction);
  ok &= run(2, "Containment for the reference table pairs at n_max = 200", 30, table_containment);
  ok &= run(3, "a_n recursion equals -power_sum on the sample", 30, recursion_equivalence);
  ok &= run(4, "Companion-matrix extensions: central form and q-symmetry", 1e9, matrix_cross_check);
  ok &= run(5, "P_n recursive/direct and telescoping identities", 1e9, p_identities);
  ok &= run(6, "Growth inequality on the sample", 60, growth_inequality);
  ok &= run(7, "(1,73)_1 spot values", 1e9, spot_values);
  ok &= run(8, "EC census agreement for 5 <= p <= 61, one thread", 300, [] { return ec_agreement(1); });
  ok &= run(8, "EC census agreement for 5 <= p <= 61, parallel", 60, [] { return ec_agreement(0); });
  ok &= run(9, "l-cyclic ordinary classes with l^2 | N_1, l not dividing g avoid l | q^g - 1", 1e9,
            l_cyclic_consistency);
  return ok ? 0 : 1;
}
