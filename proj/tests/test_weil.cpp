#include <doctest.h>

#include <numeric>
#include <thread>

#include "oracles.hpp"
#include "wcav/matrix.hpp"
#include "wcav/sampling.hpp"
#include "wcav/weil.hpp"

using wcav::Int;

namespace {

std::vector<Int> ints(std::initializer_list<long> values) {
  std::vector<Int> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

const std::vector<wcav::WeilCentralClass>& sample() {
  static const auto classes = wcav::sample_classes({.seed = 99, .count = 24});
  return classes;
}

}  // namespace

TEST_CASE("new_class validation") {
  const auto e = wcav::new_class(Int(1), Int(73), 1);
  CHECK(e.p == 73);
  CHECK(e.r == 1);
  CHECK(e.ordinary);
  CHECK(e.label() == "(1,73)_1");

  CHECK_THROWS_AS(wcav::new_class(Int(20), Int(73), 1), wcav::ValidationError);
  CHECK_THROWS_AS(wcav::new_class(Int(1), Int(6), 1), wcav::ValidationError);
  CHECK_THROWS_AS(wcav::new_class(Int(1), Int(73), 0), wcav::ValidationError);

  const auto row4 = wcav::new_class(Int(20), Int(7), 6);
  CHECK(row4.ordinary);
  CHECK(row4.q_to_g == 117649);

  // The bound is inclusive: a^2 = 4 q^g is allowed.
  CHECK_NOTHROW(wcav::new_class(Int(4), Int(4), 1));
  CHECK_THROWS_AS(wcav::new_class(Int(5), Int(4), 1), wcav::ValidationError);
  const auto q8 = wcav::new_class(Int(-3), Int(8), 2);
  CHECK(q8.p == 2);
  CHECK(q8.r == 3);
  CHECK(q8.ordinary);
  CHECK_FALSE(wcav::new_class(Int(4), Int(8), 2).ordinary);
}

TEST_CASE("WeilPolynomial invariants") {
  const auto f = wcav::WeilPolynomial::of(wcav::new_class(Int(1), Int(73), 1));
  CHECK(f.coeffs() == ints({73, 1, 1}));
  CHECK(f.at_one() == 75);
  CHECK(f.derivative_at_one() == 3);
  CHECK(f.at(Int(2)) == 79);
  CHECK(f.derivative_at(Int(2)) == 5);
  CHECK(f.is_central());
  CHECK(f.to_string() == "t^2 + t + 73");

  CHECK_THROWS_AS(wcav::WeilPolynomial(1, Int(5), ints({5, 2, 2})), wcav::ValidationError);
  CHECK_THROWS_AS(wcav::WeilPolynomial(1, Int(5), ints({4, 2, 1})), wcav::ValidationError);
  CHECK_THROWS_AS(wcav::WeilPolynomial(2, Int(2), ints({4, 1, 0, 1, 1})), wcav::ValidationError);
  CHECK_THROWS_AS(wcav::WeilPolynomial(2, Int(2), ints({4, 1, 1})), wcav::ValidationError);
  CHECK_NOTHROW(wcav::WeilPolynomial(2, Int(2), ints({4, 2, 3, 1, 1})));
  CHECK(wcav::WeilPolynomial(2, Int(2), ints({4, -2, 3, -1, 1})).to_string() == "t^4 - t^3 + 3t^2 - 2t + 4");
}

TEST_CASE("power_sum") {
  const auto e = wcav::new_class(Int(1), Int(73), 1);
  CHECK(wcav::power_sum(e, 0) == 2);
  CHECK(wcav::power_sum(e, 1) == -1);
  CHECK(wcav::power_sum(e, 5) == -26281);

  const wcav::PowerSumSequence seq(e);
  CHECK(seq(5) == -26281);
  CHECK(seq(2) == -145);
  for (unsigned long n = 0; n < 40; ++n) CHECK(seq(n) == wcav::power_sum(e, n));
}

TEST_CASE("PowerSumSequence is safe to share across threads") {
  const auto cls = wcav::new_class(Int(17), Int(19), 3);
  const wcav::PowerSumSequence seq(cls);
  const auto expected = wcav::oracle::power_sums(cls.a, cls.q_to_g, 200);
  std::vector<int> mismatches(4, 0);
  {
    std::vector<std::jthread> threads;
    for (int t = 0; t < 4; ++t) {
      threads.emplace_back([&, t] {
        for (unsigned long n = 200; n-- > 0;) {
          const unsigned long k = (n * (t + 1)) % 201;
          if (seq(k) != expected[k]) ++mismatches[t];
        }
      });
    }
  }
  CHECK(std::accumulate(mismatches.begin(), mismatches.end(), 0) == 0);
}

TEST_CASE("a_n recursion") {
  const auto e = wcav::new_class(Int(1), Int(73), 1);
  CHECK(wcav::a_n_paper(e, 1) == 1);
  CHECK(wcav::a_n_paper(e, 3) == -218);
  CHECK(wcav::a_n_paper(e, 5) == 26281);
  CHECK_THROWS_AS(wcav::a_n_paper(wcav::new_class(Int(0), Int(73), 1), 3), wcav::DomainError);
  CHECK_THROWS_AS(wcav::a_n_paper(e, 0), wcav::DomainError);

  // Recursion against the power-sum oracle, for every n (the recursion
  // itself does not depend on gcd(n, g)).
  for (const auto& cls : sample()) {
    const auto table = wcav::a_n_paper_table(cls, 60);
    const auto p = wcav::oracle::power_sums(cls.a, cls.q_to_g, 60);
    for (unsigned long n = 1; n <= 60; ++n) {
      INFO(cls.label() << " n = " << n);
      CHECK(table[n] == -p[n]);
    }
  }
}

TEST_CASE("is_central_extension") {
  const auto g3 = wcav::new_class(Int(11), Int(17), 3);
  CHECK(wcav::is_central_extension(g3, 5));
  CHECK_FALSE(wcav::is_central_extension(g3, 6));
  const auto g1 = wcav::new_class(Int(1), Int(73), 1);
  for (unsigned long n = 1; n < 30; ++n) CHECK(wcav::is_central_extension(g1, n));
  CHECK_THROWS_AS(wcav::is_central_extension(wcav::new_class(Int(0), Int(2), 2), 3), wcav::DomainError);
}

TEST_CASE("companion matrix algebra") {
  const auto low = ints({73, 1});
  const auto c = wcav::IntMatrix::companion(low);
  CHECK(c(1, 0) == 1);
  CHECK(c(0, 1) == -73);
  CHECK(c(1, 1) == -1);
  CHECK(c.trace() == -1);
  auto naive = wcav::IntMatrix::identity(2);
  for (unsigned long n = 1; n <= 20; ++n) {
    naive = naive * c;
    CHECK(wcav::companion_power(low, n) == naive);
    CHECK(wcav::times_companion(naive, low) == naive * c);
  }
  CHECK(wcav::trace_of_product(naive, c) == (naive * c).trace());
}

TEST_CASE("coefficients_from_power_sums") {
  // Roots 1, 2, 3: power sums 6, 14, 36; polynomial t^3 - 6t^2 + 11t - 6.
  CHECK(wcav::coefficients_from_power_sums(ints({6, 14, 36})) == ints({-6, 11, -6, 1}));
  // Power sums 1, 0 would need e_2 = 1/2.
  CHECK_THROWS_AS(wcav::coefficients_from_power_sums(ints({1, 0})), wcav::InternalError);
}

TEST_CASE("extension_weil_poly examples") {
  const auto e = wcav::new_class(Int(1), Int(73), 1);
  const auto e2 = wcav::extension_weil_poly(e, 2);
  CHECK(e2.coeffs() == ints({5329, 145, 1}));
  CHECK(e2.base() == 5329);
  CHECK(wcav::extension_weil_poly(e, 1) == wcav::WeilPolynomial::of(e));

  const auto s = wcav::extension_weil_poly(wcav::new_class(Int(1), Int(2), 2), 2);
  CHECK(s.coeffs() == ints({16, 8, 9, 2, 1}));
  CHECK_FALSE(s.is_central());

  const auto t = wcav::extension_weil_poly(wcav::new_class(Int(0), Int(2), 2), 3);
  CHECK(t.coeffs() == ints({64, 0, 0, 0, 1}));
  CHECK(t.is_central());

  CHECK_THROWS_AS(wcav::extension_weil_poly(e, 0), wcav::DomainError);
}

TEST_CASE("extension polynomials match the closed-form oracle for every n") {
  for (const auto& cls : sample()) {
    for (unsigned long n = 1; n <= 30; ++n) {
      INFO(cls.label() << " n = " << n);
      const auto fn = wcav::extension_weil_poly(cls, n);
      CHECK(fn.coeffs() == wcav::oracle::extension_closed_form(cls.a, cls.q_to_g, cls.g, n));
      CHECK(fn.coeffs().front() == wcav::pow(cls.q, n * cls.g));
      if (std::gcd(n, cls.g) == 1) CHECK(fn.is_central());
    }
  }
  // Non-ordinary classes too; the matrix route needs no hypothesis.
  for (long a : {0L, -4L, 8L}) {
    const auto cls = wcav::new_class(Int(a), Int(4), 2);
    for (unsigned long n = 1; n <= 12; ++n) {
      CHECK(wcav::extension_weil_poly(cls, n).coeffs() ==
            wcav::oracle::extension_closed_form(cls.a, cls.q_to_g, cls.g, n));
    }
  }
}

TEST_CASE("ExtensionTower agrees with direct powering") {
  for (const auto& cls : sample()) {
    const wcav::ExtensionTower tower(wcav::WeilPolynomial::of(cls), 24);
    for (unsigned long n = 1; n <= 24; ++n) {
      CHECK(tower.extension(n) == wcav::extension_weil_poly(cls, n));
    }
    CHECK_THROWS_AS(tower.extension(25), wcav::DomainError);
    CHECK_THROWS_AS(tower.extension(0), wcav::DomainError);
  }
}

TEST_CASE("extension of an extension") {
  for (const auto& cls : sample()) {
    for (unsigned long m = 1; m <= 5; ++m) {
      const auto fm = wcav::extension_weil_poly(cls, m);
      for (unsigned long n = 1; n <= 5; ++n) {
        const auto tower = wcav::extension_weil_poly(fm, n);
        CHECK(tower == wcav::extension_weil_poly(cls, m * n));
        CHECK(tower.at_one() == wcav::point_count(cls, m * n));
      }
    }
  }
}

TEST_CASE("point_count") {
  const auto e = wcav::new_class(Int(1), Int(73), 1);
  CHECK(wcav::point_count(e, 1) == 75);
  CHECK(wcav::point_count(e, 4) == 28387875);
  CHECK(wcav::point_count(e, 5) == Int("2073097875"));
  CHECK(wcav::point_count(wcav::new_class(Int(11), Int(17), 3), 1) == 4925);
  CHECK(wcav::point_count(wcav::new_class(Int(1), Int(2), 2), 2) == 36);

  for (const auto& cls : sample()) {
    const Int n1 = wcav::point_count(cls, 1);
    CHECK(n1 >= 1);
    const auto primes = wcav::factorize(n1);
    for (unsigned long n = 1; n <= 60; ++n) {
      const Int nn = wcav::point_count(cls, n);
      REQUIRE(nn >= 1);
      // F_q points inject into F_{q^n} points.
      for (const auto& pe : primes.factors) CHECK(wcav::valuation(pe.prime, nn) >= pe.exponent);
    }
  }
}

TEST_CASE("P_n evaluation") {
  CHECK(wcav::eval_P_direct(Int(73), 1) == 1);
  CHECK(wcav::eval_P_direct(Int(1), 17) == 17);
  CHECK(wcav::eval_P_direct(Int(73), 3) == 5403);
  CHECK(wcav::eval_P_recursive(Int(-5), 1) == 1);
  CHECK(wcav::eval_P_recursive(Int(73), 3) == 5403);
  CHECK(wcav::eval_P_recursive(Int(2), 5) == 31);
  CHECK_THROWS_AS(wcav::eval_P_recursive(Int(2), 4), wcav::DomainError);
  CHECK_THROWS_AS(wcav::eval_P_direct(Int(2), 0), wcav::DomainError);

  std::vector<Int> xs;
  for (long x = -3; x <= 10; ++x) xs.emplace_back(x);
  xs.emplace_back(73);
  xs.push_back(wcav::pow(Int(17), 3));
  for (const Int& x : xs) {
    for (unsigned long n = 1; n <= 61; ++n) {
      const Int direct = wcav::eval_P_direct(x, n);
      CHECK((x - 1) * direct == wcav::pow(x, n) - 1);
      if (n % 2 == 1) CHECK(wcav::eval_P_recursive(x, n) == direct);
    }
  }
}
