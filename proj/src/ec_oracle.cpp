#include "wcav/ec_oracle.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <thread>
#include <utility>

namespace wcav::ec {

namespace {

struct Point {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  bool infinity = true;
};

class Curve {
 public:
  Curve(std::uint64_t p, std::uint64_t a) : p_(p), a_(a) {}

  Point add(const Point& P, const Point& Q) const {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    std::uint64_t slope;
    if (P.x == Q.x) {
      if ((P.y + Q.y) % p_ == 0) return {};
      slope = (3 * P.x % p_ * P.x + a_) % p_ * inverse(2 * P.y % p_) % p_;
    } else {
      slope = (Q.y + p_ - P.y) % p_ * inverse((Q.x + p_ - P.x) % p_) % p_;
    }
    const std::uint64_t x = (slope * slope % p_ + 2 * p_ - P.x - Q.x) % p_;
    const std::uint64_t y = (slope * ((P.x + p_ - x) % p_) % p_ + p_ - P.y) % p_;
    return {x, y, false};
  }

  Point multiply(std::uint64_t k, Point P) const {
    Point R;
    while (k > 0) {
      if (k & 1U) R = add(R, P);
      P = add(P, P);
      k >>= 1U;
    }
    return R;
  }

 private:
  std::uint64_t inverse(std::uint64_t v) const {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(v);
    while (new_r != 0) {
      const std::int64_t quotient = r / new_r;
      t = std::exchange(new_t, t - quotient * new_t);
      r = std::exchange(new_r, r - quotient * new_r);
    }
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(p_) : t);
  }

  std::uint64_t p_;
  std::uint64_t a_;
};

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t point_order(const Curve& curve, const Point& P, std::uint64_t group_order,
                          const std::vector<std::uint64_t>& primes) {
  std::uint64_t order = group_order;
  for (std::uint64_t r : primes) {
    while (order % r == 0 && curve.multiply(order / r, P).infinity) order /= r;
  }
  return order;
}

bool singular(std::uint64_t p, std::uint64_t A, std::uint64_t B) {
  return (4 * (A * A % p) % p * A + 27 * (B * B % p)) % p == 0;
}

void check_field(std::uint32_t p) {
  if (p < 5) throw DomainError("short Weierstrass curves need p >= 5, got " + std::to_string(p));
  if (!is_prime(Int(p))) throw DomainError(std::to_string(p) + " is not prime");
}

// roots[v] lists the square roots of v mod p.
std::vector<std::vector<std::uint32_t>> square_roots(std::uint32_t p) {
  std::vector<std::vector<std::uint32_t>> roots(p);
  for (std::uint64_t y = 0; y < p; ++y) roots[y * y % p].push_back(static_cast<std::uint32_t>(y));
  return roots;
}

CurveRecord structure_with_table(std::uint32_t p, std::uint32_t A, std::uint32_t B,
                                 const std::vector<std::vector<std::uint32_t>>& roots,
                                 std::uint64_t seed) {
  std::vector<Point> points;
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t rhs = ((x * x % p) * x + A * x + B) % p;
    for (std::uint32_t y : roots[rhs]) points.push_back({x, y, false});
  }
  CurveRecord rec{p, A, B, points.size() + 1, 0, 0};
  if (seed != 0) std::shuffle(points.begin(), points.end(), std::mt19937_64(seed));

  const Curve curve(p, A);
  const auto primes = prime_divisors(rec.point_count);
  std::uint64_t exponent = 1;
  for (const Point& P : points) {
    exponent = std::lcm(exponent, point_order(curve, P, rec.point_count, primes));
    if (exponent == rec.point_count) break;
  }
  rec.d2 = exponent;
  rec.d1 = rec.point_count / exponent;
  return rec;
}

}  // namespace

CurveRecord group_structure(std::uint32_t p, std::uint32_t A, std::uint32_t B, std::uint64_t seed) {
  check_field(p);
  if (A >= p || B >= p) throw DomainError("curve coefficients must be reduced mod p");
  if (singular(p, A, B)) {
    throw DomainError("singular curve: 4A^3 + 27B^2 = 0 mod " + std::to_string(p));
  }
  return structure_with_table(p, A, B, square_roots(p), seed);
}

bool ClassBucket::agrees() const {
  return criterion_cyclic != Verdict::unknown && (criterion_cyclic == Verdict::yes) == all_cyclic;
}

bool Census::all_agree() const {
  return std::all_of(buckets.begin(), buckets.end(), [](const ClassBucket& b) { return b.agrees(); });
}

Census class_census(std::uint32_t p, const OracleOptions& options) {
  check_field(p);
  if (p > options.max_p) {
    throw DomainError("p = " + std::to_string(p) + " exceeds the census cap " +
                      std::to_string(options.max_p));
  }
  const auto roots = square_roots(p);

  // One slot per A so the reduction below is independent of scheduling.
  std::vector<std::vector<CurveRecord>> per_a(p);
  std::vector<std::uint64_t> singular_per_a(p, 0);
  std::atomic<std::uint32_t> next{0};
  auto worker = [&] {
    for (std::uint32_t A = next++; A < p; A = next++) {
      for (std::uint32_t B = 0; B < p; ++B) {
        if (singular(p, A, B)) {
          ++singular_per_a[A];
          continue;
        }
        per_a[A].push_back(structure_with_table(p, A, B, roots, options.seed));
      }
    }
  };
  unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp(threads, 1U, p);
  {
    std::vector<std::jthread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
  }

  Census census;
  census.p = p;
  std::map<std::int64_t, ClassBucket> by_a;
  for (std::uint32_t A = 0; A < p; ++A) {
    census.singular += singular_per_a[A];
    for (CurveRecord& rec : per_a[A]) {
      ++census.curves;
      const std::int64_t a = static_cast<std::int64_t>(rec.point_count) - p - 1;
      ClassBucket& bucket = by_a[a];
      bucket.p = p;
      bucket.a = a;
      bucket.all_cyclic = bucket.all_cyclic && rec.cyclic();
      bucket.curves.push_back(rec);
    }
  }
  for (auto& [a, bucket] : by_a) {
    const WeilPolynomial f(1, Int(p), {Int(p), Int(static_cast<long>(a)), Int(1)});
    bucket.criterion_cyclic = is_cyclic_class(f);
    census.buckets.push_back(std::move(bucket));
  }
  return census;
}

}  // namespace wcav::ec
