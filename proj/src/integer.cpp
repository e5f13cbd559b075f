#include "wcav/integer.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <sstream>

namespace wcav {

namespace {

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = primes_below(1'000'001);
  return primes;
}

bool miller_rabin_round(const Int& n, const Int& n_minus_1, const Int& d, unsigned long s,
                        unsigned long witness) {
  Int a = witness;
  a %= n;
  if (a == 0) return true;
  Int x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

// Returns a nontrivial factor of the odd composite n, or 0 when the budget runs out.
Int brent_rho(const Int& n, unsigned long& budget) {
  constexpr unsigned long kBatch = 128;
  for (unsigned long c = 1; budget > 0; ++c) {
    auto step = [&](const Int& v) { return Int((v * v + c) % n); };
    Int y = 2, x, ys, q = 1, g = 1;
    unsigned long r = 1;
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      do {
        ys = y;
        const unsigned long steps = std::min(kBatch, r - k);
        for (unsigned long i = 0; i < steps; ++i) {
          y = step(y);
          Int diff = abs(x - y);
          q = q * diff % n;
        }
        budget = budget > 2 * steps ? budget - 2 * steps : 0;
        g = gcd(q, n);
        k += kBatch;
      } while (k < r && g == 1 && budget > 0);
      r *= 2;
    } while (g == 1 && budget > 0);
    if (g == 1) return 0;
    if (g == n) {
      // Batch overshot; replay one step at a time from the saved point.
      do {
        ys = step(ys);
        g = gcd(Int(abs(x - ys)), n);
        if (budget > 0) --budget;
      } while (g == 1 && budget > 0);
    }
    if (g != n && g != 1) return g;
  }
  return 0;
}

void split(const Int& n, unsigned long& budget, std::map<Int, unsigned long>& found,
           std::vector<Int>& residual) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++found[n];
    return;
  }
  const Int d = brent_rho(n, budget);
  if (d == 0) {
    residual.push_back(n);
    return;
  }
  split(d, budget, found, residual);
  split(Int(n / d), budget, found, residual);
}

}  // namespace

Int parse_int(const std::string& text) {
  Int z;
  std::string s = text;
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (s.empty() || z.set_str(s, 10) != 0) {
    throw ValidationError("not an integer: '" + text + "'");
  }
  return z;
}

Int pow(const Int& base, unsigned long exponent) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Int r = 1;
  for (unsigned long i = 1; i <= k; ++i) {
    r *= n - k + i;
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), i);
  }
  return r;
}

unsigned long valuation(const Int& l, const Int& z) {
  if (z == 0) throw DomainError("valuation of zero is undefined");
  if (!is_prime(l)) throw DomainError("valuation base " + to_string(l) + " is not prime");
  Int rest = z;
  unsigned long m = 0;
  while (mpz_divisible_p(rest.get_mpz_t(), l.get_mpz_t())) {
    mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), l.get_mpz_t());
    ++m;
  }
  return m;
}

bool is_prime(const Int& n_in) {
  const Int n = abs(n_in);
  if (n < 2) return false;
  static constexpr std::array<unsigned long, 25> kWitnesses = {
      2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
  for (unsigned long p : kWitnesses) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  const Int n_minus_1 = n - 1;
  Int d = n_minus_1;
  const unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  // The first twelve primes are a deterministic witness set below 2^64.
  const bool below_2_64 = mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
  const std::size_t rounds = below_2_64 ? 12 : kWitnesses.size();
  for (std::size_t i = 0; i < rounds; ++i) {
    if (!miller_rabin_round(n, n_minus_1, d, s, kWitnesses[i])) return false;
  }
  return true;
}

Int Factorization::value() const {
  Int v = cofactor;
  for (const auto& [p, e] : factors) v *= pow(p, e);
  return v;
}

std::string Factorization::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, e] : factors) {
    if (!first) os << '*';
    first = false;
    os << wcav::to_string(p);
    if (e > 1) os << '^' << e;
  }
  if (!complete) {
    if (!first) os << '*';
    os << '[' << wcav::to_string(cofactor) << ']';
    first = false;
  }
  if (first) os << '1';
  return os.str();
}

FactorOptions FactorOptions::from_env() {
  FactorOptions o;
  if (const char* env = std::getenv("WCAV_RHO_BUDGET"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != nullptr && *end == '\0') o.rho_budget = v;
  }
  return o;
}

Factorization factorize(const Int& n, const FactorOptions& options) {
  if (n == 0) throw DomainError("cannot factor zero");
  Int rest = abs(n);
  std::map<Int, unsigned long> found;
  for (unsigned long p : small_primes()) {
    if (p > options.trial_bound) break;
    if (Int(p) * p > rest) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      unsigned long e = 0;
      do {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        ++e;
      } while (mpz_divisible_ui_p(rest.get_mpz_t(), p));
      found[Int(p)] = e;
    }
  }

  std::vector<Int> residual;
  unsigned long budget = options.rho_budget;
  split(rest, budget, found, residual);

  Factorization f;
  for (auto& [p, e] : found) f.factors.push_back({p, e});
  f.complete = residual.empty();
  for (const auto& r : residual) f.cofactor *= r;
  return f;
}

std::optional<Int> radical(const Factorization& f) {
  if (!f.complete) return std::nullopt;
  Int r = 1;
  for (const auto& pe : f.factors) r *= pe.prime;
  return r;
}

std::optional<Int> hat(const Factorization& f) {
  if (!f.complete) return std::nullopt;
  Int h = 1;
  for (const auto& [p, e] : f.factors) h *= pow(p, e - 1);
  return h;
}

std::optional<Int> radical(const Int& n, const FactorOptions& options) {
  if (n < 1) throw DomainError("radical requires a positive integer");
  return radical(factorize(n, options));
}

std::optional<Int> hat(const Int& n, const FactorOptions& options) {
  if (n < 1) throw DomainError("hat requires a positive integer");
  return hat(factorize(n, options));
}

Int mult_order(const Int& z, const Int& l, const FactorOptions& options) {
  if (!is_prime(l)) throw DomainError("modulus " + to_string(l) + " is not prime");
  Int base = z % l;
  if (base < 0) base += l;
  if (base == 0) throw DomainError(to_string(l) + " divides " + to_string(z));
  const Factorization group = factorize(Int(l - 1), options);
  if (!group.complete) throw DomainError("could not factor l - 1 for l = " + to_string(l));
  Int order = l - 1;
  Int check;
  for (const auto& [r, e] : group.factors) {
    for (unsigned long i = 0; i < e; ++i) {
      const Int candidate = order / r;
      mpz_powm(check.get_mpz_t(), base.get_mpz_t(), candidate.get_mpz_t(), l.get_mpz_t());
      if (check != 1) break;
      order = candidate;
    }
  }
  return order;
}

std::pair<Int, unsigned long> prime_power_decompose(const Int& q) {
  if (q < 2) throw ValidationError("q = " + to_string(q) + " is not a prime power (q < 2)");
  for (unsigned long p : small_primes()) {
    if (Int(p) * p > q) break;
    if (mpz_divisible_ui_p(q.get_mpz_t(), p)) {
      Int rest = q;
      unsigned long r = 0;
      while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        ++r;
      }
      if (rest != 1) throw ValidationError("q = " + to_string(q) + " is not a prime power");
      return {Int(p), r};
    }
  }
  // No small factor: q is p^r with p > 10^6, so r is small.
  for (unsigned long r = mpz_sizeinbase(q.get_mpz_t(), 2); r >= 1; --r) {
    Int root;
    if (mpz_root(root.get_mpz_t(), q.get_mpz_t(), r) != 0 && is_prime(root)) return {root, r};
  }
  throw ValidationError("q = " + to_string(q) + " is not a prime power");
}

std::vector<unsigned long> primes_below(unsigned long bound) {
  std::vector<unsigned long> out;
  if (bound < 3) return out;
  std::vector<bool> composite(bound, false);
  for (unsigned long i = 2; i < bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (unsigned long j = i * i; j < bound; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace wcav
