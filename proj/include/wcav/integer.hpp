#pragma once

// Exact integer utilities on top of GMP: valuations, primality, factorization,
// radicals and multiplicative orders.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wcav {

using Int = mpz_class;

/// Raised when an argument lies outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when user-supplied parameters do not describe a valid object.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised on an internal inconsistency (a bug, never bad input).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline std::string to_string(const Int& z) { return z.get_str(10); }
Int parse_int(const std::string& text);

Int pow(const Int& base, unsigned long exponent);
Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

/// Exact binomial coefficient C(n, k); zero when k > n.
Int binomial(unsigned long n, unsigned long k);

/// Largest m with l^m | z. Requires l prime and z != 0.
unsigned long valuation(const Int& l, const Int& z);

/// Deterministic for |n| < 2^64 (witnesses 2..37); above that, 25 fixed
/// prime witnesses 2..97.
bool is_prime(const Int& n);

struct PrimePower {
  Int prime;
  unsigned long exponent = 0;
  bool operator==(const PrimePower&) const = default;
};

struct Factorization {
  std::vector<PrimePower> factors;  // strictly increasing primes
  bool complete = true;
  Int cofactor = 1;  // unfactored composite part when !complete

  /// Product of the listed prime powers (times the cofactor).
  Int value() const;
  std::string to_string() const;  // "3*5^2", with "*[c]" for a residual
};

struct FactorOptions {
  unsigned long trial_bound = 1'000'000;
  unsigned long rho_budget = 2'000'000;  // total Pollard-Brent iterations

  /// Reads WCAV_RHO_BUDGET when set.
  static FactorOptions from_env();
};

/// Factors |n|. Trial division up to options.trial_bound, then Pollard rho
/// (Brent). Cofactors that exhaust the budget are left as complete = false.
Factorization factorize(const Int& n, const FactorOptions& options = {});

/// Product of distinct primes dividing n; nullopt when factoring is incomplete.
std::optional<Int> radical(const Int& n, const FactorOptions& options = {});
/// n / radical(n); nullopt when factoring is incomplete.
std::optional<Int> hat(const Int& n, const FactorOptions& options = {});
std::optional<Int> radical(const Factorization& f);
std::optional<Int> hat(const Factorization& f);

/// Order of z in (Z/lZ)^*. Requires l prime, l not dividing z.
Int mult_order(const Int& z, const Int& l, const FactorOptions& options = {});

/// q = p^r with p prime; throws ValidationError otherwise.
std::pair<Int, unsigned long> prime_power_decompose(const Int& q);

/// Primes below bound (sieve of Eratosthenes).
std::vector<unsigned long> primes_below(unsigned long bound);

}  // namespace wcav
