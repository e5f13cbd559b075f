#pragma once

// Brute-force group structures of short Weierstrass curves y^2 = x^3 + Ax + B
// over small prime fields, bucketed by isogeny class (trace of Frobenius).

#include <cstdint>
#include <vector>

#include "wcav/cyclicity.hpp"

namespace wcav::ec {

/// E(F_p) ≅ Z/d1 × Z/d2 with d1 | d2.
struct CurveRecord {
  std::uint32_t p = 0;
  std::uint32_t A = 0;
  std::uint32_t B = 0;
  std::uint64_t point_count = 0;
  std::uint64_t d1 = 0;
  std::uint64_t d2 = 0;

  bool cyclic() const { return d1 == 1; }
};

struct OracleOptions {
  std::uint32_t max_p = 200;
  unsigned threads = 0;     // 0: hardware concurrency
  std::uint64_t seed = 0;   // point visiting order for the exponent search
};

/// Group structure by exhaustive point enumeration. Requires p >= 5 prime,
/// 4A^3 + 27B^2 != 0 mod p.
CurveRecord group_structure(std::uint32_t p, std::uint32_t A, std::uint32_t B,
                            std::uint64_t seed = 0);

/// All curves over F_p with f(t) = t^2 + a t + p, i.e. N = p + 1 + a.
struct ClassBucket {
  std::uint32_t p = 0;
  std::int64_t a = 0;
  std::vector<CurveRecord> curves;
  bool all_cyclic = true;
  Verdict criterion_cyclic = Verdict::unknown;

  bool agrees() const;
};

struct Census {
  std::uint32_t p = 0;
  std::vector<ClassBucket> buckets;  // ascending a
  std::uint64_t curves = 0;
  std::uint64_t singular = 0;

  bool all_agree() const;
};

Census class_census(std::uint32_t p, const OracleOptions& options = {});

}  // namespace wcav::ec
