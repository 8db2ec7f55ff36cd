// Hurwitz class numbers H(D) by reduced-form enumeration, p-primitive
// variants H_p(D), a sieve-built memo table with an optional on-disk cache,
// Dirichlet's class number formula, the H(D f^2) conductor identity, and
// the C_{r,Delta} twisted divisor sums.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coreforms/arith.hpp"

namespace coreforms::class_numbers {

// H(D): weighted count of SL2(Z)-classes of positive definite integral
// binary quadratic forms of discriminant -D. Forms proportional to
// x^2 + y^2 weigh 1/2, forms proportional to x^2 + xy + y^2 weigh 1/3,
// all others 1. Zero when D <= 0 or -D is not = 0,1 (mod 4).
// 12 H(D) is always an integer.
Rat hurwitz(long long D);
Rat hurwitz(const Rat& D);  // 0 for non-integral argument
long long twelve_hurwitz(long long D);

// Same weighted count restricted to p-primitive forms (p not dividing
// gcd(a,b,c)).
Rat hurwitz_p_primitive(long long p, long long D);
long long twelve_hurwitz_p_primitive(long long p, long long D);

// Memo table of 12 H(D) for 0 <= D <= max_d, built by a single sweep over
// all reduced forms. Build once (serial or OpenMP), then read-only; safe
// for concurrent readers afterwards.
struct HurwitzTable {
  long long max_d = -1;
  std::vector<int64_t> twelve_h;

  static HurwitzTable build_serial(long long max_d);
  static HurwitzTable build_parallel(long long max_d);
  static HurwitzTable build(long long max_d) { return build_parallel(max_d); }

  int64_t twelve(long long D) const;
  Rat h(long long D) const { return rat(twelve(D), 12); }
  Rat h(const Rat& D) const;
  // H_7(D) = H(D) - H(D/49); the identity is verified against restricted
  // enumeration in the test suite.
  Rat h7(long long D) const;

  // Flat binary cache: magic "HCACHE12", little-endian u64 max_d, then
  // little-endian i64 values 12H(0)..12H(max_d).
  void save(const std::string& path) const;
  static HurwitzTable load(const std::string& path);
};

// True iff d is a fundamental discriminant (d = 1 mod 4 squarefree, or
// d = 4m with m squarefree and m = 2,3 mod 4).
bool is_fundamental_disc(long long d);

// D = Delta * f^2 with Delta fundamental; requires D = 0,1 (mod 4), D != 0.
struct FundamentalSplit {
  long long delta = 0;
  long long conductor = 1;
};
FundamentalSplit fundamental_decompose(long long D);

// H(|D|) = -(1/|D|) sum_{m=1}^{|D|-1} (D/m) m for fundamental D < 0; the
// argument here is the positive index (so -D is the discriminant).
// Rejects non-fundamental input.
Rat dirichlet_class_number(long long D);

// H(D f^2) = H(D) sum_{d|f} mu(d) (-D/d) sigma(f/d); -D fundamental.
Rat cohen_lift(long long D, long long f);

struct CrDeltaResult {
  long long defining_sum = 0;
  long long closed_form = 0;  // 7^{r-1} (7 + (Delta/7))
  bool match = false;
};
// C_{r,Delta}: difference of the twisted divisor sums over d | 7^r and
// d | 7^{r-1}. Requires r >= 1.
CrDeltaResult c_r_delta(int r, long long delta);

}  // namespace coreforms::class_numbers
