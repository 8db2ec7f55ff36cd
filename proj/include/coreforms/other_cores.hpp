// Closed forms for t in {2,3,5} and sc9: indicator formulas, the twisted
// divisor sum c5(n) = sigma5(n+1), and the 27 sc9(n) formula with elliptic
// curve L-series coefficients obtained by point counting.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "coreforms/arith.hpp"

namespace coreforms::other_cores {

bool c2_closed(long long n);   // 1 iff n = j(j+1)/2
bool sc3_closed(long long n);  // 1 iff n = j(3j +- 2), i.e. 3n+1 a square

struct VanishingReport {
  bool pass = false;
  long long bound = 0;
  long long both_one_count = 0;  // n with sc3(n) = c2(n) = 1 (both shapes)
  std::string detail;
};
// Checks sc3(4n+3) = c2(3n+2) = 0 up to the bound and that every n that is
// simultaneously triangular and of the form j(3j +- 2) has sc3 = c2 = 1.
VanishingReport c2_sc3_vanishing_progressions(long long bound = 10000);

long long c5_closed(long long n);  // sigma5(n+1)

enum class CurveLabel { E36a, E54a, E108a };

struct EllipticCurve {
  CurveLabel label;
  long long a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;
  long long disc() const;
  long long c4_invariant() const;
};

EllipticCurve curve(CurveLabel label);

// a_p = p + 1 - #E(F_p) at good p; at bad p: 0 for additive reduction,
// +-1 for split/non-split multiplicative reduction, decided by whether the
// tangent cone at the singular point factors over F_p.
long long curve_ap(CurveLabel label, long long p);

// Multiplicative extension: Hecke recursion at good prime powers,
// a_{p^k} = a_p^k at bad primes.
long long curve_an(CurveLabel label, long long n);

// 27 sc9(n) evaluated literally by its three branches at index 3n+10,
// divided by 27; throws std::logic_error if the result is not a
// non-negative integer.
long long sc9_closed(long long n);

struct SigmaProbeWitness {
  long long ell = 0;    // auxiliary prime, (ell/5) = -1
  long long p = 0;      // prime completing 3n+10 = (3m+10) p ell
  long long n = 0;
  Rat ratio_measured = 0;   // sigma(3n+10) / sigma5(3n+10)
  Rat ratio_limit = 0;      // the p -> infinity value of the construction
};

struct SigmaProbeReport {
  bool conclusive = false;  // at least two distinct limit ratios exhibited
  long long modulus = 1, residue = 0, bound = 0;
  std::vector<SigmaProbeWitness> witnesses;
  std::string detail;
};

// Desk-scale instantiation of the non-constancy argument for sigma/sigma5
// along the progression n = m (mod M): for primes ell with (ell/5) = -1 not
// dividing (3m+10) M, construct n with 3n+10 = (3m+10) p ell and report the
// distinct limiting ratios realised.
SigmaProbeReport sigma5_nonconstancy_probe(long long M, long long m,
                                           long long bound = 10000);

// Lattice counts (c3(n), sc5(n)).
std::pair<long long, long long> c3_sc5_counts(long long n);

struct RatioSweepReport {
  bool pass = false;  // no progression carries a constant integer ratio
  long long max_modulus = 0, bound = 0;
  std::vector<std::string> survivors;
};
// For every progression with modulus <= max_modulus checks that the pairs
// (c3(n), sc5(n)) are not all proportional to a fixed ratio.
RatioSweepReport c3_sc5_ratio_sweep(long long max_modulus = 24,
                                    long long bound = 5000);

}  // namespace coreforms::other_cores
