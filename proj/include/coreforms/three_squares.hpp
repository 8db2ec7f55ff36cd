// Representation numbers r3(m), the Gauss r3 <-> class number formula, the
// signed-permutation classes K(7n+14), and the sc7 expressions built from
// them.
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "coreforms/arith.hpp"
#include "coreforms/class_numbers.hpp"

namespace coreforms::three_squares {

struct Triple {
  long long x = 0, y = 0, z = 0;
  long long norm() const { return x * x + y * y + z * z; }
  bool operator==(const Triple& o) const = default;
};

// Exact count of integer triples with x^2 + y^2 + z^2 = m, by enumeration
// over 0 <= x <= y <= z with signed-permutation orbit weights. Zero for
// negative or (via the Rat overload) non-integral m.
long long r3(long long m);
long long r3(const Rat& m);

// Sieve of r3(0..max_m); build once then read-only.
struct R3Table {
  long long max_m = -1;
  std::vector<int64_t> counts;

  static R3Table build_serial(long long max_m);
  static R3Table build_parallel(long long max_m);
  static R3Table build(long long max_m) { return build_parallel(max_m); }

  int64_t at(long long m) const;
};

// r3 via Hurwitz class numbers: 12H(4m) if m = 1,2 (mod 4), 24H(m) if
// m = 3 (mod 8), r3(m/4) if 4 | m, 0 if m = 7 (mod 8).
long long gauss_r3(long long m);
long long gauss_r3(long long m, const class_numbers::HurwitzTable& table);

// sc7(n) = (r3(7n+14) - r3((n+2)/7)) / 48. Throws std::logic_error if the
// division were inexact (an implementation bug, not a caller error).
long long sc7_via_r3(long long n);
long long sc7_via_r3(long long n, const R3Table& table);

// The n = -2 (mod 7) variant:
// (1/48) ((7 + ((D_n/49)/7)) r3((n+2)/7) - 7 r3((n+2)/343)).
long long sc7_via_r3_branch2(long long n);

// Signed-permutation class of a triple; representative sorted by absolute
// value with non-negative entries.
struct KClass {
  Triple rep;              // 0 <= x <= y <= z
  long long orbit_size;    // number of signed permutations of rep
};

long long signed_permutation_orbit_size(const Triple& t);

// All classes of triples of norm 7n+14 with no coordinate divisible by 7
// (in particular no zero coordinate).
std::vector<KClass> k_classes(long long n);

// Verifies r3(7m) = 8 r3(m/7) - ((-(m/7))/7) r3(m/7) - 7 r3(m/343) by
// enumeration; requires 7 | m.
bool hecke_r3_recursion_check(long long m);

}  // namespace coreforms::three_squares
