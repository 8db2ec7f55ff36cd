#include "coreforms/three_squares.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>

#include "coreforms/sc7.hpp"

namespace coreforms::three_squares {

long long signed_permutation_orbit_size(const Triple& t) {
  long long x = std::abs(t.x), y = std::abs(t.y), z = std::abs(t.z);
  long long v[3] = {x, y, z};
  std::sort(v, v + 3);
  long long perms;
  if (v[0] == v[1] && v[1] == v[2])
    perms = 1;
  else if (v[0] == v[1] || v[1] == v[2])
    perms = 3;
  else
    perms = 6;
  long long signs = 1;
  for (long long c : v)
    if (c != 0) signs *= 2;
  return perms * signs;
}

long long r3(long long m) {
  if (m < 0) return 0;
  if (m == 0) return 1;
  long long total = 0;
  for (long long x = 0; x * x * 3 <= m; ++x)
    for (long long y = x; x * x + 2 * y * y <= m; ++y) {
      long long rem = m - x * x - y * y;
      long long z;
      if (!is_square_ll(rem, &z)) continue;
      if (z < y) continue;
      total += signed_permutation_orbit_size({x, y, z});
    }
  return total;
}

long long r3(const Rat& m) {
  if (!rat_is_integer(m)) return 0;
  return r3(static_cast<long long>(m.get_num().get_si()));
}

namespace {

// r2[k] = #{(x,y) in Z^2 : x^2 + y^2 = k}, then convolve with squares.
std::vector<int64_t> r2_table(long long max_m) {
  std::vector<int64_t> r2(static_cast<size_t>(max_m) + 1, 0);
  for (long long x = 0; x * x <= max_m; ++x)
    for (long long y = x; x * x + y * y <= max_m; ++y) {
      long long w = (x == y) ? 1 : 2;
      if (x != 0) w *= 2;
      if (y != 0) w *= 2;
      r2[static_cast<size_t>(x * x + y * y)] += w;
    }
  return r2;
}

}  // namespace

R3Table R3Table::build_serial(long long max_m) {
  R3Table t;
  t.max_m = max_m;
  t.counts.assign(static_cast<size_t>(max_m) + 1, 0);
  auto r2 = r2_table(max_m);
  for (long long m = 0; m <= max_m; ++m) {
    int64_t total = 0;
    for (long long z = 0; z * z <= m; ++z)
      total += (z == 0 ? 1 : 2) * r2[static_cast<size_t>(m - z * z)];
    t.counts[static_cast<size_t>(m)] = total;
  }
  return t;
}

R3Table R3Table::build_parallel(long long max_m) {
  R3Table t;
  t.max_m = max_m;
  t.counts.assign(static_cast<size_t>(max_m) + 1, 0);
  auto r2 = r2_table(max_m);
#pragma omp parallel for schedule(static)
  for (long long m = 0; m <= max_m; ++m) {
    int64_t total = 0;
    for (long long z = 0; z * z <= m; ++z)
      total += (z == 0 ? 1 : 2) * r2[static_cast<size_t>(m - z * z)];
    t.counts[static_cast<size_t>(m)] = total;
  }
  return t;
}

int64_t R3Table::at(long long m) const {
  if (m < 0) return 0;
  if (m > max_m) throw std::out_of_range("R3Table: m beyond table bound");
  return counts[static_cast<size_t>(m)];
}

long long gauss_r3(long long m) {
  if (m <= 0) return m == 0 ? 1 : 0;
  long long m4 = m % 4;
  if (m4 == 1 || m4 == 2) return class_numbers::twelve_hurwitz(4 * m);
  if (m % 8 == 3) return 2 * class_numbers::twelve_hurwitz(m);
  if (m4 == 0) return gauss_r3(m / 4);
  return 0;  // m = 7 (mod 8)
}

long long gauss_r3(long long m, const class_numbers::HurwitzTable& table) {
  if (m <= 0) return m == 0 ? 1 : 0;
  long long m4 = m % 4;
  if (m4 == 1 || m4 == 2) return table.twelve(4 * m);
  if (m % 8 == 3) return 2 * table.twelve(m);
  if (m4 == 0) return gauss_r3(m / 4, table);
  return 0;
}

namespace {

long long sc7_from_counts(long long big, long long small) {
  long long diff = big - small;
  if (diff % 48 != 0 || diff < 0)
    throw std::logic_error("sc7_via_r3: non-integral or negative result");
  return diff / 48;
}

}  // namespace

long long sc7_via_r3(long long n) {
  long long small = ((n + 2) % 7 == 0) ? r3((n + 2) / 7) : 0;
  return sc7_from_counts(r3(7 * n + 14), small);
}

long long sc7_via_r3(long long n, const R3Table& table) {
  long long small = ((n + 2) % 7 == 0) ? table.at((n + 2) / 7) : 0;
  return sc7_from_counts(table.at(7 * n + 14), small);
}

long long sc7_via_r3_branch2(long long n) {
  if ((n + 2) % 7 != 0)
    throw std::invalid_argument("sc7_via_r3_branch2: requires n = -2 (mod 7)");
  auto dn = sc7::dn_nu(n);
  if (dn.D % 49 != 0)
    throw std::logic_error("sc7_via_r3_branch2: 49 does not divide D_n");
  long long factor = 7 + kronecker(dn.D / 49, 7);
  long long mid = r3((n + 2) / 7);
  long long low = ((n + 2) % 343 == 0) ? r3((n + 2) / 343) : 0;
  long long num = factor * mid - 7 * low;
  if (num % 48 != 0 || num < 0)
    throw std::logic_error("sc7_via_r3_branch2: non-integral result");
  return num / 48;
}

std::vector<KClass> k_classes(long long n) {
  std::vector<KClass> out;
  if (n < 0) return out;
  long long M = 7 * n + 14;
  for (long long x = 1; 3 * x * x <= M; ++x) {
    if (x % 7 == 0) continue;
    for (long long y = x; x * x + 2 * y * y <= M; ++y) {
      if (y % 7 == 0) continue;
      long long rem = M - x * x - y * y;
      long long z;
      if (!is_square_ll(rem, &z)) continue;
      if (z < y || z % 7 == 0) continue;
      Triple rep{x, y, z};
      out.push_back({rep, signed_permutation_orbit_size(rep)});
    }
  }
  return out;
}

bool hecke_r3_recursion_check(long long m) {
  if (m % 7 != 0)
    throw std::invalid_argument("hecke_r3_recursion_check: requires 7 | m");
  long long lhs = r3(7 * m);
  long long m7 = m / 7;
  long long rhs = 8 * r3(m7) - kronecker(-m7, 7) * r3(m7) -
                  7 * (m % 343 == 0 ? r3(m / 343) : 0);
  return lhs == rhs;
}

}  // namespace coreforms::three_squares
