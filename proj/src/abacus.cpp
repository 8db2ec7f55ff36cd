#include "coreforms/abacus.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "coreforms/arith.hpp"

namespace coreforms::abacus {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

long long mod_nonneg(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

long long Abacus::total_beads() const {
  return std::accumulate(counts.begin(), counts.end(), 0LL);
}

long long ResidueList::sum() const {
  return std::accumulate(entries.begin(), entries.end(), 0LL);
}

long long ResidueList::size() const {
  long long norm2 = 0, dot = 0;
  for (long long l = 0; l < t; ++l) {
    long long v = entries[static_cast<size_t>(l)];
    norm2 += v * v;
    dot += l * v;
  }
  return t * norm2 / 2 + dot;  // t*norm2 is even whenever sum(N) = 0
}

bool ResidueList::antisymmetric() const {
  for (long long l = 0; l < t; ++l)
    if (entries[static_cast<size_t>(l)] !=
        -entries[static_cast<size_t>(t - 1 - l)])
      return false;
  return true;
}

std::vector<long long> structure_numbers(const Partition& p) {
  const auto& a = p.parts();
  long long s = p.num_parts();
  std::vector<long long> b(a.size());
  for (long long j = 1; j <= s; ++j)
    b[static_cast<size_t>(j - 1)] = a[static_cast<size_t>(j - 1)] - j + s;
  return b;
}

std::vector<long long> bead_positions(const Partition& p, long long t) {
  if (t < 2) throw std::invalid_argument("bead_positions: t must be >= 2");
  return structure_numbers(p);
}

bool is_t_core_abacus(const Partition& p, long long t) {
  if (t < 2) throw std::invalid_argument("is_t_core_abacus: t must be >= 2");
  std::vector<long long> beads = structure_numbers(p);
  std::sort(beads.begin(), beads.end());
  for (long long b : beads) {
    if (b < t) continue;
    if (!std::binary_search(beads.begin(), beads.end(), b - t)) return false;
  }
  return true;
}

Abacus abacus_from_partition(const Partition& p, long long t) {
  if (t < 2) throw std::invalid_argument("abacus_from_partition: t must be >= 2");
  Abacus a;
  a.t = t;
  a.counts.assign(static_cast<size_t>(t), 0);
  for (long long b : structure_numbers(p))
    ++a.counts[static_cast<size_t>(b % t)];
  return canonicalize(std::move(a));
}

Abacus rotate(const Abacus& a) {
  Abacus out;
  out.t = a.t;
  out.counts.resize(a.counts.size());
  out.counts[0] = a.counts.back() + 1;
  std::copy(a.counts.begin(), a.counts.end() - 1, out.counts.begin() + 1);
  return out;
}

Abacus rotate_inverse(const Abacus& a) {
  if (a.counts.empty() || a.counts[0] < 1)
    throw std::invalid_argument("rotate_inverse: first column has no bead");
  Abacus out;
  out.t = a.t;
  out.counts.assign(a.counts.begin() + 1, a.counts.end());
  out.counts.push_back(a.counts[0] - 1);
  return out;
}

Abacus canonicalize(Abacus a) {
  while (!a.counts.empty() && a.counts[0] > 0) a = rotate_inverse(a);
  return a;
}

Partition partition_from_abacus(const Abacus& a) {
  std::vector<long long> beads;
  for (long long c = 0; c < a.t; ++c)
    for (long long i = 0; i < a.counts[static_cast<size_t>(c)]; ++i)
      beads.push_back(i * a.t + c);
  std::sort(beads.rbegin(), beads.rend());
  long long s = static_cast<long long>(beads.size());
  std::vector<long long> parts;
  for (long long j = 1; j <= s; ++j) {
    long long lam = beads[static_cast<size_t>(j - 1)] + j - s;
    if (lam > 0) parts.push_back(lam);
  }
  return Partition{std::move(parts)};
}

ResidueList list_from_partition(const Partition& p, long long t) {
  if (t < 2) throw std::invalid_argument("list_from_partition: t must be >= 2");
  if (!partitions::is_t_core(p, t))
    throw std::invalid_argument("list_from_partition: partition is not a t-core");
  long long s = p.num_parts();
  ResidueList N;
  N.t = t;
  N.entries.assign(static_cast<size_t>(t), 0);
  // Baseline from the exposed column-0 cells of the empty rows j > s: the
  // first empty row with j = -l (mod t) realises the highest region for
  // label l among them.
  for (long long l = 0; l < t; ++l) {
    long long j0 = s + 1 + mod_nonneg(-l - (s + 1), t);
    N.entries[static_cast<size_t>(l)] = floor_div(-j0, t) + 1;
  }
  const auto& parts = p.parts();
  for (long long j = 1; j <= s; ++j) {
    long long e = parts[static_cast<size_t>(j - 1)] - j;  // exposed cell k - j
    long long label = mod_nonneg(e, t);
    long long region = floor_div(e, t) + 1;
    auto& entry = N.entries[static_cast<size_t>(label)];
    entry = std::max(entry, region);
  }
  return N;
}

Partition partition_from_list(const ResidueList& N) {
  if (N.sum() != 0)
    throw std::invalid_argument("partition_from_list: entries must sum to 0");
  long long t = N.t;
  long long shift = 1;
  for (long long v : N.entries) shift = std::max(shift, 1 - v);
  // Column l holds n_l + shift beads; this abacus corresponds to the
  // original partition padded with t*shift zero parts.
  Abacus a;
  a.t = t;
  a.counts.resize(static_cast<size_t>(t));
  for (long long l = 0; l < t; ++l)
    a.counts[static_cast<size_t>(l)] = N.entries[static_cast<size_t>(l)] + shift;
  return partition_from_abacus(canonicalize(std::move(a)));
}

// ---------------------------------------------------------------------------
// Lattice counts. Completing the square in the size form turns list counting
// into counting lattice points with fixed residues on a sphere (plus a fixed
// coordinate sum in the full-count case):
//
//   c_t(n):  x_j = t n_j + j,  sum x_j = t(t-1)/2,
//            sum x_j^2 = 2 t n + (t-1)t(2t-1)/6
//   sc_t(n), t odd:  y_l = t n_l + (2l-t+1)/2  for the floor(t/2) free
//            coordinates; sum y_l^2 = t n + sum of ((t-1-2l)/2)^2
//   sc_t(n), t even: y_l = 2t n_l + (2l-t+1);  sum y_l^2 = 4 t n + sum odd^2
// ---------------------------------------------------------------------------

namespace {

// Counts solutions (u, v) of u + v = S, u^2 + v^2 = Q with u = ru, v = rv
// (mod m).
long long count_last_two(long long S, long long Q, long long m, long long ru,
                         long long rv) {
  long long disc = 2 * Q - S * S;
  long long d;
  if (disc < 0 || !is_square_ll(disc, &d)) return 0;
  long long count = 0;
  for (long long dd : {d, -d}) {
    if ((S + dd) % 2 != 0) continue;
    long long u = (S + dd) / 2, v = (S - dd) / 2;
    if (mod_nonneg(u, m) == ru && mod_nonneg(v, m) == rv) ++count;
    if (d == 0) break;
  }
  return count;
}

// Counts x with x = r (mod m) and x^2 = Q.
long long count_last_one(long long Q, long long m, long long r) {
  long long d;
  if (Q < 0 || !is_square_ll(Q, &d)) return 0;
  long long count = 0;
  for (long long dd : {d, -d}) {
    if (mod_nonneg(dd, m) == r) ++count;
    if (d == 0) break;
  }
  return count;
}

// Recursive sphere-with-sum enumeration over residue classes res[j] mod m.
long long count_sum_sphere(const std::vector<long long>& res, long long m,
                           size_t j, long long S, long long Q) {
  size_t k = res.size() - j;  // coordinates left
  if (k == 2) return count_last_two(S, Q, m, res[j], res[j + 1]);
  if (k == 1) return (S * S == Q && mod_nonneg(S, m) == res[j]) ? 1 : 0;
  long long bound = isqrt_ll(Q);
  long long x0 = res[j] - m * ((bound + res[j]) / m + 2);
  long long count = 0;
  for (long long x = x0; x <= bound; x += m) {
    if (x < -bound) continue;
    long long q2 = Q - x * x;
    if (q2 < 0) continue;
    long long s2 = S - x;
    // Cauchy-Schwarz prune: (k-1) coordinates with squares summing to q2
    // cannot reach sum s2 if s2^2 > (k-1) q2.
    if (s2 * s2 > static_cast<long long>(k - 1) * q2) continue;
    count += count_sum_sphere(res, m, j + 1, s2, q2);
  }
  return count;
}

// Recursive sphere enumeration (no sum constraint).
long long count_sphere(const std::vector<long long>& res, long long m, size_t j,
                       long long Q) {
  size_t k = res.size() - j;
  if (k == 0) return Q == 0 ? 1 : 0;
  if (k == 1) return count_last_one(Q, m, res[j]);
  long long bound = isqrt_ll(Q);
  long long x0 = res[j] - m * ((bound + res[j]) / m + 2);
  long long count = 0;
  for (long long x = x0; x <= bound; x += m) {
    if (x < -bound) continue;
    long long q2 = Q - x * x;
    if (q2 < 0) continue;
    count += count_sphere(res, m, j + 1, q2);
  }
  return count;
}

}  // namespace

long long count_t_cores_lattice(long long n, long long t) {
  if (t < 1) throw std::invalid_argument("count_t_cores_lattice: t >= 1");
  if (n < 0) return 0;
  if (t == 1) return n == 0 ? 1 : 0;
  std::vector<long long> res(static_cast<size_t>(t));
  for (long long j = 0; j < t; ++j) res[static_cast<size_t>(j)] = j;
  long long S = t * (t - 1) / 2;
  long long Q = 2 * t * n + (t - 1) * t * (2 * t - 1) / 6;
  return count_sum_sphere(res, t, 0, S, Q);
}

long long count_sc_t_cores_lattice(long long n, long long t) {
  if (t < 1) throw std::invalid_argument("count_sc_t_cores_lattice: t >= 1");
  if (n < 0) return 0;
  if (t == 1) return n == 0 ? 1 : 0;
  long long u = t / 2;
  std::vector<long long> res(static_cast<size_t>(u));
  long long Q, m;
  if (t % 2 == 1) {
    m = t;
    Q = t * n;
    for (long long l = 0; l < u; ++l) {
      long long c = (2 * l - t + 1) / 2;  // integral, t odd
      res[static_cast<size_t>(l)] = mod_nonneg(c, m);
      Q += c * c;
    }
  } else {
    m = 2 * t;
    Q = 4 * t * n;
    for (long long l = 0; l < u; ++l) {
      long long c = 2 * l - t + 1;
      res[static_cast<size_t>(l)] = mod_nonneg(c, m);
      Q += c * c;
    }
  }
  return count_sphere(res, m, 0, Q);
}

// ---------------------------------------------------------------------------
// Self-conjugate 7-core families
// ---------------------------------------------------------------------------

namespace {

struct FamilySpec {
  // abacus columns as affine forms alpha + ca*a + cb*b + cr*r
  struct Col {
    long long c0, ca, cb, cr;
  };
  std::array<Col, 7> cols;
  long long amax_c0, amax_cr;  // amax = amax_c0 + amax_cr * r
  long long bmax_c0, bmax_cr;
  long long x_c0;  // triple = (7r + x_c0, 7r + y_c0 - 7a, 7r + z_c0 - 7b)
  long long y_c0;
  long long z_c0;
};

const FamilySpec& spec_for(ScFamilyType type) {
  static const std::array<FamilySpec, 6> specs = {{
      // I: (0, a, b, r, 2r-b, 2r-a, 2r)
      {{{{0, 0, 0, 0},
         {0, 1, 0, 0},
         {0, 0, 1, 0},
         {0, 0, 0, 1},
         {0, 0, -1, 2},
         {0, -1, 0, 2},
         {0, 0, 0, 2}}},
       0, 2, 0, 2, 3, 2, 1},
      // II: (0, 2r+1, a, b, r, 2r-b, 2r-a)
      {{{{0, 0, 0, 0},
         {1, 0, 0, 2},
         {0, 1, 0, 0},
         {0, 0, 1, 0},
         {0, 0, 0, 1},
         {0, 0, -1, 2},
         {0, -1, 0, 2}}},
       0, 2, 0, 2, 4, 2, 1},
      // III: (0, a, 2r+1-a, 2r+1, b, r, 2r-b)
      {{{{0, 0, 0, 0},
         {0, 1, 0, 0},
         {1, -1, 0, 2},
         {1, 0, 0, 2},
         {0, 0, 1, 0},
         {0, 0, 0, 1},
         {0, 0, -1, 2}}},
       1, 2, 0, 2, 5, 4, 1},
      // IV: (0, a, b, 2r+1-b, 2r+1-a, 2r+1, r)
      {{{{0, 0, 0, 0},
         {0, 1, 0, 0},
         {0, 0, 1, 0},
         {1, 0, -1, 2},
         {1, -1, 0, 2},
         {1, 0, 0, 2},
         {0, 0, 0, 1}}},
       1, 2, 1, 2, 6, 5, 4},
      // V: (0, r+1, 2r+2, a, b, 2r+1-b, 2r+1-a)
      {{{{0, 0, 0, 0},
         {1, 0, 0, 1},
         {2, 0, 0, 2},
         {0, 1, 0, 0},
         {0, 0, 1, 0},
         {1, 0, -1, 2},
         {1, -1, 0, 2}}},
       1, 2, 1, 2, 8, 5, 4},
      // VI: (0, a, r+1, 2r+2-a, 2r+2, b, 2r+1-b)
      {{{{0, 0, 0, 0},
         {0, 1, 0, 0},
         {1, 0, 0, 1},
         {2, -1, 0, 2},
         {2, 0, 0, 2},
         {0, 0, 1, 0},
         {1, 0, -1, 2}}},
       2, 2, 1, 2, 9, 8, 4},
  }};
  return specs[static_cast<size_t>(type)];
}

}  // namespace

Abacus family_abacus(const ScAbacusFamily& fam) {
  const FamilySpec& sp = spec_for(fam.type);
  Abacus a;
  a.t = 7;
  a.counts.resize(7);
  for (size_t i = 0; i < 7; ++i) {
    const auto& c = sp.cols[i];
    a.counts[i] = c.c0 + c.ca * fam.a + c.cb * fam.b + c.cr * fam.r;
  }
  return a;
}

bool family_params_valid(const ScAbacusFamily& fam) {
  if (fam.a < 0 || fam.b < 0 || fam.r < 0) return false;
  const FamilySpec& sp = spec_for(fam.type);
  return fam.a <= sp.amax_c0 + sp.amax_cr * fam.r &&
         fam.b <= sp.bmax_c0 + sp.bmax_cr * fam.r;
}

Partition family_partition(const ScAbacusFamily& fam) {
  if (!family_params_valid(fam))
    throw std::invalid_argument("family_partition: parameters out of range");
  return partition_from_abacus(family_abacus(fam));
}

std::array<long long, 3> family_to_triple(const ScAbacusFamily& fam) {
  if (!family_params_valid(fam))
    throw std::invalid_argument("family_to_triple: parameters out of range");
  const FamilySpec& sp = spec_for(fam.type);
  return {7 * fam.r + sp.x_c0, 7 * fam.r + sp.y_c0 - 7 * fam.a,
          7 * fam.r + sp.z_c0 - 7 * fam.b};
}

std::vector<ScAbacusFamily> sc7_families(long long n) {
  std::vector<ScAbacusFamily> out;
  if (n < 0) return out;
  long long M = 7 * n + 14;
  for (int ti = 0; ti < 6; ++ti) {
    auto type = static_cast<ScFamilyType>(ti);
    const FamilySpec& sp = spec_for(type);
    for (long long r = 0;; ++r) {
      long long x = 7 * r + sp.x_c0;
      if (x * x > M) break;
      long long amax = sp.amax_c0 + sp.amax_cr * r;
      long long bmax = sp.bmax_c0 + sp.bmax_cr * r;
      for (long long a = 0; a <= amax; ++a) {
        long long y = 7 * r + sp.y_c0 - 7 * a;
        long long rem = M - x * x - y * y;
        if (rem < 0) continue;
        long long z;
        if (!is_square_ll(rem, &z)) continue;
        // solve 7r + z_c0 - 7b = +-z for integer b in range
        for (long long zz : {z, -z}) {
          long long num = 7 * r + sp.z_c0 - zz;
          if (num % 7 != 0) continue;
          long long b = num / 7;
          if (b >= 0 && b <= bmax) out.push_back({type, a, b, r});
          if (z == 0) break;
        }
      }
    }
  }
  return out;
}

std::array<long long, 3> sc7_triple_from_list(const ResidueList& N) {
  if (N.t != 7)
    throw std::invalid_argument("sc7_triple_from_list: t must be 7");
  if (!N.antisymmetric())
    throw std::invalid_argument("sc7_triple_from_list: list not antisymmetric");
  return {7 * N.entries[0] - 3, 7 * N.entries[1] - 2, 7 * N.entries[2] - 1};
}

}  // namespace coreforms::abacus
