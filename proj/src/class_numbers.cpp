#include "coreforms/class_numbers.hpp"

#include <omp.h>

#include <cstring>
#include <fstream>
#include <stdexcept>

namespace coreforms::class_numbers {

namespace {

// Weight of a reduced form in units of 1/12: [a,0,a] -> 6, [a,a,a] -> 4,
// boundary forms (b = 0, b = a or a = c) -> 12 once, interior forms -> 24
// covering both signs of b.
inline int weight12(long long a, long long b, long long c) {
  if (b == a && a == c) return 4;
  if (b == 0 && a == c) return 6;
  if (b == 0 || b == a || a == c) return 12;
  return 24;
}

inline bool valid_index(long long D) {
  return D > 0 && (D % 4 == 0 || D % 4 == 3);
}

}  // namespace

long long twelve_hurwitz(long long D) {
  if (!valid_index(D)) return 0;
  long long total = 0;
  long long amax = isqrt_ll(D / 3);
  for (long long a = 1; a <= amax; ++a) {
    for (long long b = D % 2; b <= a; b += 2) {
      long long num = b * b + D;
      if (num % (4 * a)) continue;
      long long c = num / (4 * a);
      if (c < a) continue;
      total += weight12(a, b, c);
    }
  }
  return total;
}

Rat hurwitz(long long D) { return rat(twelve_hurwitz(D), 12); }

Rat hurwitz(const Rat& D) {
  if (!rat_is_integer(D)) return Rat(0);
  return hurwitz(static_cast<long long>(D.get_num().get_si()));
}

long long twelve_hurwitz_p_primitive(long long p, long long D) {
  if (!valid_index(D)) return 0;
  long long total = 0;
  long long amax = isqrt_ll(D / 3);
  for (long long a = 1; a <= amax; ++a) {
    for (long long b = D % 2; b <= a; b += 2) {
      long long num = b * b + D;
      if (num % (4 * a)) continue;
      long long c = num / (4 * a);
      if (c < a) continue;
      if (a % p == 0 && b % p == 0 && c % p == 0) continue;
      total += weight12(a, b, c);
    }
  }
  return total;
}

Rat hurwitz_p_primitive(long long p, long long D) {
  return rat(twelve_hurwitz_p_primitive(p, D), 12);
}

HurwitzTable HurwitzTable::build_serial(long long max_d) {
  HurwitzTable t;
  t.max_d = max_d;
  t.twelve_h.assign(static_cast<size_t>(max_d) + 1, 0);
  long long amax = isqrt_ll(max_d / 3);
  for (long long a = 1; a <= amax; ++a)
    for (long long b = 0; b <= a; ++b)
      for (long long c = a;; ++c) {
        long long D = 4 * a * c - b * b;
        if (D > max_d) break;
        t.twelve_h[static_cast<size_t>(D)] += weight12(a, b, c);
      }
  return t;
}

HurwitzTable HurwitzTable::build_parallel(long long max_d) {
  HurwitzTable t;
  t.max_d = max_d;
  t.twelve_h.assign(static_cast<size_t>(max_d) + 1, 0);
  long long amax = isqrt_ll(max_d / 3);
#pragma omp parallel
  {
    std::vector<int64_t> local(static_cast<size_t>(max_d) + 1, 0);
#pragma omp for schedule(dynamic) nowait
    for (long long a = 1; a <= amax; ++a)
      for (long long b = 0; b <= a; ++b)
        for (long long c = a;; ++c) {
          long long D = 4 * a * c - b * b;
          if (D > max_d) break;
          local[static_cast<size_t>(D)] += weight12(a, b, c);
        }
#pragma omp critical
    for (size_t i = 0; i < local.size(); ++i) t.twelve_h[i] += local[i];
  }
  return t;
}

int64_t HurwitzTable::twelve(long long D) const {
  if (!valid_index(D)) return 0;
  if (D > max_d) throw std::out_of_range("HurwitzTable: D beyond table bound");
  return twelve_h[static_cast<size_t>(D)];
}

Rat HurwitzTable::h(const Rat& D) const {
  if (!rat_is_integer(D)) return Rat(0);
  return h(static_cast<long long>(D.get_num().get_si()));
}

Rat HurwitzTable::h7(long long D) const {
  Rat out = h(D);
  if (D % 49 == 0) out -= h(D / 49);
  return out;
}

namespace {
constexpr char kCacheMagic[8] = {'H', 'C', 'A', 'C', 'H', 'E', '1', '2'};

void put_u64_le(std::ofstream& os, uint64_t v) {
  unsigned char buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>(v >> (8 * i));
  os.write(reinterpret_cast<const char*>(buf), 8);
}

uint64_t get_u64_le(std::ifstream& is) {
  unsigned char buf[8];
  is.read(reinterpret_cast<char*>(buf), 8);
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(buf[i]) << (8 * i);
  return v;
}
}  // namespace

void HurwitzTable::save(const std::string& path) const {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("HurwitzTable::save: cannot open " + path);
  os.write(kCacheMagic, 8);
  put_u64_le(os, static_cast<uint64_t>(max_d));
  for (int64_t v : twelve_h) put_u64_le(os, static_cast<uint64_t>(v));
  if (!os) throw std::runtime_error("HurwitzTable::save: write failed");
}

HurwitzTable HurwitzTable::load(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("HurwitzTable::load: cannot open " + path);
  char magic[8];
  is.read(magic, 8);
  if (!is || std::memcmp(magic, kCacheMagic, 8) != 0)
    throw std::runtime_error("HurwitzTable::load: bad magic");
  HurwitzTable t;
  t.max_d = static_cast<long long>(get_u64_le(is));
  t.twelve_h.resize(static_cast<size_t>(t.max_d) + 1);
  for (auto& v : t.twelve_h) v = static_cast<int64_t>(get_u64_le(is));
  if (!is) throw std::runtime_error("HurwitzTable::load: truncated file");
  return t;
}

bool is_fundamental_disc(long long d) {
  if (d == 0 || d == 1) return d == 1;
  long long m4 = ((d % 4) + 4) % 4;
  if (m4 == 1) return is_squarefree(d < 0 ? -d : d);
  if (m4 != 0) return false;
  long long m = d / 4;
  long long mm4 = ((m % 4) + 4) % 4;
  if (mm4 != 2 && mm4 != 3) return false;
  return is_squarefree(m < 0 ? -m : m);
}

FundamentalSplit fundamental_decompose(long long D) {
  if (D == 0) throw std::invalid_argument("fundamental_decompose: D = 0");
  long long m4 = ((D % 4) + 4) % 4;
  if (m4 != 0 && m4 != 1)
    throw std::invalid_argument("fundamental_decompose: not a discriminant");
  long long f = 1;
  long long absD = D < 0 ? -D : D;
  for (auto [p, e] : factorize(absD)) {
    long long pk = 1;
    for (int i = 0; i < e / 2; ++i) pk *= p;
    f *= pk;
  }
  long long delta = D / (f * f);
  long long dm4 = ((delta % 4) + 4) % 4;
  if (dm4 != 0 && dm4 != 1) {
    delta *= 4;
    f /= 2;
  }
  return {delta, f};
}

Rat dirichlet_class_number(long long D) {
  if (D <= 0 || !is_fundamental_disc(-D))
    throw std::invalid_argument(
        "dirichlet_class_number: -D must be a fundamental discriminant");
  long long sum = 0;
  for (long long m = 1; m < D; ++m) sum += kronecker(-D, m) * m;
  Rat r(static_cast<long>(-sum), static_cast<long>(D));
  r.canonicalize();
  return r;
}

Rat cohen_lift(long long D, long long f) {
  if (!is_fundamental_disc(-D))
    throw std::invalid_argument("cohen_lift: -D must be fundamental");
  if (f < 1) throw std::invalid_argument("cohen_lift: f must be >= 1");
  long long sum = 0;
  for (long long d : divisors(f)) {
    int mu = mobius(d);
    if (mu == 0) continue;
    sum += mu * kronecker(-D, d) * sigma1(f / d);
  }
  return hurwitz(D) * Rat(static_cast<long>(sum));
}

CrDeltaResult c_r_delta(int r, long long delta) {
  if (r < 1) throw std::invalid_argument("c_r_delta: r must be >= 1");
  // mu kills every divisor of 7^k except 1 and 7, so the twisted sum over
  // d | 7^k collapses to sigma(7^k) - (-delta/7) sigma(7^{k-1}).
  auto twisted = [&](int k) -> long long {
    if (k == 0) return 1;
    long long pow7k = 1;
    for (int i = 0; i < k; ++i) pow7k *= 7;
    return sigma1(pow7k) - kronecker(-delta, 7) * sigma1(pow7k / 7);
  };
  CrDeltaResult res;
  res.defining_sum = twisted(r) - twisted(r - 1);
  long long p7 = 1;
  for (int i = 0; i < r - 1; ++i) p7 *= 7;
  res.closed_form = p7 * (7 + kronecker(delta, 7));
  res.match = res.defining_sum == res.closed_form;
  return res;
}

}  // namespace coreforms::class_numbers
