#include "coreforms/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace coreforms {

long long isqrt_ll(long long n) {
  if (n < 0) throw std::invalid_argument("isqrt_ll: negative argument");
  if (n == 0) return 0;
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square_ll(long long n, long long* root) {
  if (n < 0) return false;
  long long r = isqrt_ll(n);
  if (r * r != n) return false;
  if (root) *root = r;
  return true;
}

int kronecker(long long a, long long n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  if ((a & 1) == 0 && (n & 1) == 0) return 0;
  int k = 1;
  // factor out 2s of n; each contributes (a/2)
  int v = 0;
  while ((n & 1) == 0) {
    n /= 2;
    ++v;
  }
  if (v & 1) {
    long long am8 = ((a % 8) + 8) % 8;
    if (am8 == 3 || am8 == 5) k = -k;
  }
  if (n < 0) {
    n = -n;
    if (a < 0) k = -k;
  }
  // Jacobi loop, n odd positive from here on
  a %= n;
  if (a < 0) a += n;
  while (a != 0) {
    v = 0;
    while ((a & 1) == 0) {
      a /= 2;
      ++v;
    }
    if (v & 1) {
      long long nm8 = n % 8;
      if (nm8 == 3 || nm8 == 5) k = -k;
    }
    if ((a % 4) == 3 && (n % 4) == 3) k = -k;
    long long t = n % a;
    n = a;
    a = t;
  }
  return (n == 1) ? k : 0;
}

std::vector<std::pair<long long, int>> factorize(long long n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
  std::vector<std::pair<long long, int>> out;
  for (long long p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<long long> divisors(long long n) {
  std::vector<long long> ds{1};
  for (auto [p, e] : factorize(n)) {
    size_t sz = ds.size();
    long long pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < sz; ++j) ds.push_back(ds[j] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

long long sigma1(long long n) {
  long long s = 1;
  for (auto [p, e] : factorize(n)) {
    long long pk = 1, sum = 1;
    for (int i = 0; i < e; ++i) {
      pk *= p;
      sum += pk;
    }
    s *= sum;
  }
  return s;
}

int mobius(long long n) {
  int sign = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

long long sigma5_twisted(long long n) {
  long long s = 0;
  for (long long d : divisors(n)) s += kronecker(d, 5) * (n / d);
  return s;
}

bool is_squarefree(long long n) {
  if (n < 1) return false;
  for (auto [p, e] : factorize(n))
    if (e > 1) return false;
  return true;
}

int omega_distinct(long long n) {
  return static_cast<int>(factorize(n).size());
}

long long odd_part(long long n, int* two_exponent) {
  int e = 0;
  while (n != 0 && (n & 1) == 0) {
    n /= 2;
    ++e;
  }
  if (two_exponent) *two_exponent = e;
  return n;
}

long long gcd_ll(long long a, long long b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

long long ext_gcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = (a < 0) ? -1 : 1;
    y = 0;
    return a < 0 ? -a : a;
  }
  long long x1, y1;
  long long g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

std::vector<long long> primes_up_to(long long n) {
  std::vector<long long> ps;
  if (n < 2) return ps;
  std::vector<bool> comp(n + 1, false);
  for (long long i = 2; i <= n; ++i) {
    if (!comp[i]) {
      ps.push_back(i);
      for (long long j = i * i; j <= n; j += i) comp[j] = true;
    }
  }
  return ps;
}

bool is_prime_ll(long long n) {
  if (n < 2) return false;
  for (long long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

}  // namespace coreforms
