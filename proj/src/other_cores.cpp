#include "coreforms/other_cores.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "coreforms/abacus.hpp"

namespace coreforms::other_cores {

bool c2_closed(long long n) {
  return n >= 0 && is_square_ll(8 * n + 1);
}

bool sc3_closed(long long n) {
  // n = j(3j +- 2) over integers j iff 3n+1 = (3j +- 1)^2
  return n >= 0 && is_square_ll(3 * n + 1);
}

VanishingReport c2_sc3_vanishing_progressions(long long bound) {
  VanishingReport rep;
  rep.bound = bound;
  rep.pass = true;
  for (long long n = 0; n <= bound; ++n) {
    if (sc3_closed(4 * n + 3) || c2_closed(3 * n + 2)) {
      rep.pass = false;
      std::ostringstream os;
      os << "vanishing progression violated at n = " << n;
      rep.detail = os.str();
      return rep;
    }
  }
  for (long long n = 0; n <= bound; ++n) {
    if (c2_closed(n) && sc3_closed(n)) {
      ++rep.both_one_count;
    }
  }
  rep.detail = "vanishing progressions hold";
  return rep;
}

long long c5_closed(long long n) { return sigma5_twisted(n + 1); }

EllipticCurve curve(CurveLabel label) {
  switch (label) {
    case CurveLabel::E36a:
      return {label, 0, 0, 0, 0, 1};  // y^2 = x^3 + 1
    case CurveLabel::E54a:
      return {label, 1, -1, 0, 12, 8};  // y^2 + xy = x^3 - x^2 + 12x + 8
    case CurveLabel::E108a:
      return {label, 0, 0, 0, 0, 4};  // y^2 = x^3 + 4
  }
  throw std::invalid_argument("curve: unknown label");
}

long long EllipticCurve::disc() const {
  long long b2 = a1 * a1 + 4 * a2;
  long long b4 = 2 * a4 + a1 * a3;
  long long b6 = a3 * a3 + 4 * a6;
  long long b8 = (b2 * b6 - b4 * b4) / 4 + a2 * a3 * a3 - 0;
  // b8 = a1^2 a6 + 4 a2 a6 - a1 a3 a4 + a2 a3^2 - a4^2
  b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

long long EllipticCurve::c4_invariant() const {
  long long b2 = a1 * a1 + 4 * a2;
  long long b4 = 2 * a4 + a1 * a3;
  return b2 * b2 - 24 * b4;
}

namespace {

long long mod_nonneg(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

// Number of y in F_p with y^2 + (a1 x + a3) y = rhs(x), via completing the
// square for odd p.
long long count_points_affine(const EllipticCurve& E, long long p) {
  long long total = 0;
  if (p == 2) {
    for (long long x = 0; x < 2; ++x)
      for (long long y = 0; y < 2; ++y) {
        long long lhs = y * y + E.a1 * x * y + E.a3 * y;
        long long rhs = x * x * x + E.a2 * x * x + E.a4 * x + E.a6;
        if (mod_nonneg(lhs - rhs, 2) == 0) ++total;
      }
    return total;
  }
  for (long long x = 0; x < p; ++x) {
    // (2y + a1 x + a3)^2 = 4 rhs(x) + (a1 x + a3)^2
    long long rhs = ((x * x % p) * x + E.a2 * x * x + E.a4 * x + E.a6) % p;
    long long lin = E.a1 * x + E.a3;
    long long d = mod_nonneg(4 * rhs + lin * lin, p);
    total += 1 + kronecker(d, p);
  }
  return total;
}

// Multiplicative reduction sign at p: +1 if the tangent cone at the
// singular point splits over F_p, else -1. Assumes p | disc, p not | c4.
long long multiplicative_sign(const EllipticCurve& E, long long p) {
  // locate the singular point of the reduction
  long long sx = -1, sy = -1;
  for (long long x = 0; x < p && sx < 0; ++x)
    for (long long y = 0; y < p; ++y) {
      long long f = y * y + E.a1 * x * y + E.a3 * y - x * x * x - E.a2 * x * x -
                    E.a4 * x - E.a6;
      if (mod_nonneg(f, p) != 0) continue;
      long long fx = E.a1 * y - 3 * x * x - 2 * E.a2 * x - E.a4;
      long long fy = 2 * y + E.a1 * x + E.a3;
      if (mod_nonneg(fx, p) == 0 && mod_nonneg(fy, p) == 0) {
        sx = x;
        sy = y;
        break;
      }
    }
  if (sx < 0) throw std::logic_error("multiplicative_sign: no singular point");
  // quadratic part of f(x + sx, y + sy): A X^2 + B XY + C Y^2
  long long A = mod_nonneg(-3 * sx - E.a2, p);
  long long B = mod_nonneg(E.a1, p);
  long long C = 1;
  for (long long lam = 0; lam < p; ++lam)
    if (mod_nonneg(A + B * lam + C * lam * lam, p) == 0) return 1;  // split
  if (mod_nonneg(C, p) == 0) return 1;  // direction (0:1) rational
  return -1;
}

}  // namespace

long long curve_ap(CurveLabel label, long long p) {
  if (!is_prime_ll(p)) throw std::invalid_argument("curve_ap: p must be prime");
  EllipticCurve E = curve(label);
  long long disc = E.disc();
  if (disc % p == 0) {
    if (E.c4_invariant() % p == 0) return 0;  // additive
    return multiplicative_sign(E, p);
  }
  long long affine = count_points_affine(E, p);
  return p - affine;  // p + 1 - (affine + point at infinity)
}

long long curve_an(CurveLabel label, long long n) {
  if (n < 1) throw std::invalid_argument("curve_an: n must be >= 1");
  EllipticCurve E = curve(label);
  long long result = 1;
  for (auto [p, e] : factorize(n)) {
    long long ap = curve_ap(label, p);
    long long apk;
    if (E.disc() % p == 0) {
      apk = 1;
      for (int i = 0; i < e; ++i) apk *= ap;
    } else {
      long long prev = 1, cur = ap;  // a_{p^0}, a_{p^1}
      for (int i = 1; i < e; ++i) {
        long long next = ap * cur - p * prev;
        prev = cur;
        cur = next;
      }
      apk = (e == 0) ? 1 : cur;
    }
    result *= apk;
  }
  return result;
}

long long sc9_closed(long long n) {
  if (n < 0) throw std::invalid_argument("sc9_closed: n must be >= 0");
  long long idx = 3 * n + 10;
  long long a36 = curve_an(CurveLabel::E36a, idx);
  long long a54 = curve_an(CurveLabel::E54a, idx);
  long long a108 = curve_an(CurveLabel::E108a, idx);
  long long value;
  if (n % 4 == 1 || n % 4 == 3) {
    value = sigma1(idx) + a36 - a54 - a108;
  } else if (n % 4 == 0) {
    value = sigma1(idx) + a36 - 3 * a54 - a108;
  } else {
    long long k = odd_part(idx);
    value = sigma1(k) + a36 - 3 * a54 - a108;
  }
  if (value < 0 || value % 27 != 0)
    throw std::logic_error("sc9_closed: formula value not divisible by 27");
  return value / 27;
}

SigmaProbeReport sigma5_nonconstancy_probe(long long M, long long m,
                                           long long bound) {
  if (M < 1 || m < 0 || m >= M)
    throw std::invalid_argument("sigma5_nonconstancy_probe: bad progression");
  SigmaProbeReport rep;
  rep.modulus = M;
  rep.residue = m;
  rep.bound = bound;
  long long base = 3 * m + 10;
  std::vector<Rat> limits;
  for (long long ell = 2; ell <= bound && limits.size() < 4; ++ell) {
    if (!is_prime_ll(ell) || kronecker(ell, 5) != -1) continue;
    if ((base * M) % ell == 0) continue;
    // prime p = ell^{-1} (mod 3M), p coprime to 5(3m+10), p != ell, so that
    // 3 | (3m+10) p ell - 10 and the resulting n lies on the progression
    long long x, y;
    ext_gcd(ell, 3 * M, x, y);
    long long target = mod_nonneg(x, 3 * M);
    for (long long p = target == 0 ? 3 * M : target; p <= bound;
         p += 3 * M) {
      if (p < 2 || !is_prime_ll(p) || p == ell) continue;
      if ((5 * base) % p == 0) continue;
      long long em = base * p * ell;
      if ((em - 10) % 3 != 0) continue;
      long long n = (em - 10) / 3;
      if (mod_nonneg(n - m, M) != 0) continue;
      SigmaProbeWitness w;
      w.ell = ell;
      w.p = p;
      w.n = n;
      w.ratio_measured = rat(sigma1(em), 1) / rat(sigma5_twisted(em), 1);
      // limit over p -> infinity with (p/5) fixed is
      // sigma(base)/sigma5(base) * (1+ell)/(ell-1) up to the p-factor -> 1
      w.ratio_limit = rat(sigma1(base), 1) / rat(sigma5_twisted(base), 1) *
                      rat(1 + ell, ell - 1);
      bool fresh = true;
      for (const auto& l : limits)
        if (l == w.ratio_limit) fresh = false;
      if (fresh) {
        limits.push_back(w.ratio_limit);
        rep.witnesses.push_back(w);
      }
      break;
    }
  }
  rep.conclusive = limits.size() >= 2;
  std::ostringstream os;
  os << "distinct limit ratios: " << limits.size();
  rep.detail = os.str();
  return rep;
}

std::pair<long long, long long> c3_sc5_counts(long long n) {
  return {abacus::count_t_cores_lattice(n, 3),
          abacus::count_sc_t_cores_lattice(n, 5)};
}

RatioSweepReport c3_sc5_ratio_sweep(long long max_modulus, long long bound) {
  RatioSweepReport rep;
  rep.max_modulus = max_modulus;
  rep.bound = bound;
  std::vector<long long> c3(static_cast<size_t>(bound) + 1);
  std::vector<long long> sc5(static_cast<size_t>(bound) + 1);
#pragma omp parallel for schedule(dynamic, 64)
  for (long long n = 0; n <= bound; ++n) {
    c3[static_cast<size_t>(n)] = abacus::count_t_cores_lattice(n, 3);
    sc5[static_cast<size_t>(n)] = abacus::count_sc_t_cores_lattice(n, 5);
  }
  for (long long M = 1; M <= max_modulus; ++M)
    for (long long r = 0; r < M; ++r) {
      // progression survives if all pairs (c3, sc5) lie on one line through 0
      long long px = -1, py = -1;
      bool proportional = true;
      for (long long n = r; n <= bound; n += M) {
        long long x = c3[static_cast<size_t>(n)], y = sc5[static_cast<size_t>(n)];
        if (x == 0 && y == 0) continue;
        if (px < 0) {
          px = x;
          py = y;
          continue;
        }
        if (px * y != py * x) {
          proportional = false;
          break;
        }
      }
      if (proportional) {
        std::ostringstream os;
        os << "n = " << r << " (mod " << M << ")";
        rep.survivors.push_back(os.str());
      }
    }
  rep.pass = rep.survivors.empty();
  return rep;
}

}  // namespace coreforms::other_cores
