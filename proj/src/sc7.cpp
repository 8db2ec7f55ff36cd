#include "coreforms/sc7.hpp"

#include <stdexcept>

#include "coreforms/abacus.hpp"

namespace coreforms::sc7 {

DnNu dn_nu(long long n) {
  if (n < 0) throw std::invalid_argument("dn_nu: n must be >= 0");
  DnNu out;
  out.n = n;
  long long base = n;
  if (n % 4 == 2) {
    long long m = n + 2;
    int ell = 0;
    while (m % 4 == 0) {
      m /= 4;
      ++ell;
    }
    out.ell = ell;
    if (m < 2) {
      // n + 2 is a pure power of 4; the recursion exits the domain.
      out.domain_gap = true;
      out.D = 7 * n + 14;
      out.nu = 0;
      out.r_count = omega_distinct((7 * n + 14) >> (2 * ell));
      return out;
    }
    base = m - 2;
  }
  if (base % 4 == 0 || base % 4 == 1) {
    out.D = 28 * base + 56;
    out.nu = Rat(1, 4);
  } else if (base % 8 == 3) {
    out.D = 7 * base + 14;
    out.nu = Rat(1, 2);
  } else {  // base = 7 (mod 8)
    out.D = 7 * base + 14;
    out.nu = 0;
  }
  out.r_count = omega_distinct((7 * n + 14) >> (2 * out.ell));
  return out;
}

Rat thm_many_h(long long n, const class_numbers::HurwitzTable& table) {
  Rat sum = table.h(28 * n + 56);
  if ((4 * n + 8) % 7 == 0) sum -= table.h((4 * n + 8) / 7);
  sum -= 2 * table.h(7 * n + 14);
  if ((n + 2) % 7 == 0) sum += 2 * table.h((n + 2) / 7);
  return sum / 4;
}

Rat ono_raji_three_branch(long long n,
                          const class_numbers::HurwitzTable& table) {
  if (n % 2 == 0 || (n + 2) % 7 == 0)
    throw std::invalid_argument(
        "ono_raji_three_branch: requires odd n with n != -2 (mod 7)");
  long long D = (n % 4 == 1) ? 28 * n + 56 : 7 * n + 14;
  if (n % 4 == 1) return table.h(D) / 4;
  if (n % 8 == 3) return table.h(D) / 2;
  return Rat(0);
}

Rat cor_counting(long long n) {
  DnNu d = dn_nu(n);
  if (d.nu == 0) return Rat(0);
  return d.nu * class_numbers::hurwitz_p_primitive(7, d.D);
}

Rat cor_counting(long long n, const class_numbers::HurwitzTable& table) {
  DnNu d = dn_nu(n);
  if (d.nu == 0) return Rat(0);
  return d.nu * table.h7(d.D);
}

Rat cor_one_h(long long n, const class_numbers::HurwitzTable& table) {
  if (n < 0) return Rat(0);
  if (n % 4 == 2) {
    long long m = (n + 2) / 4 - 2;
    if (m < 0) return Rat(0);  // n + 2 a power of 4; sc7 chain ends at sc7(2) = 0
    return cor_one_h(m, table);
  }
  DnNu d = dn_nu(n);
  if ((n + 2) % 7 != 0) return d.nu * table.h(d.D);
  if ((n + 2) % 343 != 0) {
    long long inner = d.D / 49;
    return Rat(7 + kronecker(inner, 7)) * d.nu * table.h(inner);
  }
  return 7 * cor_one_h((n + 2) / 49 - 2, table);
}

Rat cor2_dirichlet(long long n) {
  if (!is_squarefree(n + 2))
    throw std::invalid_argument("cor2_dirichlet: n + 2 must be squarefree");
  DnNu d = dn_nu(n);
  if (d.nu == 0) return Rat(0);
  if ((n + 2) % 7 != 0) {
    long long sum = 0;
    for (long long m = 1; m < d.D; ++m) sum += kronecker(-d.D, m) * m;
    return -d.nu * rat(sum, d.D);
  }
  long long inner = d.D / 49;
  long long sum = 0;
  for (long long m = 1; m < inner; ++m) sum += kronecker(-inner, m) * m;
  Rat factor = Rat(49) * Rat(7 + kronecker(inner, 7));
  return -d.nu * factor * rat(sum, d.D);
}

long long cor3_lifted_index(long long n, int ell, int r, long long f) {
  long long idx = n + 2;
  for (int i = 0; i < ell; ++i) idx *= 4;
  for (int i = 0; i < r; ++i) idx *= 49;
  idx *= f * f;
  return idx - 2;
}

long long cor3_lift(long long n, int ell, int r, long long f) {
  if (!is_squarefree(n + 2))
    throw std::invalid_argument("cor3_lift: n + 2 must be squarefree");
  if (f < 1 || gcd_ll(f, 14) != 1)
    throw std::invalid_argument("cor3_lift: f must satisfy gcd(f, 14) = 1");
  if (ell < 0 || r < 0) throw std::invalid_argument("cor3_lift: l, r >= 0");
  DnNu d = dn_nu(n);
  long long sum = 0;
  for (long long div : divisors(f)) {
    int mu = mobius(div);
    if (mu == 0) continue;
    sum += mu * kronecker(-d.D, div) * sigma1(f / div);
  }
  long long p7 = 1;
  for (int i = 0; i < r; ++i) p7 *= 7;
  return p7 * abacus::count_sc_t_cores_lattice(n, 7) * sum;
}

Rat ono_sze_c4(long long n, const class_numbers::HurwitzTable& table) {
  if (!is_squarefree(8 * n + 5))
    throw std::invalid_argument("ono_sze_c4: 8n + 5 must be squarefree");
  return table.h(32 * n + 20) / 2;
}

Rat ono_sze_c4(long long n) {
  if (!is_squarefree(8 * n + 5))
    throw std::invalid_argument("ono_sze_c4: 8n + 5 must be squarefree");
  return class_numbers::hurwitz(32 * n + 20) / 2;
}

std::pair<long long, long long> progression_identity(long long n) {
  long long lhs = 2 * abacus::count_sc_t_cores_lattice(8 * n + 1, 7);
  long long rhs = abacus::count_t_cores_lattice(7 * n + 2, 4);
  return {lhs, rhs};
}

bool progression_hypothesis(long long n) {
  return n % 7 != 4 && is_squarefree(56 * n + 21);
}

bool lemma_div4(long long n, int ell, LiftKind which) {
  long long factor = 1, scale = 1;
  for (int i = 0; i < ell; ++i) {
    if (which == LiftKind::two) {
      factor *= 4;
    } else {
      factor *= 49;
      scale *= 7;
    }
  }
  long long lifted = (n + 2) * factor - 2;
  return abacus::count_sc_t_cores_lattice(lifted, 7) ==
         scale * abacus::count_sc_t_cores_lattice(n, 7);
}

}  // namespace coreforms::sc7
