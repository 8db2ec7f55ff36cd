// D_n, nu_n (with 2-adic reduction), and evaluators for the closed-form
// identities expressing sc7(n) and c4(n) through Hurwitz class numbers.
// Every evaluator has an independent counting route to be checked against;
// verification lives in the verify module and the test suite.
#pragma once

#include <utility>

#include "coreforms/arith.hpp"
#include "coreforms/class_numbers.hpp"

namespace coreforms::sc7 {

// Resolved values of the recursive definitions
//   D_n  = 28n+56 (n = 0,1 mod 4), 7n+14 (n = 3 mod 4),
//          D_{(n+2)/2^{2l} - 2} (n = 2 mod 4, l maximal with 2^{2l} | n+2)
//   nu_n = 1/4, 1/2 (n = 3 mod 8), recursive, 0 otherwise.
// When n + 2 is exactly a power of 4 the recursion's base index is -1 and
// leaves the defining domain; such n carry domain_gap = true, nu = 0 (the
// value that matches sc7(n) = sc7(2) = 0), and D = 7n+14 as a placeholder.
struct DnNu {
  long long n = 0;
  long long D = 0;
  Rat nu = 0;
  int ell = 0;      // maximal with n = -2 (mod 2^{2 ell})
  int r_count = 0;  // distinct prime divisors of (7n+14) / 2^{2 ell}
  bool domain_gap = false;
};

DnNu dn_nu(long long n);

// sc7(n) = (H(28n+56) - H((4n+8)/7) - 2 H(7n+14) + 2 H((n+2)/7)) / 4,
// with H(x) = 0 for x not an integer. Table must cover 28n+56.
Rat thm_many_h(long long n, const class_numbers::HurwitzTable& table);

// The odd-n three-branch form: 1/4 H(D_n) for n = 1 (mod 4), 1/2 H(D_n)
// for n = 3 (mod 8), 0 for n = 7 (mod 8). Requires odd n with
// n != -2 (mod 7).
Rat ono_raji_three_branch(long long n, const class_numbers::HurwitzTable& table);

// sc7(n) = nu_n H_7(D_n); H_7 by restricted enumeration.
Rat cor_counting(long long n);
Rat cor_counting(long long n, const class_numbers::HurwitzTable& table);

// Single-class-number case split:
//  (1) nu_n H(D_n)                    n != -2 (7), n != 2 (4)
//  (2) (7 + ((D_n/49)/7)) nu_n H(D_n/49)   n = -2 (7), n != -2 (343), n != 2 (4)
//  (3) sc7((n+2)/4 - 2)               n = 2 (4)
//  (4) 7 sc7((n+2)/49 - 2)            n = -2 (343)
Rat cor_one_h(long long n, const class_numbers::HurwitzTable& table);

// Dirichlet-sum expression; requires n + 2 squarefree.
Rat cor2_dirichlet(long long n);

// sc7((n+2) 2^{2l} f^2 7^{2r} - 2) = 7^r sc7(n) sum_{d|f} mu(d) (-D_n/d)
// sigma(f/d). Requires n + 2 squarefree and gcd(f, 14) = 1; sc7(n) is taken
// from the lattice count.
long long cor3_lift(long long n, int ell, int r, long long f);
long long cor3_lifted_index(long long n, int ell, int r, long long f);

// c4(n) = H(32n+20) / 2; requires 8n+5 squarefree.
Rat ono_sze_c4(long long n, const class_numbers::HurwitzTable& table);
Rat ono_sze_c4(long long n);

// Both sides of 2 sc7(8n+1) = c4(7n+2), by lattice counts. Equality is
// asserted only under the hypothesis below.
std::pair<long long, long long> progression_identity(long long n);
bool progression_hypothesis(long long n);  // n != 4 (mod 7), 56n+21 squarefree

// Lattice verification of sc7((n+2) 2^{2l} - 2) = sc7(n)  (which = two)
// and sc7((n+2) 7^{2l} - 2) = 7^l sc7(n)  (which = seven).
enum class LiftKind { two, seven };
bool lemma_div4(long long n, int ell, LiftKind which);

}  // namespace coreforms::sc7
