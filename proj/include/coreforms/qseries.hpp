// Truncated formal q-series with exact rational coefficients on the integer
// exponent grid. Precision is explicit and every operator states its
// precision map; silent precision loss is the main correctness hazard here,
// so coefficient access beyond the declared precision throws.
#pragma once

#include <string>
#include <vector>

#include "coreforms/arith.hpp"
#include "coreforms/class_numbers.hpp"

namespace coreforms::qseries {

class QSeries {
 public:
  QSeries() = default;
  explicit QSeries(long long precision);

  long long precision() const { return prec_; }
  const Rat& coeff(long long n) const;  // throws outside [0, precision]
  void set_coeff(long long n, Rat value);

  QSeries truncated(long long precision) const;  // precision <= current

  // Component-wise ops keep min precision.
  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const Rat& s, const QSeries& a);
  // Cauchy product at min precision; skips zero coefficients.
  friend QSeries operator*(const QSeries& a, const QSeries& b);

  bool operator==(const QSeries& o) const = default;

  // First exponent <= limit where coefficients differ, or -1 if none.
  static long long first_mismatch(const QSeries& a, const QSeries& b,
                                  long long limit);

 private:
  long long prec_ = -1;
  std::vector<Rat> c_;
};

// f|U_d picks every d-th coefficient: precision N -> floor(N/d).
QSeries u_op(const QSeries& f, long long d);
// f|V_d dilates exponents by d: precision N -> d N + d - 1.
QSeries v_op(const QSeries& f, long long d);

// Weight lambda + 1/2 Hecke operator at p^2:
//   c(p^2 n) + ((-1)^lambda n / p) p^{lambda-1} c(n) + p^{2 lambda - 1} c(n/p^2)
// Precision N -> floor(N/p^2).
QSeries hecke_t_p2(const QSeries& f, long long p, int lambda = 1);

QSeries theta(long long precision);        // coefficients 1, 2 at squares
QSeries theta_cubed(long long precision);  // coefficient at n equals r3(n)

// Class number series: coefficient H(D) at D = 0,3 (mod 4), with the
// constant term set to -1/12 (forced by Theta^3 = 12 H_{1,2}|U_2 having
// constant term 1). Table must cover `precision`.
QSeries hseries(long long precision, const class_numbers::HurwitzTable& table);

// H_{1,2} = H|U_2 - 2 H|V_2. Table must cover 2 * precision.
QSeries h_one_two(long long precision, const class_numbers::HurwitzTable& table);

// Generating series of self-conjugate 7-cores, sum sc7(n) q^{n+2}, built
// from the lattice count.
QSeries sc7_series(long long precision);

// eta(m tau)^e factors with an explicit rational leading q-power. The
// fractional offsets must cancel: materialisation requires
// q_offset + sum(m e)/24 to be a non-negative integer.
struct EtaQuotient {
  std::vector<std::pair<long long, long long>> factors;  // (multiplier, exponent)
  Rat q_offset = 0;
};

QSeries eta_expand(const EtaQuotient& eq, long long precision);

EtaQuotient c2_eta_quotient();   // q^{-1/8} eta(2t)^2 / eta(t)
EtaQuotient sc3_eta_quotient();  // q^{-1/3} eta(2t)^2 eta(3t) eta(12t) / (eta(t) eta(4t) eta(6t))

struct IdentityReport {
  bool pass = false;
  long long checked_up_to = -1;
  long long first_mismatch = -1;
  std::string detail;
};

// Coefficient-level check of S = (1/4) H_{1,2} | (U_14 - U_2|V_7) up to the
// given exponent. Table must cover 28 * precision.
IdentityReport verify_central_identity(long long precision,
                                       const class_numbers::HurwitzTable& table);
// Same with a caller-supplied H_{1,2} (precision >= 14 * precision); lets
// tests inject a perturbed series and watch the mismatch get reported.
IdentityReport verify_central_identity_with(const QSeries& h12,
                                            long long precision);

// "exponent<TAB>numerator/denominator" lines, exponents ascending.
std::string dump(const QSeries& s);

}  // namespace coreforms::qseries
