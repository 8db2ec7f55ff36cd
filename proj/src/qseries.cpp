#include "coreforms/qseries.hpp"

#include <sstream>
#include <stdexcept>

#include "coreforms/abacus.hpp"

namespace coreforms::qseries {

QSeries::QSeries(long long precision) : prec_(precision) {
  if (precision < 0) throw std::invalid_argument("QSeries: negative precision");
  c_.assign(static_cast<size_t>(precision) + 1, Rat(0));
}

const Rat& QSeries::coeff(long long n) const {
  if (n < 0 || n > prec_)
    throw std::out_of_range("QSeries::coeff: exponent outside precision");
  return c_[static_cast<size_t>(n)];
}

void QSeries::set_coeff(long long n, Rat value) {
  if (n < 0 || n > prec_)
    throw std::out_of_range("QSeries::set_coeff: exponent outside precision");
  c_[static_cast<size_t>(n)] = std::move(value);
}

QSeries QSeries::truncated(long long precision) const {
  if (precision > prec_)
    throw std::invalid_argument("QSeries::truncated: cannot extend precision");
  QSeries out(precision);
  for (long long i = 0; i <= precision; ++i) out.c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)];
  return out;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  long long p = std::min(a.prec_, b.prec_);
  QSeries out(p);
  for (long long i = 0; i <= p; ++i)
    out.c_[static_cast<size_t>(i)] = a.c_[static_cast<size_t>(i)] + b.c_[static_cast<size_t>(i)];
  return out;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
  long long p = std::min(a.prec_, b.prec_);
  QSeries out(p);
  for (long long i = 0; i <= p; ++i)
    out.c_[static_cast<size_t>(i)] = a.c_[static_cast<size_t>(i)] - b.c_[static_cast<size_t>(i)];
  return out;
}

QSeries operator*(const Rat& s, const QSeries& a) {
  QSeries out(a.prec_);
  for (long long i = 0; i <= a.prec_; ++i)
    out.c_[static_cast<size_t>(i)] = s * a.c_[static_cast<size_t>(i)];
  return out;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  long long p = std::min(a.prec_, b.prec_);
  QSeries out(p);
  std::vector<long long> na, nb;
  for (long long i = 0; i <= p; ++i)
    if (a.c_[static_cast<size_t>(i)] != 0) na.push_back(i);
  for (long long i = 0; i <= p; ++i)
    if (b.c_[static_cast<size_t>(i)] != 0) nb.push_back(i);
  const bool a_outer = na.size() <= nb.size();
  const auto& outer = a_outer ? na : nb;
  const auto& inner = a_outer ? nb : na;
  const QSeries& fo = a_outer ? a : b;
  const QSeries& fi = a_outer ? b : a;
  for (long long eo : outer) {
    const Rat& co = fo.c_[static_cast<size_t>(eo)];
    for (long long ei : inner) {
      if (eo + ei > p) break;
      out.c_[static_cast<size_t>(eo + ei)] += co * fi.c_[static_cast<size_t>(ei)];
    }
  }
  return out;
}

long long QSeries::first_mismatch(const QSeries& a, const QSeries& b,
                                  long long limit) {
  if (limit > a.prec_ || limit > b.prec_)
    throw std::invalid_argument("first_mismatch: limit beyond precision");
  for (long long i = 0; i <= limit; ++i)
    if (a.c_[static_cast<size_t>(i)] != b.c_[static_cast<size_t>(i)]) return i;
  return -1;
}

QSeries u_op(const QSeries& f, long long d) {
  if (d < 1) throw std::invalid_argument("u_op: d must be >= 1");
  QSeries out(f.precision() / d);
  for (long long n = 0; n <= out.precision(); ++n) out.set_coeff(n, f.coeff(d * n));
  return out;
}

QSeries v_op(const QSeries& f, long long d) {
  if (d < 1) throw std::invalid_argument("v_op: d must be >= 1");
  QSeries out(d * f.precision() + d - 1);
  for (long long n = 0; n <= f.precision(); ++n) out.set_coeff(d * n, f.coeff(n));
  return out;
}

QSeries hecke_t_p2(const QSeries& f, long long p, int lambda) {
  if (p < 2) throw std::invalid_argument("hecke_t_p2: p must be >= 2");
  long long p2 = p * p;
  QSeries out(f.precision() / p2);
  long long plam1 = 1;
  for (int i = 0; i + 1 < lambda; ++i) plam1 *= p;  // p^{lambda-1}
  long long p2lam1 = 1;
  for (int i = 0; i < 2 * lambda - 1; ++i) p2lam1 *= p;
  for (long long n = 0; n <= out.precision(); ++n) {
    long long tw = (lambda % 2) ? -n : n;
    Rat v = f.coeff(p2 * n) + Rat(kronecker(tw, p) * plam1) * f.coeff(n);
    if (n % p2 == 0) v += Rat(static_cast<long>(p2lam1)) * f.coeff(n / p2);
    out.set_coeff(n, v);
  }
  return out;
}

QSeries theta(long long precision) {
  QSeries out(precision);
  for (long long k = 0; k * k <= precision; ++k)
    out.set_coeff(k * k, Rat(k == 0 ? 1 : 2));
  return out;
}

QSeries theta_cubed(long long precision) {
  QSeries t = theta(precision);
  return (t * t) * t;
}

QSeries hseries(long long precision, const class_numbers::HurwitzTable& table) {
  QSeries out(precision);
  out.set_coeff(0, rat(-1, 12));
  for (long long D = 3; D <= precision; ++D) {
    long long m = D % 4;
    if (m != 0 && m != 3) continue;
    out.set_coeff(D, rat(table.twelve(D), 12));
  }
  return out;
}

QSeries h_one_two(long long precision, const class_numbers::HurwitzTable& table) {
  QSeries h = hseries(2 * precision, table);
  QSeries u2 = u_op(h, 2);
  QSeries v2 = v_op(h, 2);
  return (u2 - Rat(2) * v2).truncated(precision);
}

QSeries sc7_series(long long precision) {
  QSeries out(precision);
  for (long long n = 0; n + 2 <= precision; ++n)
    out.set_coeff(n + 2, Rat(static_cast<long>(
                            abacus::count_sc_t_cores_lattice(n, 7))));
  return out;
}

namespace {

// Sparse Euler factor prod_k (1 - q^{mk}) via the pentagonal number theorem.
std::vector<std::pair<long long, int>> euler_factor(long long m,
                                                    long long precision) {
  std::vector<std::pair<long long, int>> terms{{0, 1}};
  for (long long j = 1;; ++j) {
    long long g1 = m * (j * (3 * j - 1) / 2);
    long long g2 = m * (j * (3 * j + 1) / 2);
    int sign = (j % 2) ? -1 : 1;
    if (g1 > precision && g2 > precision) break;
    if (g1 <= precision) terms.emplace_back(g1, sign);
    if (g2 <= precision) terms.emplace_back(g2, sign);
  }
  return terms;
}

QSeries multiply_sparse(const QSeries& f,
                        const std::vector<std::pair<long long, int>>& g) {
  QSeries out(f.precision());
  for (long long n = 0; n <= f.precision(); ++n) {
    const Rat& cf = f.coeff(n);
    if (cf == 0) continue;
    for (auto [e, s] : g) {
      if (n + e > f.precision()) break;
      if (s > 0)
        out.set_coeff(n + e, out.coeff(n + e) + cf);
      else
        out.set_coeff(n + e, out.coeff(n + e) - cf);
    }
  }
  return out;
}

// Divide by a unit series given sparsely (constant term must be 1).
QSeries divide_sparse(const QSeries& f,
                      const std::vector<std::pair<long long, int>>& g) {
  if (g.empty() || g[0].first != 0 || g[0].second != 1)
    throw std::invalid_argument("divide_sparse: divisor must have constant 1");
  QSeries out(f.precision());
  for (long long n = 0; n <= f.precision(); ++n) {
    Rat v = f.coeff(n);
    for (size_t i = 1; i < g.size(); ++i) {
      auto [e, s] = g[i];
      if (e > n) break;
      if (s > 0)
        v -= out.coeff(n - e);
      else
        v += out.coeff(n - e);
    }
    out.set_coeff(n, std::move(v));
  }
  return out;
}

}  // namespace

QSeries eta_expand(const EtaQuotient& eq, long long precision) {
  Rat offset = eq.q_offset;
  long long me = 0;
  for (auto [m, e] : eq.factors) {
    if (m < 1) throw std::invalid_argument("eta_expand: multiplier must be >= 1");
    me += m * e;
  }
  offset += rat(me, 24);
  if (!rat_is_integer(offset))
    throw std::invalid_argument("eta_expand: fractional leading exponent");
  long long delta = offset.get_num().get_si();
  if (delta < 0)
    throw std::invalid_argument("eta_expand: negative leading exponent");
  if (delta > precision)
    throw std::invalid_argument("eta_expand: precision below leading exponent");
  long long wp = precision - delta;
  QSeries acc(wp);
  acc.set_coeff(0, Rat(1));
  for (auto [m, e] : eq.factors)
    for (long long i = 0; i < e; ++i) acc = multiply_sparse(acc, euler_factor(m, wp));
  for (auto [m, e] : eq.factors)
    for (long long i = 0; i < -e; ++i) acc = divide_sparse(acc, euler_factor(m, wp));
  QSeries out(precision);
  for (long long n = 0; n <= wp; ++n) out.set_coeff(n + delta, acc.coeff(n));
  return out;
}

EtaQuotient c2_eta_quotient() {
  EtaQuotient eq;
  eq.factors = {{2, 2}, {1, -1}};
  eq.q_offset = rat(-1, 8);
  return eq;
}

EtaQuotient sc3_eta_quotient() {
  EtaQuotient eq;
  eq.factors = {{2, 2}, {3, 1}, {12, 1}, {1, -1}, {4, -1}, {6, -1}};
  eq.q_offset = rat(-1, 3);
  return eq;
}

IdentityReport verify_central_identity_with(const QSeries& h12,
                                            long long precision) {
  if (h12.precision() < 14 * precision)
    throw std::invalid_argument(
        "verify_central_identity_with: H_{1,2} precision below 14N");
  QSeries lhs = sc7_series(precision);
  QSeries rhs = rat(1, 4) * (u_op(h12, 14) - v_op(u_op(h12, 2), 7)).truncated(precision);
  IdentityReport rep;
  rep.checked_up_to = precision;
  rep.first_mismatch = QSeries::first_mismatch(lhs, rhs, precision);
  rep.pass = rep.first_mismatch < 0;
  if (!rep.pass) {
    std::ostringstream os;
    os << "coefficient mismatch at exponent " << rep.first_mismatch << ": "
       << lhs.coeff(rep.first_mismatch).get_str() << " vs "
       << rhs.coeff(rep.first_mismatch).get_str();
    rep.detail = os.str();
  }
  return rep;
}

IdentityReport verify_central_identity(long long precision,
                                       const class_numbers::HurwitzTable& table) {
  if (precision < 12)
    throw std::invalid_argument("verify_central_identity: precision must be >= 12");
  QSeries h12 = h_one_two(14 * precision, table);
  return verify_central_identity_with(h12, precision);
}

std::string dump(const QSeries& s) {
  std::ostringstream os;
  for (long long n = 0; n <= s.precision(); ++n) {
    const Rat& c = s.coeff(n);
    os << n << '\t' << c.get_num().get_str() << '/' << c.get_den().get_str()
       << '\n';
  }
  return os.str();
}

}  // namespace coreforms::qseries
