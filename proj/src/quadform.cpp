#include "coreforms/quadform.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "coreforms/class_numbers.hpp"

namespace coreforms::quadform {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

std::array<long long, 3> cross(const std::array<long long, 3>& a,
                               const std::array<long long, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

}  // namespace

bool QuadForm::is_reduced() const {
  if (!(std::abs(b) <= a && a <= c)) return false;
  if ((std::abs(b) == a || a == c) && b < 0) return false;
  return true;
}

QuadForm reduce(QuadForm f) {
  if (!f.positive_definite())
    throw std::invalid_argument("reduce: form must be positive definite");
  for (;;) {
    if (f.b > f.a || f.b <= -f.a) {
      // translate b into (-a, a]
      long long m = floor_div(f.a + f.b, 2 * f.a);
      f.c += f.a * m * m - f.b * m;
      f.b -= 2 * f.a * m;
      if (f.b == -f.a) {  // boundary landed at -a: shift once more
        f.c += f.a + f.b;
        f.b += 2 * f.a;
      }
    }
    if (f.a > f.c) {
      std::swap(f.a, f.c);
      f.b = -f.b;
      continue;
    }
    break;
  }
  if ((f.a == f.c || f.b == -f.a) && f.b < 0) f.b = -f.b;
  return f;
}

std::vector<QuadForm> class_list(long long D) {
  if (D >= 0 || (((D % 4) + 4) % 4 != 0 && ((D % 4) + 4) % 4 != 1))
    throw std::invalid_argument("class_list: D must be a negative discriminant");
  long long absD = -D;
  std::vector<QuadForm> out;
  for (long long a = 1; 3 * a * a <= absD; ++a) {
    for (long long b = absD % 2; b <= a; b += 2) {
      long long num = b * b + absD;
      if (num % (4 * a)) continue;
      long long c = num / (4 * a);
      if (c < a) continue;
      out.push_back({a, b, c});
      if (b > 0 && b < a && a < c) out.push_back({a, -b, c});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

QuadForm principal_form(long long D) {
  long long m4 = ((D % 4) + 4) % 4;
  if (m4 == 0) return {1, 0, -D / 4};
  if (m4 == 1) return {1, 1, (1 - D) / 4};
  throw std::invalid_argument("principal_form: D must be a discriminant");
}

bool p_primitive(const QuadForm& f, long long p) {
  return f.content() % p != 0;
}

long long conductor(long long D) {
  return class_numbers::fundamental_decompose(D).conductor;
}

bool p_totally_imprimitive(const QuadForm& f, long long p) {
  long long g = f.content();
  long long fc = conductor(f.disc());
  int vg = 0, vf = 0;
  while (g % p == 0) {
    g /= p;
    ++vg;
  }
  while (fc % p == 0) {
    fc /= p;
    ++vf;
  }
  return vg == vf;
}

std::vector<long long> assigned_character_moduli(long long D) {
  std::vector<long long> mods;
  long long absD = D < 0 ? -D : D;
  for (auto [p, e] : factorize(absD))
    if (p % 2 == 1) mods.push_back(p);
  if (((D % 4) + 4) % 4 == 0) {
    long long n = absD / 4;
    long long n8 = n % 8;
    if (n8 == 1 || n8 == 5 || n8 == 4) {
      mods.push_back(-4);
    } else if (n8 == 2) {
      mods.push_back(-8);
    } else if (n8 == 6) {
      mods.push_back(8);
    } else if (n8 == 0) {
      mods.push_back(-4);
      mods.push_back(8);
    }
    // n = 3,7 (mod 8): no 2-adic character
  }
  return mods;
}

long long represented_unit(const QuadForm& f) {
  if (f.content() != 1)
    throw std::invalid_argument("represented_unit: form must be primitive");
  long long D = f.disc();
  long long absD = D < 0 ? -D : D;
  // CRT a pair (u, v) hitting a unit mod every prime of D
  long long u = 1, v = 0, mod = 1;
  for (auto [p, e] : factorize(absD)) {
    long long up = 0, vp = 0;
    if (f.a % p != 0) {
      up = 1;
      vp = 0;
    } else if (f.c % p != 0) {
      up = 0;
      vp = 1;
    } else {
      up = 1;
      vp = 1;  // value a + b + c = b (mod p), nonzero by primitivity
    }
    // u = up (mod p), keep previous congruences (mod mod)
    long long x, y;
    ext_gcd(mod, p, x, y);
    auto crt = [&](long long prev, long long target) {
      long long diff = ((target - prev) % p + p) % p;
      long long res = prev + mod * ((diff * ((x % p + p) % p)) % p);
      return res % (mod * p);
    };
    u = crt(u, up);
    v = crt(v, vp);
    mod *= p;
  }
  long long m = f.a * u * u + f.b * u * v + f.c * v * v;
  long long reduced = ((m % absD) + absD) % absD;
  if (reduced == 0 || gcd_ll(reduced, absD) != 1)
    throw std::logic_error("represented_unit: CRT construction failed");
  return reduced;
}

bool GenusLabel::is_principal() const {
  if (content != 1) return false;
  for (auto [mod, val] : chars)
    if (val != 1) return false;
  return true;
}

std::string GenusLabel::fingerprint() const {
  std::ostringstream os;
  os << "D" << disc << ":g" << content << ":";
  for (auto [mod, val] : chars) os << (val > 0 ? '+' : '-');
  return os.str();
}

GenusLabel genus_of(const QuadForm& f) {
  if (!f.positive_definite())
    throw std::invalid_argument("genus_of: form must be positive definite");
  GenusLabel label;
  long long g = f.content();
  QuadForm prim{f.a / g, f.b / g, f.c / g};
  label.content = g;
  label.disc = prim.disc();
  label.witness = represented_unit(prim);
  for (long long mod : assigned_character_moduli(label.disc)) {
    int val = (mod > 0 && mod % 2 == 1) ? kronecker(label.witness, mod)
                                        : kronecker(mod, label.witness);
    label.chars.emplace_back(mod, val);
  }
  return label;
}

std::set<long long> represented_units_box(const QuadForm& f) {
  long long absD = -f.disc();
  if (absD <= 0) throw std::invalid_argument("represented_units_box: disc");
  std::set<long long> out;
  for (long long u = 0; u < absD; ++u)
    for (long long v = 0; v < absD; ++v) {
      long long val = f.a * u * u + f.b * u * v + f.c * v * v;
      val = ((val % absD) + absD) % absD;
      if (val != 0 && gcd_ll(val, absD) == 1) out.insert(val);
    }
  return out;
}

VectorPair complete_primitive_vector(const std::array<long long, 3>& w) {
  long long x = w[0], y = w[1], z = w[2];
  if (gcd_ll(gcd_ll(x, y), z) != 1)
    throw std::invalid_argument("complete_primitive_vector: w not primitive");
  std::array<long long, 3> p{}, q{};
  if (x == 0 && y == 0) {
    // z = +-1
    p = {1, 0, 0};
    q = {0, z, 0};
  } else {
    long long s, t;
    long long g1 = ext_gcd(x, y, s, t);  // s x + t y = g1
    long long uu, vv;
    ext_gcd(g1, z, uu, vv);  // uu g1 + vv z = 1
    p = {-t, s, 0};
    q = {-vv * (x / g1), -vv * (y / g1), uu};
  }
  VectorPair mn;
  mn.m = cross(q, w);
  mn.n = cross(w, p);
  if (cross(mn.m, mn.n) != w)
    throw std::logic_error("complete_primitive_vector: completion failed");
  return mn;
}

QuadForm triple_to_form(const Triple& w) {
  long long g = gcd_ll(gcd_ll(w.x, w.y), w.z);
  if (g == 0) throw std::invalid_argument("triple_to_form: zero triple");
  std::array<long long, 3> wp{w.x / g, w.y / g, w.z / g};
  VectorPair mn = complete_primitive_vector(wp);
  const auto& m = mn.m;
  const auto& n = mn.n;
  QuadForm f{m[0] * m[0] + m[1] * m[1] + m[2] * m[2],
             2 * (m[0] * n[0] + m[1] * n[1] + m[2] * n[2]),
             n[0] * n[0] + n[1] * n[1] + n[2] * n[2]};
  f = QuadForm{g * f.a, g * f.b, g * f.c};
  if (f.disc() != -4 * w.norm())
    throw std::logic_error("triple_to_form: discriminant mismatch");
  return reduce(f);
}

QuadForm phi(const Partition& p) {
  if (!partitions::is_t_core(p, 7) || !partitions::is_self_conjugate(p))
    throw std::invalid_argument("phi: partition must be a self-conjugate 7-core");
  auto list = abacus::list_from_partition(p, 7);
  auto t = abacus::sc7_triple_from_list(list);
  return triple_to_form(Triple{t[0], t[1], t[2]});
}

std::vector<PhiRecord> phi_records(long long n) {
  std::vector<PhiRecord> out;
  for (const auto& fam : abacus::sc7_families(n)) {
    PhiRecord rec;
    rec.partition = abacus::family_partition(fam);
    rec.abacus_counts = abacus::abacus_from_partition(rec.partition, 7);
    rec.list = abacus::list_from_partition(rec.partition, 7);
    auto t = abacus::sc7_triple_from_list(rec.list);
    rec.triple = Triple{t[0], t[1], t[2]};
    rec.form = triple_to_form(rec.triple);
    out.push_back(std::move(rec));
  }
  std::sort(out.begin(), out.end(), [](const PhiRecord& a, const PhiRecord& b) {
    return a.partition < b.partition;
  });
  return out;
}

ThmMainReport verify_theorem_main(long long n) {
  ThmMainReport rep;
  rep.n = n;
  auto dn = sc7::dn_nu(n);
  rep.r_statement = dn.r_count;
  rep.fiber_expected = dn.nu * rat(1LL << dn.r_count, 1);

  auto records = phi_records(n);
  rep.sc7_count = static_cast<long long>(records.size());
  if (records.empty()) {
    rep.vacuous = true;
    rep.pass = true;
    rep.detail = "no self-conjugate 7-cores; vacuous";
    return rep;
  }

  long long D = -28 * n - 56;
  std::map<QuadForm, long long> fiber;
  bool all7 = true, all2 = true;
  for (const auto& r : records) {
    ++fiber[r.form];
    if (!p_primitive(r.form, 7)) all7 = false;
    if (!p_totally_imprimitive(r.form, 2)) all2 = false;
    if (r.form.disc() != D)
      throw std::logic_error("verify_theorem_main: image discriminant wrong");
  }
  rep.all_7_primitive = all7;
  rep.all_2_totally_imprimitive = all2;

  GenusLabel image_label = genus_of(fiber.begin()->first);
  rep.single_genus = true;
  for (const auto& [form, count] : fiber)
    if (!genus_of(form).same_genus(image_label)) rep.single_genus = false;
  rep.non_principal = !image_label.is_principal();
  rep.genus_fingerprint = image_label.fingerprint();
  rep.genus_exponent = static_cast<int>(
      assigned_character_moduli(image_label.disc).size()) - 1;

  // every class of disc D carrying the image label
  long long in_genus = 0;
  long long uniform = -1;
  bool fibers_uniform = true;
  for (const auto& form : class_list(D)) {
    if (!genus_of(form).same_genus(image_label)) continue;
    ++in_genus;
    long long count = fiber.count(form) ? fiber.at(form) : 0;
    if (uniform < 0)
      uniform = count;
    else if (count != uniform)
      fibers_uniform = false;
  }
  rep.classes_in_genus = in_genus;
  rep.classes_hit = static_cast<long long>(fiber.size());
  rep.fibers_uniform = fibers_uniform;
  rep.fiber_observed = fibers_uniform ? uniform : -1;
  rep.fiber_matches_statement =
      fibers_uniform && rep.fiber_expected == rat(uniform, 1);
  rep.pass = rep.single_genus && rep.non_principal && rep.all_7_primitive &&
             rep.all_2_totally_imprimitive && rep.fibers_uniform &&
             rep.fiber_matches_statement;
  std::ostringstream os;
  os << "sc7=" << rep.sc7_count << " classes_in_genus=" << in_genus
     << " hit=" << rep.classes_hit << " fiber_obs=" << rep.fiber_observed
     << " fiber_stmt=" << rep.fiber_expected.get_str()
     << " genus=" << rep.genus_fingerprint;
  rep.detail = os.str();
  return rep;
}

}  // namespace coreforms::quadform
