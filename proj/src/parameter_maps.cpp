#include "fricke/parameter_maps.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fricke {

namespace {

CosSum cos_of(const Rational& r) {
  return CosSum::cos(r.get_num().get_si(), r.get_den().get_si());
}

Rational floor_of(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return Rational(q);
}

// r mod m, in [0, m)
Rational mod(const Rational& r, const Rational& m) { return r - m * floor_of(r / m); }

}  // namespace

bool operator<(const Theta& a, const Theta& b) {
  for (int i = 0; i < 4; ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::string Theta::to_string() const {
  std::ostringstream out;
  out << '(' << tx.get_str() << ',' << ty.get_str() << ',' << tz.get_str() << ','
      << tinf.get_str() << ')';
  return out.str();
}

Theta Theta::parse(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == '(' || c == ')' || c == ' '; }),
          s.end());
  Theta t;
  std::istringstream in(s);
  std::string part;
  int i = 0;
  while (std::getline(in, part, ',')) {
    if (i >= 4 || part.empty()) throw std::invalid_argument("theta needs four rationals: " + s);
    Rational q;
    if (q.set_str(part, 10) != 0) throw std::invalid_argument("bad rational: " + part);
    q.canonicalize();
    t[i++] = q;
  }
  if (i != 4) throw std::invalid_argument("theta needs four rationals: " + s);
  return t;
}

PTuple p_of(const Theta& t) { return {cos_of(t.tx), cos_of(t.ty), cos_of(t.tz), cos_of(t.tinf)}; }

Omega<CosSum> omega_from_p(const PTuple& p) {
  Omega<CosSum> w;
  w.wx = (p.px * p.pinf + p.py * p.pz).reduced();
  w.wy = (p.py * p.pinf + p.pz * p.px).reduced();
  w.wz = (p.pz * p.pinf + p.px * p.py).reduced();
  w.w4 = (p.px * p.px + p.py * p.py + p.pz * p.pz + p.pinf * p.pinf + p.px * p.py * p.pz * p.pinf)
             .reduced();
  return w;
}

Omega<CosSum> omega_from_theta(const Theta& t) { return omega_from_p(p_of(t)); }

CosSum XiCubic::evaluate(const CosSum& xi) const {
  return (xi * xi * xi - a * xi * xi + b * xi - c).reduced();
}

XiCubic xi_cubic(const Omega<CosSum>& w) {
  const CosSum sq = w.wx * w.wx + w.wy * w.wy + w.wz * w.wz;
  XiCubic k;
  k.a = (w.w4 + 16).reduced();
  k.b = (w.wx * w.wy * w.wz - Rational(4) * sq + Rational(32) * w.w4).reduced();
  k.c = (w.wx * w.wx * w.wy * w.wy + w.wx * w.wx * w.wz * w.wz + w.wy * w.wy * w.wz * w.wz -
         Rational(4) * w.w4 * sq + Rational(16) * w.w4 * w.w4)
            .reduced();
  return k;
}

XiRoots xi_roots(const Theta& t) {
  const PTuple p = p_of(t);
  const CosSum cos_prod = p.px * p.py * p.pz * p.pinf;  // 16 prod cos
  const Rational half = make_rational(1, 2);
  // sin(pi a) = cos(pi (a - 1/2))
  const CosSum sin_prod = cos_of(t.tx - half) * cos_of(t.ty - half) * cos_of(t.tz - half) *
                          cos_of(t.tinf - half);  // 16 prod sin
  XiRoots r;
  r.xi0 = (p.px * p.px + p.py * p.py + p.pz * p.pz + p.pinf * p.pinf).reduced();
  r.xi_plus = (8 + make_rational(1, 2) * (cos_prod + sin_prod)).reduced();
  r.xi_minus = (8 + make_rational(1, 2) * (cos_prod - sin_prod)).reduced();
  return r;
}

// ---------------------------------------------------------------------------

std::string bt_name(BT b) {
  static const char* names[] = {"s_x", "s_y", "s_z", "s_inf", "s_delta",
                                "r_x", "r_y", "r_z", "P_xy",  "P_yz"};
  return names[static_cast<int>(b)];
}

std::optional<BT> parse_bt(std::string_view name) {
  for (BT b : kAllBT) {
    if (bt_name(b) == name) return b;
  }
  return std::nullopt;
}

Theta apply_bt(BT b, const Theta& t) {
  switch (b) {
    case BT::s_x:
      return {-t.tx, t.ty, t.tz, t.tinf};
    case BT::s_y:
      return {t.tx, -t.ty, t.tz, t.tinf};
    case BT::s_z:
      return {t.tx, t.ty, -t.tz, t.tinf};
    case BT::s_inf:
      return {t.tx, t.ty, t.tz, 2 - t.tinf};
    case BT::s_delta: {
      const Rational d = t.delta();
      return {t.tx - d, t.ty - d, t.tz - d, t.tinf - d};
    }
    case BT::r_x:
      return {t.tinf - 1, t.tz, t.ty, t.tx + 1};
    case BT::r_y:
      return {t.tz, t.tinf - 1, t.tx, t.ty + 1};
    case BT::r_z:
      return {t.ty, t.tx, t.tinf - 1, t.tz + 1};
    case BT::P_xy:
      return {t.ty, t.tx, t.tz, t.tinf};
    case BT::P_yz:
      return {t.tx, t.tz, t.ty, t.tinf};
  }
  throw std::logic_error("unknown transformation");
}

Omega<CosSum> apply_bt(BT b, const Omega<CosSum>& w) {
  switch (b) {
    case BT::r_x:
      return {w.wx, -w.wy, -w.wz, w.w4};
    case BT::r_y:
      return {-w.wx, w.wy, -w.wz, w.w4};
    case BT::r_z:
      return {-w.wx, -w.wy, w.wz, w.w4};
    case BT::P_xy:
      return {w.wy, w.wx, w.wz, w.w4};
    case BT::P_yz:
      return {w.wx, w.wz, w.wy, w.w4};
    default:
      return w;
  }
}

Theta apply_word(const std::vector<BT>& word, const Theta& t) {
  Theta out = t;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = apply_bt(*it, out);
  return out;
}

std::vector<BT> shift_word(ShiftAxis axis) {
  // t_nu = s_nu s_delta (s_a s_b s_c s_delta)^2 with {a,b,c} the other three
  static const std::array<BT, 4> single{BT::s_x, BT::s_y, BT::s_z, BT::s_inf};
  const int k = static_cast<int>(axis);
  std::vector<BT> inner;
  for (int i = 0; i < 4; ++i) {
    if (i != k) inner.push_back(single[i]);
  }
  inner.push_back(BT::s_delta);
  std::vector<BT> word{single[k], BT::s_delta};
  for (int rep = 0; rep < 2; ++rep) word.insert(word.end(), inner.begin(), inner.end());
  return word;
}

Theta shift_operator(ShiftAxis axis, const Theta& t) {
  Theta out = apply_word(shift_word(axis), t);
  Theta expect = t;
  expect[static_cast<int>(axis)] += 2;
  if (!(out == expect)) throw std::logic_error("shift word does not translate by 2");
  return out;
}

Theta reduce_mod_lattice(const Theta& t) {
  Theta r = t;
  // (1,1,1,1) is in the lattice: bring tx into [0,1) first, then reduce mod 2
  const Rational shift = floor_of(r.tx);
  for (int i = 0; i < 4; ++i) r[i] -= shift;
  for (int i = 1; i < 4; ++i) r[i] = mod(r[i], 2);
  return r;
}

bool d4_related(const Theta& a, const Theta& b) {
  constexpr std::size_t kCap = 1 << 20;
  static const std::array<BT, 5> gens{BT::s_x, BT::s_y, BT::s_z, BT::s_inf, BT::s_delta};
  const Theta target = reduce_mod_lattice(b);
  std::set<Theta> seen{reduce_mod_lattice(a)};
  std::vector<Theta> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    const Theta cur = frontier.back();
    frontier.pop_back();
    if (cur == target) return true;
    for (BT g : gens) {
      Theta next = reduce_mod_lattice(apply_bt(g, cur));
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
    if (seen.size() > kCap) throw std::runtime_error("affine orbit exceeds the search cap");
  }
  return false;
}

// ---------------------------------------------------------------------------

std::vector<Theta> theta_candidates(const Omega<CosSum>& w, int den_bound) {
  if (den_bound < 1) throw std::invalid_argument("denominator bound must be positive");
  struct Angle {
    Rational r;
    double v;
  };
  std::vector<Angle> angles;
  for (int d = 1; d <= den_bound; ++d) {
    for (int n = 0; n <= d; ++n) {
      if (std::gcd(n, d) != 1) continue;
      angles.push_back({make_rational(n, d), 2 * std::cos(M_PI * n / d)});
    }
  }
  std::sort(angles.begin(), angles.end(), [](const Angle& a, const Angle& b) { return a.v < b.v; });
  auto find = [&](double v) -> const Angle* {
    auto it = std::lower_bound(angles.begin(), angles.end(), v - 1e-9,
                               [](const Angle& a, double x) { return a.v < x; });
    if (it != angles.end() && std::abs(it->v - v) < 1e-9) return &*it;
    return nullptr;
  };
  const double wx = w.wx.to_double(), wy = w.wy.to_double(), wz = w.wz.to_double();
  const double w4 = w.w4.to_double();

  std::set<Theta> out;
  auto consider = [&](const Angle& x, const Angle& y, const Angle& z, const Angle& inf) {
    if (std::abs(x.v * inf.v + y.v * z.v - wx) > 1e-7) return;
    if (std::abs(y.v * inf.v + z.v * x.v - wy) > 1e-7) return;
    if (std::abs(z.v * inf.v + x.v * y.v - wz) > 1e-7) return;
    const double s = x.v * x.v + y.v * y.v + z.v * z.v + inf.v * inf.v + x.v * y.v * z.v * inf.v;
    if (std::abs(s - w4) > 1e-7) return;
    const Theta t{x.r, y.r, z.r, inf.r};
    const Omega<CosSum> e = omega_from_theta(t);
    if (exactly_equal(e.wx, w.wx) && exactly_equal(e.wy, w.wy) && exactly_equal(e.wz, w.wz) &&
        exactly_equal(e.w4, w.w4)) {
      out.insert(t);
    }
  };
  for (const Angle& x : angles) {
    for (const Angle& inf : angles) {
      // (py, pz) solve  inf*py + x*pz = wY,  x*py + inf*pz = wZ
      const double det = inf.v * inf.v - x.v * x.v;
      if (std::abs(det) > 1e-6) {
        const Angle* y = find((wy * inf.v - wz * x.v) / det);
        const Angle* z = find((wz * inf.v - wy * x.v) / det);
        if (y && z) consider(x, *y, *z, inf);
        continue;
      }
      for (const Angle& y : angles) {
        if (std::abs(x.v) > 1e-6) {
          if (const Angle* z = find((wy - y.v * inf.v) / x.v)) consider(x, y, *z, inf);
        } else {
          for (const Angle& z : angles) consider(x, y, z, inf);
        }
      }
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace fricke
