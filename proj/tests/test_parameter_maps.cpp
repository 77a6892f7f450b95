#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "fricke/orbit_search.hpp"
#include "fricke/parameter_maps.hpp"

using namespace fricke;

namespace {

Theta th(long a, long b, long c, long d, long e, long f, long g, long h) {
  return {make_rational(a, b), make_rational(c, d), make_rational(e, f), make_rational(g, h)};
}

Theta random_theta(std::mt19937_64& rng) {
  static const int dens[] = {1, 2, 3, 4, 5, 6};
  std::uniform_int_distribution<int> pick(0, 5);
  Theta t;
  for (int i = 0; i < 4; ++i) {
    const int d = dens[pick(rng)];
    std::uniform_int_distribution<int> num(-2 * d, 2 * d);
    t[i] = make_rational(num(rng), d);
  }
  return t;
}

bool same_omega(const Omega<CosSum>& a, const Omega<CosSum>& b) {
  return exactly_equal(a.wx, b.wx) && exactly_equal(a.wy, b.wy) && exactly_equal(a.wz, b.wz) &&
         exactly_equal(a.w4, b.w4);
}

Omega<CosSum> row_omega(int row) {
  const GoldenOrbit g = golden_orbit(exceptional_table().at(row - 1));
  return g.omega;
}

// The ordered parameter triple equal to target among the 24 transforms of w.
std::optional<Omega<CosSum>> equivalent_form(const Omega<CosSum>& w, const Omega<CosSum>& target) {
  for (const Symmetry& s : Symmetry::all()) {
    const Omega<CosSum> v = transform_omega(s, w);
    if (same_omega(v, target)) return v;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("omega from theta") {
  SUBCASE("Klein parameters give (1,1,1) with w4 = 4") {
    const Omega<CosSum> w = omega_from_theta(th(2, 7, 2, 7, 2, 7, 4, 7));
    CHECK(exactly_equal(w.wx, CosSum(1)));
    CHECK(exactly_equal(w.wy, CosSum(1)));
    CHECK(exactly_equal(w.wz, CosSum(1)));
    CHECK(exactly_equal(w.w4, CosSum(4)));
  }
  SUBCASE("(0,0,0,1) gives the Cayley parameters") {
    const Omega<CosSum> w = omega_from_theta(th(0, 1, 0, 1, 0, 1, 1, 1));
    CHECK(w.wx.is_zero());
    CHECK(w.wy.is_zero());
    CHECK(w.wz.is_zero());
    CHECK(w.w4.is_zero());
  }
  SUBCASE("(1/5,2/5,1/5,2/5) is equivalent to table row 2") {
    const Omega<CosSum> w = omega_from_theta(th(1, 5, 2, 5, 1, 5, 2, 5));
    CHECK(exactly_equal(w.wx, CosSum(2)));
    CHECK(exactly_equal(w.wy, CosSum(3)));
    CHECK(exactly_equal(w.wz, CosSum(2)));
    CHECK(exactly_equal(4 - w.w4, CosSum(-3)));
    CHECK(equivalent_form(row_omega(2), w).has_value());
  }
}

TEST_CASE("xi cubic") {
  SUBCASE("Cayley parameters: roots 0, 0, 16") {
    const XiCubic k = xi_cubic({0, 0, 0, 0});
    CHECK(exactly_equal(k.a, CosSum(16)));
    CHECK(k.b.is_zero());
    CHECK(k.c.is_zero());
    const XiRoots r = xi_roots(th(0, 1, 0, 1, 0, 1, 1, 1));
    CHECK(exactly_equal(r.xi0, CosSum(16)));
    CHECK(k.evaluate(r.xi0).is_zero());
  }
  SUBCASE("Klein parameters: all three roots") {
    const Theta t = th(2, 7, 2, 7, 2, 7, 4, 7);
    const XiCubic k = xi_cubic(omega_from_theta(t));
    const XiRoots r = xi_roots(t);
    CHECK(k.evaluate(r.xi0).is_zero());
    CHECK(k.evaluate(r.xi_plus).is_zero());
    CHECK(k.evaluate(r.xi_minus).is_zero());
  }
  SUBCASE("roots match the coefficients for 100 random theta") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
      const Theta t = random_theta(rng);
      CAPTURE(t.to_string());
      const XiCubic k = xi_cubic(omega_from_theta(t));
      const XiRoots r = xi_roots(t);
      // elementary symmetric functions of the three roots
      CHECK(exactly_equal(r.xi0 + r.xi_plus + r.xi_minus, k.a));
      CHECK(exactly_equal(r.xi0 * r.xi_plus + r.xi0 * r.xi_minus + r.xi_plus * r.xi_minus, k.b));
      CHECK(exactly_equal(r.xi0 * r.xi_plus * r.xi_minus, k.c));
      // numeric cross-check of the trigonometric form
      double pc = 1, ps = 1;
      for (int j = 0; j < 4; ++j) {
        pc *= std::cos(M_PI * t[j].get_d());
        ps *= std::sin(M_PI * t[j].get_d());
      }
      CHECK(std::abs(r.xi_plus.to_double() - 8 * (1 + pc + ps)) < 1e-9);
      CHECK(std::abs(r.xi_minus.to_double() - 8 * (1 + pc - ps)) < 1e-9);
    }
  }
}

TEST_CASE("transformations act on theta as listed") {
  const Theta t = th(1, 2, 1, 3, 1, 5, 1, 7);
  CHECK(apply_bt(BT::s_x, t) == th(-1, 2, 1, 3, 1, 5, 1, 7));
  CHECK(apply_bt(BT::s_inf, t) == th(1, 2, 1, 3, 1, 5, 13, 7));
  CHECK(apply_bt(BT::P_xy, t) == th(1, 3, 1, 2, 1, 5, 1, 7));
  CHECK(apply_bt(BT::P_yz, t) == th(1, 2, 1, 5, 1, 3, 1, 7));
  CHECK(apply_bt(BT::r_x, t) == th(-6, 7, 1, 5, 1, 3, 3, 2));
  const Rational d = t.delta();
  CHECK(apply_bt(BT::s_delta, t) == Theta{t.tx - d, t.ty - d, t.tz - d, t.tinf - d});
  const Omega<CosSum> w{1, 2, 3, 4};
  const Omega<CosSum> px = apply_bt(BT::P_xy, w);
  CHECK(exactly_equal(px.wx, CosSum(2)));
  CHECK(exactly_equal(px.wy, CosSum(1)));
  const Omega<CosSum> rx = apply_bt(BT::r_x, w);
  CHECK(exactly_equal(rx.wy, CosSum(-2)));
  CHECK(exactly_equal(rx.wz, CosSum(-3)));
  CHECK(parse_bt("s_delta") == BT::s_delta);
  CHECK_FALSE(parse_bt("s_q").has_value());
  CHECK(Theta::parse("(1/2, 1/3,1/5,1/7)") == t);
  CHECK_THROWS(Theta::parse("1,2,3"));
}

TEST_CASE("omega columns agree with omega from theta for 1000 random theta") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const Theta t = random_theta(rng);
    const Omega<CosSum> w = omega_from_theta(t);
    const BT b = kAllBT[static_cast<std::size_t>(i) % kAllBT.size()];
    CAPTURE(t.to_string());
    CAPTURE(bt_name(b));
    CHECK(same_omega(omega_from_theta(apply_bt(b, t)), apply_bt(b, w)));
    CHECK(exactly_equal(apply_bt(b, w).w4, w.w4));
  }
}

TEST_CASE("involutions") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 1000; ++i) {
    const Theta t = random_theta(rng);
    for (BT b : {BT::s_x, BT::s_y, BT::s_z, BT::s_inf, BT::s_delta, BT::r_x, BT::r_y, BT::r_z,
                 BT::P_xy, BT::P_yz}) {
      CHECK(apply_bt(b, apply_bt(b, t)) == t);
    }
  }
}

TEST_CASE("shift operators translate by 2") {
  CHECK(shift_operator(ShiftAxis::x, th(0, 1, 0, 1, 0, 1, 0, 1)) == th(2, 1, 0, 1, 0, 1, 0, 1));
  CHECK(shift_operator(ShiftAxis::inf, th(1, 2, 1, 3, 1, 5, 1, 7)) == th(1, 2, 1, 3, 1, 5, 15, 7));
  std::mt19937_64 rng(17);
  for (int i = 0; i < 50; ++i) {
    const Theta t = random_theta(rng);
    for (ShiftAxis a : {ShiftAxis::x, ShiftAxis::y, ShiftAxis::z, ShiftAxis::inf}) {
      Theta expect = t;
      expect[static_cast<int>(a)] += 2;
      CHECK(apply_word(shift_word(a), t) == expect);
    }
  }
}

TEST_CASE("affine D4 relatedness") {
  const Theta t = th(2, 7, 2, 7, 2, 7, 4, 7);
  CHECK(d4_related(t, t));
  CHECK(d4_related(t, apply_bt(BT::s_delta, t)));
  CHECK(d4_related(t, apply_bt(BT::s_x, apply_bt(BT::s_delta, apply_bt(BT::s_y, t)))));
  CHECK(d4_related(t, shift_operator(ShiftAxis::z, t)));
  CHECK_FALSE(d4_related(t, th(1, 3, 1, 3, 1, 3, 1, 3)));
  // r_x is outside the affine D4 group but maps omega to an equivalent triple
  const Theta r = apply_bt(BT::r_x, t);
  CHECK(equivalent_form(omega_from_theta(t), omega_from_theta(r)).has_value());
}

TEST_CASE("theta recovery for table rows") {
  struct Case {
    int row;
    Theta target;
  };
  const Case cases[] = {{2, th(1, 5, 2, 5, 1, 5, 2, 5)},
                        {8, th(2, 7, 2, 7, 2, 7, 4, 7)},
                        {31, th(1, 3, 1, 3, 1, 3, 1, 3)},
                        {45, th(1, 12, 1, 12, 1, 12, 11, 12)}};
  for (const Case& c : cases) {
    CAPTURE(c.row);
    const auto form = equivalent_form(row_omega(c.row), omega_from_theta(c.target));
    REQUIRE(form.has_value());
    const auto found = theta_candidates(*form, 30);
    CHECK(std::find(found.begin(), found.end(), c.target) != found.end());
    for (const Theta& t : found) {
      CHECK(same_omega(omega_from_theta(t), *form));
      CHECK(d4_related(t, found.front()));
    }
  }
}

TEST_CASE("every table row has rational theta with denominators up to 30") {
  for (const TableRow& row : exceptional_table()) {
    CAPTURE(row.row);
    CHECK_FALSE(theta_candidates(row_omega(row.row), 30).empty());
  }
}
