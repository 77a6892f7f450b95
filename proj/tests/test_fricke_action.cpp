#include <doctest.h>

#include <random>

#include "fricke/fricke_action.hpp"

using namespace fricke;

namespace {

Point3 pt(int x, int y, int z) { return {CosSum(x), CosSum(y), CosSum(z)}; }

Omega<CosSum> omega(const CosSum& wx, const CosSum& wy, const CosSum& wz, const Point3& seed) {
  return {wx, wy, wz, omega4_of(seed, wx, wy, wz)};
}

CosSum random_value(std::mt19937_64& rng) {
  static const int dens[] = {1, 2, 3, 4, 5, 6, 10, 12, 15};
  std::uniform_int_distribution<int> pick(0, 8);
  std::uniform_int_distribution<int> coeff(-2, 2);
  CosSum v(make_rational(coeff(rng), 1 + (pick(rng) % 3)));
  for (int i = 0; i < 2; ++i) {
    const int d = dens[pick(rng)];
    std::uniform_int_distribution<int> num(0, d);
    v += CosSum::cos(num(rng), d) * Rational(coeff(rng));
  }
  return v;
}

const std::vector<Point3> kExample1 = {pt(-1, 1, 1), pt(0, 1, 1), pt(0, 1, 0), pt(0, 0, 0),
                                       pt(0, 0, 1)};

int index_of(const std::vector<Point3>& pts, const Point3& p) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (same_point(pts[i], p)) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

TEST_CASE("example orbit transitions") {
  const auto w = omega(0, 1, 1, kExample1[0]);
  CHECK(w.w4.as_rational() == Rational(4));
  CHECK(same_point(apply(Color::x, kExample1[0], w), kExample1[1]));
  CHECK(same_point(apply(Color::y, kExample1[1], w), pt(0, 0, 1)));
  for (const auto& p : kExample1) {
    CHECK(fricke_residual(p, w).is_zero());
    for (Color c : kColors) CHECK(index_of(kExample1, apply(c, p, w)) >= 0);
  }
}

TEST_CASE("residual and omega4 examples") {
  CHECK(fricke_residual(pt(-1, 1, 1), Omega<CosSum>{0, 1, 1, 4}).is_zero());
  CHECK(fricke_residual(pt(1, 1, 1), Omega<CosSum>{0, 0, 0, 0}).is_zero());
  CHECK(omega4_of(pt(0, 0, 0), CosSum(0), CosSum(0), CosSum(0)).as_rational() == Rational(4));
  CHECK(omega4_of(pt(1, 1, 1), CosSum(1), CosSum(1), CosSum(1)).as_rational() == Rational(3));
  const auto w = omega(6, 6, 6, pt(2, 2, 2));
  CHECK(fricke_residual(apply(Color::x, pt(2, 2, 2), w), w).is_zero());
}

TEST_CASE("involutivity and residual invariance on random exact inputs") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 1000; ++trial) {
    const Point3 p{random_value(rng), random_value(rng), random_value(rng)};
    const Omega<CosSum> w = omega(random_value(rng), random_value(rng), random_value(rng), p);
    REQUIRE(fricke_residual(p, w).is_zero());
    for (Color c : kColors) {
      const Point3 q = apply(c, p, w);
      CHECK(same_point(apply(c, q, w), p));
      CHECK(fricke_residual(q, w).is_zero());
    }
  }
}

TEST_CASE("symmetries") {
  const auto& all = Symmetry::all();
  CHECK(all.size() == 24);
  const Point3 p{CosSum::cos(1, 5), CosSum(3), CosSum::cos(2, 7)};
  const Omega<CosSum> w = omega(1, 2, CosSum::cos(1, 3), p);
  for (const auto& t : all) {
    CHECK(t.sign[0] * t.sign[1] * t.sign[2] == 1);
    CHECK(fricke_residual(transform_point(t, p), transform_omega(t, w)).is_zero());
    CHECK(exactly_equal(transform_omega(t, w).w4, w.w4));
  }
  const Symmetry flip_xy{{0, 1, 2}, {-1, -1, 1}};
  const Point3 fp = transform_point(flip_xy, p);
  const Omega<CosSum> fw = transform_omega(flip_xy, w);
  CHECK(exactly_equal(fp.x, -p.x));
  CHECK(exactly_equal(fp.y, -p.y));
  CHECK(exactly_equal(fp.z, p.z));
  CHECK(exactly_equal(fw.wx, -w.wx));
  CHECK(exactly_equal(fw.wz, w.wz));
  const Symmetry cyclic{{2, 0, 1}, {1, 1, 1}};
  CHECK(same_point(transform_point(cyclic, transform_point(cyclic, transform_point(cyclic, p))), p));
}

TEST_CASE("canonical keys") {
  const auto w = omega(0, 1, 1, kExample1[0]);
  const OrbitKey key = canonical_key(kExample1, w);
  CHECK(key.values.size() == 4 + 15);
  for (const auto& t : Symmetry::all()) {
    std::vector<Point3> image;
    for (const auto& p : kExample1) image.push_back(transform_point(t, p));
    CHECK(canonical_key(image, transform_omega(t, w)) == key);
  }
  // a different orbit with the same size and omega4 gets a different key
  std::vector<Point3> moved = kExample1;
  moved[0] = pt(-1, 1, 2);
  CHECK_FALSE(canonical_key(moved, w) == key);
}

TEST_CASE("two-colored suborbits of the example orbit") {
  const auto w = omega(0, 1, 1, kExample1[0]);
  const auto yz = yz_suborbit(kExample1[1], w);
  CHECK(yz.shape == SuborbitShape::cycle);
  CHECK(yz.length == 2);
  REQUIRE(yz.points.size() == 4);
  for (int i : {1, 2, 3, 4}) CHECK(index_of(yz.points, kExample1[i]) >= 0);

  const auto xz = suborbit(kExample1[0], w, Color::x, Color::z);
  CHECK(xz.shape == SuborbitShape::line);
  CHECK(xz.length == 3);
  for (int i : {0, 1, 2}) CHECK(index_of(xz.points, kExample1[i]) >= 0);

  const auto xy = suborbit(kExample1[2], w, Color::x, Color::y);
  CHECK(xy.shape == SuborbitShape::line);
  CHECK(xy.length == 2);

  const auto fixed = yz_suborbit(kExample1[0], w);
  CHECK(fixed.shape == SuborbitShape::point);
  CHECK(fixed.length == 1);

  for (const auto& p : kExample1) {
    for (auto [a, b] : {std::pair{Color::y, Color::z}, std::pair{Color::x, Color::z},
                        std::pair{Color::x, Color::y}}) {
      const auto check = check_suborbit(suborbit(p, w, a, b), w);
      CHECK(check.ok());
    }
  }
}

TEST_CASE("suborbit closed forms on cosine data") {
  // X = 2cos(pi n/N) with generic omega gives a finite yz-suborbit of length N
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int N = 2; N <= 12; ++N) {
    for (int n = 1; n < N; ++n) {
      if (std::gcd(n, N) != 1) continue;
      const Point3 p{CosSum::cos(n, N), random_value(rng), random_value(rng)};
      const Omega<CosSum> w = omega(random_value(rng), random_value(rng), random_value(rng), p);
      const auto s = yz_suborbit(p, w);
      CHECK(s.length == static_cast<std::size_t>(N));
      const auto check = check_suborbit(s, w);
      CHECK(check.periodic);
      CHECK(check.cosine_label);
      CHECK(check.closed_form);
      CHECK(check.parity);
      CHECK(check.n == n);
      ++checked;
    }
  }
  CHECK(checked == 45);
}

TEST_CASE("degenerate recursion at X = +-2") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> v(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    for (int sign : {1, -1}) {
      CHECK(check_degenerate_recursion(sign, make_rational(v(rng), 2), make_rational(v(rng), 3),
                                       Rational(v(rng)), Rational(v(rng)), 12));
    }
  }
}
