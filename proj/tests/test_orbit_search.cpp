#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "fricke/orbit_search.hpp"

using namespace fricke;

namespace {

Point3 pt(int x, int y, int z) { return {CosSum(x), CosSum(y), CosSum(z)}; }

bool contains(const std::vector<Point3>& pts, const Point3& p) {
  return std::any_of(pts.begin(), pts.end(), [&](const Point3& q) { return same_point(p, q); });
}

// Independent count of 2cos(pi n/N) values with 0 < n < N, gcd = 1, N in the list.
std::size_t totient_count(const std::vector<int>& dens) {
  std::size_t total = 0;
  for (int N : dens) {
    for (int n = 1; n < N; ++n) total += std::gcd(n, N) == 1;
  }
  return total;
}

}  // namespace

TEST_CASE("dictionary sizes match an independent totient count") {
  const auto& d = dictionaries();
  std::vector<int> upto10, upto15;
  for (int N = 2; N <= 10; ++N) upto10.push_back(N);
  for (int N = 2; N <= 15; ++N) upto15.push_back(N);
  CHECK(d.s1.size() == totient_count(upto10));
  CHECK(d.s3.size() == totient_count(upto15));
  std::vector<int> with21 = upto15;
  with21.push_back(21);
  CHECK(d.s4.size() == totient_count(with21));
  CHECK(d.s1.size() == 31);
  CHECK(d.s2.size() == 46);
  CHECK(d.s3.size() == 71);
  CHECK(d.s4.size() == 83);
  for (const Dictionary* s : {&d.s1, &d.s2, &d.s3, &d.s4}) CHECK(s->min_gap() > 1e-3);
}

TEST_CASE("S2 adds odd numerators for N = 11, 15, 21 to S1") {
  const auto& d = dictionaries();
  std::size_t extra = 0;
  for (const auto& e : d.s2.entries) {
    const bool in_s1 = std::any_of(d.s1.entries.begin(), d.s1.entries.end(),
                                   [&](const DictEntry& f) { return f.angle == e.angle; });
    if (in_s1) continue;
    ++extra;
    CHECK((e.angle.den == 11 || e.angle.den == 15 || e.angle.den == 21));
    CHECK(e.angle.num % 2 == 1);
  }
  CHECK(extra == 15);
}

TEST_CASE("dictionary entries evaluate to their angles") {
  for (const auto& e : dictionaries().s4.entries) {
    CHECK(std::abs(e.fvalue - 2 * std::cos(M_PI * e.angle.to_double())) < 1e-12);
    CHECK(std::abs(e.value.to_double() - e.fvalue) < 1e-12);
    REQUIRE(dictionaries().s4.match(e.fvalue + 1e-10, 1e-8).has_value());
  }
  CHECK_FALSE(dictionaries().s4.match(0.123456, 1e-8).has_value());
}

TEST_CASE("class arena sizes") {
  CHECK(class_size(1) == 48618911u);
  CHECK(class_size(2) == 6213878u);
  CHECK(class_size(3) == 54671104u);
  CHECK(class_size(4) == 8197910u);
  CHECK_THROWS(class_size(5));
}

TEST_CASE("configurations round-trip their index and seed consistently") {
  for (int cls = 1; cls <= 4; ++cls) {
    const std::uint64_t n = class_size(cls);
    for (std::uint64_t i : {std::uint64_t{0}, n / 7, n / 3, n / 2, n - 1}) {
      const GenConfig g = config_at(cls, i);
      CHECK(g.cls == cls);
      CHECK(g.index == i);
      Vec3<double> r;
      Omega<double> w;
      if (!seed_float(g, r, w)) continue;
      Point3 er;
      Omega<CosSum> ew;
      seed_exact(g, er, ew);
      for (int k = 0; k < 3; ++k) CHECK(std::abs(er[k].to_double() - r[k]) < 1e-9);
      CHECK(std::abs(ew.wx.to_double() - w.wx) < 1e-9);
      CHECK(std::abs(ew.w4.to_double() - w.w4) < 1e-9);
      CHECK(fricke_residual(er, ew).is_zero());
    }
  }
}

TEST_CASE("the five-point orbit with omega (0,1,1)") {
  const Omega<CosSum> w{0, 1, 1, 4};
  const Point3 seed = pt(-1, 1, 1);
  REQUIRE(fricke_residual(seed, w).is_zero());
  auto rec = close_orbit(seed, w, false);
  REQUIRE(rec);
  CHECK(rec->size() == 5);
  for (const Point3& p : {pt(-1, 1, 1), pt(0, 1, 1), pt(0, 1, 0), pt(0, 0, 0), pt(0, 0, 1)}) {
    CHECK(contains(rec->points, p));
  }
  CHECK(verify_orbit(*rec));

  FloatCloser closer;
  FloatOrbit fo;
  CHECK(closer.close({-1, 1, 1}, {0, 1, 1, 4}, &fo) == CloseStatus::finite);
  CHECK(fo.points.size() == 5);
}

TEST_CASE("closure with search rules stops on coordinates outside the dictionaries") {
  const CosSum t = CosSum::parse("1/3");
  const Point3 seed{t, t, t};
  const Omega<CosSum> w{0, 0, 0, CosSum::parse("98/27")};
  REQUIRE(fricke_residual(seed, w).is_zero());
  CHECK_FALSE(close_orbit(seed, w, true).has_value());
  FloatCloser closer;
  CHECK(closer.close({1.0 / 3, 1.0 / 3, 1.0 / 3}, {0, 0, 0, 98.0 / 27}) == CloseStatus::not_finite);
}

TEST_CASE("Cayley parameters trigger the bailout") {
  FloatCloser closer;
  const double c = 2 * std::cos(M_PI / 3);
  CHECK(closer.close({-2 * std::cos(2 * M_PI / 3), c, c}, {0, 0, 0, 0}) == CloseStatus::cayley);
  for (std::uint64_t i = 0; i < class_size(4); i += class_size(4) / 50) {
    const GenConfig g = config_at(4, i);
    Vec3<double> r;
    Omega<double> w;
    if (!seed_float(g, r, w)) continue;
    if (std::abs(w.wx) < 1e-9 && std::abs(w.wy) < 1e-9 && std::abs(w.wz) < 1e-9) {
      CHECK(closer.close(r, w) == CloseStatus::cayley);
    }
  }
}

TEST_CASE("Cayley orbits") {
  const Omega<CosSum> zero{0, 0, 0, 0};
  SUBCASE("(1/3,1/3): (1,1,1) and its three one-step images") {
    // x, y, z images are -2cos pi(rY-rZ), 2cos pi(rY+2rZ), 2cos pi(2rY+rZ), all -2 here
    const OrbitRecord rec = cayley_orbit(make_rational(1, 3), make_rational(1, 3));
    CHECK(rec.size() == 4);
    for (const Point3& p : {pt(1, 1, 1), pt(-2, 1, 1), pt(1, -2, 1), pt(1, 1, -2)}) {
      CHECK(contains(rec.points, p));
    }
    for (const auto& p : rec.points) CHECK(fricke_residual(p, zero).is_zero());
  }
  SUBCASE("(1/2,1/2) gives (+-2,0,0)") {
    const OrbitRecord rec = cayley_orbit(make_rational(1, 2), make_rational(1, 2));
    CHECK(rec.size() == 2);
    CHECK(contains(rec.points, pt(2, 0, 0)));
    CHECK(contains(rec.points, pt(-2, 0, 0)));
  }
  SUBCASE("(1/2,1/3): every coordinate is 2cos of an angle with denominator dividing 6") {
    const OrbitRecord rec = cayley_orbit(make_rational(1, 2), make_rational(1, 3));
    CHECK(rec.size() > 1);
    for (const auto& p : rec.points) {
      CHECK(fricke_residual(p, zero).is_zero());
      for (int i = 0; i < 3; ++i) {
        auto a = p[i].as_single_cos();
        REQUIRE(a.has_value());
        CHECK(6 % a->den == 0);
      }
    }
  }
}

TEST_CASE("special orbit families") {
  SUBCASE("type I single point") {
    const Point3 p = pt(0, 0, 0);
    const Omega<CosSum> w{0, 0, 0, 4};
    auto rec = close_orbit(p, w, false);
    REQUIRE(rec);
    CHECK(rec->size() == 1);
    auto m = classify_special(*rec);
    REQUIRE(m);
    CHECK(m->type == SpecialType::I);
  }
  SUBCASE("type II") {
    const CosSum a = CosSum::cos(1, 5), b = CosSum::cos(2, 7);
    const Omega<CosSum> w{a + b, 0, 0, (4 + a * b).reduced()};
    auto rec = close_orbit({a, 0, 0}, w, false);
    REQUIRE(rec);
    CHECK(rec->size() == 2);
    auto m = classify_special(*rec);
    REQUIRE(m);
    CHECK(m->type == SpecialType::II);
  }
  SUBCASE("type III with omega = 1/2") {
    const CosSum om = CosSum::parse("1/2");
    const Omega<CosSum> w{2, om, om, 5};
    auto rec = close_orbit(pt(1, 0, 0), w, false);
    REQUIRE(rec);
    CHECK(rec->size() == 3);
    CHECK(contains(rec->points, Point3{1, om, 0}));
    CHECK(contains(rec->points, Point3{1, 0, om}));
    auto m = classify_special(*rec);
    REQUIRE(m);
    CHECK(m->type == SpecialType::III);
  }
  SUBCASE("type IV with omega = 1") {
    const Omega<CosSum> w{1, 1, 1, 3};
    auto rec = close_orbit(pt(1, 1, 1), w, false);
    REQUIRE(rec);
    CHECK(rec->size() == 4);
    CHECK(contains(rec->points, pt(-1, 1, 1)));
    auto m = classify_special(*rec);
    REQUIRE(m);
    CHECK(m->type == SpecialType::IV);
  }
  SUBCASE("a table orbit is not special") {
    const GoldenOrbit g = golden_orbit(exceptional_table().front());
    auto rec = close_orbit(g.representative, g.omega, false);
    REQUIRE(rec);
    CHECK_FALSE(classify_special(*rec).has_value());
  }
}

TEST_CASE("table of exceptional orbits closes to the listed sizes") {
  const auto& table = exceptional_table();
  REQUIRE(table.size() == 45);
  std::set<int> rows;
  for (const TableRow& row : table) {
    CAPTURE(row.row);
    rows.insert(row.row);
    const GoldenOrbit g = golden_orbit(row);
    CHECK(fricke_residual(g.representative, g.omega).is_zero());
    auto rec = close_orbit(g.representative, g.omega, false);
    REQUIRE(rec);
    CHECK(rec->size() == row.size);
    CHECK(verify_orbit(*rec));
  }
  CHECK(rows.size() == 45);
  CHECK(*rows.begin() == 1);
  CHECK(*rows.rbegin() == 45);
}

TEST_CASE("suborbits of every table orbit satisfy the closed forms and parity identities") {
  std::size_t checked = 0;
  for (const TableRow& row : exceptional_table()) {
    const GoldenOrbit g = golden_orbit(row);
    auto rec = close_orbit(g.representative, g.omega, false);
    REQUIRE(rec);
    for (auto [a, b] : {std::pair{Color::y, Color::z}, {Color::z, Color::x}, {Color::x, Color::y}}) {
      std::vector<bool> done(rec->size(), false);
      for (std::size_t i = 0; i < rec->size(); ++i) {
        if (done[i]) continue;
        const auto s = suborbit(rec->points[i], rec->omega, a, b);
        for (const auto& p : s.points) {
          for (std::size_t j = 0; j < rec->size(); ++j) {
            if (same_point(p, rec->points[j])) done[j] = true;
          }
        }
        const auto check = check_suborbit(s, rec->omega);
        CAPTURE(row.row);
        CHECK(check.ok());
        ++checked;
      }
    }
  }
  CHECK(checked == 516);
}

TEST_CASE("search over class 4 is deterministic across thread counts") {
  SearchOptions one;
  one.classes = {false, false, false, true};
  SearchOptions three = one;
  three.threads = 3;
  const SearchResult a = full_search(one);
  const SearchResult b = full_search(three);
  CHECK(a.stats[3].enumerated == 8197910u);
  CHECK(a.stats[3].finite == b.stats[3].finite);
  CHECK(a.stats[3].distinct == b.stats[3].distinct);
  CHECK(a.discrepancies == 0);
  REQUIRE(a.exceptional.size() == b.exceptional.size());
  for (std::size_t i = 0; i < a.exceptional.size(); ++i) {
    CHECK(a.exceptional[i].key == b.exceptional[i].key);
    CHECK(a.exceptional[i].table_row == b.exceptional[i].table_row);
    CHECK(a.exceptional[i].source_index == b.exceptional[i].source_index);
  }
  REQUIRE(a.special.size() == b.special.size());
  for (std::size_t i = 0; i < a.special.size(); ++i) CHECK(a.special[i].record.key == b.special[i].record.key);
}
