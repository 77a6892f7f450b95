// The action of the involutions x, y, z on trace coordinates (X, Y, Z),
// the Jimbo-Fricke invariant, the 24 parameter symmetries, and 2-colored suborbits.

#ifndef FRICKE_FRICKE_ACTION_HPP_
#define FRICKE_FRICKE_ACTION_HPP_

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "fricke/trig_field.hpp"

namespace fricke {

enum class Color { x = 0, y = 1, z = 2 };
constexpr std::array<Color, 3> kColors{Color::x, Color::y, Color::z};
inline char color_name(Color c) { return "xyz"[static_cast<int>(c)]; }

template <typename T>
struct Vec3 {
  T x, y, z;

  T& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
  const T& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

using Point3 = Vec3<CosSum>;

template <typename T>
struct Omega {
  T wx, wy, wz, w4;

  const T& w(int i) const { return i == 0 ? wx : (i == 1 ? wy : wz); }
};

// Exact (or, for doubles, tolerance-free) equality of scalars.
inline bool same_value(const CosSum& a, const CosSum& b) { return exactly_equal(a, b); }
inline bool same_value(const Rational& a, const Rational& b) { return a == b; }
inline bool same_value(double a, double b) { return a == b; }

template <typename T>
bool same_point(const Vec3<T>& a, const Vec3<T>& b) {
  return same_value(a.x, b.x) && same_value(a.y, b.y) && same_value(a.z, b.z);
}

template <typename T>
Vec3<T> apply(Color g, const Vec3<T>& p, const Omega<T>& w) {
  Vec3<T> q = p;
  switch (g) {
    case Color::x:
      q.x = w.wx - p.x - p.y * p.z;
      break;
    case Color::y:
      q.y = w.wy - p.y - p.z * p.x;
      break;
    case Color::z:
      q.z = w.wz - p.z - p.x * p.y;
      break;
  }
  if constexpr (std::is_same_v<T, CosSum>) {
    const int i = static_cast<int>(g);
    q[i] = q[i].reduced();
  }
  return q;
}

/// XYZ + X^2 + Y^2 + Z^2 - wX X - wY Y - wZ Z + w4 - 4.
template <typename T>
T fricke_residual(const Vec3<T>& p, const Omega<T>& w) {
  return p.x * p.y * p.z + p.x * p.x + p.y * p.y + p.z * p.z - w.wx * p.x - w.wy * p.y -
         w.wz * p.z + w.w4 - T(4);
}

/// The w4 that puts p on the surface with parameters (wX, wY, wZ).
template <typename T>
T omega4_of(const Vec3<T>& p, const T& wx, const T& wy, const T& wz) {
  return T(4) - (p.x * p.y * p.z + p.x * p.x + p.y * p.y + p.z * p.z - wx * p.x - wy * p.y -
                 wz * p.z);
}

/// One of the 24 symmetries: coordinate i of the image is sign[i] * (coordinate perm[i]).
/// Signs always form an even pattern, and the same map acts on (wX, wY, wZ).
struct Symmetry {
  std::array<int, 3> perm{0, 1, 2};
  std::array<int, 3> sign{1, 1, 1};

  static const std::array<Symmetry, 24>& all();
  std::string to_string() const;
};

template <typename T>
T signed_value(int s, const T& v) {
  return s > 0 ? v : T(-v);
}

template <typename T>
Vec3<T> transform_point(const Symmetry& t, const Vec3<T>& p) {
  return {signed_value(t.sign[0], p[t.perm[0]]), signed_value(t.sign[1], p[t.perm[1]]),
          signed_value(t.sign[2], p[t.perm[2]])};
}

template <typename T>
Omega<T> transform_omega(const Symmetry& t, const Omega<T>& w) {
  return {signed_value(t.sign[0], w.w(t.perm[0])), signed_value(t.sign[1], w.w(t.perm[1])),
          signed_value(t.sign[2], w.w(t.perm[2])), w.w4};
}

/// Canonical form of an orbit up to the 24 symmetries: the lexicographic minimum
/// over transforms of (w4, wX, wY, wZ, sorted points), ordered by compare().
struct OrbitKey {
  std::vector<CosSum> values;
  std::size_t symmetry = 0;  // index into Symmetry::all() realizing the minimum

  friend int compare(const OrbitKey& a, const OrbitKey& b);
  friend bool operator==(const OrbitKey& a, const OrbitKey& b) { return compare(a, b) == 0; }
  friend bool operator<(const OrbitKey& a, const OrbitKey& b) { return compare(a, b) < 0; }
};

int compare_points(const Point3& a, const Point3& b);
OrbitKey canonical_key(const std::vector<Point3>& points, const Omega<CosSum>& w);

// ---------------------------------------------------------------------------
// 2-colored suborbits

class Diverges : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Longest suborbit walk allowed: twice the bound 71^2 * 2 on N, plus the ends.
constexpr std::size_t kSuborbitCap = 2 * 10082 + 2;

enum class SuborbitShape { point, cycle, line };

template <typename T>
struct Suborbit {
  Color first, second;  // generators alternated along the walk
  SuborbitShape shape = SuborbitShape::point;
  std::vector<Vec3<T>> points;  // walk order; a line runs from one end to the other
  std::size_t length = 1;       // N
};

/// Coordinate shared by all points of a suborbit generated by the two colors.
inline int common_coordinate(Color a, Color b) { return 3 - static_cast<int>(a) - static_cast<int>(b); }

template <typename T>
Suborbit<T> suborbit(const Vec3<T>& start, const Omega<T>& w, Color first, Color second) {
  if (first == second) throw std::invalid_argument("suborbit needs two distinct colors");
  Suborbit<T> out{first, second, SuborbitShape::point, {start}, 1};
  // walk from start alternating first, second, ... until returning or hitting a fixed point
  auto walk = [&](Color c0, Color c1, std::vector<Vec3<T>>& path) -> bool {
    Vec3<T> cur = start;
    Color c = c0;
    while (path.size() < kSuborbitCap) {
      Vec3<T> next = apply(c, cur, w);
      if (same_point(next, cur)) return false;  // reached an end
      if (same_point(next, start)) return true;  // closed a cycle
      path.push_back(next);
      cur = std::move(next);
      c = (c == c0) ? c1 : c0;
    }
    throw Diverges("suborbit exceeds the step cap");
  };
  std::vector<Vec3<T>> forward;
  if (walk(first, second, forward)) {
    out.shape = SuborbitShape::cycle;
    out.points.insert(out.points.end(), forward.begin(), forward.end());
    out.length = out.points.size() / 2;
    if (out.length == 0) out.length = 1;
    return out;
  }
  std::vector<Vec3<T>> backward;
  walk(second, first, backward);
  if (forward.empty() && backward.empty()) return out;
  out.shape = SuborbitShape::line;
  out.points.assign(backward.rbegin(), backward.rend());
  out.points.push_back(start);
  out.points.insert(out.points.end(), forward.begin(), forward.end());
  out.length = out.points.size();
  if (out.points.size() > kSuborbitCap) throw Diverges("suborbit exceeds the step cap");
  return out;
}

/// The yz suborbit of a point (alternating y then z).
template <typename T>
Suborbit<T> yz_suborbit(const Vec3<T>& p, const Omega<T>& w) {
  return suborbit(p, w, Color::y, Color::z);
}

/// Outcome of checking the closed-form solution and the parity identities of the
/// suborbit recursion on one suborbit (exact arithmetic).
struct SuborbitCheck {
  bool periodic = true;      // (Y_k, Z_k) has period N
  bool closed_form = true;   // matches the general (or X = +-2) solution
  bool parity = true;        // parity identities for the given n_X
  bool cosine_label = true;  // common coordinate is 2cos(pi n/N) with gcd(n, N) = 1
  std::int64_t n = 0;        // n_X, when N > 1
  bool ok() const { return periodic && closed_form && parity && cosine_label; }
};

SuborbitCheck check_suborbit(const Suborbit<CosSum>& s, const Omega<CosSum>& w);

/// Closed form of the recursion when X = 2*sign (sign = +-1), checked against
/// direct iteration for k = 0..steps on rational data.
bool check_degenerate_recursion(int sign, const Rational& y0, const Rational& z0,
                                const Rational& wy, const Rational& wz, std::size_t steps);

}  // namespace fricke

#endif  // FRICKE_FRICKE_ACTION_HPP_
