#include "fricke/fricke_action.hpp"

#include <algorithm>
#include <numeric>

namespace fricke {

const std::array<Symmetry, 24>& Symmetry::all() {
  static const std::array<Symmetry, 24> table = [] {
    std::array<Symmetry, 24> out{};
    std::array<int, 3> perm{0, 1, 2};
    const std::array<std::array<int, 3>, 4> signs{{{1, 1, 1}, {-1, -1, 1}, {-1, 1, -1}, {1, -1, -1}}};
    std::size_t i = 0;
    do {
      for (const auto& s : signs) out[i++] = Symmetry{perm, s};
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }();
  return table;
}

std::string Symmetry::to_string() const {
  std::string out;
  for (int i = 0; i < 3; ++i) {
    if (i) out += ",";
    out += sign[i] > 0 ? "+" : "-";
    out += "XYZ"[perm[i]];
  }
  return out;
}

int compare_points(const Point3& a, const Point3& b) {
  for (int i = 0; i < 3; ++i) {
    if (int c = compare(a[i], b[i]); c != 0) return c;
  }
  return 0;
}

int compare(const OrbitKey& a, const OrbitKey& b) {
  const std::size_t n = std::min(a.values.size(), b.values.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = compare(a.values[i], b.values[i]); c != 0) return c;
  }
  if (a.values.size() == b.values.size()) return 0;
  return a.values.size() < b.values.size() ? -1 : 1;
}

OrbitKey canonical_key(const std::vector<Point3>& points, const Omega<CosSum>& w) {
  const auto& symmetries = Symmetry::all();
  // The omega part is compared first; only transforms attaining the minimal omega
  // need their point lists sorted.
  std::vector<std::size_t> best;
  Omega<CosSum> best_omega{};
  for (std::size_t i = 0; i < symmetries.size(); ++i) {
    const Omega<CosSum> tw = transform_omega(symmetries[i], w);
    int c = 0;
    if (!best.empty()) {
      for (int k = 0; k < 3 && c == 0; ++k) c = compare(tw.w(k), best_omega.w(k));
    }
    if (best.empty() || c < 0) {
      best.assign(1, i);
      best_omega = tw;
    } else if (c == 0) {
      best.push_back(i);
    }
  }
  OrbitKey result;
  bool have = false;
  for (std::size_t i : best) {
    std::vector<Point3> image;
    image.reserve(points.size());
    for (const auto& p : points) image.push_back(transform_point(symmetries[i], p));
    std::sort(image.begin(), image.end(),
              [](const Point3& a, const Point3& b) { return compare_points(a, b) < 0; });
    OrbitKey key;
    key.symmetry = i;
    key.values.reserve(4 + 3 * image.size());
    key.values.push_back(w.w4.reduced());
    for (int k = 0; k < 3; ++k) key.values.push_back(best_omega.w(k).reduced());
    for (const auto& p : image) {
      for (int k = 0; k < 3; ++k) key.values.push_back(p[k].reduced());
    }
    if (!have || compare(key, result) < 0) {
      result = std::move(key);
      have = true;
    }
  }
  return result;
}

namespace {

// sin(m x) / sin(x) for x = pi * n / N, as an element of the cosine ring.
CosSum sine_ratio(std::int64_t m, std::int64_t n, std::int64_t N) {
  if (m == 0) return CosSum();
  if (m < 0) return -sine_ratio(-m, n, N);
  CosSum total;
  for (std::int64_t j = 0; j < m; ++j) total += CosSum::cos((m - 1 - 2 * j) * n, N);
  return total * Rational(1, 2);
}

}  // namespace

SuborbitCheck check_suborbit(const Suborbit<CosSum>& s, const Omega<CosSum>& w) {
  SuborbitCheck out;
  const int shared = common_coordinate(s.first, s.second);
  // move to the frame where the suborbit alternates y and z
  const Symmetry frame{{shared, static_cast<int>(s.first), static_cast<int>(s.second)}, {1, 1, 1}};
  const Omega<CosSum> fw = transform_omega(frame, w);
  const Point3 start = transform_point(frame, s.points.front());
  const CosSum& X = start.x;
  const std::size_t N = s.length;

  std::vector<CosSum> Y{start.y}, Z{start.z};
  for (std::size_t k = 0; k < 2 * N; ++k) {
    CosSum y = (fw.wy - Y[k] - X * Z[k]).reduced();
    CosSum z = (fw.wz - Z[k] - X * y).reduced();
    Y.push_back(std::move(y));
    Z.push_back(std::move(z));
  }
  for (std::size_t k = 0; k < N; ++k) {
    out.periodic = out.periodic && exactly_equal(Y[k + N], Y[k]) && exactly_equal(Z[k + N], Z[k]);
  }
  if (N > 1) {
    for (std::size_t p = 1; p < N; ++p) {
      out.periodic = out.periodic && !(exactly_equal(Y[p], Y[0]) && exactly_equal(Z[p], Z[0]));
    }
  }

  const CosSum D = (CosSum(4) - X * X).reduced();
  const CosSum e1 = CosSum(2) * fw.wy - X * fw.wz;
  const CosSum e2 = CosSum(2) * fw.wz - X * fw.wy;
  if (N == 1) {
    // a point fixed by both generators sits at the particular solution
    out.closed_form = D.is_zero() || (exactly_equal(D * Y[0], e1) && exactly_equal(D * Z[0], e2));
    return out;
  }
  const auto angle = X.as_single_cos();
  if (!angle || angle->den != static_cast<std::int64_t>(N) || angle->num == 0) {
    out.cosine_label = false;
    return out;
  }
  const std::int64_t n = angle->num;
  const auto NN = static_cast<std::int64_t>(N);
  out.n = n;
  const CosSum y0 = D * Y[0] - e1;
  const CosSum z0 = D * Z[0] - e2;
  for (std::size_t k = 0; k <= N; ++k) {
    const auto kk = static_cast<std::int64_t>(k);
    const CosSum lhs_y = D * Y[k] - e1;
    const CosSum lhs_z = D * Z[k] - e2;
    const CosSum rhs_y = sine_ratio(1 - 2 * kk, n, NN) * y0 - sine_ratio(2 * kk, n, NN) * z0;
    const CosSum rhs_z = sine_ratio(2 * kk, n, NN) * y0 + sine_ratio(1 + 2 * kk, n, NN) * z0;
    out.closed_form = out.closed_form && exactly_equal(lhs_y, rhs_y) && exactly_equal(lhs_z, rhs_z);
  }

  const CosSum plus = fw.wy + fw.wz;
  const CosSum minus = fw.wy - fw.wz;
  const CosSum two_plus_x = CosSum(2) + X;
  const CosSum two_minus_x = CosSum(2) - X;
  for (std::size_t k = 0; k < N; ++k) {
    if (N % 2 == 0) {
      // Y_k + Y_{k+N/2} = p+ + p-,  Z_k + Z_{k+N/2} = p+ - p-
      const std::size_t h = k + N / 2;
      out.parity = out.parity &&
                   exactly_equal(D * (Y[k] + Y[h]), two_minus_x * plus + two_plus_x * minus) &&
                   exactly_equal(D * (Z[k] + Z[h]), two_minus_x * plus - two_plus_x * minus);
    } else if (n % 2 == 0) {
      out.parity = out.parity && exactly_equal(two_plus_x * (Y[k] + Z[k + (N - 1) / 2]), plus);
    } else {
      out.parity = out.parity && exactly_equal(two_minus_x * (Y[k] - Z[k + (N - 1) / 2]), minus);
    }
  }
  return out;
}

bool check_degenerate_recursion(int sign, const Rational& y0, const Rational& z0,
                                const Rational& wy, const Rational& wz, std::size_t steps) {
  const Rational X = 2 * sign;
  const Rational alpha = y0 - (wy + sign * wz) / 8;
  const Rational beta = z0 - (wz + sign * wy) / 8;
  Rational y = y0;
  Rational z = z0;
  for (std::size_t step = 0; step <= steps; ++step) {
    const Rational k(static_cast<long>(step));
    const Rational dy = wy - sign * wz;
    const Rational dz = wz - sign * wy;
    const Rational cy = (1 - 2 * k) * alpha - sign * 2 * k * beta + (wy + sign * wz) / 8 -
                        dy * k / 2 + dy * k * k;
    const Rational cz = sign * 2 * k * alpha + (1 + 2 * k) * beta + (wz + sign * wy) / 8 +
                        dz * k / 2 + dz * k * k;
    if (cy != y || cz != z) return false;
    const Rational ny = wy - y - X * z;
    z = wz - z - X * ny;
    y = ny;
  }
  return true;
}

}  // namespace fricke
