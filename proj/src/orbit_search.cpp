#include "fricke/orbit_search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstring>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace fricke {

namespace {

constexpr int count_coprime(int n) {
  int c = 0;
  for (int k = 1; k < n; ++k) {
    int a = k, b = n;
    while (b) {
      const int t = a % b;
      a = b;
      b = t;
    }
    if (a == 1) ++c;
  }
  return c;
}

constexpr int count_odd_coprime(int n) {
  int c = 0;
  for (int k = 1; k < n; k += 2) {
    int a = k, b = n;
    while (b) {
      const int t = a % b;
      a = b;
      b = t;
    }
    if (a == 1) ++c;
  }
  return c;
}

constexpr int count_up_to(int max_n) {
  int c = 0;
  for (int n = 2; n <= max_n; ++n) c += count_coprime(n);
  return c;
}

static_assert(count_up_to(10) == 31, "S1 must have 31 values");
static_assert(count_up_to(10) + count_odd_coprime(11) + count_odd_coprime(15) +
                      count_odd_coprime(21) == 46,
              "S2 must have 46 values");
static_assert(count_up_to(15) == 71, "S3 must have 71 values");
static_assert(count_up_to(15) + count_coprime(21) == 83, "S4 must have 83 values");

Dictionary make_dictionary(std::string label, int max_n, const std::vector<int>& extra,
                           bool extra_odd_only) {
  Dictionary d;
  d.label = std::move(label);
  auto add = [&](int n, int N) {
    if (std::gcd(n, N) != 1) return;
    CosSum v = CosSum::cos(n, N);
    const double f = v.to_double();
    d.entries.push_back({RationalAngle::folded(n, N), std::move(v), f});
  };
  for (int N = 2; N <= max_n; ++N) {
    for (int n = 1; n < N; ++n) add(n, N);
  }
  for (int N : extra) {
    for (int n = 1; n < N; ++n) {
      if (!extra_odd_only || n % 2 == 1) add(n, N);
    }
  }
  std::sort(d.entries.begin(), d.entries.end(),
            [](const DictEntry& a, const DictEntry& b) { return a.fvalue < b.fvalue; });
  for (std::size_t i = 0; i < d.entries.size(); ++i) d.lookup.push_back({d.entries[i].fvalue, i});
  return d;
}

}  // namespace

double Dictionary::min_gap() const {
  double gap = INFINITY;
  for (std::size_t i = 1; i < entries.size(); ++i) {
    gap = std::min(gap, entries[i].fvalue - entries[i - 1].fvalue);
  }
  return gap;
}

Dictionaries build_dictionaries() {
  Dictionaries d{make_dictionary("S1", 10, {}, false),
                 make_dictionary("S2", 10, {11, 15, 21}, true),
                 make_dictionary("S3", 15, {}, false), make_dictionary("S4", 15, {21}, false)};
  const std::array<std::pair<const Dictionary*, std::size_t>, 4> expected{
      {{&d.s1, 31}, {&d.s2, 46}, {&d.s3, 71}, {&d.s4, 83}}};
  for (const auto& [dict, size] : expected) {
    if (dict->size() != size) throw std::logic_error(dict->label + " has the wrong size");
    if (!(dict->min_gap() > 1e-3)) throw std::logic_error(dict->label + " values too close");
  }
  return d;
}

const Dictionaries& dictionaries() {
  static const Dictionaries d = build_dictionaries();
  return d;
}

// ---------------------------------------------------------------------------
// Class arenas

namespace {

using Head = std::array<std::int16_t, 3>;

struct Arenas {
  std::vector<std::int16_t> s1;  // S4 indices of S1 values, ascending
  std::size_t s1_zero = 0;       // position of 0 inside s1
  std::vector<Head> class1;      // (X, Y, Z), both sign branches
  std::vector<Head> class2;      // (Y, Z) with 0 <= Y <= Z, Z > 0
  std::vector<Head> class3;      // (Y, Z) with |Y| <= Z
  std::vector<Head> class4;      // X <= Y <= Z
};

const Arenas& arenas() {
  static const Arenas a = [] {
    const auto& d = dictionaries();
    Arenas out;
    for (std::size_t i = 0; i < d.s4.size(); ++i) {
      if (d.s1.match(d.s4.entries[i].fvalue, 1e-9)) out.s1.push_back(static_cast<std::int16_t>(i));
    }
    const double zero_tol = 1e-12;
    auto value = [&](std::int16_t i) { return d.s4.entries[i].fvalue; };
    for (std::size_t k = 0; k < out.s1.size(); ++k) {
      if (std::abs(value(out.s1[k])) < zero_tol) out.s1_zero = k;
    }
    std::vector<std::int16_t> nonneg, nonpos, s4_nonneg;
    for (auto i : out.s1) {
      if (value(i) > -zero_tol) nonneg.push_back(i);
      if (value(i) < zero_tol) nonpos.push_back(i);
    }
    std::reverse(nonpos.begin(), nonpos.end());  // 0 first, then decreasing
    for (const auto* branch : {&nonneg, &nonpos}) {
      const auto& b = *branch;
      for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = i; j < b.size(); ++j) {
          for (std::size_t k = j; k < b.size(); ++k) {
            if (branch == &nonpos && k == 0) continue;  // zero head, appended last
            out.class1.push_back({b[i], b[j], b[k]});
          }
        }
      }
    }
    out.class1.push_back({nonpos[0], nonpos[0], nonpos[0]});
    for (std::size_t i = 0; i < d.s4.size(); ++i) {
      if (value(static_cast<std::int16_t>(i)) > -zero_tol) s4_nonneg.push_back(static_cast<std::int16_t>(i));
    }
    for (std::size_t j = 0; j < s4_nonneg.size(); ++j) {
      if (value(s4_nonneg[j]) < zero_tol) continue;  // Z > 0
      for (std::size_t i = 0; i <= j; ++i) out.class2.push_back({s4_nonneg[i], s4_nonneg[j], 0});
    }
    for (auto z : out.s1) {
      if (value(z) < -zero_tol) continue;
      for (auto y : out.s1) {
        if (std::abs(value(y)) <= value(z) + zero_tol) out.class3.push_back({y, z, 0});
      }
    }
    const auto n4 = static_cast<std::int16_t>(d.s4.size());
    for (std::int16_t i = 0; i < n4; ++i) {
      for (std::int16_t j = i; j < n4; ++j) {
        for (std::int16_t k = j; k < n4; ++k) out.class4.push_back({i, j, k});
      }
    }
    return out;
  }();
  return a;
}

constexpr std::uint64_t kS1 = 31;
constexpr std::uint64_t kS4 = 83;

// The zero configuration of class 1 appears in both sign branches; its second
// copy is the last index of the arena and is skipped.
std::uint64_t class1_tail_of_zero() {
  const auto z = arenas().s1_zero;
  return (z * kS1 + z) * kS1 + z;
}

}  // namespace

std::uint64_t class_size(int cls) {
  const auto& a = arenas();
  switch (cls) {
    case 1: return a.class1.size() * kS1 * kS1 * kS1 - 1;
    case 2: return a.class2.size() * kS4 * kS4;
    case 3: return a.class3.size() * kS1 * kS4 * kS4;
    case 4: return a.class4.size() * kS4;
  }
  throw std::invalid_argument("configuration class must be 1..4");
}

GenConfig config_at(int cls, std::uint64_t index) {
  const auto& a = arenas();
  if (index >= class_size(cls)) throw std::out_of_range("configuration index out of range");
  GenConfig g;
  g.cls = cls;
  g.index = index;
  switch (cls) {
    case 1: {
      std::uint64_t h = index / (kS1 * kS1 * kS1);
      std::uint64_t t = index % (kS1 * kS1 * kS1);
      const Head& head = a.class1[h];
      if (h == a.class1.size() - 1 && t >= class1_tail_of_zero()) ++t;
      g.c = {head[0], head[1], head[2], a.s1[t / (kS1 * kS1)], a.s1[(t / kS1) % kS1],
             a.s1[t % kS1]};
      break;
    }
    case 2: {
      const Head& head = a.class2[index / (kS4 * kS4)];
      const std::uint64_t t = index % (kS4 * kS4);
      g.c = {static_cast<std::int16_t>(t / kS4), head[0], head[1],
             static_cast<std::int16_t>(t % kS4), 0, 0};
      break;
    }
    case 3: {
      const Head& head = a.class3[index / (kS1 * kS4 * kS4)];
      const std::uint64_t t = index % (kS1 * kS4 * kS4);
      g.c = {static_cast<std::int16_t>((t / kS4) % kS4), static_cast<std::int16_t>(t % kS4),
             head[0], a.s1[t / (kS4 * kS4)], head[1], 0};
      break;
    }
    case 4: {
      const Head& head = a.class4[index / kS4];
      g.c = {head[0], static_cast<std::int16_t>(index % kS4), head[1], head[2], 0, 0};
      break;
    }
  }
  return g;
}

namespace {

// Shared algebra of the four classes; T is double or CosSum.
template <typename T, typename Value, typename InS1>
bool seed_generic(const GenConfig& g, Value value, InS1 in_s1, Vec3<T>& r, Omega<T>& w) {
  const auto& c = g.c;
  switch (g.cls) {
    case 1: {
      const T x = value(c[0]), y = value(c[1]), z = value(c[2]);
      r = {x, y, z};
      w.wx = x + value(c[3]) + y * z;
      w.wy = y + value(c[4]) + x * z;
      w.wz = z + value(c[5]) + x * y;
      break;
    }
    case 2: {
      const T x = value(c[0]), y = value(c[1]), z = value(c[2]), yp = value(c[3]);
      r = {x, y, z};
      // x(r) is fixed by y and z: wY = 2Y + X'Z, and Y(Y - Y') = Z(Z - Z')
      T inv_z;
      if constexpr (std::is_same_v<T, CosSum>) {
        inv_z = z.inverse();
      } else {
        inv_z = 1.0 / z;
      }
      const T xp = (yp - y + x * z) * inv_z;
      const T zp = z - y * (y - yp) * inv_z;
      w.wx = x + xp + y * z;
      w.wy = y + yp + x * z;
      w.wz = z + zp + x * y;
      break;
    }
    case 3: {
      const T x = value(c[0]), xp = value(c[1]), y = value(c[2]), yp = value(c[3]),
              z = value(c[4]);
      r = {x, y, z};
      w.wx = x + xp + y * z;
      w.wy = y + yp + x * z;
      w.wz = w.wy;
      const T zp = w.wz - z - x * y;
      if (!in_s1(zp)) return false;
      break;
    }
    case 4: {
      const T x = value(c[0]), xp = value(c[1]), y = value(c[2]), z = value(c[3]);
      r = {x, y, z};
      w.wx = x + xp + y * z;
      w.wy = w.wx;
      w.wz = w.wx;
      break;
    }
  }
  w.w4 = omega4_of(r, w.wx, w.wy, w.wz);
  return true;
}

}  // namespace

bool seed_float(const GenConfig& g, Vec3<double>& r, Omega<double>& w) {
  const auto& d = dictionaries();
  return seed_generic<double>(
      g, [&](std::int16_t i) { return d.s4.entries[i].fvalue; },
      [&](double v) { return d.s1.match(v, 1e-8).has_value(); }, r, w);
}

void seed_exact(const GenConfig& g, Point3& r, Omega<CosSum>& w) {
  const auto& d = dictionaries();
  seed_generic<CosSum>(
      g, [&](std::int16_t i) { return d.s4.entries[i].value; },
      [](const CosSum&) { return true; }, r, w);
  w.wx = w.wx.reduced();
  w.wy = w.wy.reduced();
  w.wz = w.wz.reduced();
  w.w4 = w.w4.reduced();
}

std::string status_name(CloseStatus s) {
  switch (s) {
    case CloseStatus::finite: return "finite";
    case CloseStatus::not_finite: return "not_finite";
    case CloseStatus::cayley: return "cayley";
    case CloseStatus::cap_exceeded: return "cap_exceeded";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Double-precision closure

struct FloatCloser::Impl {
  static constexpr std::size_t kSlots = 1u << 16;  // > 2 * kOrbitCap
  double eps;
  std::vector<Vec3<double>> pts;
  std::vector<std::array<std::int32_t, 3>> nbr;
  std::vector<std::int32_t> slots = std::vector<std::int32_t>(kSlots, -1);
  std::vector<std::size_t> used;
  std::vector<std::int32_t> frontier;

  static std::uint64_t bits(double v) {
    std::uint64_t b;
    std::memcpy(&b, &v, sizeof b);
    return b;
  }
  static std::size_t hash(const Vec3<double>& p) {
    std::uint64_t h = bits(p.x) * 0x9E3779B97F4A7C15ULL;
    h ^= bits(p.y) + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
    h ^= bits(p.z) + 0x85EBCA77C2B2AE63ULL + (h << 6) + (h >> 2);
    h ^= h >> 29;
    return static_cast<std::size_t>(h) & (kSlots - 1);
  }
  void reset() {
    for (auto s : used) slots[s] = -1;
    used.clear();
    pts.clear();
    nbr.clear();
    frontier.clear();
  }
  std::int32_t find(const Vec3<double>& p) const {
    for (std::size_t s = hash(p);; s = (s + 1) & (kSlots - 1)) {
      const std::int32_t i = slots[s];
      if (i < 0) return -1;
      if (pts[i].x == p.x && pts[i].y == p.y && pts[i].z == p.z) return i;
    }
  }
  std::int32_t insert(const Vec3<double>& p) {
    std::size_t s = hash(p);
    while (slots[s] >= 0) s = (s + 1) & (kSlots - 1);
    const auto i = static_cast<std::int32_t>(pts.size());
    slots[s] = i;
    used.push_back(s);
    pts.push_back(p);
    nbr.push_back({-1, -1, -1});
    frontier.push_back(i);
    return i;
  }
};

FloatCloser::FloatCloser(double eps) : impl_(new Impl) { impl_->eps = eps; }
FloatCloser::~FloatCloser() { delete impl_; }

CloseStatus FloatCloser::close(const Vec3<double>& seed, const Omega<double>& w, FloatOrbit* out) {
  Impl& m = *impl_;
  const double eps = m.eps;
  if (std::abs(w.wx) < eps && std::abs(w.wy) < eps && std::abs(w.wz) < eps &&
      std::abs(w.w4) < eps) {
    return CloseStatus::cayley;
  }
  const Dictionary& s4 = dictionaries().s4;
  m.reset();
  m.insert(seed);
  const double bad_tol = 100 * eps;
  while (!m.frontier.empty()) {
    const std::int32_t i = m.frontier.back();
    int c = 0;
    while (c < 3 && m.nbr[i][c] >= 0) ++c;
    if (c == 3) {
      m.frontier.pop_back();
      continue;
    }
    const int a = (c + 1) % 3, b = (c + 2) % 3;
    const Vec3<double> p = m.pts[i];
    const double v = w.w(c) - p[c] - p[a] * p[b];
    if (std::abs(v - p[c]) < eps) {
      m.nbr[i][c] = i;
      continue;
    }
    Vec3<double> q = p;
    if (auto k = s4.match(v, eps)) {
      q[c] = s4.entries[*k].fvalue;
      std::int32_t j = m.find(q);
      if (j >= 0) {
        if (m.nbr[j][c] >= 0) return CloseStatus::not_finite;  // inconsistent adjacency
      } else {
        if (m.pts.size() >= kOrbitCap) return CloseStatus::cap_exceeded;
        j = m.insert(q);
      }
      m.nbr[i][c] = j;
      m.nbr[j][c] = i;
      continue;
    }
    // the new point must be fixed by the two other generators
    if (std::abs(2 * p[a] + v * p[b] - w.w(a)) > bad_tol ||
        std::abs(2 * p[b] + v * p[a] - w.w(b)) > bad_tol) {
      return CloseStatus::not_finite;
    }
    if (m.pts.size() >= kOrbitCap) return CloseStatus::cap_exceeded;
    q[c] = v;
    const std::int32_t j = m.insert(q);
    m.nbr[i][c] = j;
    m.nbr[j][c] = i;
    m.nbr[j][a] = j;
    m.nbr[j][b] = j;
  }
  if (out) out->points = m.pts;
  return CloseStatus::finite;
}

// ---------------------------------------------------------------------------
// Exact closure

namespace {

bool in_s4_exact(const CosSum& v, double fv) {
  const Dictionary& s4 = dictionaries().s4;
  auto k = s4.match(fv, 1e-8);
  return k && exactly_equal(v, s4.entries[*k].value);
}

bool all_zero(const Omega<CosSum>& w) {
  return w.wx.is_zero() && w.wy.is_zero() && w.wz.is_zero() && w.w4.is_zero();
}

}  // namespace

std::optional<OrbitRecord> close_orbit(const Point3& seed, const Omega<CosSum>& w,
                                       bool search_rules, std::size_t cap) {
  if (search_rules && all_zero(w)) return std::nullopt;
  OrbitRecord rec;
  rec.omega = w;
  std::vector<Vec3<double>> fl;
  std::multimap<double, std::size_t> by_x;
  auto find = [&](const Point3& p, const Vec3<double>& fp) -> std::optional<std::size_t> {
    for (auto it = by_x.lower_bound(fp.x - 1e-9); it != by_x.end() && it->first <= fp.x + 1e-9;
         ++it) {
      const auto& f = fl[it->second];
      if (std::abs(f.y - fp.y) > 1e-9 || std::abs(f.z - fp.z) > 1e-9) continue;
      if (same_point(rec.points[it->second], p)) return it->second;
    }
    return std::nullopt;
  };
  auto add = [&](Point3 p) {
    const Vec3<double> fp{p.x.to_double(), p.y.to_double(), p.z.to_double()};
    by_x.emplace(fp.x, rec.points.size());
    fl.push_back(fp);
    rec.points.push_back(std::move(p));
  };
  add(Point3{seed.x.reduced(), seed.y.reduced(), seed.z.reduced()});
  for (std::size_t i = 0; i < rec.points.size(); ++i) {
    for (Color g : kColors) {
      const Point3 q = apply(g, rec.points[i], w);
      const int c = static_cast<int>(g);
      if (same_value(q[c], rec.points[i][c])) continue;
      const Vec3<double> fq{q.x.to_double(), q.y.to_double(), q.z.to_double()};
      if (find(q, fq)) continue;
      if (search_rules && !in_s4_exact(q[c], fq[c])) {
        const int a = (c + 1) % 3, b = (c + 2) % 3;
        const bool fixed = exactly_equal(Rational(2) * q[a] + q[c] * q[b], w.w(a)) &&
                           exactly_equal(Rational(2) * q[b] + q[c] * q[a], w.w(b));
        if (!fixed) return std::nullopt;
      }
      if (rec.points.size() >= cap) throw CapExceeded("orbit exceeds the point cap");
      add(q);
    }
  }
  rec.key = canonical_key(rec.points, rec.omega);
  return rec;
}

std::optional<OrbitRecord> close_config(const GenConfig& g) {
  Point3 r;
  Omega<CosSum> w;
  seed_exact(g, r, w);
  auto rec = close_orbit(r, w, true);
  if (rec) {
    rec->source_class = g.cls;
    rec->source_index = g.index;
  }
  return rec;
}

bool verify_orbit(const OrbitRecord& rec) {
  for (const auto& p : rec.points) {
    if (!fricke_residual(p, rec.omega).is_zero()) return false;
    for (Color g : kColors) {
      const Point3 q = apply(g, p, rec.omega);
      const bool found = std::any_of(rec.points.begin(), rec.points.end(),
                                     [&](const Point3& r) { return same_point(q, r); });
      if (!found) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Special orbits

std::string special_name(SpecialType t) {
  switch (t) {
    case SpecialType::I: return "I";
    case SpecialType::II: return "II";
    case SpecialType::III: return "III";
    case SpecialType::IV: return "IV";
  }
  return "?";
}

namespace {

bool same_point_set(const std::vector<Point3>& a, const std::vector<Point3>& b) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& p : a) {
    bool hit = false;
    for (std::size_t j = 0; j < b.size() && !hit; ++j) {
      if (!used[j] && same_point(p, b[j])) used[j] = hit = true;
    }
    if (!hit) return false;
  }
  return true;
}

}  // namespace

std::optional<SpecialMatch> classify_special(const OrbitRecord& rec) {
  const std::size_t n = rec.size();
  if (n == 0 || n > 4) return std::nullopt;
  if (n == 1) {
    const Point3& p = rec.points[0];
    const auto& w = rec.omega;
    const bool ok = exactly_equal(w.wx, Rational(2) * p.x + p.y * p.z) &&
                    exactly_equal(w.wy, Rational(2) * p.y + p.x * p.z) &&
                    exactly_equal(w.wz, Rational(2) * p.z + p.x * p.y) &&
                    exactly_equal(w.w4, 4 + Rational(2) * p.x * p.y * p.z + p.x * p.x + p.y * p.y + p.z * p.z);
    if (!ok) return std::nullopt;
    return SpecialMatch{SpecialType::I, {p.x, p.y, p.z}, 0};
  }
  const auto& syms = Symmetry::all();
  for (std::size_t s = 0; s < syms.size(); ++s) {
    const Omega<CosSum> w = transform_omega(syms[s], rec.omega);
    std::vector<Point3> pts;
    for (const auto& p : rec.points) pts.push_back(transform_point(syms[s], p));
    if (n == 2) {
      if (!w.wy.is_zero() || !w.wz.is_zero()) continue;
      const bool axis = std::all_of(pts.begin(), pts.end(), [](const Point3& p) {
        return p.y.is_zero() && p.z.is_zero();
      });
      if (!axis) continue;
      if (!exactly_equal(w.wx, pts[0].x + pts[1].x)) continue;
      if (!exactly_equal(w.w4, 4 + pts[0].x * pts[1].x)) continue;
      return SpecialMatch{SpecialType::II, {pts[0].x, pts[1].x}, s};
    }
    if (n == 3) {
      const CosSum& om = w.wy;
      if (!exactly_equal(w.wx, 2) || !exactly_equal(w.wz, om) || !exactly_equal(w.w4, 5)) continue;
      if (same_point_set(pts, {{1, 0, 0}, {1, om, 0}, {1, 0, om}})) {
        return SpecialMatch{SpecialType::III, {om}, s};
      }
    }
    if (n == 4) {
      const CosSum& om = w.wx;
      if (!exactly_equal(w.wy, om) || !exactly_equal(w.wz, om) || !exactly_equal(w.w4, Rational(3) * om)) {
        continue;
      }
      const CosSum m = (om - 2).reduced();
      if (same_point_set(pts, {{1, 1, 1}, {m, 1, 1}, {1, m, 1}, {1, 1, m}})) {
        return SpecialMatch{SpecialType::IV, {om}, s};
      }
    }
  }
  return std::nullopt;
}

OrbitRecord cayley_orbit(const Rational& ry, const Rational& rz) {
  auto cos_of = [](const Rational& r) {
    return CosSum::cos(r.get_num().get_si(), r.get_den().get_si());
  };
  const Point3 seed{-cos_of(ry + rz), cos_of(ry), cos_of(rz)};
  const Omega<CosSum> w{0, 0, 0, 0};
  return *close_orbit(seed, w, false);
}

// ---------------------------------------------------------------------------
// Table of exceptional orbits.  c = 2cos(pi/5) = (1+sqrt5)/2, sqrt5 = 2c-1,
// sqrt2 = 2cos(pi/4).

#define C5 "2cos(pi*1/5)"
#define C7(k) "2cos(pi*" #k "/7)"

const std::vector<TableRow>& exceptional_table() {
  static const std::vector<TableRow> rows = {
      {1, 5, {"0", "1", "1"}, "0", {"2/3", "1/3", "1/3"}},
      {2, 5, {"3", "2", "2"}, "-3", {"1/3", "1/3", "1/3"}},
      {3, 6, {"1", "0", "0"}, "2", {"1/2", "1/3", "1/3"}},
      {4, 6, {"2cos(pi*1/4)", "0", "0"}, "1", {"1/4", "1/3", "3/4"}},
      {5, 6, {"3", "2*2cos(pi*1/4)", "2*2cos(pi*1/4)"}, "-4", {"1/2", "1/4", "1/4"}},
      {6, 6, {"2-2*" C5, "2-" C5, "2-" C5}, "2*" C5 "-3", {"4/5", "1/3", "1/3"}},
      {7, 6, {"2*" C5, "1+" C5, "1+" C5}, "-1-2*" C5, {"2/5", "1/3", "1/3"}},
      {8, 7, {"1", "1", "1"}, "0", {"1/2", "1/2", "1/2"}},
      {9, 8, {"2", "0", "0"}, "0", {"0", "1/3", "2/3"}},
      {10, 8, {"1", "2cos(pi*1/4)", "2cos(pi*1/4)"}, "0", {"1/2", "1/2", "1/2"}},
      {11, 8, {"1+" C5, "1", "1"}, "-" C5, {"1/3", "1/2", "1/2"}},
      {12, 8, {"2-" C5, "1", "1"}, C5 "-1", {"1/3", "1/2", "1/2"}},
      {13, 9, {"3-2*" C5, "3-2*" C5, "3-2*" C5}, "5*" C5 "-6", {"4/5", "3/5", "3/5"}},
      {14, 9, {"1+2*" C5, "1+2*" C5, "1+2*" C5}, "-1-5*" C5, {"2/5", "1/5", "1/5"}},
      {15, 10, {"1", "0", "0"}, "1", {"1/3", "1/3", "2/3"}},
      {16, 10, {"4-2*" C5, "4-2*" C5, "4-2*" C5}, "7*" C5 "-9", {"3/5", "3/5", "3/5"}},
      {17, 10, {"2+2*" C5, "2+2*" C5, "2+2*" C5}, "-2-7*" C5, {"1/5", "1/5", "1/5"}},
      {18, 10, {"1-" C5, "1-" C5, "1-" C5}, "0", {"1/2", "1/2", "1/2"}},
      {19, 10, {C5, C5, C5}, "0", {"1/2", "1/2", "1/2"}},
      {20, 12, {"0", "0", "0"}, "3", {"2/3", "1/4", "1/4"}},
      {21, 12, {"1", "0", "0"}, "2", {"0", "1/4", "3/4"}},
      {22, 12, {"2", "2*" C5 "-1", "2*" C5 "-1"}, "-2", {"1/5", "2/5", "2/5"}},
      {23, 12, {"1+" C5, C5, C5}, "1-2*" C5, {"2/5", "2/5", "2/5"}},
      {24, 12, {"2-" C5, "1-" C5, "1-" C5}, "2*" C5 "-1", {"4/5", "4/5", "4/5"}},
      {25, 12, {C5, C5 "-1", "1"}, "0", {"1/2", "1/2", "1/2"}},
      {26, 15, {"2-" C5, "2-" C5, "2-" C5}, "2*" C5 "-2", {"1/2", "3/5", "3/5"}},
      {27, 15, {"1+" C5, "1+" C5, "1+" C5}, "-2*" C5, {"1/2", "1/5", "1/5"}},
      {28, 15, {"3-" C5, "2-2*" C5, "2-2*" C5}, "3*" C5 "-4", {"3/5", "4/5", "4/5"}},
      {29, 15, {"2+" C5, "2*" C5, "2*" C5}, "-1-3*" C5, {"1/5", "2/5", "2/5"}},
      {30, 16, {"0", "0", "0"}, "2", {"2/3", "2/3", "2/3"}},
      {31, 18, {"2", "2", "2"}, "-1", {"0", "1/5", "3/5"}},
      {32, 18, {"1-" C7(2), "1-" C7(2), "1-" C7(2)}, "2*" C7(2), {"6/7", "5/7", "5/7"}},
      {33, 18, {"1-" C7(4), "1-" C7(4), "1-" C7(4)}, "2*" C7(4), {"2/7", "3/7", "3/7"}},
      {34, 18, {"1-" C7(6), "1-" C7(6), "1-" C7(6)}, "2*" C7(6), {"4/7", "1/7", "1/7"}},
      {35, 20, {"2-" C5, "0", "0"}, "2*" C5, {"0", "1/3", "2/3"}},
      {36, 20, {"1+" C5, "0", "0"}, "2-2*" C5, {"0", "1/3", "2/3"}},
      {37, 20, {"1", "1-" C5, "1-" C5}, C5, {"2/3", "3/5", "3/5"}},
      {38, 20, {"1", C5, C5}, "1-" C5, {"2/3", "1/5", "1/5"}},
      {39, 24, {"1", "1", "1"}, "1", {"1/5", "1/2", "1/2"}},
      {40, 30, {"-" C5, "0", "0"}, "2-" C5, {"2/3", "2/3", "2/3"}},
      {41, 30, {C5 "-1", "0", "0"}, "1+" C5, {"2/3", "2/3", "2/3"}},
      {42, 36, {"1", "0", "0"}, "2", {"0", "1/5", "4/5"}},
      {43, 40, {"0", "0", "0"}, "3-" C5, {"2/5", "2/5", "2/5"}},
      {44, 40, {"0", "0", "0"}, "2+" C5, {"4/5", "4/5", "4/5"}},
      {45, 72, {"0", "0", "0"}, "3", {"1/2", "1/5", "2/5"}},
  };
  return rows;
}

#undef C5
#undef C7

GoldenOrbit golden_orbit(const TableRow& row) {
  GoldenOrbit g{row, {}, {}};
  g.omega.wx = CosSum::parse(row.omega[0]).reduced();
  g.omega.wy = CosSum::parse(row.omega[1]).reduced();
  g.omega.wz = CosSum::parse(row.omega[2]).reduced();
  g.omega.w4 = (4 - CosSum::parse(row.four_minus_omega4)).reduced();
  for (int i = 0; i < 3; ++i) g.representative[i] = CosSum::cos(RationalAngle::parse(row.r[i]));
  return g;
}

namespace {

struct GoldenKey {
  OrbitKey key;
  int row;
  std::size_t size;
};

const std::vector<GoldenKey>& golden_keys() {
  static const std::vector<GoldenKey> keys = [] {
    std::vector<GoldenKey> out;
    for (const auto& row : exceptional_table()) {
      const GoldenOrbit g = golden_orbit(row);
      auto rec = close_orbit(g.representative, g.omega, false);
      out.push_back({rec->key, row.row, rec->size()});
    }
    return out;
  }();
  return keys;
}

}  // namespace

std::vector<int> match_table(std::vector<OrbitRecord>& orbits) {
  std::vector<bool> hit(exceptional_table().size(), false);
  for (auto& rec : orbits) {
    rec.table_row.reset();
    for (const auto& g : golden_keys()) {
      if (!hit[g.row - 1] && g.size == rec.size() && g.key == rec.key) {
        rec.table_row = g.row;
        hit[g.row - 1] = true;
        break;
      }
    }
  }
  std::vector<int> missing;
  for (std::size_t i = 0; i < hit.size(); ++i) {
    if (!hit[i]) missing.push_back(static_cast<int>(i) + 1);
  }
  return missing;
}

// ---------------------------------------------------------------------------
// Full search

namespace {

using FloatKey = std::vector<std::int64_t>;

std::int64_t quantize(double v) { return std::llround(v * 1e6); }

// Lexicographic minimum over the 24 symmetries of (size, w4, w, sorted points).
FloatKey float_key(const FloatOrbit& o, const Omega<double>& w) {
  FloatKey best;
  std::vector<std::array<std::int64_t, 3>> pts(o.points.size());
  for (const auto& s : Symmetry::all()) {
    const Omega<double> tw = transform_omega(s, w);
    for (std::size_t i = 0; i < o.points.size(); ++i) {
      const auto tp = transform_point(s, o.points[i]);
      pts[i] = {quantize(tp.x), quantize(tp.y), quantize(tp.z)};
    }
    std::sort(pts.begin(), pts.end());
    FloatKey key{static_cast<std::int64_t>(o.points.size()), quantize(w.w4), quantize(tw.wx),
                 quantize(tw.wy), quantize(tw.wz)};
    for (const auto& p : pts) key.insert(key.end(), p.begin(), p.end());
    if (best.empty() || key < best) best = std::move(key);
  }
  return best;
}

struct Hit {
  int cls;
  std::uint64_t index;
  std::size_t size;
};

struct Found {
  OrbitRecord record;
  std::size_t float_size;
  bool closed;
};

}  // namespace

SearchResult full_search(const SearchOptions& opts) {
  SearchResult result;
  const unsigned threads = std::max(1u, opts.threads);
  std::map<FloatKey, Hit> hits;

  for (int cls = 1; cls <= 4; ++cls) {
    ClassStats& st = result.stats[cls - 1];
    st.enumerated = class_size(cls);
    if (!opts.classes[cls - 1]) continue;
    const std::uint64_t total = st.enumerated;
    std::vector<ClassStats> local(threads);
    std::vector<std::map<FloatKey, Hit>> local_hits(threads);
    auto work = [&](unsigned t) {
      const std::uint64_t lo = total * t / threads;
      const std::uint64_t hi = total * (t + 1) / threads;
      FloatCloser closer(opts.eps);
      FloatOrbit orbit;
      ClassStats& s = local[t];
      for (std::uint64_t i = lo; i < hi; ++i) {
        const GenConfig g = config_at(cls, i);
        Vec3<double> r;
        Omega<double> w;
        if (!seed_float(g, r, w)) continue;
        ++s.kept;
        switch (closer.close(r, w, &orbit)) {
          case CloseStatus::finite: {
            ++s.finite;
            FloatKey key = float_key(orbit, w);
            local_hits[t].emplace(std::move(key), Hit{cls, i, orbit.points.size()});
            break;
          }
          case CloseStatus::cayley: ++s.cayley; break;
          case CloseStatus::cap_exceeded: ++s.cap_exceeded; break;
          case CloseStatus::not_finite: break;
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, t);
    work(0);
    for (auto& th : pool) th.join();
    std::map<FloatKey, Hit> class_hits;
    for (unsigned t = 0; t < threads; ++t) {
      st.kept += local[t].kept;
      st.finite += local[t].finite;
      st.cayley += local[t].cayley;
      st.cap_exceeded += local[t].cap_exceeded;
      for (auto& [k, h] : local_hits[t]) {
        auto [it, fresh] = class_hits.emplace(k, h);
        if (!fresh && h.index < it->second.index) it->second = h;
      }
    }
    st.distinct = class_hits.size();
    for (auto& [k, h] : class_hits) hits.emplace(k, h);  // earlier classes win
  }

  // exact pass, one record per double-precision key
  // one-point orbits are fixed by x, y and z, hence of type I by construction
  std::vector<const Hit*> todo;
  for (const auto& [k, h] : hits) {
    if (h.size == 1) {
      ++result.one_point_orbits;
    } else {
      todo.push_back(&h);
    }
  }
  std::vector<Found> found(todo.size());
  std::atomic<std::size_t> next{0};
  auto exact_work = [&] {
    for (std::size_t i = next++; i < todo.size(); i = next++) {
      const Hit& h = *todo[i];
      found[i].float_size = h.size;
      try {
        auto rec = close_config(config_at(h.cls, h.index));
        found[i].closed = rec.has_value();
        if (rec) found[i].record = std::move(*rec);
      } catch (const CapExceeded&) {
        found[i].closed = false;
      }
    }
  };
  {
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(exact_work);
    exact_work();
    for (auto& th : pool) th.join();
  }

  std::vector<OrbitRecord> exceptional;
  std::vector<SpecialHit> special;
  auto seen = [](const auto& list, const OrbitKey& key, auto get) {
    return std::any_of(list.begin(), list.end(), [&](const auto& e) { return get(e) == key; });
  };
  bool all_verified = true;
  for (auto& f : found) {
    if (!f.closed || f.record.size() != f.float_size) {
      ++result.discrepancies;
      continue;
    }
    if (opts.exact_verify && !verify_orbit(f.record)) {
      ++result.discrepancies;
      all_verified = false;
      continue;
    }
    if (auto m = classify_special(f.record)) {
      if (!seen(special, f.record.key, [](const SpecialHit& s) -> const OrbitKey& { return s.record.key; })) {
        special.push_back({*m, std::move(f.record)});
      }
      continue;
    }
    if (!seen(exceptional, f.record.key, [](const OrbitRecord& r) -> const OrbitKey& { return r.key; })) {
      exceptional.push_back(std::move(f.record));
    }
  }
  auto by_size_key = [](const OrbitRecord& a, const OrbitRecord& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.key < b.key;
  };
  std::sort(exceptional.begin(), exceptional.end(), by_size_key);
  std::sort(special.begin(), special.end(),
            [&](const SpecialHit& a, const SpecialHit& b) { return by_size_key(a.record, b.record); });
  match_table(exceptional);
  result.exceptional = std::move(exceptional);
  result.special = std::move(special);
  result.verified = opts.exact_verify && all_verified && result.discrepancies == 0;
  return result;
}

}  // namespace fricke
