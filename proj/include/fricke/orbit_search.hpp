// Exhaustive search for finite orbits: the good-coordinate dictionaries,
// enumeration of generating configurations in four classes, orbit closure
// (fast in doubles, certified in the cosine ring), special orbit types,
// Cayley orbits and the embedded table of the 45 exceptional orbits.

#ifndef FRICKE_ORBIT_SEARCH_HPP_
#define FRICKE_ORBIT_SEARCH_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fricke/fricke_action.hpp"
#include "fricke/trig_field.hpp"

namespace fricke {

struct DictEntry {
  RationalAngle angle;  // value = 2cos(pi * angle)
  CosSum value;
  double fvalue;
};

/// Values 2cos(pi n/N), 0 < n < N, gcd(n, N) = 1, sorted by value.
struct Dictionary {
  std::string label;
  std::vector<DictEntry> entries;
  std::vector<ValueEntry> lookup;

  std::size_t size() const { return entries.size(); }
  std::optional<std::size_t> match(double v, double eps) const {
    return match_dictionary(v, lookup, eps);
  }
  /// Smallest distance between consecutive values.
  double min_gap() const;
};

struct Dictionaries {
  Dictionary s1, s2, s3, s4;
};

/// Builds S1..S4 and checks their sizes (31, 46, 71, 83) and spacing.
Dictionaries build_dictionaries();
const Dictionaries& dictionaries();

// ---------------------------------------------------------------------------
// Generating configurations

/// A configuration of good coordinates.  Entries are indices into S4 (which
/// contains S1), laid out per class as
///   class 1: X, Y, Z, X', Y', Z'     class 2: X, Y, Z, Y'
///   class 3: X, X', Y, Y', Z         class 4: X, X', Y, Z
struct GenConfig {
  int cls = 1;
  std::uint64_t index = 0;  // position in the class enumeration
  std::array<std::int16_t, 6> c{};
};

/// Number of configurations in a class arena.
std::uint64_t class_size(int cls);
GenConfig config_at(int cls, std::uint64_t index);

/// Seed point r = (X, Y, Z) and parameters, in doubles and exactly.
/// Returns false when the class filter rejects the configuration
/// (class 3: Z' outside S1).
bool seed_float(const GenConfig& g, Vec3<double>& r, Omega<double>& w);
void seed_exact(const GenConfig& g, Point3& r, Omega<CosSum>& w);

// ---------------------------------------------------------------------------
// Orbit closure

enum class CloseStatus { finite, not_finite, cayley, cap_exceeded };
std::string status_name(CloseStatus s);

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Hard cap on orbit points: good points never exceed 71^2 * 2 and bad ones N_g + 2.
constexpr std::size_t kOrbitCap = 2 * 10082 + 2;

struct FloatOrbit {
  std::vector<Vec3<double>> points;
};

/// Reusable scratch space for the double-precision closure (one per thread).
class FloatCloser {
 public:
  explicit FloatCloser(double eps = 1e-8);
  ~FloatCloser();
  FloatCloser(const FloatCloser&) = delete;
  FloatCloser& operator=(const FloatCloser&) = delete;

  /// Closure from one seed point following the search rules: a new coordinate
  /// must lie in S4 or make the new point fixed by the two other generators.
  CloseStatus close(const Vec3<double>& seed, const Omega<double>& w, FloatOrbit* out = nullptr);

 private:
  struct Impl;
  Impl* impl_;
};

struct OrbitRecord {
  std::vector<Point3> points;
  Omega<CosSum> omega;
  std::size_t size() const { return points.size(); }
  int source_class = 0;  // 0 when not produced by the search
  std::uint64_t source_index = 0;
  OrbitKey key;
  std::optional<int> table_row;  // row of the table of exceptional orbits
};

/// Exact closure.  With search_rules, stops (returns nullopt) as soon as a new
/// coordinate is neither in S4 nor produces a point fixed by the other two
/// generators; without, computes the plain orbit up to the cap.
std::optional<OrbitRecord> close_orbit(const Point3& seed, const Omega<CosSum>& w,
                                       bool search_rules = true,
                                       std::size_t cap = kOrbitCap);

/// Closure of a generating configuration (exact).  Cayley parameters give nullopt.
std::optional<OrbitRecord> close_config(const GenConfig& g);

/// Every point satisfies the Fricke relation and every image is a point of the orbit.
bool verify_orbit(const OrbitRecord& rec);

// ---------------------------------------------------------------------------
// Special orbits

enum class SpecialType { I, II, III, IV };
std::string special_name(SpecialType t);

struct SpecialMatch {
  SpecialType type;
  std::vector<CosSum> parameters;  // I: (X,Y,Z); II: (X',X''); III, IV: (omega)
  std::size_t symmetry = 0;        // index into Symmetry::all() used for the match
};

/// Orbits of at most four points matching the one-, two-, three- and four-point families.
std::optional<SpecialMatch> classify_special(const OrbitRecord& rec);

/// Orbit on the Cayley cubic generated by (-2cos pi(rY+rZ), 2cos pi rY, 2cos pi rZ).
OrbitRecord cayley_orbit(const Rational& ry, const Rational& rz);

// ---------------------------------------------------------------------------
// Table of exceptional orbits

struct TableRow {
  int row;
  std::size_t size;
  std::array<const char*, 3> omega;  // cosine-ring text
  const char* four_minus_omega4;
  std::array<const char*, 3> r;  // representative point angles
};

const std::vector<TableRow>& exceptional_table();

struct GoldenOrbit {
  TableRow row;
  Omega<CosSum> omega;
  Point3 representative;
};
GoldenOrbit golden_orbit(const TableRow& row);

// ---------------------------------------------------------------------------
// Full search

struct SearchOptions {
  unsigned threads = 1;
  double eps = 1e-8;
  bool exact_verify = true;
  std::array<bool, 4> classes{true, true, true, true};
};

struct ClassStats {
  std::uint64_t enumerated = 0;  // configurations in the arena
  std::uint64_t kept = 0;        // passing the class filter
  std::uint64_t finite = 0;      // closures that ended finite
  std::uint64_t cayley = 0;      // Cayley bailouts
  std::uint64_t cap_exceeded = 0;
  std::uint64_t distinct = 0;    // distinct finite orbits (double-precision key)
};

struct SpecialHit {
  SpecialMatch match;
  OrbitRecord record;
};

struct SearchResult {
  std::vector<OrbitRecord> exceptional;  // sorted by (size, key)
  std::array<ClassStats, 4> stats{};
  std::vector<SpecialHit> special;      // orbits of types II-IV (and I, if not single points)
  std::size_t one_point_orbits = 0;     // distinct single-point orbits (type I), counted only
  std::size_t discrepancies = 0;  // double vs exact closure mismatches
  bool verified = false;
};

SearchResult full_search(const SearchOptions& opts = {});

/// Assigns table rows by canonical key; returns rows of the table left unmatched.
std::vector<int> match_table(std::vector<OrbitRecord>& orbits);

}  // namespace fricke

#endif  // FRICKE_ORBIT_SEARCH_HPP_
