// SL(2) monodromy triples, the braid-type actions on them, trace invariants
// and reconstruction of a triple from its seven invariants.

#ifndef FRICKE_SL2_MONODROMY_HPP_
#define FRICKE_SL2_MONODROMY_HPP_

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include "fricke/trig_field.hpp"

namespace fricke {

class ReducibleLocus : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotRepresentable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// a + b*sqrt(d) with rational a, b and a fixed rational radicand d.
/// Elements with different radicands may only be mixed when one of them has b = 0.
class QuadNumber {
 public:
  QuadNumber() = default;
  QuadNumber(int a) : a_(a) {}                // NOLINT(google-explicit-constructor)
  QuadNumber(const Rational& a) : a_(a) {}    // NOLINT(google-explicit-constructor)
  QuadNumber(Rational a, Rational b, Rational d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}

  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }
  const Rational& radicand() const { return d_; }
  bool is_rational() const { return b_ == 0; }

  QuadNumber operator-() const { return {-a_, -b_, d_}; }
  friend QuadNumber operator+(const QuadNumber& x, const QuadNumber& y);
  friend QuadNumber operator-(const QuadNumber& x, const QuadNumber& y) { return x + (-y); }
  friend QuadNumber operator*(const QuadNumber& x, const QuadNumber& y);
  friend QuadNumber operator/(const QuadNumber& x, const QuadNumber& y);
  friend bool operator==(const QuadNumber& x, const QuadNumber& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  std::string to_string() const;

 private:
  static Rational common_radicand(const QuadNumber& x, const QuadNumber& y);
  Rational a_ = 0;
  Rational b_ = 0;
  Rational d_ = 0;
};

template <typename T>
struct Mat2 {
  T a = 1, b = 0, c = 0, d = 1;  // [[a, b], [c, d]]

  static Mat2 identity() { return {}; }
  T trace() const { return a + d; }
  T det() const { return a * d - b * c; }
  /// Inverse of a determinant-one matrix.
  Mat2 inverse() const { return {d, -b, -c, a}; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

template <typename T>
struct Triple {
  Mat2<T> mx, my, mz;
};

template <typename T>
struct SevenTuple {
  T px, py, pz, pinf, X, Y, Z;
  friend bool operator==(const SevenTuple&, const SevenTuple&) = default;
};

enum class Generator { x, y, z, s, t, r };

template <typename T>
Triple<T> act(Generator g, const Triple<T>& m) {
  const auto& [mx, my, mz] = m;
  switch (g) {
    case Generator::x:
      return {mx.inverse(), my.inverse(), mx * mz.inverse() * mx.inverse()};
    case Generator::y:
      return {my * mx.inverse() * my.inverse(), my.inverse(), mz.inverse()};
    case Generator::z:
      return {mx.inverse(), mz * my.inverse() * mz.inverse(), mz.inverse()};
    case Generator::s:
      return {mz, mx, my};
    case Generator::t:
      return {mz, my, my * mx * my.inverse()};
    case Generator::r:
      return {mz.inverse(), my.inverse(), mx.inverse()};
  }
  throw std::invalid_argument("unknown generator");
}

template <typename T>
SevenTuple<T> invariants(const Triple<T>& m) {
  return {m.mx.trace(),
          m.my.trace(),
          m.mz.trace(),
          (m.mz * m.my * m.mx).trace(),
          (m.my * m.mz).trace(),
          (m.mz * m.mx).trace(),
          (m.mx * m.my).trace()};
}

/// Omega parameters and the Jimbo-Fricke residual of a seven-tuple.
template <typename T>
T fricke_residual_of(const SevenTuple<T>& s) {
  const T wx = s.px * s.pinf + s.py * s.pz;
  const T wy = s.py * s.pinf + s.pz * s.px;
  const T wz = s.pz * s.pinf + s.px * s.py;
  const T w4 = s.px * s.px + s.py * s.py + s.pz * s.pz + s.pinf * s.pinf + s.px * s.py * s.pz * s.pinf;
  return s.X * s.Y * s.Z + s.X * s.X + s.Y * s.Y + s.Z * s.Z - wx * s.X - wy * s.Y - wz * s.Z + w4 - 4;
}

/// Tr(Mx My Mz), the cyclic orientation opposite to pinf = Tr(Mz My Mx).
template <typename T>
T derived_trace_tbac(const SevenTuple<T>& s) {
  return s.Z * s.pz + s.Y * s.py + s.X * s.px - s.px * s.py * s.pz - s.pinf;
}

SevenTuple<QuadNumber> lift(const SevenTuple<Rational>& s);

/// Triple with the given invariants, normalized with an anchor matrix diagonal.
/// Throws ReducibleLocus or NotRepresentable.
Triple<QuadNumber> reconstruct(const SevenTuple<Rational>& s);

/// True when the invariants satisfy the one-point orbit relations
/// wX = 2X + YZ, wY = 2Y + XZ, wZ = 2Z + XY.
bool satisfies_reducible_relations(const SevenTuple<Rational>& s);

/// Random determinant-one rational matrix built from shears and a diagonal factor.
Mat2<Rational> random_sl2(std::mt19937_64& rng, int max_param = 3);
Triple<Rational> random_triple(std::mt19937_64& rng, int max_param = 3);

}  // namespace fricke

#endif  // FRICKE_SL2_MONODROMY_HPP_
