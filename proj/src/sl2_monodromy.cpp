#include "fricke/sl2_monodromy.hpp"

#include <array>
#include <functional>
#include <optional>

namespace fricke {

Rational QuadNumber::common_radicand(const QuadNumber& x, const QuadNumber& y) {
  if (x.b_ == 0) return y.d_;
  if (y.b_ == 0) return x.d_;
  if (x.d_ != y.d_) throw std::logic_error("mixing different quadratic fields");
  return x.d_;
}

QuadNumber operator+(const QuadNumber& x, const QuadNumber& y) {
  return {x.a_ + y.a_, x.b_ + y.b_, QuadNumber::common_radicand(x, y)};
}

QuadNumber operator*(const QuadNumber& x, const QuadNumber& y) {
  const Rational d = QuadNumber::common_radicand(x, y);
  return {x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d};
}

QuadNumber operator/(const QuadNumber& x, const QuadNumber& y) {
  const Rational d = QuadNumber::common_radicand(x, y);
  const Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * d;
  if (norm == 0) throw std::domain_error("division by zero in quadratic field");
  const QuadNumber conj{y.a_ / norm, -y.b_ / norm, d};
  return x * conj;
}

std::string QuadNumber::to_string() const {
  if (b_ == 0) return a_.get_str();
  return a_.get_str() + (b_ < 0 ? "-" : "+") + Rational(abs(b_)).get_str() + "*sqrt(" +
         d_.get_str() + ")";
}

SevenTuple<QuadNumber> lift(const SevenTuple<Rational>& s) {
  return {s.px, s.py, s.pz, s.pinf, s.X, s.Y, s.Z};
}

bool satisfies_reducible_relations(const SevenTuple<Rational>& s) {
  const Rational wx = s.px * s.pinf + s.py * s.pz;
  const Rational wy = s.py * s.pinf + s.pz * s.px;
  const Rational wz = s.pz * s.pinf + s.px * s.py;
  return wx == 2 * s.X + s.Y * s.Z && wy == 2 * s.Y + s.X * s.Z && wz == 2 * s.Z + s.X * s.Y;
}

namespace {

struct AnchorData {
  Rational ta, tb, tc, tab, tac, tbc, tabc;
  // assembles (Mx, My, Mz) from the normalized (Ma, Mb, Mc)
  std::function<Triple<QuadNumber>(const Mat2<QuadNumber>&, const Mat2<QuadNumber>&,
                                   const Mat2<QuadNumber>&)>
      assemble;
};

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  mpz_class n = q.get_num();
  mpz_class d = q.get_den();
  mpz_class rn = sqrt(n);
  mpz_class rd = sqrt(d);
  if (rn * rn != n || rd * rd != d) return std::nullopt;
  return Rational(rn, rd);
}

// Solve for (Mb, Mc) with Ma = diag(lambda, 1/lambda).
std::optional<Triple<QuadNumber>> solve_anchor(const AnchorData& in) {
  const Rational disc = in.ta * in.ta - 4;
  if (disc == 0) return std::nullopt;  // eigenvalues are +-1
  QuadNumber lambda;
  if (auto root = rational_sqrt(disc)) {
    lambda = QuadNumber((in.ta + *root) / 2);
  } else {
    lambda = QuadNumber(in.ta / 2, Rational(1, 2), disc);
  }
  const QuadNumber mu = QuadNumber(in.ta) - lambda;
  const QuadNumber gap = lambda - mu;

  const QuadNumber b11 = (QuadNumber(in.tab) - mu * in.tb) / gap;
  const QuadNumber b22 = QuadNumber(in.tb) - b11;
  const QuadNumber c11 = (QuadNumber(in.tac) - mu * in.tc) / gap;
  const QuadNumber c22 = QuadNumber(in.tc) - c11;
  const QuadNumber beta = b11 * b22 - 1;   // b12 * b21
  const QuadNumber gamma = c11 * c22 - 1;  // c12 * c21
  // u = b12 c21, v = b21 c12 from the traces of Mb Mc and Ma Mb Mc
  const QuadNumber rest_bc = QuadNumber(in.tbc) - b11 * c11 - b22 * c22;
  const QuadNumber rest_abc = QuadNumber(in.tabc) - lambda * b11 * c11 - mu * b22 * c22;
  const QuadNumber u = (rest_abc - mu * rest_bc) / gap;
  const QuadNumber v = rest_bc - u;

  QuadNumber b12, b21, c12, c21;
  if (!beta.is_zero()) {
    b12 = 1;
    b21 = beta;
    c21 = u;
    c12 = v / beta;
  } else if (!gamma.is_zero()) {
    c12 = 1;
    c21 = gamma;
    b21 = v;
    b12 = u / gamma;
  } else if (!u.is_zero()) {
    b12 = 1;
    c21 = u;
  } else if (!v.is_zero()) {
    b21 = 1;
    c12 = v;
  } else {
    throw ReducibleLocus("matrices are simultaneously triangular");
  }
  const Mat2<QuadNumber> ma{lambda, 0, 0, mu};
  const Mat2<QuadNumber> mb{b11, b12, b21, b22};
  const Mat2<QuadNumber> mc{c11, c12, c21, c22};
  if (!(mb.det() == QuadNumber(1)) || !(mc.det() == QuadNumber(1))) {
    throw NotRepresentable("invariants are inconsistent with SL(2) matrices");
  }
  return in.assemble(ma, mb, mc);
}

}  // namespace

Triple<QuadNumber> reconstruct(const SevenTuple<Rational>& s) {
  if (fricke_residual_of(s) != 0) throw NotRepresentable("Jimbo-Fricke residual is nonzero");
  if (satisfies_reducible_relations(s)) {
    throw ReducibleLocus("invariants satisfy the one-point orbit relations");
  }
  const Rational tbac = derived_trace_tbac(s);
  using M = Mat2<QuadNumber>;
  const std::array<AnchorData, 9> anchors{{
      {s.px, s.py, s.pz, s.Z, s.Y, s.X, tbac,
       [](const M& a, const M& b, const M& c) { return Triple<QuadNumber>{a, b, c}; }},
      {s.py, s.pz, s.px, s.X, s.Z, s.Y, tbac,
       [](const M& a, const M& b, const M& c) { return Triple<QuadNumber>{c, a, b}; }},
      {s.pz, s.px, s.py, s.Y, s.X, s.Z, tbac,
       [](const M& a, const M& b, const M& c) { return Triple<QuadNumber>{b, c, a}; }},
      // a = Mx My, b = My^-1, c = Mz
      {s.Z, s.py, s.pz, s.px, tbac, s.py * s.pz - s.X, s.Y,
       [](const M& a, const M& b, const M& c) {
         return Triple<QuadNumber>{a * b, b.inverse(), c};
       }},
      // a = My Mz, b = Mz^-1, c = Mx
      {s.X, s.pz, s.px, s.py, tbac, s.pz * s.px - s.Y, s.Z,
       [](const M& a, const M& b, const M& c) {
         return Triple<QuadNumber>{c, a * b, b.inverse()};
       }},
      // a = Mz Mx, b = Mx^-1, c = My
      {s.Y, s.px, s.py, s.pz, tbac, s.px * s.py - s.Z, s.X,
       [](const M& a, const M& b, const M& c) {
         return Triple<QuadNumber>{b.inverse(), c, a * b};
       }},
      // a = Mx My^-1, b = My, c = Mz
      {s.px * s.py - s.Z, s.py, s.pz, s.px, s.py * s.Y - tbac, s.X, s.Y,
       [](const M& a, const M& b, const M& c) { return Triple<QuadNumber>{a * b, b, c}; }},
      // a = My Mz^-1, b = Mz, c = Mx
      {s.py * s.pz - s.X, s.pz, s.px, s.py, s.pz * s.Z - tbac, s.Y, s.Z,
       [](const M& a, const M& b, const M& c) { return Triple<QuadNumber>{c, a * b, b}; }},
      // a = Mz Mx^-1, b = Mx, c = My
      {s.pz * s.px - s.Y, s.px, s.py, s.pz, s.px * s.X - tbac, s.Z, s.X,
       [](const M& a, const M& b, const M& c) { return Triple<QuadNumber>{b, c, a * b}; }},
  }};
  for (const auto& anchor : anchors) {
    auto triple = solve_anchor(anchor);
    if (!triple) continue;
    if (!(invariants(*triple) == lift(s))) {
      throw NotRepresentable("reconstructed triple does not reproduce the invariants");
    }
    return *triple;
  }
  throw ReducibleLocus("every anchor has eigenvalues +-1");
}

Mat2<Rational> random_sl2(std::mt19937_64& rng, int max_param) {
  std::uniform_int_distribution<int> num(-max_param, max_param);
  std::uniform_int_distribution<int> den(1, max_param);
  std::uniform_int_distribution<int> kind(0, 2);
  Mat2<Rational> m;
  for (int step = 0; step < 4; ++step) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    switch (kind(rng)) {
      case 0:
        m = m * Mat2<Rational>{1, q, 0, 1};
        break;
      case 1:
        m = m * Mat2<Rational>{1, 0, q, 1};
        break;
      default:
        if (q != 0) m = m * Mat2<Rational>{q, 0, 0, 1 / q};
        break;
    }
  }
  return m;
}

Triple<Rational> random_triple(std::mt19937_64& rng, int max_param) {
  return {random_sl2(rng, max_param), random_sl2(rng, max_param), random_sl2(rng, max_param)};
}

}  // namespace fricke
