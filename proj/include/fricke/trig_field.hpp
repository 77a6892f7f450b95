// Exact arithmetic in the ring spanned over Q by the numbers 2cos(pi r), r rational.
//
// A CosSum is a finite rational combination  sum_a c_a * 2cos(pi a)  with every
// angle folded into [0,1].  The representation is not unique (cosines satisfy
// linear relations), so equality is decided by reduction in a cyclotomic field:
// is_zero() embeds the sum into Q(zeta_{2L}), L = lcm of the angle denominators,
// and reduces modulo the 2L-th cyclotomic polynomial.

#ifndef FRICKE_TRIG_FIELD_HPP_
#define FRICKE_TRIG_FIELD_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fricke {

using Rational = mpq_class;

/// n/d in lowest terms (GMP requires canonical rationals for comparisons).
inline Rational make_rational(long n, long d = 1) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

/// Angle a (in units of pi) of the number 2cos(pi a).
///
/// Always stored reduced and folded into [0,1] using cos(pi(2-a)) = cos(pi a)
/// and cos(-pi a) = cos(pi a).  0/1 and 1/1 encode the constants 2 and -2.
struct RationalAngle {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static RationalAngle folded(std::int64_t num, std::int64_t den);

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;
  static RationalAngle parse(std::string_view text);

  friend bool operator==(const RationalAngle&, const RationalAngle&) = default;
  friend std::strong_ordering operator<=>(const RationalAngle& a, const RationalAngle& b) {
    const __int128 lhs = static_cast<__int128>(a.num) * b.den;
    const __int128 rhs = static_cast<__int128>(b.num) * a.den;
    return lhs <=> rhs;
  }
};

/// Element of the cosine ring, value = sum of coeff * 2cos(pi * angle).
class CosSum {
 public:
  using Term = std::pair<RationalAngle, Rational>;

  CosSum() = default;
  CosSum(int value) : CosSum(Rational(value)) {}  // NOLINT(google-explicit-constructor)
  CosSum(const Rational& value);                 // NOLINT(google-explicit-constructor)

  /// Single term 2cos(pi r) with r folded into [0,1].
  static CosSum cos(RationalAngle r);
  static CosSum cos(std::int64_t num, std::int64_t den) {
    return cos(RationalAngle::folded(num, den));
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// lcm of all angle denominators (1 for rational values).
  std::int64_t level() const;

  CosSum operator-() const;
  CosSum& operator+=(const CosSum& other);
  CosSum& operator-=(const CosSum& other);
  CosSum& operator*=(const CosSum& other) { return *this = *this * other; }
  CosSum& operator*=(const Rational& q);

  friend CosSum operator+(CosSum a, const CosSum& b) { return a += b; }
  friend CosSum operator-(CosSum a, const CosSum& b) { return a -= b; }
  friend CosSum operator*(const CosSum& a, const CosSum& b);
  friend CosSum operator*(CosSum a, const Rational& q) { return a *= q; }
  friend CosSum operator*(const Rational& q, CosSum a) { return a *= q; }

  /// Image under the Galois automorphism zeta_{2L} -> zeta_{2L}^k (k odd, coprime to L).
  CosSum galois(std::int64_t k) const;

  /// Equal element with at most phi(2L)/2 terms: coordinates in the basis
  /// 2cos(k pi / L), k = 0..deg-1, of Q(cos(pi/L)).  Deterministic.
  CosSum reduced() const;

  /// Multiplicative inverse via the product of Galois conjugates.  Throws on zero.
  CosSum inverse() const;

  bool is_zero() const;
  double to_double() const;
  /// 50-digit evaluation, used for sign decisions when doubles are inconclusive.
  std::string to_decimal(int digits = 40) const;
  int high_precision_sign() const;

  std::optional<Rational> as_rational() const;
  /// If the element equals 2cos(pi r) for some r in [0,1], return r.
  std::optional<RationalAngle> as_single_cos() const;

  /// Text form, e.g. "2*2cos(pi*1/5)-1".  parse() accepts the same grammar.
  std::string to_string() const;
  static CosSum parse(std::string_view text);

 private:
  void normalize();
  std::vector<Term> terms_;
};

CosSum cos_value(RationalAngle r);
inline CosSum neg(const CosSum& a) { return -a; }
inline CosSum add(const CosSum& a, const CosSum& b) { return a + b; }
inline CosSum mul(const CosSum& a, const CosSum& b) { return a * b; }
inline bool is_zero(const CosSum& a) { return a.is_zero(); }
inline double float_of(const CosSum& a) { return a.to_double(); }
bool exactly_equal(const CosSum& a, const CosSum& b);

/// Total order on ring elements: by double value, with exact tie-breaking when
/// the doubles are within 1e-10.
int compare(const CosSum& a, const CosSum& b);

/// Sorted list of doubles with a nearest-match lookup.
struct ValueEntry {
  double value;
  std::size_t index;
};
std::optional<std::size_t> match_dictionary(double v, const std::vector<ValueEntry>& dict,
                                            double eps);

// ---------------------------------------------------------------------------
// Cyclotomic backend.

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
/// Computed by dividing x^n - 1 by all Phi_d, d | n, d < n; cached.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);

/// Element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^{phi(n)-1},
/// reduced modulo Phi_n.  Zero has all-zero coefficients.
class CyclotomicElement {
 public:
  explicit CyclotomicElement(std::int64_t order);

  std::int64_t order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Adds c * zeta_n^k for any integer k.
  void add_power(std::int64_t k, const Rational& c);
  bool is_zero() const;

  static CyclotomicElement from_cos_sum(const CosSum& s);

 private:
  std::int64_t order_;
  std::vector<Rational> coeffs_;
};

/// Independent zero test via the tensor decomposition
/// Q(zeta_n) = (x) Q(zeta_{p^a}) over prime powers of n.  Sparse, works at any level.
bool is_zero_sparse(const std::vector<std::pair<std::int64_t, Rational>>& powers,
                    std::int64_t order);

}  // namespace fricke

#endif  // FRICKE_TRIG_FIELD_HPP_
