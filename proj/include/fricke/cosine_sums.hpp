// Rational solutions of  sum_j cos(2 pi phi_j) = 0  (n <= 6) and of the
// root-of-unity version  sum_j exp(2 pi i phi_j) = 0, by exhaustive enumeration.

#ifndef FRICKE_COSINE_SUMS_HPP_
#define FRICKE_COSINE_SUMS_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fricke/trig_field.hpp"

namespace fricke {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Family {
  II_phi,
  III_phi,
  III_1,
  IV,
  V_1,
  V_2,
  V_3,
  V_phi,
  VI_1,
  VI_2,
  VI_3,
  VI_4,
  VI_5,
  VI_phi,
  other,
};

std::string family_name(Family f);

struct FamilyMatch {
  Family family = Family::other;
  std::optional<Rational> phi;  // parameter of an infinite family
};

struct PhiTuple {
  std::vector<Rational> phis;  // canonical: each in [0, 1/2], sorted
  bool irreducible = false;
  FamilyMatch family;

  std::string to_string() const;
};

/// Exact test of sum_j cos(2 pi phi_j) = 0.
bool is_vanishing(const std::vector<Rational>& phis);
/// No proper nonempty subset vanishes (assumes the whole tuple does).
bool is_irreducible(const std::vector<Rational>& phis);

/// Fold each entry into [0, 1/2], sort, and take the smaller of the tuple and
/// its image under phi -> 1/2 - phi.
std::vector<Rational> canonicalize(const std::vector<Rational>& phis);

FamilyMatch family_tag(const std::vector<Rational>& canonical);

/// Allowed denominators: either every denominator up to a bound, or the divisors of a number.
struct DenominatorSpec {
  enum class Kind { up_to, divisors_of } kind = Kind::divisors_of;
  std::int64_t value = 60;

  std::vector<std::int64_t> denominators() const;
  static DenominatorSpec parse(const std::string& text);  // "60" = divisors, "<=42" = bound
};

struct EnumerationOptions {
  double budget = 5e8;  // maximal number of leading (n-1)-tuples visited
};

/// All canonical irreducible vanishing n-tuples whose denominators are allowed,
/// sorted lexicographically.
std::vector<PhiTuple> enumerate(int n, const DenominatorSpec& dens,
                                const EnumerationOptions& opts = {});

/// Irreducible vanishing sums of n roots of unity exp(2 pi i k/D), up to rotation
/// and permutation; each tuple is rotated so that it starts with 0 and is
/// lexicographically minimal among such rotations.
struct UnityTuple {
  std::vector<Rational> phis;
  std::string family;  // "pair", "triple", "5-tuple", "6-tuple" or "other"
};
std::vector<UnityTuple> enumerate_unity_sums(int n, std::int64_t denominator,
                                             const EnumerationOptions& opts = {});

}  // namespace fricke

#endif  // FRICKE_COSINE_SUMS_HPP_
