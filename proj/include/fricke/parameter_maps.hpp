// Painleve VI parameters theta and the orbit parameters omega: the map between
// them, the cubic satisfied by xi = sum p^2, Backlund transformations acting on
// both, and recovery of rational theta from omega.

#ifndef FRICKE_PARAMETER_MAPS_HPP_
#define FRICKE_PARAMETER_MAPS_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fricke/fricke_action.hpp"
#include "fricke/trig_field.hpp"

namespace fricke {

struct Theta {
  Rational tx, ty, tz, tinf;

  Rational delta() const { return (tx + ty + tz + tinf) / 2; }
  Rational& operator[](int i) { return i == 0 ? tx : (i == 1 ? ty : (i == 2 ? tz : tinf)); }
  const Rational& operator[](int i) const {
    return i == 0 ? tx : (i == 1 ? ty : (i == 2 ? tz : tinf));
  }

  friend bool operator==(const Theta& a, const Theta& b) {
    return a.tx == b.tx && a.ty == b.ty && a.tz == b.tz && a.tinf == b.tinf;
  }
  friend bool operator<(const Theta& a, const Theta& b);

  /// "(tx,ty,tz,tinf)" with rationals as n/d.
  std::string to_string() const;
  /// Accepts "a,b,c,d" or "(a,b,c,d)".
  static Theta parse(std::string_view text);
};

/// p = 2cos(pi theta) for each of x, y, z, inf.
struct PTuple {
  CosSum px, py, pz, pinf;
};

PTuple p_of(const Theta& t);
Omega<CosSum> omega_from_p(const PTuple& p);
Omega<CosSum> omega_from_theta(const Theta& t);

/// xi^3 - a xi^2 + b xi - c.
struct XiCubic {
  CosSum a, b, c;
  CosSum evaluate(const CosSum& xi) const;
};

XiCubic xi_cubic(const Omega<CosSum>& w);

/// The three roots: xi0 = sum p^2, xi+- = 8(1 + prod cos pi theta +- prod sin pi theta).
struct XiRoots {
  CosSum xi0, xi_plus, xi_minus;
};

XiRoots xi_roots(const Theta& t);

// ---------------------------------------------------------------------------
// Backlund transformations

enum class BT { s_x, s_y, s_z, s_inf, s_delta, r_x, r_y, r_z, P_xy, P_yz };

inline constexpr std::array<BT, 10> kAllBT{BT::s_x, BT::s_y,   BT::s_z, BT::s_inf, BT::s_delta,
                                           BT::r_x, BT::r_y,   BT::r_z, BT::P_xy,  BT::P_yz};

std::string bt_name(BT b);
std::optional<BT> parse_bt(std::string_view name);

Theta apply_bt(BT b, const Theta& t);
Omega<CosSum> apply_bt(BT b, const Omega<CosSum>& w);

/// Applies a word of the form "s_x s_delta s_y": the rightmost letter acts first.
Theta apply_word(const std::vector<BT>& word, const Theta& t);

enum class ShiftAxis { x, y, z, inf };

/// The composite translating theta_nu by 2, built from the generators s_nu.
std::vector<BT> shift_word(ShiftAxis axis);
Theta shift_operator(ShiftAxis axis, const Theta& t);

/// True if b lies in the orbit of a under the affine D4 group generated by
/// s_x, s_y, s_z, s_inf, s_delta.  Decided by exhaustive search modulo the
/// translation lattice of the group.
bool d4_related(const Theta& a, const Theta& b);

/// Canonical representative of t modulo the translation lattice
/// {v in Z^4 : all coordinates of equal parity}: tx in [0,1), others in [0,2).
Theta reduce_mod_lattice(const Theta& t);

// ---------------------------------------------------------------------------
// theta recovery

/// All theta with entries in [0,1], denominators <= den_bound, mapping exactly
/// to (wX, wY, wZ, w4).  Sorted.
std::vector<Theta> theta_candidates(const Omega<CosSum>& w, int den_bound);

}  // namespace fricke

#endif  // FRICKE_PARAMETER_MAPS_HPP_
