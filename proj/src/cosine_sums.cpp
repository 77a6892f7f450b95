#include "fricke/cosine_sums.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <set>

namespace fricke {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;
constexpr double kTol = 1e-9;

std::int64_t num_of(const Rational& q) { return q.get_num().get_si(); }
std::int64_t den_of(const Rational& q) { return q.get_den().get_si(); }

// 2cos(pi a) for rational a.
CosSum cos_pi(const Rational& a) { return CosSum::cos(num_of(a), den_of(a)); }

Rational mod_one(const Rational& q) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return q - Rational(fl);
}

Rational fold_half(const Rational& q) {
  const Rational r = mod_one(q);
  return r > Rational(1, 2) ? Rational(1 - r) : r;
}

double to_d(const Rational& q) { return q.get_d(); }

double float_cos_sum(const std::vector<Rational>& phis, unsigned mask) {
  double s = 0.0;
  for (std::size_t i = 0; i < phis.size(); ++i) {
    if (mask & (1u << i)) s += std::cos(kTwoPi * to_d(phis[i]));
  }
  return s;
}

bool exact_cos_sum_zero(const std::vector<Rational>& phis, unsigned mask) {
  CosSum s;
  for (std::size_t i = 0; i < phis.size(); ++i) {
    if (mask & (1u << i)) s += cos_pi(2 * phis[i]);
  }
  return s.is_zero();
}

bool subset_vanishes(const std::vector<Rational>& phis, unsigned mask) {
  if (std::abs(float_cos_sum(phis, mask)) > kTol) return false;
  return exact_cos_sum_zero(phis, mask);
}

// Real and imaginary parts of sum exp(2 pi i phi) over a subset, exactly.
bool unity_subset_vanishes(const std::vector<Rational>& phis, unsigned mask) {
  std::complex<double> s = 0.0;
  for (std::size_t i = 0; i < phis.size(); ++i) {
    if (mask & (1u << i)) s += std::polar(1.0, kTwoPi * to_d(phis[i]));
  }
  if (std::abs(s) > kTol) return false;
  CosSum re, im;
  for (std::size_t i = 0; i < phis.size(); ++i) {
    if (!(mask & (1u << i))) continue;
    re += cos_pi(2 * phis[i]);
    im += cos_pi(2 * phis[i] - Rational(1, 2));  // sin(2 pi phi) = cos(2 pi (phi - 1/4))
  }
  return re.is_zero() && im.is_zero();
}

std::vector<Rational> fractions_with_denominators(const std::vector<std::int64_t>& dens,
                                                  const Rational& upper, bool include_upper) {
  std::set<Rational> values;
  for (std::int64_t d : dens) {
    for (std::int64_t k = 0; k <= d; ++k) {
      if (std::gcd(k, d) != 1 && !(k == 0 && d == 1)) continue;
      Rational q = make_rational(k, d);
      if (q < upper || (include_upper && q == upper)) values.insert(q);
    }
  }
  return {values.begin(), values.end()};
}

double binomial(double n, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

std::vector<Rational> parse_tuple(std::initializer_list<std::pair<int, int>> entries) {
  std::vector<Rational> out;
  for (auto [n, d] : entries) out.push_back(make_rational(n, d));
  return out;
}

struct FamilyShape {
  Family family;
  std::vector<Rational> offsets;
};

const std::vector<FamilyShape>& parametric_families() {
  static const std::vector<FamilyShape> families = {
      {Family::III_phi, parse_tuple({{0, 1}, {1, 3}, {-1, 3}})},
      {Family::V_phi, parse_tuple({{0, 1}, {1, 5}, {2, 5}, {3, 5}, {4, 5}})},
      {Family::VI_phi, parse_tuple({{1, 6}, {-1, 6}, {1, 5}, {2, 5}, {3, 5}, {4, 5}})},
  };
  return families;
}

const std::map<std::vector<Rational>, Family>& sporadic_tuples() {
  static const std::map<std::vector<Rational>, Family> table = [] {
    std::map<std::vector<Rational>, Family> t;
    auto add = [&](Family f, const std::vector<Rational>& tuple) { t.emplace(canonicalize(tuple), f); };
    add(Family::III_1, parse_tuple({{1, 10}, {3, 10}, {1, 3}}));
    add(Family::IV, parse_tuple({{0, 1}, {1, 5}, {1, 3}, {2, 5}}));
    add(Family::IV, parse_tuple({{1, 30}, {1, 6}, {11, 30}, {2, 5}}));
    add(Family::IV, parse_tuple({{1, 15}, {4, 15}, {3, 10}, {1, 3}}));
    add(Family::IV, parse_tuple({{1, 7}, {2, 7}, {3, 7}, {1, 6}}));
    add(Family::V_1, parse_tuple({{0, 1}, {1, 30}, {1, 3}, {11, 30}, {2, 5}}));
    add(Family::V_1, parse_tuple({{0, 1}, {1, 5}, {7, 30}, {1, 3}, {13, 30}}));
    add(Family::V_3, parse_tuple({{1, 7}, {2, 7}, {3, 7}, {0, 1}, {1, 3}}));
    add(Family::V_3, parse_tuple({{1, 7}, {2, 7}, {3, 7}, {1, 10}, {3, 10}}));
    add(Family::VI_1, parse_tuple({{1, 11}, {2, 11}, {3, 11}, {4, 11}, {5, 11}, {1, 6}}));
    add(Family::VI_5, parse_tuple({{1, 7}, {2, 7}, {3, 7}, {0, 1}, {1, 5}, {2, 5}}));
    add(Family::VI_5, parse_tuple({{1, 7}, {2, 7}, {3, 7}, {1, 15}, {4, 15}, {3, 10}}));
    add(Family::VI_5, parse_tuple({{1, 7}, {2, 7}, {3, 7}, {1, 10}, {2, 15}, {7, 15}}));
    const Rational sixth(1, 6);
    for (int L = 1; L <= 3; ++L) {
      const Rational a = make_rational(L, 7);
      const Rational b = make_rational(2 * L, 7);
      const Rational c = make_rational(3 * L, 7);
      add(Family::V_2, {a + sixth, a - sixth, b, c, sixth});
      add(Family::VI_2, {a + sixth, a - sixth, b, c, 0, Rational(1, 3)});
      add(Family::VI_3, {a + sixth, a - sixth, b, c, Rational(1, 10), Rational(3, 10)});
      add(Family::VI_4, {a + sixth, a - sixth, b + sixth, b - sixth, c, sixth});
    }
    return t;
  }();
  return table;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::II_phi: return "II_phi";
    case Family::III_phi: return "III_phi";
    case Family::III_1: return "III_1";
    case Family::IV: return "IV";
    case Family::V_1: return "V_1";
    case Family::V_2: return "V_2";
    case Family::V_3: return "V_3";
    case Family::V_phi: return "V_phi";
    case Family::VI_1: return "VI_1";
    case Family::VI_2: return "VI_2";
    case Family::VI_3: return "VI_3";
    case Family::VI_4: return "VI_4";
    case Family::VI_5: return "VI_5";
    case Family::VI_phi: return "VI_phi";
    case Family::other: return "other";
  }
  return "other";
}

std::string PhiTuple::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < phis.size(); ++i) {
    if (i) out += ",";
    out += phis[i].get_str();
  }
  return out + ")";
}

bool is_vanishing(const std::vector<Rational>& phis) {
  return exact_cos_sum_zero(phis, (1u << phis.size()) - 1);
}

bool is_irreducible(const std::vector<Rational>& phis) {
  const unsigned full = (1u << phis.size()) - 1;
  for (unsigned mask = 1; mask < full; ++mask) {
    if (subset_vanishes(phis, mask)) return false;
  }
  return true;
}

std::vector<Rational> canonicalize(const std::vector<Rational>& phis) {
  std::vector<Rational> a, b;
  for (const auto& p : phis) {
    const Rational f = fold_half(p);
    a.push_back(f);
    b.push_back(Rational(1, 2) - f);
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return std::min(a, b);
}

FamilyMatch family_tag(const std::vector<Rational>& canonical) {
  const std::vector<Rational> t = canonicalize(canonical);
  if (t.size() == 2) {
    if (canonicalize({t[0], Rational(1, 2) - t[0]}) == t) return {Family::II_phi, t[0]};
  }
  for (const auto& shape : parametric_families()) {
    if (shape.offsets.size() != t.size()) continue;
    for (const auto& entry : t) {
      for (const auto& offset : shape.offsets) {
        for (int sign : {1, -1}) {
          for (const Rational& shift : {Rational(0), Rational(1, 2)}) {
            const Rational phi = mod_one(sign * entry - offset + shift);
            std::vector<Rational> member;
            for (const auto& o : shape.offsets) member.push_back(phi + o);
            if (canonicalize(member) == t) return {shape.family, phi};
          }
        }
      }
    }
  }
  if (auto it = sporadic_tuples().find(t); it != sporadic_tuples().end()) return {it->second, {}};
  return {Family::other, {}};
}

std::vector<std::int64_t> DenominatorSpec::denominators() const {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d <= value; ++d) {
    if (kind == Kind::up_to || value % d == 0) out.push_back(d);
  }
  return out;
}

DenominatorSpec DenominatorSpec::parse(const std::string& text) {
  DenominatorSpec spec;
  std::string body = text;
  if (body.rfind("<=", 0) == 0) {
    spec.kind = Kind::up_to;
    body = body.substr(2);
  }
  try {
    spec.value = std::stoll(body);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad denominator spec: " + text);
  }
  if (spec.value < 1) throw std::invalid_argument("bad denominator spec: " + text);
  return spec;
}

std::vector<PhiTuple> enumerate(int n, const DenominatorSpec& dens, const EnumerationOptions& opts) {
  if (n < 2 || n > 6) throw std::invalid_argument("tuple length must be in 2..6");
  const std::vector<Rational> values =
      fractions_with_denominators(dens.denominators(), Rational(1, 2), true);
  const std::size_t V = values.size();
  if (binomial(static_cast<double>(V + n - 2), n - 1) > opts.budget) {
    throw BudgetExceeded("cosine-sum enumeration exceeds the candidate budget");
  }
  // cos(2 pi v) is decreasing on [0, 1/2]
  std::vector<double> c(V);
  for (std::size_t i = 0; i < V; ++i) c[i] = std::cos(kTwoPi * to_d(values[i]));

  std::set<std::vector<Rational>> found;
  std::vector<std::size_t> idx(static_cast<std::size_t>(n));
  auto finish = [&](double partial) {
    const std::size_t lo = idx[n - 2];
    const double target = -partial;
    // first index >= lo with c <= target + tol
    auto it = std::lower_bound(c.begin() + static_cast<std::ptrdiff_t>(lo), c.end(), target + kTol,
                               [](double a, double b) { return a > b; });
    for (; it != c.end() && *it >= target - kTol; ++it) {
      idx[n - 1] = static_cast<std::size_t>(it - c.begin());
      std::vector<Rational> tuple;
      for (auto i : idx) tuple.push_back(values[i]);
      if (!is_vanishing(tuple)) continue;
      std::vector<Rational> canon = canonicalize(tuple);
      if (found.count(canon)) continue;
      if (is_irreducible(canon)) found.insert(std::move(canon));
    }
  };
  auto recurse = [&](auto&& self, int depth, std::size_t start, double partial) -> void {
    if (depth == n - 1) {
      finish(partial);
      return;
    }
    for (std::size_t i = start; i < V; ++i) {
      const double s = partial + c[i];
      const int remaining = n - 1 - depth;
      // remaining entries have cosine in [-1, c[i]]
      if (s + remaining * c[i] < -kTol) break;
      if (s - remaining > kTol) continue;
      idx[depth] = i;
      self(self, depth + 1, i, s);
    }
  };
  recurse(recurse, 0, 0, 0.0);

  std::vector<PhiTuple> out;
  for (const auto& t : found) out.push_back(PhiTuple{t, true, family_tag(t)});
  return out;
}

std::vector<UnityTuple> enumerate_unity_sums(int n, std::int64_t denominator,
                                             const EnumerationOptions& opts) {
  if (n < 2 || n > 6) throw std::invalid_argument("tuple length must be in 2..6");
  const std::int64_t D = denominator;
  if (binomial(static_cast<double>(D + n - 3), n - 2) > opts.budget) {
    throw BudgetExceeded("unity-sum enumeration exceeds the candidate budget");
  }
  auto canonical_rotation = [](std::vector<Rational> t) {
    std::vector<Rational> best;
    for (const auto& e : std::vector<Rational>(t)) {
      std::vector<Rational> r;
      for (const auto& x : t) r.push_back(mod_one(x - e));
      std::sort(r.begin(), r.end());
      if (best.empty() || r < best) best = std::move(r);
    }
    return best;
  };
  std::vector<std::pair<std::string, std::vector<Rational>>> known;
  known.emplace_back("pair", canonical_rotation(parse_tuple({{0, 1}, {1, 2}})));
  known.emplace_back("triple", canonical_rotation(parse_tuple({{0, 1}, {1, 3}, {2, 3}})));
  known.emplace_back("5-tuple", canonical_rotation(parse_tuple({{0, 1}, {1, 5}, {2, 5}, {3, 5}, {4, 5}})));
  known.emplace_back("6-tuple", canonical_rotation(parse_tuple(
                                    {{-1, 6}, {1, 6}, {1, 5}, {2, 5}, {3, 5}, {4, 5}})));

  std::vector<std::complex<double>> root(static_cast<std::size_t>(D));
  for (std::int64_t k = 0; k < D; ++k) {
    root[static_cast<std::size_t>(k)] = std::polar(1.0, kTwoPi * static_cast<double>(k) / D);
  }
  std::set<std::vector<Rational>> found;
  std::vector<std::int64_t> idx(static_cast<std::size_t>(n), 0);  // idx[0] = 0 by rotation
  auto finish = [&](std::complex<double> partial) {
    const std::complex<double> need = -partial;
    if (std::abs(std::abs(need) - 1.0) > 1e-7) return;
    double angle = std::arg(need) / kTwoPi;
    if (angle < 0) angle += 1.0;
    const auto k = static_cast<std::int64_t>(std::llround(angle * D)) % D;
    if (k < idx[n - 2] || std::abs(root[static_cast<std::size_t>(k)] - need) > 1e-7) return;
    idx[n - 1] = k;
    std::vector<Rational> tuple;
    for (auto i : idx) tuple.push_back(make_rational(i, D));
    const unsigned full = (1u << n) - 1;
    if (!unity_subset_vanishes(tuple, full)) return;
    for (unsigned mask = 1; mask < full; ++mask) {
      if (unity_subset_vanishes(tuple, mask)) return;
    }
    found.insert(canonical_rotation(tuple));
  };
  auto recurse = [&](auto&& self, int depth, std::int64_t start, std::complex<double> partial) -> void {
    if (depth == n - 1) {
      finish(partial);
      return;
    }
    const int remaining = n - depth;  // including the final entry
    if (std::abs(partial) > remaining + kTol) return;
    for (std::int64_t i = start; i < D; ++i) {
      idx[depth] = i;
      self(self, depth + 1, i, partial + root[static_cast<std::size_t>(i)]);
    }
  };
  recurse(recurse, 1, 0, root[0]);

  std::vector<UnityTuple> out;
  for (const auto& t : found) {
    std::string family = "other";
    for (const auto& [name, tuple] : known) {
      if (tuple == t) family = name;
    }
    out.push_back({t, family});
  }
  return out;
}

}  // namespace fricke
