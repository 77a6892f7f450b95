#include "fricke/trig_field.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace fricke {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return a / std::gcd(a, b) * b; }

// Coordinates of 2cos(m pi / L), m = 0..L, in the power basis of
// theta = 2cos(pi/L) modulo its minimal polynomial, plus the polynomials
// C_k(theta) = 2cos(k pi / L) for k < deg used to switch back to cosines.
struct RealBasis {
  std::int64_t level = 0;
  std::size_t degree = 0;
  std::vector<std::vector<mpz_class>> cos_mod;  // indexed by m
  std::vector<std::vector<mpz_class>> chebyshev;  // C_k(theta), k < degree
};

// Real bases above this degree are not built; reduced() returns its input.
constexpr std::size_t kMaxRealDegree = 400;

std::vector<mpz_class> poly_mul_theta(const std::vector<mpz_class>& p) {
  std::vector<mpz_class> out(p.size() + 1);
  for (std::size_t i = 0; i < p.size(); ++i) out[i + 1] = p[i];
  return out;
}

std::shared_ptr<const RealBasis> build_real_basis(std::int64_t level) {
  auto basis = std::make_shared<RealBasis>();
  basis->level = level;
  const auto& phi = cyclotomic_polynomial(2 * level);
  const std::size_t d = (phi.size() - 1) / 2;
  basis->degree = d;

  // Chebyshev-like polynomials C_j(theta) = x^j + x^-j for j <= d.
  std::vector<std::vector<mpz_class>> cheb(d + 1);
  cheb[0] = {mpz_class(2)};
  if (d >= 1) cheb[1] = {mpz_class(0), mpz_class(1)};
  for (std::size_t j = 1; j + 1 <= d; ++j) {
    auto next = poly_mul_theta(cheb[j]);
    for (std::size_t i = 0; i < cheb[j - 1].size(); ++i) next[i] -= cheb[j - 1][i];
    cheb[j + 1] = std::move(next);
  }

  // Minimal polynomial of theta: x^-d Phi_{2L}(x) = f_d + sum_j f_{d+j} C_j(theta).
  std::vector<mpz_class> minpoly(d + 1);
  minpoly[0] = phi[d];
  for (std::size_t j = 1; j <= d; ++j) {
    for (std::size_t i = 0; i < cheb[j].size(); ++i) minpoly[i] += phi[d + j] * cheb[j][i];
  }

  auto reduce = [&](std::vector<mpz_class> p) {
    while (p.size() > d) {
      mpz_class lead = p.back();
      const std::size_t shift = p.size() - 1 - d;
      p.pop_back();
      if (lead != 0) {
        for (std::size_t i = 0; i < d; ++i) p[shift + i] -= lead * minpoly[i];
      }
    }
    p.resize(d);
    return p;
  };

  basis->cos_mod.resize(static_cast<std::size_t>(level) + 1);
  basis->cos_mod[0] = reduce({mpz_class(2)});
  if (level >= 1) basis->cos_mod[1] = reduce({mpz_class(0), mpz_class(1)});
  for (std::int64_t m = 1; m < level; ++m) {
    auto next = poly_mul_theta(basis->cos_mod[m]);
    const auto& prev = basis->cos_mod[m - 1];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    basis->cos_mod[m + 1] = reduce(std::move(next));
  }
  cheb.resize(d);
  basis->chebyshev = std::move(cheb);
  return basis;
}

std::shared_ptr<const RealBasis> real_basis(std::int64_t level) {
  static std::shared_mutex mutex;
  static std::unordered_map<std::int64_t, std::shared_ptr<const RealBasis>> cache;
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(level); it != cache.end()) return it->second;
  }
  auto built = build_real_basis(level);
  std::unique_lock lock(mutex);
  return cache.emplace(level, std::move(built)).first->second;
}

// x^k mod Phi_n for k in [0, n), row-major.
struct PowerTable {
  std::int64_t order = 0;
  std::size_t degree = 0;
  std::vector<std::int64_t> rows;
};

constexpr std::int64_t kDenseOrderLimit = 1024;

std::shared_ptr<const PowerTable> power_table(std::int64_t n) {
  static std::shared_mutex mutex;
  static std::unordered_map<std::int64_t, std::shared_ptr<const PowerTable>> cache;
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  auto table = std::make_shared<PowerTable>();
  const auto& phi = cyclotomic_polynomial(n);
  const std::size_t d = phi.size() - 1;
  table->order = n;
  table->degree = d;
  table->rows.assign(static_cast<std::size_t>(n) * d, 0);
  std::vector<std::int64_t> cur(d, 0);
  if (d > 0) cur[0] = 1;
  for (std::int64_t k = 0; k < n; ++k) {
    std::copy(cur.begin(), cur.end(), table->rows.begin() + static_cast<std::ptrdiff_t>(k * d));
    // multiply by x, then eliminate x^d using the monic Phi_n.
    const std::int64_t top = cur[d - 1];
    for (std::size_t i = d - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0) {
      for (std::size_t i = 0; i < d; ++i) {
        std::int64_t prod = 0;
        if (__builtin_mul_overflow(top, phi[i], &prod) ||
            __builtin_sub_overflow(cur[i], prod, &cur[i])) {
          throw std::overflow_error("cyclotomic power table overflow");
        }
      }
    }
  }
  std::unique_lock lock(mutex);
  return cache.emplace(n, std::move(table)).first->second;
}

using HighFloat = boost::multiprecision::cpp_bin_float_50;

HighFloat high_value(const CosSum& s) {
  const HighFloat pi = boost::multiprecision::default_ops::get_constant_pi<HighFloat::backend_type>();
  HighFloat total = 0;
  for (const auto& [angle, coeff] : s.terms()) {
    HighFloat c = HighFloat(coeff.get_num().get_str()) / HighFloat(coeff.get_den().get_str());
    HighFloat a = HighFloat(angle.num) / HighFloat(angle.den);
    total += c * 2 * boost::multiprecision::cos(pi * a);
  }
  return total;
}

}  // namespace

// ---------------------------------------------------------------------------
// RationalAngle

RationalAngle RationalAngle::folded(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("angle with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t period = 2 * den;
  num %= period;
  if (num < 0) num += period;
  if (num > den) num = period - num;
  const std::int64_t g = std::gcd(num, den);
  return RationalAngle{num / g, den / g};
}

std::string RationalAngle::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

RationalAngle RationalAngle::parse(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return folded(std::stoll(std::string(text)), 1);
    return folded(std::stoll(std::string(text.substr(0, slash))),
                  std::stoll(std::string(text.substr(slash + 1))));
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad rational angle: " + std::string(text));
  }
}

// ---------------------------------------------------------------------------
// CosSum

CosSum::CosSum(const Rational& value) {
  if (value != 0) terms_.emplace_back(RationalAngle{0, 1}, value / 2);
}

CosSum CosSum::cos(RationalAngle r) {
  CosSum s;
  s.terms_.emplace_back(RationalAngle::folded(r.num, r.den), Rational(1));
  s.normalize();
  return s;
}

CosSum cos_value(RationalAngle r) { return CosSum::cos(r); }

void CosSum::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().first == t.first) {
      merged.back().second += t.second;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) {
    return t.second == 0 || (t.first.num == 1 && t.first.den == 2);
  });
  terms_ = std::move(merged);
}

std::int64_t CosSum::level() const {
  std::int64_t l = 1;
  for (const auto& t : terms_) l = lcm64(l, t.first.den);
  return l;
}

CosSum CosSum::operator-() const {
  CosSum out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

CosSum& CosSum::operator+=(const CosSum& other) {
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  normalize();
  return *this;
}

CosSum& CosSum::operator-=(const CosSum& other) {
  for (const auto& t : other.terms_) terms_.emplace_back(t.first, -t.second);
  normalize();
  return *this;
}

CosSum& CosSum::operator*=(const Rational& q) {
  if (q == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= q;
  return *this;
}

CosSum operator*(const CosSum& a, const CosSum& b) {
  CosSum out;
  out.terms_.reserve(2 * a.terms_.size() * b.terms_.size());
  for (const auto& [x, cx] : a.terms_) {
    for (const auto& [y, cy] : b.terms_) {
      const Rational c = cx * cy;
      const std::int64_t den = lcm64(x.den, y.den);
      const std::int64_t nx = x.num * (den / x.den);
      const std::int64_t ny = y.num * (den / y.den);
      // 2cos A * 2cos B = 2cos(A+B) + 2cos(A-B)
      out.terms_.emplace_back(RationalAngle::folded(nx + ny, den), c);
      out.terms_.emplace_back(RationalAngle::folded(nx - ny, den), c);
    }
  }
  out.normalize();
  return out;
}

CosSum CosSum::galois(std::int64_t k) const {
  CosSum out;
  out.terms_.reserve(terms_.size());
  for (const auto& [a, c] : terms_) {
    out.terms_.emplace_back(RationalAngle::folded((a.num * k) % (2 * a.den), a.den), c);
  }
  out.normalize();
  return out;
}

CosSum CosSum::reduced() const {
  const std::int64_t level_l = level();
  if (level_l <= 2) {
    auto q = as_rational();
    return CosSum(*q);
  }
  if (static_cast<std::size_t>(euler_phi(2 * level_l) / 2) > kMaxRealDegree) return *this;
  auto basis = real_basis(level_l);
  const std::size_t d = basis->degree;
  std::vector<Rational> v(d);
  for (const auto& [a, c] : terms_) {
    const auto& row = basis->cos_mod[static_cast<std::size_t>(a.num * (level_l / a.den))];
    for (std::size_t i = 0; i < d; ++i) {
      if (row[i] != 0) v[i] += c * row[i];
    }
  }
  CosSum out;
  for (std::size_t k = d; k-- > 1;) {
    if (v[k] == 0) continue;
    const Rational b = v[k];
    const auto& ck = basis->chebyshev[k];
    for (std::size_t i = 0; i < ck.size(); ++i) v[i] -= b * ck[i];
    out.terms_.emplace_back(RationalAngle::folded(static_cast<std::int64_t>(k), level_l), b);
  }
  if (v[0] != 0) out.terms_.emplace_back(RationalAngle{0, 1}, v[0] / 2);
  out.normalize();
  return out;
}

CosSum CosSum::inverse() const {
  if (auto q = as_rational()) {
    if (*q == 0) throw std::domain_error("inverse of zero");
    return CosSum(Rational(1) / *q);
  }
  const std::int64_t l = level();
  const std::int64_t n = 2 * l;
  if (static_cast<std::size_t>(euler_phi(n) / 2) > kMaxRealDegree) {
    throw std::domain_error("inverse: level too large for exact reduction");
  }
  CosSum product(1);
  for (std::int64_t k = 3; k <= l; ++k) {
    if (std::gcd(k, n) != 1) continue;
    product = (product * galois(k)).reduced();
  }
  const auto norm = (*this * product).as_rational();
  if (!norm) throw std::logic_error("norm of cosine-ring element is not rational");
  if (*norm == 0) throw std::domain_error("inverse of zero");
  return product * (Rational(1) / *norm);
}

bool CosSum::is_zero() const {
  if (terms_.empty()) return true;
  const std::int64_t l = level();
  if (l <= 2) return *as_rational() == 0;
  const std::int64_t n = 2 * l;
  if (n <= kDenseOrderLimit) return CyclotomicElement::from_cos_sum(*this).is_zero();
  std::vector<std::pair<std::int64_t, Rational>> powers;
  powers.reserve(2 * terms_.size());
  for (const auto& [a, c] : terms_) {
    const std::int64_t e = a.num * (l / a.den);
    powers.emplace_back(e, c);
    powers.emplace_back(n - e, c);
  }
  return is_zero_sparse(powers, n);
}

double CosSum::to_double() const {
  double total = 0.0;
  for (const auto& [a, c] : terms_) {
    double v;
    if (a.den == 1) {
      v = a.num == 0 ? 2.0 : -2.0;
    } else if (a.den == 2) {
      v = 0.0;
    } else if (a.den == 3) {
      v = a.num == 1 ? 1.0 : -1.0;
    } else {
      v = 2.0 * std::cos(kPi * static_cast<double>(a.num) / static_cast<double>(a.den));
    }
    total += c.get_d() * v;
  }
  return total;
}

std::string CosSum::to_decimal(int digits) const {
  std::ostringstream os;
  os.precision(digits);
  os << high_value(*this);
  return os.str();
}

int CosSum::high_precision_sign() const {
  if (is_zero()) return 0;
  const HighFloat v = high_value(*this);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

std::optional<Rational> CosSum::as_rational() const {
  const std::int64_t l = level();
  if (l <= 2) {
    Rational q = 0;
    for (const auto& [a, c] : terms_) {
      if (a.den == 1) q += a.num == 0 ? Rational(2 * c) : Rational(-2 * c);
    }
    return q;
  }
  const CosSum r = reduced();
  if (r.level() > 2) return std::nullopt;
  return r.as_rational();
}

std::optional<RationalAngle> CosSum::as_single_cos() const {
  if (auto q = as_rational()) {
    if (*q == 2) return RationalAngle{0, 1};
    if (*q == 1) return RationalAngle{1, 3};
    if (*q == 0) return RationalAngle{1, 2};
    if (*q == -1) return RationalAngle{2, 3};
    if (*q == -2) return RationalAngle{1, 1};
    return std::nullopt;
  }
  const double v = to_double();
  if (v < -2.0 - 1e-9 || v > 2.0 + 1e-9) return std::nullopt;
  const double r = std::acos(std::clamp(v / 2.0, -1.0, 1.0)) / kPi;
  const std::int64_t n = 2 * level();
  const auto m = static_cast<std::int64_t>(std::llround(r * static_cast<double>(n)));
  for (std::int64_t cand = std::max<std::int64_t>(0, m - 1); cand <= std::min(n, m + 1); ++cand) {
    const auto angle = RationalAngle::folded(cand, n);
    if (exactly_equal(*this, CosSum::cos(angle))) return angle;
  }
  return std::nullopt;
}

std::string CosSum::to_string() const {
  Rational constant = 0;
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : terms_) {
    if (a.den == 1) {
      constant += a.num == 0 ? Rational(2 * c) : Rational(-2 * c);
      continue;
    }
    Rational mag = abs(c);
    if (c < 0) {
      os << "-";
    } else if (!first) {
      os << "+";
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "2cos(pi*" << a.num << "/" << a.den << ")";
    first = false;
  }
  if (constant != 0 || first) {
    if (constant >= 0 && !first) os << "+";
    os << constant.get_str();
  }
  return os.str();
}

namespace {

struct CosParser {
  std::string_view s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const char* what) const {
    throw std::invalid_argument(std::string("cannot parse cosine sum '") + std::string(s) +
                                "': " + what);
  }
  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool peek_literal(std::string_view lit) {
    skip();
    return s.substr(pos, lit.size()) == lit;
  }
  void expect(std::string_view lit) {
    if (!peek_literal(lit)) fail("unexpected token");
    pos += lit.size();
  }
  std::int64_t integer() {
    skip();
    bool negative = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) negative = s[pos++] == '-';
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    const auto v = std::stoll(std::string(s.substr(start, pos - start)));
    return negative ? -v : v;
  }
  Rational rational() {
    skip();
    const std::size_t start = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
      ++pos;
    if (pos == start) fail("expected number");
    Rational q(std::string(s.substr(start, pos - start)));
    q.canonicalize();
    return q;
  }
  CosSum cos_factor() {
    expect("2cos(pi");
    std::int64_t num = 1;
    std::int64_t den = 1;
    skip();
    if (pos < s.size() && s[pos] == '*') {
      ++pos;
      num = integer();
      skip();
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        den = integer();
      }
    }
    expect(")");
    return CosSum::cos(num, den);
  }
  CosSum term() {
    if (peek_literal("2cos(")) return cos_factor();
    const Rational q = rational();
    skip();
    if (pos < s.size() && s[pos] == '*') {
      ++pos;
      return cos_factor() * q;
    }
    return CosSum(q);
  }
  CosSum parse() {
    CosSum total;
    skip();
    bool negative = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) negative = s[pos++] == '-';
    while (true) {
      CosSum t = term();
      total += negative ? -t : t;
      skip();
      if (pos == s.size()) break;
      if (s[pos] != '+' && s[pos] != '-') fail("expected + or -");
      negative = s[pos++] == '-';
    }
    return total;
  }
};

}  // namespace

CosSum CosSum::parse(std::string_view text) { return CosParser{text}.parse(); }

bool exactly_equal(const CosSum& a, const CosSum& b) { return (a - b).is_zero(); }

int compare(const CosSum& a, const CosSum& b) {
  const double da = a.to_double();
  const double db = b.to_double();
  if (std::abs(da - db) > 1e-10) return da < db ? -1 : 1;
  return (a - b).high_precision_sign();
}

std::optional<std::size_t> match_dictionary(double v, const std::vector<ValueEntry>& dict,
                                            double eps) {
  auto it = std::lower_bound(dict.begin(), dict.end(), v - eps,
                             [](const ValueEntry& e, double x) { return e.value < x; });
  if (it == dict.end() || it->value > v + eps) return std::nullopt;
  return it->index;
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials and elements

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t n) {
  static std::shared_mutex mutex;
  static std::unordered_map<std::int64_t, std::unique_ptr<std::vector<std::int64_t>>> cache;
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<mpz_class> poly(static_cast<std::size_t>(n) + 1);
  poly[0] = -1;
  poly[static_cast<std::size_t>(n)] = 1;
  for (std::int64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& divisor = cyclotomic_polynomial(d);
    const std::size_t dd = divisor.size() - 1;
    std::vector<mpz_class> quotient(poly.size() - dd);
    for (std::size_t i = poly.size(); i-- > dd;) {
      const mpz_class q = poly[i];  // divisor is monic
      quotient[i - dd] = q;
      if (q != 0) {
        for (std::size_t j = 0; j <= dd; ++j) poly[i - dd + j] -= q * divisor[j];
      }
    }
    for (std::size_t i = 0; i < dd; ++i) {
      if (poly[i] != 0) throw std::logic_error("cyclotomic division left a remainder");
    }
    poly = std::move(quotient);
  }
  auto result = std::make_unique<std::vector<std::int64_t>>();
  result->reserve(poly.size());
  for (const auto& c : poly) {
    if (!c.fits_slong_p()) throw std::overflow_error("cyclotomic coefficient overflow");
    result->push_back(c.get_si());
  }
  std::unique_lock lock(mutex);
  return *cache.emplace(n, std::move(result)).first->second;
}

CyclotomicElement::CyclotomicElement(std::int64_t order)
    : order_(order), coeffs_(static_cast<std::size_t>(euler_phi(order))) {}

void CyclotomicElement::add_power(std::int64_t k, const Rational& c) {
  if (order_ > kDenseOrderLimit) throw std::out_of_range("dense cyclotomic order too large");
  auto table = power_table(order_);
  k %= order_;
  if (k < 0) k += order_;
  const std::size_t d = table->degree;
  const std::int64_t* row = table->rows.data() + static_cast<std::size_t>(k) * d;
  for (std::size_t i = 0; i < d; ++i) {
    if (row[i] != 0) coeffs_[i] += c * row[i];
  }
}

bool CyclotomicElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

CyclotomicElement CyclotomicElement::from_cos_sum(const CosSum& s) {
  const std::int64_t l = s.level();
  const std::int64_t n = 2 * l;
  CyclotomicElement e(n);
  for (const auto& [a, c] : s.terms()) {
    const std::int64_t k = a.num * (l / a.den);
    e.add_power(k, c);
    e.add_power(n - k, c);
  }
  return e;
}

bool is_zero_sparse(const std::vector<std::pair<std::int64_t, Rational>>& powers,
                    std::int64_t order) {
  struct PrimePower {
    std::int64_t p, q, b;  // prime, prime power, CRT weight
  };
  std::vector<PrimePower> parts;
  {
    std::int64_t m = order;
    for (std::int64_t p = 2; p * p <= m; ++p) {
      if (m % p) continue;
      std::int64_t q = 1;
      while (m % p == 0) {
        m /= p;
        q *= p;
      }
      parts.push_back({p, q, 0});
    }
    if (m > 1) parts.push_back({m, m, 0});
  }
  // 1/n = sum_i b_i / q_i (mod 1) with b_i = (n/q_i)^{-1} mod q_i.
  for (auto& part : parts) {
    const std::int64_t cofactor = (order / part.q) % part.q;
    std::int64_t inv = 1;
    for (std::int64_t t = 1; t < part.q; ++t) {
      if ((cofactor * t) % part.q == 1) {
        inv = t;
        break;
      }
    }
    part.b = part.q == 1 ? 0 : inv;
  }

  std::map<std::vector<std::int64_t>, Rational> acc;
  for (const auto& [k0, c] : powers) {
    std::int64_t k = k0 % order;
    if (k < 0) k += order;
    // expand product over prime powers of the reduced monomials
    std::vector<std::pair<std::vector<std::int64_t>, Rational>> partial{{{}, c}};
    for (const auto& part : parts) {
      const std::int64_t e = (k % part.q) * part.b % part.q;
      const std::int64_t step = part.q / part.p;  // p^{a-1}
      const std::int64_t phi_q = (part.p - 1) * step;
      std::vector<std::pair<std::int64_t, int>> mono;
      if (e < phi_q) {
        mono.emplace_back(e, 1);
      } else {
        const std::int64_t r = e - phi_q;
        for (std::int64_t j = 0; j + 1 < part.p; ++j) mono.emplace_back(r + j * step, -1);
      }
      std::vector<std::pair<std::vector<std::int64_t>, Rational>> next;
      next.reserve(partial.size() * mono.size());
      for (const auto& [exps, coeff] : partial) {
        for (const auto& [exp, sign] : mono) {
          auto ne = exps;
          ne.push_back(exp);
          next.emplace_back(std::move(ne), sign > 0 ? coeff : Rational(-coeff));
        }
      }
      partial = std::move(next);
    }
    for (auto& [exps, coeff] : partial) acc[exps] += coeff;
  }
  return std::all_of(acc.begin(), acc.end(), [](const auto& kv) { return kv.second == 0; });
}

}  // namespace fricke
