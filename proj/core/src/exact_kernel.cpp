#include "ultrafid/exact_kernel.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ultrafid/errors.hpp"

namespace ultrafid {

UltraIndex::UltraIndex(int n) : n_(n) {
  if (n < 1) throw DomainError("ultraspherical index must be >= 1, got " + std::to_string(n));
}

// ---------------------------------------------------------------------------
// RationalPolynomial

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) {
  return RationalPolynomial(std::vector<Rational>{c});
}

RationalPolynomial RationalPolynomial::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> v(power + 1);
  v[power] = c;
  return RationalPolynomial(std::move(v));
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::coefficient(std::size_t j) const {
  return j < coeffs_.size() ? coeffs_[j] : Rational(0);
}

std::vector<double> RationalPolynomial::to_double() const {
  std::vector<double> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.convert_to<double>());
  return out;
}

std::string RationalPolynomial::to_string(char variable) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const Rational& c = coeffs_[j];
    if (c == 0) continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (j == 0 || mag != 1) os << mag;
    if (j > 0) {
      if (mag != 1) os << '*';
      os << variable;
      if (j > 1) os << '^' << j;
    }
  }
  return os.str();
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RationalPolynomial(std::move(out));
}

// ---------------------------------------------------------------------------
// Combinatorics

BigInt factorial(unsigned k) {
  BigInt r = 1;
  for (unsigned i = 2; i <= k; ++i) r *= i;
  return r;
}

BigInt double_factorial(int k) {
  if (k < -1) throw DomainError("double factorial needs k >= -1");
  BigInt r = 1;
  for (int i = k; i > 1; i -= 2) r *= i;
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt catalan(unsigned j) { return factorial(2 * j) / (factorial(j) * factorial(j + 1)); }

Rational scaled_norm_const(UltraIndex n) {
  const int k = n.value();
  BigInt den = double_factorial(2 * k - 1);
  den <<= static_cast<unsigned>(k - 1);
  return Rational(factorial(static_cast<unsigned>(k)), den);
}

Rational recurrence_factor(UltraIndex n) {
  const int k = n.value();
  return Rational(BigInt(k + 1), BigInt(2 * (2 * k + 1)));
}

// ---------------------------------------------------------------------------
// Q_n and P_n

namespace {

const RationalPolynomial& four_minus_x() {
  static const RationalPolynomial p(std::vector<Rational>{Rational(4), Rational(-1)});
  return p;
}

}  // namespace

RationalPolynomial build_Q(UltraIndex n) {
  RationalPolynomial q = RationalPolynomial::constant(scaled_norm_const(n));
  for (int i = 1; i < n.value(); ++i) q = q * four_minus_x();
  return q;
}

RationalPolynomial build_Q_binomial(UltraIndex n) {
  const unsigned m = static_cast<unsigned>(n.value() - 1);
  std::vector<Rational> c(m + 1);
  for (unsigned j = 0; j <= m; ++j) {
    BigInt term = binomial(m, j);
    term <<= 2 * (m - j);
    c[j] = (j % 2 == 0) ? Rational(term) : Rational(-term);
  }
  return scaled_norm_const(n) * RationalPolynomial(std::move(c));
}

RationalPolynomial build_P(UltraIndex n) {
  const int m = n.value();
  const BigInt fact = factorial(static_cast<unsigned>(m - 1));
  std::vector<Rational> c(m > 1 ? static_cast<std::size_t>(m - 1) : 0);
  for (int k = 1; k <= m - 1; ++k) {
    Rational inner = 0;
    for (int j = 1; j <= m - k; ++j) {
      const int s = j + k;
      BigInt num = fact * catalan(static_cast<unsigned>(j - 1));
      num <<= static_cast<unsigned>(2 * (m - s));
      Rational term(num, factorial(static_cast<unsigned>(s - 1)) *
                             factorial(static_cast<unsigned>(m - s)));
      inner += (s % 2 == 0) ? term : Rational(-term);
    }
    c[static_cast<std::size_t>(k - 1)] = inner;
  }
  return scaled_norm_const(n) * RationalPolynomial(std::move(c));
}

RecurrencePair build_QP_recurrence(UltraIndex n) {
  RecurrencePair pair{RationalPolynomial::constant(1), RationalPolynomial{}};
  const RationalPolynomial one = RationalPolynomial::constant(1);
  for (int k = 1; k < n.value(); ++k) {
    const Rational a = recurrence_factor(UltraIndex(k));
    pair.q = a * (four_minus_x() * pair.q);
    pair.p = a * (four_minus_x() * pair.p + one);
  }
  return pair;
}

// ---------------------------------------------------------------------------
// Uniformised form

namespace {

// Laurent polynomial sum_k c[k] g^(k + low).
struct Laurent {
  int low = 0;
  std::vector<Rational> c;

  static Laurent constant(const Rational& v) { return {0, {v}}; }

  Laurent shifted(int by) const { return {low + by, c}; }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.c.empty() || b.c.empty()) return {};
    Laurent r{a.low + b.low, std::vector<Rational>(a.c.size() + b.c.size() - 1)};
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    return r;
  }

  friend Laurent operator+(const Laurent& a, const Laurent& b) {
    if (a.c.empty()) return b;
    if (b.c.empty()) return a;
    const int lo = std::min(a.low, b.low);
    const int hi = std::max(a.low + static_cast<int>(a.c.size()),
                            b.low + static_cast<int>(b.c.size()));
    Laurent r{lo, std::vector<Rational>(static_cast<std::size_t>(hi - lo))};
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i + a.low - lo] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i + b.low - lo] += b.c[i];
    return r;
  }
};

// p(z^2) with z^2 = g^2 + 2 + g^-2.
Laurent compose_with_z_squared(const RationalPolynomial& p) {
  const Laurent z2{-2, {Rational(1), Rational(0), Rational(2), Rational(0), Rational(1)}};
  Laurent acc;
  const auto coeffs = p.coefficients();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z2 + Laurent::constant(*it);
  return acc;
}

}  // namespace

RationalPolynomial build_uniformized(UltraIndex n) {
  const Laurent z{-1, {Rational(1), Rational(0), Rational(1)}};
  const Laurent total = compose_with_z_squared(build_Q(n)).shifted(1) +
                        z * compose_with_z_squared(build_P(n));

  std::vector<Rational> out;
  for (std::size_t i = 0; i < total.c.size(); ++i) {
    const int power = total.low + static_cast<int>(i);
    if (power < 0) {
      if (total.c[i] != 0)
        throw std::logic_error("negative power of g survived in uniformised form of G_" +
                               std::to_string(n.value()));
      continue;
    }
    if (out.size() <= static_cast<std::size_t>(power)) out.resize(power + 1);
    out[power] = total.c[i];
  }
  return RationalPolynomial(std::move(out));
}

RationalPolynomial build_uniformized_binomial(UltraIndex n) {
  const unsigned m = static_cast<unsigned>(n.value());
  std::vector<Rational> c(2 * m);
  for (unsigned j = 0; j < m; ++j) {
    const BigInt b = binomial(2 * m - 1, m - 1 - j);
    c[2 * j + 1] = (j % 2 == 0) ? Rational(b) : Rational(-b);
  }
  return scaled_norm_const(n) * RationalPolynomial(std::move(c));
}

}  // namespace ultrafid
