#pragma once

// Exact rational construction of the combinatorial data behind the
// ultraspherical Cauchy transforms: Catalan numbers, the scaled normalisation
// constant 2*pi*c_n and the polynomials Q_n, P_n with
//
//     G_n(z) = Q_n(z^2) G_1(z) + z P_n(z^2).
//
// Everything here is computed with arbitrary-precision integers; conversion to
// floating point happens only in the transforms layer.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ultrafid {

using BigInt = boost::multiprecision::cpp_int;
// Always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Index n >= 1 of the ultraspherical law c_n (4 - t^2)^(n - 1/2) on [-2, 2].
class UltraIndex {
 public:
  /// Throws DomainError when n < 1.
  explicit UltraIndex(int n);

  [[nodiscard]] int value() const noexcept { return n_; }
  [[nodiscard]] UltraIndex next() const { return UltraIndex(n_ + 1); }

  friend bool operator==(UltraIndex, UltraIndex) = default;
  friend auto operator<=>(UltraIndex, UltraIndex) = default;

 private:
  int n_;
};

/// Dense polynomial with exact rational coefficients; coefficient j multiplies X^j.
/// The coefficient list never carries trailing zeros, so the zero polynomial is empty.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);

  static RationalPolynomial constant(const Rational& c);
  /// c * X^power
  static RationalPolynomial monomial(const Rational& c, std::size_t power);

  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  [[nodiscard]] std::span<const Rational> coefficients() const noexcept { return coeffs_; }
  /// Zero for indices beyond the degree.
  [[nodiscard]] Rational coefficient(std::size_t j) const;

  [[nodiscard]] std::vector<double> to_double() const;
  [[nodiscard]] std::string to_string(char variable = 'X') const;

  RationalPolynomial& operator+=(const RationalPolynomial& rhs);
  RationalPolynomial& operator-=(const RationalPolynomial& rhs);
  RationalPolynomial& operator*=(const Rational& scalar);

  friend RationalPolynomial operator+(RationalPolynomial lhs, const RationalPolynomial& rhs) {
    return lhs += rhs;
  }
  friend RationalPolynomial operator-(RationalPolynomial lhs, const RationalPolynomial& rhs) {
    return lhs -= rhs;
  }
  friend RationalPolynomial operator*(RationalPolynomial p, const Rational& s) { return p *= s; }
  friend RationalPolynomial operator*(const Rational& s, RationalPolynomial p) { return p *= s; }
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

[[nodiscard]] BigInt factorial(unsigned k);
/// k!! for k >= -1, with (-1)!! = 0!! = 1.
[[nodiscard]] BigInt double_factorial(int k);
[[nodiscard]] BigInt binomial(unsigned n, unsigned k);

/// C_j = (2j)! / (j! (j+1)!)
[[nodiscard]] BigInt catalan(unsigned j);

/// 2*pi*c_n = n! / (2^(n-1) (2n-1)!!), the normalisation with pi removed.
[[nodiscard]] Rational scaled_norm_const(UltraIndex n);

/// (n+1) / (2(2n+1)), the factor linking G_{n+1} to G_n.
[[nodiscard]] Rational recurrence_factor(UltraIndex n);

/// 2*pi*c_n (4 - X)^(n-1), expanded by repeated multiplication.
[[nodiscard]] RationalPolynomial build_Q(UltraIndex n);
/// Same polynomial written as the explicit binomial sum.
[[nodiscard]] RationalPolynomial build_Q_binomial(UltraIndex n);

/// The Catalan-weighted double sum; zero polynomial for n = 1.
[[nodiscard]] RationalPolynomial build_P(UltraIndex n);

/// Q_n and P_n obtained by lifting the three-term recurrence
///   Q_{k+1} = a_k (4 - X) Q_k,   P_{k+1} = a_k ((4 - X) P_k + 1)
/// from Q_1 = 1, P_1 = 0. Independent of build_Q / build_P.
struct RecurrencePair {
  RationalPolynomial q;
  RationalPolynomial p;
};
[[nodiscard]] RecurrencePair build_QP_recurrence(UltraIndex n);

/// Odd polynomial B_n with G_n(z) = B_n(G_1(z)), obtained by substituting
/// z = g + 1/g into Q_n(z^2) g + z P_n(z^2) and cancelling exactly.
/// Throws std::logic_error if any negative power of g survives.
[[nodiscard]] RationalPolynomial build_uniformized(UltraIndex n);

/// B_n from the Chebyshev expansion of (4 - t^2)^(n-1):
///   B_n(g) = 2*pi*c_n * sum_j (-1)^j binom(2n-1, n-1-j) g^(2j+1).
[[nodiscard]] RationalPolynomial build_uniformized_binomial(UltraIndex n);

}  // namespace ultrafid
