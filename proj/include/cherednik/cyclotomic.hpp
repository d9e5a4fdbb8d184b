#pragma once

// Exact coefficient domains: GMP rationals and the cyclotomic fields Q(e_l)
// realized as Q[x] modulo the l-th cyclotomic polynomial.

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace cherednik {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "a" or "a/b" with optional sign. Decimal points and exponents are
// rejected: every parameter entering the engine must be exact.
Rational parse_rational(const std::string& text);

// "a" when the denominator is 1, "a/b" otherwise.
std::string to_string(const Rational& q);

// Binomial coefficient C(a, e) for rational a and non-negative integer e.
Rational generalized_binomial(const Rational& a, unsigned e);

namespace detail {
struct CyclotomicField;
}

// Element of Q(e_l). Orders 1 and 2 are the rational field itself; a rational
// value combines with an element of any order, while two genuinely
// irrational values of different orders cannot be mixed.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(long value);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& value);  // NOLINT(google-explicit-constructor)

  // e_order^power; power may be negative.
  static Cyclotomic root_of_unity(int order, long power);
  // Residue sum_j coefficients[j] e^j, reduced modulo Phi_order.
  static Cyclotomic from_powers(int order, const std::vector<Rational>& coefficients);

  // Field order l; 1 for the rationals.
  int order() const;
  // Degree of Q(e_l) over Q, i.e. phi(l) (1 for the rationals).
  int degree() const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  // Rational value; throws DomainError unless is_rational().
  Rational to_rational() const;
  // True if the value is a rational integer.
  bool is_integer() const;

  Cyclotomic inverse() const;

  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);
  Cyclotomic& operator/=(const Cyclotomic& other);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  // Total order used only for deterministic containers; not a field order.
  friend bool canonical_less(const Cyclotomic& a, const Cyclotomic& b);

  // Canonical rendering as a polynomial in "e" with rational coefficients in
  // increasing powers, e.g. "1/2 - 3/2*e^2".
  std::string to_string() const;

 private:
  Cyclotomic(const detail::CyclotomicField* field, std::vector<Rational> coeffs);
  void trim_to_rational_if_possible();
  static const detail::CyclotomicField* common_field(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic promoted(const detail::CyclotomicField* field) const;

  const detail::CyclotomicField* field_ = nullptr;  // nullptr means Q
  std::vector<Rational> coeffs_;
};

using Scalar = Cyclotomic;

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

// Coefficients of the l-th cyclotomic polynomial, constant term first.
std::vector<Integer> cyclotomic_polynomial(int order);

// Euler's totient.
int euler_phi(int n);

// Polynomial in a formal parameter with Scalar coefficients (constant term
// first, no trailing zeros). Also serves as a generic univariate polynomial,
// e.g. for det(1 - g t) and truncated t-series numerators.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<Scalar> coefficients);
  UnivariatePolynomial(const Scalar& constant);  // NOLINT(google-explicit-constructor)

  // The variable itself.
  static UnivariatePolynomial variable();
  // prod_{i in roots} (kappa - i).
  static UnivariatePolynomial from_roots(const std::vector<Scalar>& roots);
  // C(kappa, e) = kappa (kappa - 1) ... (kappa - e + 1) / e!.
  static UnivariatePolynomial binomial(unsigned e);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  Scalar coefficient(std::size_t i) const;
  const Scalar& leading() const;

  Scalar evaluate(const Scalar& at) const;

  UnivariatePolynomial& operator+=(const UnivariatePolynomial& other);
  UnivariatePolynomial& operator-=(const UnivariatePolynomial& other);
  UnivariatePolynomial& operator*=(const UnivariatePolynomial& other);
  UnivariatePolynomial& operator*=(const Scalar& s);
  friend UnivariatePolynomial operator+(UnivariatePolynomial a, const UnivariatePolynomial& b) { return a += b; }
  friend UnivariatePolynomial operator-(UnivariatePolynomial a, const UnivariatePolynomial& b) { return a -= b; }
  friend UnivariatePolynomial operator*(UnivariatePolynomial a, const UnivariatePolynomial& b) { return a *= b; }
  UnivariatePolynomial operator-() const;
  friend bool operator==(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Quotient and remainder of long division; divisor must be nonzero.
  std::pair<UnivariatePolynomial, UnivariatePolynomial> divmod(const UnivariatePolynomial& divisor) const;

  std::string to_string(const std::string& var = "k") const;

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

using FormalParamPoly = UnivariatePolynomial;

// p / q, throwing IntegrityError when q does not divide p exactly.
FormalParamPoly formal_div_exact(const FormalParamPoly& p, const FormalParamPoly& q);

}  // namespace cherednik
