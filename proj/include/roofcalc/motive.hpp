#pragma once

#include <string>
#include <vector>

#include "roofcalc/limits.hpp"
#include "roofcalc/numeric.hpp"
#include "roofcalc/weyl.hpp"

namespace roofcalc {

/// An integer polynomial in the Lefschetz class L (or in q for point counts).
/// Coefficient j multiplies L^j; trailing zeros are always trimmed, so the
/// zero polynomial has no coefficients.
class LPolynomial {
public:
  LPolynomial() = default;
  explicit LPolynomial(std::vector<BigInt> coeffs);
  static LPolynomial monomial(BigInt c, unsigned degree);
  /// [P^n] = 1 + L + ... + L^n
  static LPolynomial projective_space(unsigned n);

  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  BigInt coefficient(std::size_t j) const;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coefficient_sum() const;
  BigInt evaluate(const BigInt& x) const;
  bool is_palindromic() const;

  LPolynomial& operator+=(const LPolynomial& o);
  LPolynomial& operator-=(const LPolynomial& o);
  friend LPolynomial operator+(LPolynomial a, const LPolynomial& b) { return a += b; }
  friend LPolynomial operator-(LPolynomial a, const LPolynomial& b) { return a -= b; }
  friend LPolynomial operator*(const LPolynomial& a, const LPolynomial& b);
  friend bool operator==(const LPolynomial&, const LPolynomial&) = default;

  /// Exact division; throws InternalError when a remainder is left or a
  /// quotient coefficient is not integral.
  LPolynomial exact_divide(const LPolynomial& divisor) const;

  /// "1 + L + 2*L^2", zero terms omitted, "0" for the zero polynomial.
  std::string str(const std::string& var = "L") const;

private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// [G/P] from the Bruhat cells: coefficient j counts minimal coset
/// representatives of length j.
LPolynomial class_of_quotient(const Parabolic& p, const Limits& limits = {});

/// #IGr(d, 2n)(F_q) = prod_{j=1}^d (q^{2(n-j+1)} - 1) / (q^j - 1).
BigInt igr_point_count(int d, int n, const BigInt& q);

/// The same product as a polynomial, divided exactly.
LPolynomial igr_class(int d, int n);

/// [P^{r-2}] (f2 - f1); zero certifies L^{r-1}([Z1] - [Z2]) = 0.
LPolynomial roof_identity_residual(const LPolynomial& f1, const LPolynomial& f2, int r);

} // namespace roofcalc
