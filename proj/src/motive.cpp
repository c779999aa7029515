#include "roofcalc/motive.hpp"

#include <algorithm>

#include "roofcalc/errors.hpp"

namespace roofcalc {

LPolynomial::LPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

LPolynomial LPolynomial::monomial(BigInt c, unsigned degree) {
  std::vector<BigInt> v(degree + 1, 0);
  v[degree] = std::move(c);
  return LPolynomial(std::move(v));
}

LPolynomial LPolynomial::projective_space(unsigned n) { return LPolynomial(std::vector<BigInt>(n + 1, 1)); }

void LPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt LPolynomial::coefficient(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : BigInt(0); }

BigInt LPolynomial::coefficient_sum() const {
  BigInt s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

BigInt LPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bool LPolynomial::is_palindromic() const {
  return std::equal(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(coeffs_.size() / 2),
                    coeffs_.rbegin());
}

LPolynomial& LPolynomial::operator+=(const LPolynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

LPolynomial& LPolynomial::operator-=(const LPolynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

LPolynomial operator*(const LPolynomial& a, const LPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return LPolynomial(std::move(c));
}

LPolynomial LPolynomial::exact_divide(const LPolynomial& divisor) const {
  if (divisor.is_zero()) throw InternalError("polynomial division by zero");
  if (is_zero()) return {};
  if (degree() < divisor.degree()) throw InternalError("inexact polynomial division");
  std::vector<BigInt> rem = coeffs_;
  const auto dd = static_cast<std::size_t>(divisor.degree());
  const BigInt& lead = divisor.coeffs_.back();
  std::vector<BigInt> q(rem.size() - dd, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const BigInt& top = rem[k + dd];
    if (top % lead != 0) throw InternalError("non-integral quotient coefficient");
    q[k] = top / lead;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= q[k] * divisor.coeffs_[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw InternalError("inexact polynomial division");
  return LPolynomial(std::move(q));
}

std::string LPolynomial::str(const std::string& var) const {
  std::string s;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const BigInt& c = coeffs_[j];
    if (c == 0) continue;
    const bool neg = c < 0;
    const BigInt a = neg ? BigInt(-c) : c;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    if (j == 0) {
      s += a.str();
      continue;
    }
    if (a != 1) s += a.str() + "*";
    s += var;
    if (j > 1) s += "^" + std::to_string(j);
  }
  return s.empty() ? "0" : s;
}

LPolynomial class_of_quotient(const Parabolic& p, const Limits& limits) {
  const auto counts = coset_length_counts(p, limits);
  std::vector<BigInt> c(counts.begin(), counts.end());
  return LPolynomial(std::move(c));
}

namespace {

void check_igr_args(int d, int n) {
  if (n < 1 || d < 1 || d > n)
    throw ValidationError("IGr(d, 2n) needs 1 <= d <= n, got d=" + std::to_string(d) + ", n=" + std::to_string(n));
}

LPolynomial x_power_minus_one(unsigned k) {
  auto f = LPolynomial::monomial(1, k);
  f -= LPolynomial::monomial(1, 0);
  return f;
}

} // namespace

BigInt igr_point_count(int d, int n, const BigInt& q) {
  check_igr_args(d, n);
  if (q < 2) throw ValidationError("field size q must be at least 2, got " + q.str());
  BigInt num = 1, den = 1;
  for (int j = 1; j <= d; ++j) {
    num *= boost::multiprecision::pow(q, static_cast<unsigned>(2 * (n - j + 1))) - 1;
    den *= boost::multiprecision::pow(q, static_cast<unsigned>(j)) - 1;
  }
  if (num % den != 0) throw InternalError("isotropic Grassmannian count is not integral");
  return num / den;
}

LPolynomial igr_class(int d, int n) {
  check_igr_args(d, n);
  LPolynomial num = LPolynomial::monomial(1, 0), den = LPolynomial::monomial(1, 0);
  for (int j = 1; j <= d; ++j) {
    num = num * x_power_minus_one(static_cast<unsigned>(2 * (n - j + 1)));
    den = den * x_power_minus_one(static_cast<unsigned>(j));
  }
  return num.exact_divide(den);
}

LPolynomial roof_identity_residual(const LPolynomial& f1, const LPolynomial& f2, int r) {
  if (r < 2) throw ValidationError("roof rank must be at least 2, got " + std::to_string(r));
  return LPolynomial::projective_space(static_cast<unsigned>(r - 2)) * (f2 - f1);
}

} // namespace roofcalc
