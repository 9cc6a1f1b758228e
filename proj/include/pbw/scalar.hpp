#pragma once

// Exact coefficient tower: Q, Q[h] and Q(h).
//
// Every value is kept in a canonical form after each operation so that
// structural equality is semantic equality:
//   Rational  gcd(num, den) = 1, den > 0 (maintained by GMP)
//   HPoly     no trailing zero coefficients
//   HRat      gcd(num, den) = 1, den monic

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pbw {

using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_one(const Rational& q) { return q == 1; }

/// Univariate polynomial in h over Q, coefficients stored lowest power first.
class HPoly {
 public:
  HPoly() = default;
  HPoly(const Rational& c);  // NOLINT: constants embed implicitly
  HPoly(int c);              // NOLINT
  explicit HPoly(std::vector<Rational> coeffs);

  static HPoly hbar(int power = 1);
  static HPoly monomial(const Rational& c, int power);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Lowest power with a nonzero coefficient; -1 for zero.
  int valuation() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int k) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational eval(const Rational& a) const;
  HPoly monic() const;

  HPoly& operator+=(const HPoly& o);
  HPoly& operator-=(const HPoly& o);
  HPoly& operator*=(const HPoly& o);

  friend HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
  friend HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }
  friend HPoly operator*(const HPoly& a, const HPoly& b);
  friend HPoly operator-(HPoly a);
  friend bool operator==(const HPoly& a, const HPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division over Q; throws DivisionByZero for b = 0.
  static std::pair<HPoly, HPoly> divmod(const HPoly& a, const HPoly& b);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

inline bool is_zero(const HPoly& p) { return p.is_zero(); }
inline bool is_one(const HPoly& p) { return p.degree() == 0 && p.leading() == 1; }

/// Monic gcd; gcd(0, 0) = 0.
HPoly gcd(HPoly a, HPoly b);

/// Value of p at h = a.
inline Rational hpoly_eval(const HPoly& p, const Rational& a) { return p.eval(a); }

std::string to_string(const HPoly& p);

/// Element of the fraction field Q(h) in lowest terms with monic denominator.
class HRat {
 public:
  HRat() : den_(1) {}
  HRat(const HPoly& p) : num_(p), den_(1) {}  // NOLINT
  HRat(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  HRat(int c) : num_(c), den_(1) {}              // NOLINT
  HRat(HPoly num, HPoly den);

  const HPoly& num() const { return num_; }
  const HPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  HRat inv() const;
  /// Throws DivisionByZero when the denominator vanishes at a.
  Rational eval(const Rational& a) const;

  HRat& operator+=(const HRat& o);
  HRat& operator-=(const HRat& o);
  HRat& operator*=(const HRat& o);
  HRat& operator/=(const HRat& o);

  friend HRat operator+(HRat a, const HRat& b) { return a += b; }
  friend HRat operator-(HRat a, const HRat& b) { return a -= b; }
  friend HRat operator*(HRat a, const HRat& b) { return a *= b; }
  friend HRat operator/(HRat a, const HRat& b) { return a /= b; }
  friend HRat operator-(HRat a);
  friend bool operator==(const HRat& a, const HRat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void normalize();
  HPoly num_;
  HPoly den_;
};

inline bool is_zero(const HRat& r) { return r.is_zero(); }
inline bool is_one(const HRat& r) { return r.den().degree() == 0 && is_one(r.num()); }

inline HRat inv(const HRat& r) { return r.inv(); }

std::string to_string(const HRat& r);

/// Rational roots of p (rational root test on the integer-scaled polynomial).
std::vector<Rational> rational_roots(const HPoly& p);

}  // namespace pbw
