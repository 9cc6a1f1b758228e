#pragma once

// Words and noncommutative polynomials in the free algebra T(V) with
// coefficients in one of the scalar rings of scalar.hpp.

#include <map>
#include <string>
#include <vector>

#include "pbw/error.hpp"
#include "pbw/scalar.hpp"

namespace pbw {

/// Generator indices, 1-based. The empty word is the unit monomial.
using Word = std::vector<int>;

/// Degree-lexicographic order with x1 < x2 < ... < xn.
struct DegLexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

Word concat(const Word& a, const Word& b);
std::string word_to_string(const Word& w);

/// Element of T(V) over the scalar ring C. Terms iterate in deglex order.
///
/// An ambient of 0 marks a default-constructed zero that adopts the ambient
/// of whatever it is first combined with.
template <class C>
class NCPoly {
 public:
  using Scalar = C;
  using TermMap = std::map<Word, C, DegLexLess>;

  NCPoly() = default;
  explicit NCPoly(int n) : n_(n) {}

  static NCPoly unit(int n) { return monomial(n, {}, C(1)); }
  static NCPoly generator(int n, int i) { return monomial(n, {i}, C(1)); }
  static NCPoly monomial(int n, const Word& w, const C& c) {
    NCPoly p(n);
    p.add_term(w, c);
    return p;
  }

  int ambient() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  C coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? C(0) : it->second;
  }

  void add_term(const Word& w, const C& c) {
    for (int letter : w)
      if (letter < 1 || letter > n_)
        throw Error(Errc::BadIndex, "letter x" + std::to_string(letter) + " outside 1.." +
                                        std::to_string(n_));
    if (pbw::is_zero(c)) return;
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (pbw::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Maximum word length over the support; throws Undefined for zero.
  int deg_x() const {
    if (terms_.empty()) throw Error(Errc::Undefined, "deg_x of the zero polynomial");
    return static_cast<int>(terms_.rbegin()->first.size());
  }

  NCPoly scaled(const C& c) const {
    NCPoly out(n_);
    if (pbw::is_zero(c)) return out;
    for (const auto& [w, a] : terms_) out.add_term(w, a * c);
    return out;
  }

  NCPoly& operator+=(const NCPoly& o) {
    adopt(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  NCPoly& operator-=(const NCPoly& o) {
    adopt(o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator-(const NCPoly& a) { return a.scaled(C(-1)); }

  friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly out(a.n_);
    out.adopt(b);
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) out.add_term(concat(wa, wb), ca * cb);
    return out;
  }
  NCPoly& operator*=(const NCPoly& o) { return *this = *this * o; }

  friend bool operator==(const NCPoly& a, const NCPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ib = b.terms_.begin();
    for (auto ia = a.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
      if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    return true;
  }

 private:
  void adopt(const NCPoly& o) {
    if (o.n_ == 0 || n_ == o.n_) return;
    if (n_ == 0) {
      n_ = o.n_;
      return;
    }
    throw Error(Errc::AmbientMismatch,
                "ambient " + std::to_string(n_) + " vs " + std::to_string(o.n_));
  }

  int n_ = 0;
  TermMap terms_;
};

template <class C>
NCPoly<C> nc_mul(const NCPoly<C>& p, const NCPoly<C>& q) {
  return p * q;
}

template <class C>
NCPoly<C> commutator(const NCPoly<C>& p, const NCPoly<C>& q) {
  return p * q - q * p;
}

template <class C>
int deg_x(const NCPoly<C>& p) {
  return p.deg_x();
}

/// Coefficient of h^k, as a polynomial over Q.
NCPoly<Rational> hbar_coefficient(const NCPoly<HPoly>& p, int k);
/// Highest power of h occurring in any coefficient; -1 for zero.
int hbar_degree(const NCPoly<HPoly>& p);
/// Lowest power of h occurring in any coefficient; -1 for zero.
int hbar_valuation(const NCPoly<HPoly>& p);
/// Evaluate every coefficient at h = a.
NCPoly<Rational> specialize(const NCPoly<HPoly>& p, const Rational& a);

NCPoly<HPoly> lift(const NCPoly<Rational>& p);
NCPoly<HRat> to_fractions(const NCPoly<HPoly>& p);

std::string to_string(const NCPoly<Rational>& p);
std::string to_string(const NCPoly<HPoly>& p);
std::string to_string(const NCPoly<HRat>& p);

}  // namespace pbw
