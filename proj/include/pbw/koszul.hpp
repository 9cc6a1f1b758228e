#pragma once

// Degree 0 / -1 / -2 part of the Koszul complex of S(V): the free graded
// algebra on x_i (degree 0), xi_ij (degree -1) and xi_ijk (degree -2), with
// differentials extended by the graded Leibniz rule
//
//     d(ab) = d(a) b + (-1)^{deg a} a d(b).

#include <array>
#include <compare>
#include <map>
#include <vector>

#include "pbw/freealg.hpp"
#include "pbw/presentation.hpp"

namespace pbw {

struct KoszulSymbol {
  enum class Kind : int { X = 0, Xi2 = 1, Xi3 = 2 };

  Kind kind = Kind::X;
  /// Strictly increasing; unused slots are 0.
  std::array<int, 3> idx{0, 0, 0};

  static KoszulSymbol x(int i) { return {Kind::X, {i, 0, 0}}; }

  int degree() const { return -static_cast<int>(kind); }
  bool odd() const { return kind == Kind::Xi2; }

  auto operator<=>(const KoszulSymbol&) const = default;
};

using KoszulWord = std::vector<KoszulSymbol>;

std::string symbol_to_string(const KoszulSymbol& s);

/// Noncommutative polynomial in the Koszul symbols over Q[h].
class KoszulPoly {
 public:
  using TermMap = std::map<KoszulWord, HPoly>;

  KoszulPoly() = default;
  explicit KoszulPoly(int n) : n_(n) {}

  static KoszulPoly x(int n, int i);
  /// xi_ij with xi_ji = -xi_ij and xi_ii = 0.
  static KoszulPoly xi2(int n, int i, int j);
  /// xi_ijk, totally antisymmetric, zero on repeated indices.
  static KoszulPoly xi3(int n, int i, int j, int k);

  int ambient() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const KoszulWord& w, const HPoly& c);

  /// Common cohomological degree; throws Inhomogeneous for mixed terms and
  /// Undefined for zero.
  int degree() const;

  KoszulPoly scaled(const HPoly& c) const;
  KoszulPoly& operator+=(const KoszulPoly& o);
  KoszulPoly& operator-=(const KoszulPoly& o);
  friend KoszulPoly operator+(KoszulPoly a, const KoszulPoly& b) { return a += b; }
  friend KoszulPoly operator-(KoszulPoly a, const KoszulPoly& b) { return a -= b; }
  friend KoszulPoly operator-(const KoszulPoly& a) { return a.scaled(HPoly(-1)); }
  friend KoszulPoly operator*(const KoszulPoly& a, const KoszulPoly& b);
  friend bool operator==(const KoszulPoly& a, const KoszulPoly& b) {
    return a.terms_ == b.terms_;
  }

 private:
  void adopt(const KoszulPoly& o);
  int n_ = 0;
  TermMap terms_;
};

std::string to_string(const KoszulPoly& p);

/// Embeds T(V)[h] as the degree-0 part.
KoszulPoly from_free(const NCPoly<HPoly>& p);
/// Degree-0 polynomial back to T(V)[h]; throws Inhomogeneous otherwise.
NCPoly<HPoly> to_free(const KoszulPoly& p);

using D1Map = std::map<std::pair<int, int>, NCPoly<HPoly>>;
using D2Map = std::map<Triple, KoszulPoly>;

struct Differential {
  int n = 0;
  D1Map d1;  // keyed i < j
  D2Map d2;  // keyed i < j < k
};

/// d1(xi_ij) = x_i x_j - x_j x_i - phi_ij for i < j.
D1Map d1_from_presentation(const Presentation& p);

/// Cycl_ijk [x_i, xi_jk] for one ordered triple of distinct indices.
KoszulPoly d2_default_value(int n, int i, int j, int k);
/// Adds -h Cycl_ijk sum_p c_ij^p xi_pk.
KoszulPoly d2_lie_value(const LieData& data, int i, int j, int k);
/// Adds h Cycl_ijk sum_ab alpha_jk^ab (xi_ia x_b + x_a xi_ib).
KoszulPoly d2_quadratic_value(const QuadData& data, int i, int j, int k);

D2Map d2_default(int n);
D2Map d2_lie(const LieData& data);
D2Map d2_quadratic(const QuadData& data);

/// Leibniz extension of d over a homogeneous polynomial; the result has degree
/// one higher. Throws Inhomogeneous for mixed input.
KoszulPoly apply_d(const Differential& diff, const KoszulPoly& p);

}  // namespace pbw
