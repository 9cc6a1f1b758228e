#pragma once

// A deformed presentation A = T(V)[h] / (x_i x_j - x_j x_i - phi_ij), i < j,
// plus the Lie and quadratic-tensor data it is commonly built from.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pbw/freealg.hpp"

namespace pbw {

using Triple = std::array<int, 3>;

/// Structure constants c_ij^k, stored for i < j only. c_ji^k = -c_ij^k and
/// c_ii^k = 0 are applied on access.
class LieData {
 public:
  explicit LieData(int n = 0) : n_(n) {}

  int n() const { return n_; }
  Rational get(int i, int j, int k) const;
  void set(int i, int j, int k, const Rational& value);
  const std::map<Triple, Rational>& stored() const { return c_; }

  friend bool operator==(const LieData& a, const LieData& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

 private:
  int n_;
  std::map<Triple, Rational> c_;
};

/// Tensor alpha_ij^ab, stored for i < j only; alpha_ji^ab = -alpha_ij^ab.
/// No symmetry in (a, b) is assumed.
class QuadData {
 public:
  using Key = std::array<int, 4>;

  explicit QuadData(int n = 0) : n_(n) {}

  int n() const { return n_; }
  Rational get(int i, int j, int a, int b) const;
  void set(int i, int j, int a, int b, const Rational& value);
  const std::map<Key, Rational>& stored() const { return alpha_; }

  friend bool operator==(const QuadData& a, const QuadData& b) {
    return a.n_ == b.n_ && a.alpha_ == b.alpha_;
  }

 private:
  int n_;
  std::map<Key, Rational> alpha_;
};

class Presentation {
 public:
  using PhiMap = std::map<std::pair<int, int>, NCPoly<HPoly>>;

  explicit Presentation(int n = 1);

  int n() const { return n_; }

  /// Sets phi_ij; for i > j stores -phi at (j, i). i = j is rejected.
  void set_phi(int i, int j, const NCPoly<HPoly>& phi);
  /// Signed accessor: phi(j, i) = -phi(i, j), phi(i, i) = 0.
  NCPoly<HPoly> phi(int i, int j) const;
  /// Nonzero phi_ij with i < j.
  const PhiMap& stored() const { return phi_; }

  /// True iff deg_x(phi_ij) <= 2 for every pair.
  bool filtration_ok() const;
  /// True iff every phi_ij lies in h * T(V)[h].
  bool is_deformation() const;

  friend bool operator==(const Presentation& a, const Presentation& b) {
    return a.n_ == b.n_ && a.phi_ == b.phi_;
  }

 private:
  void check_index(int i) const;

  int n_;
  PhiMap phi_;
};

Presentation from_lie(const LieData& data);
Presentation from_quadratic(const QuadData& data);

/// Structure constants if every phi_ij is h times a linear form.
std::optional<LieData> lie_data_of(const Presentation& p);
/// Tensor alpha if every phi_ij is h times a homogeneous quadratic form.
std::optional<QuadData> quad_data_of(const Presentation& p);

struct PairCheck {
  int i = 0;
  int j = 0;
  bool hbar_divisible = true;
  int deg_x = -1;  // -1 for phi_ij = 0
};

struct ValidationReport {
  bool valid = true;
  bool filtration_ok = true;
  std::vector<PairCheck> pairs;
  std::vector<std::string> failures;
  /// Applicable certificate routes among "lie", "quadratic", "potential",
  /// falling back to "generic".
  std::vector<std::string> paths;
};

ValidationReport validate(const Presentation& p);

}  // namespace pbw
