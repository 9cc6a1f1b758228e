#pragma once

// The d1 o d2 = 0 certificate, the classical identities it reduces to in the
// linear and quadratic cases, and extraction of the leading obstruction.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pbw/koszul.hpp"
#include "pbw/presentation.hpp"

namespace pbw {

enum class D2Choice { Default, Lie, Quadratic, Custom };

const char* d2_choice_name(D2Choice c);
/// "default" | "lie" | "quadratic" | "custom"; throws Parse otherwise.
D2Choice parse_d2_choice(const std::string& s);

struct CertificateReport {
  bool pass = true;
  /// d1(d2(xi_ijk)) for every i < j < k, zero entries included.
  std::map<Triple, NCPoly<HPoly>> residues;
  D2Choice path = D2Choice::Default;
  /// All phi_ij of x-degree at most 1.
  bool linear_phi = false;
  std::string claim;
};

/// Builds the chosen d2 and evaluates the composite on each xi_ijk.
/// Lie / Quadratic need the matching shape of phi (PathMismatch otherwise);
/// Custom needs a value for every triple. A phi outside h*T(V)[h] is
/// rejected with NotDeformation.
CertificateReport certify(const Presentation& p, D2Choice choice, const D2Map* custom = nullptr);

/// h^2 sum_{a,b} (c_ij^a c_ak^b + c_jk^a c_ai^b + c_ki^a c_aj^b) x_b.
/// Repeated indices raise BadTriple.
NCPoly<HPoly> jacobiator(const LieData& d, int i, int j, int k);

/// Outcome of an exhaustive scan over index tuples; the witness is the first
/// failing tuple in lexicographic order.
struct TensorCheck {
  bool pass = true;
  std::vector<int> witness;
  Rational value;
};

/// Cycl_ijk sum_s (alpha_jk^sb alpha_is^cd + alpha_jk^cs alpha_is^db) over all
/// (i, j, k, b, c, d).
Rational quadratic_condition_value(const QuadData& d, int i, int j, int k, int b, int c, int e);
TensorCheck check_quadratic_condition(const QuadData& d);

/// Jacobi identity of beta_ij^ab = alpha_ij^ab + alpha_ij^ba, symmetrized over
/// the upper indices (a, b, c), for all (i, j, k, a, b, c).
Rational poisson_value(const QuadData& d, int i, int j, int k, int a, int b, int c);
TensorCheck check_poisson(const QuadData& d);

struct ObstructionReport {
  int hbar_order = 0;
  /// Coefficient of h^hbar_order in each residue where it is nonzero.
  std::vector<std::pair<Triple, NCPoly<Rational>>> generators;
  D2Choice path = D2Choice::Default;
};

/// Throws NoObstruction when the certificate passes.
ObstructionReport obstruction(const Presentation& p, D2Choice choice, const D2Map* custom = nullptr);

}  // namespace pbw
