#pragma once

// Cyclic words (necklaces), cyclic potentials and their noncommutative
// partial derivatives.

#include <map>
#include <optional>

#include "pbw/freealg.hpp"
#include "pbw/presentation.hpp"

namespace pbw {

/// Lexicographically least rotation (Booth's algorithm, linear time).
Word least_rotation(const Word& w);
Word rotate(const Word& w, size_t shift);

/// Rotation class of a nonempty word, keyed by its least rotation.
class CyclicWord {
 public:
  /// Throws EmptyCycle for the empty word, BadIndex for letters outside 1..n.
  CyclicWord(const Word& w, int n);

  const Word& representative() const { return rep_; }
  int ambient() const { return n_; }

  friend bool operator==(const CyclicWord& a, const CyclicWord& b) {
    return a.n_ == b.n_ && a.rep_ == b.rep_;
  }

 private:
  Word rep_;
  int n_;
};

inline CyclicWord cyclic_canon(const Word& w, int n) { return CyclicWord(w, n); }

/// Finitely supported combination of cyclic words with coefficients in Q[h].
class Potential {
 public:
  using TermMap = std::map<Word, HPoly, DegLexLess>;

  explicit Potential(int n) : n_(n) {}

  int ambient() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  /// Keyed by least rotation.
  const TermMap& terms() const { return terms_; }

  /// Adds c * Cycl(w); w is canonicalized.
  void add(const Word& w, const HPoly& c);

  friend bool operator==(const Potential& a, const Potential& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  int n_;
  TermMap terms_;
};

/// Sum over occurrences of x_i: drop the letter and read the necklace from
/// the position right after it.
NCPoly<HPoly> cyclic_derivative(const Potential& phi, int i);

/// phi_12 = d/dx3, phi_23 = d/dx1, phi_31 = d/dx2. Requires n = 3 and every
/// coefficient divisible by h (UnsupportedArity / NotDeformation). A derivative
/// of x-degree above 2 is allowed and shows up as filtration_ok() == false.
Presentation potential_to_presentation(const Potential& phi);

/// Recovers a potential whose derivatives reproduce p, if one exists (n = 3).
std::optional<Potential> potential_of(const Presentation& p);

}  // namespace pbw
