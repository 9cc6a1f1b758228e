#pragma once

// Degree-truncated diamond-lemma completion for the relations
// x_i x_j - x_j x_i - phi_ij, with normal forms, Hilbert functions of the
// associated graded algebra, ideal membership and h-torsion probes.
//
// Three coefficient settings share one engine:
//   at a     phi specialized to h = a, coefficients in Q
//   generic  coefficients in the fraction field Q(h)
//   ring     coefficients in Q[h] with h a central variable; monomials carry
//            an h-power and the order compares the word first, then the power

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "pbw/freealg.hpp"
#include "pbw/presentation.hpp"

namespace pbw {

struct Monomial {
  Word word;
  int h = 0;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.h == b.h && a.word == b.word; }
};

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    if (a.word != b.word) return a.word < b.word;
    return a.h < b.h;
  }
};

struct WordHash {
  size_t operator()(const Word& w) const noexcept;
};

template <class K>
class RewriteSystem {
 public:
  using Poly = std::map<Monomial, K, MonomialLess>;

  /// lead -> tail, every tail monomial below the lead.
  struct Rule {
    Monomial lead;
    Poly tail;
  };

  RewriteSystem(int n, bool central_h);

  int n() const { return n_; }
  bool central_h() const { return central_h_; }

  /// Normalizes p by its largest monomial and appends it as a rule, without
  /// interreduction. Zero is ignored.
  void add_relation(const Poly& p);

  /// Live rules in order of their leads.
  std::vector<Rule> rules() const;
  size_t rule_count() const;

  /// Normal form. With an rng, the reducible term and the rule applied are
  /// picked at random at every step.
  Poly reduce(const Poly& p, std::mt19937_64* rng = nullptr) const;

  /// Resolves every ambiguity whose word has length at most D, to a fixpoint.
  void complete(int D);

  int degree_bound() const { return degree_bound_; }
  /// Highest degree where normal forms are certified; -1 before complete().
  int complete_through() const { return degree_bound_ < 0 ? -1 : degree_bound_ - 1; }
  /// True when every possible overlap fits under the bound, so the rules are
  /// a complete system in all degrees.
  bool confluent() const;

  /// Non-constant lead coefficients divided out while normalizing.
  const std::vector<K>& normalizers() const { return normalizers_; }

  /// Words of length k containing no lead word (h-free leads only).
  std::vector<Word> normal_words(int k) const;
  /// counts[k] for k = 0..max_degree.
  std::vector<long long> count_normal_words(int max_degree) const;

  /// Largest h-power tolerated during completion in ring mode.
  void set_hbar_cap(int cap) { hbar_cap_ = cap; }

 private:
  struct Slot {
    Monomial lead;
    Poly tail;
    bool alive = true;
  };
  struct Ambiguity {
    size_t r1, r2;
    Word l1, m1, l2, m2;  // S = h^e1 l1 f1 m1 - h^e2 l2 f2 m2
    int e1, e2;
  };

  const Slot* find_reducer(const Monomial& m, size_t* at, std::mt19937_64* rng) const;
  Poly full_poly(const Slot& s) const;
  std::optional<size_t> insert(const Poly& p, std::vector<Poly>& pending);
  void ambiguities_with(size_t id, int D, std::vector<Ambiguity>& out) const;
  Poly s_polynomial(const Ambiguity& a) const;
  void index_rule(size_t id);
  void unindex_rule(size_t id);

  int n_;
  bool central_h_;
  std::vector<Slot> slots_;
  std::unordered_map<Word, std::vector<size_t>, WordHash> by_lead_;
  std::map<size_t, int> lead_lengths_;  // length -> live rule count
  std::vector<K> normalizers_;
  int degree_bound_ = -1;
  int hbar_cap_ = 64;
};

extern template class RewriteSystem<Rational>;
extern template class RewriteSystem<HRat>;

/// Coefficient setting for the oracle.
struct FieldChoice {
  enum class Kind { At, Generic, Ring };
  Kind kind = Kind::Generic;
  Rational a;

  static FieldChoice at(const Rational& a) { return {Kind::At, a}; }
  static FieldChoice generic() { return {Kind::Generic, 0}; }
  static FieldChoice ring() { return {Kind::Ring, 0}; }
  /// "h=a", "Q(h)" or "Q[h]".
  std::string label() const;
};

/// One relation per pair i < j, each solved for its actual deglex-largest
/// monomial. BadSpecialization if a relation vanishes identically.
RewriteSystem<Rational> build_rules_at(const Presentation& p, const Rational& a);
RewriteSystem<HRat> build_rules_generic(const Presentation& p);
RewriteSystem<Rational> build_rules_ring(const Presentation& p);

RewriteSystem<Rational>::Poly to_poly_at(const NCPoly<HPoly>& p, const Rational& a);
RewriteSystem<HRat>::Poly to_poly_generic(const NCPoly<HPoly>& p);
RewriteSystem<Rational>::Poly to_poly_ring(const NCPoly<HPoly>& p);

NCPoly<Rational> from_poly_at(int n, const RewriteSystem<Rational>::Poly& p);
NCPoly<HRat> from_poly_generic(int n, const RewriteSystem<HRat>::Poly& p);
NCPoly<HPoly> from_poly_ring(int n, const RewriteSystem<Rational>::Poly& p);

/// Rational roots of the numerators and denominators of the recorded lead
/// normalizers, sorted.
std::vector<Rational> excluded_specializations(const RewriteSystem<HRat>& sys);

enum class DegreeVerdict { Match, Defect, Unknown };
const char* verdict_name(DegreeVerdict v);

struct HilbertReport {
  int n = 0;
  int max_degree = 0;
  int degree_bound = 0;
  int complete_through = 0;
  bool confluent = false;
  FieldChoice field;
  std::vector<long long> dims;
  std::vector<long long> expected;
  std::vector<DegreeVerdict> verdicts;
  /// dims[k] - expected[k] where the verdict is Defect, else 0.
  std::vector<long long> excess;
  size_t rule_count = 0;
  std::vector<Rational> excluded;  // generic mode only

  /// Match when every degree matches, Defect when any degree has a defect,
  /// Unknown otherwise.
  DegreeVerdict overall() const;
  /// First degree with a Defect, or -1.
  int first_defect() const;
};

/// C(n + k - 1, k).
long long symmetric_dimension(int n, int k);

/// Completes to D = K + 1 and counts normal words through degree K.
/// FiltrationUnbounded unless p.filtration_ok(); ring mode is rejected.
HilbertReport hilbert(const Presentation& p, const FieldChoice& field, int K);

struct MemberReport {
  bool member = false;
  int degree_bound = 0;
  int complete_through = 0;
  FieldChoice field;
  std::string normal_form;
};

/// Completes to D and reduces q. OutOfRange when deg_x(q) > D - 1.
MemberReport member(const Presentation& p, const NCPoly<HPoly>& q, int D, const FieldChoice& field);

struct TorsionReport {
  bool witness = false;
  bool product_member = false;
  bool element_member = false;
  NCPoly<HPoly> element;
  HPoly factor;
  NCPoly<HPoly> element_normal_form;
  NCPoly<HPoly> product_normal_form;
  int degree_bound = 0;
  int complete_through = 0;
};

/// Decides factor*T in I and T in I over Q[h] with h central, truncated at D.
/// A witness means the first holds and the second fails.
TorsionReport torsion_check(const Presentation& p, const NCPoly<HPoly>& T, const HPoly& factor, int D);

}  // namespace pbw
