#include <doctest.h>

#include <algorithm>
#include <functional>

#include "pbw/certify.hpp"
#include "pbw/json_io.hpp"
#include "pbw/rewrite.hpp"
#include "support.hpp"

using namespace pbw;
using P = NCPoly<HPoly>;
using Q = NCPoly<Rational>;
using pbw::testing::Rng;

namespace {

std::string data(const std::string& name) { return std::string(PBW_TEST_DATA) + "/" + name; }
Presentation fixture(const std::string& name) { return presentation_from_json(read_json_file(data(name))); }
P poly_fixture(const std::string& name, int n) { return poly_from_json(read_json_file(data(name)), n); }

Q qw(const Word& w, const Rational& c = 1) { return Q::monomial(3, w, c); }

// Rules as (lead word, tail) pairs over Q.
std::vector<std::pair<Word, Q>> rules_at(const RewriteSystem<Rational>& sys) {
  std::vector<std::pair<Word, Q>> out;
  for (const auto& r : sys.rules()) out.emplace_back(r.lead.word, from_poly_at(sys.n(), r.tail));
  return out;
}

Q reduce_at(const RewriteSystem<Rational>& sys, const Q& p, Rng* rng = nullptr) {
  return from_poly_at(sys.n(), sys.reduce(to_poly_at(lift(p), 0), rng));
}

bool nondecreasing(const Word& w) { return std::is_sorted(w.begin(), w.end()); }

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::Parse;
}

}  // namespace

TEST_CASE("rules from presentations") {
  auto poly = rules_at(build_rules_at(Presentation(3), 1));
  REQUIRE(poly.size() == 3);
  CHECK(poly[0] == std::pair<Word, Q>{{2, 1}, qw({1, 2})});

  auto sl2 = rules_at(build_rules_at(fixture("sl2.json"), 1));
  REQUIRE(sl2.size() == 3);
  CHECK(sl2[0] == std::pair<Word, Q>{{2, 1}, qw({1, 2}) - qw({3})});
  CHECK(sl2[1] == std::pair<Word, Q>{{3, 1}, qw({1, 3}) + qw({1}, 2)});
  CHECK(sl2[2] == std::pair<Word, Q>{{3, 2}, qw({2, 3}) - qw({2}, 2)});

  auto strange = rules_at(build_rules_at(fixture("strange.json"), 1));
  REQUIRE(strange.size() == 3);
  for (const auto& [lead, tail] : strange) CHECK(tail.is_zero());
  std::vector<Word> leads;
  for (const auto& [lead, tail] : strange) leads.push_back(lead);
  CHECK(leads == std::vector<Word>{{1, 2}, {2, 3}, {3, 1}});
}

TEST_CASE("identically vanishing relation") {
  Presentation p(2);
  p.set_phi(1, 2, P::monomial(2, {1, 2}, HPoly::hbar()) - P::monomial(2, {2, 1}, HPoly::hbar()));
  CHECK(code_of([&] { build_rules_at(p, 1); }) == Errc::BadSpecialization);
  CHECK_NOTHROW(build_rules_at(p, 2));
}

TEST_CASE("reduction examples") {
  auto sl2 = build_rules_at(fixture("sl2.json"), 1);
  CHECK(reduce_at(sl2, qw({2, 1})) == qw({1, 2}) - qw({3}));
  for (const auto& [lead, tail] : rules_at(sl2)) CHECK(reduce_at(sl2, qw(lead)) == tail);
  auto strange = build_rules_at(fixture("strange.json"), 1);
  CHECK(reduce_at(strange, qw({1, 2, 3})).is_zero());
}

TEST_CASE("completion examples") {
  auto poly = build_rules_at(Presentation(3), 1);
  poly.complete(5);
  CHECK(poly.rule_count() == 3);
  for (int k = 0; k <= 4; ++k)
    for (const Word& w : poly.normal_words(k)) CHECK(nondecreasing(w));

  auto sl2 = build_rules_at(fixture("sl2.json"), 1);
  sl2.complete(5);
  CHECK(sl2.rule_count() == 3);
  CHECK(sl2.complete_through() == 4);
  CHECK(sl2.confluent());

  auto strange = build_rules_at(fixture("strange.json"), 1);
  strange.complete(4);
  CHECK(strange.rule_count() == 3);
  CHECK(strange.count_normal_words(3) == std::vector<long long>{1, 3, 6, 12});

  CHECK(code_of([&] { poly.complete(1); }) == Errc::OutOfRange);
}

TEST_CASE("hilbert examples") {
  HilbertReport poly = hilbert(Presentation(3), FieldChoice::at(1), 4);
  CHECK(poly.dims == std::vector<long long>{1, 3, 6, 10, 15});
  CHECK(poly.overall() == DegreeVerdict::Match);

  HilbertReport strange = hilbert(fixture("strange.json"), FieldChoice::at(1), 3);
  CHECK(strange.dims == std::vector<long long>{1, 3, 6, 12});
  CHECK(strange.expected == std::vector<long long>{1, 3, 6, 10});
  CHECK(strange.first_defect() == 3);
  CHECK(strange.excess[3] == 2);
  CHECK(strange.overall() == DegreeVerdict::Defect);

  HilbertReport sl2 = hilbert(fixture("sl2.json"), FieldChoice::at(1), 4);
  CHECK(sl2.dims == std::vector<long long>{1, 3, 6, 10, 15});
  CHECK(sl2.overall() == DegreeVerdict::Match);
  CHECK(sl2.degree_bound == 5);
  CHECK(sl2.complete_through == 4);
}

TEST_CASE("strange normal words avoid three bigrams") {
  auto sys = build_rules_at(fixture("strange.json"), 1);
  sys.complete(5);
  for (int k = 0; k <= 4; ++k) {
    std::vector<Word> got = sys.normal_words(k);
    std::sort(got.begin(), got.end());
    CHECK(got == testing::words_avoiding(3, k, {{1, 2}, {2, 3}, {3, 1}}));
  }
}

TEST_CASE("generic mode records excluded specializations") {
  HilbertReport g = hilbert(fixture("strange.json"), FieldChoice::generic(), 4);
  CHECK(g.dims == std::vector<long long>{1, 3, 6, 10, 15});
  CHECK(g.overall() == DegreeVerdict::Match);
  CHECK(g.excluded == std::vector<Rational>{1});
  CHECK(g.field.label() == "Q(h)");
}

TEST_CASE("hilbert errors") {
  CHECK(code_of([&] { hilbert(fixture("unbounded.json"), FieldChoice::at(1), 3); }) == Errc::FiltrationUnbounded);
  CHECK(code_of([&] { hilbert(Presentation(2), FieldChoice::at(1), 0); }) == Errc::OutOfRange);
  CHECK(code_of([&] { hilbert(Presentation(2), FieldChoice::ring(), 2); }) == Errc::PathMismatch);
}

TEST_CASE("an ideal containing a unit kills every degree") {
  // [x1,x3] = h, [x2,x3] = 2h x3^2 at h = -1: the Jacobi sum gives x3 in I,
  // hence 1 in I.
  Presentation p(3);
  p.set_phi(1, 3, P::monomial(3, {}, HPoly::hbar()));
  p.set_phi(2, 3, P::monomial(3, {3, 3}, HPoly::monomial(2, 1)));
  HilbertReport r = hilbert(p, FieldChoice::at(-1), 3);
  CHECK(r.dims == std::vector<long long>{0, 0, 0, 0});
  auto sys = build_rules_at(p, -1);
  sys.complete(4);
  CHECK(reduce_at(sys, qw({})).is_zero());
  CHECK(reduce_at(sys, qw({2, 1})).is_zero());
  CHECK(sys.normal_words(0).empty());
}

TEST_CASE("membership examples") {
  Presentation sl2 = fixture("sl2.json");
  P rel = P::monomial(3, {1, 2}, 1) - P::monomial(3, {2, 1}, 1) - sl2.phi(1, 2);
  CHECK(member(sl2, rel, 4, FieldChoice::generic()).member);
  CHECK(member(sl2, rel, 4, FieldChoice::at(Rational(1, 2))).member);
  CHECK_FALSE(member(sl2, P::generator(3, 1), 4, FieldChoice::generic()).member);
  CHECK(code_of([&] { member(sl2, P::monomial(3, {1, 1, 1, 1}, 1), 4, FieldChoice::generic()); }) ==
        Errc::OutOfRange);

  Presentation strange = fixture("strange.json");
  P prod = poly_fixture("strange_member.json", 3);
  CHECK(member(strange, prod, 5, FieldChoice::generic()).member);
  CHECK(member(strange, prod, 5, FieldChoice::ring()).member);
  CHECK_FALSE(member(strange, poly_fixture("strange_T.json", 3), 5, FieldChoice::at(1)).member);  // monomial ideal at h = 1
}

TEST_CASE("torsion examples") {
  Presentation strange = fixture("strange.json");
  P T = poly_fixture("strange_T.json", 3);
  TorsionReport w = torsion_check(strange, T, HPoly(1) - HPoly::hbar(), 5);
  CHECK(w.witness);
  CHECK(w.product_member);
  CHECK_FALSE(w.element_member);
  CHECK(w.product_normal_form.is_zero());
  CHECK_FALSE(w.element_normal_form.is_zero());

  TorsionReport plain = torsion_check(strange, T, HPoly(1), 5);
  CHECK_FALSE(plain.witness);

  TorsionReport sl2 = torsion_check(fixture("sl2.json"), P::monomial(3, {1, 2}, 1), HPoly(1) - HPoly::hbar(), 5);
  CHECK_FALSE(sl2.witness);
  CHECK_FALSE(sl2.product_member);

  CHECK(code_of([&] { torsion_check(strange, P(3), HPoly(1), 5); }) == Errc::Undefined);
  CHECK(code_of([&] { torsion_check(strange, T, HPoly(), 5); }) == Errc::Undefined);
}

TEST_CASE("hilbert agrees with the span oracle on graded and Lie-type presentations") {
  // Homogeneous relations make the span graded, and Lie-type relations of a
  // Lie algebra already form a Groebner basis, so any margin is exact here.
  Rng rng(71);
  for (int t = 0; t < 30; ++t) {
    const int n = 3;
    Presentation p = t % 3 == 0   ? from_quadratic(testing::random_quad(rng, n, testing::uniform_int(rng, 1, 5)))
                     : t % 3 == 1 ? from_lie(testing::random_jacobi_lie(rng, n))
                                  : potential_to_presentation(testing::random_cubic_potential(rng, 3));
    const Rational a = testing::random_nonzero_rational(rng);
    const int K = testing::uniform_int(rng, 1, 3);
    HilbertReport r = hilbert(p, FieldChoice::at(a), K);
    CHECK(r.dims == testing::span_oracle_dims(p, a, K, K + 2));
  }
}

TEST_CASE("dims never exceed the symmetric dimensions for linear phi") {
  Rng rng(72);
  for (int t = 0; t < 40; ++t) {
    const int n = testing::uniform_int(rng, 2, 4);
    LieData d = testing::random_lie(rng, n);
    HilbertReport r = hilbert(from_lie(d), FieldChoice::at(testing::random_nonzero_rational(rng)), 3);
    for (int k = 0; k <= 3; ++k) CHECK(r.dims[k] <= symmetric_dimension(n, k));
  }
}

TEST_CASE("passing certificates give Match in generic mode") {
  Rng rng(73);
  for (int t = 0; t < 12; ++t) {
    Presentation p = t % 3 == 0   ? from_lie(testing::random_jacobi_lie(rng, 3))
                     : t % 3 == 1 ? from_quadratic(testing::random_good_quad(rng, 3))
                                  : potential_to_presentation(testing::random_cubic_potential(rng, 2));
    const D2Choice c = t % 3 == 0 ? D2Choice::Lie : t % 3 == 1 ? D2Choice::Quadratic : D2Choice::Default;
    if (!certify(p, c).pass) continue;
    HilbertReport r = hilbert(p, FieldChoice::generic(), 3);
    CHECK(r.overall() == DegreeVerdict::Match);
  }
}

TEST_CASE("reduction order does not matter after completion") {
  Rng rng(74);
  for (int t = 0; t < 30; ++t) {
    Presentation p = testing::random_presentation(rng, 3);
    const Rational a = testing::random_nonzero_rational(rng);
    RewriteSystem<Rational> sys = build_rules_at(p, 1);
    try {
      sys = build_rules_at(p, a);
    } catch (const Error&) {
      continue;
    }
    sys.complete(4);
    for (int s = 0; s < 10; ++s) {
      P q = testing::random_ncpoly(rng, 3, sys.complete_through(), 4, 0);
      Q fixed = reduce_at(sys, specialize(q, 0));
      for (int r = 0; r < 3; ++r) CHECK(reduce_at(sys, specialize(q, 0), &rng) == fixed);
    }
  }
}

TEST_CASE("field labels and verdict names") {
  CHECK(FieldChoice::at(Rational(1, 2)).label() == "h=1/2");
  CHECK(FieldChoice::ring().label() == "Q[h]");
  CHECK(std::string(verdict_name(DegreeVerdict::Defect)) == "Defect");
  CHECK(symmetric_dimension(3, 5) == 21);
}
