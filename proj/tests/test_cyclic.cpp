#include <doctest.h>

#include "pbw/cyclic.hpp"
#include "support.hpp"

using namespace pbw;
using P = NCPoly<HPoly>;
using pbw::testing::Rng;

namespace {

P word(const Word& w, const HPoly& c = HPoly(1)) { return P::monomial(3, w, c); }

Potential strange() {
  Potential phi(3);
  phi.add({3, 2, 1}, HPoly::monomial(-1, 1));
  return phi;
}

}  // namespace

TEST_CASE("canonical representatives") {
  CHECK(cyclic_canon({3, 2, 1}, 3).representative() == Word{1, 3, 2});
  CHECK(cyclic_canon({1, 1, 1}, 3).representative() == Word{1, 1, 1});
  CHECK(cyclic_canon({2, 1, 2, 1}, 2).representative() == Word{1, 2, 1, 2});
  CHECK(cyclic_canon({2, 3, 1}, 3) == cyclic_canon({1, 2, 3}, 3));
  CHECK_THROWS_AS(cyclic_canon({}, 3), Error);
  CHECK_THROWS_AS(cyclic_canon({4}, 3), Error);
}

TEST_CASE("least rotation agrees with brute force") {
  Rng rng(31);
  for (int t = 0; t < 2000; ++t) {
    const int n = testing::uniform_int(rng, 1, 3);
    Word w = testing::random_word(rng, n, testing::uniform_int(rng, 1, 9));
    CHECK(least_rotation(w) == testing::brute_least_rotation(w));
  }
}

TEST_CASE("derivative examples") {
  Potential bare(3);
  bare.add({3, 2, 1}, -1);
  CHECK(cyclic_derivative(bare, 1) == -word({3, 2}));
  CHECK(cyclic_derivative(bare, 2) == -word({1, 3}));
  Potential cube(3);
  cube.add({1, 1, 1}, 1);
  CHECK(cyclic_derivative(cube, 1) == word({1, 1}, 3));
  CHECK(cyclic_derivative(cube, 2).is_zero());
  CHECK_THROWS_AS(cyclic_derivative(cube, 4), Error);
}

TEST_CASE("potential to presentation examples") {
  Presentation p = potential_to_presentation(strange());
  CHECK(p.phi(1, 2) == -word({2, 1}, HPoly::hbar()));
  CHECK(p.phi(2, 3) == -word({3, 2}, HPoly::hbar()));
  CHECK(p.phi(3, 1) == -word({1, 3}, HPoly::hbar()));

  CHECK(potential_to_presentation(Potential(3)).stored().empty());

  Potential xyz(3);
  xyz.add({1, 2, 3}, HPoly::hbar());
  Presentation q = potential_to_presentation(xyz);
  CHECK(q.phi(1, 2) == word({1, 2}, HPoly::hbar()));
  CHECK(q.phi(2, 3) == word({2, 3}, HPoly::hbar()));
  CHECK(q.phi(3, 1) == word({3, 1}, HPoly::hbar()));

  CHECK_THROWS_AS(potential_to_presentation(Potential(4)), Error);
  Potential plain(3);
  plain.add({1, 2, 3}, 1);
  CHECK_THROWS_AS(potential_to_presentation(plain), Error);
}

TEST_CASE("potential recovery round trip") {
  Rng rng(32);
  for (int t = 0; t < 100; ++t) {
    Potential phi = testing::random_potential(rng, 3, 4, 3, true);
    auto back = potential_of(potential_to_presentation(phi));
    REQUIRE(back.has_value());
    // Degree-1 and constant cycles do not change the relations except through
    // their derivatives, so compare the presentations.
    CHECK(potential_to_presentation(*back) == potential_to_presentation(phi));
  }
}

TEST_CASE("rotation invariance of the derivative") {
  Rng rng(33);
  for (int t = 0; t < 300; ++t) {
    const int n = testing::uniform_int(rng, 1, 4);
    Word w = testing::random_word(rng, n, testing::uniform_int(rng, 1, 6));
    Potential a(n), b(n);
    a.add(w, 1);
    b.add(rotate(w, static_cast<size_t>(testing::uniform_int(rng, 0, static_cast<int>(w.size()) - 1))), 1);
    CHECK(a == b);
    for (int i = 1; i <= n; ++i) CHECK(cyclic_derivative(a, i) == cyclic_derivative(b, i));
  }
}

TEST_CASE("cancellation identity on random potentials") {
  Rng rng(34);
  for (int t = 0; t < 300; ++t) {
    const int n = testing::uniform_int(rng, 1, 4);
    Potential phi = testing::random_potential(rng, n, 6, testing::uniform_int(rng, 1, 4), false);
    P total(n);
    for (int i = 1; i <= n; ++i) total += commutator(cyclic_derivative(phi, i), P::generator(n, i));
    CHECK(total.is_zero());
  }
}

TEST_CASE("euler identity against the cutting enumerator") {
  Rng rng(35);
  for (int t = 0; t < 300; ++t) {
    const int n = testing::uniform_int(rng, 1, 4);
    const int d = testing::uniform_int(rng, 1, 5);
    Potential phi(n);
    for (int k = 0; k < 3; ++k) phi.add(testing::random_word(rng, n, d), testing::random_hpoly(rng, 2, false));
    P lhs(n);
    for (int i = 1; i <= n; ++i) lhs += cyclic_derivative(phi, i) * P::generator(n, i);
    CHECK(lhs == testing::all_cuttings(phi));
    // Each term of x-degree d contributes d words, one per cut.
    for (const auto& [w, c] : lhs.terms()) CHECK(static_cast<int>(w.size()) == d);
  }
}
