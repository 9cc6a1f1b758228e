#pragma once

// Random instance generators and brute-force oracles shared by the unit tests
// and the acceptance runner. Nothing here calls into the rewrite engine.

#include <random>
#include <vector>

#include "pbw/certify.hpp"
#include "pbw/cyclic.hpp"
#include "pbw/presentation.hpp"

namespace pbw::testing {

using Rng = std::mt19937_64;

int uniform_int(Rng& rng, int lo, int hi);
Rational random_rational(Rng& rng, int num_range = 3, int den_max = 3);
Rational random_nonzero_rational(Rng& rng, int num_range = 3, int den_max = 3);
HPoly random_hpoly(Rng& rng, int max_degree, bool hbar_divisible);
Word random_word(Rng& rng, int n, int len);

/// Up to `terms` random cyclic terms of length 1..max_len.
Potential random_potential(Rng& rng, int n, int max_len, int terms, bool hbar_divisible);
/// Homogeneous of cyclic degree 3, coefficients c*h.
Potential random_cubic_potential(Rng& rng, int terms);
NCPoly<HPoly> random_ncpoly(Rng& rng, int n, int max_len, int terms, int max_hdeg);

/// Sparse constants with no attempt at Jacobi.
LieData random_lie(Rng& rng, int n);
/// A Lie algebra (sl2, Heisenberg, the 2-dimensional nonabelian one or
/// abelian, padded with central directions) in a random rational basis.
LieData random_jacobi_lie(Rng& rng, int n);

QuadData random_quad(Rng& rng, int n, int entries);
/// Known-good shapes in a random basis: multiparameter quantum space,
/// potential-derived tensors, zero.
QuadData random_good_quad(Rng& rng, int n);
/// Same tensor in the basis y_i = sum_a P_ia x_a.
QuadData change_basis(const QuadData& d, const std::vector<std::vector<Rational>>& P);
LieData change_basis(const LieData& d, const std::vector<std::vector<Rational>>& P);
std::vector<std::vector<Rational>> random_invertible(Rng& rng, int n);

/// Presentations with deg_x(phi) <= 2 and h-divisible phi, mixing linear,
/// quadratic and constant parts.
Presentation random_presentation(Rng& rng, int n);

/// Least rotation by trying every shift.
Word brute_least_rotation(const Word& w);

/// sum over terms and cut positions of c * (rotation starting after the cut).
NCPoly<HPoly> all_cuttings(const Potential& phi);

/// Cycl_ijk sum_abcd (a_jk^ab a_ia^cd x_c x_d x_b + a_jk^ab a_ib^cd x_a x_c x_d),
/// expanded term by term.
NCPoly<Rational> quadratic_bracket(const QuadData& d, int i, int j, int k);

/// Dimensions of the graded pieces of gr_F A at h = a, from exact row
/// reduction of span{u r v : |u| + deg r + |v| <= M} with pivots on the
/// deglex-largest word.
std::vector<long long> span_oracle_dims(const Presentation& p, const Rational& a, int K, int M);

/// Words of length k avoiding every listed bigram.
std::vector<Word> words_avoiding(int n, int k, const std::vector<std::pair<int, int>>& bigrams);

}  // namespace pbw::testing
