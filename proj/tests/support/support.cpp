#include "support.hpp"

#include <algorithm>
#include <set>

namespace pbw::testing {

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Rational random_rational(Rng& rng, int num_range, int den_max) {
  Rational q(uniform_int(rng, -num_range, num_range), uniform_int(rng, 1, den_max));
  q.canonicalize();
  return q;
}

Rational random_nonzero_rational(Rng& rng, int num_range, int den_max) {
  for (;;) {
    Rational q = random_rational(rng, num_range, den_max);
    if (!is_zero(q)) return q;
  }
}

HPoly random_hpoly(Rng& rng, int max_degree, bool hbar_divisible) {
  std::vector<Rational> c(max_degree + 1);
  for (int k = hbar_divisible ? 1 : 0; k <= max_degree; ++k)
    if (uniform_int(rng, 0, 1)) c[k] = random_rational(rng);
  return HPoly(c);
}

Word random_word(Rng& rng, int n, int len) {
  Word w(len);
  for (int& letter : w) letter = uniform_int(rng, 1, n);
  return w;
}

Potential random_potential(Rng& rng, int n, int max_len, int terms, bool hbar_divisible) {
  Potential phi(n);
  for (int t = 0; t < terms; ++t) {
    HPoly c = random_hpoly(rng, 2, hbar_divisible);
    if (c.is_zero()) c = hbar_divisible ? HPoly::hbar() : HPoly(1);
    phi.add(random_word(rng, n, uniform_int(rng, 1, max_len)), c);
  }
  return phi;
}

Potential random_cubic_potential(Rng& rng, int terms) {
  Potential phi(3);
  for (int t = 0; t < terms; ++t)
    phi.add(random_word(rng, 3, 3), HPoly::monomial(random_nonzero_rational(rng), 1));
  return phi;
}

NCPoly<HPoly> random_ncpoly(Rng& rng, int n, int max_len, int terms, int max_hdeg) {
  NCPoly<HPoly> p(n);
  for (int t = 0; t < terms; ++t)
    p.add_term(random_word(rng, n, uniform_int(rng, 0, max_len)), random_hpoly(rng, max_hdeg, false));
  return p;
}

LieData random_lie(Rng& rng, int n) {
  LieData d(n);
  const int entries = uniform_int(rng, 1, n * n);
  for (int t = 0; t < entries; ++t) {
    int i = uniform_int(rng, 1, n), j = uniform_int(rng, 1, n);
    if (i == j) continue;
    if (i > j) std::swap(i, j);
    d.set(i, j, uniform_int(rng, 1, n), Rational(uniform_int(rng, -2, 2)));
  }
  return d;
}

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Inverse by Gauss-Jordan; empty when singular.
Matrix inverse(Matrix a) {
  const int n = static_cast<int>(a.size());
  Matrix inv(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!is_zero(a[r][col])) {
        piv = r;
        break;
      }
    if (piv < 0) return {};
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Rational s = 1 / a[col][col];
    for (int c = 0; c < n; ++c) {
      a[col][c] *= s;
      inv[col][c] *= s;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || is_zero(a[r][col])) continue;
      const Rational f = a[r][col];
      for (int c = 0; c < n; ++c) {
        a[r][c] -= f * a[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

}  // namespace

Matrix random_invertible(Rng& rng, int n) {
  for (;;) {
    Matrix P(n, std::vector<Rational>(n));
    for (auto& row : P)
      for (auto& x : row) x = uniform_int(rng, 0, 2) ? Rational(uniform_int(rng, -2, 2)) : Rational(0);
    if (!inverse(P).empty()) return P;
  }
}

LieData change_basis(const LieData& d, const Matrix& P) {
  // [y_i, y_j] = sum P_ia P_jb c_ab^m x_m and x_m = sum Q_mk y_k with Q = P^-1.
  const int n = d.n();
  const Matrix Q = inverse(P);
  LieData out(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        Rational v;
        for (int a = 1; a <= n; ++a)
          for (int b = 1; b <= n; ++b) {
            if (is_zero(P[i - 1][a - 1]) || is_zero(P[j - 1][b - 1])) continue;
            for (int m = 1; m <= n; ++m) v += P[i - 1][a - 1] * P[j - 1][b - 1] * d.get(a, b, m) * Q[m - 1][k - 1];
          }
        out.set(i, j, k, v);
      }
  return out;
}

QuadData change_basis(const QuadData& d, const Matrix& P) {
  // alpha'_ij^kl = sum P_ia P_jb alpha_ab^cd Q_ck Q_dl.
  const int n = d.n();
  const Matrix Q = inverse(P);
  QuadData out(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      std::vector<std::vector<Rational>> mid(n + 1, std::vector<Rational>(n + 1));
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
          const Rational s = P[i - 1][a - 1] * P[j - 1][b - 1];
          if (is_zero(s)) continue;
          for (int c = 1; c <= n; ++c)
            for (int e = 1; e <= n; ++e) mid[c][e] += s * d.get(a, b, c, e);
        }
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          Rational v;
          for (int c = 1; c <= n; ++c)
            for (int e = 1; e <= n; ++e) v += mid[c][e] * Q[c - 1][k - 1] * Q[e - 1][l - 1];
          out.set(i, j, k, l, v);
        }
    }
  return out;
}

LieData random_jacobi_lie(Rng& rng, int n) {
  LieData base(n);
  const int shape = uniform_int(rng, 0, n >= 3 ? 3 : 1);
  if (shape == 1 && n >= 2) {
    base.set(1, 2, 1, 1);  // [x1, x2] = x1
  } else if (shape == 2) {
    base.set(1, 2, 3, 1);  // Heisenberg
  } else if (shape == 3) {
    base.set(1, 2, 3, 1);  // sl2 in the basis with [x1,x2]=x3, [x2,x3]=x1, [x3,x1]=x2
    base.set(2, 3, 1, 1);
    base.set(1, 3, 2, -1);
  }
  return change_basis(base, random_invertible(rng, n));
}

QuadData random_quad(Rng& rng, int n, int entries) {
  QuadData d(n);
  for (int t = 0; t < entries; ++t) {
    int i = uniform_int(rng, 1, n), j = uniform_int(rng, 1, n);
    if (i == j) continue;
    if (i > j) std::swap(i, j);
    d.set(i, j, uniform_int(rng, 1, n), uniform_int(rng, 1, n), Rational(uniform_int(rng, -2, 2)));
  }
  return d;
}

QuadData random_good_quad(Rng& rng, int n) {
  QuadData d(n);
  switch (uniform_int(rng, 0, 2)) {
    case 0:  // x_j x_i = (1 - h q_ij) x_i x_j
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) d.set(i, j, i, j, Rational(uniform_int(rng, -2, 2)));
      break;
    case 1:  // x_i x_j - x_j x_i = h q_ij x_j x_i
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) d.set(i, j, j, i, Rational(uniform_int(rng, -2, 2)));
      break;
    default:
      break;
  }
  if (uniform_int(rng, 0, 1)) d = change_basis(d, random_invertible(rng, n));
  return d;
}

Presentation random_presentation(Rng& rng, int n) {
  Presentation p(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      NCPoly<HPoly> phi(n);
      const int terms = uniform_int(rng, 0, 3);
      for (int t = 0; t < terms; ++t) {
        const int len = uniform_int(rng, 0, 2);
        HPoly c = HPoly::monomial(Rational(uniform_int(rng, -2, 2)), uniform_int(rng, 1, 2));
        phi.add_term(random_word(rng, n, len), c);
      }
      p.set_phi(i, j, phi);
    }
  return p;
}

Word brute_least_rotation(const Word& w) {
  Word best = w;
  for (size_t s = 1; s < w.size(); ++s) {
    Word r(w.begin() + s, w.end());
    r.insert(r.end(), w.begin(), w.begin() + s);
    best = std::min(best, r);
  }
  return best;
}

NCPoly<HPoly> all_cuttings(const Potential& phi) {
  NCPoly<HPoly> out(phi.ambient());
  for (const auto& [cw, c] : phi.terms()) {
    const Word& w = cw;  // stored as its least rotation
    for (size_t p = 0; p < w.size(); ++p) {
      Word r(w.begin() + p + 1, w.end());
      r.insert(r.end(), w.begin(), w.begin() + p + 1);
      out.add_term(r, c);
    }
  }
  return out;
}

NCPoly<Rational> quadratic_bracket(const QuadData& d, int i, int j, int k) {
  const int n = d.n();
  NCPoly<Rational> out(n);
  const std::array<std::array<int, 3>, 3> cyc{{{i, j, k}, {j, k, i}, {k, i, j}}};
  for (const auto& [I, J, Kk] : cyc)
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) {
        const Rational ab = d.get(J, Kk, a, b);
        if (is_zero(ab)) continue;
        for (int c = 1; c <= n; ++c)
          for (int e = 1; e <= n; ++e) {
            out.add_term({c, e, b}, ab * d.get(I, a, c, e));
            out.add_term({a, c, e}, ab * d.get(I, b, c, e));
          }
      }
  return out;
}

std::vector<long long> span_oracle_dims(const Presentation& p, const Rational& a, int K, int M) {
  const int n = p.n();
  std::vector<NCPoly<Rational>> rels;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      NCPoly<Rational> r = NCPoly<Rational>::monomial(n, {i, j}, 1) - NCPoly<Rational>::monomial(n, {j, i}, 1);
      r -= specialize(p.phi(i, j), a);
      if (!r.is_zero()) rels.push_back(r);
    }

  std::vector<std::vector<Word>> words(M + 1);
  words[0].push_back({});
  for (int len = 1; len <= M; ++len)
    for (const Word& w : words[len - 1])
      for (int x = 1; x <= n; ++x) {
        Word v = w;
        v.push_back(x);
        words[len].push_back(v);
      }

  // Echelon rows keyed by their largest word, each normalized to lead 1.
  std::map<Word, NCPoly<Rational>, DegLexLess> echelon;
  auto insert = [&](NCPoly<Rational> row) {
    while (!row.is_zero()) {
      const auto& [lead, c] = *row.terms().rbegin();
      auto it = echelon.find(lead);
      if (it == echelon.end()) {
        const Rational inv = 1 / c;
        Word key = lead;
        echelon.emplace(key, row.scaled(inv));
        return;
      }
      row -= it->second.scaled(c);
    }
  };

  for (const auto& r : rels) {
    const int dr = r.deg_x();
    for (int lu = 0; lu + dr <= M; ++lu)
      for (int lv = 0; lu + dr + lv <= M; ++lv)
        for (const Word& u : words[lu])
          for (const Word& v : words[lv])
            insert(NCPoly<Rational>::monomial(n, u, 1) * r * NCPoly<Rational>::monomial(n, v, 1));
  }

  std::vector<long long> dims(K + 1);
  for (int k = 0; k <= K; ++k) dims[k] = static_cast<long long>(words[k].size());
  for (const auto& [lead, row] : echelon)
    if (static_cast<int>(lead.size()) <= K) --dims[lead.size()];
  return dims;
}

std::vector<Word> words_avoiding(int n, int k, const std::vector<std::pair<int, int>>& bigrams) {
  const std::set<std::pair<int, int>> bad(bigrams.begin(), bigrams.end());
  std::vector<Word> cur{{}};
  for (int len = 0; len < k; ++len) {
    std::vector<Word> next;
    for (const Word& w : cur)
      for (int x = 1; x <= n; ++x) {
        if (!w.empty() && bad.count({w.back(), x})) continue;
        Word v = w;
        v.push_back(x);
        next.push_back(v);
      }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace pbw::testing
