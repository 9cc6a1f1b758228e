#include "pbw/koszul.hpp"

#include <algorithm>

namespace pbw {

std::string symbol_to_string(const KoszulSymbol& s) {
  switch (s.kind) {
    case KoszulSymbol::Kind::X:
      return "x" + std::to_string(s.idx[0]);
    case KoszulSymbol::Kind::Xi2:
      return "xi" + std::to_string(s.idx[0]) + std::to_string(s.idx[1]);
    case KoszulSymbol::Kind::Xi3:
      return "xi" + std::to_string(s.idx[0]) + std::to_string(s.idx[1]) + std::to_string(s.idx[2]);
  }
  return "?";
}

namespace {

void check_range(int n, std::initializer_list<int> indices) {
  for (int i : indices)
    if (i < 1 || i > n)
      throw Error(Errc::BadIndex, "index " + std::to_string(i) + " outside 1.." + std::to_string(n));
}

KoszulPoly monomial(int n, KoszulWord w, const HPoly& c) {
  KoszulPoly p(n);
  p.add_term(w, c);
  return p;
}

}  // namespace

KoszulPoly KoszulPoly::x(int n, int i) {
  check_range(n, {i});
  return monomial(n, {KoszulSymbol::x(i)}, HPoly(1));
}

KoszulPoly KoszulPoly::xi2(int n, int i, int j) {
  check_range(n, {i, j});
  if (i == j) return KoszulPoly(n);
  KoszulSymbol s{KoszulSymbol::Kind::Xi2, {std::min(i, j), std::max(i, j), 0}};
  return monomial(n, {s}, HPoly(i < j ? 1 : -1));
}

KoszulPoly KoszulPoly::xi3(int n, int i, int j, int k) {
  check_range(n, {i, j, k});
  if (i == j || j == k || i == k) return KoszulPoly(n);
  std::array<int, 3> v{i, j, k};
  int sign = 1;
  // Bubble sort on three entries; each swap flips the sign.
  for (int pass = 0; pass < 2; ++pass)
    for (int t = 0; t + 1 < 3; ++t)
      if (v[t] > v[t + 1]) {
        std::swap(v[t], v[t + 1]);
        sign = -sign;
      }
  KoszulSymbol s{KoszulSymbol::Kind::Xi3, v};
  return monomial(n, {s}, HPoly(sign));
}

void KoszulPoly::add_term(const KoszulWord& w, const HPoly& c) {
  for (const auto& s : w)
    for (int t = 0; t <= static_cast<int>(s.kind); ++t) check_range(n_, {s.idx[static_cast<size_t>(t)]});
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int KoszulPoly::degree() const {
  if (terms_.empty()) throw Error(Errc::Undefined, "degree of the zero Koszul polynomial");
  std::optional<int> deg;
  for (const auto& [w, c] : terms_) {
    int d = 0;
    for (const auto& s : w) d += s.degree();
    if (deg && *deg != d) throw Error(Errc::Inhomogeneous, "terms of degree " + std::to_string(*deg) +
                                                               " and " + std::to_string(d));
    deg = d;
  }
  return *deg;
}

KoszulPoly KoszulPoly::scaled(const HPoly& c) const {
  KoszulPoly out(n_);
  for (const auto& [w, a] : terms_) out.add_term(w, a * c);
  return out;
}

void KoszulPoly::adopt(const KoszulPoly& o) {
  if (o.n_ == 0 || n_ == o.n_) return;
  if (n_ == 0) {
    n_ = o.n_;
    return;
  }
  throw Error(Errc::AmbientMismatch, "ambient " + std::to_string(n_) + " vs " + std::to_string(o.n_));
}

KoszulPoly& KoszulPoly::operator+=(const KoszulPoly& o) {
  adopt(o);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

KoszulPoly& KoszulPoly::operator-=(const KoszulPoly& o) {
  adopt(o);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

KoszulPoly operator*(const KoszulPoly& a, const KoszulPoly& b) {
  KoszulPoly out(a.n_);
  out.adopt(b);
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      KoszulWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  return out;
}

std::string to_string(const KoszulPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : p.terms()) {
    std::string word;
    for (size_t t = 0; t < w.size(); ++t) word += (t ? "*" : "") + symbol_to_string(w[t]);
    if (word.empty()) word = "1";
    std::string coeff = to_string(c);
    std::string term;
    if (coeff == "1")
      term = word;
    else if (coeff == "-1")
      term = "-" + word;
    else if (coeff.find_first_of("+-", 1) != std::string::npos)
      term = "(" + coeff + ")*" + word;
    else
      term = coeff + "*" + word;
    if (out.empty())
      out = term;
    else if (term.front() == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out;
}

KoszulPoly from_free(const NCPoly<HPoly>& p) {
  KoszulPoly out(p.ambient());
  for (const auto& [w, c] : p.terms()) {
    KoszulWord kw;
    kw.reserve(w.size());
    for (int letter : w) kw.push_back(KoszulSymbol::x(letter));
    out.add_term(kw, c);
  }
  return out;
}

NCPoly<HPoly> to_free(const KoszulPoly& p) {
  NCPoly<HPoly> out(p.ambient());
  for (const auto& [w, c] : p.terms()) {
    Word word;
    for (const auto& s : w) {
      if (s.kind != KoszulSymbol::Kind::X)
        throw Error(Errc::Inhomogeneous, "symbol " + symbol_to_string(s) + " has nonzero degree");
      word.push_back(s.idx[0]);
    }
    out.add_term(word, c);
  }
  return out;
}

D1Map d1_from_presentation(const Presentation& p) {
  const int n = p.n();
  D1Map d1;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      auto xi = NCPoly<HPoly>::generator(n, i);
      auto xj = NCPoly<HPoly>::generator(n, j);
      d1[{i, j}] = commutator(xi, xj) - p.phi(i, j);
    }
  return d1;
}

namespace {

KoszulPoly bracket(const KoszulPoly& a, const KoszulPoly& b) { return a * b - b * a; }

std::array<Triple, 3> cyclic_shifts(int i, int j, int k) {
  return {Triple{i, j, k}, Triple{j, k, i}, Triple{k, i, j}};
}

}  // namespace

KoszulPoly d2_default_value(int n, int i, int j, int k) {
  KoszulPoly out(n);
  for (const auto& [a, b, c] : cyclic_shifts(i, j, k))
    out += bracket(KoszulPoly::x(n, a), KoszulPoly::xi2(n, b, c));
  return out;
}

KoszulPoly d2_lie_value(const LieData& data, int i, int j, int k) {
  const int n = data.n();
  KoszulPoly out = d2_default_value(n, i, j, k);
  KoszulPoly correction(n);
  for (const auto& [a, b, c] : cyclic_shifts(i, j, k))
    for (int p = 1; p <= n; ++p) {
      Rational coeff = data.get(a, b, p);
      if (sgn(coeff) != 0) correction += KoszulPoly::xi2(n, p, c).scaled(HPoly(coeff));
    }
  return out - correction.scaled(HPoly::hbar());
}

KoszulPoly d2_quadratic_value(const QuadData& data, int i, int j, int k) {
  const int n = data.n();
  KoszulPoly out = d2_default_value(n, i, j, k);
  KoszulPoly correction(n);
  for (const auto& [r, s, t] : cyclic_shifts(i, j, k))
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) {
        Rational alpha = data.get(s, t, a, b);
        if (sgn(alpha) == 0) continue;
        KoszulPoly term = KoszulPoly::xi2(n, r, a) * KoszulPoly::x(n, b) +
                          KoszulPoly::x(n, a) * KoszulPoly::xi2(n, r, b);
        correction += term.scaled(HPoly(alpha));
      }
  return out + correction.scaled(HPoly::hbar());
}

namespace {

template <class ValueFn>
D2Map build_d2(int n, ValueFn value) {
  D2Map d2;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) d2[{i, j, k}] = value(i, j, k);
  return d2;
}

}  // namespace

D2Map d2_default(int n) {
  return build_d2(n, [n](int i, int j, int k) { return d2_default_value(n, i, j, k); });
}

D2Map d2_lie(const LieData& data) {
  return build_d2(data.n(), [&](int i, int j, int k) { return d2_lie_value(data, i, j, k); });
}

D2Map d2_quadratic(const QuadData& data) {
  return build_d2(data.n(), [&](int i, int j, int k) { return d2_quadratic_value(data, i, j, k); });
}

KoszulPoly apply_d(const Differential& diff, const KoszulPoly& p) {
  KoszulPoly out(p.ambient() ? p.ambient() : diff.n);
  if (p.is_zero()) return out;
  p.degree();  // homogeneity check
  const int n = out.ambient();
  for (const auto& [w, c] : p.terms()) {
    int odd_before = 0;
    for (size_t pos = 0; pos < w.size(); ++pos) {
      const KoszulSymbol& s = w[pos];
      if (s.kind == KoszulSymbol::Kind::X) continue;
      KoszulPoly image(n);
      if (s.kind == KoszulSymbol::Kind::Xi2) {
        auto it = diff.d1.find({s.idx[0], s.idx[1]});
        if (it == diff.d1.end()) throw Error(Errc::Undefined, "d1 has no value on " + symbol_to_string(s));
        image = from_free(it->second);
      } else {
        auto it = diff.d2.find(s.idx);
        if (it == diff.d2.end()) throw Error(Errc::Undefined, "d2 has no value on " + symbol_to_string(s));
        image = it->second;
      }
      KoszulWord prefix(w.begin(), w.begin() + static_cast<long>(pos));
      KoszulWord suffix(w.begin() + static_cast<long>(pos) + 1, w.end());
      HPoly coeff = odd_before % 2 ? -c : c;
      out += monomial(n, prefix, coeff) * image * monomial(n, suffix, HPoly(1));
      if (s.odd()) ++odd_before;
    }
  }
  return out;
}

}  // namespace pbw
