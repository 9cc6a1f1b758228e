#include "pbw/cyclic.hpp"

#include <algorithm>

namespace pbw {

Word least_rotation(const Word& w) {
  const size_t len = w.size();
  if (len == 0) return w;
  // Booth: failure function over the doubled word.
  std::vector<long> fail(2 * len, -1);
  size_t k = 0;
  auto at = [&](size_t idx) { return w[idx % len]; };
  for (size_t j = 1; j < 2 * len; ++j) {
    long i = fail[j - k - 1];
    while (i != -1 && at(j) != at(k + static_cast<size_t>(i) + 1)) {
      if (at(j) < at(k + static_cast<size_t>(i) + 1)) k = j - static_cast<size_t>(i) - 1;
      i = fail[static_cast<size_t>(i)];
    }
    if (i == -1 && at(j) != at(k)) {
      if (at(j) < at(k)) k = j;
      fail[j - k] = -1;
    } else {
      fail[j - k] = i + 1;
    }
  }
  return rotate(w, k);
}

Word rotate(const Word& w, size_t shift) {
  if (w.empty()) return w;
  Word out(w.size());
  for (size_t t = 0; t < w.size(); ++t) out[t] = w[(t + shift) % w.size()];
  return out;
}

CyclicWord::CyclicWord(const Word& w, int n) : n_(n) {
  if (w.empty()) throw Error(Errc::EmptyCycle, "cyclic word must be nonempty");
  for (int letter : w)
    if (letter < 1 || letter > n)
      throw Error(Errc::BadIndex, "letter x" + std::to_string(letter) + " outside 1.." + std::to_string(n));
  rep_ = least_rotation(w);
}

void Potential::add(const Word& w, const HPoly& c) {
  CyclicWord cw(w, n_);
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(cw.representative(), c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCPoly<HPoly> cyclic_derivative(const Potential& phi, int i) {
  const int n = phi.ambient();
  if (i < 1 || i > n)
    throw Error(Errc::BadIndex, "derivative index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  NCPoly<HPoly> out(n);
  for (const auto& [rep, c] : phi.terms()) {
    const size_t len = rep.size();
    for (size_t pos = 0; pos < len; ++pos) {
      if (rep[pos] != i) continue;
      Word cut;
      cut.reserve(len - 1);
      for (size_t t = 1; t < len; ++t) cut.push_back(rep[(pos + t) % len]);
      out.add_term(cut, c);
    }
  }
  return out;
}

Presentation potential_to_presentation(const Potential& phi) {
  if (phi.ambient() != 3)
    throw Error(Errc::UnsupportedArity, "potentials are supported for exactly 3 generators");
  for (const auto& [rep, c] : phi.terms())
    if (!is_zero(c.coeff(0)))
      throw Error(Errc::NotDeformation, "coefficient of Cycl(" + word_to_string(rep) +
                                            ") is not divisible by h");
  Presentation p(3);
  p.set_phi(1, 2, cyclic_derivative(phi, 3));
  p.set_phi(2, 3, cyclic_derivative(phi, 1));
  p.set_phi(3, 1, cyclic_derivative(phi, 2));
  return p;
}

std::optional<Potential> potential_of(const Presentation& p) {
  if (p.n() != 3) return std::nullopt;
  // Each cut word w of d/dx_k closes up to the necklace w x_k; a necklace of
  // length d is produced once per letter, hence the 1/d weight.
  const std::array<std::pair<int, NCPoly<HPoly>>, 3> derivs{{
      {1, p.phi(2, 3)},
      {2, p.phi(3, 1)},
      {3, p.phi(1, 2)},
  }};
  Potential phi(3);
  for (const auto& [k, f] : derivs) {
    for (const auto& [w, c] : f.terms()) {
      Word closed = w;
      closed.push_back(k);
      phi.add(closed, c * HPoly(Rational(1, static_cast<unsigned long>(closed.size()))));
    }
  }
  for (const auto& [k, f] : derivs)
    if (!(cyclic_derivative(phi, k) == f)) return std::nullopt;
  return phi;
}

}  // namespace pbw
