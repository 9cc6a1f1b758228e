#include "pbw/freealg.hpp"

#include <algorithm>

namespace pbw {

Word concat(const Word& a, const Word& b) {
  Word out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) out += "*";
    out += "x" + std::to_string(w[k]);
  }
  return out;
}

NCPoly<Rational> hbar_coefficient(const NCPoly<HPoly>& p, int k) {
  NCPoly<Rational> out(p.ambient());
  if (k < 0) return out;
  for (const auto& [w, c] : p.terms()) out.add_term(w, c.coeff(k));
  return out;
}

int hbar_degree(const NCPoly<HPoly>& p) {
  int deg = -1;
  for (const auto& [w, c] : p.terms()) deg = std::max(deg, c.degree());
  return deg;
}

int hbar_valuation(const NCPoly<HPoly>& p) {
  int val = -1;
  for (const auto& [w, c] : p.terms()) {
    int v = c.valuation();
    if (val < 0 || v < val) val = v;
  }
  return val;
}

NCPoly<Rational> specialize(const NCPoly<HPoly>& p, const Rational& a) {
  NCPoly<Rational> out(p.ambient());
  for (const auto& [w, c] : p.terms()) out.add_term(w, c.eval(a));
  return out;
}

NCPoly<HPoly> lift(const NCPoly<Rational>& p) {
  NCPoly<HPoly> out(p.ambient());
  for (const auto& [w, c] : p.terms()) out.add_term(w, HPoly(c));
  return out;
}

NCPoly<HRat> to_fractions(const NCPoly<HPoly>& p) {
  NCPoly<HRat> out(p.ambient());
  for (const auto& [w, c] : p.terms()) out.add_term(w, HRat(c));
  return out;
}

namespace {

bool is_compound(const std::string& coeff) {
  return coeff.find_first_of("+-", 1) != std::string::npos;
}

// Terms are printed highest first so the leading word reads first.
template <class C>
std::string render(const NCPoly<C>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [w, c] = *it;
    std::string coeff = to_string(c);
    std::string term;
    if (w.empty()) {
      term = coeff;
    } else if (coeff == "1") {
      term = word_to_string(w);
    } else if (coeff == "-1") {
      term = "-" + word_to_string(w);
    } else if (is_compound(coeff)) {
      term = "(" + coeff + ")*" + word_to_string(w);
    } else {
      term = coeff + "*" + word_to_string(w);
    }
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

}  // namespace

std::string to_string(const NCPoly<Rational>& p) { return render(p); }
std::string to_string(const NCPoly<HPoly>& p) { return render(p); }
std::string to_string(const NCPoly<HRat>& p) { return render(p); }

}  // namespace pbw
