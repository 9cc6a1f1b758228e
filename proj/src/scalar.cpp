#include "pbw/scalar.hpp"

#include <algorithm>
#include <cctype>

#include "pbw/error.hpp"

namespace pbw {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }),
          s.end());
  if (s.empty()) throw Error(Errc::Parse, "empty rational");
  if (s.front() == '+') s.erase(s.begin());
  auto slash = s.find('/');
  auto is_int = [](std::string_view part) {
    if (part.empty()) return false;
    size_t start = part.front() == '-' ? 1 : 0;
    if (start == part.size()) return false;
    return std::all_of(part.begin() + start, part.end(),
                       [](unsigned char ch) { return std::isdigit(ch); });
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den.front() == '-')
    throw Error(Errc::Parse, "malformed rational '" + std::string(text) + "'");
  mpz_class d(den);
  if (d == 0) throw Error(Errc::DivisionByZero, "rational with zero denominator");
  Rational q(mpz_class(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------- HPoly

HPoly::HPoly(const Rational& c) {
  if (sgn(c) != 0) coeffs_.push_back(c);
}

HPoly::HPoly(int c) : HPoly(Rational(c)) {}

HPoly::HPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

HPoly HPoly::hbar(int power) { return monomial(1, power); }

HPoly HPoly::monomial(const Rational& c, int power) {
  HPoly p;
  if (sgn(c) == 0) return p;
  p.coeffs_.assign(static_cast<size_t>(power) + 1, Rational(0));
  p.coeffs_.back() = c;
  return p;
}

void HPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

int HPoly::valuation() const {
  for (size_t k = 0; k < coeffs_.size(); ++k)
    if (sgn(coeffs_[k]) != 0) return static_cast<int>(k);
  return -1;
}

Rational HPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<size_t>(k)];
}

Rational HPoly::eval(const Rational& a) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * a + *it;
  return acc;
}

HPoly HPoly::monic() const {
  if (is_zero()) return *this;
  HPoly out = *this;
  Rational lc = leading();
  for (auto& c : out.coeffs_) c /= lc;
  return out;
}

HPoly& HPoly::operator+=(const HPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

HPoly& HPoly::operator-=(const HPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

HPoly operator*(const HPoly& a, const HPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return HPoly(std::move(out));
}

HPoly& HPoly::operator*=(const HPoly& o) { return *this = *this * o; }

HPoly operator-(HPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

std::pair<HPoly, HPoly> HPoly::divmod(const HPoly& a, const HPoly& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {HPoly{}, a};
  std::vector<Rational> rem = a.coeffs_;
  std::vector<Rational> quot(a.coeffs_.size() - b.coeffs_.size() + 1, Rational(0));
  const Rational& lc = b.leading();
  const size_t db = b.coeffs_.size() - 1;
  for (size_t k = rem.size(); k-- > db;) {
    if (sgn(rem[k]) == 0) continue;
    Rational q = rem[k] / lc;
    quot[k - db] = q;
    for (size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * b.coeffs_[j];
  }
  return {HPoly(std::move(quot)), HPoly(std::move(rem))};
}

HPoly gcd(HPoly a, HPoly b) {
  while (!b.is_zero()) {
    HPoly r = HPoly::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

// Renders c*h^k without a leading '+'.
std::string monomial_text(const Rational& c, int k) {
  if (k == 0) return to_string(c);
  std::string var = k == 1 ? "h" : "h^" + std::to_string(k);
  if (c == 1) return var;
  if (c == -1) return "-" + var;
  return to_string(c) + "*" + var;
}

}  // namespace

std::string to_string(const HPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& cs = p.coeffs();
  for (size_t k = 0; k < cs.size(); ++k) {
    if (sgn(cs[k]) == 0) continue;
    std::string term = monomial_text(cs[k], static_cast<int>(k));
    if (!out.empty() && term.front() != '-') out += "+";
    out += term;
  }
  return out;
}

// ---------------------------------------------------------------- HRat

HRat::HRat(HPoly num, HPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

void HRat::normalize() {
  if (den_.is_zero()) throw Error(Errc::DivisionByZero, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = HPoly(1);
    return;
  }
  HPoly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = HPoly::divmod(num_, g).first;
    den_ = HPoly::divmod(den_, g).first;
  }
  Rational lc = den_.leading();
  if (lc != 1) {
    HPoly scale(Rational(1) / lc);
    num_ *= scale;
    den_ *= scale;
  }
}

HRat HRat::inv() const {
  if (num_.is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  return HRat(den_, num_);
}

Rational HRat::eval(const Rational& a) const {
  Rational d = den_.eval(a);
  if (sgn(d) == 0)
    throw Error(Errc::DivisionByZero, "denominator " + to_string(den_) + " vanishes at " + to_string(a));
  return num_.eval(a) / d;
}

HRat& HRat::operator+=(const HRat& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

HRat& HRat::operator-=(const HRat& o) { return *this += -o; }

HRat& HRat::operator*=(const HRat& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

HRat& HRat::operator/=(const HRat& o) { return *this *= o.inv(); }

HRat operator-(HRat a) {
  a.num_ = -a.num_;
  return a;
}

std::string to_string(const HRat& r) {
  if (r.is_polynomial()) return to_string(r.num());
  auto wrap = [](const HPoly& p) {
    std::string s = to_string(p);
    bool compound = s.find_first_of("+-*", 1) != std::string::npos;
    return compound ? "(" + s + ")" : s;
  };
  return wrap(r.num()) + "/" + wrap(r.den());
}

// ---------------------------------------------------------------- roots

namespace {

std::vector<mpz_class> positive_divisors(const mpz_class& value) {
  mpz_class v = abs(value);
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      small.push_back(d);
      if (d * d != v) large.push_back(v / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Rational> rational_roots(const HPoly& p) {
  std::vector<Rational> roots;
  if (p.degree() <= 0) return roots;
  // Strip the zero root, then clear denominators.
  int val = p.valuation();
  if (val > 0) roots.push_back(0);
  std::vector<Rational> cs(p.coeffs().begin() + val, p.coeffs().end());
  if (cs.size() < 2) return roots;
  mpz_class lcm = 1;
  for (const auto& c : cs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  mpz_class a0 = cs.front().get_num() * (lcm / cs.front().get_den());
  mpz_class an = cs.back().get_num() * (lcm / cs.back().get_den());
  // Divisor enumeration is only attempted for desk-scale coefficients.
  const mpz_class limit("1000000000000");
  if (abs(a0) > limit || abs(an) > limit) return roots;
  HPoly reduced{std::vector<Rational>(cs)};
  for (const auto& num : positive_divisors(a0)) {
    for (const auto& den : positive_divisors(an)) {
      for (int sign : {1, -1}) {
        Rational cand(num * sign, den);
        cand.canonicalize();
        if (sgn(reduced.eval(cand)) == 0 &&
            std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace pbw
