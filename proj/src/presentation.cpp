#include "pbw/presentation.hpp"

#include "pbw/cyclic.hpp"

namespace pbw {

namespace {

void check_range(int n, std::initializer_list<int> indices) {
  for (int i : indices)
    if (i < 1 || i > n)
      throw Error(Errc::BadIndex, "index " + std::to_string(i) + " outside 1.." + std::to_string(n));
}

}  // namespace

Rational LieData::get(int i, int j, int k) const {
  check_range(n_, {i, j, k});
  if (i == j) return 0;
  int sign = i < j ? 1 : -1;
  auto it = c_.find(i < j ? Triple{i, j, k} : Triple{j, i, k});
  return it == c_.end() ? Rational(0) : Rational(sign * it->second);
}

void LieData::set(int i, int j, int k, const Rational& value) {
  check_range(n_, {i, j, k});
  if (i == j) throw Error(Errc::BadIndex, "c_ii^k is identically zero");
  Triple key = i < j ? Triple{i, j, k} : Triple{j, i, k};
  Rational v = i < j ? value : Rational(-value);
  if (sgn(v) == 0)
    c_.erase(key);
  else
    c_[key] = v;
}

Rational QuadData::get(int i, int j, int a, int b) const {
  check_range(n_, {i, j, a, b});
  if (i == j) return 0;
  int sign = i < j ? 1 : -1;
  auto it = alpha_.find(i < j ? Key{i, j, a, b} : Key{j, i, a, b});
  return it == alpha_.end() ? Rational(0) : Rational(sign * it->second);
}

void QuadData::set(int i, int j, int a, int b, const Rational& value) {
  check_range(n_, {i, j, a, b});
  if (i == j) throw Error(Errc::BadIndex, "alpha_ii^ab is identically zero");
  Key key = i < j ? Key{i, j, a, b} : Key{j, i, a, b};
  Rational v = i < j ? value : Rational(-value);
  if (sgn(v) == 0)
    alpha_.erase(key);
  else
    alpha_[key] = v;
}

// ---------------------------------------------------------------- Presentation

Presentation::Presentation(int n) : n_(n) {
  if (n < 1) throw Error(Errc::BadIndex, "generator count must be at least 1");
}

void Presentation::check_index(int i) const { check_range(n_, {i}); }

void Presentation::set_phi(int i, int j, const NCPoly<HPoly>& phi) {
  check_index(i);
  check_index(j);
  if (i == j) throw Error(Errc::BadIndex, "phi_ii is identically zero");
  if (phi.ambient() != 0 && phi.ambient() != n_)
    throw Error(Errc::AmbientMismatch, "phi has ambient " + std::to_string(phi.ambient()));
  auto key = i < j ? std::pair{i, j} : std::pair{j, i};
  NCPoly<HPoly> value(n_);
  value += i < j ? phi : -phi;
  if (value.is_zero())
    phi_.erase(key);
  else
    phi_[key] = value;
}

NCPoly<HPoly> Presentation::phi(int i, int j) const {
  check_index(i);
  check_index(j);
  if (i == j) return NCPoly<HPoly>(n_);
  auto it = phi_.find(i < j ? std::pair{i, j} : std::pair{j, i});
  if (it == phi_.end()) return NCPoly<HPoly>(n_);
  return i < j ? it->second : -it->second;
}

bool Presentation::filtration_ok() const {
  for (const auto& [key, f] : phi_)
    if (f.deg_x() > 2) return false;
  return true;
}

bool Presentation::is_deformation() const {
  for (const auto& [key, f] : phi_)
    for (const auto& [w, c] : f.terms())
      if (!is_zero(c.coeff(0))) return false;
  return true;
}

Presentation from_lie(const LieData& data) {
  Presentation p(data.n());
  std::map<std::pair<int, int>, NCPoly<HPoly>> acc;
  for (const auto& [key, c] : data.stored()) {
    auto& f = acc.try_emplace({key[0], key[1]}, data.n()).first->second;
    f.add_term({key[2]}, HPoly::monomial(c, 1));
  }
  for (const auto& [ij, f] : acc) p.set_phi(ij.first, ij.second, f);
  return p;
}

Presentation from_quadratic(const QuadData& data) {
  Presentation p(data.n());
  std::map<std::pair<int, int>, NCPoly<HPoly>> acc;
  for (const auto& [key, alpha] : data.stored()) {
    auto& f = acc.try_emplace({key[0], key[1]}, data.n()).first->second;
    f.add_term({key[2], key[3]}, HPoly::monomial(alpha, 1));
  }
  for (const auto& [ij, f] : acc) p.set_phi(ij.first, ij.second, f);
  return p;
}

namespace {

// phi = h * (form of fixed x-degree), with all coefficients exactly c*h.
bool is_hbar_form(const NCPoly<HPoly>& f, size_t degree) {
  for (const auto& [w, c] : f.terms()) {
    if (w.size() != degree) return false;
    if (c.degree() != 1 || !is_zero(c.coeff(0))) return false;
  }
  return true;
}

}  // namespace

std::optional<LieData> lie_data_of(const Presentation& p) {
  LieData data(p.n());
  for (const auto& [ij, f] : p.stored()) {
    if (!is_hbar_form(f, 1)) return std::nullopt;
    for (const auto& [w, c] : f.terms()) data.set(ij.first, ij.second, w[0], c.coeff(1));
  }
  return data;
}

std::optional<QuadData> quad_data_of(const Presentation& p) {
  QuadData data(p.n());
  for (const auto& [ij, f] : p.stored()) {
    if (!is_hbar_form(f, 2)) return std::nullopt;
    for (const auto& [w, c] : f.terms()) data.set(ij.first, ij.second, w[0], w[1], c.coeff(1));
  }
  return data;
}

ValidationReport validate(const Presentation& p) {
  ValidationReport report;
  const int n = p.n();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      PairCheck check{i, j, true, -1};
      NCPoly<HPoly> f = p.phi(i, j);
      if (!f.is_zero()) {
        check.deg_x = f.deg_x();
        for (const auto& [w, c] : f.terms())
          if (!is_zero(c.coeff(0))) check.hbar_divisible = false;
      }
      if (!check.hbar_divisible) {
        report.valid = false;
        report.failures.push_back("NotDeformation: phi(" + std::to_string(i) + "," +
                                  std::to_string(j) + ") has a nonzero h^0 part");
      }
      if (check.deg_x > 2) {
        report.filtration_ok = false;
        report.failures.push_back("FiltrationUnbounded: deg_x phi(" + std::to_string(i) + "," +
                                  std::to_string(j) + ") = " + std::to_string(check.deg_x));
      }
      report.pairs.push_back(check);
    }
  }
  if (lie_data_of(p)) report.paths.emplace_back("lie");
  if (quad_data_of(p)) report.paths.emplace_back("quadratic");
  if (n == 3 && potential_of(p)) report.paths.emplace_back("potential");
  if (report.paths.empty()) report.paths.emplace_back("generic");
  return report;
}

}  // namespace pbw
