#include "pbw/certify.hpp"

#include <algorithm>

namespace pbw {

const char* d2_choice_name(D2Choice c) {
  switch (c) {
    case D2Choice::Default: return "default";
    case D2Choice::Lie: return "lie";
    case D2Choice::Quadratic: return "quadratic";
    case D2Choice::Custom: return "custom";
  }
  return "default";
}

D2Choice parse_d2_choice(const std::string& s) {
  if (s == "default") return D2Choice::Default;
  if (s == "lie") return D2Choice::Lie;
  if (s == "quadratic") return D2Choice::Quadratic;
  if (s == "custom") return D2Choice::Custom;
  throw Error(Errc::Parse, "unknown d2 choice '" + s + "'");
}

namespace {

D2Map choose_d2(const Presentation& p, D2Choice choice, const D2Map* custom) {
  switch (choice) {
    case D2Choice::Default:
      return d2_default(p.n());
    case D2Choice::Lie: {
      auto data = lie_data_of(p);
      if (!data) throw Error(Errc::PathMismatch, "lie d2 needs every phi_ij to be h times a linear form");
      return d2_lie(*data);
    }
    case D2Choice::Quadratic: {
      auto data = quad_data_of(p);
      if (!data)
        throw Error(Errc::PathMismatch, "quadratic d2 needs every phi_ij to be h times a quadratic form");
      return d2_quadratic(*data);
    }
    case D2Choice::Custom: {
      if (!custom) throw Error(Errc::PathMismatch, "custom d2 requested without a value map");
      D2Map d2;
      const int n = p.n();
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          for (int k = j + 1; k <= n; ++k) {
            auto it = custom->find({i, j, k});
            if (it == custom->end())
              throw Error(Errc::PathMismatch, "custom d2 has no value on xi" + std::to_string(i) +
                                                  std::to_string(j) + std::to_string(k));
            if (it->second.ambient() != 0 && it->second.ambient() != n)
              throw Error(Errc::AmbientMismatch, "custom d2 value has the wrong ambient");
            if (!it->second.is_zero() && it->second.degree() != -1)
              throw Error(Errc::Inhomogeneous, "custom d2 value must have degree -1");
            d2[{i, j, k}] = it->second;
          }
      return d2;
    }
  }
  return {};
}

bool all_linear(const Presentation& p) {
  for (const auto& [ij, f] : p.stored())
    if (f.deg_x() > 1) return false;
  return true;
}

}  // namespace

CertificateReport certify(const Presentation& p, D2Choice choice, const D2Map* custom) {
  if (!p.is_deformation()) throw Error(Errc::NotDeformation, "some phi_ij has a nonzero h^0 part");
  Differential diff{p.n(), d1_from_presentation(p), choose_d2(p, choice, custom)};

  CertificateReport report;
  report.path = choice;
  report.linear_phi = all_linear(p);
  for (const auto& [t, value] : diff.d2) {
    NCPoly<HPoly> r = to_free(apply_d(diff, value));
    if (!r.is_zero()) report.pass = false;
    report.residues.emplace(t, std::move(r));
  }
  if (!report.pass)
    report.claim = "inconclusive for descending PBW";
  else if (report.linear_phi)
    report.claim = "descending PBW-like property established; PBW at every specialization (linear phi)";
  else
    report.claim =
        "descending PBW-like property established; PBW for all but countably many specializations";
  return report;
}

NCPoly<HPoly> jacobiator(const LieData& d, int i, int j, int k) {
  const int n = d.n();
  for (int t : {i, j, k})
    if (t < 1 || t > n) throw Error(Errc::BadIndex, "index " + std::to_string(t) + " out of range");
  if (i == j || j == k || i == k) throw Error(Errc::BadTriple, "jacobiator needs distinct indices");
  NCPoly<HPoly> out(n);
  for (int b = 1; b <= n; ++b) {
    Rational sum = 0;
    for (int a = 1; a <= n; ++a)
      sum += d.get(i, j, a) * d.get(a, k, b) + d.get(j, k, a) * d.get(a, i, b) +
             d.get(k, i, a) * d.get(a, j, b);
    out.add_term({b}, HPoly::monomial(sum, 2));
  }
  return out;
}

Rational quadratic_condition_value(const QuadData& d, int i, int j, int k, int b, int c, int e) {
  const int n = d.n();
  Rational total = 0;
  const std::array<std::array<int, 3>, 3> shifts{{{i, j, k}, {j, k, i}, {k, i, j}}};
  for (const auto& [r, s, t] : shifts)
    for (int m = 1; m <= n; ++m)
      total += d.get(s, t, m, b) * d.get(r, m, c, e) + d.get(s, t, c, m) * d.get(r, m, e, b);
  return total;
}

Rational poisson_value(const QuadData& d, int i, int j, int k, int a, int b, int c) {
  const int n = d.n();
  auto beta = [&](int p, int q, int u, int v) -> Rational { return d.get(p, q, u, v) + d.get(p, q, v, u); };
  const std::array<int, 3> upper{a, b, c};
  static constexpr std::array<std::array<int, 3>, 6> perms{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  Rational total = 0;
  for (const auto& perm : perms) {
    const int u = upper[perm[0]], v = upper[perm[1]], w = upper[perm[2]];
    for (int s = 1; s <= n; ++s)
      total += beta(i, s, u, v) * beta(j, k, s, w) + beta(j, s, u, v) * beta(k, i, s, w) +
               beta(k, s, u, v) * beta(i, j, s, w);
  }
  return total;
}

namespace {

template <class Fn>
TensorCheck scan6(int n, Fn value) {
  TensorCheck out;
  std::array<int, 6> t{1, 1, 1, 1, 1, 1};
  while (true) {
    Rational v = value(t);
    if (sgn(v) != 0) {
      out.pass = false;
      out.witness.assign(t.begin(), t.end());
      out.value = v;
      return out;
    }
    int pos = 5;
    while (pos >= 0 && t[static_cast<size_t>(pos)] == n) t[static_cast<size_t>(pos--)] = 1;
    if (pos < 0) break;
    ++t[static_cast<size_t>(pos)];
  }
  return out;
}

}  // namespace

TensorCheck check_quadratic_condition(const QuadData& d) {
  return scan6(d.n(), [&](const std::array<int, 6>& t) {
    return quadratic_condition_value(d, t[0], t[1], t[2], t[3], t[4], t[5]);
  });
}

TensorCheck check_poisson(const QuadData& d) {
  return scan6(d.n(), [&](const std::array<int, 6>& t) {
    return poisson_value(d, t[0], t[1], t[2], t[3], t[4], t[5]);
  });
}

ObstructionReport obstruction(const Presentation& p, D2Choice choice, const D2Map* custom) {
  CertificateReport cert = certify(p, choice, custom);
  if (cert.pass) throw Error(Errc::NoObstruction, "the certificate passes; nothing to extract");
  ObstructionReport out;
  out.path = choice;
  out.hbar_order = -1;
  for (const auto& [t, r] : cert.residues) {
    if (r.is_zero()) continue;
    int v = hbar_valuation(r);
    if (out.hbar_order < 0 || v < out.hbar_order) out.hbar_order = v;
  }
  for (const auto& [t, r] : cert.residues) {
    if (r.is_zero()) continue;
    NCPoly<Rational> g = hbar_coefficient(r, out.hbar_order);
    if (!g.is_zero()) out.generators.emplace_back(t, std::move(g));
  }
  return out;
}

}  // namespace pbw
