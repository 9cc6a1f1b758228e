#include "pbw/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "pbw/text_io.hpp"

namespace pbw {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw Error(Errc::Parse, where + ": " + what);
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) bad(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) bad(where, std::string("missing \"") + key + "\"");
  return *it;
}

int as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  const auto v = j.get<long long>();
  if (v < -1000000 || v > 1000000) bad(where, "integer out of range");
  return static_cast<int>(v);
}

const Json& as_array(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array");
  return j;
}

Word word_from_json(const Json& j, const std::string& where) {
  Word w;
  for (size_t t = 0; t < as_array(j, where).size(); ++t)
    w.push_back(as_int(j[t], where + "/" + std::to_string(t)));
  return w;
}

int generator_count(const Json& j, const std::string& where) {
  const int n = as_int(field(j, "n", where), where + "/n");
  if (n < 1) bad(where + "/n", "generator count must be at least 1");
  return n;
}

// Sorts a triple in place; returns the permutation sign, 0 on a repeat.
int sort_triple(Triple& t) {
  int sign = 1;
  for (int pass = 0; pass < 2; ++pass)
    for (size_t a = 0; a + 1 < 3; ++a)
      if (t[a] > t[a + 1]) {
        std::swap(t[a], t[a + 1]);
        sign = -sign;
      }
  if (t[0] == t[1] || t[1] == t[2]) return 0;
  return sign;
}

Json triple_json(const Triple& t) { return Json::array({t[0], t[1], t[2]}); }

}  // namespace

Json parse_json_text(const std::string& text, const std::string& label) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::Parse, label + ": byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Parse, path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path);
}

// ------------------------------------------------------------------ scalars

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  bad("rational", "expected a string \"p/q\" or an integer");
}

Json to_json(const HPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

HPoly hpoly_from_json(const Json& j) {
  if (j.is_string()) return parse_hpoly(j.get<std::string>());
  if (j.is_number_integer()) return HPoly(rational_from_json(j));
  if (!j.is_array()) bad("coeff", "expected a coefficient array or an h-polynomial string");
  std::vector<Rational> coeffs;
  for (const auto& entry : j) {
    if (entry.is_array()) {
      if (entry.size() != 1) bad("coeff", "nested coefficient entries must hold exactly one rational");
      coeffs.push_back(rational_from_json(entry[0]));
    } else {
      coeffs.push_back(rational_from_json(entry));
    }
  }
  return HPoly(std::move(coeffs));
}

// -------------------------------------------------------------- polynomials

Json terms_to_json(const NCPoly<HPoly>& p) {
  Json out = Json::array();
  for (const auto& [w, c] : p.terms()) out.push_back({{"word", w}, {"coeff", to_json(c)}});
  return out;
}

Json terms_to_json(const NCPoly<Rational>& p) {
  Json out = Json::array();
  for (const auto& [w, c] : p.terms()) out.push_back({{"word", w}, {"coeff", to_string(c)}});
  return out;
}

NCPoly<HPoly> terms_from_json(const Json& j, int n) {
  NCPoly<HPoly> out(n);
  as_array(j, "terms");
  for (size_t t = 0; t < j.size(); ++t) {
    const std::string where = "terms/" + std::to_string(t);
    out.add_term(word_from_json(field(j[t], "word", where), where + "/word"),
                 hpoly_from_json(field(j[t], "coeff", where)));
  }
  return out;
}

NCPoly<HPoly> poly_from_json(const Json& j, int n) {
  if (j.is_string()) return parse_ncpoly(j.get<std::string>(), n);
  if (j.is_array()) return terms_from_json(j, n);
  if (j.is_object()) {
    if (j.contains("terms")) return terms_from_json(j["terms"], n);
    if (j.contains("expr")) {
      if (!j["expr"].is_string()) bad("expr", "expected a string");
      return parse_ncpoly(j["expr"].get<std::string>(), n);
    }
  }
  bad("polynomial", "expected a term array, {\"terms\":...}, {\"expr\":...} or an expression string");
}

// ------------------------------------------------------------- presentation

Json to_json(const Presentation& p) {
  Json phi = Json::array();
  for (const auto& [ij, f] : p.stored())
    phi.push_back({{"i", ij.first}, {"j", ij.second}, {"terms", terms_to_json(f)}, {"text", to_string(f)}});
  return {{"n", p.n()}, {"scalar", "hpoly"}, {"phi", phi}};
}

namespace {

Presentation lie_from_json(const Json& j) {
  const int n = generator_count(j, "lie");
  LieData d(n);
  const Json& c = as_array(field(j, "c", "lie"), "lie/c");
  for (size_t t = 0; t < c.size(); ++t) {
    const std::string where = "lie/c/" + std::to_string(t);
    const int i = as_int(field(c[t], "i", where), where + "/i");
    const int jj = as_int(field(c[t], "j", where), where + "/j");
    const int k = as_int(field(c[t], "k", where), where + "/k");
    d.set(i, jj, k, d.get(i, jj, k) + rational_from_json(field(c[t], "value", where)));
  }
  return from_lie(d);
}

Presentation quadratic_from_json(const Json& j) {
  const int n = generator_count(j, "quadratic");
  QuadData d(n);
  const Json& alpha = as_array(field(j, "alpha", "quadratic"), "quadratic/alpha");
  for (size_t t = 0; t < alpha.size(); ++t) {
    const std::string where = "quadratic/alpha/" + std::to_string(t);
    const int i = as_int(field(alpha[t], "i", where), where + "/i");
    const int jj = as_int(field(alpha[t], "j", where), where + "/j");
    const int a = as_int(field(alpha[t], "a", where), where + "/a");
    const int b = as_int(field(alpha[t], "b", where), where + "/b");
    d.set(i, jj, a, b, d.get(i, jj, a, b) + rational_from_json(field(alpha[t], "value", where)));
  }
  return from_quadratic(d);
}

}  // namespace

Presentation presentation_from_json(const Json& j) {
  if (!j.is_object()) bad("presentation", "expected an object");
  if (j.contains("lie")) return lie_from_json(j["lie"]);
  if (j.contains("quadratic")) return quadratic_from_json(j["quadratic"]);
  if (j.contains("potential")) return potential_to_presentation(potential_from_json(j["potential"]));
  const int n = generator_count(j, "presentation");
  if (j.contains("scalar") && j["scalar"] != "hpoly") bad("presentation/scalar", "only \"hpoly\" is supported");
  Presentation p(n);
  if (!j.contains("phi")) return p;
  const Json& phi = as_array(j["phi"], "presentation/phi");
  for (size_t t = 0; t < phi.size(); ++t) {
    const std::string where = "presentation/phi/" + std::to_string(t);
    const int i = as_int(field(phi[t], "i", where), where + "/i");
    const int jj = as_int(field(phi[t], "j", where), where + "/j");
    NCPoly<HPoly> f = phi[t].contains("terms") ? terms_from_json(phi[t]["terms"], n)
                                               : poly_from_json(field(phi[t], "expr", where), n);
    p.set_phi(i, jj, p.phi(i, jj) + f);
  }
  return p;
}

Json to_json(const Potential& phi) {
  Json terms = Json::array();
  for (const auto& [w, c] : phi.terms()) terms.push_back({{"cycle", w}, {"coeff", to_json(c)}});
  return {{"n", phi.ambient()}, {"terms", terms}};
}

Potential potential_from_json(const Json& j) {
  if (j.is_object() && j.contains("potential")) return potential_from_json(j["potential"]);
  const int n = generator_count(j, "potential");
  Potential phi(n);
  const Json& terms = as_array(field(j, "terms", "potential"), "potential/terms");
  for (size_t t = 0; t < terms.size(); ++t) {
    const std::string where = "potential/terms/" + std::to_string(t);
    phi.add(word_from_json(field(terms[t], "cycle", where), where + "/cycle"),
            hpoly_from_json(field(terms[t], "coeff", where)));
  }
  return phi;
}

Json to_json(const LieData& d) {
  Json c = Json::array();
  for (const auto& [key, v] : d.stored())
    c.push_back({{"i", key[0]}, {"j", key[1]}, {"k", key[2]}, {"value", to_string(v)}});
  return {{"lie", {{"n", d.n()}, {"c", c}}}};
}

Json to_json(const QuadData& d) {
  Json alpha = Json::array();
  for (const auto& [key, v] : d.stored())
    alpha.push_back({{"i", key[0]}, {"j", key[1]}, {"a", key[2]}, {"b", key[3]}, {"value", to_string(v)}});
  return {{"quadratic", {{"n", d.n()}, {"alpha", alpha}}}};
}

// ------------------------------------------------------------------- Koszul

D2Map d2_from_json(const Json& j, int n) {
  const Json& entries = j.is_object() ? field(j, "d2", "d2") : j;
  as_array(entries, "d2");
  D2Map out;
  for (size_t t = 0; t < entries.size(); ++t) {
    const std::string where = "d2/" + std::to_string(t);
    const Json& tj = as_array(field(entries[t], "triple", where), where + "/triple");
    if (tj.size() != 3) bad(where + "/triple", "expected three indices");
    Triple triple{as_int(tj[0], where), as_int(tj[1], where), as_int(tj[2], where)};
    for (int idx : triple)
      if (idx < 1 || idx > n) throw Error(Errc::BadIndex, where + "/triple: index outside 1.." + std::to_string(n));
    const int sign = sort_triple(triple);
    if (sign == 0) throw Error(Errc::BadTriple, where + "/triple: repeated index");

    KoszulPoly value(n);
    const Json& terms = as_array(field(entries[t], "value", where), where + "/value");
    for (size_t u = 0; u < terms.size(); ++u) {
      const std::string tw = where + "/value/" + std::to_string(u);
      KoszulPoly mono = KoszulPoly(n);
      mono.add_term({}, hpoly_from_json(field(terms[u], "coeff", tw)));
      const Json& word = as_array(field(terms[u], "word", tw), tw + "/word");
      for (const auto& sym : word) {
        if (sym.contains("x")) {
          mono = mono * KoszulPoly::x(n, as_int(sym["x"], tw));
        } else if (sym.contains("xi2")) {
          const Json& ij = as_array(sym["xi2"], tw + "/xi2");
          if (ij.size() != 2) bad(tw + "/xi2", "expected two indices");
          mono = mono * KoszulPoly::xi2(n, as_int(ij[0], tw), as_int(ij[1], tw));
        } else {
          bad(tw, "symbols are {\"x\":i} or {\"xi2\":[i,j]}");
        }
      }
      value += mono;
    }
    out[triple] += sign > 0 ? value : -value;
  }
  for (auto& [t, v] : out)
    if (v.ambient() == 0) v = KoszulPoly(n);
  return out;
}

Json to_json(const KoszulPoly& p) {
  Json out = Json::array();
  for (const auto& [w, c] : p.terms()) {
    Json word = Json::array();
    for (const auto& s : w) {
      switch (s.kind) {
        case KoszulSymbol::Kind::X: word.push_back({{"x", s.idx[0]}}); break;
        case KoszulSymbol::Kind::Xi2: word.push_back({{"xi2", {s.idx[0], s.idx[1]}}}); break;
        case KoszulSymbol::Kind::Xi3: word.push_back({{"xi3", {s.idx[0], s.idx[1], s.idx[2]}}}); break;
      }
    }
    out.push_back({{"word", word}, {"coeff", to_json(c)}});
  }
  return out;
}

// ------------------------------------------------------------------ reports

Json to_json(const ValidationReport& r) {
  Json pairs = Json::array();
  for (const auto& c : r.pairs)
    pairs.push_back({{"i", c.i}, {"j", c.j}, {"hbar_divisible", c.hbar_divisible}, {"deg_x", c.deg_x}});
  return {{"valid", r.valid},
          {"filtration_ok", r.filtration_ok},
          {"paths", r.paths},
          {"pairs", pairs},
          {"failures", r.failures}};
}

Json to_json(const CertificateReport& r) {
  Json residues = Json::array();
  for (const auto& [t, f] : r.residues)
    residues.push_back({{"triple", triple_json(t)}, {"zero", f.is_zero()}, {"terms", terms_to_json(f)},
                        {"text", to_string(f)}});
  return {{"verdict", r.pass ? "Pass" : "Fail"},
          {"path", d2_choice_name(r.path)},
          {"linear_phi", r.linear_phi},
          {"claim", r.claim},
          {"residues", residues}};
}

Json to_json(const ObstructionReport& r) {
  Json gens = Json::array();
  for (const auto& [t, g] : r.generators)
    gens.push_back({{"triple", triple_json(t)}, {"terms", terms_to_json(g)}, {"text", to_string(g)}});
  return {{"path", d2_choice_name(r.path)}, {"hbar_order", r.hbar_order}, {"generators", gens}};
}

namespace {

Json field_json(const FieldChoice& f) {
  switch (f.kind) {
    case FieldChoice::Kind::At: return {{"mode", "at"}, {"a", to_string(f.a)}};
    case FieldChoice::Kind::Generic: return {{"mode", "generic"}};
    case FieldChoice::Kind::Ring: return {{"mode", "ring"}};
  }
  return {};
}

}  // namespace

Json to_json(const HilbertReport& r) {
  Json degrees = Json::array();
  for (size_t k = 0; k < r.dims.size(); ++k)
    degrees.push_back({{"k", k},
                       {"dim", r.dims[k]},
                       {"expected", r.expected[k]},
                       {"verdict", verdict_name(r.verdicts[k])},
                       {"excess", r.excess[k]}});
  Json out = {{"verdict", verdict_name(r.overall())},
              {"field", field_json(r.field)},
              {"max_degree", r.max_degree},
              {"degree_bound", r.degree_bound},
              {"complete_through", r.complete_through},
              {"confluent", r.confluent},
              {"rule_count", r.rule_count},
              {"first_defect", r.first_defect()},
              {"dims", r.dims},
              {"expected", r.expected},
              {"degrees", degrees}};
  if (r.field.kind == FieldChoice::Kind::Generic) {
    Json ex = Json::array();
    for (const auto& a : r.excluded) ex.push_back(to_string(a));
    out["excluded_specializations"] = ex;
  }
  return out;
}

Json to_json(const MemberReport& r) {
  return {{"verdict", r.member ? "Yes" : "No"},
          {"field", field_json(r.field)},
          {"degree_bound", r.degree_bound},
          {"complete_through", r.complete_through},
          {"normal_form", r.normal_form}};
}

Json to_json(const TorsionReport& r) {
  return {{"verdict", r.witness ? "Witness" : "Refuted"},
          {"field", {{"mode", "ring"}}},
          {"element", terms_to_json(r.element)},
          {"element_text", to_string(r.element)},
          {"factor", to_json(r.factor)},
          {"factor_text", to_string(r.factor)},
          {"product_in_ideal", r.product_member},
          {"element_in_ideal", r.element_member},
          {"element_normal_form", to_string(r.element_normal_form)},
          {"product_normal_form", to_string(r.product_normal_form)},
          {"degree_bound", r.degree_bound},
          {"complete_through", r.complete_through}};
}

std::string to_text(const ValidationReport& r) {
  std::ostringstream out;
  out << "valid: " << (r.valid ? "yes" : "no") << "\n";
  out << "filtration ok: " << (r.filtration_ok ? "yes" : "no") << "\n";
  out << "paths:";
  for (const auto& p : r.paths) out << " " << p;
  out << "\n";
  for (const auto& f : r.failures) out << "  " << f << "\n";
  return out.str();
}

std::string to_text(const CertificateReport& r) {
  std::ostringstream out;
  out << "certificate (" << d2_choice_name(r.path) << "): " << (r.pass ? "Pass" : "Fail") << "\n";
  out << r.claim << "\n";
  for (const auto& [t, f] : r.residues)
    if (!f.is_zero()) out << "  residue xi" << t[0] << t[1] << t[2] << ": " << to_string(f) << "\n";
  return out.str();
}

std::string to_text(const ObstructionReport& r) {
  std::ostringstream out;
  out << "obstruction at h^" << r.hbar_order << " (" << d2_choice_name(r.path) << ")\n";
  for (const auto& [t, g] : r.generators) out << "  xi" << t[0] << t[1] << t[2] << ": " << to_string(g) << "\n";
  return out.str();
}

std::string to_text(const HilbertReport& r) {
  std::ostringstream out;
  out << "field " << r.field.label() << ", completed to degree " << r.degree_bound << ", certified through "
      << r.complete_through << ", " << r.rule_count << " rules\n";
  out << std::setw(3) << "k" << std::setw(12) << "dim" << std::setw(12) << "expected" << "  verdict\n";
  for (size_t k = 0; k < r.dims.size(); ++k) {
    out << std::setw(3) << k << std::setw(12) << r.dims[k] << std::setw(12) << r.expected[k] << "  "
        << verdict_name(r.verdicts[k]);
    if (r.verdicts[k] == DegreeVerdict::Defect) out << " (" << (r.excess[k] > 0 ? "+" : "") << r.excess[k] << ")";
    out << "\n";
  }
  out << "verdict: " << verdict_name(r.overall()) << "\n";
  if (r.field.kind == FieldChoice::Kind::Generic && !r.excluded.empty()) {
    out << "excluded specializations observed:";
    for (const auto& a : r.excluded) out << " " << to_string(a);
    out << "\n";
  }
  return out.str();
}

std::string to_text(const MemberReport& r) {
  std::ostringstream out;
  out << "member (" << r.field.label() << ", certified through degree " << r.complete_through
      << "): " << (r.member ? "Yes" : "No") << "\n";
  out << "normal form: " << r.normal_form << "\n";
  return out.str();
}

std::string to_text(const TorsionReport& r) {
  std::ostringstream out;
  out << "torsion over Q[h] through degree " << r.complete_through << ": " << (r.witness ? "Witness" : "Refuted")
      << "\n";
  out << "  T = " << to_string(r.element) << "\n";
  out << "  factor = " << to_string(r.factor) << "\n";
  out << "  factor*T in ideal: " << (r.product_member ? "yes" : "no") << " (normal form "
      << to_string(r.product_normal_form) << ")\n";
  out << "  T in ideal: " << (r.element_member ? "yes" : "no") << " (normal form "
      << to_string(r.element_normal_form) << ")\n";
  return out.str();
}

}  // namespace pbw
