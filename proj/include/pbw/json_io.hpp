#pragma once

// JSON documents for presentations, potentials, custom d2 maps, polynomials
// and every report. Parsing failures surface as Error(Parse) with the byte
// offset or the JSON pointer of the bad field.

#include <json.hpp>
#include <string>

#include "pbw/certify.hpp"
#include "pbw/cyclic.hpp"
#include "pbw/koszul.hpp"
#include "pbw/presentation.hpp"
#include "pbw/rewrite.hpp"

namespace pbw {

using Json = nlohmann::ordered_json;

/// Parses text; the label (usually a path) prefixes error messages.
Json parse_json_text(const std::string& text, const std::string& label);
Json read_json_file(const std::string& path);

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// Coefficient list lowest power first, e.g. ["0","1"] for h.
Json to_json(const HPoly& p);
/// Accepts ["0","1"], [["0"],["1"]], numbers, or a string such as "1-h".
HPoly hpoly_from_json(const Json& j);

/// [{"word":[1,2],"coeff":["0","1"]}, ...] in deglex order.
Json terms_to_json(const NCPoly<HPoly>& p);
Json terms_to_json(const NCPoly<Rational>& p);
NCPoly<HPoly> terms_from_json(const Json& j, int n);
/// A polynomial document: a term array, {"terms":[...]}, {"expr":"..."} or a
/// bare expression string.
NCPoly<HPoly> poly_from_json(const Json& j, int n);

/// {"n":3,"scalar":"hpoly","phi":[{"i":1,"j":2,"terms":[...]}]}
Json to_json(const Presentation& p);
/// The form above, or {"lie":{...}}, {"quadratic":{...}}, {"potential":{...}}.
Presentation presentation_from_json(const Json& j);

/// {"n":3,"terms":[{"cycle":[1,3,2],"coeff":[...]}]}, cycles canonical.
Json to_json(const Potential& phi);
/// The form above, optionally wrapped as {"potential":{...}}.
Potential potential_from_json(const Json& j);

Json to_json(const LieData& d);
Json to_json(const QuadData& d);

/// [{"triple":[i,j,k],"value":[{"word":[{"x":1},{"xi2":[1,2]}],"coeff":[...]}]}]
/// or {"d2":[...]}. Unsorted triples are sorted with the permutation sign.
D2Map d2_from_json(const Json& j, int n);
Json to_json(const KoszulPoly& p);

Json to_json(const ValidationReport& r);
Json to_json(const CertificateReport& r);
Json to_json(const ObstructionReport& r);
Json to_json(const HilbertReport& r);
Json to_json(const MemberReport& r);
Json to_json(const TorsionReport& r);

std::string to_text(const ValidationReport& r);
std::string to_text(const CertificateReport& r);
std::string to_text(const ObstructionReport& r);
std::string to_text(const HilbertReport& r);
std::string to_text(const MemberReport& r);
std::string to_text(const TorsionReport& r);

}  // namespace pbw
