#include "pbw/cli.hpp"

#include <CLI11.hpp>
#include <cstdint>
#include <ostream>

#include "pbw/json_io.hpp"
#include "pbw/text_io.hpp"

namespace pbw {

namespace {

struct RunConfig {
  std::string input;
  std::string format = "json";
  std::uint64_t seed = 0;
  int degree = 0;
  std::string at;
  bool generic = false;
  bool ring = false;
  std::string d2 = "default";
  std::string d2_file;
  int var = 0;
  std::string poly;
  std::string element;
  std::string factor = "1-h";
};

struct Outcome {
  int code = 0;
  Json report;
  std::string text;
  Json echo;  // canonical input
  Json bounds = Json::object();
};

FieldChoice field_of(const RunConfig& cfg, bool allow_ring) {
  int chosen = (!cfg.at.empty()) + cfg.generic + cfg.ring;
  if (chosen > 1) throw Error(Errc::Parse, "--at, --generic and --ring are mutually exclusive");
  if (cfg.ring) {
    if (!allow_ring) throw Error(Errc::Parse, "--ring is only available for member");
    return FieldChoice::ring();
  }
  if (!cfg.at.empty()) return FieldChoice::at(parse_rational(cfg.at));
  return FieldChoice::generic();
}

Json bounds_of(const FieldChoice& f, int degree) {
  Json b = {{"degree", degree}};
  switch (f.kind) {
    case FieldChoice::Kind::At: b["at"] = to_string(f.a); break;
    case FieldChoice::Kind::Generic: b["field"] = "generic"; break;
    case FieldChoice::Kind::Ring: b["field"] = "ring"; break;
  }
  return b;
}

Presentation load_presentation(const RunConfig& cfg) { return presentation_from_json(read_json_file(cfg.input)); }

Outcome do_validate(const RunConfig& cfg) {
  Presentation p = load_presentation(cfg);
  ValidationReport r = validate(p);
  return {r.valid ? 0 : 1, to_json(r), to_text(r), to_json(p)};
}

std::optional<D2Map> custom_d2(const RunConfig& cfg, const Presentation& p, D2Choice choice) {
  if (choice != D2Choice::Custom) return std::nullopt;
  if (cfg.d2_file.empty()) throw Error(Errc::Parse, "--d2 custom needs --d2-file");
  return d2_from_json(read_json_file(cfg.d2_file), p.n());
}

Outcome do_certify(const RunConfig& cfg) {
  Presentation p = load_presentation(cfg);
  const D2Choice choice = parse_d2_choice(cfg.d2);
  auto custom = custom_d2(cfg, p, choice);
  CertificateReport r = certify(p, choice, custom ? &*custom : nullptr);
  return {r.pass ? 0 : 1, to_json(r), to_text(r), to_json(p)};
}

Outcome do_obstruction(const RunConfig& cfg) {
  Presentation p = load_presentation(cfg);
  const D2Choice choice = parse_d2_choice(cfg.d2);
  auto custom = custom_d2(cfg, p, choice);
  try {
    ObstructionReport r = obstruction(p, choice, custom ? &*custom : nullptr);
    return {0, to_json(r), to_text(r), to_json(p)};
  } catch (const Error& e) {
    if (e.code() != Errc::NoObstruction) throw;
    Json r = {{"verdict", "NoObstruction"}, {"path", d2_choice_name(choice)}};
    return {1, r, std::string("no obstruction: the certificate passes\n"), to_json(p)};
  }
}

Outcome do_derive(const RunConfig& cfg) {
  Potential phi = potential_from_json(read_json_file(cfg.input));
  NCPoly<HPoly> d = cyclic_derivative(phi, cfg.var);
  Json r = {{"var", cfg.var}, {"terms", terms_to_json(d)}, {"text", to_string(d)}};
  return {0, r, to_string(d) + "\n", to_json(phi)};
}

Outcome do_from_potential(const RunConfig& cfg) {
  Potential phi = potential_from_json(read_json_file(cfg.input));
  Presentation p = potential_to_presentation(phi);
  ValidationReport v = validate(p);
  Json r = {{"presentation", to_json(p)}, {"validation", to_json(v)}};
  std::string text;
  for (const auto& [ij, f] : p.stored())
    text += "phi" + std::to_string(ij.first) + std::to_string(ij.second) + " = " + to_string(f) + "\n";
  text += to_text(v);
  return {0, r, text, to_json(phi)};
}

Outcome do_hilbert(const RunConfig& cfg) {
  Presentation p = load_presentation(cfg);
  const FieldChoice f = field_of(cfg, false);
  HilbertReport r = hilbert(p, f, cfg.degree);
  int code = 0;
  switch (r.overall()) {
    case DegreeVerdict::Match: code = 0; break;
    case DegreeVerdict::Defect: code = 1; break;
    case DegreeVerdict::Unknown: code = 2; break;
  }
  return {code, to_json(r), to_text(r), to_json(p), bounds_of(f, cfg.degree)};
}

Outcome do_member(const RunConfig& cfg) {
  Presentation p = load_presentation(cfg);
  const FieldChoice f = field_of(cfg, true);
  NCPoly<HPoly> q = poly_from_json(read_json_file(cfg.poly), p.n());
  MemberReport r = member(p, q, cfg.degree, f);
  Json report = to_json(r);
  report["poly"] = to_string(q);
  return {r.member ? 0 : 1, report, to_text(r), to_json(p), bounds_of(f, cfg.degree)};
}

Outcome do_torsion(const RunConfig& cfg) {
  Presentation p = load_presentation(cfg);
  NCPoly<HPoly> t = poly_from_json(read_json_file(cfg.element), p.n());
  HPoly factor = parse_hpoly(cfg.factor);
  TorsionReport r = torsion_check(p, t, factor, cfg.degree);
  return {r.witness ? 0 : 1, to_json(r), to_text(r), to_json(p), bounds_of(FieldChoice::ring(), cfg.degree)};
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::OutOfRange: return 2;
    case Errc::NoObstruction: return 1;
    default: return 3;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification workbench for PBW properties of h-deformed algebras", kToolName};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--input,-i", cfg.input, "input JSON document")->required();
    sub->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--seed", cfg.seed, "seed recorded in the provenance block");
  };
  auto field_flags = [&](CLI::App* sub, bool ring) {
    sub->add_option("--at", cfg.at, "specialize h to this rational");
    sub->add_flag("--generic", cfg.generic, "work over Q(h) (default)");
    if (ring) sub->add_flag("--ring", cfg.ring, "work over Q[h] with h central");
  };
  auto d2_flags = [&](CLI::App* sub) {
    sub->add_option("--d2", cfg.d2, "default | lie | quadratic | custom")
        ->check(CLI::IsMember({"default", "lie", "quadratic", "custom"}));
    sub->add_option("--d2-file", cfg.d2_file, "custom d2 JSON");
  };

  auto* validate_cmd = app.add_subcommand("validate", "check h-divisibility, degrees and certificate paths");
  common(validate_cmd);
  auto* certify_cmd = app.add_subcommand("certify", "evaluate d1 o d2 on every xi_ijk");
  common(certify_cmd);
  d2_flags(certify_cmd);
  auto* obstruction_cmd = app.add_subcommand("obstruction", "lowest h-order part of a failing certificate");
  common(obstruction_cmd);
  d2_flags(obstruction_cmd);
  auto* derive_cmd = app.add_subcommand("derive", "cyclic derivative of a potential");
  common(derive_cmd);
  derive_cmd->add_option("--var", cfg.var, "generator index")->required();
  auto* from_potential_cmd = app.add_subcommand("from-potential", "presentation of a three-generator potential");
  common(from_potential_cmd);
  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert function of the associated graded algebra");
  hilbert_cmd->alias("pbw");
  common(hilbert_cmd);
  field_flags(hilbert_cmd, false);
  hilbert_cmd->add_option("--degree,-K", cfg.degree, "largest degree K")->required()->check(CLI::PositiveNumber);
  auto* member_cmd = app.add_subcommand("member", "ideal membership through a degree bound");
  common(member_cmd);
  field_flags(member_cmd, true);
  member_cmd->add_option("--poly", cfg.poly, "polynomial JSON")->required();
  member_cmd->add_option("--degree,-D", cfg.degree, "completion degree D")->required()->check(CLI::PositiveNumber);
  auto* torsion_cmd = app.add_subcommand("torsion", "h-torsion witness over Q[h]");
  common(torsion_cmd);
  torsion_cmd->add_option("--element", cfg.element, "candidate T as polynomial JSON")->required();
  torsion_cmd->add_option("--factor", cfg.factor, "scalar factor in h, e.g. \"1-h\"");
  torsion_cmd->add_option("--degree,-D", cfg.degree, "completion degree D")->required()->check(CLI::PositiveNumber);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 3;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  Outcome outcome;
  try {
    if (sub == validate_cmd) outcome = do_validate(cfg);
    else if (sub == certify_cmd) outcome = do_certify(cfg);
    else if (sub == obstruction_cmd) outcome = do_obstruction(cfg);
    else if (sub == derive_cmd) outcome = do_derive(cfg);
    else if (sub == from_potential_cmd) outcome = do_from_potential(cfg);
    else if (sub == hilbert_cmd) outcome = do_hilbert(cfg);
    else if (sub == member_cmd) outcome = do_member(cfg);
    else if (sub == torsion_cmd) outcome = do_torsion(cfg);
  } catch (const Error& e) {
    err << name << ": " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << name << ": internal error: " << e.what() << "\n";
    return 4;
  }

  if (cfg.format == "text") {
    out << outcome.text;
  } else {
    Json provenance = {{"tool", kToolName}, {"version", kToolVersion}, {"seed", cfg.seed}, {"bounds", outcome.bounds}};
    Json doc = {{"command", name}, {"provenance", provenance}, {"input", outcome.echo}, {"report", outcome.report}};
    out << doc.dump(2) << "\n";
  }
  return outcome.code;
}

}  // namespace pbw
