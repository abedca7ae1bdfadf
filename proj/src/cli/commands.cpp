#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>
#include <ostream>

#include "rgenus/cli.hpp"
#include "rgenus/errors.hpp"
#include "rgenus/parser.hpp"

namespace rgenus {

namespace {

using nlohmann::ordered_json;

struct Options {
  bool json = false;
  bool quiet = false;
  std::vector<std::string> exprs;
  std::vector<std::string> num, den;
  std::string family;
  int n = 0;
};

UniPoly integer_poly(const std::vector<std::string>& coeffs) {
  std::vector<Rational> c;
  for (const auto& s : coeffs) {
    try {
      c.emplace_back(mpz_class(s));
    } catch (const std::invalid_argument&) {
      throw InvalidArgument("not an integer coefficient: " + s);
    }
  }
  return UniPoly(c);
}

/// The map named by a positional expression or by --num/--den.
RationalMap input_map(const Options& o) {
  if (!o.num.empty() || !o.den.empty()) {
    if (!o.exprs.empty()) throw InvalidArgument("give either an expression or --num/--den");
    UniPoly num = integer_poly(o.num);
    UniPoly den = o.den.empty() ? UniPoly::constant(1) : integer_poly(o.den);
    return make_map(num, den);
  }
  if (o.exprs.size() != 1) throw InvalidArgument("expected exactly one expression");
  return parse_expr(o.exprs[0]);
}

ordered_json coeff_json(const UniPoly& p) {
  ordered_json a = ordered_json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.to_fraction_string());
  return a;
}

std::string signature_text(const Signature& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

int cmd_classify(const Options& o, std::ostream& out, std::ostream& err) {
  Report r = build_report(input_map(o));
  if (!r.match_note.empty()) err << "note: " << r.match_note << "\n";
  if (o.json) out << report_json(r);
  else if (o.quiet) out << to_string(r.genus) << "\n";
  else out << report_text(r);
  return kOk;
}

int cmd_passport(const Options& o, std::ostream& out) {
  RationalMap A = input_map(o);
  Passport p = passport(A);
  if (!o.json) {
    out << p.to_string() << "\n";
    return kOk;
  }
  ordered_json a = ordered_json::array();
  for (const auto& e : p.entries) {
    ordered_json place;
    if (e.value.is_infinity()) place = "inf";
    else if (e.value.is_finite()) place = e.value.value().to_fraction_string();
    else place = ordered_json{{"minpoly", coeff_json(e.value.minpoly())}, {"index", 1}};
    a.push_back(ordered_json::array({place, e.partition}));
  }
  out << a.dump(2) << "\n";
  return kOk;
}

int cmd_compose(const Options& o, std::ostream& out) {
  if (o.exprs.empty()) throw InvalidArgument("compose needs at least one expression");
  std::vector<RationalMap> parts;
  for (const auto& e : o.exprs) parts.push_back(parse_expr(e));
  RationalMap m = compose_all(parts);
  if (o.json) {
    ordered_json j{{"map", m.to_string()}, {"degree", m.degree()}, {"num", coeff_json(m.num())}, {"den", coeff_json(m.den())}};
    out << j.dump(2) << "\n";
  } else {
    out << m.to_string() << "\n";
  }
  return kOk;
}

int cmd_mu_equiv(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.exprs.size() != 2) throw InvalidArgument("mu-equiv needs two expressions");
  RationalMap a = parse_expr(o.exprs[0]), b = parse_expr(o.exprs[1]);
  std::optional<std::pair<Mobius, Mobius>> w;
  try {
    w = mu_equivalent(a, b);
  } catch (const Unsupported& e) {
    err << "undecided: " << e.what() << "\n";
    return kVerifyFailed;
  }
  if (o.json) {
    ordered_json j{{"equivalent", w.has_value()}};
    j["mu_left"] = w ? ordered_json(w->first.to_string()) : ordered_json(nullptr);
    j["mu_right"] = w ? ordered_json(w->second.to_string()) : ordered_json(nullptr);
    out << j.dump(2) << "\n";
  } else if (w) {
    out << "equivalent: A1 = left . A2 . right\nleft   " << w->first.to_string() << "\nright  " << w->second.to_string()
        << "\n";
  } else {
    out << "not equivalent\n";
  }
  return w ? kOk : kVerifyFailed;
}

int cmd_catalog(const Options& o, bool n_given, std::ostream& out) {
  if (n_given && (o.n < 1 || o.n > 1000)) throw BadParameter("--n must lie in [1, 1000]");
  std::vector<CatalogEntry> entries;
  const std::string& f = o.family;
  if (f == "cyclic" || f == "chebyshev" || f == "dihedral_half") {
    if (!n_given) throw BadParameter("--family " + f + " needs --n");
    entries.push_back(family_entry(f, o.n));
  } else {
    for (const auto& e : catalog())
      if (f.empty() || e.family == f || e.family.rfind(f + "_", 0) == 0) entries.push_back(e);
    if (entries.empty()) throw BadParameter("unknown family " + f);
  }
  if (o.json) {
    ordered_json a = ordered_json::array();
    for (const auto& e : entries) {
      ordered_json j;
      j["name"] = e.name();
      j["family"] = e.family;
      if (e.n) j["n"] = e.n;
      j["degree"] = e.map.degree();
      j["map"] = e.map.to_string();
      j["num"] = coeff_json(e.map.num());
      j["den"] = coeff_json(e.map.den());
      j["signature"] = e.expected;
      a.push_back(j);
    }
    out << a.dump(2) << "\n";
    return kOk;
  }
  for (const auto& e : entries) {
    if (o.quiet) out << e.name() << "\n";
    else out << e.name() << "  degree " << e.map.degree() << "  " << signature_text(e.expected) << "\n  " << e.map.to_string() << "\n";
  }
  return kOk;
}

}  // namespace

int run_verify_identities(const std::vector<Identity>& ids, bool json, bool quiet, std::ostream& out,
                          std::ostream& err) {
  const auto results = check_identities(ids);
  const IdentityResult* first_bad = nullptr;
  int passed = 0;
  for (const auto& r : results) {
    if (r.ok) ++passed;
    else if (!first_bad) first_bad = &r;
  }
  if (json) {
    ordered_json a = ordered_json::array();
    for (const auto& r : results) a.push_back(ordered_json{{"identity", r.name}, {"status", r.ok ? "pass" : "fail"}});
    out << a.dump(2) << "\n";
  } else {
    if (!quiet)
      for (const auto& r : results) out << (r.ok ? "PASS  " : "FAIL  ") << r.name << "\n";
    out << passed << "/" << results.size() << " identities verified\n";
  }
  if (!first_bad) return kOk;
  err << "identity failed: " << first_bad->name;
  if (!first_bad->error.empty()) err << " (" << first_bad->error << ")";
  err << "\n";
  return kVerifyFailed;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Genus of the Galois closure of rational maps of the sphere", "rgenus"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_flag("--quiet", o.quiet, "Terse output");

  auto add_map_input = [&](CLI::App* sub) {
    sub->add_option("expr", o.exprs, "Expression in z, '.' composes (outermost first)");
    sub->add_option("--num", o.num, "Numerator coefficients, lowest degree first")->delimiter(',');
    sub->add_option("--den", o.den, "Denominator coefficients, lowest degree first")->delimiter(',');
  };
  auto* classify = app.add_subcommand("classify", "Genus class, passport, catalog matches, flat coverings");
  add_map_input(classify);
  auto* passport_cmd = app.add_subcommand("passport", "Branch data over every critical value");
  add_map_input(passport_cmd);
  auto* catalog_cmd = app.add_subcommand("catalog", "List catalog entries");
  catalog_cmd->add_option("--family", o.family, "cyclic, dihedral_half, chebyshev, tetra, octa, icosa or an entry name");
  auto* n_opt = catalog_cmd->add_option("--n", o.n, "Parameter of a parametric family");
  auto* verify = app.add_subcommand("verify-identities", "Check the built-in identity suite");
  auto* mu = app.add_subcommand("mu-equiv", "Find left and right Mobius maps relating two maps");
  mu->add_option("exprs", o.exprs, "Two expressions")->expected(2);
  auto* comp = app.add_subcommand("compose", "Compose expressions, outermost first");
  comp->add_option("exprs", o.exprs, "Expressions")->expected(1, -1);
  for (auto* sub : {classify, passport_cmd, catalog_cmd, verify, mu, comp}) {
    sub->add_flag("--json", o.json, "Machine-readable output");
    sub->add_flag("--quiet", o.quiet, "Terse output");
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (classify->parsed()) return cmd_classify(o, out, err);
    if (passport_cmd->parsed()) return cmd_passport(o, out);
    if (catalog_cmd->parsed()) return cmd_catalog(o, n_opt->count() > 0, out);
    if (verify->parsed()) return run_verify_identities(identity_suite(), o.json, o.quiet, out, err);
    if (mu->parsed()) return cmd_mu_equiv(o, out, err);
    if (comp->parsed()) return cmd_compose(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const BadParameter& e) {
    err << "bad parameter: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kUsage;
  } catch (const DivisionByZero& e) {
    err << "invalid input: " << e.what() << "\n";
    return kUsage;
  } catch (const ZeroOverZero& e) {
    err << "invalid input: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace rgenus
