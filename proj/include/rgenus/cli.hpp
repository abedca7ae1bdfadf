#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rgenus/classify.hpp"

namespace rgenus {

/// lhs = parts[0] ∘ parts[1] ∘ ..., every side written in the expression
/// language of parse_expr.
struct Identity {
  std::string name;
  std::string lhs;
  std::vector<std::string> parts;
};

/// The built-in decomposition and factorization identities.
const std::vector<Identity>& identity_suite();

struct IdentityResult {
  std::string name;
  bool ok = false;
  std::string error;  // set when a side failed to parse
};

std::vector<IdentityResult> check_identities(const std::vector<Identity>& ids);

/// Everything `classify` prints.
struct Report {
  RationalMap map;
  Passport passport;
  Signature signature;
  Rational chi;
  GenusClass genus = GenusClass::Zero;
  std::vector<CatalogMatch> matches;
  std::string match_note;  // why matches is empty for a genus-zero map
  std::optional<CoveringWitness> witness;
  LattesResult lattes;
};

Report build_report(const RationalMap& A);
std::string report_text(const Report& r);
std::string report_json(const Report& r);

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kInternal = 3 };

/// Runs the command line (without the program name) and returns the exit
/// code; diagnostics go to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// verify-identities over an arbitrary list, so tests can feed altered data.
int run_verify_identities(const std::vector<Identity>& ids, bool json, bool quiet, std::ostream& out,
                          std::ostream& err);

}  // namespace rgenus
