#include "rgenus/cli.hpp"
#include "rgenus/errors.hpp"
#include "rgenus/parser.hpp"

namespace rgenus {

namespace {

// Entries transcribed independently of the catalog code, so the suite also
// cross-checks the catalog.
const char* const kTetraA = "-1/64*z^3*(z^3-8)^3/(z^3+1)^3";
const char* const kTetraB = "-1/64*z*(z-8)^3/(z+1)^3";
const char* const kTetraC = "-1/64*((z^2-4)/(z-1))^3";
const char* const kOctaA = "1/108*(z^8+14*z^4+1)^3/(z^4*(z^4-1)^4)";
const char* const kOctaB = "1/108*(z^2+14*z+1)^3/(z*(z-1)^4)";
const char* const kOctaC = "-1/27*(z^2-4)^3/z^4";
const char* const kOctaD = "4/27*(z^4-z^2+1)^3/(z^4*(z^2-1)^2)";
const char* const kOctaE = "-1/27*(2*z^2+1)^3*(2*z^2-3)^3/(2*z^2-1)^4";
const char* const kOctaF = "-256/27*z^3*(z-1)";
const char* const kOctaG = "256*z*(z^2-7*z-8)^3/(z^2+20*z-8)^4";
const char* const kL = "1/54*(z+7)^3/(z-1)^2";
const char* const kEsz = "-1/432*(16*z^8-56*z^4+1)^3/(z^4*(4*z^4+1)^4)";
const char* const kBs4 = "256*z^3*(z^6-7*z^3-8)^3/(z^6+20*z^3-8)^4";

struct Icosa {
  const char* name;
  const char* entry;
  const char* minus_one;
};

const Icosa kIcosa[] = {
    {"a", "1/1728*(z^20+228*z^15+494*z^10-228*z^5+1)^3/((z^10-11*z^5-1)^5*z^5)",
     "1/1728*(z^30-522*z^25-10005*z^20-10005*z^10+522*z^5+1)^2/(z^5*(z^10-11*z^5-1)^5)"},
    {"b", "-1/6144*(3*z+5)^3*(z^2+15)", "-1/6144*(3*z+11)*(3*z^2+2*z+27)^2"},
    {"c", "1/1728*(z^2-20)^3/(z-5)", "1/1728*(z^2+12*z+40)*(z^2-6*z+4)^2/(z-5)"},
    {"d", "2^9*5^4/3^2*(20*z^3-87*z-95)^3/(20*z^2+140*z+101)^5",
     "-1/9*(180*z^2+380*z+229)*(20*z^2+20*z+41)^2*(20*z^2-580*z-979)^2/(20*z^2+140*z+101)^5"},
    {"e", "1/1728*(z^4+228*z^3+494*z^2-228*z+1)^3/((z^2-11*z-1)^5*z)",
     "1/1728*(z^6-522*z^5-10005*z^4-10005*z^2+522*z+1)^2/(z*(z^2-11*z-1)^5)"},
    {"f", "5^4/3^3*(-40*z^2-20*z-4)^3*z^3*(5*z^2+5*z+1)^3/(20*z^2+10*z+1)^5",
     "-1/27*(10*z+3)*(20*z^2+20*z+1)*(10*z^2+10*z+3)^2*(500*z^4+300*z^3+70*z^2+10*z+1)^2/(20*z^2+10*z+1)^5"},
    {"g", "5^3/2^6*z*(z^2+5*z+40)^3*(z^2-40*z-5)^3*(8*z^2-5*z+5)^3/(z^4+55*z^3-165*z^2-275*z+25)^5",
     "-1/64*(z^2+5)^2*(8*z^4-100*z^3+2055*z^2+500*z+200)^2*(z^4-350*z^3-2190*z^2+1750*z+25)^2/"
     "(z^4+55*z^3-165*z^2-275*z+25)^5"},
    {"h",
     "1/1728*(z^2+3*z+1)^3*(z^4-4*z^3+11*z^2-14*z+31)^3*(z^4+z^3+11*z^2-4*z+16)^3/"
     "((z-1)^5*(z^4+z^3+6*z^2+6*z+11)^5)",
     "1/1728*(z^2+4)*(z^2-2*z-4)^2*(z^4+3*z^2+1)^2*(z^4+6*z^3+21*z^2+36*z+61)^2*(z^4-4*z^3+21*z^2-34*z+41)^2/"
     "((z-1)^5*(z^4+z^3+6*z^2+6*z+11)^5)"},
};

std::string paren(const std::string& s) { return "(" + s + ")"; }
std::string minus_one(const std::string& s) { return paren(s) + " - 1"; }
std::string half_sum(int k) { return "1/2*(z^" + std::to_string(k) + " + z^-" + std::to_string(k) + ")"; }
std::string cheb(int d) { return chebyshev(d).to_string(); }

std::vector<Identity> build() {
  std::vector<Identity> ids{
      {"dee", kTetraA, {"-z^3/64", "(z^2-4)/(z-1)", "(z^2+2)/(z+1)"}},
      {"tetra_a = tetra_b . z^3", kTetraA, {kTetraB, "z^3"}},
      {"tetra_a = -z^3/64 . z(z^3-8)/(z^3+1)", kTetraA, {"-1/64*z^3", "z*(z^3-8)/(z^3+1)"}},
      {"tetra_c = -z^3/64 . (z^2-4)/(z-1)", kTetraC, {"-1/64*z^3", "(z^2-4)/(z-1)"}},
      {"egik", minus_one(kTetraA), {"-1/64*(z^6+20*z^3-8)^2/(z^3+1)^3"}},
      {"xorr", kOctaA, {kL, half_sum(4)}},
      {"octa_a = octa_b . z^4", kOctaA, {kOctaB, "z^4"}},
      {"theta_D8 = 1/2(z+1/z) . z^4", half_sum(4), {"1/2*(z + 1/z)", "z^4"}},
      {"xlop", kOctaB, {kL, "1/2*(z + 1/z)"}},
      {"ep", "1/27*(z^2+3)^3/(z^2-1)^2", {kL, "2*z^2-1"}},
      {"ep minus one", "1/27*(z^2+3)^3/(z^2-1)^2 - 1", {"1/27*z^2*(z^2-9)^2/(z^2-1)^2"}},
      {"epp", kOctaC, {kL, "-(2*z^2-1)"}},
      {"prev", kOctaD, {kL, "8*z^4-8*z^2+1"}},
      {"prevv", kOctaE, {kL, "-(8*z^4-8*z^2+1)"}},
      {"esz", kEsz, {kOctaF, "1/8*(2*z^2+2*z-1)*(4*z^4+8*z^2+1)/(z*(4*z^4+1))"}},
      {"esz = octa_b . -4z^4", kEsz, {kOctaB, "-4*z^4"}},
      {"bs4", kBs4, {"-4*z/(z^2+1-2*z)", kTetraA}},
      {"bs4 minus one", minus_one(kBs4),
       {"-(z^2+2)^2*(z^4-2*z^2+4)^2*(z^2-4*z-2)^2*(z^4+4*z^3+18*z^2-8*z+4)^2/(z^6+20*z^3-8)^4"}},
      {"octa_g = -4x/(x-1)^2 . tetra_b", kOctaG, {"-4*z/(z-1)^2", kTetraB}},
      {"bs4 = octa_g . z^3", kBs4, {kOctaG, "z^3"}},
      {"icosa_a = icosa_e . z^5", kIcosa[0].entry, {kIcosa[4].entry, "z^5"}},
  };
  for (const auto& ic : kIcosa)
    ids.push_back({std::string("icosa_") + ic.name + " minus one", minus_one(ic.entry), {ic.minus_one}});

  for (int n = 2; n <= 8; ++n)
    for (int d = 2; d < n; ++d) {
      if (n % d) continue;
      const std::string m = std::to_string(n / d), tag = " n=" + std::to_string(n) + " d=" + std::to_string(d);
      ids.push_back({"ega" + tag, "z^" + std::to_string(n), {"z^" + std::to_string(d), "z^" + m}});
      ids.push_back({"ega1" + tag, half_sum(n), {half_sum(d), "z^" + m}});
    }
  for (int n = 2; n <= 8; ++n)
    for (int d = 2; d <= n; ++d) {
      if (n % d) continue;
      const std::string m = std::to_string(n / d), tag = " n=" + std::to_string(n) + " d=" + std::to_string(d);
      ids.push_back({"ega2 eps=+1" + tag, half_sum(n), {cheb(d), "1/2*(z^" + m + " + 1/z^" + m + ")"}});
      const std::string sign = d % 2 ? "-" : "";
      ids.push_back({"ega2 eps=-1" + tag, half_sum(n),
                     {sign + paren(cheb(d)), "1/2*(-z^" + m + " + 1/(-z^" + m + "))"}});
    }
  for (int d = 2; d <= 8; ++d)
    ids.push_back({"T_" + std::to_string(d) + " . 1/2(z+1/z)", half_sum(d), {cheb(d), "1/2*(z + 1/z)"}});
  return ids;
}

}  // namespace

const std::vector<Identity>& identity_suite() {
  static const std::vector<Identity> ids = build();
  return ids;
}

std::vector<IdentityResult> check_identities(const std::vector<Identity>& ids) {
  std::vector<IdentityResult> out;
  for (const auto& id : ids) {
    IdentityResult r{id.name, false, ""};
    try {
      std::vector<RationalMap> parts;
      for (const auto& p : id.parts) parts.push_back(parse_expr(p));
      r.ok = verify_decomposition(parse_expr(id.lhs), parts);
    } catch (const Error& e) {
      r.error = e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace rgenus
