#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "rgenus/cli.hpp"
#include "rgenus/errors.hpp"

namespace rgenus {

namespace {

using nlohmann::ordered_json;

ordered_json place_json(const Place& p, int index) {
  if (p.is_infinity()) return "inf";
  if (p.is_finite()) return p.value().to_fraction_string();
  ordered_json coeffs = ordered_json::array();
  for (const auto& c : p.minpoly().coeffs()) coeffs.push_back(c.to_fraction_string());
  return ordered_json{{"minpoly", coeffs}, {"index", index}};
}

ordered_json orbifold_json(const Orbifold& o, int index) {
  ordered_json pts = ordered_json::array();
  for (const auto& [p, nu] : o.entries()) pts.push_back(ordered_json::array({place_json(p, index), nu}));
  return ordered_json{{"signature", o.signature()}, {"points", pts}};
}

ordered_json mobius_json(const Mobius& m) {
  ordered_json a = ordered_json::array();
  for (const mpz_class* x : {&m.a(), &m.b(), &m.c(), &m.d()}) a.push_back(Rational(*x).to_fraction_string());
  return a;
}

std::string signature_text(const Signature& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

}  // namespace

Report build_report(const RationalMap& A) {
  if (A.degree() < 1) throw InvalidArgument("constant map has no passport");
  Report r;
  r.map = A;
  r.passport = passport(A);
  for (const auto& e : r.passport.entries)
    for (int i = 0; i < e.value.size(); ++i) r.signature.push_back(e.nu());
  std::sort(r.signature.begin(), r.signature.end());
  r.chi = euler_char(r.signature);
  r.genus = genus_class(A);
  if (r.genus == GenusClass::Zero) {
    try {
      r.matches = catalog_match(A);
    } catch (const NoMatch& e) {
      r.match_note = std::string(e.what()) + " over Q (possibly a twist of a catalog member)";
    } catch (const Unsupported& e) {
      r.match_note = e.what();
    }
  }
  if (A.degree() >= 2) {
    r.witness = zero_chi_analysis(A);
    r.lattes = is_lattes(A);
  }
  return r;
}

std::string report_text(const Report& r) {
  std::ostringstream os;
  os << "map        " << r.map.to_string() << "\n";
  os << "degree     " << r.map.degree() << "\n";
  os << "passport   " << r.passport.to_string() << "\n";
  os << "signature  " << signature_text(r.signature) << "\n";
  os << "chi        " << r.chi.to_string() << "\n";
  os << "genus      " << to_string(r.genus) << "\n";
  if (r.matches.empty()) {
    os << "matches    none\n";
  } else {
    for (std::size_t i = 0; i < r.matches.size(); ++i) {
      const auto& m = r.matches[i];
      os << (i ? "           " : "matches    ") << m.entry.name() << "  left " << m.left.to_string() << "  right "
         << m.right.to_string() << "\n";
    }
  }
  if (r.witness) {
    os << "flat pair  " << (r.witness->forced() ? std::string("forced") : "case " + std::to_string(r.witness->case_number))
       << ": " << r.witness->o1.to_string() << " -> " << r.witness->o2.to_string() << "\n";
  } else {
    os << "flat pair  none\n";
  }
  os << "lattes     " << (r.lattes.flag ? "yes " + r.lattes.orbifold->to_string() : std::string("no")) << "\n";
  return os.str();
}

std::string report_json(const Report& r) {
  ordered_json j;
  j["degree"] = r.map.degree();
  ordered_json pp = ordered_json::array();
  for (const auto& e : r.passport.entries) pp.push_back(ordered_json::array({place_json(e.value, 1), e.partition}));
  j["passport"] = pp;
  j["signature"] = r.signature;
  j["chi"] = r.chi.to_fraction_string();
  j["genus"] = to_string(r.genus);
  ordered_json ms = ordered_json::array();
  for (const auto& m : r.matches) {
    ordered_json mj;
    mj["family"] = m.entry.family;
    if (m.entry.n) mj["n"] = m.entry.n;
    mj["mu_left"] = mobius_json(m.left);
    mj["mu_right"] = mobius_json(m.right);
    ms.push_back(mj);
  }
  j["matches"] = ms;
  if (r.witness) {
    ordered_json w;
    if (r.witness->forced()) w["case"] = "forced";
    else w["case"] = r.witness->case_number;
    w["o1"] = orbifold_json(r.witness->o1, 2);
    w["o2"] = orbifold_json(r.witness->o2, 1);
    j["zero_chi_witness"] = w;
  } else {
    j["zero_chi_witness"] = nullptr;
  }
  ordered_json l;
  l["flag"] = r.lattes.flag;
  l["orbifold"] = r.lattes.orbifold ? orbifold_json(*r.lattes.orbifold, 1) : ordered_json(nullptr);
  j["lattes"] = l;
  return j.dump(2) + "\n";
}

}  // namespace rgenus
