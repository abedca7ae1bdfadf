#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rgenus/orbifold.hpp"
#include "rgenus/ratmap.hpp"

namespace rgenus {

/// Genus of the Galois closure of A, read off the sign of χ(O2A).
enum class GenusClass { Zero, One, Higher };

std::string to_string(GenusClass g);

/// Degree-1 maps are Zero.
GenusClass genus_class(const RationalMap& A);

/// |A^-1{0, 1, inf}| counting points of algebraic classes.
int belyi_preimage_count(const RationalMap& A);

/// Critical values inside {0, 1, inf}. Cross-checked against the preimage
/// count (d + 2 exactly for Belyi maps); a disagreement raises
/// InvariantViolation.
bool is_belyi(const RationalMap& A);

/// One member of the genus-zero list. Parametric families carry n > 0,
/// fixed entries n = 0.
struct CatalogEntry {
  std::string family;  // cyclic, dihedral_half, chebyshev, tetra_a, ..., icosa_h
  int n = 0;
  RationalMap map;
  Signature expected;

  std::string name() const { return n ? family + "(" + std::to_string(n) + ")" : family; }
};

/// The 18 fixed entries: tetra_a..c, octa_a..g, icosa_a..h.
const std::vector<CatalogEntry>& catalog();

/// Fixed entry by name; throws InvalidArgument for an unknown name.
const CatalogEntry& catalog_entry(const std::string& name);

/// z^n, n >= 1.
RationalMap cyclic(int n);
/// T_n from T_0 = 1, T_1 = z, T_n = 2z T_(n-1) - T_(n-2); n >= 2.
RationalMap chebyshev(int n);
/// (z^2n + 1) / (2 z^n), n >= 2.
RationalMap dihedral_half(int n);

/// Parametric entry; BadParameter below the family minimum.
CatalogEntry family_entry(const std::string& family, int n);

/// (left, right) with A1 = left ∘ A2 ∘ right, both defined over Q, or
/// nothing when no such pair exists. Maps of different degree are never
/// equivalent. Throws Unsupported when neither map has two rational
/// critical values and two rational points above them to anchor the search.
std::optional<std::pair<Mobius, Mobius>> mu_equivalent(const RationalMap& A1, const RationalMap& A2);

struct CatalogMatch {
  CatalogEntry entry;
  Mobius left, right;  // A = left ∘ entry ∘ right
};

/// Every catalog member equivalent to A, fixed entries first. Requires
/// genus Zero (InvalidArgument otherwise). Raises NoMatch when nothing
/// matches, or Unsupported when nothing matches and some candidate could
/// not be decided.
std::vector<CatalogMatch> catalog_match(const RationalMap& A);

/// F equals the composition of parts, outermost first.
bool verify_decomposition(const RationalMap& F, const std::vector<RationalMap>& parts);

/// Whether ν(O2A) of a left factor A of the Galois map with signature
/// nu_theta can be nu_A.
bool left_factor_constraint(const Signature& nu_theta, const Signature& nu_A);

struct Postcritical {
  bool bounded = true;
  std::vector<Place> places;  // empty when unbounded
};

/// Forward orbit closure of the critical values, or unbounded once it holds
/// more than cap points. Rational points whose height guarantees escape end
/// the search early.
Postcritical postcritical_set(const RationalMap& A, int cap = 64);

/// Covering A: o1 -> o2 between orbifolds of Euler characteristic zero.
/// case_number is the row of the seventeen-case table, 0 when the pair is
/// forced to be (O1A, O2A).
struct CoveringWitness {
  Orbifold o1, o2;
  int case_number = 0;
  bool forced() const { return case_number == 0; }
};

/// The lowest-numbered witness, or nothing when χ(O2A) < 0.
std::optional<CoveringWitness> zero_chi_analysis(const RationalMap& A);

/// One witness for every case A realizes, sorted by case.
std::vector<CoveringWitness> zero_chi_witnesses(const RationalMap& A);

struct LattesResult {
  bool flag = false;
  std::optional<Orbifold> orbifold;
};

/// Searches for O with χ(O) = 0 and A: O -> O a covering.
LattesResult is_lattes(const RationalMap& A);

}  // namespace rgenus
