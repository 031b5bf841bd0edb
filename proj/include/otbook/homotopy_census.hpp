#pragma once

#include <string>
#include <vector>

#include "otbook/contact_presentation.hpp"
#include "otbook/lens.hpp"
#include "otbook/linalg.hpp"
#include "otbook/rational.hpp"

// d3 invariants of contact structures given by ±1 contact surgery, the tight
// census on lens spaces, and the d3-based overtwistedness comparator.
namespace otbook::census {

// Integral data of a ±1 contact surgery presentation.
struct PM1Presentation {
  IntMatrix linking;          // Q: smooth framings tb ± 1 on the diagonal
  std::vector<Integer> rot;   // rotation numbers
  int q_plus = 0;             // number of +1 contact surgeries

  // Requires every coefficient to be ±1 (expand first).
  static PM1Presentation from_contact(const contact::ContactSurgeryDiagram& d);
};

struct D3Data {
  Rational d3;
  Rational c_squared;
  std::vector<Rational> solution;  // x with Q x = rot
  int signature = 0;
  int euler_characteristic = 0;
  int q_plus = 0;
  Integer determinant = 0;
};

/// d3 = (c^2 - 2 chi - 3 sigma) / 4 + q_plus, with c^2 = rot^T Q^{-1} rot,
/// chi = 1 + #components and sigma = signature(Q). Q must be nonsingular.
D3Data d3(const PM1Presentation& pres);

struct TightDescriptor {
  std::vector<Integer> chain;  // entries a_i <= -2
  std::vector<Integer> rot;    // rot_i in {a_i + 2, a_i + 4, ..., -a_i - 2}
  Rational d3;
};

// Chain of stabilized unknots realizing L(p, q): negated neg_cf_expand(p/q).
std::vector<Integer> census_chain(const lens::LensSpace& l);
Integer census_size_formula(const std::vector<Integer>& chain);

// Every Legendrian realization of the chain, in lexicographic order of the
// rotation vector, each with the d3 of its -1 surgery. Needs p >= 2.
std::vector<TightDescriptor> tight_census(const lens::LensSpace& l);

enum class Verdict { overtwisted_certified, inconclusive };
std::string_view name(Verdict v);

struct OvertwistedReport {
  Integer h = 0, k = 0;
  lens::LensSpace lens;
  PM1Presentation presentation;
  D3Data data;
  std::vector<Rational> census_d3;  // distinct values, ascending
  std::size_t census_size = 0;
  Verdict verdict = Verdict::inconclusive;
  std::string justification;
};

/// Certifies overtwistedness only when d3 of the family structure differs from
/// the d3 of every tight structure on the same lens space. A match is always
/// reported as inconclusive.
OvertwistedReport overtwisted_verdict(Integer h, Integer k);

}  // namespace otbook::census
