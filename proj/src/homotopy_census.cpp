#include "otbook/homotopy_census.hpp"

#include <algorithm>
#include <cstdlib>

namespace otbook::census {

namespace {

constexpr Integer kMaxCensus = 1'000'000;

// The rational d3 lives in (1 / 4|det Q|) Z; anything else means a broken solve.
void check_denominator(const Rational& d3, Integer det) {
  const __int128 bound = static_cast<__int128>(4) * (det < 0 ? -static_cast<__int128>(det) : det);
  if (bound % d3.den() != 0)
    throw InvariantViolation("d3 = " + d3.str() + " has a denominator not dividing 4|det Q|");
}

IntMatrix chain_matrix(const std::vector<Integer>& chain) {
  IntMatrix q(chain.size());
  for (std::size_t i = 0; i < chain.size(); ++i) {
    q(i, i) = chain[i];
    if (i + 1 < chain.size()) {
      q(i, i + 1) = 1;
      q(i + 1, i) = 1;
    }
  }
  return q;
}

}  // namespace

std::string_view name(Verdict v) {
  return v == Verdict::overtwisted_certified ? "OVERTWISTED_CERTIFIED" : "INCONCLUSIVE";
}

PM1Presentation PM1Presentation::from_contact(const contact::ContactSurgeryDiagram& d) {
  PM1Presentation p;
  const std::size_t n = d.size();
  p.linking = IntMatrix(n);
  p.rot.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& c = d.components()[i];
    if (c.coeff != Rational(1) && c.coeff != Rational(-1))
      throw UnsupportedCoefficient("component '" + c.id + "' has coefficient " + c.coeff.str() + ", expected +-1");
    p.linking(i, i) = c.tb + c.coeff.num();
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) p.linking(i, j) = d.linking(i, j);
    p.rot[i] = c.rot;
    if (c.coeff == Rational(1)) ++p.q_plus;
  }
  return p;
}

D3Data d3(const PM1Presentation& pres) {
  const IntMatrix& q = pres.linking;
  if (q.size() != pres.rot.size()) throw DomainError("d3: rotation vector size does not match Q");
  if (!q.is_symmetric()) throw DomainError("d3: linking matrix must be symmetric");
  D3Data out;
  out.determinant = determinant(q);
  if (out.determinant == 0) throw SingularMatrix("d3 needs a rational homology sphere (det Q = 0)");
  out.solution = solve(q, pres.rot);
  out.c_squared = dot(out.solution, pres.rot);
  out.signature = signature(q);
  out.euler_characteristic = 1 + static_cast<int>(q.size());
  out.q_plus = pres.q_plus;
  out.d3 = (out.c_squared - Rational(2 * out.euler_characteristic) - Rational(3 * out.signature)) / Rational(4) +
           Rational(pres.q_plus);
  check_denominator(out.d3, out.determinant);
  return out;
}

std::vector<Integer> census_chain(const lens::LensSpace& l) {
  if (l.p < 2) throw DomainError("tight census needs p >= 2");
  auto cf = lens::neg_cf_expand(Rational(l.p, l.q));
  for (auto& a : cf) a = -a;
  return cf;
}

Integer census_size_formula(const std::vector<Integer>& chain) {
  Integer n = 1;
  for (Integer a : chain) n = checked::mul(n, std::abs(a) - 1);
  return n;
}

std::vector<TightDescriptor> tight_census(const lens::LensSpace& l) {
  const auto chain = census_chain(l);
  const Integer expected = census_size_formula(chain);
  if (expected > kMaxCensus) throw DomainError("tight census of " + l.str() + " is too large to enumerate");

  PM1Presentation pres{chain_matrix(chain), std::vector<Integer>(chain.size()), 0};
  std::vector<TightDescriptor> out;
  out.reserve(static_cast<std::size_t>(expected));
  std::vector<Integer>& rot = pres.rot;
  for (std::size_t i = 0; i < chain.size(); ++i) rot[i] = chain[i] + 2;
  // Odometer over rot_i = a_i + 2, a_i + 4, ..., -a_i - 2.
  for (;;) {
    out.push_back({chain, rot, d3(pres).d3});
    std::size_t i = chain.size();
    while (i > 0) {
      --i;
      if (rot[i] + 2 <= -chain[i] - 2) {
        rot[i] += 2;
        break;
      }
      rot[i] = chain[i] + 2;
      if (i == 0) return out;
    }
  }
}

OvertwistedReport overtwisted_verdict(Integer h, Integer k) {
  OvertwistedReport r;
  r.h = h;
  r.k = k;
  r.lens = lens::family_lens(h, k);
  r.presentation = PM1Presentation::from_contact(contact::expand_to_unit_coefficients(contact::presentation_for(h, k)));
  r.data = d3(r.presentation);
  const auto census = tight_census(r.lens);
  r.census_size = census.size();
  for (const auto& t : census) r.census_d3.push_back(t.d3);
  std::sort(r.census_d3.begin(), r.census_d3.end());
  r.census_d3.erase(std::unique(r.census_d3.begin(), r.census_d3.end()), r.census_d3.end());

  const bool matches = std::binary_search(r.census_d3.begin(), r.census_d3.end(), r.data.d3);
  if (matches) {
    r.verdict = Verdict::inconclusive;
    r.justification = "d3 = " + r.data.d3.str() + " coincides with a tight structure on " + r.lens.str() +
                      "; the homotopy class does not decide tightness";
  } else {
    r.verdict = Verdict::overtwisted_certified;
    r.justification = "d3 = " + r.data.d3.str() + " differs from d3 of all " + std::to_string(r.census_size) +
                      " tight structures on " + r.lens.str() +
                      "; d3 is a homotopy invariant and every contact structure on a lens space is overtwisted "
                      "or Stein fillable (Giroux, Honda)";
  }
  return r;
}

}  // namespace otbook::census
