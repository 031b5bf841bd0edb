#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "otbook/framed_link.hpp"
#include "otbook/rational.hpp"

// Negative continued fractions and lens spaces. Convention: L(p, q) is
// -p/q surgery on the unknot, so a chain framed [-a1, ..., -an] gives
// L(p, q) with p/q = [a1, ..., an]^-.
namespace otbook::lens {

/// Normalized lens space. p = 0 is S^1 x S^2, p = 1 is S^3 stored as (1, 0),
/// otherwise 0 < q < p with gcd(p, q) = 1.
struct LensSpace {
  Integer p = 1;
  Integer q = 0;

  // Reduces q mod p and validates coprimality.
  static LensSpace make(Integer p, Integer q);

  bool is_s3() const { return p == 1; }
  bool is_s1xs2() const { return p == 0; }
  std::string str() const;

  friend bool operator==(const LensSpace&, const LensSpace&) = default;
};

// x = a1 - 1/(a2 - 1/(... - 1/an)) with every ai >= 2, for rational x > 1.
std::vector<Integer> neg_cf_expand(const Rational& x);

// Right-to-left evaluation; nullopt is the pole (a division by zero).
using CfValue = std::optional<Rational>;
CfValue cf_evaluate(std::span<const Integer> coeffs);

// Lens space of -r surgery on the unknot for r = p/q (nullopt = infinity).
LensSpace from_surgery_ratio(const CfValue& r);

LensSpace chain_to_lens(std::span<const Integer> framings);
LensSpace chain_to_lens(const FramedLinkDiagram& d);

// Oriented: q2 ≡ q1^{±1} (mod p). Unoriented additionally allows q2 ≡ -q1^{±1}.
bool lens_equal(const LensSpace& a, const LensSpace& b, bool oriented);

Integer family_p(Integer h, Integer k);
Integer family_q(Integer h, Integer k);
LensSpace family_lens(Integer h, Integer k);

}  // namespace otbook::lens
