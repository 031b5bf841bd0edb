#include "otbook/lens.hpp"

#include <numeric>

namespace otbook::lens {

LensSpace LensSpace::make(Integer p, Integer q) {
  if (p < 0) throw DomainError("lens space needs p >= 0");
  if (p == 0) {
    if (q != 1 && q != -1) throw DomainError("S^1 x S^2 arises from p = 0, q = +-1");
    return {0, 1};
  }
  if (p == 1) return {1, 0};
  const Integer r = mod(q, p);
  if (std::gcd(r, p) != 1) throw DomainError("L(p, q) needs gcd(p, q) = 1");
  return {p, r};
}

std::string LensSpace::str() const {
  if (is_s1xs2()) return "S^1 x S^2";
  if (is_s3()) return "S^3";
  return "L(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

std::vector<Integer> neg_cf_expand(const Rational& x) {
  if (x <= Rational(1)) throw DomainError("negative continued fraction needs x > 1, got " + x.str());
  std::vector<Integer> out;
  Rational cur = x;
  for (;;) {
    const Integer a = cur.ceil();
    out.push_back(a);
    const Rational rest = Rational(a) - cur;
    if (rest.is_zero()) break;
    cur = rest.reciprocal();
  }
  return out;
}

CfValue cf_evaluate(std::span<const Integer> coeffs) {
  if (coeffs.empty()) throw DomainError("cf_evaluate needs at least one coefficient");
  // acc = num/den with gcd(num, den) = 1; a - den/num keeps the pair coprime,
  // so no reduction is needed until the end.
  Integer num = coeffs.back(), den = 1;
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
    if (num == 0) return std::nullopt;
    const Integer next = checked::sub(checked::mul(coeffs[i], num), den);
    den = num;
    num = next;
  }
  return Rational(num, den);
}

LensSpace from_surgery_ratio(const CfValue& r) {
  if (!r) return LensSpace::make(1, 0);
  // Surgery coefficient -r = -p/q, with q > 0.
  if (r->num() >= 0) return LensSpace::make(r->num(), r->num() == 0 ? 1 : r->den());
  return LensSpace::make(-r->num(), -r->den());
}

LensSpace chain_to_lens(std::span<const Integer> framings) {
  if (framings.empty()) return LensSpace::make(1, 0);
  std::vector<Integer> a(framings.size());
  for (std::size_t i = 0; i < framings.size(); ++i) a[i] = checked::neg(framings[i]);
  return from_surgery_ratio(cf_evaluate(a));
}

LensSpace chain_to_lens(const FramedLinkDiagram& d) {
  std::vector<Integer> framings;
  for (std::size_t v : linear_chain(d)) {
    const Vertex& x = d.vertex(v);
    if (!x.framing.is_integer()) throw NotAChain("chain vertex '" + x.id + "' has non-integral framing");
    if (!x.is_unknot) throw NotAChain("chain vertex '" + x.id + "' is not an unknot");
    framings.push_back(x.framing.num());
  }
  return chain_to_lens(framings);
}

bool lens_equal(const LensSpace& a, const LensSpace& b, bool oriented) {
  if (a.p != b.p) return false;
  if (a.p <= 1) return true;
  const Integer p = a.p;
  const Integer prod = static_cast<Integer>((static_cast<__int128>(a.q) * b.q) % p);
  if (b.q == a.q || prod == 1) return true;
  if (oriented) return false;
  return mod(-a.q, p) == b.q || prod == p - 1;
}

Integer family_p(Integer h, Integer k) {
  return checked::add(checked::mul(h + 1, checked::sub(checked::mul(2, k), 1)), 2);
}

Integer family_q(Integer h, Integer k) { return checked::add(checked::mul(h + 1, k), 1); }

LensSpace family_lens(Integer h, Integer k) {
  if (h < 1 || k < 1) throw DomainError("the family is defined for h, k >= 1");
  return LensSpace::make(family_p(h, k), family_q(h, k));
}

}  // namespace otbook::lens
