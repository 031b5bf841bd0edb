// Certificate validation. Deliberately shares nothing with the prover beyond
// the curve/arc tables: words are compared as flat sequences of unit twists.

#include <cstdlib>

#include "otbook/veering.hpp"

namespace otbook::veering {

namespace {

struct Unit {
  mcg::Curve curve;
  int sign;
  bool operator==(const Unit&) const = default;
};

std::vector<Unit> flatten(const mcg::TwistWord& w) {
  std::vector<Unit> out;
  for (const auto& l : w.letters()) {
    const int s = l.exponent > 0 ? 1 : -1;
    for (Integer t = 0; t < std::abs(l.exponent); ++t) out.push_back({l.curve, s});
  }
  return out;
}

// Curve x is parallel to boundary ∂x.
bool parallel(mcg::Curve c, mcg::Boundary b) { return mcg::name(c) == mcg::name(b); }

class Checker {
 public:
  std::size_t nodes = 0;

  // Empty string on success.
  std::string check(const CertNode& n, mcg::Boundary goal) {
    ++nodes;
    if (n.boundary != goal) return "node concludes at ∂" + std::string(mcg::name(n.boundary)) + ", expected ∂" +
                                   std::string(mcg::name(goal));
    const auto units = flatten(n.word);
    switch (n.rule) {
      case Rule::pos:
        if (!n.children.empty()) return "POS node has children";
        for (const auto& u : units)
          if (u.sign < 0) return "POS applied to non-positive word " + n.word.str();
        return {};
      case Rule::comp: {
        if (n.children.size() != 2) return "COMP node needs exactly two children";
        auto joined = flatten(n.children[0].word);
        auto right = flatten(n.children[1].word);
        joined.insert(joined.end(), right.begin(), right.end());
        if (joined != units) return "COMP children do not compose to " + n.word.str();
        for (const auto& c : n.children)
          if (auto e = check(c, goal); !e.empty()) return e;
        return {};
      }
      case Rule::arc: {
        if (!n.children.empty()) return "ARC node has children";
        if (!n.arc) return "ARC node without an arc";
        const auto [x, y] = mcg::arc_info(*n.arc).endpoints;
        if (goal != x && goal != y) return "arc " + std::string(mcg::name(*n.arc)) + " does not end on the goal";
        if (units.empty() || units[0].sign != 1 || !parallel(units[0].curve, goal))
          return "ARC word " + n.word.str() + " does not start with the boundary twist";
        for (std::size_t i = 1; i < units.size(); ++i) {
          const Unit& u = units[i];
          if (mcg::geometric_intersection(u.curve, *n.arc) == 0) continue;
          if (u.sign == 1 && (parallel(u.curve, x) || parallel(u.curve, y))) continue;
          return "ARC side condition fails for curve " + std::string(mcg::name(u.curve)) + " in " + n.word.str();
        }
        return {};
      }
    }
    return "unknown rule";
  }
};

}  // namespace

CheckResult check_certificate(const Certificate& cert, const std::optional<mcg::TwistWord>& expected) {
  CheckResult r;
  if (expected && flatten(*expected) != flatten(cert.word)) {
    r.reason = "certificate is about " + cert.word.str() + ", expected " + expected->str();
    return r;
  }
  const auto boundary = mcg::PageSpec::four_holed_sphere().boundary_components;
  if (cert.goals.size() != boundary.size()) {
    r.reason = "certificate has " + std::to_string(cert.goals.size()) + " goals, page has " +
               std::to_string(boundary.size()) + " boundary components";
    return r;
  }
  Checker checker;
  for (auto b : boundary) {
    const CertNode* root = nullptr;
    for (const auto& g : cert.goals)
      if (g.boundary == b) root = &g;
    if (!root) {
      r.reason = "no goal at ∂" + std::string(mcg::name(b));
      return r;
    }
    if (flatten(root->word) != flatten(cert.word)) {
      r.reason = "goal at ∂" + std::string(mcg::name(b)) + " is about a different word";
      return r;
    }
    if (auto e = checker.check(*root, b); !e.empty()) {
      r.reason = e;
      r.nodes_checked = checker.nodes;
      return r;
    }
  }
  r.valid = true;
  r.nodes_checked = checker.nodes;
  return r;
}

}  // namespace otbook::veering
