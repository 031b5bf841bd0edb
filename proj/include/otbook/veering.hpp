#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "otbook/homotopy_census.hpp"
#include "otbook/mcg_words.hpp"

// Right-veering certificates for twist words on the four-holed sphere.
//
// Rules (each node concludes "word is right-veering at boundary"):
//   POS   every exponent of the word is >= 1.
//   COMP  word = U V with U and V both certified at the same boundary.
//   ARC   for an arc from ∂x to ∂y: word = δ_y W, where every curve of W is
//         disjoint from the arc, or is parallel to an endpoint of the arc and
//         appears with positive exponent.
// The prover is sound but incomplete: a missing certificate means "unknown",
// never "not right-veering".
namespace otbook::veering {

enum class Rule { pos, comp, arc };
std::string_view name(Rule r);
Rule rule_from_name(std::string_view s);

struct CertNode {
  Rule rule = Rule::pos;
  mcg::TwistWord word;
  mcg::Boundary boundary = mcg::Boundary::a;
  std::optional<mcg::Arc> arc;      // ARC only
  std::vector<CertNode> children;   // COMP only: {U, V}
  std::string citation;

  friend bool operator==(const CertNode&, const CertNode&) = default;
};

struct Certificate {
  mcg::TwistWord word;
  std::vector<CertNode> goals;  // one root per boundary component

  const CertNode* goal(mcg::Boundary b) const;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

// Citation strings carried by rule nodes.
std::string_view citation(Rule r);

std::optional<CertNode> prove_goal(const mcg::TwistWord& word, mcg::Boundary boundary);
std::optional<Certificate> prove_right_veering(const mcg::TwistWord& word);

struct CheckResult {
  bool valid = false;
  std::string reason;
  std::size_t nodes_checked = 0;
};

/// Independent checker: re-derives every side condition from the curve/arc
/// tables on flattened words, without going through the prover. When
/// `expected` is given, the certificate must be about that word.
CheckResult check_certificate(const Certificate& cert, const std::optional<mcg::TwistWord>& expected = std::nullopt);

// Tightness criterion for τ1^a1 τ2^a2 τ3^a3 on the three-holed sphere.
bool arikan_tight(Integer a1, Integer a2, Integer a3);

enum class StepKind { axiom, computed, conclusion };
std::string_view name(StepKind k);

struct ReportStep {
  std::string id;
  StepKind kind = StepKind::computed;
  std::string statement;
  std::string citation;  // external source for axioms, evidence for computed steps
  bool verified = false;
  std::vector<std::string> depends_on;
};

struct DestabilizationReport {
  Integer h = 0, k = 0;
  std::vector<ReportStep> steps;
  std::string conclusion;

  int axiom_count() const;
  int unverified_count() const;
};

/// Assembles the non-destabilizability argument. Throws InvalidCertificate if
/// `rv` does not validate for phi_word(h, k), and DomainError if `ot` belongs
/// to other parameters.
DestabilizationReport destabilization_report(Integer h, Integer k, const census::OvertwistedReport& ot,
                                             const Certificate& rv);

}  // namespace otbook::veering
