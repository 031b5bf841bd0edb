#include "doctest.h"
#include "otbook/veering.hpp"

using namespace otbook;
using namespace otbook::veering;
using mcg::Arc;
using mcg::Boundary;
using mcg::Curve;
using mcg::TwistWord;

namespace {

// Shape of a certificate node, e.g. "COMP(POS,ARC[gamma_cd])".
std::string shape(const CertNode& n) {
  std::string s(name(n.rule));
  if (n.arc) s += "[" + std::string(mcg::name(*n.arc)) + "]";
  if (!n.children.empty()) {
    s += "(";
    for (std::size_t i = 0; i < n.children.size(); ++i) s += (i ? "," : "") + shape(n.children[i]);
    s += ")";
  }
  return s;
}

TwistWord word(std::initializer_list<mcg::Letter> l) { return TwistWord(std::vector<mcg::Letter>(l)); }

}  // namespace

TEST_CASE("the family certificate has the expected shape at every boundary") {
  for (Integer h : {1, 2, 7})
    for (Integer k : {1, 3}) {
      const TwistWord w = mcg::phi_word(h, k);
      const auto cert = prove_right_veering(w);
      REQUIRE(cert.has_value());
      CHECK(cert->goals.size() == 4);

      const CertNode* d = cert->goal(Boundary::d);
      REQUIRE(d);
      CHECK(shape(*d) == "COMP(POS,ARC[gamma_cd])");
      CHECK(d->children[0].word == word({{Curve::a, h}, {Curve::b, 1}, {Curve::c, 1}}));
      CHECK(d->children[1].word == word({{Curve::d, 1}, {Curve::e, -(k + 1)}}));

      const CertNode* c = cert->goal(Boundary::c);
      REQUIRE(c);
      CHECK(shape(*c) == "COMP(POS,ARC[gamma_cd])");
      CHECK(c->children[1].word == word({{Curve::c, 1}, {Curve::d, 1}, {Curve::e, -(k + 1)}}));

      const CertNode* b = cert->goal(Boundary::b);
      REQUIRE(b);
      CHECK(shape(*b) == "COMP(POS,ARC[gamma_ab])");
      CHECK(b->children[0].word == word({{Curve::a, h}}));

      const CertNode* a = cert->goal(Boundary::a);
      REQUIRE(a);
      CHECK(shape(*a) == "ARC[gamma_ab]");
      CHECK(a->word == w);

      const auto res = check_certificate(*cert, w);
      CHECK(res.valid);
      CHECK(res.reason.empty());
    }
}

TEST_CASE("the h = 0 analogue gets no certificate at ∂a") {
  const TwistWord w = word({{Curve::b, 1}, {Curve::c, 1}, {Curve::d, 1}, {Curve::e, -2}});
  CHECK_FALSE(prove_right_veering(w).has_value());
  CHECK_FALSE(prove_goal(w, Boundary::a).has_value());
  CHECK(prove_goal(w, Boundary::d).has_value());
}

TEST_CASE("positive words and bare negative twists") {
  const auto pos = prove_right_veering(word({{Curve::a, 3}, {Curve::c, 1}}));
  REQUIRE(pos.has_value());
  for (const auto& g : pos->goals) CHECK(g.rule == Rule::pos);
  CHECK(check_certificate(*pos).valid);

  const TwistWord neg = word({{Curve::e, -2}});
  CHECK_FALSE(prove_right_veering(neg).has_value());
  for (Boundary b : mcg::kAllBoundaries) CHECK_FALSE(prove_goal(neg, b).has_value());
}

TEST_CASE("monotonicity: bumping a positive exponent keeps the certificate") {
  for (Integer h = 1; h <= 5; ++h)
    for (Integer k = 1; k <= 5; ++k) {
      const TwistWord w = mcg::phi_word(h, k);
      REQUIRE(prove_right_veering(w).has_value());
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i].exponent < 1) continue;
        for (Integer bump = 1; bump <= 3; ++bump) {
          auto letters = w.letters();
          letters[i].exponent += bump;
          const TwistWord bumped(letters);
          const auto cert = prove_right_veering(bumped);
          REQUIRE(cert.has_value());
          CHECK(check_certificate(*cert, bumped).valid);
        }
      }
    }
}

TEST_CASE("the checker rejects tampered certificates") {
  const TwistWord w = mcg::phi_word(2, 2);
  const auto cert = prove_right_veering(w);
  REQUIRE(cert.has_value());

  SUBCASE("wrong expected word") { CHECK_FALSE(check_certificate(*cert, mcg::phi_word(2, 3)).valid); }
  SUBCASE("missing goal") {
    Certificate c = *cert;
    c.goals.pop_back();
    CHECK_FALSE(check_certificate(c).valid);
  }
  SUBCASE("POS on a negative word") {
    Certificate c = *cert;
    c.goals[0] = CertNode{Rule::pos, w, c.goals[0].boundary, std::nullopt, {}, ""};
    CHECK_FALSE(check_certificate(c).valid);
  }
  SUBCASE("ARC with the wrong arc") {
    Certificate c = *cert;
    for (auto& g : c.goals)
      if (g.boundary == Boundary::a) g.arc = Arc::gamma_cd;
    CHECK_FALSE(check_certificate(c).valid);
  }
  SUBCASE("COMP whose children do not multiply to the word") {
    Certificate c = *cert;
    for (auto& g : c.goals)
      if (g.boundary == Boundary::d) g.children[0].word = word({{Curve::a, 2}, {Curve::b, 1}});
    CHECK_FALSE(check_certificate(c).valid);
  }
  SUBCASE("ARC whose rest has a negative twist on an endpoint curve") {
    const TwistWord bad = word({{Curve::d, 1}, {Curve::c, -1}});
    Certificate c{bad, {}};
    for (Boundary b : mcg::kAllBoundaries) c.goals.push_back(CertNode{Rule::arc, bad, b, Arc::gamma_cd, {}, ""});
    CHECK_FALSE(check_certificate(c).valid);
  }
  SUBCASE("COMP at a different boundary than its children") {
    Certificate c = *cert;
    for (auto& g : c.goals)
      if (g.boundary == Boundary::d) g.children[0].boundary = Boundary::a;
    CHECK_FALSE(check_certificate(c).valid);
  }
}

TEST_CASE("arikan_tight") {
  CHECK(arikan_tight(0, 0, 0));
  CHECK(arikan_tight(2, 1, 5));
  CHECK_FALSE(arikan_tight(1, -1, 3));
  for (Integer a = -3; a <= 3; ++a)
    for (Integer b = -3; b <= 3; ++b)
      for (Integer c = -3; c <= 3; ++c) CHECK(arikan_tight(a, b, c) == (a >= 0 && b >= 0 && c >= 0));
}

TEST_CASE("destabilization report") {
  const auto ot = census::overtwisted_verdict(1, 1);
  const auto cert = prove_right_veering(mcg::phi_word(1, 1));
  REQUIRE(cert.has_value());
  const auto rep = destabilization_report(1, 1, ot, *cert);
  CHECK(rep.conclusion == "NOT_DESTABILIZABLE");
  CHECK(rep.axiom_count() == 2);
  CHECK(rep.unverified_count() == 0);
  for (const auto& s : rep.steps)
    if (s.kind == StepKind::axiom) CHECK_FALSE(s.citation.empty());

  census::OvertwistedReport inconclusive = ot;
  inconclusive.verdict = census::Verdict::inconclusive;
  const auto rep2 = destabilization_report(1, 1, inconclusive, *cert);
  CHECK(rep2.conclusion == "NOT_DESTABILIZABLE");
  CHECK(rep2.axiom_count() == 3);
  bool cites = false;
  for (const auto& s : rep2.steps)
    if (s.id == "overtwisted") cites = s.kind == StepKind::axiom && s.citation.find("Lekili") != std::string::npos;
  CHECK(cites);

  Certificate broken = *cert;
  broken.goals.clear();
  CHECK_THROWS_AS(destabilization_report(1, 1, ot, broken), InvalidCertificate);
  CHECK_THROWS_AS(destabilization_report(2, 1, ot, *prove_right_veering(mcg::phi_word(2, 1))), DomainError);
}
