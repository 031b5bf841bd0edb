#include <algorithm>

#include "otbook/veering.hpp"

namespace otbook::veering {

namespace {

// arikan_tight must be false exactly when some exponent is negative.
bool arikan_criterion_holds_on_grid(Integer bound) {
  for (Integer a = -bound; a <= bound; ++a)
    for (Integer b = -bound; b <= bound; ++b)
      for (Integer c = -bound; c <= bound; ++c)
        if (arikan_tight(a, b, c) == (a < 0 || b < 0 || c < 0)) return false;
  return true;
}

}  // namespace

std::string_view name(StepKind k) {
  switch (k) {
    case StepKind::axiom: return "axiom";
    case StepKind::computed: return "computed";
    case StepKind::conclusion: return "conclusion";
  }
  return "?";
}

int DestabilizationReport::axiom_count() const {
  return static_cast<int>(std::count_if(steps.begin(), steps.end(), [](const ReportStep& s) { return s.kind == StepKind::axiom; }));
}

int DestabilizationReport::unverified_count() const {
  return static_cast<int>(std::count_if(steps.begin(), steps.end(), [](const ReportStep& s) {
    return s.kind != StepKind::axiom && !s.verified;
  }));
}

DestabilizationReport destabilization_report(Integer h, Integer k, const census::OvertwistedReport& ot,
                                             const Certificate& rv) {
  const mcg::TwistWord word = mcg::phi_word(h, k);
  const CheckResult check = check_certificate(rv, word);
  if (!check.valid) throw InvalidCertificate("right-veering certificate rejected: " + check.reason);
  if (ot.h != h || ot.k != k) throw DomainError("overtwistedness report is for different parameters");

  DestabilizationReport r;
  r.h = h;
  r.k = k;

  r.steps.push_back({"destabilized_form", StepKind::axiom,
                     "a destabilization of (S, Phi) is an open book (S', t1^a1 t2^a2 t3^a3) with S' a three-holed "
                     "sphere and a_i integers",
                     "the mapping class group of the three-holed sphere rel boundary is free abelian on the three "
                     "boundary-parallel twists",
                     true,
                     {}});

  if (ot.verdict == census::Verdict::overtwisted_certified) {
    const bool recheck = !std::binary_search(ot.census_d3.begin(), ot.census_d3.end(), ot.data.d3);
    r.steps.push_back({"overtwisted", StepKind::computed, "the contact structure of (S, Phi) is overtwisted",
                       ot.justification, recheck, {}});
  } else {
    r.steps.push_back({"overtwisted", StepKind::axiom, "the contact structure of (S, Phi) is overtwisted",
                       "Lekili, Theorem 1.3: the Ozsvath-Szabo contact invariant vanishes; Stein fillable structures "
                       "have nonvanishing invariant, and on lens spaces every contact structure is overtwisted or "
                       "Stein fillable",
                       true,
                       {}});
  }

  r.steps.push_back({"negative_exponent", StepKind::computed,
                     "some a_i < 0, since (S', t1^a1 t2^a2 t3^a3) is tight iff every a_i >= 0",
                     "Arikan, Theorem 1.2; arikan_tight checked on -3 <= a_i <= 3",
                     arikan_criterion_holds_on_grid(3),
                     {"destabilized_form", "overtwisted"}});

  r.steps.push_back({"stabilization_not_right_veering", StepKind::axiom,
                     "if some a_i < 0, every stabilization of (S', t1^a1 t2^a2 t3^a3) to a four-holed sphere open "
                     "book is not right-veering",
                     "Lekili, proof of Theorem 1.2",
                     true,
                     {"negative_exponent"}});

  r.steps.push_back({"right_veering", StepKind::computed, "Phi = " + word.str() + " is right-veering",
                     "certificate re-validated by the independent checker (" + std::to_string(check.nodes_checked) +
                         " nodes)",
                     check.valid,
                     {}});

  r.steps.push_back({"not_destabilizable", StepKind::conclusion,
                     "(S, Phi) is not destabilizable: a destabilization would make Phi not right-veering",
                     "contradiction between stabilization_not_right_veering and right_veering",
                     r.unverified_count() == 0,
                     {"stabilization_not_right_veering", "right_veering"}});
  r.conclusion = r.unverified_count() == 0 ? "NOT_DESTABILIZABLE" : "UNVERIFIED";
  return r;
}

}  // namespace otbook::veering
