#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "otbook/homotopy_census.hpp"

using namespace otbook;
using namespace otbook::census;

namespace {

// d3 from first principles: c^2 = rho^T Q^{-1} rho by Cramer's rule, sigma from
// Jacobi eigenvalues.
Rational oracle_d3(const IntMatrix& q, const std::vector<Integer>& rho, int q_plus) {
  const std::size_t n = q.size();
  oracle::Grid g(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g[i][j] = q(i, j);
  const oracle::i128 det = oracle::det_gauss(g);
  REQUIRE(det != 0);
  oracle::i128 num = 0;  // c^2 * det
  for (std::size_t j = 0; j < n; ++j) {
    oracle::Grid gj = g;
    for (std::size_t i = 0; i < n; ++i) gj[i][j] = rho[i];
    num += oracle::det_gauss(gj) * rho[j];
  }
  const auto in = oracle::inertia(g);
  const int sigma = in.positive - in.negative;
  const int chi = 1 + static_cast<int>(n);
  // (num/det - 2 chi - 3 sigma) / 4 + q_plus
  const auto f = oracle::reduce(num - (2 * chi + 3 * sigma - 4 * q_plus) * det, 4 * det);
  return Rational(static_cast<Integer>(f.num), static_cast<Integer>(f.den));
}

Rational oracle_d3(const PM1Presentation& p) { return oracle_d3(p.linking, p.rot, p.q_plus); }

// Negative continued fraction by the textbook loop, on plain integers.
std::vector<Integer> oracle_expand(Integer p, Integer q) {
  std::vector<Integer> out;
  while (q != 0) {
    const Integer a = (p + q - 1) / q;
    out.push_back(a);
    const Integer r = a * q - p;
    p = q;
    q = r;
  }
  return out;
}

IntMatrix chain_matrix(const std::vector<Integer>& framings) {
  IntMatrix m(framings.size());
  for (std::size_t i = 0; i < framings.size(); ++i) {
    m(i, i) = framings[i];
    if (i + 1 < framings.size()) m(i, i + 1) = m(i + 1, i) = 1;
  }
  return m;
}

}  // namespace

TEST_CASE("d3 calibration") {
  CHECK(d3(PM1Presentation{}).d3 == Rational(-1, 2));

  const PM1Presentation cancel{IntMatrix{{0, -1}, {-1, -2}}, {0, 0}, 1};
  CHECK(d3(cancel).d3 == Rational(-1, 2));
  CHECK(oracle_d3(cancel) == Rational(-1, 2));

  const PM1Presentation fam{IntMatrix{{-1, -2, -2}, {-2, -1, -2}, {-2, -2, -4}}, {-1, -1, -2}, 2};
  const D3Data got = d3(fam);
  CHECK(got.d3 == Rational(1, 2));
  CHECK(got.c_squared == Rational(-1));
  CHECK(got.signature == -1);
  CHECK(got.euler_characteristic == 4);
  CHECK(got.solution == std::vector<Rational>{0, 0, Rational(1, 2)});
  CHECK(oracle_d3(fam) == Rational(1, 2));

  CHECK_THROWS_AS(d3(PM1Presentation{IntMatrix{{0}}, {0}, 0}), SingularMatrix);
  CHECK_THROWS_AS(d3(PM1Presentation{IntMatrix{{-2}}, {0, 0}, 0}), DomainError);
}

TEST_CASE("family presentation matches the expanded contact diagram") {
  const auto p = PM1Presentation::from_contact(contact::expand_to_unit_coefficients(contact::presentation_for(1, 1)));
  CHECK(p.q_plus == 2);
  CHECK(p.linking.size() == 3);
  std::multiset<Integer> diag, rot(p.rot.begin(), p.rot.end());
  for (std::size_t i = 0; i < 3; ++i) diag.insert(p.linking(i, i));
  CHECK(diag == std::multiset<Integer>{-4, -1, -1});
  CHECK(rot == std::multiset<Integer>{-2, -1, -1});
  CHECK(d3(p).d3 == Rational(1, 2));
  CHECK_THROWS_AS(PM1Presentation::from_contact(contact::presentation_for(1, 1)), UnsupportedCoefficient);
}

TEST_CASE("family d3 against the Cramer oracle") {
  for (Integer h = 1; h <= 6; ++h)
    for (Integer k = 1; k <= 6; ++k) {
      const auto p =
          PM1Presentation::from_contact(contact::expand_to_unit_coefficients(contact::presentation_for(h, k)));
      CHECK(d3(p).d3 == oracle_d3(p));
    }
}

TEST_CASE("inserting a cancelling push-off pair never changes d3") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> len(1, 6), stab(0, 4), link(-2, 2);
  int trials = 0;
  while (trials < 100) {
    // A chain of stabilized unknots, all with -1 contact surgery.
    const int n = len(rng);
    std::vector<Integer> tb, rot;
    for (int i = 0; i < n; ++i) {
      const int s = stab(rng);
      const int neg = std::uniform_int_distribution<int>(0, s)(rng);
      tb.push_back(-1 - s);
      rot.push_back(s - 2 * neg);
    }
    IntMatrix q(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      q(i, i) = tb[i] - 1;
      if (i + 1 < n) q(i, i + 1) = q(i + 1, i) = 1;
    }
    if (determinant(q) == 0) continue;
    ++trials;
    const PM1Presentation base{q, rot, 0};

    // K is a Legendrian unknot linking the chain arbitrarily; add K with +1 and
    // a push-off of K with -1. The push-offs link each other at tb(K).
    const int s = stab(rng);
    const Integer tk = -1 - s, rk = s - 2 * std::uniform_int_distribution<int>(0, s)(rng);
    std::vector<Integer> lk(static_cast<std::size_t>(n));
    for (auto& v : lk) v = link(rng);
    IntMatrix big(static_cast<std::size_t>(n + 2));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) big(i, j) = q(i, j);
    for (int i = 0; i < n; ++i) big(i, n) = big(n, i) = big(i, n + 1) = big(n + 1, i) = lk[i];
    big(n, n) = tk + 1;
    big(n + 1, n + 1) = tk - 1;
    big(n, n + 1) = big(n + 1, n) = tk;
    auto rot2 = rot;
    rot2.push_back(rk);
    rot2.push_back(rk);
    const PM1Presentation with_pair{big, rot2, 1};

    const Rational before = d3(base).d3;
    CHECK(d3(with_pair).d3 == before);
    CHECK(oracle_d3(base) == before);
  }
}

TEST_CASE("tight census examples") {
  const auto l43 = tight_census(lens::LensSpace{4, 3});
  REQUIRE(l43.size() == 1);
  CHECK(l43[0].chain == std::vector<Integer>{-2, -2, -2});
  CHECK(l43[0].rot == std::vector<Integer>{0, 0, 0});
  CHECK(l43[0].d3 == Rational(1, 4));

  const auto l41 = tight_census(lens::LensSpace{4, 1});
  REQUIRE(l41.size() == 3);
  CHECK(l41[0].chain == std::vector<Integer>{-4});
  std::vector<Integer> rots;
  for (const auto& t : l41) rots.push_back(t.rot[0]);
  CHECK(rots == std::vector<Integer>{-2, 0, 2});

  CHECK(tight_census(lens::LensSpace{2, 1}).size() == 1);
  CHECK_THROWS_AS(tight_census(lens::LensSpace{1, 0}), DomainError);
  CHECK_THROWS_AS(tight_census(lens::LensSpace{0, 1}), DomainError);
}

TEST_CASE("census counts, rotation ranges and d3 values for p <= 60") {
  for (Integer p = 2; p <= 60; ++p)
    for (Integer q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const auto a = oracle_expand(p, q);
      Integer expected = 1;
      std::vector<Integer> chain;
      for (Integer x : a) {
        expected *= x - 1;
        chain.push_back(-x);
      }
      CHECK(census_chain(lens::LensSpace{p, q}) == chain);
      CHECK(census_size_formula(chain) == expected);
      const auto all = tight_census(lens::LensSpace{p, q});
      REQUIRE(static_cast<Integer>(all.size()) == expected);

      std::set<std::vector<Integer>> seen;
      for (const auto& t : all) {
        CHECK(t.chain == chain);
        for (std::size_t i = 0; i < chain.size(); ++i) {
          CHECK(t.rot[i] >= chain[i] + 2);
          CHECK(t.rot[i] <= -chain[i] - 2);
          CHECK((t.rot[i] - chain[i]) % 2 == 0);
        }
        seen.insert(t.rot);
        // d3 denominators divide 4p.
        CHECK((4 * p) % t.d3.den() == 0);
      }
      CHECK(seen.size() == all.size());
      CHECK(std::is_sorted(all.begin(), all.end(), [](const auto& x, const auto& y) { return x.rot < y.rot; }));
      if (p <= 12)
        for (const auto& t : all) CHECK(t.d3 == oracle_d3(chain_matrix(chain), t.rot, 0));
    }
}

TEST_CASE("overtwisted verdict") {
  const auto r = overtwisted_verdict(1, 1);
  CHECK(r.data.d3 == Rational(1, 2));
  CHECK(r.census_d3 == std::vector<Rational>{Rational(1, 4)});
  CHECK(r.verdict == Verdict::overtwisted_certified);
  CHECK(name(r.verdict) == "OVERTWISTED_CERTIFIED");
  CHECK_THROWS_AS(overtwisted_verdict(0, 1), DomainError);

  for (Integer h = 1; h <= 10; ++h)
    for (Integer k = 1; k <= 10; ++k) {
      const auto v = overtwisted_verdict(h, k);
      const bool match = std::find(v.census_d3.begin(), v.census_d3.end(), v.data.d3) != v.census_d3.end();
      CHECK((v.verdict == Verdict::overtwisted_certified) == !match);
      CHECK(v.lens == lens::family_lens(h, k));
      CHECK(std::is_sorted(v.census_d3.begin(), v.census_d3.end()));
      CHECK(v.census_size == static_cast<std::size_t>(census_size_formula(census_chain(v.lens))));
    }
}
