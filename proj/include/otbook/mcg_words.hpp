#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "otbook/rational.hpp"

// Table-driven model of the four-holed sphere page: boundary components,
// the five named simple closed curves, two named arcs, and twist words.
namespace otbook::mcg {

inline constexpr int kTableVersion = 1;

enum class Boundary { a, b, c, d };
enum class Curve { a, b, c, d, e };
enum class Arc { gamma_cd, gamma_ab };

inline constexpr std::array<Boundary, 4> kAllBoundaries = {Boundary::a, Boundary::b, Boundary::c,
                                                           Boundary::d};
inline constexpr std::array<Curve, 5> kAllCurves = {Curve::a, Curve::b, Curve::c, Curve::d, Curve::e};
inline constexpr std::array<Arc, 2> kAllArcs = {Arc::gamma_cd, Arc::gamma_ab};

std::string_view name(Boundary b);
std::string_view name(Curve c);
std::string_view name(Arc a);

Boundary boundary_from_name(std::string_view s);
Curve curve_from_name(std::string_view s);
Arc arc_from_name(std::string_view s);

struct PageSpec {
  int genus = 0;
  std::vector<Boundary> boundary_components;

  static PageSpec four_holed_sphere();
  static PageSpec three_holed_sphere();

  bool contains(Boundary b) const;
};

void validate(const PageSpec& page);

struct NamedCurve {
  Curve name;
  // Set for a, b, c, d. Empty for the separating curve e.
  std::optional<Boundary> parallel_to;
  // Only meaningful for separating curves.
  std::array<std::vector<Boundary>, 2> partition;

  bool is_boundary_parallel() const { return parallel_to.has_value(); }
};

struct NamedArc {
  Arc name;
  std::pair<Boundary, Boundary> endpoints;
  std::array<unsigned, kAllCurves.size()> intersection_row;

  bool has_endpoint(Boundary b) const { return endpoints.first == b || endpoints.second == b; }
};

const NamedCurve& curve_info(Curve c);
const NamedArc& arc_info(Arc a);

// Minimal geometric intersection number between a named curve and a named arc.
unsigned geometric_intersection(Curve c, Arc a);
unsigned geometric_intersection(std::string_view curve, std::string_view arc);

struct Letter {
  Curve curve;
  Integer exponent;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A product of Dehn twists, composed in the written (left-to-right) order.
///
/// Always held in normal form: no zero exponents and no two adjacent letters
/// on the same curve.
class TwistWord {
 public:
  TwistWord() = default;
  explicit TwistWord(std::vector<Letter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  // Contiguous sub-word [first, last).
  TwistWord slice(std::size_t first, std::size_t last) const;
  TwistWord then(const TwistWord& rhs) const;

  // e.g. "a^2 b c d e^-4"; the identity prints as "1".
  std::string str() const;

  friend bool operator==(const TwistWord&, const TwistWord&) = default;

 private:
  std::vector<Letter> letters_;
};

std::vector<Letter> normalize(std::vector<Letter> letters);

// δ_a^h δ_b δ_c δ_d δ_e^{-(k+1)}, defined for h, k >= 1.
TwistWord phi_word(Integer h, Integer k);

bool is_positive(const TwistWord& w);

}  // namespace otbook::mcg
