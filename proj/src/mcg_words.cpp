#include "otbook/mcg_words.hpp"

#include <algorithm>

namespace otbook::mcg {

namespace {

constexpr std::size_t index(Curve c) { return static_cast<std::size_t>(c); }

// Curve e separates {∂a, ∂b} from {∂c, ∂d}.
const std::array<NamedCurve, 5> kCurves = {{
    {Curve::a, Boundary::a, {}},
    {Curve::b, Boundary::b, {}},
    {Curve::c, Boundary::c, {}},
    {Curve::d, Boundary::d, {}},
    {Curve::e, std::nullopt, {{{Boundary::a, Boundary::b}, {Boundary::c, Boundary::d}}}},
}};

// Rows indexed by curve a, b, c, d, e. Both arcs stay on one side of e.
const std::array<NamedArc, 2> kArcs = {{
    {Arc::gamma_cd, {Boundary::c, Boundary::d}, {0, 0, 1, 1, 0}},
    {Arc::gamma_ab, {Boundary::a, Boundary::b}, {1, 1, 0, 0, 0}},
}};

}  // namespace

std::string_view name(Boundary b) {
  switch (b) {
    case Boundary::a: return "a";
    case Boundary::b: return "b";
    case Boundary::c: return "c";
    case Boundary::d: return "d";
  }
  return "?";
}

std::string_view name(Curve c) {
  switch (c) {
    case Curve::a: return "a";
    case Curve::b: return "b";
    case Curve::c: return "c";
    case Curve::d: return "d";
    case Curve::e: return "e";
  }
  return "?";
}

std::string_view name(Arc a) { return a == Arc::gamma_cd ? "gamma_cd" : "gamma_ab"; }

Boundary boundary_from_name(std::string_view s) {
  for (Boundary b : kAllBoundaries)
    if (name(b) == s) return b;
  throw LookupError("unknown boundary component '" + std::string(s) + "'");
}

Curve curve_from_name(std::string_view s) {
  for (Curve c : kAllCurves)
    if (name(c) == s) return c;
  throw LookupError("unknown curve '" + std::string(s) + "'");
}

Arc arc_from_name(std::string_view s) {
  for (Arc a : kAllArcs)
    if (name(a) == s) return a;
  throw LookupError("unknown arc '" + std::string(s) + "'");
}

PageSpec PageSpec::four_holed_sphere() { return {0, {Boundary::a, Boundary::b, Boundary::c, Boundary::d}}; }

PageSpec PageSpec::three_holed_sphere() { return {0, {Boundary::a, Boundary::b, Boundary::c}}; }

bool PageSpec::contains(Boundary b) const {
  return std::find(boundary_components.begin(), boundary_components.end(), b) != boundary_components.end();
}

void validate(const PageSpec& page) {
  if (page.genus != 0) throw DomainError("only genus-0 pages are modelled");
  const auto n = page.boundary_components.size();
  if (n != 3 && n != 4) throw DomainError("a page needs 3 or 4 boundary components");
  auto sorted = page.boundary_components;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DomainError("repeated boundary component");
}

const NamedCurve& curve_info(Curve c) { return kCurves[index(c)]; }

const NamedArc& arc_info(Arc a) { return kArcs[static_cast<std::size_t>(a)]; }

unsigned geometric_intersection(Curve c, Arc a) { return arc_info(a).intersection_row[index(c)]; }

unsigned geometric_intersection(std::string_view curve, std::string_view arc) {
  return geometric_intersection(curve_from_name(curve), arc_from_name(arc));
}

std::vector<Letter> normalize(std::vector<Letter> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (const Letter& l : letters) {
    if (l.exponent == 0) continue;
    if (!out.empty() && out.back().curve == l.curve) {
      out.back().exponent = checked::add(out.back().exponent, l.exponent);
      if (out.back().exponent == 0) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

TwistWord::TwistWord(std::vector<Letter> letters) : letters_(normalize(std::move(letters))) {}

TwistWord TwistWord::slice(std::size_t first, std::size_t last) const {
  if (first > last || last > letters_.size()) throw DomainError("slice out of range");
  return TwistWord({letters_.begin() + static_cast<std::ptrdiff_t>(first),
                    letters_.begin() + static_cast<std::ptrdiff_t>(last)});
}

TwistWord TwistWord::then(const TwistWord& rhs) const {
  std::vector<Letter> all = letters_;
  all.insert(all.end(), rhs.letters_.begin(), rhs.letters_.end());
  return TwistWord(std::move(all));
}

std::string TwistWord::str() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (const Letter& l : letters_) {
    if (!s.empty()) s += ' ';
    s += name(l.curve);
    if (l.exponent != 1) s += "^" + std::to_string(l.exponent);
  }
  return s;
}

TwistWord phi_word(Integer h, Integer k) {
  if (h < 1 || k < 1) throw DomainError("the family is defined for h, k >= 1");
  return TwistWord({{Curve::a, h}, {Curve::b, 1}, {Curve::c, 1}, {Curve::d, 1}, {Curve::e, -(k + 1)}});
}

bool is_positive(const TwistWord& w) {
  return std::all_of(w.letters().begin(), w.letters().end(), [](const Letter& l) { return l.exponent >= 1; });
}

}  // namespace otbook::mcg
