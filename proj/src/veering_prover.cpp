#include "otbook/veering.hpp"

#include <map>

namespace otbook::veering {

namespace {

using mcg::Arc;
using mcg::Boundary;
using mcg::Letter;
using mcg::TwistWord;

// δ_y followed by the rest of the word: the ARC side condition on `rest`.
bool arc_condition(const std::vector<Letter>& rest, Arc arc) {
  const auto& info = mcg::arc_info(arc);
  for (const Letter& l : rest) {
    if (mcg::geometric_intersection(l.curve, arc) == 0) continue;
    const auto& c = mcg::curve_info(l.curve);
    if (c.parallel_to && info.has_endpoint(*c.parallel_to) && l.exponent > 0) continue;
    return false;
  }
  return true;
}

std::optional<CertNode> try_arc(const TwistWord& w, Boundary y) {
  if (w.empty()) return std::nullopt;
  const Letter& first = w[0];
  const auto& c = mcg::curve_info(first.curve);
  if (c.parallel_to != y || first.exponent < 1) return std::nullopt;
  std::vector<Letter> rest = w.letters();
  rest.front().exponent -= 1;
  if (rest.front().exponent == 0) rest.erase(rest.begin());
  for (Arc a : mcg::kAllArcs) {
    if (!mcg::arc_info(a).has_endpoint(y)) continue;
    if (arc_condition(rest, a)) return CertNode{Rule::arc, w, y, a, {}, std::string(citation(Rule::arc))};
  }
  return std::nullopt;
}

// Search over contiguous sub-words [i, j) of one word; COMP splits only at
// letter boundaries, trying the longest left factor first.
class GoalSearch {
 public:
  GoalSearch(const TwistWord& w, Boundary y) : word_(w), boundary_(y) {}

  std::optional<CertNode> run() {
    if (word_.empty()) return CertNode{Rule::pos, word_, boundary_, std::nullopt, {}, std::string(citation(Rule::pos))};
    return prove(0, word_.size());
  }

 private:
  std::optional<CertNode> prove(std::size_t i, std::size_t j) {
    auto key = std::make_pair(i, j);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::optional<CertNode> out = derive(i, j);
    memo_.emplace(key, out);
    return out;
  }

  std::optional<CertNode> derive(std::size_t i, std::size_t j) {
    const TwistWord sub = word_.slice(i, j);
    if (mcg::is_positive(sub)) return CertNode{Rule::pos, sub, boundary_, std::nullopt, {}, std::string(citation(Rule::pos))};
    if (auto arc = try_arc(sub, boundary_)) return arc;
    for (std::size_t m = j - 1; m > i; --m) {
      auto left = prove(i, m);
      if (!left) continue;
      auto right = prove(m, j);
      if (!right) continue;
      return CertNode{Rule::comp, sub, boundary_, std::nullopt, {std::move(*left), std::move(*right)},
                      std::string(citation(Rule::comp))};
    }
    return std::nullopt;
  }

  const TwistWord& word_;
  Boundary boundary_;
  std::map<std::pair<std::size_t, std::size_t>, std::optional<CertNode>> memo_;
};

}  // namespace

std::string_view name(Rule r) {
  switch (r) {
    case Rule::pos: return "POS";
    case Rule::comp: return "COMP";
    case Rule::arc: return "ARC";
  }
  return "?";
}

Rule rule_from_name(std::string_view s) {
  for (Rule r : {Rule::pos, Rule::comp, Rule::arc})
    if (name(r) == s) return r;
  throw LookupError("unknown rule '" + std::string(s) + "'");
}

std::string_view citation(Rule r) {
  switch (r) {
    case Rule::pos: return "Honda-Kazez-Matic: products of positive Dehn twists are right-veering";
    case Rule::comp: return "Honda-Kazez-Matic: a composition of right-veering diffeomorphisms is right-veering";
    case Rule::arc: return "Honda-Kazez-Matic, Corollary 3.4";
  }
  return "";
}

const CertNode* Certificate::goal(mcg::Boundary b) const {
  for (const auto& g : goals)
    if (g.boundary == b) return &g;
  return nullptr;
}

std::optional<CertNode> prove_goal(const TwistWord& word, Boundary boundary) {
  return GoalSearch(word, boundary).run();
}

std::optional<Certificate> prove_right_veering(const TwistWord& word) {
  Certificate cert{word, {}};
  for (Boundary b : mcg::PageSpec::four_holed_sphere().boundary_components) {
    auto node = prove_goal(word, b);
    if (!node) return std::nullopt;
    cert.goals.push_back(std::move(*node));
  }
  return cert;
}

bool arikan_tight(Integer a1, Integer a2, Integer a3) { return a1 >= 0 && a2 >= 0 && a3 >= 0; }

}  // namespace otbook::veering
