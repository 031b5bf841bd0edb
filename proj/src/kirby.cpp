#include "otbook/kirby.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "otbook/contact_presentation.hpp"

namespace otbook::kirby {

namespace {

std::string describe(const MoveSpec& m) {
  std::ostringstream os;
  os << name(m.kind) << "(" << m.vertex;
  if (!m.other.empty()) os << ", " << m.other;
  if (m.sign != 0) os << ", sign " << m.sign;
  if (m.split) os << ", split " << *m.split;
  os << ")";
  return os.str();
}

// Validates the invariants across one move and appends the record.
FramedLinkDiagram finish(const FramedLinkDiagram& before, FramedLinkDiagram after, const MoveSpec& spec,
                         std::optional<int> signature_shift) {
  MoveRecord r{spec, h1_order(before), h1_order(after), std::nullopt, std::nullopt};
  if (before.all_integer()) r.signature_before = signature(before.linking_matrix());
  if (after.all_integer()) r.signature_after = signature(after.linking_matrix());
  if (r.before != r.after)
    throw InvariantViolation(describe(spec) + ": |H1| changed from " + r.before.str() + " to " + r.after.str());
  if (signature_shift && r.signature_before && r.signature_after &&
      *r.signature_after - *r.signature_before != *signature_shift) {
    throw InvariantViolation(describe(spec) + ": signature changed from " + std::to_string(*r.signature_before) +
                             " to " + std::to_string(*r.signature_after));
  }
  after.append_log(std::move(r));
  return after;
}

void require_sign(int s, const char* what) {
  if (s != 1 && s != -1) throw IllegalMove(std::string(what) + ": sign must be +1 or -1");
}

}  // namespace

FramedLinkDiagram blow_down(const FramedLinkDiagram& d, std::string_view v) {
  const std::size_t iv = d.index_of(v);
  const Vertex& bv = d.vertex(iv);
  if (bv.framing != Rational(1) && bv.framing != Rational(-1))
    throw IllegalMove("blow_down(" + bv.id + "): framing " + bv.framing.str() + " is not +-1");
  if (!bv.is_unknot) throw IllegalMove("blow_down(" + bv.id + "): component is not an unknot");
  const Integer eps = bv.framing.num();

  FramedLinkDiagram out = d;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i == iv) continue;
    const Integer li = d.linking(i, iv);
    if (li == 0) continue;
    out.vertex(i).framing -= Rational(checked::mul(eps, checked::mul(li, li)));
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (j == iv) continue;
      const Integer lj = d.linking(j, iv);
      if (lj != 0) out.set_linking(i, j, checked::sub(d.linking(i, j), checked::mul(eps, checked::mul(li, lj))));
    }
  }
  out.remove_vertex(iv);
  MoveSpec spec{MoveKind::blow_down, bv.id, {}, static_cast<int>(eps), std::nullopt, {}};
  return finish(d, std::move(out), spec, -static_cast<int>(eps));
}

FramedLinkDiagram blow_up(const FramedLinkDiagram& d, int sign, const std::map<std::string, Integer>& star,
                          std::string id) {
  require_sign(sign, "blow_up");
  if (id.empty()) id = d.fresh_id("x");
  std::vector<Integer> s(d.size(), 0);
  for (const auto& [name, lk] : star) s[d.index_of(name)] = lk;

  FramedLinkDiagram out = d;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (s[i] == 0) continue;
    out.vertex(i).framing += Rational(checked::mul(sign, checked::mul(s[i], s[i])));
    for (std::size_t j = i + 1; j < d.size(); ++j)
      if (s[j] != 0) out.set_linking(i, j, checked::add(d.linking(i, j), checked::mul(sign, checked::mul(s[i], s[j]))));
  }
  const std::size_t nv = out.add_vertex(id, Rational(sign), true);
  for (std::size_t i = 0; i < d.size(); ++i)
    if (s[i] != 0) out.set_linking(i, nv, s[i]);

  std::map<std::string, Integer> recorded;
  for (const auto& [name, lk] : star)
    if (lk != 0) recorded[name] = lk;
  MoveSpec spec{MoveKind::blow_up, id, {}, sign, std::nullopt, std::move(recorded)};
  return finish(d, std::move(out), spec, sign);
}

FramedLinkDiagram inverse_slam_dunk(const FramedLinkDiagram& d, std::string_view v, std::optional<Integer> split,
                                    std::string leaf_id) {
  const std::size_t iv = d.index_of(v);
  const Rational r = d.vertex(iv).framing;
  Integer n;
  if (split) {
    n = *split;
    if (Rational(n) == r)
      throw IllegalMove("inverse_slam_dunk(" + std::string(v) + "): split equals the framing, leaf would be infinite");
  } else {
    if (r.is_integer())
      throw IllegalMove("inverse_slam_dunk(" + std::string(v) + "): framing is already integral and no split given");
    n = r.floor();
  }
  const Rational x = (Rational(n) - r).reciprocal();
  if (leaf_id.empty()) leaf_id = d.fresh_id("l");

  FramedLinkDiagram out = d;
  out.vertex(iv).framing = Rational(n);
  const std::size_t leaf = out.add_vertex(leaf_id, x, true);
  out.set_linking(iv, leaf, 1);
  MoveSpec spec{MoveKind::inverse_slam_dunk, std::string(v), leaf_id, 0, n, {}};
  return finish(d, std::move(out), spec, std::nullopt);
}

FramedLinkDiagram slam_dunk(const FramedLinkDiagram& d, std::string_view leaf) {
  const std::size_t il = d.index_of(leaf);
  const auto nb = d.neighbors(il);
  if (nb.size() != 1)
    throw IllegalMove("slam_dunk(" + std::string(leaf) + "): leaf must have exactly one neighbour, has " +
                      std::to_string(nb.size()));
  const std::size_t iv = nb.front();
  if (std::abs(d.linking(il, iv)) != 1)
    throw IllegalMove("slam_dunk(" + std::string(leaf) + "): leaf must be a meridian (linking +-1)");
  if (!d.vertex(il).is_unknot) throw IllegalMove("slam_dunk(" + std::string(leaf) + "): leaf is not an unknot");
  const Rational& n = d.vertex(iv).framing;
  if (!n.is_integer())
    throw IllegalMove("slam_dunk(" + std::string(leaf) + "): neighbour framing " + n.str() + " is not integral");
  const Rational& x = d.vertex(il).framing;
  if (x.is_zero()) throw IllegalMove("slam_dunk(" + std::string(leaf) + "): 0-framed leaf gives a pole");

  FramedLinkDiagram out = d;
  out.vertex(iv).framing = n - x.reciprocal();
  out.remove_vertex(il);
  MoveSpec spec{MoveKind::slam_dunk, std::string(leaf), d.vertex(iv).id, 0, std::nullopt, {}};
  return finish(d, std::move(out), spec, std::nullopt);
}

FramedLinkDiagram handle_slide(const FramedLinkDiagram& d, std::string_view i, std::string_view j, int sign) {
  require_sign(sign, "handle_slide");
  const std::size_t a = d.index_of(i), b = d.index_of(j);
  if (a == b) throw IllegalMove("handle_slide: cannot slide a component over itself");
  const Rational& fa = d.vertex(a).framing;
  const Rational& fb = d.vertex(b).framing;
  if (!fa.is_integer() || !fb.is_integer())
    throw IllegalMove("handle_slide(" + std::string(i) + ", " + std::string(j) + "): framings must be integral");

  const Integer lab = d.linking(a, b);
  FramedLinkDiagram out = d;
  out.vertex(a).framing = fa + fb + Rational(checked::mul(2 * sign, lab));
  // The band sum of two unknots is taken to be an unknot; only the scripted reduction relies on it.
  out.vertex(a).is_unknot = d.vertex(a).is_unknot && d.vertex(b).is_unknot;
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (k == a || k == b) continue;
    out.set_linking(a, k, checked::add(d.linking(a, k), checked::mul(sign, d.linking(b, k))));
  }
  out.set_linking(a, b, checked::add(lab, checked::mul(sign, fb.num())));
  MoveSpec spec{MoveKind::handle_slide, std::string(i), std::string(j), sign, std::nullopt, {}};
  return finish(d, std::move(out), spec, 0);
}

FramedLinkDiagram reorient(const FramedLinkDiagram& d, std::string_view v) {
  const std::size_t iv = d.index_of(v);
  FramedLinkDiagram out = d;
  for (std::size_t k = 0; k < d.size(); ++k)
    if (k != iv) out.set_linking(iv, k, checked::neg(d.linking(iv, k)));
  MoveSpec spec{MoveKind::reorient, std::string(v), {}, 0, std::nullopt, {}};
  return finish(d, std::move(out), spec, 0);
}

FramedLinkDiagram apply(const FramedLinkDiagram& d, const MoveSpec& m) {
  switch (m.kind) {
    case MoveKind::blow_up: return blow_up(d, m.sign, m.star, m.vertex);
    case MoveKind::blow_down: return blow_down(d, m.vertex);
    case MoveKind::slam_dunk: return slam_dunk(d, m.vertex);
    case MoveKind::inverse_slam_dunk: return inverse_slam_dunk(d, m.vertex, m.split, m.other);
    case MoveKind::handle_slide: return handle_slide(d, m.vertex, m.other, m.sign);
    case MoveKind::reorient: return reorient(d, m.vertex);
  }
  throw IllegalMove("unknown move kind");
}

FramedLinkDiagram replay(const FramedLinkDiagram& d, std::span<const MoveSpec> script) {
  FramedLinkDiagram cur = d;
  for (const MoveSpec& m : script) cur = apply(cur, m);
  return cur;
}

std::vector<MoveSpec> family_script(Integer h, Integer k) {
  if (h < 1 || k < 1) throw DomainError("the family is defined for h, k >= 1");
  const std::string ke(contact::kKe), ka(contact::kKa);
  std::vector<MoveSpec> s;
  s.push_back({MoveKind::blow_up, "B1", {}, 1, std::nullopt, {{ke, 1}, {ka, 1}}});
  s.push_back({MoveKind::blow_up, "B2", {}, 1, std::nullopt, {{ke, 1}, {ka, 1}}});
  // K_e: -2 + 1/(k+1) + 2 = 0 - 1/(-(k+1));  K_a: -3 - 1/h + 2 = -1 - 1/h.
  s.push_back({MoveKind::inverse_slam_dunk, ke, "L1", 0, Integer{0}, {}});
  s.push_back({MoveKind::inverse_slam_dunk, ka, "L2", 0, Integer{-1}, {}});
  s.push_back({MoveKind::handle_slide, ka, ke, -1, std::nullopt, {}});
  s.push_back({MoveKind::blow_down, "B1", {}, 0, std::nullopt, {}});
  s.push_back({MoveKind::blow_down, "B2", {}, 0, std::nullopt, {}});
  // The slide left lk(K_a, L1) = -1; flipping K_e and L1 makes every edge +1.
  s.push_back({MoveKind::reorient, ke, {}, 0, std::nullopt, {}});
  s.push_back({MoveKind::reorient, "L1", {}, 0, std::nullopt, {}});
  // Turn the h-framed leaf L2 into a string of -2's.
  std::string prev = ka;
  for (Integer j = 1; j < h; ++j) {
    std::string id = "C" + std::to_string(j);
    s.push_back({MoveKind::blow_up, id, {}, -1, std::nullopt, {{prev, 1}, {"L2", 1}}});
    prev = std::move(id);
  }
  s.push_back({MoveKind::blow_down, "L2", {}, 0, std::nullopt, {}});
  return s;
}

FramedLinkDiagram reduce_family_diagram(Integer h, Integer k) {
  const FramedLinkDiagram start = contact::smooth_diagram(contact::presentation_for(h, k));
  const auto script = family_script(h, k);
  const FramedLinkDiagram end = replay(start, script);

  auto order = linear_chain(end);
  if (!order.empty() && end.vertex(order.front()).id == contact::kKe) std::reverse(order.begin(), order.end());
  FramedLinkDiagram chain = end.permuted(order);

  std::vector<Rational> expected(static_cast<std::size_t>(h), Rational(-2));
  expected.push_back(Rational(-(k + 1)));
  expected.push_back(Rational(-2));
  if (chain.size() != expected.size())
    throw InvariantViolation("family reduction produced " + std::to_string(chain.size()) + " vertices, expected " +
                             std::to_string(expected.size()));
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (chain.vertex(i).framing != expected[i])
      throw InvariantViolation("family reduction: vertex " + chain.vertex(i).id + " framed " +
                               chain.vertex(i).framing.str() + ", expected " + expected[i].str());
    if (i + 1 < chain.size() && chain.linking(i, i + 1) != 1)
      throw InvariantViolation("family reduction: chain edge " + std::to_string(i) + " is not +1");
  }
  return chain;
}

}  // namespace otbook::kirby
