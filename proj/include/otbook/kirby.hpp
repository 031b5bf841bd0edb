#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "otbook/framed_link.hpp"

// Kirby calculus on framed-link diagrams, done algebraically on the linking
// data. Every move returns a new diagram whose log gains one MoveRecord; the
// move throws InvariantViolation if |H_1| changes, or if the signature of an
// integral diagram changes by anything other than the expected amount.
namespace otbook::kirby {

// Removes a ±1-framed unknot v. For i, j != v:
//   framing_i -= ε lk(i,v)^2,  lk(i,j) -= ε lk(i,v) lk(j,v).
FramedLinkDiagram blow_down(const FramedLinkDiagram& d, std::string_view v);

// Adds an ε-framed unknot linking vertex i star[i] times and applies the
// inverse of the blow_down update, so blow_down(blow_up(d, ...)) == d.
FramedLinkDiagram blow_up(const FramedLinkDiagram& d, int sign, const std::map<std::string, Integer>& star,
                          std::string id = {});

// Splits framing r = n - 1/x: v gets framing n and a new leaf framed x,
// linked once with v. Without `split`, n = floor(r) (the negative continued
// fraction split); an integral r then needs an explicit split != r.
FramedLinkDiagram inverse_slam_dunk(const FramedLinkDiagram& d, std::string_view v,
                                    std::optional<Integer> split = std::nullopt, std::string leaf_id = {});

// Absorbs a rational leaf x (one neighbour, linking ±1, integral framing n)
// into its neighbour, whose framing becomes n - 1/x.
FramedLinkDiagram slam_dunk(const FramedLinkDiagram& d, std::string_view leaf);

// Slides i over j with the given sign (a basis change e_i -> e_i + sign e_j
// of the linking lattice).
FramedLinkDiagram handle_slide(const FramedLinkDiagram& d, std::string_view i, std::string_view j, int sign);

// Reverses the orientation of v: flips the sign of every linking number at v.
FramedLinkDiagram reorient(const FramedLinkDiagram& d, std::string_view v);

FramedLinkDiagram apply(const FramedLinkDiagram& d, const MoveSpec& move);
FramedLinkDiagram replay(const FramedLinkDiagram& d, std::span<const MoveSpec> script);

/// Move script taking the smooth diagram of the family presentation to a
/// linear chain: two +1 blow-ups, two inverse slam dunks, a slide of K_a over
/// K_e, two +1 blow-downs, reorientation of the K_e side, h - 1 (-1)-blow-ups
/// and a final +1 blow-down.
std::vector<MoveSpec> family_script(Integer h, Integer k);

// Replays family_script on smooth_diagram(presentation_for(h, k)) and returns
// the chain [-2 (h times), -(k+1), -2], stored in chain order, with all edges +1.
FramedLinkDiagram reduce_family_diagram(Integer h, Integer k);

}  // namespace otbook::kirby
