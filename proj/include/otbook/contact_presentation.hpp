#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "otbook/framed_link.hpp"
#include "otbook/rational.hpp"

namespace otbook::contact {

// Legendrian unknot with its classical invariants and a contact surgery
// coefficient measured against the contact framing.
struct LegendrianUnknot {
  std::string id;
  Integer tb = -1;
  Integer rot = 0;
  Rational coeff{1};

  friend bool operator==(const LegendrianUnknot&, const LegendrianUnknot&) = default;
};

// Throws DomainError unless tb <= -1, |rot| <= |tb| - 1, rot ≡ tb + 1 (mod 2)
// and coeff != 0.
void validate(const LegendrianUnknot& k);

// The tb = -1 unknot after `count` negative stabilizations: each one lowers
// tb and rot by one.
LegendrianUnknot negatively_stabilized_unknot(std::string id, int count, Rational coeff);

class ContactSurgeryDiagram {
 public:
  std::size_t add_component(LegendrianUnknot k);
  void set_linking(std::string_view a, std::string_view b, Integer value);
  Integer linking(std::string_view a, std::string_view b) const;
  Integer linking(std::size_t i, std::size_t j) const;

  const std::vector<LegendrianUnknot>& components() const { return components_; }
  std::size_t size() const { return components_.size(); }
  std::size_t index_of(std::string_view id) const;

  friend bool operator==(const ContactSurgeryDiagram&, const ContactSurgeryDiagram&) = default;

 private:
  std::vector<LegendrianUnknot> components_;
  std::map<std::pair<std::size_t, std::size_t>, Integer> linking_;
};

// Component ids used by the family presentation.
inline constexpr std::string_view kKe = "Ke";
inline constexpr std::string_view kKa = "Ka";

/// Contact surgery presentation of the family's contact structure: K_e is
/// the once-stabilized unknot (tb -2, rot -1) with coefficient 1/(k+1), K_a the
/// twice-stabilized one (tb -3, rot -2) with coefficient -1/h. K_a is a
/// push-off stabilization of K_e, so they link at tb(K_e) = -2.
ContactSurgeryDiagram presentation_for(Integer h, Integer k);

/// Replaces every 1/m component by |m| Legendrian push-offs with coefficient
/// sign(m). Push-offs of one component link each other at its tb; linking
/// with other components is inherited.
ContactSurgeryDiagram expand_to_unit_coefficients(const ContactSurgeryDiagram& d);

// Smooth surgery diagram: framing tb + coeff, edges from the linking form.
FramedLinkDiagram smooth_diagram(const ContactSurgeryDiagram& d);

}  // namespace otbook::contact
