#include "otbook/contact_presentation.hpp"

#include <cstdlib>

namespace otbook::contact {

void validate(const LegendrianUnknot& k) {
  if (k.tb > -1) throw DomainError("Legendrian unknot '" + k.id + "' needs tb <= -1");
  if (std::abs(k.rot) > std::abs(k.tb) - 1)
    throw DomainError("Legendrian unknot '" + k.id + "' needs |rot| <= |tb| - 1");
  if (mod(k.rot, 2) != mod(k.tb + 1, 2))
    throw DomainError("Legendrian unknot '" + k.id + "' needs rot ≡ tb + 1 mod 2");
  if (k.coeff.is_zero()) throw DomainError("contact surgery coefficient must be nonzero");
}

LegendrianUnknot negatively_stabilized_unknot(std::string id, int count, Rational coeff) {
  if (count < 0) throw DomainError("stabilization count must be >= 0");
  LegendrianUnknot k{std::move(id), -1 - count, -count, coeff};
  validate(k);
  return k;
}

std::size_t ContactSurgeryDiagram::add_component(LegendrianUnknot k) {
  validate(k);
  for (const auto& c : components_)
    if (c.id == k.id) throw DomainError("duplicate component id '" + k.id + "'");
  components_.push_back(std::move(k));
  return components_.size() - 1;
}

std::size_t ContactSurgeryDiagram::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < components_.size(); ++i)
    if (components_[i].id == id) return i;
  throw LookupError("unknown component '" + std::string(id) + "'");
}

void ContactSurgeryDiagram::set_linking(std::string_view a, std::string_view b, Integer value) {
  std::size_t i = index_of(a), j = index_of(b);
  if (i == j) throw DomainError("linking form is off-diagonal only");
  if (i > j) std::swap(i, j);
  if (value == 0)
    linking_.erase({i, j});
  else
    linking_[{i, j}] = value;
}

Integer ContactSurgeryDiagram::linking(std::size_t i, std::size_t j) const {
  if (i >= size() || j >= size()) throw LookupError("component index out of range");
  if (i == j) return 0;
  if (i > j) std::swap(i, j);
  auto it = linking_.find({i, j});
  return it == linking_.end() ? 0 : it->second;
}

Integer ContactSurgeryDiagram::linking(std::string_view a, std::string_view b) const {
  return linking(index_of(a), index_of(b));
}

ContactSurgeryDiagram presentation_for(Integer h, Integer k) {
  if (h < 1 || k < 1) throw DomainError("the family is defined for h, k >= 1");
  ContactSurgeryDiagram d;
  d.add_component(negatively_stabilized_unknot(std::string(kKe), 1, Rational(1, k + 1)));
  d.add_component(negatively_stabilized_unknot(std::string(kKa), 2, Rational(-1, h)));
  d.set_linking(kKe, kKa, -2);
  return d;
}

ContactSurgeryDiagram expand_to_unit_coefficients(const ContactSurgeryDiagram& d) {
  // copies[i] lists the ids replacing component i.
  std::vector<std::vector<std::string>> copies(d.size());
  ContactSurgeryDiagram out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const LegendrianUnknot& c = d.components()[i];
    if (c.coeff.num() != 1 && c.coeff.num() != -1)
      throw UnsupportedCoefficient("coefficient " + c.coeff.str() + " on '" + c.id + "' is not of the form 1/m");
    const Integer m = c.coeff.num() * c.coeff.den();
    const Integer count = std::abs(m);
    for (Integer t = 1; t <= count; ++t) {
      std::string id = count == 1 ? c.id : c.id + "." + std::to_string(t);
      out.add_component({id, c.tb, c.rot, Rational(m > 0 ? 1 : -1)});
      copies[i].push_back(std::move(id));
    }
    for (std::size_t s = 0; s < copies[i].size(); ++s)
      for (std::size_t t = s + 1; t < copies[i].size(); ++t) out.set_linking(copies[i][s], copies[i][t], c.tb);
  }
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      const Integer lk = d.linking(i, j);
      if (lk == 0) continue;
      for (const auto& x : copies[i])
        for (const auto& y : copies[j]) out.set_linking(x, y, lk);
    }
  return out;
}

FramedLinkDiagram smooth_diagram(const ContactSurgeryDiagram& d) {
  FramedLinkDiagram out;
  for (const auto& c : d.components()) out.add_vertex(c.id, Rational(c.tb) + c.coeff, true);
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j)
      if (Integer lk = d.linking(i, j); lk != 0) out.set_linking(i, j, lk);
  return out;
}

}  // namespace otbook::contact
