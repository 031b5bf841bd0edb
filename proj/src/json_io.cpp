#include "otbook/json_io.hpp"

namespace otbook::io {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed ") + what + ": " + e.what());
  }
}

Json rational(const Rational& r) { return r.str(); }

Rational rational_from(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<Integer>());
  return Rational::parse(j.get<std::string>());
}

Json rationals(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& r : v) a.push_back(rational(r));
  return a;
}

}  // namespace

Json to_json(const mcg::TwistWord& w) {
  Json a = Json::array();
  for (const auto& l : w.letters()) a.push_back(Json::array({std::string(mcg::name(l.curve)), l.exponent}));
  return a;
}

mcg::TwistWord word_from_json(const Json& j) {
  return guarded("twist word", [&] {
    if (!j.is_array()) throw DomainError("a twist word is an array of [curve, exponent] pairs");
    std::vector<mcg::Letter> letters;
    for (const auto& e : j) {
      if (!e.is_array() || e.size() != 2) throw DomainError("twist word letters are [curve, exponent] pairs");
      letters.push_back({mcg::curve_from_name(e.at(0).get<std::string>()), e.at(1).get<Integer>()});
    }
    for (const auto& l : letters)
      if (l.exponent == 0) throw DomainError("twist word exponents must be nonzero");
    return mcg::TwistWord(std::move(letters));
  });
}

Json to_json(const contact::ContactSurgeryDiagram& d) {
  Json comps = Json::array();
  for (const auto& c : d.components())
    comps.push_back({{"id", c.id}, {"tb", c.tb}, {"rot", c.rot}, {"coeff", rational(c.coeff)}});
  Json link = Json::array();
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j)
      if (Integer lk = d.linking(i, j); lk != 0)
        link.push_back(Json::array({d.components()[i].id, d.components()[j].id, lk}));
  return {{"components", comps}, {"linking", link}};
}

contact::ContactSurgeryDiagram contact_from_json(const Json& j) {
  return guarded("contact diagram", [&] {
    contact::ContactSurgeryDiagram d;
    for (const auto& c : j.at("components"))
      d.add_component({c.at("id").get<std::string>(), c.at("tb").get<Integer>(), c.at("rot").get<Integer>(),
                       rational_from(c.at("coeff"))});
    for (const auto& e : j.value("linking", Json::array()))
      d.set_linking(e.at(0).get<std::string>(), e.at(1).get<std::string>(), e.at(2).get<Integer>());
    return d;
  });
}

Json to_json(const H1Order& h) {
  if (h.is_infinite()) return "INFINITE";
  return h.value();
}

Json to_json(const FramedLinkDiagram& d, bool with_log) {
  Json verts = Json::array();
  for (const auto& v : d.vertices())
    verts.push_back({{"id", v.id}, {"framing", rational(v.framing)}, {"is_unknot", v.is_unknot}});
  Json link = Json::array();
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j)
      if (Integer lk = d.linking(i, j); lk != 0)
        link.push_back(Json::array({d.vertex(i).id, d.vertex(j).id, lk}));
  Json out = {{"vertices", verts}, {"linking", link}};
  if (with_log) {
    Json log = Json::array();
    for (const auto& r : d.move_log()) log.push_back(to_json(r));
    out["move_log"] = log;
  }
  return out;
}

FramedLinkDiagram diagram_from_json(const Json& j) {
  return guarded("framed link diagram", [&] {
    FramedLinkDiagram d;
    for (const auto& v : j.at("vertices"))
      d.add_vertex(v.at("id").get<std::string>(), rational_from(v.at("framing")), v.value("is_unknot", true));
    for (const auto& e : j.value("linking", Json::array()))
      d.set_linking(e.at(0).get<std::string>(), e.at(1).get<std::string>(), e.at(2).get<Integer>());
    return d;
  });
}

Json to_json(const MoveSpec& m) {
  Json args = Json::object();
  switch (m.kind) {
    case MoveKind::blow_up:
      args["sign"] = m.sign;
      args["star"] = Json(m.star);
      if (!m.vertex.empty()) args["id"] = m.vertex;
      break;
    case MoveKind::blow_down:
    case MoveKind::reorient:
      args["vertex"] = m.vertex;
      break;
    case MoveKind::slam_dunk:
      args["leaf"] = m.vertex;
      break;
    case MoveKind::inverse_slam_dunk:
      args["vertex"] = m.vertex;
      if (m.split) args["split"] = *m.split;
      if (!m.other.empty()) args["leaf"] = m.other;
      break;
    case MoveKind::handle_slide:
      args["vertex"] = m.vertex;
      args["over"] = m.other;
      args["sign"] = m.sign;
      break;
  }
  return {{"move", std::string(name(m.kind))}, {"args", args}};
}

MoveSpec move_from_json(const Json& j) {
  return guarded("move", [&] {
    MoveSpec m;
    m.kind = move_kind_from_name(j.at("move").get<std::string>());
    const Json args = j.value("args", Json::object());
    switch (m.kind) {
      case MoveKind::blow_up:
        m.sign = args.at("sign").get<int>();
        m.star = args.value("star", Json::object()).get<std::map<std::string, Integer>>();
        m.vertex = args.value("id", std::string());
        break;
      case MoveKind::blow_down:
      case MoveKind::reorient:
        m.vertex = args.at("vertex").get<std::string>();
        break;
      case MoveKind::slam_dunk:
        m.vertex = args.at("leaf").get<std::string>();
        break;
      case MoveKind::inverse_slam_dunk:
        m.vertex = args.at("vertex").get<std::string>();
        if (args.contains("split")) m.split = args.at("split").get<Integer>();
        m.other = args.value("leaf", std::string());
        break;
      case MoveKind::handle_slide:
        m.vertex = args.at("vertex").get<std::string>();
        m.other = args.at("over").get<std::string>();
        m.sign = args.at("sign").get<int>();
        break;
    }
    return m;
  });
}

Json to_json(const MoveRecord& r) {
  Json j = to_json(r.move);
  j["h1_before"] = to_json(r.before);
  j["h1_after"] = to_json(r.after);
  if (r.signature_before) j["signature_before"] = *r.signature_before;
  if (r.signature_after) j["signature_after"] = *r.signature_after;
  return j;
}

Json script_to_json(const std::vector<MoveSpec>& script) {
  Json a = Json::array();
  for (const auto& m : script) a.push_back(to_json(m));
  return a;
}

std::vector<MoveSpec> script_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("a move script is a JSON array of {move, args}");
  std::vector<MoveSpec> out;
  for (const auto& m : j) out.push_back(move_from_json(m));
  return out;
}

Json to_json(const lens::LensSpace& l) { return {{"p", l.p}, {"q", l.q}, {"name", l.str()}}; }

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const census::PM1Presentation& p) {
  return {{"Q", to_json(p.linking)}, {"rho", p.rot}, {"q_plus", p.q_plus}};
}

Json to_json(const census::D3Data& d) {
  return {{"d3", rational(d.d3)},
          {"c_squared", rational(d.c_squared)},
          {"solution", rationals(d.solution)},
          {"signature", d.signature},
          {"euler_characteristic", d.euler_characteristic},
          {"q_plus", d.q_plus},
          {"det", d.determinant}};
}

Json to_json(const census::TightDescriptor& t) {
  return {{"chain", t.chain}, {"rot", t.rot}, {"d3", rational(t.d3)}};
}

Json to_json(const census::OvertwistedReport& r) {
  return {{"h", r.h},
          {"k", r.k},
          {"lens", to_json(r.lens)},
          {"presentation", to_json(r.presentation)},
          {"d3", to_json(r.data)},
          {"census_size", r.census_size},
          {"census_d3", rationals(r.census_d3)},
          {"verdict", std::string(census::name(r.verdict))},
          {"justification", r.justification}};
}

Json to_json(const veering::CertNode& n) {
  Json j = {{"rule", std::string(veering::name(n.rule))},
            {"boundary", std::string(mcg::name(n.boundary))},
            {"word", to_json(n.word)},
            {"citation", n.citation}};
  if (n.arc) j["arc"] = std::string(mcg::name(*n.arc));
  if (!n.children.empty()) {
    Json c = Json::array();
    for (const auto& ch : n.children) c.push_back(to_json(ch));
    j["children"] = c;
  }
  return j;
}

veering::CertNode cert_node_from_json(const Json& j) {
  return guarded("certificate node", [&] {
    veering::CertNode n;
    n.rule = veering::rule_from_name(j.at("rule").get<std::string>());
    n.boundary = mcg::boundary_from_name(j.at("boundary").get<std::string>());
    n.word = word_from_json(j.at("word"));
    n.citation = j.value("citation", std::string());
    if (j.contains("arc")) n.arc = mcg::arc_from_name(j.at("arc").get<std::string>());
    for (const auto& c : j.value("children", Json::array())) n.children.push_back(cert_node_from_json(c));
    return n;
  });
}

Json to_json(const veering::Certificate& c) {
  Json goals = Json::array();
  for (const auto& g : c.goals) goals.push_back(to_json(g));
  return {{"word", to_json(c.word)}, {"goals", goals}, {"table_version", mcg::kTableVersion}};
}

veering::Certificate certificate_from_json(const Json& j) {
  return guarded("certificate", [&] {
    if (j.value("table_version", mcg::kTableVersion) != mcg::kTableVersion)
      throw DomainError("certificate was written against a different curve/arc table version");
    veering::Certificate c;
    c.word = word_from_json(j.at("word"));
    for (const auto& g : j.at("goals")) c.goals.push_back(cert_node_from_json(g));
    return c;
  });
}

Json to_json(const veering::CheckResult& r) {
  return {{"valid", r.valid}, {"reason", r.reason}, {"nodes_checked", r.nodes_checked}};
}

Json to_json(const veering::DestabilizationReport& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps)
    steps.push_back({{"id", s.id},
                     {"kind", std::string(veering::name(s.kind))},
                     {"statement", s.statement},
                     {"citation", s.citation},
                     {"verified", s.verified},
                     {"depends_on", s.depends_on}});
  return {{"h", r.h},
          {"k", r.k},
          {"steps", steps},
          {"axioms", r.axiom_count()},
          {"unverified", r.unverified_count()},
          {"conclusion", r.conclusion}};
}

}  // namespace otbook::io
